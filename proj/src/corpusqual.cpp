#include "nlgeval/corpusqual.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "nlgeval/error.hpp"

namespace nlgeval::corpus {

namespace {

std::vector<std::string> word_lowers(const std::vector<text::Token>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens)
    if (t.kind == text::TokenKind::Word) out.push_back(t.lower);
  return out;
}

double msttr_impl(const std::vector<std::string>& words, int segment_size,
                  bool* short_input) {
  if (segment_size < 1)
    throw Error(Errc::InvalidConfig, "msttr: segment_size must be >= 1");
  if (words.empty()) throw Error(Errc::EmptyInput, "msttr: no Word tokens");
  if (short_input) *short_input = false;

  auto segment_ttr = [&](size_t begin, size_t end) {
    std::unordered_set<std::string_view> types;
    for (size_t i = begin; i < end; ++i) types.insert(words[i]);
    return static_cast<double>(types.size()) / static_cast<double>(end - begin);
  };

  const size_t seg = static_cast<size_t>(segment_size);
  if (words.size() < seg) {
    if (short_input) *short_input = true;
    return segment_ttr(0, words.size());
  }
  size_t n_segments = words.size() / seg;  // trailing partial discarded
  double sum = 0.0;
  for (size_t k = 0; k < n_segments; ++k) sum += segment_ttr(k * seg, (k + 1) * seg);
  return sum / static_cast<double>(n_segments);
}

double ls_impl(const std::vector<std::string>& words, const WordSet& basic_list,
               const WordSet& stopwords) {
  long lexical = 0, sophisticated = 0;
  for (const std::string& w : words) {
    if (stopwords.contains(w)) continue;
    ++lexical;
    if (!basic_list.contains(w)) ++sophisticated;
  }
  if (lexical == 0) return 0.0;
  return static_cast<double>(sophisticated) / static_cast<double>(lexical);
}

}  // namespace

double msttr(const std::vector<text::Token>& tokens, int segment_size,
             bool* short_input) {
  return msttr_impl(word_lowers(tokens), segment_size, short_input);
}

double lexical_sophistication(const std::vector<text::Token>& tokens,
                              const WordSet& basic_list, const WordSet& stopwords) {
  return ls_impl(word_lowers(tokens), basic_list, stopwords);
}

namespace {

const std::set<std::string>& rel_pronouns() {
  static const std::set<std::string> s{"which", "who", "whom", "whose"};
  return s;
}
const std::set<std::string>& coordinators() {
  static const std::set<std::string> s{"and", "but", "or"};
  return s;
}
const std::set<std::string>& subordinators() {
  static const std::set<std::string> s{
      "because", "although", "though", "if",    "when",    "while",  "since",
      "unless",  "until",    "after",  "before", "whereas", "whenever"};
  return s;
}
const std::set<std::string>& subject_pronouns() {
  static const std::set<std::string> s{"i",  "you", "he",   "she", "it",
                                       "we", "they", "there", "one"};
  return s;
}
const std::set<std::string>& object_pronouns() {
  static const std::set<std::string> s{"me", "him", "her", "us", "them",
                                       "you", "it"};
  return s;
}
const std::set<std::string>& determiners() {
  static const std::set<std::string> s{
      "the",  "a",   "an",  "this", "that",  "these", "those", "my",
      "your", "his", "her", "its",  "our",   "their", "some",  "any",
      "each", "every", "no", "all", "both"};
  return s;
}
const std::set<std::string>& aux_verbs() {
  static const std::set<std::string> s{
      "is",   "are",  "was",   "were", "am",    "be",     "been", "being",
      "has",  "have", "had",   "do",   "does",  "did",    "will", "would",
      "can",  "could", "shall", "should", "may", "might", "must"};
  return s;
}
const std::set<std::string>& common_verbs() {
  static const std::set<std::string> s{
      "serve",    "serves",    "offer",   "offers",   "provide", "provides",
      "include",  "includes",  "want",    "wants",    "like",    "likes",
      "enjoy",    "enjoys",    "love",    "loves",    "need",    "needs",
      "come",     "comes",     "came",    "eat",      "eats",    "ate",
      "go",       "goes",      "went",    "make",     "makes",   "made",
      "get",      "gets",      "got",     "find",     "finds",   "found",
      "know",     "knows",     "knew",    "think",    "thinks",  "thought",
      "say",      "says",      "said",    "sell",     "sells",   "sold",
      "sit",      "sits",      "stand",   "stands",   "cost",    "costs",
      "charge",   "charges",   "open",    "opens",    "close",   "closes",
      "welcome",  "welcomes",  "allow",   "allows",   "boast",   "boasts",
      "deliver",  "delivers",  "recommend", "recommends", "suggest",
      "suggests", "feature",   "features", "lie",     "lies",    "keep",
      "keeps",    "kept",      "try",     "tries",    "tried",   "left",
      "surprised", "bothered", "rained",  "seem",     "seems",   "seemed"};
  return s;
}
// Verbs that take an -ing complement ("enjoys serving").
const std::set<std::string>& gerund_verbs() {
  static const std::set<std::string> s{
      "enjoy",   "enjoys",   "enjoyed",  "like",     "likes",    "liked",
      "love",    "loves",    "loved",    "recommend", "recommends",
      "suggest", "suggests", "suggested", "consider", "considers",
      "avoid",   "avoids",   "keep",     "keeps",    "kept",     "start",
      "starts",  "started",  "stop",     "stops",    "stopped",  "try",
      "tries",   "tried",    "mind",     "imagine",  "worth"};
  return s;
}
// Base verbs accepted after "to" without further checks.
const std::set<std::string>& base_verbs() {
  static const std::set<std::string> s{
      "eat",   "go",    "visit", "try",   "find",  "get",   "have", "be",
      "enjoy", "dine",  "order", "book",  "stay",  "see",   "take", "make",
      "grab",  "drink", "taste", "spend", "bring", "leave", "sit",  "relax"};
  return s;
}
// Words before "to" that signal a locative/degree reading, not an
// infinitive ("close to", "next to").
const std::set<std::string>& locative_pre_to() {
  static const std::set<std::string> s{"close", "next", "near",
                                       "adjacent", "opposite", "up"};
  return s;
}

bool ends_with(const std::string& w, std::string_view suffix) {
  return w.size() >= suffix.size() &&
         w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool capitalized(const text::Token& t) {
  return !t.surface.empty() && t.surface[0] >= 'A' && t.surface[0] <= 'Z';
}

}  // namespace

const DLevelRuleSet& DLevelRuleSet::standard() {
  static const DLevelRuleSet rules;
  return rules;
}

bool DLevelRuleSet::verbish(const std::string& w) const {
  if (aux_verbs().count(w) || common_verbs().count(w)) return true;
  if (w.size() >= 5 && ends_with(w, "ing")) return true;
  if (w.size() >= 4 && ends_with(w, "ed")) return true;
  return false;
}

bool DLevelRuleSet::base_verb_candidate(const std::string& w) const {
  if (base_verbs().count(w) || common_verbs().count(w)) return true;
  if (determiners().count(w) || subject_pronouns().count(w) ||
      object_pronouns().count(w))
    return false;
  return true;  // open class: accept unless clearly nominal/pronominal
}

int DLevelRuleSet::classify(const text::Sentence& sentence) const {
  std::vector<const text::Token*> toks;
  for (const auto& t : sentence.tokens)
    if (t.kind == text::TokenKind::Word) toks.push_back(&t);
  if (toks.empty()) return 0;

  std::vector<std::string> words;
  words.reserve(toks.size());
  for (const auto* t : toks) words.push_back(t->lower);
  const size_t n = words.size();

  size_t first_verb = n;
  for (size_t i = 0; i < n; ++i)
    if (verbish(words[i])) {
      first_verb = i;
      break;
    }

  // subject + verb within a short window after position i
  auto clause_follows = [&](size_t i) {
    for (size_t j = i + 1; j < std::min(i + 5, n); ++j) {
      if (subject_pronouns().count(words[j])) {
        for (size_t k = j + 1; k < std::min(j + 4, n); ++k)
          if (verbish(words[k])) return true;
      } else if (determiners().count(words[j])) {
        for (size_t k = j + 2; k < std::min(j + 5, n); ++k)
          if (verbish(words[k])) return true;
      } else if (capitalized(*toks[j])) {  // proper-name subject
        for (size_t k = j + 1; k < std::min(j + 5, n); ++k)
          if (verbish(words[k])) return true;
      }
    }
    return false;
  };

  std::vector<Cue> cues;
  auto add_cue = [&](int category, size_t position) {
    for (Cue& c : cues)
      if (c.position == position) {
        c.category = std::max(c.category, category);
        return;
      }
    cues.push_back({category, position});
  };

  for (size_t i = 0; i < n; ++i) {
    const std::string& w = words[i];

    // infinitive complement: "to" + plausible base verb
    if (w == "to" && i + 1 < n) {
      bool locative = i > 0 && locative_pre_to().count(words[i - 1]);
      const std::string& next = words[i + 1];
      if (!locative && !capitalized(*toks[i + 1]) && base_verb_candidate(next)) {
        // non-finite complement with its own subject ("want him to go")
        if (i >= 2 && object_pronouns().count(words[i - 1]) &&
            (verbish(words[i - 2]) || words[i - 2] == "for"))
          add_cue(4, i);
        else
          add_cue(1, i);
      }
    }

    // -ing complement after a complement-taking verb
    if (i > 0 && w.size() >= 5 && ends_with(w, "ing") &&
        gerund_verbs().count(words[i - 1]))
      add_cue(1, i);

    // clause coordination
    if (coordinators().count(w) && clause_follows(i)) add_cue(2, i);

    // relative / complement clauses; position relative to the first verb
    // separates object-modifying (3) from subject-modifying (5)
    bool relative = false;
    if (rel_pronouns().count(w) && i > 0) relative = true;
    if (w == "that" && i > 0 && i + 1 < n) {
      const std::string& next = words[i + 1];
      if (verbish(next) || subject_pronouns().count(next) || determiners().count(next))
        relative = true;  // demonstrative "that" + noun stays excluded
    }
    if (relative) add_cue(i <= first_verb ? 5 : 3, i);

    // clause as subject: "That he left ...", "What I want ..."
    if (i == 0 && (w == "that" || w == "what" || w == "whether") && n > 1 &&
        (subject_pronouns().count(words[1]) || determiners().count(words[1])))
      add_cue(5, i);

    // comparative
    if (w == "than") add_cue(4, i);

    // subordinate adverbial clause
    if (subordinators().count(w) && clause_follows(i)) add_cue(5, i);
  }

  if (cues.empty()) return 0;
  std::set<int> categories;
  for (const Cue& c : cues) categories.insert(c.category);
  if (cues.size() >= 3 && categories.size() >= 2) return 7;
  if (cues.size() >= 2) return 6;
  return cues.front().category;
}

double content_selection_rate(
    const std::vector<std::pair<mr::MeaningRepresentation, text::TextUnit>>& pairs,
    const SlotLexicon& lexicon) {
  if (pairs.empty())
    throw Error(Errc::EmptyInput, "content_selection_rate: no pairs");
  long partial = 0;
  for (const auto& [m, unit] : pairs)
    if (mr::coverage(m, unit, lexicon) < 1.0) ++partial;
  return static_cast<double>(partial) / static_cast<double>(pairs.size());
}

void CorpusAccumulator::add(const std::optional<mr::MeaningRepresentation>& m,
                            const text::TextUnit& unit, const SlotLexicon& lexicon,
                            const DLevelRuleSet& rules) {
  ++n_pairs_;
  for (const auto& s : unit.sentences) {
    ++n_sentences_;
    int level = rules.classify(s);
    ++dlevel_counts_[static_cast<size_t>(level)];
    for (const auto& t : s.tokens)
      if (t.kind == text::TokenKind::Word) word_stream_.push_back(t);
  }
  if (m) {
    ++n_with_mr_;
    if (mr::coverage(*m, unit, lexicon) < 1.0) ++n_partial_;
  }
}

void CorpusAccumulator::merge(const CorpusAccumulator& other) {
  word_stream_.insert(word_stream_.end(), other.word_stream_.begin(),
                      other.word_stream_.end());
  for (size_t i = 0; i < dlevel_counts_.size(); ++i)
    dlevel_counts_[i] += other.dlevel_counts_[i];
  n_pairs_ += other.n_pairs_;
  n_with_mr_ += other.n_with_mr_;
  n_partial_ += other.n_partial_;
  n_sentences_ += other.n_sentences_;
}

CorpusStats CorpusAccumulator::finalize(const WordSet& basic_list,
                                        const WordSet& stopwords,
                                        int msttr_segment_size) const {
  if (n_pairs_ == 0) throw Error(Errc::EmptyInput, "corpus_stats: empty corpus");
  CorpusStats out;
  out.n_pairs = n_pairs_;
  out.n_sentences = n_sentences_;
  out.n_tokens = static_cast<long>(word_stream_.size());

  std::vector<std::string> words = word_lowers(word_stream_);
  out.msttr = msttr_impl(words, msttr_segment_size, &out.msttr_short_input);
  out.ls = ls_impl(words, basic_list, stopwords);
  std::unordered_set<std::string_view> types(words.begin(), words.end());
  out.ttr = words.empty() ? 0.0
                          : static_cast<double>(types.size()) /
                                static_cast<double>(words.size());

  if (n_sentences_ > 0) {
    for (size_t i = 0; i < dlevel_counts_.size(); ++i)
      out.dlevel_hist[i] = static_cast<double>(dlevel_counts_[i]) /
                           static_cast<double>(n_sentences_);
  }
  out.frac_level01 = out.dlevel_hist[0] + out.dlevel_hist[1];
  out.frac_level67 = out.dlevel_hist[6] + out.dlevel_hist[7];
  out.frac_above_level1 = 1.0 - out.frac_level01;

  out.has_content_selection = n_with_mr_ > 0;
  if (out.has_content_selection)
    out.content_selection_rate =
        static_cast<double>(n_partial_) / static_cast<double>(n_with_mr_);
  return out;
}

}  // namespace nlgeval::corpus
