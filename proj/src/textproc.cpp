#include "nlgeval/textproc.hpp"

#include <fstream>

#include "nlgeval/error.hpp"
#include "nlgeval/unicode.hpp"

namespace nlgeval::text {

namespace uni = nlgeval::uni;

std::vector<Token> TextUnit::all_tokens() const {
  std::vector<Token> out;
  for (const Sentence& s : sentences)
    out.insert(out.end(), s.tokens.begin(), s.tokens.end());
  return out;
}

std::size_t TextUnit::word_count() const {
  std::size_t n = 0;
  for (const Sentence& s : sentences)
    for (const Token& t : s.tokens)
      if (t.kind == TokenKind::Word) ++n;
  return n;
}

const AbbrevSet& AbbrevSet::standard() {
  static const AbbrevSet s{
      std::set<std::string>{"mr", "mrs", "dr", "st", "etc", "e.g", "i.e", "vs"}};
  return s;
}

AbbrevSet AbbrevSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Io, "cannot open abbreviation file: " + path);
  std::set<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    entries.insert(lower_copy(line));
  }
  return AbbrevSet(std::move(entries));
}

bool AbbrevSet::contains(std::string_view lower_word) const {
  return entries_.count(std::string(lower_word)) > 0;
}

std::string normalize(std::string_view text) {
  std::u32string u = uni::nfc(uni::decode_utf8(text));
  std::u32string out;
  out.reserve(u.size());
  bool pending_space = false;
  for (char32_t cp : u) {
    if (uni::is_space(cp)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) {
      out.push_back(U' ');
      pending_space = false;
    }
    out.push_back(cp);
  }
  return uni::encode_utf8(out);
}

std::string lower_copy(std::string_view text) {
  std::u32string u = uni::decode_utf8(text);
  for (char32_t& cp : u) cp = uni::to_lower(cp);
  return uni::encode_utf8(u);
}

namespace {

bool is_word_joiner(char32_t cp) {
  return cp == U'\'' || cp == U'’' || cp == U'-';
}

bool is_number_joiner(char32_t cp) { return cp == U'.' || cp == U','; }

Token make_token(const std::u32string& cps, std::size_t begin, std::size_t end,
                 TokenKind kind) {
  Token t;
  t.kind = kind;
  t.begin = begin;
  t.end = end;
  std::u32string surf = cps.substr(begin, end - begin);
  t.surface = uni::encode_utf8(surf);
  for (char32_t& cp : surf) cp = uni::to_lower(cp);
  t.lower = uni::encode_utf8(surf);
  return t;
}

// Tokenize cps[from, to), emitting spans relative to the full codepoint string.
void tokenize_range(const std::u32string& cps, std::size_t from, std::size_t to,
                    std::vector<Token>& out) {
  std::size_t i = from;
  while (i < to) {
    char32_t cp = cps[i];
    if (uni::is_space(cp)) {
      ++i;
      continue;
    }
    if (uni::is_letter(cp)) {
      std::size_t j = i + 1;
      while (j < to) {
        if (uni::is_letter(cps[j])) {
          ++j;
        } else if (is_word_joiner(cps[j]) && j + 1 < to && uni::is_letter(cps[j + 1])) {
          j += 2;  // internal apostrophe/hyphen
        } else {
          break;
        }
      }
      out.push_back(make_token(cps, i, j, TokenKind::Word));
      i = j;
    } else if (uni::is_digit(cp)) {
      std::size_t j = i + 1;
      while (j < to) {
        if (uni::is_digit(cps[j])) {
          ++j;
        } else if (is_number_joiner(cps[j]) && j + 1 < to && uni::is_digit(cps[j + 1])) {
          j += 2;  // internal decimal point / thousands separator
        } else {
          break;
        }
      }
      out.push_back(make_token(cps, i, j, TokenKind::Number));
      i = j;
    } else {
      out.push_back(make_token(cps, i, i + 1, TokenKind::Punct));
      ++i;
    }
  }
}

bool is_upper_letter(char32_t cp) {
  return uni::is_letter(cp) && uni::to_lower(cp) != cp;
}

// The word directly before cps[dot] (letters plus internal dots, as in
// "e.g"), lowercased, without the trailing dot itself.
std::string word_before_dot(const std::u32string& cps, std::size_t dot) {
  std::size_t end = dot;
  std::size_t begin = end;
  while (begin > 0) {
    char32_t cp = cps[begin - 1];
    if (uni::is_letter(cp) ||
        (cp == U'.' && begin >= 2 && uni::is_letter(cps[begin - 2])))
      --begin;
    else
      break;
  }
  std::u32string w = cps.substr(begin, end - begin);
  for (char32_t& cp : w) cp = uni::to_lower(cp);
  return uni::encode_utf8(w);
}

struct SentenceRange {
  std::size_t begin;
  std::size_t end;
};

std::vector<SentenceRange> sentence_ranges(const std::u32string& cps,
                                           const AbbrevSet& abbrevs) {
  std::vector<SentenceRange> ranges;
  std::size_t start = 0;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    char32_t cp = cps[i];
    if (cp != U'.' && cp != U'!' && cp != U'?') continue;
    bool at_end = (i + 1 == cps.size());
    bool before_new = i + 2 < cps.size() && cps[i + 1] == U' ' &&
                      is_upper_letter(cps[i + 2]);
    if (!at_end && !before_new) continue;
    if (cp == U'.' && abbrevs.contains(word_before_dot(cps, i))) continue;
    ranges.push_back({start, i + 1});
    start = i + 2;  // skip the single space after the terminator
  }
  if (start < cps.size()) ranges.push_back({start, cps.size()});
  return ranges;
}

}  // namespace

std::vector<Token> tokenize(std::string_view normalized) {
  std::u32string cps = uni::decode_utf8(normalized);
  std::vector<Token> out;
  tokenize_range(cps, 0, cps.size(), out);
  return out;
}

std::vector<Sentence> split_sentences(std::string_view normalized,
                                      const AbbrevSet& abbrevs) {
  std::u32string cps = uni::decode_utf8(normalized);
  std::vector<Sentence> out;
  for (const SentenceRange& r : sentence_ranges(cps, abbrevs)) {
    Sentence s;
    s.raw = uni::encode_utf8(cps.substr(r.begin, r.end - r.begin));
    tokenize_range(cps, r.begin, r.end, s.tokens);
    out.push_back(std::move(s));
  }
  return out;
}

int count_syllables(std::string_view word) {
  std::u32string w = uni::decode_utf8(word);
  for (char32_t& cp : w) cp = uni::to_lower(cp);
  auto is_vowel = [](char32_t c) {
    switch (c) {
      case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
      case U'à': case U'á': case U'â': case U'ä':
      case U'è': case U'é': case U'ê': case U'ë':
      case U'ì': case U'í': case U'î': case U'ï':
      case U'ò': case U'ó': case U'ô': case U'ö':
      case U'ù': case U'ú': case U'û': case U'ü':
        return true;
      default:
        return false;
    }
  };
  int groups = 0;
  bool prev_vowel = false;
  for (char32_t cp : w) {
    bool v = is_vowel(cp);
    if (v && !prev_vowel) ++groups;
    prev_vowel = v;
  }
  std::size_t n = w.size();
  if (n >= 2 && w[n - 1] == U'e' && !is_vowel(w[n - 2])) {
    // keep the final group for syllabic "-Cle" ("table", "little")
    bool syllabic_le = w[n - 2] == U'l' && n >= 3 && !is_vowel(w[n - 3]);
    if (!syllabic_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

TextUnit analyze(std::string_view any_text, const AbbrevSet& abbrevs) {
  TextUnit u;
  u.raw = normalize(any_text);
  u.sentences = split_sentences(u.raw, abbrevs);
  return u;
}

}  // namespace nlgeval::text
