#ifndef NLGEVAL_CORPUSQUAL_HPP
#define NLGEVAL_CORPUSQUAL_HPP

// Corpus-level quality statistics: lexical richness (LS, MSTTR, TTR),
// the D-level syntactic complexity histogram and the content-selection
// rate.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nlgeval/mr.hpp"
#include "nlgeval/resources.hpp"
#include "nlgeval/textproc.hpp"

namespace nlgeval::corpus {

struct CorpusStats {
  double ls = 0.0;
  double msttr = 0.0;
  bool msttr_short_input = false;
  double ttr = 0.0;
  std::array<double, 8> dlevel_hist{};  // fractions, levels 0..7
  double frac_level01 = 0.0;
  double frac_level67 = 0.0;
  double frac_above_level1 = 0.0;
  double content_selection_rate = 0.0;
  bool has_content_selection = false;  // any MRs present
  long n_pairs = 0;
  long n_sentences = 0;
  long n_tokens = 0;  // Word tokens
};

// Mean of type/token ratios over successive non-overlapping complete
// segments; the trailing partial segment is discarded. Fewer tokens than
// one segment: whole-sequence TTR with the short-input flag set. Word
// tokens only, lowercased. Throws EmptyInput when no Word token exists.
double msttr(const std::vector<text::Token>& tokens, int segment_size = 50,
             bool* short_input = nullptr);

// Fraction of lexical-word tokens (Word tokens not in stopwords) missing
// from the basic high-frequency list; 0 when there are no lexical words.
double lexical_sophistication(const std::vector<text::Token>& tokens,
                              const WordSet& basic_list, const WordSet& stopwords);

// Transparent cue-based substitute for a full D-level parse. Cue
// categories map to levels 1..5; two cues give level 6, three or more
// cues across at least two categories give level 7.
class DLevelRuleSet {
 public:
  static const DLevelRuleSet& standard();

  std::string version() const { return "cue-rules-v1"; }
  int classify(const text::Sentence& sentence) const;

 private:
  DLevelRuleSet() = default;

  struct Cue {
    int category;  // 1..5, the level a lone cue maps to
    std::size_t position;
  };

  bool verbish(const std::string& w) const;
  bool base_verb_candidate(const std::string& w) const;
};

// Fraction of pairs whose utterance leaves at least one slot unrealized.
double content_selection_rate(
    const std::vector<std::pair<mr::MeaningRepresentation, text::TextUnit>>& pairs,
    const SlotLexicon& lexicon);

// Order-preserving, mergeable corpus aggregate. MSTTR runs over the
// ordered concatenation of Word tokens, so merge order matters and must
// match input order.
class CorpusAccumulator {
 public:
  void add(const std::optional<mr::MeaningRepresentation>& m,
           const text::TextUnit& unit, const SlotLexicon& lexicon,
           const DLevelRuleSet& rules = DLevelRuleSet::standard());
  void merge(const CorpusAccumulator& other);

  CorpusStats finalize(const WordSet& basic_list, const WordSet& stopwords,
                       int msttr_segment_size = 50) const;

 private:
  std::vector<text::Token> word_stream_;
  std::array<long, 8> dlevel_counts_{};
  long n_pairs_ = 0;
  long n_with_mr_ = 0;
  long n_partial_ = 0;
  long n_sentences_ = 0;
};

}  // namespace nlgeval::corpus

#endif
