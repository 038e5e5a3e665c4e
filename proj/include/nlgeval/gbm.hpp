#ifndef NLGEVAL_GBM_HPP
#define NLGEVAL_GBM_HPP

// Grammar-based, reference-less metrics computed from the candidate text
// alone: Flesch Reading Ease, character/syllable ratios and misspellings.

#include "nlgeval/resources.hpp"
#include "nlgeval/textproc.hpp"

namespace nlgeval::gbm {

struct GbmProfile {
  double readability = 0.0;  // Flesch Reading Ease
  bool readability_defined = false;
  double chars_per_utterance = 0.0;  // non-space codepoints
  double chars_per_word = 0.0;
  double syllables_per_sentence = 0.0;
  double syllables_per_word = 0.0;
  long misspellings = 0;
  long word_count = 0;
  long sentence_count = 0;
};

// dictionary == nullptr disables the misspelling check. Exemptions are
// typically the MR slot-value tokens (proper names are not misspellings).
GbmProfile gbm_profile(const text::TextUnit& unit, const WordSet* dictionary,
                       const WordSet* exemptions = nullptr);

}  // namespace nlgeval::gbm

#endif
