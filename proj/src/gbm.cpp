#include "nlgeval/gbm.hpp"

#include "nlgeval/unicode.hpp"

namespace nlgeval::gbm {

GbmProfile gbm_profile(const text::TextUnit& unit, const WordSet* dictionary,
                       const WordSet* exemptions) {
  GbmProfile p;
  p.sentence_count = static_cast<long>(unit.sentences.size());

  long word_chars = 0;
  long syllables = 0;
  for (const auto& s : unit.sentences) {
    for (const auto& t : s.tokens) {
      if (t.kind != text::TokenKind::Word) continue;
      ++p.word_count;
      word_chars += static_cast<long>(t.end - t.begin);
      syllables += text::count_syllables(t.surface);
      if (dictionary && !dictionary->contains(t.lower) &&
          !(exemptions && exemptions->contains(t.lower)))
        ++p.misspellings;
    }
  }

  for (char32_t cp : uni::decode_utf8(unit.raw))
    if (!uni::is_space(cp)) p.chars_per_utterance += 1.0;

  if (p.word_count > 0) {
    p.chars_per_word = static_cast<double>(word_chars) / p.word_count;
    p.syllables_per_word = static_cast<double>(syllables) / p.word_count;
    if (p.sentence_count > 0) {
      p.syllables_per_sentence = static_cast<double>(syllables) / p.sentence_count;
      double words_per_sentence =
          static_cast<double>(p.word_count) / p.sentence_count;
      p.readability = 206.835 - 1.015 * words_per_sentence -
                      84.6 * p.syllables_per_word;
      p.readability_defined = true;
    }
  }
  return p;
}

}  // namespace nlgeval::gbm
