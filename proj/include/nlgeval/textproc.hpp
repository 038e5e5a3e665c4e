#ifndef NLGEVAL_TEXTPROC_HPP
#define NLGEVAL_TEXTPROC_HPP

// Deterministic text segmentation and counting primitives. Everything here
// is a pure function of its inputs; no locale, no trained models.

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace nlgeval::text {

enum class TokenKind { Word, Number, Punct };

struct Token {
  std::string surface;
  std::string lower;  // simple lowercase of surface
  TokenKind kind = TokenKind::Punct;
  // Codepoint span [begin, end) into the string the token was cut from.
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Sentence {
  std::string raw;
  std::vector<Token> tokens;  // spans refer to the enclosing TextUnit's raw
};

struct TextUnit {
  std::string raw;  // normalized text
  std::vector<Sentence> sentences;

  std::vector<Token> all_tokens() const;
  std::size_t word_count() const;
};

// Abbreviations that suppress sentence breaks after a ".". Entries are
// lowercase without the trailing dot ("dr", "e.g").
class AbbrevSet {
 public:
  AbbrevSet() = default;
  explicit AbbrevSet(std::set<std::string> entries) : entries_(std::move(entries)) {}

  static const AbbrevSet& standard();
  // One entry per line; '#' comments and blank lines ignored.
  static AbbrevSet load(const std::string& path);

  bool contains(std::string_view lower_word) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::set<std::string> entries_;
};

// NFC + whitespace-run collapse + trim. Idempotent; empty in, empty out.
std::string normalize(std::string_view text);

// Simple per-codepoint lowercase of a UTF-8 string.
std::string lower_copy(std::string_view text);

// Rule-based tokenizer over normalized text. Letter runs (with internal
// apostrophes/hyphens) become Word tokens, digit runs (with internal '.'
// and ',') become Number tokens, any other non-space codepoint is a
// single Punct token.
std::vector<Token> tokenize(std::string_view normalized);

// Sentence boundaries at [.!?] followed by space + uppercase or end of
// text; a dot preceded by a known abbreviation never splits.
std::vector<Sentence> split_sentences(std::string_view normalized,
                                      const AbbrevSet& abbrevs = AbbrevSet::standard());

// Heuristic syllable count: maximal vowel groups (aeiouy), minus one for a
// terminal silent "e" (kept in syllabic "-Cle" endings), floored at 1.
int count_syllables(std::string_view word);

// normalize + split_sentences + tokenize in one pass.
TextUnit analyze(std::string_view any_text,
                 const AbbrevSet& abbrevs = AbbrevSet::standard());

}  // namespace nlgeval::text

#endif
