#ifndef NLGEVAL_UNICODE_HPP
#define NLGEVAL_UNICODE_HPP

// Minimal Unicode support: UTF-8 transcoding, canonical (NFC) normalization,
// and the character classes the tokenizer needs. Tables are generated from
// the Unicode character database (see tools/gen_unicode_tables.py).

#include <string>
#include <string_view>

namespace nlgeval::uni {

// Invalid byte sequences decode to U+FFFD (one replacement per bad byte).
std::u32string decode_utf8(std::string_view s);
std::string encode_utf8(std::u32string_view s);

// Canonical decomposition, canonical reordering, canonical composition.
std::u32string nfc(std::u32string_view s);

bool is_letter(char32_t cp);
bool is_digit(char32_t cp);
bool is_space(char32_t cp);

// Simple one-to-one lowercase mapping; identity where none exists.
char32_t to_lower(char32_t cp);

}  // namespace nlgeval::uni

#endif
