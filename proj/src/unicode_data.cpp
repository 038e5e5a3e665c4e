#include "nlgeval/unicode.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace nlgeval::uni {

namespace {

struct DecompEntry {
  char32_t cp;
  uint32_t offset;
  uint32_t len;
};
struct CccEntry {
  char32_t cp;
  uint8_t ccc;
};
struct CompEntry {
  char32_t first;
  char32_t second;
  char32_t composite;
};
struct CpRange {
  char32_t lo;
  char32_t hi;
};
struct LowerEntry {
  char32_t cp;
  char32_t lower;
};

#include "unicode_data.inc"

template <typename T, size_t N>
const T* lookup_cp(const T (&table)[N], char32_t cp) {
  auto it = std::lower_bound(table, table + N, cp,
                             [](const T& e, char32_t c) { return e.cp < c; });
  if (it != table + N && it->cp == cp) return it;
  return nullptr;
}

template <size_t N>
bool in_ranges(const CpRange (&table)[N], char32_t cp) {
  auto it = std::upper_bound(table, table + N, cp,
                             [](char32_t c, const CpRange& r) { return c < r.lo; });
  return it != table && (it - 1)->hi >= cp;
}

uint8_t combining_class(char32_t cp) {
  const CccEntry* e = lookup_cp(kCccTable, cp);
  return e ? e->ccc : 0;
}

// Hangul syllable composition is algorithmic (Unicode ch. 3.12).
constexpr char32_t kSBase = 0xAC00, kLBase = 0x1100, kVBase = 0x1161, kTBase = 0x11A7;
constexpr int kLCount = 19, kVCount = 21, kTCount = 28;
constexpr int kNCount = kVCount * kTCount;
constexpr int kSCount = kLCount * kNCount;

bool decompose_hangul(char32_t cp, std::u32string& out) {
  int idx = static_cast<int>(cp) - static_cast<int>(kSBase);
  if (idx < 0 || idx >= kSCount) return false;
  out.push_back(kLBase + idx / kNCount);
  out.push_back(kVBase + (idx % kNCount) / kTCount);
  if (idx % kTCount != 0) out.push_back(kTBase + idx % kTCount);
  return true;
}

char32_t compose_pair(char32_t a, char32_t b) {
  if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount)
    return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
  int sidx = static_cast<int>(a) - static_cast<int>(kSBase);
  if (sidx >= 0 && sidx < kSCount && sidx % kTCount == 0 && b > kTBase &&
      b < kTBase + kTCount)
    return a + (b - kTBase);
  auto it = std::lower_bound(
      std::begin(kCompTable), std::end(kCompTable), std::pair<char32_t, char32_t>(a, b),
      [](const CompEntry& e, const std::pair<char32_t, char32_t>& k) {
        return e.first != k.first ? e.first < k.first : e.second < k.second;
      });
  if (it != std::end(kCompTable) && it->first == a && it->second == b)
    return it->composite;
  return 0;
}

void decompose_cp(char32_t cp, std::u32string& out) {
  if (decompose_hangul(cp, out)) return;
  const DecompEntry* e = lookup_cp(kDecompIndex, cp);
  if (!e) {
    out.push_back(cp);
    return;
  }
  for (uint32_t i = 0; i < e->len; ++i) decompose_cp(kDecompData[e->offset + i], out);
}

}  // namespace

std::u32string decode_utf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  const auto bad = [&](size_t n) {
    out.push_back(0xFFFD);
    i += n;
  };
  while (i < s.size()) {
    unsigned char c0 = s[i];
    if (c0 < 0x80) {
      out.push_back(c0);
      ++i;
    } else if ((c0 >> 5) == 0x6) {
      if (i + 1 >= s.size() || (static_cast<unsigned char>(s[i + 1]) & 0xC0) != 0x80) {
        bad(1);
        continue;
      }
      char32_t cp = ((c0 & 0x1F) << 6) | (s[i + 1] & 0x3F);
      if (cp < 0x80) {
        bad(1);
        continue;
      }
      out.push_back(cp);
      i += 2;
    } else if ((c0 >> 4) == 0xE) {
      if (i + 2 >= s.size() || (static_cast<unsigned char>(s[i + 1]) & 0xC0) != 0x80 ||
          (static_cast<unsigned char>(s[i + 2]) & 0xC0) != 0x80) {
        bad(1);
        continue;
      }
      char32_t cp =
          ((c0 & 0x0F) << 12) | ((s[i + 1] & 0x3F) << 6) | (s[i + 2] & 0x3F);
      if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) {
        bad(1);
        continue;
      }
      out.push_back(cp);
      i += 3;
    } else if ((c0 >> 3) == 0x1E) {
      if (i + 3 >= s.size() || (static_cast<unsigned char>(s[i + 1]) & 0xC0) != 0x80 ||
          (static_cast<unsigned char>(s[i + 2]) & 0xC0) != 0x80 ||
          (static_cast<unsigned char>(s[i + 3]) & 0xC0) != 0x80) {
        bad(1);
        continue;
      }
      char32_t cp = ((c0 & 0x07) << 18) | ((s[i + 1] & 0x3F) << 12) |
                    ((s[i + 2] & 0x3F) << 6) | (s[i + 3] & 0x3F);
      if (cp < 0x10000 || cp > 0x10FFFF) {
        bad(1);
        continue;
      }
      out.push_back(cp);
      i += 4;
    } else {
      bad(1);
    }
  }
  return out;
}

std::string encode_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t cp : s) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

std::u32string nfc(std::u32string_view s) {
  // 1. canonical decomposition
  std::u32string d;
  d.reserve(s.size());
  for (char32_t cp : s) decompose_cp(cp, d);

  // 2. canonical ordering: stable bubble of combining marks
  for (size_t i = 1; i < d.size(); ++i) {
    uint8_t cc = combining_class(d[i]);
    if (cc == 0) continue;
    size_t j = i;
    while (j > 0 && combining_class(d[j - 1]) > cc) {
      std::swap(d[j - 1], d[j]);
      --j;
    }
  }

  // 3. canonical composition
  std::u32string out;
  out.reserve(d.size());
  int last_starter = -1;
  uint8_t prev_cc = 0;
  for (char32_t cp : d) {
    uint8_t cc = combining_class(cp);
    if (last_starter >= 0 && (prev_cc < cc || prev_cc == 0)) {
      if (char32_t comp = compose_pair(out[last_starter], cp)) {
        out[last_starter] = comp;
        // prev_cc stays: the composed mark is gone from the sequence
        continue;
      }
    }
    if (cc == 0) {
      last_starter = static_cast<int>(out.size());
      out.push_back(cp);
      prev_cc = 0;
    } else {
      out.push_back(cp);
      prev_cc = cc;
    }
  }
  return out;
}

bool is_letter(char32_t cp) { return in_ranges(kLetterRanges, cp); }
bool is_digit(char32_t cp) { return in_ranges(kDigitRanges, cp); }

bool is_space(char32_t cp) {
  for (char32_t c : kSpaceList)
    if (c == cp) return true;
  return false;
}

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
  const LowerEntry* e = lookup_cp(kLowerTable, cp);
  return e ? e->lower : cp;
}

}  // namespace nlgeval::uni
