#include "nlgeval/mr.hpp"

#include <algorithm>
#include <set>

#include "nlgeval/error.hpp"

namespace nlgeval::mr {

namespace {

std::string_view trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

MeaningRepresentation parse_mr(std::string_view text) {
  size_t open = text.find('(');
  if (open == std::string_view::npos)
    throw Error(Errc::UnbalancedDelimiters, "expected '(' after act type", text.size());
  std::string_view act = trim(text.substr(0, open));
  if (act.empty())
    throw Error(Errc::MissingActType, "missing act type before '('", 0);

  MeaningRepresentation m;
  m.act_type = std::string(act);

  size_t close = text.rfind(')');
  if (close == std::string_view::npos || close < open)
    throw Error(Errc::UnbalancedDelimiters, "missing closing ')'", text.size());
  if (!trim(text.substr(close + 1)).empty())
    throw Error(Errc::UnbalancedDelimiters, "trailing characters after ')'", close + 1);

  size_t pos = open + 1;
  bool expect_pair = false;  // true once a ',' promises another pair
  while (pos < close) {
    // skip leading blanks of the pair
    while (pos < close && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    if (pos >= close) break;

    size_t pair_start = pos;
    size_t eq = std::string_view::npos, br = std::string_view::npos;
    for (size_t i = pos; i < close; ++i) {
      char c = text[i];
      if (c == '=') { eq = i; break; }
      if (c == '[') { br = i; break; }
      if (c == ',') break;
    }

    std::string_view attr;
    std::string_view value;
    size_t next;
    if (br != std::string_view::npos) {
      attr = trim(text.substr(pair_start, br - pair_start));
      size_t end = text.find(']', br + 1);
      if (end == std::string_view::npos || end > close)
        throw Error(Errc::UnbalancedDelimiters, "missing closing ']'", br);
      value = trim(text.substr(br + 1, end - br - 1));
      next = end + 1;
      while (next < close && (text[next] == ' ' || text[next] == '\t')) ++next;
      if (next < close) {
        if (text[next] != ',')
          throw Error(Errc::UnbalancedDelimiters, "expected ',' after ']'", next);
        ++next;
      }
    } else if (eq != std::string_view::npos) {
      attr = trim(text.substr(pair_start, eq - pair_start));
      size_t end = text.find(',', eq + 1);
      if (end == std::string_view::npos || end > close) end = close;
      value = trim(text.substr(eq + 1, end - eq - 1));
      next = end < close ? end + 1 : close;
    } else {
      throw Error(Errc::EmptyAttribute, "expected 'attr = value' or 'attr[value]'",
                  pair_start);
    }

    if (attr.empty())
      throw Error(Errc::EmptyAttribute, "empty attribute name", pair_start);
    m.slots.push_back({std::string(attr), std::string(value)});
    expect_pair = (next > pos && next <= close && text[next - 1] == ',');
    pos = next;
  }
  if (expect_pair)
    throw Error(Errc::EmptyAttribute, "dangling ',' before ')'", close);

  std::set<std::string> seen, dup;
  for (const Slot& s : m.slots)
    if (!seen.insert(s.attribute).second && dup.insert(s.attribute).second)
      m.duplicate_attributes.push_back(s.attribute);
  return m;
}

std::string to_string(const MeaningRepresentation& m) {
  std::string out = m.act_type;
  out += '(';
  for (size_t i = 0; i < m.slots.size(); ++i) {
    if (i) out += ", ";
    const Slot& s = m.slots[i];
    bool needs_brackets =
        s.value.find(',') != std::string::npos || s.value.find(')') != std::string::npos;
    if (needs_brackets) {
      out += s.attribute;
      out += '[';
      out += s.value;
      out += ']';
    } else {
      out += s.attribute;
      out += " = ";
      out += s.value;
    }
  }
  out += ')';
  return out;
}

namespace {

std::vector<std::string> token_lowers(const text::TextUnit& u) {
  std::vector<std::string> out;
  for (const auto& s : u.sentences)
    for (const auto& t : s.tokens) out.push_back(t.lower);
  return out;
}

std::vector<std::string> phrase_lowers(std::string_view phrase) {
  std::vector<std::string> out;
  for (const auto& t : text::tokenize(text::normalize(phrase))) out.push_back(t.lower);
  return out;
}

bool contains_contiguous(const std::vector<std::string>& haystack,
                         const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() > haystack.size()) return false;
  for (size_t i = 0; i + needle.size() <= haystack.size(); ++i) {
    if (std::equal(needle.begin(), needle.end(), haystack.begin() + i)) return true;
  }
  return false;
}

}  // namespace

bool slot_realized(std::string_view attribute, std::string_view value,
                   const text::TextUnit& utterance, const SlotLexicon& lexicon) {
  std::vector<std::string> tokens = token_lowers(utterance);
  for (const std::string& surface : lexicon.realizations(attribute, value)) {
    if (contains_contiguous(tokens, phrase_lowers(surface))) return true;
  }
  return false;
}

double coverage(const MeaningRepresentation& m, const text::TextUnit& utterance,
                const SlotLexicon& lexicon) {
  if (m.slots.empty()) return 1.0;
  std::vector<std::string> tokens = token_lowers(utterance);
  size_t realized = 0;
  for (const Slot& s : m.slots) {
    bool hit = false;
    for (const std::string& surface : lexicon.realizations(s.attribute, s.value)) {
      if (contains_contiguous(tokens, phrase_lowers(surface))) {
        hit = true;
        break;
      }
    }
    if (hit) ++realized;
  }
  return static_cast<double>(realized) / static_cast<double>(m.slots.size());
}

}  // namespace nlgeval::mr
