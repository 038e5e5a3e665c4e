#ifndef NLGEVAL_MR_HPP
#define NLGEVAL_MR_HPP

// Logic-based dialogue-act meaning representations: parsing, slot
// realization checks and slot coverage of an utterance.

#include <string>
#include <string_view>
#include <vector>

#include "nlgeval/resources.hpp"
#include "nlgeval/textproc.hpp"

namespace nlgeval::mr {

struct Slot {
  std::string attribute;
  std::string value;

  bool operator==(const Slot&) const = default;
};

struct MeaningRepresentation {
  std::string act_type;
  std::vector<Slot> slots;
  // Attributes occurring more than once; kept in the slot list, flagged here.
  std::vector<std::string> duplicate_attributes;

  bool operator==(const MeaningRepresentation& o) const {
    return act_type == o.act_type && slots == o.slots;
  }
};

// Grammar: act '(' pair (',' pair)* ')' with pair = attr '=' value or
// attr '[' value ']'. Attributes and values are trimmed; values may contain
// internal spaces. Throws Error with the byte offset of the problem.
MeaningRepresentation parse_mr(std::string_view text);

// "=" syntax serialization (bracket syntax for values containing ','
// or ')'). parse_mr(to_string(m)) reproduces m.
std::string to_string(const MeaningRepresentation& m);

// True iff any realization of (attribute, value) -- or the value itself --
// occurs as a case-insensitive contiguous token subsequence of the utterance.
bool slot_realized(std::string_view attribute, std::string_view value,
                   const text::TextUnit& utterance, const SlotLexicon& lexicon);

// Realized-slot fraction; 1.0 for a zero-slot MR.
double coverage(const MeaningRepresentation& m, const text::TextUnit& utterance,
                const SlotLexicon& lexicon);

}  // namespace nlgeval::mr

#endif
