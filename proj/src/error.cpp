#include "nlgeval/error.hpp"

namespace nlgeval {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::Io: return "Io";
    case Errc::Malformed: return "Malformed";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::UnbalancedDelimiters: return "UnbalancedDelimiters";
    case Errc::MissingActType: return "MissingActType";
    case Errc::EmptyAttribute: return "EmptyAttribute";
    case Errc::EmptyReferences: return "EmptyReferences";
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::TooFewSamples: return "TooFewSamples";
    case Errc::TooFewSystems: return "TooFewSystems";
    case Errc::MissingResource: return "MissingResource";
    case Errc::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace nlgeval
