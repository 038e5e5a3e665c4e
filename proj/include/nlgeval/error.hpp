#ifndef NLGEVAL_ERROR_HPP
#define NLGEVAL_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nlgeval {

enum class Errc {
  Io,
  Malformed,
  DuplicateId,
  UnbalancedDelimiters,
  MissingActType,
  EmptyAttribute,
  EmptyReferences,
  EmptyInput,
  LengthMismatch,
  TooFewSamples,
  TooFewSystems,
  MissingResource,
  InvalidConfig,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message, std::size_t offset = kNoOffset)
      : std::runtime_error(std::move(message)), code_(code), offset_(offset) {}

  Errc code() const { return code_; }

  // Byte offset into the offending input, or kNoOffset.
  std::size_t offset() const { return offset_; }
  bool has_offset() const { return offset_ != kNoOffset; }

  static constexpr std::size_t kNoOffset = static_cast<std::size_t>(-1);

 private:
  Errc code_;
  std::size_t offset_;
};

}  // namespace nlgeval

#endif
