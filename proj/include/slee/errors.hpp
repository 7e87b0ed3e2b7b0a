#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slee {

/// Bad argument to an operation (out-of-range vertex, malformed family parameters, ...).
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation's precondition on its input graph does not hold
/// (e.g. unique_cycle on a graph that is not unicyclic).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Text input could not be parsed. `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), message_(what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The description without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string message_;
  std::size_t offset_;
};

/// Refusal: the request exceeds a documented size limit.
class LimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slee
