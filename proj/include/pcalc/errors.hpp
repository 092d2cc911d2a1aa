#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pcalc {

// Malformed term text. offset is the byte position where parsing stopped.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// An operation was called outside its documented precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Requested object would exceed a configured size limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The finite search engine was asked for an instance above its vertex limit.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// witness_partition called on a term that contains one of the two W patterns.
class PatternPresent : public ContractViolation {
 public:
  using ContractViolation::ContractViolation;
};

// A constructed certificate failed its own postcondition check. Never caught internally.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two objects that must describe the same term do not.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pcalc
