#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace grlie {

/// Malformed input document (bad scalar, unknown index, shape mismatch).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A structural invariant that the theory guarantees failed to verify.
/// This signals an implementation bug, never bad input.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An analysis was requested on an algebra that does not satisfy the
/// hypotheses the result needs. Expected outcome, not a bug.
class HypothesesNotMet : public std::runtime_error {
 public:
  HypothesesNotMet(std::vector<std::string> failed_flags, const std::string& msg)
      : std::runtime_error(msg), failed_(std::move(failed_flags)) {}
  const std::vector<std::string>& failed_flags() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace grlie
