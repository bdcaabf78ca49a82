#pragma once

#include <stdexcept>
#include <string>

namespace mrce {

/// Malformed input: bad indices, unparsable files, trivial intervals.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex set violates the feasibility conditions of a rooted expansion.
class FeasibilityError : public std::runtime_error {
 public:
  enum class Reason { kEmpty, kRootMissing, kDisconnected };

  FeasibilityError(Reason reason, const std::string& what)
      : std::runtime_error(what), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// The exact solvers refuse instances above their size guard.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Algorithm and instance do not fit together (non-split graph handed to the
/// split solver, realization that does not realize the graph, ...).
class IncompatibleInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mrce
