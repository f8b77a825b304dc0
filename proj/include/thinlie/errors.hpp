#pragma once

#include <stdexcept>
#include <string>

namespace thinlie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bracket or operator image would land beyond the computed degree range.
class DegreeOverflow : public Error {
 public:
  DegreeOverflow(int degree, int top)
      : Error("degree " + std::to_string(degree) + " exceeds computed range " +
              std::to_string(top)),
        degree_(degree),
        top_(top) {}

  int degree() const noexcept { return degree_; }
  int top() const noexcept { return top_; }

 private:
  int degree_;
  int top_;
};

/// A diamond pattern that cannot be normalized or is otherwise malformed.
class PatternError : public Error {
 public:
  using Error::Error;
};

/// A construction produced something outside the expected class (a component
/// of dimension > 2, a failed standardization, a non-maximal-class span, ...).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace thinlie
