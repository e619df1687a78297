#ifndef SKEWGEOM_ERRORS_HPP
#define SKEWGEOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skewgeom {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed expression text. `offset` is the byte offset of the failure.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// log/sqrt of a non-positive value, division by zero, non-finite result.
class DomainError : public Error {
 public:
  DomainError(const std::string& what, std::string subexpression)
      : Error(what + " in '" + subexpression + "'"), subexpression_(std::move(subexpression)) {}
  const std::string& subexpression() const noexcept { return subexpression_; }

 private:
  std::string subexpression_;
};

class SingularMatrixError : public Error {
 public:
  explicit SingularMatrixError(double det)
      : Error("singular 4x4 matrix (det = " + std::to_string(det) + ")"), det_(det) {}
  double determinant() const noexcept { return det_; }

 private:
  double det_;
};

/// Violation of A > sqrt(2)|B| at a chart point.
class PositivityError : public Error {
 public:
  PositivityError(double a, double sqrt2b)
      : Error("metric not positive definite: A = " + std::to_string(a) +
              ", sqrt(2)*|B| = " + std::to_string(sqrt2b)),
        a_(a),
        sqrt2b_(sqrt2b) {}
  double a() const noexcept { return a_; }
  double sqrt2_b() const noexcept { return sqrt2b_; }

 private:
  double a_, sqrt2b_;
};

/// Rank or index-position mismatch in a tensor operation.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold (non-positive
/// conformal factor, F != 0 where F = 0 is required, parameters out of range).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Too many sample points rejected to gather the requested point count.
class SamplingInfeasible : public Error {
 public:
  using Error::Error;
};

}  // namespace skewgeom

#endif  // SKEWGEOM_ERRORS_HPP
