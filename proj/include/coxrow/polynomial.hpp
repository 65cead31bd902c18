#pragma once

#include <string>
#include <vector>

#include "coxrow/matrix.hpp"

namespace coxrow {

// Primitive integer polynomial, coefficients lowest degree first, leading
// coefficient positive. An empty coefficient vector is the zero polynomial.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  static IntPolynomial from_integer_coeffs(std::vector<Integer> coeffs);
  static IntPolynomial from_rational_coeffs(const std::vector<Rational>& coeffs);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Integer>& coeffs() const { return c_; }
  bool operator==(const IntPolynomial& o) const { return c_ == o.c_; }

  // Exact division test: does *this divide other over Q?
  bool divides(const IntPolynomial& other) const;

  std::string to_string() const;  // e.g. "x^3 - x^2 - x + 1"

 private:
  std::vector<Integer> c_;
};

// Least-degree annihilating polynomial, computed by Krylov iteration per
// standard basis vector with polynomial lcm accumulation; exact throughout.
IntPolynomial minimal_polynomial(const RationalMatrix& a);

RationalMatrix evaluate(const IntPolynomial& p, const RationalMatrix& a);

}  // namespace coxrow
