#pragma once

#include <vector>

#include "pp3/rational.hpp"

namespace pp3 {

/// Number field Q[x]/(minpoly) with a monic minimal polynomial; elements are
/// coordinate vectors over the power basis. Degree 1 is Q itself.
class HeckeField {
 public:
  using Elem = std::vector<BigRat>;

  static HeckeField rationals();
  static HeckeField quadratic(long disc);                 // x^2 - disc
  static HeckeField from_minpoly(std::vector<BigRat> mp); // monic, degree >= 1

  int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
  const std::vector<BigRat>& minpoly() const { return minpoly_; }

  Elem zero() const { return Elem(static_cast<size_t>(degree()), BigRat(0)); }
  Elem from_rational(const BigRat& r) const;
  Elem from_int(const BigInt& n) const { return from_rational(BigRat(n)); }
  Elem element(std::vector<BigRat> coords) const;  // validates length

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;

  /// Field norm to Q: direct formulas through degree 2, resultant of the
  /// minimal polynomial with the representative polynomial above that.
  BigRat norm(const Elem& a) const;

  /// Resultant route regardless of degree (cross-check for the direct one).
  BigRat norm_via_resultant(const Elem& a) const;

 private:
  explicit HeckeField(std::vector<BigRat> mp) : minpoly_(std::move(mp)) {}
  std::vector<BigRat> minpoly_;  // c0..c_{n-1}, 1
};

/// Resultant of two rational polynomials (coefficients low to high).
BigRat poly_resultant(std::vector<BigRat> a, std::vector<BigRat> b);

}  // namespace pp3
