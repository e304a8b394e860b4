#pragma once

// Test-only model of a totally ramified degree-e extension of Q_3:
// Q[x]/(x^e - 3) with the pi-adic valuation v(pi) = 1, v(3) = e.
// Used as an independent oracle for valuation identities in j-invariant
// expressions: v of a polynomial in pi is min_i (e*v3(c_i) + i), valid
// because the exponents are distinct mod e.

#include <optional>
#include <vector>

#include "pp3/rational.hpp"

namespace pp3::testing {

class Eisen3 {
 public:
  Eisen3(int e, std::vector<BigRat> coords) : e_(e), c_(std::move(coords)) {
    c_.resize(static_cast<size_t>(e_), BigRat(0));
  }
  static Eisen3 from_rational(int e, const BigRat& r) {
    std::vector<BigRat> c(static_cast<size_t>(e), BigRat(0));
    c[0] = r;
    return Eisen3(e, std::move(c));
  }
  static Eisen3 pi_power(int e, long k) {  // pi^k for k >= 0
    Eisen3 x = from_rational(e, 1);
    Eisen3 pi(e, [&] {
      std::vector<BigRat> c(static_cast<size_t>(e), BigRat(0));
      if (e == 1)
        c[0] = 3;
      else
        c[1] = 1;
      return c;
    }());
    for (long i = 0; i < k; ++i) x = x * pi;
    return x;
  }

  Eisen3 operator+(const Eisen3& o) const {
    std::vector<BigRat> c = c_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c_[i];
    return Eisen3(e_, std::move(c));
  }
  Eisen3 operator*(const Eisen3& o) const {
    std::vector<BigRat> prod(static_cast<size_t>(2 * e_ - 1), BigRat(0));
    for (size_t i = 0; i < c_.size(); ++i)
      for (size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
    for (size_t k = prod.size(); k-- > static_cast<size_t>(e_);)
      if (prod[k] != 0) {
        prod[k - static_cast<size_t>(e_)] += 3 * prod[k];  // x^e = 3
        prod[k] = 0;
      }
    prod.resize(static_cast<size_t>(e_));
    return Eisen3(e_, std::move(prod));
  }

  bool is_zero() const {
    for (const BigRat& x : c_)
      if (x != 0) return false;
    return true;
  }

  /// pi-adic valuation; nullopt for zero.
  std::optional<long> valuation() const {
    std::optional<long> best;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      long v3 = int_valuation(BigInt(c_[i].get_num()), BigInt(3)) -
                (c_[i].get_den() == 1 ? 0 : int_valuation(BigInt(c_[i].get_den()), BigInt(3)));
      long v = e_ * v3 + static_cast<long>(i);
      if (!best || v < *best) best = v;
    }
    return best;
  }

 private:
  int e_;
  std::vector<BigRat> c_;
};

}  // namespace pp3::testing
