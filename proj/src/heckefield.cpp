#include "pp3/heckefield.hpp"

#include <algorithm>

namespace pp3 {

namespace {

void trim(std::vector<BigRat>& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const std::vector<BigRat>& p) { return static_cast<int>(p.size()) - 1; }

// remainder of a by b (b nonzero), coefficients low to high
std::vector<BigRat> poly_mod(std::vector<BigRat> a, const std::vector<BigRat>& b) {
  trim(a);
  while (deg(a) >= deg(b) && !a.empty()) {
    BigRat q = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (int i = 0; i <= deg(b); ++i) a[static_cast<size_t>(i + shift)] -= q * b[static_cast<size_t>(i)];
    trim(a);
  }
  return a;
}

}  // namespace

BigRat poly_resultant(std::vector<BigRat> a, std::vector<BigRat> b) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return BigRat(0);
  if (deg(b) == 0) {
    BigRat r(1);
    for (int i = 0; i < deg(a); ++i) r *= b[0];
    return r;
  }
  std::vector<BigRat> r = poly_mod(a, b);
  if (r.empty()) return BigRat(0);
  BigRat sign = (deg(a) * deg(b)) % 2 == 0 ? BigRat(1) : BigRat(-1);
  BigRat lead(1);
  for (int i = 0; i < deg(a) - deg(r); ++i) lead *= b.back();
  return sign * lead * poly_resultant(b, r);
}

HeckeField HeckeField::rationals() { return HeckeField({BigRat(0), BigRat(1)}); }

HeckeField HeckeField::quadratic(long disc) {
  if (disc == 0 || disc == 1) throw std::invalid_argument("quadratic field needs disc != 0, 1");
  if (disc > 1) {
    BigInt root = isqrt(BigInt(disc));
    if (root * root == disc) throw std::invalid_argument("quadratic field disc must not be a square");
  }
  return HeckeField({BigRat(-disc), BigRat(0), BigRat(1)});
}

HeckeField HeckeField::from_minpoly(std::vector<BigRat> mp) {
  trim(mp);
  if (mp.size() < 2) throw std::invalid_argument("minimal polynomial must have degree >= 1");
  if (mp.back() != 1) throw std::invalid_argument("minimal polynomial must be monic");
  int n = deg(mp);
  if (n >= 2 && n <= 3) {
    // rational-root screen: a monic integer cubic or quadratic with a root is reducible
    if (mp[0] == 0) throw std::invalid_argument("minimal polynomial is divisible by x");
    bool integral = std::all_of(mp.begin(), mp.end(), [](const BigRat& c) { return rat_is_integer(c); });
    if (integral) {
      BigInt c0 = abs(BigInt(mp[0].get_num()));
      for (BigInt t = 1; t * t <= c0; ++t) {
        if (c0 % t != 0) continue;
        for (const BigInt& cand : {BigInt(t), BigInt(-t), BigInt(c0 / t), BigInt(-(c0 / t))}) {
          BigRat v(0), x(cand);
          BigRat powx(1);
          for (const BigRat& c : mp) {
            v += c * powx;
            powx *= x;
          }
          if (v == 0) throw std::invalid_argument("minimal polynomial has a rational root");
        }
      }
    }
  }
  return HeckeField(std::move(mp));
}

HeckeField::Elem HeckeField::from_rational(const BigRat& r) const {
  Elem e = zero();
  e[0] = r;
  return e;
}

HeckeField::Elem HeckeField::element(std::vector<BigRat> coords) const {
  if (static_cast<int>(coords.size()) != degree())
    throw std::invalid_argument("coordinate vector length must equal the field degree");
  return coords;
}

HeckeField::Elem HeckeField::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

HeckeField::Elem HeckeField::sub(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

HeckeField::Elem HeckeField::mul(const Elem& a, const Elem& b) const {
  size_t n = static_cast<size_t>(degree());
  std::vector<BigRat> prod(2 * n - 1, BigRat(0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) prod[i + j] += a[i] * b[j];
  }
  // reduce x^k for k >= n using x^n = -(c0 + ... + c_{n-1} x^{n-1})
  for (size_t k = prod.size(); k-- > n;) {
    BigRat top = prod[k];
    if (top == 0) continue;
    prod[k] = 0;
    for (size_t i = 0; i < n; ++i) prod[k - n + i] -= top * minpoly_[i];
  }
  prod.resize(n);
  return prod;
}

bool HeckeField::is_zero(const Elem& a) const {
  return std::all_of(a.begin(), a.end(), [](const BigRat& c) { return c == 0; });
}

BigRat HeckeField::norm(const Elem& a) const {
  int n = degree();
  if (n == 1) return a[0];
  if (n == 2) {
    // x^2 + c1 x + c0: N(u + v x) = u^2 - c1 u v + c0 v^2
    const BigRat& c0 = minpoly_[0];
    const BigRat& c1 = minpoly_[1];
    return a[0] * a[0] - c1 * a[0] * a[1] + c0 * a[1] * a[1];
  }
  return norm_via_resultant(a);
}

BigRat HeckeField::norm_via_resultant(const Elem& a) const {
  std::vector<BigRat> g(a.begin(), a.end());
  return poly_resultant(minpoly_, g);
}

}  // namespace pp3
