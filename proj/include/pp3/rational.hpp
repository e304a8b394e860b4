#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace pp3 {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Canonical rational text: "p" or "p/q" with q > 0 and gcd(p,q) = 1.
std::string rat_to_string(const BigRat& r);

/// Parses "p" or "p/q" (no decimals, no whitespace). Throws std::invalid_argument.
BigRat rat_from_string(const std::string& s);

bool rat_is_integer(const BigRat& r);

/// num/den in canonical form (the two-argument mpq constructor does not reduce).
inline BigRat make_rat(long num, long den) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

/// floor(sqrt(n)), n >= 0.
BigInt isqrt(const BigInt& n);

/// Exact integer cube root when n is a perfect cube (sign-aware).
std::optional<BigInt> exact_cbrt(const BigInt& n);

/// Multiplicity of p in n; n != 0, p >= 2. Does not modify n.
long int_valuation(const BigInt& n, const BigInt& p);

/// Divides out all factors p from n, returns the multiplicity removed.
long remove_factor(BigInt& n, const BigInt& p);

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigRat rat_pow(const BigRat& base, long e);

}  // namespace pp3
