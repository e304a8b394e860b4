#include "pp3/rational.hpp"

namespace pp3 {

std::string rat_to_string(const BigRat& r) { return r.get_str(); }

BigRat rat_from_string(const std::string& s) {
  std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  if (t.empty()) throw std::invalid_argument("empty rational literal");
  for (char ch : t) {
    if (!(std::isdigit(static_cast<unsigned char>(ch)) || ch == '-' || ch == '/'))
      throw std::invalid_argument("bad character in rational literal: \"" + s + "\"");
  }
  BigRat r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("unparsable rational literal: \"" + s + "\"");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + s + "\"");
  r.canonicalize();
  return r;
}

bool rat_is_integer(const BigRat& r) { return r.get_den() == 1; }

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative value");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<BigInt> exact_cbrt(const BigInt& n) {
  BigInt r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), 3);
  if (exact == 0) return std::nullopt;
  return r;
}

long int_valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("valuation of zero");
  BigInt m = n;
  return remove_factor(m, p);
}

long remove_factor(BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("remove_factor on zero");
  unsigned long k = mpz_remove(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return static_cast<long>(k);
}

BigRat rat_pow(const BigRat& base, long e) {
  if (e == 0) return BigRat(1);
  if (base == 0 && e < 0) throw std::invalid_argument("inverse of zero");
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  BigRat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), ae);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), ae);
  if (e < 0) r = 1 / r;
  return r;
}

}  // namespace pp3
