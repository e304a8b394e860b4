#include "pp3/factor.hpp"

#include <algorithm>
#include <map>

namespace pp3 {

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<long> primes_up_to(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(static_cast<size_t>(bound) + 1, true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= bound; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return out;
}

namespace {

BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  // n odd composite, not a prime power of interest; returns a nontrivial factor
  gmp_randstate_t st;
  gmp_randinit_mt(st);
  gmp_randseed_ui(st, seed);
  while (true) {
    BigInt y, c, m(128);
    mpz_urandomm(y.get_mpz_t(), st, n.get_mpz_t());
    mpz_urandomm(c.get_mpz_t(), st, n.get_mpz_t());
    if (c == 0) c = 1;
    BigInt g(1), r(1), q(1), x, ys;
    while (g == 1) {
      x = y;
      for (BigInt i = 0; i < r; ++i) y = (y * y + c) % n;
      BigInt k(0);
      while (k < r && g == 1) {
        ys = y;
        BigInt lim = std::min(m, BigInt(r - k));
        for (BigInt i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        g = int_gcd(q, n);
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = int_gcd(abs(x - ys), n);
      }
    }
    if (g != n) {
      gmp_randclear(st);
      return g;
    }
    seed += 1;  // retry with fresh parameters
  }
}

void factor_rec(const BigInt& n, std::map<BigInt, long>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n] += 1;
    return;
  }
  // perfect powers confuse rho less if peeled first
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
      BigInt root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<BigInt, long> sub;
        factor_rec(root, sub);
        for (auto& [p, e] : sub) acc[p] += e * static_cast<long>(k);
        return;
      }
    }
  }
  BigInt d = pollard_brent(n, 0xb5297a4dUL);
  factor_rec(d, acc);
  factor_rec(n / d, acc);
}

}  // namespace

std::vector<std::pair<BigInt, long>> factor_integer(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factor_integer(0)");
  BigInt m = abs(n);
  std::map<BigInt, long> acc;
  static const std::vector<long> small = primes_up_to(20000);
  for (long p : small) {
    if (m == 1) break;
    if (BigInt(p) * p > m) break;
    long e = remove_factor(m, BigInt(p));
    if (e > 0) acc[BigInt(p)] = e;
  }
  if (m > 1) factor_rec(m, acc);
  return {acc.begin(), acc.end()};
}

}  // namespace pp3
