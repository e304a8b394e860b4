#include "pp3/ideal.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pp3/factor.hpp"

namespace pp3 {

QuadElem PrimeIdeal::second_gen() const {
  if (kind == SplitKind::Inert) return QuadElem(ctx, BigRat(p));
  return QuadElem(ctx, BigRat(-root), BigRat(1));  // w - root
}

PrimeIdeal PrimeIdeal::conjugate() const {
  if (kind != SplitKind::Split) return *this;
  auto both = primes_above(p, ctx);
  return both[conj_index == 0 ? 1 : 0];
}

std::string PrimeIdeal::label() const {
  std::ostringstream os;
  os << "(" << p;
  if (kind == SplitKind::Split) os << ",s" << conj_index;
  if (kind == SplitKind::Ramified) os << ",ram";
  os << ")";
  return os.str();
}

namespace {

// roots of the minimal polynomial of w mod p, increasing
std::vector<long> omega_roots_mod(long p, const FieldCtx& ctx) {
  std::vector<long> roots;
  long c0 = ctx.omega_c0() % p;
  for (long r = 0; r < p; ++r) {
    long value;
    if (ctx.omega == OmegaKind::Sqrt)
      value = (r * r % p + c0 % p) % p;
    else
      value = ((r * r % p - r % p + c0) % p + p) % p;
    if (value == 0) roots.push_back(r);
  }
  return roots;
}

}  // namespace

SplitKind splitting_kind(long p, const FieldCtx& ctx) {
  if (p < 2 || !is_prime(BigInt(p))) throw std::invalid_argument("splitting_kind: p must be prime");
  int k = mpz_kronecker_si(BigInt(ctx.disc).get_mpz_t(), p);
  if (k == 0) return SplitKind::Ramified;
  return k > 0 ? SplitKind::Split : SplitKind::Inert;
}

std::vector<PrimeIdeal> primes_above(long p, const FieldCtx& ctx) {
  SplitKind kind = splitting_kind(p, ctx);
  std::vector<PrimeIdeal> out;
  if (kind == SplitKind::Inert) {
    out.push_back(PrimeIdeal{ctx, p, kind, -1, 0, 1, 2});
    return out;
  }
  std::vector<long> roots = omega_roots_mod(p, ctx);
  if (kind == SplitKind::Split) {
    if (roots.size() != 2) throw std::logic_error("split prime without two roots");
    out.push_back(PrimeIdeal{ctx, p, kind, roots[0], 0, 1, 1});
    out.push_back(PrimeIdeal{ctx, p, kind, roots[1], 1, 1, 1});
  } else {
    if (roots.size() != 1) throw std::logic_error("ramified prime without a double root");
    out.push_back(PrimeIdeal{ctx, p, kind, roots[0], 0, 2, 1});
  }
  return out;
}

namespace {

// valuation of an integral element with integer coordinates (u, v), not both zero
long val_integral(const BigInt& u, const BigInt& v, const PrimeIdeal& P) {
  BigInt p(P.p);
  BigInt uu = u, vv = v;
  long k;  // common rational p-power
  if (uu == 0) {
    k = remove_factor(vv, p);
  } else if (vv == 0) {
    k = remove_factor(uu, p);
  } else {
    long ku = int_valuation(uu, p);
    long kv = int_valuation(vv, p);
    k = std::min(ku, kv);
    BigInt pk = int_pow(p, static_cast<unsigned long>(k));
    uu /= pk;
    vv /= pk;
  }
  // residual part has at least one coordinate prime to p
  auto norm_of = [&](const BigInt& a, const BigInt& b) -> BigInt {
    if (P.ctx.omega == OmegaKind::Sqrt) return a * a + P.ctx.d * b * b;
    return a * a + a * b + P.ctx.omega_c0() * b * b;
  };
  switch (P.kind) {
    case SplitKind::Inert:
      return k;
    case SplitKind::Ramified: {
      BigInt n = norm_of(uu, vv);
      long t = (n % p == 0) ? 1 : 0;
      return 2 * k + t;
    }
    case SplitKind::Split: {
      BigInt image = uu + vv * P.root;  // w -> root in O_K/P
      if (mpz_fdiv_ui(image.get_mpz_t(), static_cast<unsigned long>(P.p)) != 0) return k;
      BigInt n = norm_of(uu, vv);
      return k + int_valuation(n, p);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace

long val(const QuadElem& e, const PrimeIdeal& P) {
  if (!(e.ctx() == P.ctx)) throw std::domain_error("mismatched field contexts");
  if (e.is_zero()) throw std::domain_error("infinite valuation: element is zero");
  BigInt dx = e.x().get_den(), dy = e.y().get_den();
  BigInt m;
  mpz_lcm(m.get_mpz_t(), dx.get_mpz_t(), dy.get_mpz_t());
  BigInt u = e.x().get_num() * (m / dx);
  BigInt v = e.y().get_num() * (m / dy);
  long vm = (m == 1) ? 0 : int_valuation(m, BigInt(P.p));
  return val_integral(u, v, P) - P.e * vm;
}

IdealFactorization factor_principal(const QuadElem& e) {
  if (e.is_zero()) throw std::domain_error("cannot factor the zero ideal");
  BigRat n = e.norm();
  std::map<BigInt, bool> rational_primes;
  if (n.get_num() != 1 && n.get_num() != -1)
    for (auto& [p, exp] : factor_integer(n.get_num())) rational_primes[p] = true;
  if (n.get_den() != 1)
    for (auto& [p, exp] : factor_integer(n.get_den())) rational_primes[p] = true;
  IdealFactorization out;
  for (auto& [p, unused] : rational_primes) {
    if (!p.fits_slong_p()) throw std::domain_error("prime too large for ideal arithmetic");
    for (const PrimeIdeal& P : primes_above(p.get_si(), e.ctx())) {
      long v = val(e, P);
      if (v != 0) out.factors.emplace_back(P, v);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.p, a.first.conj_index) < std::pair(b.first.p, b.first.conj_index);
  });
  return out;
}

namespace {

bool share_prime(const QuadElem& a, const QuadElem& b) {
  BigInt g = int_gcd(BigInt(a.norm().get_num()), BigInt(b.norm().get_num()));
  if (g == 1) return false;
  for (auto& [p, exp] : factor_integer(g)) {
    for (const PrimeIdeal& P : primes_above(p.get_si(), a.ctx()))
      if (val(a, P) > 0 && val(b, P) > 0) return true;
  }
  return false;
}

}  // namespace

bool pairwise_coprime(const QuadElem& a, const QuadElem& b, const QuadElem& c) {
  for (const QuadElem* e : {&a, &b, &c}) {
    if (e->is_zero()) throw std::domain_error("pairwise_coprime: zero input");
    if (!e->is_integral()) throw std::domain_error("pairwise_coprime: non-integral input");
  }
  return !share_prime(a, b) && !share_prime(a, c) && !share_prime(b, c);
}

// ---------------------------------------------------------------------------
// Ideal arithmetic in Hermite normal form, used by the class-number oracle.
// An ideal is Z*a + Z*(b + c*w) with a, c > 0, c | a, c | b, 0 <= b < a,
// and norm a*c.
// ---------------------------------------------------------------------------

namespace {

struct Hnf {
  BigInt a, b, c;
  FieldCtx ctx;
  bool operator==(const Hnf& o) const { return a == o.a && b == o.b && c == o.c; }
  bool operator<(const Hnf& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return c < o.c;
  }
  BigInt norm() const { return a * c; }
};

using Gen = std::pair<BigInt, BigInt>;  // u + v*w

Gen mul_gen(const FieldCtx& ctx, const Gen& g, const Gen& h) {
  const auto& [u1, v1] = g;
  const auto& [u2, v2] = h;
  BigInt ww = v1 * v2;
  if (ctx.omega == OmegaKind::Sqrt) return {u1 * u2 - ctx.d * ww, u1 * v2 + u2 * v1};
  return {u1 * u2 - ctx.omega_c0() * ww, u1 * v2 + u2 * v1 + ww};
}

Gen conj_gen(const FieldCtx& ctx, const Gen& g) {
  if (ctx.omega == OmegaKind::Sqrt) return {g.first, -g.second};
  return {g.first + g.second, -g.second};
}

Hnf hnf_from_gens(const FieldCtx& ctx, const std::vector<Gen>& gens) {
  BigInt pu(0), pv(0), a(0);
  for (const auto& [u, v] : gens) {
    if (v == 0) {
      a = int_gcd(a, abs(u));
      continue;
    }
    if (pv == 0) {
      pu = u;
      pv = v;
      continue;
    }
    BigInt g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), pv.get_mpz_t(), v.get_mpz_t());
    BigInt elim = (v / g) * pu - (pv / g) * u;  // w-part cancels
    a = int_gcd(a, abs(elim));
    pu = s * pu + t * u;
    pv = g;
  }
  if (pv == 0 || a == 0) throw std::logic_error("generators do not span a full ideal lattice");
  if (pv < 0) {
    pv = -pv;
    pu = -pu;
  }
  BigInt b;
  mpz_fdiv_r(b.get_mpz_t(), pu.get_mpz_t(), a.get_mpz_t());
  Hnf I{a, b, pv, ctx};
  if (I.a % I.c != 0 || I.b % I.c != 0) throw std::logic_error("lattice is not an O_K-module");
  return I;
}

Hnf unit_ideal(const FieldCtx& ctx) { return Hnf{1, 0, 1, ctx}; }

Hnf ideal_of_prime(const PrimeIdeal& P) {
  if (P.kind == SplitKind::Inert) return Hnf{BigInt(P.p), 0, BigInt(P.p), P.ctx};
  std::vector<Gen> gens = {{BigInt(P.p), 0}, {0, BigInt(P.p)}, {BigInt(-P.root), 1}};
  gens.push_back(mul_gen(P.ctx, gens[2], {0, 1}));
  return hnf_from_gens(P.ctx, gens);
}

Hnf mul_ideal(const Hnf& I, const Hnf& J) {
  std::vector<Gen> gi = {{I.a, 0}, {I.b, I.c}};
  std::vector<Gen> gj = {{J.a, 0}, {J.b, J.c}};
  std::vector<Gen> prod;
  for (const auto& g : gi)
    for (const auto& h : gj) prod.push_back(mul_gen(I.ctx, g, h));
  return hnf_from_gens(I.ctx, prod);
}

Hnf conj_ideal(const Hnf& I) {
  std::vector<Gen> gens = {conj_gen(I.ctx, {I.a, 0}), conj_gen(I.ctx, {I.b, I.c})};
  // conjugation of an ideal is an ideal; respan with w-multiples for safety
  gens.push_back(mul_gen(I.ctx, gens[0], {0, 1}));
  gens.push_back(mul_gen(I.ctx, gens[1], {0, 1}));
  return hnf_from_gens(I.ctx, gens);
}

bool hnf_contains(const Hnf& I, const BigInt& x, const BigInt& y) {
  if (y % I.c != 0) return false;
  return (x - I.b * (y / I.c)) % I.a == 0;
}

// elements of norm n, via the positive definite norm form
std::vector<Gen> elements_of_norm(const FieldCtx& ctx, const BigInt& n) {
  std::vector<Gen> out;
  if (n <= 0) return out;
  if (ctx.omega == OmegaKind::Sqrt) {
    BigInt ymax = isqrt(n / ctx.d);
    for (BigInt y = 0; y <= ymax; ++y) {
      BigInt rem = n - ctx.d * y * y;
      BigInt x = isqrt(rem);
      if (x * x != rem) continue;
      out.push_back({x, y});
      if (x != 0) out.push_back({-x, y});
      if (y != 0) {
        out.push_back({x, -y});
        if (x != 0) out.push_back({-x, -y});
      }
    }
  } else {
    // (2x+y)^2 + d*y^2 = 4n
    BigInt four_n = 4 * n;
    BigInt ymax = isqrt(four_n / ctx.d);
    for (BigInt y = -ymax; y <= ymax; ++y) {
      BigInt rem = four_n - ctx.d * y * y;
      BigInt s = isqrt(rem);
      if (s * s != rem) continue;
      for (int sign : {1, -1}) {
        BigInt ss = sign * s;
        if ((ss - y) % 2 != 0) continue;
        out.push_back({(ss - y) / 2, y});
        if (s == 0) break;
      }
    }
  }
  return out;
}

std::optional<Gen> principal_element(const Hnf& I) {
  for (const Gen& g : elements_of_norm(I.ctx, I.norm()))
    if (hnf_contains(I, g.first, g.second)) return g;
  return std::nullopt;
}

BigInt minkowski_bound(const FieldCtx& ctx) {
  // largest m with m^2 * pi^2 <= 4|disc|, using the rational lower bound
  // pi^2 >= 9869604401/10^9 (safe direction: never undershoots the bound)
  const BigInt pi2_num = BigInt("9869604401");
  const BigInt pi2_den = BigInt("1000000000");
  BigInt rhs = 4 * BigInt(-ctx.disc) * pi2_den;
  BigInt m = isqrt(rhs / pi2_num) + 2;
  while (m * m * pi2_num > rhs) --m;
  if (m < 1) m = 1;
  return m;
}

}  // namespace

long class_number(const FieldCtx& ctx) {
  BigInt bound = minkowski_bound(ctx);
  std::vector<Hnf> prime_ideals;
  for (long p : primes_up_to(bound.get_si())) {
    for (const PrimeIdeal& P : primes_above(p, ctx))
      if (P.norm() <= bound) prime_ideals.push_back(ideal_of_prime(P));
  }
  // all products of the prime ideals with norm within the bound
  std::vector<Hnf> ideals = {unit_ideal(ctx)};
  for (const Hnf& P : prime_ideals) {
    std::vector<Hnf> extended = ideals;
    for (const Hnf& I : ideals) {
      Hnf acc = I;
      while (true) {
        if (acc.norm() * P.norm() > bound) break;
        acc = mul_ideal(acc, P);
        extended.push_back(acc);
      }
    }
    std::sort(extended.begin(), extended.end());
    extended.erase(std::unique(extended.begin(), extended.end()), extended.end());
    ideals = std::move(extended);
  }
  std::vector<Hnf> reps;
  for (const Hnf& I : ideals) {
    bool placed = false;
    for (const Hnf& R : reps) {
      if (principal_element(mul_ideal(I, conj_ideal(R))).has_value()) {
        placed = true;
        break;
      }
    }
    if (!placed) reps.push_back(I);
  }
  return static_cast<long>(reps.size());
}

std::optional<QuadElem> principal_generator(const PrimeIdeal& P) {
  if (P.kind == SplitKind::Inert) return QuadElem(P.ctx, BigRat(P.p));
  Hnf I = ideal_of_prime(P);
  auto g = principal_element(I);
  if (!g) return std::nullopt;
  return QuadElem(P.ctx, BigRat(g->first), BigRat(g->second));
}

std::vector<PrimeIdeal> sk_set(const FieldCtx& ctx) { return primes_above(3, ctx); }

bool ideal_set_contains(const std::vector<PrimeIdeal>& set, const PrimeIdeal& P) {
  return std::any_of(set.begin(), set.end(), [&](const PrimeIdeal& Q) { return Q == P; });
}

std::vector<PrimeIdeal> tk_set(const QuadElem& A, const QuadElem& B, const QuadElem& C) {
  for (const QuadElem* e : {&A, &B, &C}) {
    if (e->is_zero()) throw std::domain_error("tk_set: zero coefficient");
    if (!e->is_integral()) throw std::domain_error("tk_set: non-integral coefficient");
  }
  std::vector<PrimeIdeal> out = sk_set(A.ctx());
  for (const QuadElem* e : {&A, &B, &C}) {
    if (e->is_unit()) continue;
    for (auto& [P, v] : factor_principal(*e).factors)
      if (v > 0 && !ideal_set_contains(out, P)) out.push_back(P);
  }
  std::sort(out.begin(), out.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    return std::pair(a.p, a.conj_index) < std::pair(b.p, b.conj_index);
  });
  return out;
}

}  // namespace pp3
