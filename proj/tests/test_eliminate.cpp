#include <doctest.h>

#include <random>

#include "pp3/eliminate.hpp"
#include "pp3/factor.hpp"

using namespace pp3;

namespace {

// reference: scan every integer in a safely padded window
std::vector<BigInt> trace_set_bruteforce(const BigInt& n) {
  std::vector<BigInt> out;
  BigInt pad = isqrt(4 * n) + 2;
  for (BigInt a = -pad; a <= pad; ++a) {
    if (a * a > 4 * n) continue;
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), BigInt(n + 1 - a).get_mpz_t(), BigInt(3).get_mpz_t());
    if (r == 0) out.push_back(a);
  }
  return out;
}

// reference: the bound as a plain rational product, for rational eigenvalues
BigRat bound_bruteforce(const BigInt& n, const BigRat& ap) {
  BigRat acc = BigRat(n) * (BigRat((n + 1) * (n + 1)) - ap * ap);
  for (const BigInt& a : trace_set_bruteforce(n)) acc *= (BigRat(a) - ap);
  return acc;
}

std::vector<BigInt> ints(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("allowed trace sets") {
  CHECK(trace_set_A(BigInt(2)) == ints({0}));
  CHECK(trace_set_A(BigInt(7)) == ints({-4, -1, 2, 5}));
  CHECK(trace_set_A(BigInt(4)) == ints({-4, -1, 2}));
  CHECK_THROWS_AS(trace_set_A(BigInt(1)), std::invalid_argument);
  for (long n = 2; n <= 2000; ++n) CHECK(trace_set_A(BigInt(n)) == trace_set_bruteforce(BigInt(n)));
}

TEST_CASE("per-prime bounds over the rationals") {
  HeckeField q = HeckeField::rationals();
  CHECK(q.norm(bound_B_fq(q, BigInt(2), q.from_int(1))) == -16);
  CHECK(q.norm(bound_B_fq(q, BigInt(2), q.from_int(3))) == 0);
  CHECK(q.norm(bound_B_fq(q, BigInt(7), q.from_int(3))) == -21560);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> npick(2, 500);
  std::uniform_int_distribution<long> appick(-40, 40);
  for (int i = 0; i < 100; ++i) {
    BigInt n(npick(rng));
    BigRat ap(appick(rng));
    CHECK(q.norm(bound_B_fq(q, n, q.element({ap}))) == bound_bruteforce(n, ap));
  }
}

TEST_CASE("multiplicative and good reduction congruences divide the bound norm") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<long> npick(2, 300);
  std::uniform_int_distribution<size_t> pick(0, 100);
  std::vector<long> ells = {5, 7, 11, 13, 17};
  HeckeField q = HeckeField::rationals();
  int done = 0;
  while (done < 200) {
    BigInt n(npick(rng));
    long ell = ells[pick(rng) % ells.size()];
    BigRat ap;
    if (done % 2 == 0) {
      // ap = +-(N+1) mod ell
      long sign = (done % 4 == 0) ? 1 : -1;
      BigInt base = sign * (n + 1);
      ap = BigRat(base + ell * ((done % 7) - 3));
    } else {
      auto A = trace_set_A(n);
      BigInt a0 = A[pick(rng) % A.size()];
      ap = BigRat(a0 + ell * ((done % 5) - 2));
    }
    BigRat norm = q.norm(bound_B_fq(q, n, q.element({ap})));
    BigInt val(norm.get_num());
    CHECK(val % ell == 0);
    ++done;
  }
}

TEST_CASE("quadratic Hecke norms: direct formula equals the resultant route") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<long> cpick(-20, 20);
  for (long disc : {5L, -3L, 13L, -7L}) {
    HeckeField f = HeckeField::quadratic(disc);
    for (int i = 0; i < 50; ++i) {
      HeckeField::Elem e = f.element({make_rat(cpick(rng), 2), make_rat(cpick(rng), 2)});
      CHECK(f.norm(e) == f.norm_via_resultant(e));
    }
  }
}

TEST_CASE("Hecke field descriptors are validated") {
  CHECK_THROWS_AS(HeckeField::quadratic(0), std::invalid_argument);
  CHECK_THROWS_AS(HeckeField::quadratic(1), std::invalid_argument);
  CHECK_THROWS_AS(HeckeField::quadratic(4), std::invalid_argument);
  CHECK(HeckeField::quadratic(-3).degree() == 2);
  CHECK_THROWS_AS(HeckeField::from_minpoly({BigRat(1)}), std::invalid_argument);  // constant
  CHECK_THROWS_AS(HeckeField::from_minpoly({BigRat(1), BigRat(2)}), std::invalid_argument);
  CHECK_THROWS_AS(HeckeField::from_minpoly({BigRat(0), BigRat(0), BigRat(1)}),
                  std::invalid_argument);  // x^2
}

TEST_CASE("cubic Hecke field arithmetic goes through the resultant") {
  // x^3 - x - 1 (irreducible: no rational roots)
  HeckeField f = HeckeField::from_minpoly({BigRat(-1), BigRat(-1), BigRat(0), BigRat(1)});
  CHECK(f.degree() == 3);
  HeckeField::Elem theta = f.element({BigRat(0), BigRat(1), BigRat(0)});
  // N(theta) = (-1)^3 * constant term / leading = 1
  CHECK(f.norm(theta) == 1);
  // N(theta - 2): minpoly evaluated at 2 gives 2^3 - 2 - 1 = 5
  HeckeField::Elem shifted = f.sub(theta, f.from_int(2));
  CHECK(abs(BigInt(f.norm(shifted).get_num())) == 5);
  CHECK_THROWS_AS(HeckeField::from_minpoly({BigRat(-8), BigRat(0), BigRat(0), BigRat(1)}),
                  std::invalid_argument);  // x^3 - 8 has the root 2
}

TEST_CASE("aggregation of the bound ideal norms") {
  NewformRecord rec;
  rec.id = "toy";
  rec.hecke.kind = HeckeFieldDesc::Kind::Rational;
  rec.eigenvalues.emplace_back(ApKey{2, SplitKind::Split, 0}, std::vector<BigRat>{BigRat(1)});
  rec.eigenvalues.emplace_back(ApKey{7, SplitKind::Split, 0}, std::vector<BigRat>{BigRat(3)});
  CfResult cf = aggregate_C_f(rec);
  CHECK(cf.c_f == 8);  // gcd(16, 21560)
  CHECK(cf.surviving_primes == ints({2}));
  CHECK_FALSE(cf.survives_all);

  NewformRecord zero = rec;
  zero.eigenvalues.clear();
  zero.eigenvalues.emplace_back(ApKey{2, SplitKind::Split, 0}, std::vector<BigRat>{BigRat(3)});
  CfResult cfz = aggregate_C_f(zero);
  CHECK(cfz.c_f == 0);
  CHECK(cfz.survives_all);

  NewformRecord single = rec;
  single.eigenvalues.clear();
  single.eigenvalues.emplace_back(ApKey{2, SplitKind::Split, 0}, std::vector<BigRat>{BigRat(1)});
  CfResult cfs = aggregate_C_f(single);
  CHECK(cfs.c_f == 16);
  CHECK(cfs.surviving_primes == ints({2}));

  NewformRecord empty = rec;
  empty.eigenvalues.clear();
  CHECK_THROWS_AS(aggregate_C_f(empty), std::invalid_argument);
}

TEST_CASE("inertia elimination") {
  NewformRecord rec;
  rec.id = "curveful";
  rec.curves_pot_good_at_lambda = std::vector<bool>{true, true, true};
  InertiaResult r = inertia_eliminate(rec, 7);
  CHECK(r.eliminated);
  CHECK(r.threshold == 7);
  CHECK(r.conservative_threshold == 24);

  rec.curves_pot_good_at_lambda = std::vector<bool>{true, false};
  CHECK_FALSE(inertia_eliminate(rec, 7).eliminated);

  rec.curves_pot_good_at_lambda.reset();
  CHECK_THROWS_AS(inertia_eliminate(rec, 7), NotApplicableError);
}

TEST_CASE("bound aggregation") {
  auto norm_outcome = [](const std::string& id, long prime) {
    FormOutcome o;
    o.form_id = id;
    o.method = EliminationMethod::NormBound;
    o.elimination_prime = prime;
    return o;
  };
  // one form with largest surviving prime 11 reproduces max(3, 11)
  BoundResult b7 = aggregate_bound({norm_outcome("f", 11)}, BigInt(3), true);
  CHECK(b7.b_k == 11);
  CHECK(b7.conservative_b_k == 24);

  BoundResult b43 = aggregate_bound({norm_outcome("g1", 11), norm_outcome("g2", 5)}, BigInt(2531),
                                    true);
  CHECK(b43.b_k == 2531);
  CHECK(b43.conservative_b_k == 2531);

  BoundResult b67 = aggregate_bound({norm_outcome("h1", 17)}, BigInt(86338229), true);
  CHECK(b67.b_k == 86338229);

  FormOutcome bad;
  bad.form_id = "stuck";
  bad.method = EliminationMethod::None;
  CHECK_THROWS_WITH_AS(aggregate_bound({bad}, BigInt(3), true), "form stuck is not eliminated",
                       std::domain_error);

  // adding a form never lowers the bound
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<long> ppick(2, 5000);
  std::vector<FormOutcome> acc;
  BigInt last(0);
  for (int i = 0; i < 50; ++i) {
    acc.push_back(norm_outcome("m" + std::to_string(i), ppick(rng)));
    BigInt now = aggregate_bound(acc, BigInt(3), false).b_k;
    CHECK(now >= last);
    last = now;
  }
}
