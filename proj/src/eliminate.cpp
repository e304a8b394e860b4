#include "pp3/eliminate.hpp"

#include <algorithm>

#include "pp3/factor.hpp"

namespace pp3 {

std::string level_tag_name(LevelTag t) { return t == LevelTag::D ? "D" : "LD"; }

LevelTag level_tag_from_name(const std::string& s) {
  if (s == "D") return LevelTag::D;
  if (s == "LD") return LevelTag::LambdaD;
  throw std::invalid_argument("unknown level tag \"" + s + "\" (expected \"D\" or \"LD\")");
}

HeckeField HeckeFieldDesc::realize() const {
  switch (kind) {
    case Kind::Rational:
      return HeckeField::rationals();
    case Kind::Quadratic:
      return HeckeField::quadratic(disc);
    case Kind::Generic: {
      std::vector<BigRat> mp;
      mp.reserve(min_poly.size());
      for (const BigInt& c : min_poly) mp.emplace_back(c);
      return HeckeField::from_minpoly(std::move(mp));
    }
  }
  throw std::logic_error("unreachable");
}

std::string HeckeFieldDesc::kind_name() const {
  switch (kind) {
    case Kind::Rational: return "Q";
    case Kind::Quadratic: return "quad";
    case Kind::Generic: return "poly";
  }
  throw std::logic_error("unreachable");
}

BigInt ApKey::norm() const {
  return kind == SplitKind::Inert ? BigInt(p) * p : BigInt(p);
}

std::string ApKey::split_name() const {
  switch (kind) {
    case SplitKind::Split: return conj_index == 0 ? "s0" : "s1";
    case SplitKind::Inert: return "inert";
    case SplitKind::Ramified: return "ram";
  }
  throw std::logic_error("unreachable");
}

std::string ApKey::label() const {
  return "(" + std::to_string(p) + "," + split_name() + ")";
}

std::vector<BigInt> trace_set_A(const BigInt& q_norm) {
  if (q_norm < 2) throw std::invalid_argument("trace_set_A: norm must be >= 2");
  std::vector<BigInt> out;
  BigInt four_n = 4 * q_norm;
  BigInt s = isqrt(four_n);  // a^2 <= 4N  <=>  |a| <= floor(2 sqrt(N)) exactly
  for (BigInt a = -s; a <= s; ++a) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), BigInt(q_norm + 1 - a).get_mpz_t(), BigInt(3).get_mpz_t());
    if (r == 0) out.push_back(a);
  }
  return out;
}

HeckeField::Elem bound_B_fq(const HeckeField& field, const BigInt& q_norm,
                            const HeckeField::Elem& ap) {
  HeckeField::Elem np1 = field.from_int(q_norm + 1);
  HeckeField::Elem acc =
      field.mul(field.from_int(q_norm), field.sub(field.mul(np1, np1), field.mul(ap, ap)));
  for (const BigInt& a : trace_set_A(q_norm))
    acc = field.mul(acc, field.sub(field.from_int(a), ap));
  return acc;
}

CfResult aggregate_C_f(const NewformRecord& record) {
  if (record.eigenvalues.empty())
    throw std::invalid_argument("form " + record.id + " carries no eigenvalues");
  HeckeField field = record.hecke.realize();
  CfResult res;
  BigInt g(0);
  for (const auto& [key, coords] : record.eigenvalues) {
    HeckeField::Elem ap = field.element(coords);
    BigRat n = field.norm(bound_B_fq(field, key.norm(), ap));
    res.norms.emplace_back(key, n);
    if (!rat_is_integer(n))
      throw std::domain_error("form " + record.id + ": Norm(B_fq) at " + key.label() +
                              " is not a rational integer; eigenvalue is not integral");
    g = int_gcd(g, BigInt(n.get_num()));
  }
  res.c_f = g;
  res.survives_all = (g == 0);
  if (g > 1)
    for (auto& [p, e] : factor_integer(g)) res.surviving_primes.push_back(p);
  return res;
}

InertiaResult inertia_eliminate(const NewformRecord& record, long p_threshold) {
  if (!record.curves_pot_good_at_lambda.has_value())
    throw NotApplicableError("form " + record.id +
                             ": no associated-curve reduction data at the prime above 3");
  InertiaResult r;
  r.threshold = p_threshold;
  r.conservative_threshold = std::max(p_threshold, kFakeCurveThreshold);
  const auto& flags = *record.curves_pot_good_at_lambda;
  r.eliminated = !flags.empty() && std::all_of(flags.begin(), flags.end(), [](bool b) { return b; });
  return r;
}

std::string elimination_method_name(EliminationMethod m) {
  switch (m) {
    case EliminationMethod::NormBound: return "norm_bound";
    case EliminationMethod::Inertia: return "inertia";
    case EliminationMethod::None: return "none";
  }
  throw std::logic_error("unreachable");
}

BoundResult aggregate_bound(const std::vector<FormOutcome>& outcomes, const BigInt& torsion_ell,
                            bool include_structural) {
  BigInt b = torsion_ell;
  for (const FormOutcome& o : outcomes) {
    if (o.method == EliminationMethod::None)
      throw std::domain_error("form " + o.form_id + " is not eliminated");
    b = std::max(b, o.elimination_prime);
  }
  BoundResult res;
  res.b_k = b;
  res.conservative_b_k = b;
  if (include_structural) {
    res.conservative_b_k = std::max(res.conservative_b_k, BigInt(kIrreducibilityThreshold));
    res.conservative_b_k = std::max(res.conservative_b_k, BigInt(kFakeCurveThreshold));
  }
  return res;
}

}  // namespace pp3
