#include "pp3/frey.hpp"

#include <algorithm>

#include "pp3/factor.hpp"

namespace pp3 {

namespace {

QuadElem qpow(const QuadElem& e, long n) { return e.pow(static_cast<unsigned long>(n)); }

}  // namespace

FreyInstance FreyInstance::make(const QuadElem& A, const QuadElem& B, const QuadElem& C,
                                const QuadElem& a, const QuadElem& b, const QuadElem& c, long p) {
  for (const QuadElem* e : {&B, &C, &a, &b, &c}) require_same_ctx(A, *e);
  for (const QuadElem* e : {&A, &B, &C, &a, &b, &c})
    if (!e->is_integral()) throw std::invalid_argument("instance entries must be integral");
  if (A.is_zero() || B.is_zero() || C.is_zero())
    throw std::invalid_argument("coefficients A, B, C must be nonzero");
  if (p < 2 || !is_prime(BigInt(p))) throw std::invalid_argument("exponent p must be prime");
  QuadElem lhs = A * qpow(a, p) + B * qpow(b, p);
  QuadElem rhs = C * qpow(c, 3);
  if (!(lhs == rhs)) throw std::invalid_argument("defining equation A a^p + B b^p = C c^3 fails");
  FreyInstance inst{A.ctx(), A, B, C, a, b, c, p, false};
  if (!a.is_zero() && !b.is_zero() && !c.is_zero())
    inst.primitive = pairwise_coprime(a, b, c);
  return inst;
}

WeierstrassModel frey_model(const FreyInstance& inst) {
  if (inst.a.is_zero() || inst.b.is_zero() || inst.c.is_zero())
    throw std::domain_error("trivial solution gives a singular curve");
  const FieldCtx& ctx = inst.ctx;
  QuadElem three(ctx, 3);
  WeierstrassModel m{ctx,
                     three * inst.C * inst.c,
                     QuadElem(ctx),
                     inst.C * inst.C * inst.B * qpow(inst.b, inst.p),
                     QuadElem(ctx),
                     QuadElem(ctx)};
  return m;
}

CurveInvariants invariants_from_model(const WeierstrassModel& m) {
  const FieldCtx& ctx = m.ctx;
  auto k = [&](long n) { return QuadElem(ctx, n); };
  QuadElem b2 = m.a1 * m.a1 + k(4) * m.a2;
  QuadElem b4 = k(2) * m.a4 + m.a1 * m.a3;
  QuadElem b6 = m.a3 * m.a3 + k(4) * m.a6;
  QuadElem b8 = m.a1 * m.a1 * m.a6 + k(4) * m.a2 * m.a6 - m.a1 * m.a3 * m.a4 +
                m.a2 * m.a3 * m.a3 - m.a4 * m.a4;
  QuadElem c4 = b2 * b2 - k(24) * b4;
  QuadElem c6 = -(b2 * b2 * b2) + k(36) * b2 * b4 - k(216) * b6;
  QuadElem delta = -(b2 * b2 * b8) - k(8) * b4 * b4 * b4 - k(27) * b6 * b6 + k(9) * b2 * b4 * b6;
  if (delta.is_zero()) throw std::domain_error("singular model: discriminant vanishes");
  return CurveInvariants{c4, c6, delta, c4 * c4 * c4 * delta.inverse()};
}

CurveInvariants invariants_closed_form(const FreyInstance& inst) {
  const FieldCtx& ctx = inst.ctx;
  auto k = [&](long n) { return QuadElem(ctx, n); };
  QuadElem ap = qpow(inst.a, inst.p);
  QuadElem bp = qpow(inst.b, inst.p);
  QuadElem Bbp = inst.B * bp;
  QuadElem c3 = qpow(inst.c, 3);
  QuadElem nine_term = k(9) * inst.A * ap + Bbp;
  QuadElem c4 = k(9) * qpow(inst.C, 3) * inst.c * nine_term;
  QuadElem c6 = -(k(27) * qpow(inst.C, 4) *
                  (k(27) * inst.C * inst.C * qpow(inst.c, 6) - k(36) * inst.C * c3 * Bbp +
                   k(8) * Bbp * Bbp));
  QuadElem delta = k(27) * inst.A * qpow(inst.B, 3) * qpow(inst.C, 8) *
                   qpow(inst.a * qpow(inst.b, 3), inst.p);
  if (delta.is_zero()) throw std::domain_error("singular instance: discriminant vanishes");
  return CurveInvariants{c4, c6, delta, c4 * c4 * c4 * delta.inverse()};
}

namespace {

bool in_tk_support(const FreyInstance& inst, const PrimeIdeal& P) {
  long v = val(QuadElem(inst.ctx, 3), P) + val(inst.A, P) + val(inst.B, P) + val(inst.C, P);
  return v > 0;
}

}  // namespace

ReductionReport reduction_type(const FreyInstance& inst, const PrimeIdeal& P) {
  CurveInvariants inv = invariants_closed_form(inst);
  ReductionReport rep;
  rep.prime = P;
  rep.in_tk = in_tk_support(inst, P);
  long v3 = val(QuadElem(inst.ctx, 3), P);
  long v2 = val(QuadElem(inst.ctx, 2), P);
  rep.serre_bound = static_cast<int>(2 + 3 * v3 + 6 * v2);
  constexpr long kInfty = 1L << 40;  // stands in for v(0)
  long vc4 = inv.c4.is_zero() ? kInfty : val(inv.c4, P);
  long vdelta = val(inv.delta, P);
  long vc6 = inv.c6.is_zero() ? kInfty : val(inv.c6, P);
  if (v3 > 0 && vc4 >= 4 * v3 && vc6 >= 6 * v3 && vdelta >= 12 * v3) {
    vc4 -= 4 * v3;
    vc6 -= 6 * v3;
    vdelta -= 12 * v3;
    rep.minimal_after_rescale = (vdelta < 12 * v3 || vc4 < 4 * v3);
  } else {
    rep.minimal_after_rescale = (vdelta < 12 * std::max(v3, 1L) || vc4 < 4 * std::max(v3, 1L));
  }
  rep.v_delta_min = vdelta;
  rep.v_c4_min = vc4;
  if (vdelta == 0) {
    rep.type = ReductionType::Good;
    rep.conductor_exponent_candidates = {0};
  } else if (vc4 == 0) {
    rep.type = ReductionType::Multiplicative;
    rep.conductor_exponent_candidates = {1};
  } else {
    rep.type = ReductionType::Additive;
    if (v3 > 0) {
      try {
        rep.conductor_exponent_candidates = conductor_exponent_at_lambda(inst, P).candidates;
        return rep;
      } catch (const std::exception&) {
        // fall through to the generic candidate range
      }
    }
    for (int eps = 2; eps <= rep.serre_bound; ++eps)
      rep.conductor_exponent_candidates.push_back(eps);
  }
  return rep;
}

LambdaConductorResult conductor_exponent_at_lambda(const FreyInstance& inst,
                                                   const PrimeIdeal& lambda) {
  if (val(QuadElem(inst.ctx, 3), lambda) <= 0)
    throw std::invalid_argument("conductor classification applies at primes above 3");
  if (!(inst.C == QuadElem(inst.ctx, 1)))
    throw std::invalid_argument("conductor classification requires C = 1");
  if (class_number(inst.ctx) != 1)
    throw std::invalid_argument("conductor classification requires class number 1");
  long e = lambda.e;
  long vA = val(inst.A, lambda);
  long va = inst.a.is_zero() ? 0 : val(inst.a, lambda);
  long vB = val(inst.B, lambda);
  long vb = inst.b.is_zero() ? 0 : val(inst.b, lambda);

  auto classify_bb = [&](const FreyInstance& cur, bool swapped) -> LambdaConductorResult {
    long v_bbp = val(cur.B, lambda) + cur.p * val(cur.b, lambda);
    if (v_bbp <= 2 * e)
      throw std::domain_error("unclassified conductor case: v(Bb^p) <= 2e at the rescale prime");
    CurveInvariants inv = invariants_closed_form(cur);
    if (inv.c4.is_zero() || inv.c6.is_zero())
      throw std::domain_error("unclassified conductor case: vanishing c4 or c6");
    long v3 = val(QuadElem(cur.ctx, 3), lambda);
    long vc4 = val(inv.c4, lambda) - 4 * v3;
    long vc6 = val(inv.c6, lambda) - 6 * v3;
    if (vc4 != 0 || vc6 != 0)
      throw std::domain_error("unclassified conductor case: rescaled model not of unit c4, c6");
    return LambdaConductorResult{{0, 1}, 1, swapped};
  };

  if (vB + vb > 0) return classify_bb(inst, false);
  if (vA + va > 0) {
    FreyInstance swapped =
        FreyInstance::make(inst.B, inst.A, inst.C, inst.b, inst.a, inst.c, inst.p);
    return classify_bb(swapped, true);
  }
  if (e == 1) return LambdaConductorResult{{2, 3}, 2, false};
  throw std::domain_error("unclassified conductor case: ramified prime with lambda coprime data");
}

long j_valuation_threshold(const FreyInstance& inst, const PrimeIdeal& L) {
  long v3 = val(QuadElem(inst.ctx, 3), L);
  long vA = val(inst.A, L);
  long vB = val(inst.B, L);
  long vC = val(inst.C, L);
  long t = std::max({2 * v3 + vA, vB, vC});
  t = std::max(t, std::abs(v3 + vB - vA));
  t = std::max(t, std::abs(3 * v3 + vA - vB));
  return t;
}

JValuationResult j_valuation_lemma(const FreyInstance& inst, const PrimeIdeal& L) {
  long v3 = val(QuadElem(inst.ctx, 3), L);
  if (v3 <= 0) throw std::invalid_argument("j valuation formula applies at primes above 3");
  if (inst.a.is_zero() || inst.b.is_zero())
    throw std::domain_error("not a solution with lambda | ab: trivial entry");
  long va = val(inst.a, L);
  long vb = val(inst.b, L);
  if (va > 0 && vb > 0)
    throw std::domain_error("not a primitive solution: prime above 3 divides both a and b");
  if (va == 0 && vb == 0) throw std::domain_error("solution is outside W_K: lambda does not divide ab");
  if (inst.p <= j_valuation_threshold(inst, L))
    throw std::invalid_argument("exponent below the validity threshold of the formula");
  long vA = val(inst.A, L);
  long vB = val(inst.B, L);
  JValuationResult res;
  if (va > 0) {
    res.branch = 0;
    res.valuation = 3 * v3 + (vB - vA) - inst.p * va;
  } else {
    res.branch = 1;
    res.valuation = 3 * (3 * v3 + (vA - vB) - inst.p * vb);
  }
  res.p_divides_inertia = res.valuation < 0 && (res.valuation % inst.p != 0);
  return res;
}

std::tuple<QuadElem, QuadElem, QuadElem> nonprimitive_from_linear(
    const QuadElem& x, const QuadElem& y, const QuadElem& z, const QuadElem& A,
    const QuadElem& B, const QuadElem& C, long p) {
  if (p % 3 != 2) throw std::invalid_argument("construction requires p = 2 mod 3");
  if (!is_prime(BigInt(p))) throw std::invalid_argument("p must be prime");
  QuadElem lhs = A * x.pow(static_cast<unsigned long>(p)) + B * y.pow(static_cast<unsigned long>(p));
  if (!(lhs == C * z)) throw std::invalid_argument("inputs do not satisfy A x^p + B y^p = C z");
  QuadElem a = x * z;
  QuadElem b = y * z;
  QuadElem c = z.pow(static_cast<unsigned long>((p + 1) / 3));
  QuadElem check = A * a.pow(static_cast<unsigned long>(p)) + B * b.pow(static_cast<unsigned long>(p));
  if (!(check == C * c.pow(3))) throw std::logic_error("constructed triple fails the cubic equation");
  if (!z.is_zero() && !z.is_unit() && !a.is_zero() && !b.is_zero() && !c.is_zero()) {
    if (pairwise_coprime(a, b, c))
      throw std::logic_error("triple built from a non-unit z should not be primitive");
  }
  return {a, b, c};
}

}  // namespace pp3
