#pragma once

#include <tuple>
#include <vector>

#include "pp3/ideal.hpp"

namespace pp3 {

/// Equation data A*a^p + B*b^p = C*c^3 with prime exponent p.
/// The constructor checks the equation exactly and records primitivity.
struct FreyInstance {
  FieldCtx ctx;
  QuadElem A, B, C, a, b, c;
  long p = 0;
  bool primitive = false;

  static FreyInstance make(const QuadElem& A, const QuadElem& B, const QuadElem& C,
                           const QuadElem& a, const QuadElem& b, const QuadElem& c, long p);
};

struct WeierstrassModel {
  FieldCtx ctx;
  QuadElem a1, a2, a3, a4, a6;
};

struct CurveInvariants {
  QuadElem c4, c6, delta;
  QuadElem j;  // c4^3 / delta, exact rational function value
};

enum class ReductionType { Good, Multiplicative, Additive };

struct ReductionReport {
  PrimeIdeal prime;
  ReductionType type = ReductionType::Good;
  bool minimal_after_rescale = false;
  std::vector<int> conductor_exponent_candidates;
  int serre_bound = 2;  // 2 + 3v(3) + 6v(2)
  long v_delta_min = 0;
  long v_c4_min = 0;
  bool in_tk = false;
};

/// Y^2 + 3Cc XY + C^2 B b^p Y = X^3; rejects trivial (abc = 0) solutions.
WeierstrassModel frey_model(const FreyInstance& inst);

/// Standard b2/b4/b6/b8 -> c4/c6/Delta chain; the independent route.
CurveInvariants invariants_from_model(const WeierstrassModel& m);

/// c4 = 3^2 C^3 c (9Aa^p + Bb^p), Delta = 3^3 A B^3 C^8 (a b^3)^p, and the
/// matching c6; agrees exactly with invariants_from_model on valid instances.
CurveInvariants invariants_closed_form(const FreyInstance& inst);

/// Classifies reduction at P from minimal valuations of Delta and c4.
/// At primes above 3 the u=3 rescale (c4 -> c4/3^4, c6 -> c6/3^6,
/// Delta -> Delta/3^12) is applied first when it keeps the model integral.
ReductionReport reduction_type(const FreyInstance& inst, const PrimeIdeal& P);

struct LambdaConductorResult {
  std::vector<int> candidates;  // {0,1} or {2,3}
  int case_id = 0;              // 1 or 2
  bool swapped = false;         // the (A,a) <-> (B,b) relabelling was applied
};

/// Conductor exponent candidates at a prime above 3, for C = 1 and h_K = 1.
/// Throws on cases outside the classification table.
LambdaConductorResult conductor_exponent_at_lambda(const FreyInstance& inst,
                                                   const PrimeIdeal& lambda);

struct JValuationResult {
  long valuation = 0;
  bool p_divides_inertia = false;
  int branch = 0;  // 0: L | a, 1: L | b
};

/// Closed-form v_L(j) at a prime L above 3 dividing ab, valid once p clears
/// the instance-derived threshold; the L | b branch is three times an integer.
JValuationResult j_valuation_lemma(const FreyInstance& inst, const PrimeIdeal& L);

/// Threshold the exponent must exceed for j_valuation_lemma at L.
long j_valuation_threshold(const FreyInstance& inst, const PrimeIdeal& L);

/// From A x^p + B y^p = C z with p = 2 mod 3, builds the non-primitive
/// solution (xz, yz, z^((p+1)/3)) of the degree-3 equation.
std::tuple<QuadElem, QuadElem, QuadElem> nonprimitive_from_linear(
    const QuadElem& x, const QuadElem& y, const QuadElem& z, const QuadElem& A,
    const QuadElem& B, const QuadElem& C, long p);

}  // namespace pp3
