#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pp3/ideal.hpp"

namespace pp3 {

/// alpha = sign * 3^n with alpha + 1 = gamma^3 and gamma integral away from 3.
struct SUnitSolution {
  int sign = 1;
  long n = 0;
  QuadElem gamma;
  BigRat alpha() const;
};

/// Enumerates alpha = +-3^n for |n| <= n_max over K = Q(sqrt(-d)) with 3
/// inert (d = 1 mod 3) and keeps those with alpha + 1 a cube in O_K[1/3].
/// The cube test reduces to rationals: gamma^3 in Q forces gamma in Q here.
std::vector<SUnitSolution> solve_alpha_plus_one(const FieldCtx& ctx, long n_max);

struct NormalizedTriple {
  QuadElem alpha, beta, gamma;
  PrimeIdeal q;
};

/// Rescales (alpha, beta, gamma) with alpha + beta = gamma^3 by cubes of a
/// generator of q (q must be principal), swapping alpha and beta if needed,
/// until v_q(beta) lies in {0,1,2} and v_q(beta) <= v_q(alpha).
NormalizedTriple normalize_solution(const QuadElem& alpha, const QuadElem& beta,
                                    const QuadElem& gamma, const PrimeIdeal& q);

enum class SUnitCase {
  ValuationsEqual = 1,  // v(beta) in {1,2}, forces v(alpha) = v(beta)
  NonCube = 2,          // v(beta) = 0 and beta is not a cube in O_S
  Cube = 3,             // v(beta) = 0 and beta is a cube in O_S
};

SUnitCase case_split(const NormalizedTriple& t);

/// Exact cube root of beta in the ring of S-integers, when one exists.
/// S-primes must be principal.
std::optional<QuadElem> cube_root_in_os(const QuadElem& beta, const std::vector<PrimeIdeal>& S);

/// Every pair must be supported on tk_support; true iff each admits a prime
/// L above 3 with |v_L(alpha/beta)| <= 3 v_L(3).
bool tk_condition(const std::vector<std::pair<QuadElem, QuadElem>>& pairs,
                  const std::vector<PrimeIdeal>& tk_support, const std::vector<PrimeIdeal>& s3);

struct MuCaseResult {
  int case_id = 0;
  long v_j_lower_bound = 0;
  bool exact = false;
};

/// The three-interval analysis of v(j) = v(mu+27) + 3 v(mu+3) - v(mu) for
/// 0 <= v(mu) <= 6 v(3); the bound is exact in the top interval.
MuCaseResult mu_case_analysis(long v_mu, long v_3);

struct TorsionModelJ {
  QuadElem lambda;  // e^3/d
  QuadElem mu;      // lambda - 27
  QuadElem j;
};

/// j-invariant of y^2 + e xy + d y = x^3 computed through both rational
/// function forms lambda(lambda-24)^3/(lambda-27) and (mu+27)(mu+3)^3/mu,
/// which are checked to agree exactly.
TorsionModelJ torsion_model_j(const QuadElem& e_coef, const QuadElem& d_coef);

}  // namespace pp3
