#include "pp3/sunit.hpp"

#include <algorithm>

#include "pp3/factor.hpp"

namespace pp3 {

BigRat SUnitSolution::alpha() const {
  BigRat r = rat_pow(BigRat(3), n);
  return sign < 0 ? -r : r;
}

namespace {

// cube root of r in Z[1/3], if any
std::optional<BigRat> rational_cube_root_z13(const BigRat& r) {
  if (r == 0) return BigRat(0);
  BigInt num = r.get_num(), den = r.get_den();
  long t = 0;
  t += remove_factor(num, BigInt(3));
  if (den != 1) t -= remove_factor(den, BigInt(3));
  if (den != 1) return std::nullopt;  // denominator must be a 3-power
  if (t % 3 != 0) return std::nullopt;
  auto root = exact_cbrt(num);
  if (!root) return std::nullopt;
  return *root * rat_pow(BigRat(3), t / 3);
}

}  // namespace

std::vector<SUnitSolution> solve_alpha_plus_one(const FieldCtx& ctx, long n_max) {
  if (ctx.d % 3 != 1)
    throw std::domain_error("solver requires 3 inert in the field (d = 1 mod 3)");
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<SUnitSolution> out;
  for (long n = -n_max; n <= n_max; ++n) {
    for (int sign : {-1, 1}) {
      BigRat alpha = rat_pow(BigRat(3), n);
      if (sign < 0) alpha = -alpha;
      auto gamma = rational_cube_root_z13(alpha + 1);
      if (gamma) out.push_back(SUnitSolution{sign, n, QuadElem(ctx, *gamma)});
    }
  }
  std::sort(out.begin(), out.end(), [](const SUnitSolution& a, const SUnitSolution& b) {
    return std::pair(a.n, a.sign) < std::pair(b.n, b.sign);
  });
  return out;
}

NormalizedTriple normalize_solution(const QuadElem& alpha, const QuadElem& beta,
                                    const QuadElem& gamma, const PrimeIdeal& q) {
  require_same_ctx(alpha, beta);
  require_same_ctx(alpha, gamma);
  if (alpha.is_zero() || beta.is_zero())
    throw std::domain_error("normalize_solution: alpha and beta must be nonzero");
  if (!(alpha + beta == gamma * gamma * gamma))
    throw std::invalid_argument("normalize_solution: alpha + beta != gamma^3");
  auto gen = principal_generator(q);
  if (!gen) throw std::domain_error("normalize_solution: prime is not principal");
  long va = val(alpha, q);
  long vb = val(beta, q);
  long m = std::min(va, vb);
  long k = (m >= 0) ? m / 3 : -((-m + 2) / 3);  // floor(m/3)
  QuadElem scale3 = gen->pow(3).inverse().pow(static_cast<unsigned long>(std::abs(k)));
  QuadElem scale1 = gen->inverse().pow(static_cast<unsigned long>(std::abs(k)));
  if (k < 0) {
    scale3 = gen->pow(3).pow(static_cast<unsigned long>(-k));
    scale1 = gen->pow(static_cast<unsigned long>(-k));
  }
  NormalizedTriple t{alpha * scale3, beta * scale3, gamma * scale1, q};
  if (val(t.beta, q) > val(t.alpha, q)) std::swap(t.alpha, t.beta);
  long vbn = val(t.beta, q);
  if (vbn < 0 || vbn > 2 || !(t.alpha + t.beta == t.gamma * t.gamma * t.gamma))
    throw std::logic_error("normalization failed to reach the canonical range");
  return t;
}

std::optional<QuadElem> cube_root_in_os(const QuadElem& beta,
                                        const std::vector<PrimeIdeal>& S) {
  if (beta.is_zero()) return QuadElem(beta.ctx());
  // strip the S-part: each S-valuation must be divisible by 3
  QuadElem reduced = beta;
  QuadElem root_scale(beta.ctx(), 1);
  for (const PrimeIdeal& q : S) {
    long v = val(beta, q);
    if (v == 0) continue;
    if (v % 3 != 0) return std::nullopt;
    auto gen = principal_generator(q);
    if (!gen) throw std::domain_error("cube_root_in_os: non-principal prime in S");
    long k = v / 3;
    QuadElem g3 = gen->pow(3);
    if (k > 0) {
      reduced = reduced * g3.inverse().pow(static_cast<unsigned long>(k));
      root_scale = root_scale * gen->pow(static_cast<unsigned long>(k));
    } else {
      reduced = reduced * g3.pow(static_cast<unsigned long>(-k));
      root_scale = root_scale * gen->inverse().pow(static_cast<unsigned long>(-k));
    }
  }
  // the remaining part must be integral with cube norm
  if (!reduced.is_integral()) return std::nullopt;
  BigRat n = reduced.norm();
  auto nroot = exact_cbrt(BigInt(n.get_num()));
  if (!nroot) return std::nullopt;
  // search integral elements of the cube-root norm and test their cubes
  const FieldCtx& ctx = beta.ctx();
  BigInt target = *nroot;
  if (target == 0) return std::nullopt;
  if (ctx.omega == OmegaKind::Sqrt) {
    BigInt ymax = isqrt(target / ctx.d);
    for (BigInt y = -ymax; y <= ymax; ++y) {
      BigInt rem = target - ctx.d * y * y;
      if (rem < 0) continue;
      BigInt x = isqrt(rem);
      if (x * x != rem) continue;
      for (const BigInt& xx : {BigInt(x), BigInt(-x)}) {
        QuadElem cand(ctx, BigRat(xx), BigRat(y));
        if (cand * cand * cand == reduced) return cand * root_scale;
        if (xx == 0) break;
      }
    }
  } else {
    BigInt four_n = 4 * target;
    BigInt ymax = isqrt(four_n / ctx.d);
    for (BigInt y = -ymax; y <= ymax; ++y) {
      BigInt rem = four_n - ctx.d * y * y;
      if (rem < 0) continue;
      BigInt s = isqrt(rem);
      if (s * s != rem) continue;
      for (int sign : {1, -1}) {
        BigInt ss = sign * s;
        if ((ss - y) % 2 != 0) continue;
        QuadElem cand(ctx, BigRat((ss - y) / 2), BigRat(y));
        if (cand * cand * cand == reduced) return cand * root_scale;
        if (s == 0) break;
      }
    }
  }
  return std::nullopt;
}

SUnitCase case_split(const NormalizedTriple& t) {
  long vb = val(t.beta, t.q);
  long va = val(t.alpha, t.q);
  if (vb < 0 || vb > 2 || vb > va)
    throw std::invalid_argument("case_split: triple is not normalized");
  if (vb == 1 || vb == 2) {
    if (va != vb)
      throw std::domain_error(
          "not a genuine solution: v(alpha) != v(beta) would force v(gamma^3) = v(beta), "
          "which is not a multiple of 3");
    return SUnitCase::ValuationsEqual;
  }
  auto root = cube_root_in_os(t.beta, {t.q});
  return root ? SUnitCase::Cube : SUnitCase::NonCube;
}

bool tk_condition(const std::vector<std::pair<QuadElem, QuadElem>>& pairs,
                  const std::vector<PrimeIdeal>& tk_support,
                  const std::vector<PrimeIdeal>& s3) {
  for (const auto& [alpha, beta] : pairs) {
    for (const QuadElem* e : {&alpha, &beta}) {
      if (e->is_zero()) throw std::domain_error("tk_condition: zero entry");
      for (auto& [P, v] : factor_principal(*e).factors) {
        if (v != 0 && !ideal_set_contains(tk_support, P))
          throw std::domain_error("tk_condition: entry is not a unit over the given support (" +
                                  P.label() + ")");
      }
    }
    bool ok = false;
    for (const PrimeIdeal& L : s3) {
      long v3 = val(QuadElem(L.ctx, 3), L);
      long v = val(alpha, L) - val(beta, L);
      if (std::abs(v) <= 3 * v3) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

MuCaseResult mu_case_analysis(long v_mu, long v_3) {
  if (v_3 < 1) throw std::invalid_argument("mu_case_analysis: v(3) must be positive");
  if (v_mu < 0 || v_mu > 6 * v_3)
    throw std::invalid_argument("mu_case_analysis: v(mu) outside [0, 6 v(3)]");
  if (v_mu <= v_3) return MuCaseResult{1, 0, false};
  if (v_mu <= 3 * v_3) return MuCaseResult{2, 1, false};
  return MuCaseResult{3, 6 * v_3 - v_mu, true};
}

TorsionModelJ torsion_model_j(const QuadElem& e_coef, const QuadElem& d_coef) {
  require_same_ctx(e_coef, d_coef);
  const FieldCtx& ctx = e_coef.ctx();
  if (d_coef.is_zero()) throw std::domain_error("singular model: d = 0");
  QuadElem lambda = e_coef.pow(3) / d_coef;
  QuadElem mu = lambda - QuadElem(ctx, 27);
  if (mu.is_zero()) throw std::domain_error("singular model: lambda = 27");
  QuadElem k24(ctx, 24), k27(ctx, 27), k3(ctx, 3);
  QuadElem j1 = lambda * (lambda - k24).pow(3) / (lambda - k27);
  QuadElem j2 = (mu + k27) * (mu + k3).pow(3) / mu;
  if (!(j1 == j2)) throw std::logic_error("the two j-invariant forms disagree");
  return TorsionModelJ{lambda, mu, j1};
}

}  // namespace pp3
