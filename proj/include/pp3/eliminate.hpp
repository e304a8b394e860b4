#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pp3/heckefield.hpp"
#include "pp3/ideal.hpp"

namespace pp3 {

enum class LevelTag { D, LambdaD };

std::string level_tag_name(LevelTag t);          // "D" / "LD"
LevelTag level_tag_from_name(const std::string&);

struct HeckeFieldDesc {
  enum class Kind { Rational, Quadratic, Generic };
  Kind kind = Kind::Rational;
  long disc = 0;                   // Quadratic
  std::vector<BigInt> min_poly;    // Generic, low to high, monic
  HeckeField realize() const;
  std::string kind_name() const;   // "Q" / "quad" / "poly"
};

/// Key of one Hecke eigenvalue: the prime of K it sits at.
struct ApKey {
  long p = 0;
  SplitKind kind = SplitKind::Inert;
  int conj_index = 0;

  BigInt norm() const;
  std::string split_name() const;  // "s0"/"s1"/"inert"/"ram"
  std::string label() const;
  bool operator==(const ApKey&) const = default;
  bool operator<(const ApKey& o) const {
    return std::pair(p, conj_index) < std::pair(o.p, o.conj_index);
  }
};

struct NewformRecord {
  long field_d = 0;
  std::string id;
  LevelTag level = LevelTag::D;
  HeckeFieldDesc hecke;
  std::vector<std::pair<ApKey, std::vector<BigRat>>> eigenvalues;  // input order
  std::optional<std::vector<bool>> curves_pot_good_at_lambda;
};

/// Integers a with a^2 <= 4*q_norm and q_norm + 1 - a = 0 mod 3, ascending.
std::vector<BigInt> trace_set_A(const BigInt& q_norm);

/// q_norm * ((q_norm+1)^2 - ap^2) * prod_{a in A(q_norm)} (a - ap), in the
/// Hecke field.
HeckeField::Elem bound_B_fq(const HeckeField& field, const BigInt& q_norm,
                            const HeckeField::Elem& ap);

struct CfResult {
  BigInt c_f = 0;                      // gcd of |Norm(B_fq)| over the keys; 0 = no constraint
  bool survives_all = false;           // c_f == 0
  std::vector<BigInt> surviving_primes;
  std::vector<std::pair<ApKey, BigRat>> norms;  // per-key Norm(B_fq)
};

/// Aggregates the per-prime bounds of a record into C_f by the gcd of the
/// rational norms (a sound over-approximation of the norm of the sum ideal).
CfResult aggregate_C_f(const NewformRecord& record);

struct InertiaResult {
  bool eliminated = false;
  long threshold = 0;               // as configured
  long conservative_threshold = 0;  // max(threshold, 24)
};

struct NotApplicableError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Inertia elimination: valid only when reduction data of the associated
/// curves at the prime above 3 is present; eliminated iff all of them have
/// potentially good reduction there.
InertiaResult inertia_eliminate(const NewformRecord& record, long p_threshold);

enum class EliminationMethod { NormBound, Inertia, None };

std::string elimination_method_name(EliminationMethod m);

struct FormOutcome {
  std::string form_id;
  LevelTag level = LevelTag::D;
  EliminationMethod method = EliminationMethod::None;
  CfResult cf;
  BigInt elimination_prime = 0;  // largest prime of C_f, or the inertia threshold
  std::optional<InertiaResult> inertia;
};

struct BoundResult {
  BigInt b_k = 0;
  BigInt conservative_b_k = 0;
};

inline constexpr long kIrreducibilityThreshold = 20;
inline constexpr long kFakeCurveThreshold = 24;

/// B_K = max(torsion_ell, per-form elimination primes/thresholds); the
/// conservative variant additionally maxes in the structural constants
/// 20 (irreducibility) and 24 (fake elliptic curves). Throws if any form
/// is not eliminated, naming it.
BoundResult aggregate_bound(const std::vector<FormOutcome>& outcomes, const BigInt& torsion_ell,
                            bool include_structural);

}  // namespace pp3
