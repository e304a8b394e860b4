#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pp3/field.hpp"

namespace pp3 {

enum class SplitKind { Split, Inert, Ramified };

/// Prime of O_K above the rational prime p, in two-generator form
/// <p, second_gen>. For split and ramified primes second_gen = w - root
/// with root a zero of the minimal polynomial of w mod p; for inert
/// primes the ideal is (p) itself.
struct PrimeIdeal {
  FieldCtx ctx;
  long p = 0;
  SplitKind kind = SplitKind::Inert;
  long root = -1;      // -1 for inert
  int conj_index = 0;  // 0 or 1 for split (roots in increasing order)
  int e = 1;           // ramification index
  int f = 2;           // residue degree

  QuadElem second_gen() const;
  BigInt norm() const { return int_pow(BigInt(p), static_cast<unsigned long>(f)); }
  PrimeIdeal conjugate() const;
  bool divides_rational(long q) const { return q == p; }
  std::string label() const;  // "(2,s0)", "(3)", "(7,ram)"

  bool operator==(const PrimeIdeal& o) const {
    return ctx == o.ctx && p == o.p && kind == o.kind && root == o.root;
  }
};

SplitKind splitting_kind(long p, const FieldCtx& ctx);

/// All primes above p (1 or 2 of them), split roots in increasing order.
std::vector<PrimeIdeal> primes_above(long p, const FieldCtx& ctx);

/// Exact P-adic valuation of e != 0; negative for non-integral elements.
long val(const QuadElem& e, const PrimeIdeal& P);

struct IdealFactorization {
  std::vector<std::pair<PrimeIdeal, long>> factors;  // sorted by (p, conj_index)
};

/// Factors the principal fractional ideal (e), e != 0. Satisfies
/// |norm(e)| = prod p^(f*v) as an exact rational identity.
IdealFactorization factor_principal(const QuadElem& e);

/// True iff no prime ideal divides two of a, b, c. Inputs integral, nonzero.
bool pairwise_coprime(const QuadElem& a, const QuadElem& b, const QuadElem& c);

/// Class number by enumerating ideals of norm up to the Minkowski bound
/// (2/pi)sqrt|disc| and resolving equivalence through principality of
/// I*conj(J), itself decided by an exact norm-form representation search.
long class_number(const FieldCtx& ctx);

/// Generator of P when P is principal: an element of norm Norm(P) lying in P.
std::optional<QuadElem> principal_generator(const PrimeIdeal& P);

/// Primes above 3.
std::vector<PrimeIdeal> sk_set(const FieldCtx& ctx);

/// All primes dividing 3*A*B*C, deduplicated, sorted; contains sk_set.
std::vector<PrimeIdeal> tk_set(const QuadElem& A, const QuadElem& B, const QuadElem& C);

bool ideal_set_contains(const std::vector<PrimeIdeal>& set, const PrimeIdeal& P);

}  // namespace pp3
