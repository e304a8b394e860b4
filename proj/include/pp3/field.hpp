#pragma once

#include <string>

#include "pp3/rational.hpp"

namespace pp3 {

/// Integral basis generator of Q(sqrt(-d)): w = sqrt(-d) when d = 1,2 mod 4,
/// w = (1+sqrt(-d))/2 when d = 3 mod 4.
enum class OmegaKind { Sqrt, Half };

struct FieldCtx {
  long d = 0;
  OmegaKind omega = OmegaKind::Sqrt;
  long disc = 0;  // -4d or -d

  /// Validates d >= 2 and square-free, fixes omega and disc from d mod 4.
  static FieldCtx make(long d);

  bool operator==(const FieldCtx&) const = default;

  /// Constant term of the minimal polynomial of w: x^2 + d (Sqrt) or
  /// x^2 - x + (1+d)/4 (Half).
  long omega_c0() const { return omega == OmegaKind::Sqrt ? d : (1 + d) / 4; }

  std::string omega_description() const;
};

/// Element x + y*w of Q(sqrt(-d)) in exact rational coordinates over {1, w}.
class QuadElem {
 public:
  QuadElem() = default;
  explicit QuadElem(const FieldCtx& ctx) : ctx_(ctx) {}
  QuadElem(const FieldCtx& ctx, BigRat x) : ctx_(ctx), x_(std::move(x)) {}
  QuadElem(const FieldCtx& ctx, BigRat x, BigRat y)
      : ctx_(ctx), x_(std::move(x)), y_(std::move(y)) {}

  /// Builds u + v*sqrt(-d), converting into the {1, w} basis.
  static QuadElem from_sqrt_coords(const FieldCtx& ctx, const BigRat& u, const BigRat& v);

  /// sqrt(-d) as an element (w, or 2w-1 in the Half basis).
  static QuadElem sqrt_minus_d(const FieldCtx& ctx);
  static QuadElem omega(const FieldCtx& ctx) { return QuadElem(ctx, 0, 1); }

  const FieldCtx& ctx() const { return ctx_; }
  const BigRat& x() const { return x_; }
  const BigRat& y() const { return y_; }

  bool is_zero() const { return x_ == 0 && y_ == 0; }
  bool is_rational() const { return y_ == 0; }
  bool is_integral() const;  // trace and norm both rational integers
  bool is_unit() const;      // integral with norm 1 (units are +-1 for d >= 2)

  QuadElem conj() const;
  BigRat trace() const;
  BigRat norm() const;

  QuadElem operator-() const { return QuadElem(ctx_, -x_, -y_); }
  QuadElem& operator+=(const QuadElem& o);
  QuadElem& operator-=(const QuadElem& o);
  QuadElem& operator*=(const QuadElem& o);

  QuadElem inverse() const;  // throws on zero
  QuadElem pow(unsigned long e) const;

  bool operator==(const QuadElem& o) const { return ctx_ == o.ctx_ && x_ == o.x_ && y_ == o.y_; }

  std::string to_string() const;  // "x+y*w" form

  /// Accepts sums of terms "r", "r*w", "w", "r*s", "s" where s = sqrt(-d)
  /// and r is a rational "p/q". Examples: "-9", "1+2*w", "3/2-s".
  static QuadElem parse(const FieldCtx& ctx, const std::string& text);

 private:
  FieldCtx ctx_;
  BigRat x_, y_;
};

QuadElem operator+(QuadElem a, const QuadElem& b);
QuadElem operator-(QuadElem a, const QuadElem& b);
QuadElem operator*(QuadElem a, const QuadElem& b);
QuadElem operator*(const BigRat& s, QuadElem a);
QuadElem operator/(const QuadElem& a, const QuadElem& b);

void require_same_ctx(const QuadElem& a, const QuadElem& b);

}  // namespace pp3
