#include "pp3/field.hpp"

#include <sstream>

namespace pp3 {

FieldCtx FieldCtx::make(long d) {
  if (d < 2) throw std::invalid_argument("field parameter d must be >= 2");
  for (long q = 2; q * q <= d; ++q) {
    if (d % (q * q) == 0) throw std::invalid_argument("field parameter d must be square-free");
  }
  FieldCtx ctx;
  ctx.d = d;
  if (d % 4 == 3) {
    ctx.omega = OmegaKind::Half;
    ctx.disc = -d;
  } else {
    ctx.omega = OmegaKind::Sqrt;
    ctx.disc = -4 * d;
  }
  return ctx;
}

std::string FieldCtx::omega_description() const {
  std::ostringstream os;
  if (omega == OmegaKind::Sqrt)
    os << "w = sqrt(-" << d << ")";
  else
    os << "w = (1+sqrt(-" << d << "))/2";
  return os.str();
}

void require_same_ctx(const QuadElem& a, const QuadElem& b) {
  if (!(a.ctx() == b.ctx())) throw std::domain_error("mismatched field contexts");
}

QuadElem QuadElem::from_sqrt_coords(const FieldCtx& ctx, const BigRat& u, const BigRat& v) {
  if (ctx.omega == OmegaKind::Sqrt) return QuadElem(ctx, u, v);
  // sqrt(-d) = 2w - 1
  return QuadElem(ctx, u - v, 2 * v);
}

QuadElem QuadElem::sqrt_minus_d(const FieldCtx& ctx) {
  return from_sqrt_coords(ctx, BigRat(0), BigRat(1));
}

QuadElem QuadElem::conj() const {
  if (ctx_.omega == OmegaKind::Sqrt) return QuadElem(ctx_, x_, -y_);
  return QuadElem(ctx_, x_ + y_, -y_);  // conj(w) = 1 - w
}

BigRat QuadElem::trace() const {
  if (ctx_.omega == OmegaKind::Sqrt) return 2 * x_;
  return 2 * x_ + y_;
}

BigRat QuadElem::norm() const {
  if (ctx_.omega == OmegaKind::Sqrt) return x_ * x_ + BigRat(ctx_.d) * y_ * y_;
  return x_ * x_ + x_ * y_ + BigRat(ctx_.omega_c0()) * y_ * y_;
}

bool QuadElem::is_integral() const { return rat_is_integer(trace()) && rat_is_integer(norm()); }

bool QuadElem::is_unit() const { return is_integral() && norm() == 1; }

QuadElem& QuadElem::operator+=(const QuadElem& o) {
  require_same_ctx(*this, o);
  x_ += o.x_;
  y_ += o.y_;
  return *this;
}

QuadElem& QuadElem::operator-=(const QuadElem& o) {
  require_same_ctx(*this, o);
  x_ -= o.x_;
  y_ -= o.y_;
  return *this;
}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  require_same_ctx(*this, o);
  // w^2 = -d (Sqrt), w^2 = w - (1+d)/4 (Half)
  BigRat cross = x_ * o.y_ + y_ * o.x_;
  BigRat ww = y_ * o.y_;
  if (ctx_.omega == OmegaKind::Sqrt) {
    x_ = x_ * o.x_ - BigRat(ctx_.d) * ww;
    y_ = cross;
  } else {
    x_ = x_ * o.x_ - BigRat(ctx_.omega_c0()) * ww;
    y_ = cross + ww;
  }
  return *this;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  BigRat n = norm();
  QuadElem c = conj();
  return QuadElem(ctx_, c.x() / n, c.y() / n);
}

QuadElem QuadElem::pow(unsigned long e) const {
  QuadElem acc(ctx_, 1);
  QuadElem base = *this;
  while (e > 0) {
    if (e & 1UL) acc *= base;
    base *= base;
    e >>= 1UL;
  }
  return acc;
}

QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
QuadElem operator*(const BigRat& s, QuadElem a) {
  return QuadElem(a.ctx(), s * a.x(), s * a.y());
}
QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }

std::string QuadElem::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool wrote = false;
  if (x_ != 0) {
    os << rat_to_string(x_);
    wrote = true;
  }
  if (y_ != 0) {
    if (wrote && y_ > 0) os << "+";
    if (y_ == -1)
      os << "-";
    else if (y_ != 1)
      os << rat_to_string(y_) << "*";
    os << "w";
  }
  return os.str();
}

namespace {

// one signed term: rational, optionally times 'w' or 's'
void apply_term(const FieldCtx& ctx, const std::string& term, QuadElem& acc) {
  if (term.empty()) throw std::invalid_argument("empty term in element literal");
  std::string body = term;
  char sym = 0;
  auto star = body.find('*');
  if (star != std::string::npos) {
    std::string tail = body.substr(star + 1);
    if (tail != "w" && tail != "s")
      throw std::invalid_argument("expected w or s after '*' in \"" + term + "\"");
    sym = tail[0];
    body = body.substr(0, star);
  } else if (!body.empty() && (body.back() == 'w' || body.back() == 's')) {
    sym = body.back();
    body.pop_back();
    if (body == "+" || body.empty()) body = "1";
    else if (body == "-") body = "-1";
    else throw std::invalid_argument("coefficient must be separated by '*' in \"" + term + "\"");
  }
  if (body == "+" || body.empty()) body = "1";
  BigRat coef = rat_from_string(body);
  if (sym == 0)
    acc += QuadElem(ctx, coef);
  else if (sym == 'w')
    acc += QuadElem(ctx, 0, coef);
  else
    acc += coef * QuadElem::sqrt_minus_d(ctx);
}

}  // namespace

QuadElem QuadElem::parse(const FieldCtx& ctx, const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw std::invalid_argument("empty element literal");
  QuadElem acc(ctx);
  size_t start = 0;
  for (size_t i = 1; i <= s.size(); ++i) {
    if (i == s.size() || ((s[i] == '+' || s[i] == '-') && s[i - 1] != '/' && s[i - 1] != '*' &&
                          s[i - 1] != '+' && s[i - 1] != '-')) {
      apply_term(ctx, s.substr(start, i - start), acc);
      start = i;
    }
  }
  return acc;
}

}  // namespace pp3
