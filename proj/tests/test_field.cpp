#include <doctest.h>

#include <random>

#include "pp3/field.hpp"

using namespace pp3;

namespace {

QuadElem random_elem(const FieldCtx& ctx, std::mt19937_64& rng, long span = 40) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, 6);
  return QuadElem(ctx, make_rat(num(rng), den(rng)), make_rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("field context selects the integral basis by d mod 4") {
  CHECK(FieldCtx::make(7).omega == OmegaKind::Half);
  CHECK(FieldCtx::make(7).disc == -7);
  CHECK(FieldCtx::make(5).omega == OmegaKind::Sqrt);
  CHECK(FieldCtx::make(5).disc == -20);
  CHECK(FieldCtx::make(2).disc == -8);
  CHECK_THROWS_AS(FieldCtx::make(1), std::invalid_argument);
  CHECK_THROWS_AS(FieldCtx::make(12), std::invalid_argument);  // 4 | 12
  CHECK_THROWS_AS(FieldCtx::make(18), std::invalid_argument);
}

TEST_CASE("multiplication in the half basis: w^2 = w - 2 for d = 7") {
  FieldCtx ctx = FieldCtx::make(7);
  QuadElem w = QuadElem::omega(ctx);
  CHECK(w * w == QuadElem(ctx, -2, 1));
  QuadElem one(ctx, 1);
  CHECK((QuadElem(ctx, 1, 1) * QuadElem(ctx, 1, -1)) == QuadElem(ctx, 3, -1));
  QuadElem e(ctx, BigRat(3, 2), BigRat(-5, 7));
  CHECK(e * one == e);
}

TEST_CASE("norms over d = 7") {
  FieldCtx ctx = FieldCtx::make(7);
  CHECK(QuadElem::omega(ctx).norm() == 2);
  CHECK(QuadElem(ctx, 1).norm() == 1);
  // sqrt(-7) = 2w - 1
  QuadElem root = QuadElem::sqrt_minus_d(ctx);
  CHECK(root == QuadElem(ctx, -1, 2));
  CHECK(root.norm() == 7);
}

TEST_CASE("integrality is detected through trace and norm") {
  FieldCtx ctx = FieldCtx::make(7);
  CHECK(QuadElem::omega(ctx).is_integral());
  CHECK_FALSE(QuadElem(ctx, BigRat(1, 2)).is_integral());
  // (1+sqrt(-7))/2 = w integral, (1+sqrt(-7))/3 not (trace 2/3)
  CHECK(QuadElem::from_sqrt_coords(ctx, BigRat(1, 2), BigRat(1, 2)) == QuadElem::omega(ctx));
  QuadElem third = QuadElem::from_sqrt_coords(ctx, BigRat(1, 3), BigRat(1, 3));
  CHECK(third.trace() == BigRat(2, 3));
  CHECK_FALSE(third.is_integral());
}

TEST_CASE("norm is multiplicative and conjugation is a ring involution") {
  std::mt19937_64 rng(20240811);
  for (long d : {7L, 5L, 19L, 43L}) {
    FieldCtx ctx = FieldCtx::make(d);
    for (int i = 0; i < 250; ++i) {
      QuadElem e1 = random_elem(ctx, rng);
      QuadElem e2 = random_elem(ctx, rng);
      CHECK((e1 * e2).norm() == e1.norm() * e2.norm());
      CHECK(e1.conj().conj() == e1);
      CHECK((e1 * e2).conj() == e1.conj() * e2.conj());
      CHECK((e1 + e2).conj() == e1.conj() + e2.conj());
      CHECK(e1 * e1.conj() == QuadElem(ctx, e1.norm()));
      if (!e1.is_zero()) {
        CHECK(e1 * e1.inverse() == QuadElem(ctx, 1));
        CHECK((e1.norm() == 0) == e1.is_zero());
      }
    }
  }
}

TEST_CASE("integral elements are closed under sum and product") {
  std::mt19937_64 rng(7);
  FieldCtx ctx = FieldCtx::make(19);
  std::uniform_int_distribution<long> num(-30, 30);
  for (int i = 0; i < 200; ++i) {
    QuadElem e1(ctx, num(rng), num(rng));
    QuadElem e2(ctx, num(rng), num(rng));
    CHECK(e1.is_integral());
    CHECK((e1 + e2).is_integral());
    CHECK((e1 * e2).is_integral());
  }
}

TEST_CASE("element parsing and printing") {
  FieldCtx ctx = FieldCtx::make(7);
  CHECK(QuadElem::parse(ctx, "-9") == QuadElem(ctx, -9));
  CHECK(QuadElem::parse(ctx, "1+2*w") == QuadElem(ctx, 1, 2));
  CHECK(QuadElem::parse(ctx, "w") == QuadElem::omega(ctx));
  CHECK(QuadElem::parse(ctx, "-w") == -QuadElem::omega(ctx));
  CHECK(QuadElem::parse(ctx, "3/2 - 5/7*w") == QuadElem(ctx, BigRat(3, 2), BigRat(-5, 7)));
  CHECK(QuadElem::parse(ctx, "s") == QuadElem::sqrt_minus_d(ctx));
  CHECK(QuadElem::parse(ctx, "1+2*s") == QuadElem(ctx, -1, 4));
  CHECK_THROWS_AS(QuadElem::parse(ctx, "1.5"), std::invalid_argument);
  CHECK_THROWS_AS(QuadElem::parse(ctx, "1/0"), std::invalid_argument);
  CHECK_THROWS_AS(QuadElem::parse(ctx, ""), std::invalid_argument);

  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    QuadElem e = random_elem(ctx, rng);
    CHECK(QuadElem::parse(ctx, e.to_string()) == e);
  }
}

TEST_CASE("operations on mismatched contexts are rejected") {
  QuadElem a(FieldCtx::make(7), 1);
  QuadElem b(FieldCtx::make(19), 1);
  CHECK_THROWS_AS(a * b, std::domain_error);
  CHECK_THROWS_AS(a + b, std::domain_error);
}
