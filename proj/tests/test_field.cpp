#include <catch2/catch_amalgamated.hpp>

#include "equicobar/field.hpp"

using namespace eqc;

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a(1, 3), b(1, 6);
  CHECK((a + b) == Rational(1, 2));
  CHECK((a * b) == Rational(1, 18));
  CHECK((a - a).is_zero());
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(7).inv() == Rational(1, 7));
  CHECK_THROWS_AS(Rational().inv(), FieldError);
}

TEST_CASE("defining polynomials match the fixed table") {
  auto f4 = FqSpec::get(2, 2);
  CHECK(f4->modulus == std::vector<uint32_t>{1, 1, 1});  // t^2 + t + 1
  auto f9 = FqSpec::get(3, 2);
  CHECK(f9->modulus == std::vector<uint32_t>{1, 0, 1});  // u^2 + 1
  auto f8 = FqSpec::get(2, 3);
  CHECK(f8->q == 8);
  CHECK(fpdetail::is_irreducible(f8->modulus, 2));
  CHECK_THROWS_AS(FqSpec::get(2, 17), FieldError);  // 2^17 > 2^16
  CHECK_THROWS_AS(FqSpec::get(4, 1), FieldError);   // not prime
}

TEST_CASE("F4 multiplication: t * t = t + 1") {
  GF::Ctx f4(2, 2);
  GF t = f4.gen();
  CHECK((t * t) == (t + f4.one()));
  CHECK((t * t * t).is_one());  // t generates the cube roots of unity
}

TEST_CASE("F5 inverse of 2 is 3") {
  GF::Ctx f5(5, 1);
  CHECK(f5.from_int(2).inv() == f5.from_int(3));
  CHECK_THROWS_AS(f5.zero().inv(), FieldError);
}

TEST_CASE("mixed field specs are rejected") {
  GF::Ctx f4(2, 2), f2(2, 1);
  CHECK_THROWS_AS(f4.one() + f2.one(), FieldError);
}

TEST_CASE("frobenius on F4 and F9") {
  GF::Ctx f4(2, 2);
  GF t = f4.gen();
  CHECK(frobenius(t, 2) == t + f4.one());  // t^2 = t + 1
  CHECK(frobenius(f4.one(), 2).is_one());
  GF::Ctx f9(3, 2);
  GF u = f9.gen();
  CHECK(frobenius(u, 3) == -u);  // u^3 = u * u^2 = -u
}

template <class Ctx>
static void field_axioms(const Ctx& ctx, long order_hint, uint64_t seed) {
  Rng rng(seed);
  auto rnd = [&]() {
    if constexpr (std::is_same_v<Ctx, Rational::Ctx>) {
      long n = long(rng.below(41)) - 20;
      long d = 1 + long(rng.below(12));
      return Rational(n, d);
    } else {
      return ctx.from_code(rng.below(uint64_t(order_hint)));
    }
  };
  for (int iter = 0; iter < 200; ++iter) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + (-a)).is_zero());
    if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("field axioms hold on random samples") {
  field_axioms(GF::Ctx(2, 1), 2, 1);
  field_axioms(GF::Ctx(2, 2), 4, 2);
  field_axioms(GF::Ctx(5, 1), 5, 3);
  field_axioms(GF::Ctx(3, 2), 9, 4);
  field_axioms(GF::Ctx(2, 4), 16, 5);
  field_axioms(Rational::Ctx{}, 0, 6);
}

TEST_CASE("frobenius is a field automorphism of order k") {
  for (auto [p, k] : {std::pair(2u, 2u), std::pair(2u, 4u), std::pair(3u, 2u)}) {
    GF::Ctx ctx(p, k);
    Rng rng(7 * p + k);
    uint64_t q = p;
    for (int iter = 0; iter < 100; ++iter) {
      GF a = ctx.from_code(rng.below(ctx.s->q));
      GF b = ctx.from_code(rng.below(ctx.s->q));
      CHECK(frobenius(a + b, q) == frobenius(a, q) + frobenius(b, q));
      CHECK(frobenius(a * b, q) == frobenius(a, q) * frobenius(b, q));
      GF it = a;
      for (uint32_t i = 0; i < k; ++i) it = frobenius(it, q);
      CHECK(it == a);
    }
  }
}

TEST_CASE("frobenius fixes exactly the subfield F_q") {
  GF::Ctx f16(2, 4);
  int fixed = 0;
  for (uint64_t v = 0; v < 16; ++v) {
    GF a = f16.from_code(v);
    if (frobenius(a, 4) == a) ++fixed;
  }
  CHECK(fixed == 4);  // the copy of F_4 inside F_16
  CHECK_THROWS_AS(frobenius(f16.one(), 8), FieldError);  // F_8 is not a subfield of F_16
}
