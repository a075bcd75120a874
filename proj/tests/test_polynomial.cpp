#include <catch2/catch_amalgamated.hpp>

#include "equicobar/polynomial.hpp"

using namespace eqc;

template <class F>
static Poly<F> expand(const FactorResult<F>& r, typename F::Ctx ctx) {
  Poly<F> acc = Poly<F>::constant(ctx, r.unit);
  for (auto& [f, m] : r.irreducible)
    for (int i = 0; i < m; ++i) acc = acc * f;
  if (r.remainder) acc = acc * *r.remainder;
  return acc;
}

TEST_CASE("x^2 + x over F_2 splits as x (x+1)") {
  GF::Ctx f2(2, 1);
  Poly<GF> f(f2, {f2.zero(), f2.one(), f2.one()});
  auto r = poly_factor(f);
  CHECK(r.complete);
  REQUIRE(r.irreducible.size() == 2);
  CHECK(r.irreducible[0].first.degree() == 1);
  CHECK(r.irreducible[1].first.degree() == 1);
  CHECK(expand(r, f2) == f);
}

TEST_CASE("x^2 + x + 1 is irreducible over F_2") {
  GF::Ctx f2(2, 1);
  Poly<GF> f(f2, {f2.one(), f2.one(), f2.one()});
  auto r = poly_factor(f);
  CHECK(r.complete);
  REQUIRE(r.irreducible.size() == 1);
  CHECK(r.irreducible[0].first == f);
}

TEST_CASE("x^2 + x + 1 splits over F_4 at the cube roots of unity") {
  GF::Ctx f4(2, 2);
  GF t = f4.gen();
  Poly<GF> f(f4, {f4.one(), f4.one(), f4.one()});
  auto r = poly_factor(f);
  CHECK(r.complete);
  REQUIRE(r.irreducible.size() == 2);
  // roots are t and t+1
  std::vector<GF> roots;
  for (auto& [g, m] : r.irreducible) {
    CHECK(m == 1);
    REQUIRE(g.degree() == 1);
    roots.push_back(-g.coeff(0));
  }
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<GF>{t, t + f4.one()});
}

TEST_CASE("re-expanding finite-field factorizations reproduces the input") {
  for (auto [p, k] : {std::pair(2u, 1u), std::pair(2u, 2u), std::pair(5u, 1u), std::pair(3u, 2u)}) {
    GF::Ctx ctx(p, k);
    Rng rng(1000 + p * 10 + k);
    for (int iter = 0; iter < 40; ++iter) {
      int deg = 1 + int(rng.below(8));
      std::vector<GF> c;
      for (int i = 0; i <= deg; ++i) c.push_back(ctx.from_code(rng.below(ctx.s->q)));
      Poly<GF> f(ctx, std::move(c));
      if (f.degree() < 1) continue;
      auto r = poly_factor(f);
      CHECK(r.complete);
      CHECK(expand(r, ctx) == f);
      for (auto& [g, m] : r.irreducible) {
        (void)m;
        if (g.degree() >= 2) {
          // no roots in the ground field (complete check for degrees 2, 3)
          for (uint64_t v = 0; v < ctx.s->q; ++v) CHECK(!g.eval(ctx.from_code(v)).is_zero());
        }
      }
    }
  }
}

TEST_CASE("rational roots and low-degree factorization over Q") {
  Rational::Ctx q;
  auto X = Poly<Rational>::x(q);
  auto c = [&](long n, long d) { return Poly<Rational>::constant(q, Rational(n, d)); };

  // (x - 1/2)(x^2 + 1)
  Poly<Rational> f = (X - c(1, 2)) * (X * X + c(1, 1));
  auto r = poly_factor(f);
  CHECK(r.complete);
  REQUIRE(r.irreducible.size() == 2);
  CHECK(expand(r, q) == f);

  // x^4 + 1 irreducible
  auto r2 = poly_factor(X * X * X * X + c(1, 1));
  CHECK(r2.complete);
  REQUIRE(r2.irreducible.size() == 1);
  CHECK(r2.irreducible[0].first.degree() == 4);

  // x^4 + 4 = (x^2+2x+2)(x^2-2x+2)
  auto r3 = poly_factor(X * X * X * X + c(4, 1));
  CHECK(r3.complete);
  REQUIRE(r3.irreducible.size() == 2);
  CHECK(expand(r3, q) == X * X * X * X + c(4, 1));

  // x^4 + x^2 + 1 = (x^2+x+1)(x^2-x+1)
  Poly<Rational> f4 = X * X * X * X + X * X + c(1, 1);
  auto r4 = poly_factor(f4);
  CHECK(r4.complete);
  REQUIRE(r4.irreducible.size() == 2);
  CHECK(expand(r4, q) == f4);

  // repeated factor: (x-2)^2 (x+3)
  Poly<Rational> f5 = (X - c(2, 1)) * (X - c(2, 1)) * (X + c(3, 1));
  auto r5 = poly_factor(f5);
  CHECK(r5.complete);
  CHECK(expand(r5, q) == f5);
  bool saw_mult2 = false;
  for (auto& [g, m] : r5.irreducible)
    if (m == 2 && g.degree() == 1) saw_mult2 = true;
  CHECK(saw_mult2);
}

TEST_CASE("unsupported rational cases come back incomplete, never wrong") {
  Rational::Ctx q;
  auto X = Poly<Rational>::x(q);
  auto c = [&](long n) { return Poly<Rational>::constant(q, Rational(n)); };
  // x^5 - x + 1: irreducible quintic; out of the supported range
  Poly<Rational> f = X * X * X * X * X - X + c(1);
  auto r = poly_factor(f);
  CHECK(!r.complete);
  REQUIRE(r.remainder.has_value());
  CHECK(expand(r, q) == f);
}

TEST_CASE("minimal polynomials") {
  GF::Ctx f2(2, 1);
  // companion matrix of x^2 + x + 1 over F_2
  Matrix<GF> comp(2, 2, f2);
  comp.add_entry(0, 1, f2.one());
  comp.add_entry(1, 0, f2.one());
  comp.add_entry(1, 1, f2.one());
  auto mp = min_poly(comp);
  CHECK(mp == Poly<GF>(f2, {f2.one(), f2.one(), f2.one()}));

  Rational::Ctx q;
  auto id = Matrix<Rational>::identity(3, q);
  CHECK(min_poly(id) == Poly<Rational>(q, {-q.one(), q.one()}));

  Matrix<Rational> nil(2, 2, q);
  nil.add_entry(0, 1, q.one());
  CHECK(min_poly(nil) == Poly<Rational>(q, {q.zero(), q.zero(), q.one()}));
}
