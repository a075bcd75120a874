#include <catch2/catch_amalgamated.hpp>

#include "equicobar/simplicial_coalgebra.hpp"

using namespace eqc;

static GSimplicialSet swap_wedge(int D = 4) {
  auto g = FiniteGroup::cyclic(2);
  GSimplicialSet y(model_wedge_s1_s1(D), g);
  y.set_action(1, 1, 0, 1);
  y.set_action(1, 1, 1, 0);
  y.validate();
  return y;
}

// the F_2-form of F_4[{s,t} with the swap]: basis v1 = s+t, v2 = g s + g^2 t
static Coalgebra<GF> descent_form_f2() {
  GF::Ctx f2(2, 1);
  Coalgebra<GF> c;
  c.ctx = f2;
  c.basis = {"v1", "v2"};
  c.delta.resize(2);
  c.delta[0] = {{0, 0, f2.one()}, {0, 1, f2.one()}, {1, 0, f2.one()}};
  c.delta[1] = {{0, 0, f2.one()}, {1, 1, f2.one()}};
  c.counit = {f2.zero(), f2.one()};
  c.require_valid("descent form");
  return c;
}

TEST_CASE("chains of corpus models are valid coalgebras with stated dimensions") {
  GF::Ctx f2(2, 1);
  auto s1 = chains<GF>(model_s1(4), f2);
  s1.sc.require_valid("chains S1");
  CHECK(s1.sc.dim(1) == 2);
  CHECK(s1.sc.deg[1].delta[0].size() == 1);  // diagonal

  Rational::Ctx q;
  auto pt = chains<Rational>(model_point(4), q);
  pt.sc.require_valid("chains point");
  for (int n = 0; n <= 4; ++n) CHECK(pt.sc.dim(n) == 1);

  auto rp2 = chains<GF>(model_rp2(4), f2);
  rp2.sc.require_valid("chains RP2");
  CHECK(rp2.sc.dim(2) == 7);  // 2 nondegenerate + 4 degenerate edges + 1 vertex word
}

TEST_CASE("a non-cocommutative coproduct is rejected") {
  GF::Ctx f2(2, 1);
  Coalgebra<GF> c;
  c.ctx = f2;
  c.basis = {"a", "b"};
  c.delta.resize(2);
  c.delta[0] = {{0, 0, f2.one()}};
  c.delta[1] = {{0, 1, f2.one()}};  // not symmetric, not counital
  c.counit = {f2.one(), f2.zero()};
  CHECK(c.check().has_value());
}

TEST_CASE("group-likes of a diagonal coalgebra are exactly the basis") {
  GF::Ctx f4(2, 2);
  auto c = Coalgebra<GF>::diagonal(f4, {"x", "y", "z"});
  auto gl = grouplikes(c);
  CHECK(gl.stats.method == "diagonal");
  CHECK(gl.elements.size() == 3);
  for (auto& v : gl.elements) CHECK(c.is_grouplike(v));
}

TEST_CASE("single group-like span") {
  Rational::Ctx q;
  auto c = Coalgebra<Rational>::diagonal(q, {"g"});
  auto gl = grouplikes(c);
  CHECK(gl.elements.size() == 1);
}

TEST_CASE("descent form has no group-likes over F_2 but two over F_4") {
  auto c2 = descent_form_f2();
  auto gl2 = grouplikes(c2);
  CHECK(gl2.stats.complete);
  CHECK(gl2.elements.empty());

  // base change of scalars to F_4 (coefficients 0/1 persist)
  GF::Ctx f4(2, 2);
  Coalgebra<GF> c4;
  c4.ctx = f4;
  c4.basis = c2.basis;
  c4.delta.resize(2);
  for (int i = 0; i < 2; ++i)
    for (auto& [j, k, coef] : c2.delta[i])
      c4.delta[i].emplace_back(j, k, f4.from_int(long(coef.to_int())));
  for (auto& e : c2.counit) c4.counit.push_back(f4.from_int(long(e.to_int())));
  c4.require_valid("descent form over F4");
  auto gl4 = grouplikes(c4);
  CHECK(gl4.elements.size() == 2);

  // the brute-force oracle and the character search agree on both fields
  auto brute2 = coalgdetail::brute_force_grouplikes(c2, 1u << 20);
  REQUIRE(brute2.has_value());
  auto chars2 = coalgdetail::character_grouplikes(c2);
  CHECK(chars2.stats.complete);
  CHECK(brute2->size() == chars2.elements.size());
  auto brute4 = coalgdetail::brute_force_grouplikes(c4, 1u << 20);
  REQUIRE(brute4.has_value());
  auto chars4 = coalgdetail::character_grouplikes(c4);
  CHECK(chars4.stats.complete);
  CHECK(chars4.elements.size() == 2);
  CHECK(brute4->size() == 2);
}

template <class Ctx>
static void conjugated_diagonal_roundtrip(Ctx ctx, long order, uint64_t seed, int dim) {
  using F = typename Ctx::Elem;
  Rng rng(seed);
  auto rnd = [&]() {
    if constexpr (std::is_same_v<Ctx, Rational::Ctx>) {
      return Rational(long(rng.below(5)) - 2, 1 + long(rng.below(3)));
    } else {
      return ctx.from_code(rng.below(uint64_t(order)));
    }
  };
  // random invertible P
  Matrix<F> p(dim, dim, ctx);
  while (true) {
    p = Matrix<F>(dim, dim, ctx);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) p.add_entry(i, j, rnd());
    if (rank(p) == dim) break;
  }
  auto pinv = *solve(p, Matrix<F>::identity(dim, ctx));
  // conjugate the diagonal coalgebra: e'_i has Delta' = (P (x) P) Delta P^-1
  std::vector<std::string> names;
  for (int i = 0; i < dim; ++i) names.push_back("d" + std::to_string(i));
  auto diag = Coalgebra<F>::diagonal(ctx, names);
  Coalgebra<F> c;
  c.ctx = ctx;
  c.basis = names;
  c.delta.resize(dim);
  c.counit.resize(dim, ctx.zero());
  Matrix<F> dm = p.kron(p) * diag.delta_matrix() * pinv;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        F coef = dm.at(j * dim + k, i);
        if (!coef.is_zero()) c.delta[i].emplace_back(j, k, coef);
      }
  for (int i = 0; i < dim; ++i) {
    F acc = ctx.zero();
    for (int r = 0; r < dim; ++r) acc = acc + diag.counit[r] * pinv.at(r, i);
    c.counit[i] = acc;
  }
  c.require_valid("conjugated diagonal");
  auto gl = grouplikes(c);
  CHECK(gl.stats.complete);
  REQUIRE(gl.elements.size() == size_t(dim));  // exactly the P-images of the basis
  for (auto& v : gl.elements) CHECK(c.is_grouplike(v));
  // group-likes are linearly independent
  Matrix<F> m = Matrix<F>::from_columns(gl.elements, dim, ctx);
  CHECK(rank(m) == dim);
}

TEST_CASE("conjugated diagonal coalgebras: the character search finds all points") {
  conjugated_diagonal_roundtrip(GF::Ctx(2, 1), 2, 101, 3);
  conjugated_diagonal_roundtrip(GF::Ctx(5, 1), 5, 102, 3);
  conjugated_diagonal_roundtrip(GF::Ctx(2, 2), 4, 103, 2);
  conjugated_diagonal_roundtrip(Rational::Ctx{}, 0, 104, 3);
}

TEST_CASE("largest subcoalgebra: full space, zero, and the swap invariants") {
  GF::Ctx f2(2, 1);
  auto ch = chains<GF>(model_wedge_s1_s1(4), f2);
  auto& c1 = ch.sc.deg[1];  // basis: s0.*, a, b (order from enumeration)
  // W = C -> C
  auto full = largest_subcoalgebra(c1, Matrix<GF>::identity(3, f2));
  CHECK(full.inclusion.cols() == 3);
  // W = 0 -> 0
  auto zero = largest_subcoalgebra(c1, Matrix<GF>(3, 0, f2));
  CHECK(zero.inclusion.cols() == 0);
  // W = span{s0.*, a+b}: one iteration kills a+b
  int ia = ch.pair_index(1, SPair{DegWord{}, *model_wedge_s1_s1(4).find(1, "a")});
  int ib = ch.pair_index(1, SPair{DegWord{}, *model_wedge_s1_s1(4).find(1, "b")});
  int is = 3 - ia - ib;
  Matrix<GF> w(3, 2, f2);
  w.add_entry(is, 0, f2.one());
  w.add_entry(ia, 1, f2.one());
  w.add_entry(ib, 1, f2.one());
  auto sub = largest_subcoalgebra(c1, w);
  CHECK(sub.inclusion.cols() == 1);
  CHECK(!sub.inclusion.at(is, 0).is_zero());
}

TEST_CASE("largest subcoalgebra is idempotent and monotone") {
  GF::Ctx f3(3, 1);
  auto ch = chains<GF>(model_rp2(3), f3);
  auto& c = ch.sc.deg[2];
  Rng rng(55);
  for (int iter = 0; iter < 10; ++iter) {
    Matrix<GF> w(c.dim(), 3, f3);
    for (int t = 0; t < 8; ++t)
      w.add_entry(int(rng.below(uint64_t(c.dim()))), int(rng.below(3)), f3.from_int(1 + long(rng.below(2))));
    Matrix<GF> v = largest_subcoalgebra_basis(c, column_space(w));
    Matrix<GF> v2 = largest_subcoalgebra_basis(c, v);
    CHECK(v2.cols() == v.cols());  // idempotent
    CHECK(subspace_contains(column_space(w), v));
    // monotone: enlarging W cannot shrink the result
    Matrix<GF> bigger = w.hstack(Matrix<GF>::identity(c.dim(), f3));
    Matrix<GF> vb = largest_subcoalgebra_basis(c, column_space(bigger));
    CHECK(vb.cols() >= v.cols());
    CHECK(subspace_contains(vb, v));
  }
}

TEST_CASE("points of chains recovers the space (unit check)") {
  GF::Ctx f2(2, 1), f3(3, 1);
  Rational::Ctx q;
  for (auto nm : {"point", "S1", "RP2", "wedge_S1_S1"}) {
    auto x = standard_model(nm, 3);
    CHECK(unit_check<GF>(x, f2).ok);
    CHECK(unit_check<GF>(x, f3).ok);
    CHECK(unit_check<Rational>(x, q).ok);
  }
}

TEST_CASE("points of chains of the point is the point") {
  Rational::Ctx q;
  auto ch = chains<Rational>(model_point(3), q);
  auto pts = points(ch.sc);
  CHECK(pts.ex.sset.total_nondegenerate() == 1);
  CHECK(pts.ex.sset.reduced());
}

TEST_CASE("naturality of the unit on a corpus map") {
  GF::Ctx f2(2, 1);
  auto w = model_wedge_s1_s1(3);
  auto s1 = model_s1(3);
  SimplicialMap f(&w, &s1);
  f.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  f.set_image({1, 0}, SPair{DegWord{}, SimplexId{1, 0}});
  f.set_image({1, 1}, SPair{DegWord{}, SimplexId{1, 0}});
  f.require_valid("collapse");

  auto cx = chains<GF>(w, f2);
  auto cy = chains<GF>(s1, f2);
  auto px = points(cx.sc);
  auto py = points(cy.sc);
  // P(F[f]) on group-likes
  auto apply_pf = [&](int n, int e) {
    // matrix of F[f] in degree n applied to the e-th group-like of C_X
    auto& v = px.grouplikes[n].elements[e];
    std::vector<GF> img(cy.sc.dim(n), f2.zero());
    for (int i = 0; i < cx.sc.dim(n); ++i) {
      if (v[i].is_zero()) continue;
      SPair target = f.apply(cx.pairs[n][i]);
      img[cy.pair_index(n, target)] = img[cy.pair_index(n, target)] + v[i];
    }
    int idx = -1;
    for (int t = 0; t < int(py.grouplikes[n].elements.size()); ++t)
      if (py.grouplikes[n].elements[t] == img) idx = t;
    REQUIRE(idx >= 0);
    return py.ex.expr[n][idx];
  };
  // both composites agree on every simplex pair
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i < int(cx.pairs[n].size()); ++i) {
      // eta_X then P(F[f])
      std::vector<GF> ind(cx.sc.dim(n), f2.zero());
      ind[i] = f2.one();
      int e = -1;
      for (int t = 0; t < int(px.grouplikes[n].elements.size()); ++t)
        if (px.grouplikes[n].elements[t] == ind) e = t;
      REQUIRE(e >= 0);
      SPair lhs = apply_pf(n, e);
      // f then eta_Y
      SPair fp = f.apply(cx.pairs[n][i]);
      std::vector<GF> ind2(cy.sc.dim(n), f2.zero());
      ind2[cy.pair_index(n, fp)] = f2.one();
      int e2 = -1;
      for (int t = 0; t < int(py.grouplikes[n].elements.size()); ++t)
        if (py.grouplikes[n].elements[t] == ind2) e2 = t;
      REQUIRE(e2 >= 0);
      SPair rhs = py.ex.expr[n][e2];
      CHECK(lhs == rhs);
    }
}

TEST_CASE("triangle identity: counit after F[eta] is the identity on chains") {
  GF::Ctx f3(3, 1);
  auto x = model_rp2(3);
  auto cx = chains<GF>(x, f3);
  auto px = points(cx.sc);
  // chains of the points space
  auto cp = chains<GF>(px.ex.sset, f3);
  // pair of P |-> its group-like vector in C: invert expr, extend by words
  std::map<SPair, std::vector<GF>> vec;
  for (int n = 0; n <= 3; ++n)
    for (int e = 0; e < int(px.grouplikes[n].elements.size()); ++e)
      vec[px.ex.expr[n][e]] = px.grouplikes[n].elements[e];
  for (int n = 0; n <= 3; ++n)
    for (int i = 0; i < int(cx.pairs[n].size()); ++i) {
      // F[eta](pair) = the expr pair; counit-of-adjunction returns its vector
      std::vector<GF> ind(cx.sc.dim(n), f3.zero());
      ind[i] = f3.one();
      int e = -1;
      for (int t = 0; t < int(px.grouplikes[n].elements.size()); ++t)
        if (px.grouplikes[n].elements[t] == ind) e = t;
      REQUIRE(e >= 0);
      auto it = vec.find(px.ex.expr[n][e]);
      REQUIRE(it != vec.end());
      CHECK(it->second == ind);
    }
  (void)cp;
}

TEST_CASE("coalgebra fixed points of the swap wedge collapse to the point") {
  auto y = swap_wedge(3);
  auto sl = subgroups(y.group());
  for (auto ctx_run : {0, 1}) {
    if (ctx_run == 0) {
      GF::Ctx f2(2, 1);
      auto gsc = chains_equivariant<GF>(y, f2);
      gsc.gsc.require_valid("equivariant chains");
      auto cfp = coalg_fixed_points(gsc.gsc, sl.all[1]);
      auto chpt = chains<GF>(model_point(3), f2);
      for (int n = 0; n <= 3; ++n) CHECK(cfp.sc.dim(n) == chpt.sc.dim(n));
      // trivial subgroup: everything survives
      auto cfe = coalg_fixed_points(gsc.gsc, sl.all[0]);
      for (int n = 0; n <= 3; ++n) CHECK(cfe.sc.dim(n) == gsc.gsc.sc.dim(n));
    } else {
      GF::Ctx f3(3, 1);
      auto gsc = chains_equivariant<GF>(y, f3);
      auto cfp = coalg_fixed_points(gsc.gsc, sl.all[1]);
      for (int n = 0; n <= 3; ++n) CHECK(cfp.sc.dim(n) == 1);
    }
  }
}

TEST_CASE("points of coalgebra fixed points match simplicial fixed points") {
  auto y = swap_wedge(3);
  auto sl = subgroups(y.group());
  CHECK(coalg_fixed_matches_fixed_points<GF>(y, sl.all[1], GF::Ctx(2, 1)));
  CHECK(coalg_fixed_matches_fixed_points<GF>(y, sl.all[1], GF::Ctx(3, 1)));
  CHECK(coalg_fixed_matches_fixed_points<GF>(y, sl.all[0], GF::Ctx(2, 1)));
  // a trivial action too
  auto triv = GSimplicialSet::trivial_action(model_rp2(3), FiniteGroup::cyclic(2));
  CHECK(coalg_fixed_matches_fixed_points<GF>(triv, sl.all[1], GF::Ctx(2, 1)));
}

TEST_CASE("wedge_sum of chains matches chains of the wedge") {
  GF::Ctx f2(2, 1);
  auto s1 = model_s1(3);
  auto cs1 = chains<GF>(s1, f2);
  auto ws = wedge_sum<GF>({&cs1.sc, &cs1.sc});
  auto cw = chains<GF>(model_wedge_s1_s1(3), f2);
  for (int n = 0; n <= 3; ++n) CHECK(ws.sc.dim(n) == cw.sc.dim(n));
  CHECK(ws.sc.dim(1) == 3);  // 2 + 2 - 1

  // unit object: wedge_sum(C, chains(point)) has the dimensions of C
  auto cpt = chains<GF>(model_point(3), f2);
  auto wu = wedge_sum<GF>({&cs1.sc, &cpt.sc});
  for (int n = 0; n <= 3; ++n) CHECK(wu.sc.dim(n) == cs1.sc.dim(n));
}

TEST_CASE("the equivariant chains square holds for orbit wedges") {
  auto g2 = FiniteGroup::cyclic(2);
  auto sl2 = subgroups(g2);
  for (auto& h : sl2.all) {
    auto cs = coset_space(g2, h);
    CHECK(equivariant_chains_square_check<GF>(cs.gset, model_s1(3), g2, GF::Ctx(2, 1)));
    CHECK(equivariant_chains_square_check<Rational>(cs.gset, model_rp2(3), g2, Rational::Ctx{}));
  }
  auto s3 = FiniteGroup::symmetric(3);
  auto sl3 = subgroups(s3);
  CHECK(equivariant_chains_square_check<GF>(coset_space(s3, sl3.all[1]).gset, model_s1(3), s3,
                                            GF::Ctx(3, 1)));
}

TEST_CASE("the equivariant unit recovers a G-space with its action") {
  GF::Ctx f2(2, 1);
  CHECK(equivariant_unit_check<GF>(swap_wedge(3), f2));
  auto triv = GSimplicialSet::trivial_action(model_rp2(3), FiniteGroup::cyclic(3));
  CHECK(equivariant_unit_check<GF>(triv, f2));
}
