#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "equicobar/galois.hpp"

using namespace eqc;

// all G-sets of size <= max_size for a cyclic group of order m, up to iso:
// multisets of orbits whose sizes divide m
static std::vector<SemilinearGSet> all_gsets(int m, int max_size) {
  std::vector<int> divisors;
  for (int d = 1; d <= m; ++d)
    if (m % d == 0) divisors.push_back(d);
  std::vector<SemilinearGSet> out;
  // multisets of divisors with sum in [1, max_size]
  std::function<void(size_t, std::vector<int>&)> rec = [&](size_t i, std::vector<int>& cur) {
    int total = 0;
    for (int v : cur) total += v;
    if (total >= 1) {
      SemilinearGSet s;
      s.size = total;
      int off = 0;
      for (int v : cur) {
        for (int t = 0; t < v; ++t) s.perm.push_back(off + (t + 1) % v);
        off += v;
      }
      s.order = 1;
      for (int v : cur) s.order = std::lcm(s.order, v);
      out.push_back(std::move(s));
    }
    for (size_t j = i; j < divisors.size(); ++j) {
      if (total + divisors[j] > max_size) continue;
      cur.push_back(divisors[j]);
      rec(j, cur);
      cur.pop_back();
    }
  };
  std::vector<int> cur;
  rec(0, cur);
  return out;
}

static const std::vector<FieldExtension>& test_extensions() {
  static std::vector<FieldExtension> exts = {
      FieldExtension::make(2, 1, 2),  // F2 in F4
      FieldExtension::make(2, 1, 3),  // F2 in F8
      FieldExtension::make(3, 1, 2),  // F3 in F9
  };
  return exts;
}

TEST_CASE("field extensions embed compatibly with Frobenius") {
  for (auto& e : test_extensions()) {
    GF::Ctx bc(e.base);
    for (uint64_t v = 0; v < e.base->q; ++v) {
      GF a = bc.from_code(v);
      GF im = e.embed(a);
      CHECK(e.frob(im) == im);  // the embedded base field is fixed
      auto back = e.unembed(im);
      REQUIRE(back.has_value());
      CHECK(*back == a);
    }
    // exactly q elements of the top field are fixed
    GF::Ctx tc(e.top);
    int fixed = 0;
    for (uint64_t v = 0; v < e.top->q; ++v)
      if (e.frob(tc.from_code(v)) == tc.from_code(v)) ++fixed;
    CHECK(fixed == int(e.base->q));
  }
  // an extension with a non-prime base field: F4 in F16
  auto e16 = FieldExtension::make(2, 2, 4);
  GF::Ctx bc(e16.base);
  GF t = bc.gen();
  GF im = e16.embed(t);
  CHECK(e16.frob(im) == im);
  CHECK(e16.embed(t * t) == im * im);
}

TEST_CASE("trivial action: the fixed form is the diagonal coalgebra") {
  auto e = FieldExtension::make(2, 1, 2);
  SemilinearGSet s{3, {0, 1, 2}, 1};
  auto form = galois_fixed_coalgebra(s, e);
  CHECK(form.coalg.dim() == 3);
  auto gl = grouplikes(form.coalg);
  CHECK(gl.elements.size() == 3);  // split form: all points already rational
  CHECK(descent_check(s, e));
}

TEST_CASE("the swap two-set over F2 in F4: the twisted form") {
  auto e = FieldExtension::make(2, 1, 2);
  SemilinearGSet s{2, {1, 0}, 2};
  auto form = galois_fixed_coalgebra(s, e);
  CHECK(form.coalg.dim() == 2);
  // no group-likes over the base field (brute-force oracle)
  auto gl = grouplikes(form.coalg);
  CHECK(gl.stats.complete);
  CHECK(gl.elements.empty());
  // two appear over the extension
  auto pts = points_galois(form.coalg, e);
  CHECK(pts.gset.size == 2);
  CHECK(pts.gset.perm == std::vector<int>{1, 0});  // swapped by Frobenius
  CHECK(descent_check(s, e));
  CHECK(galois_unit_check(s, e));
}

TEST_CASE("the swap two-set over F3 in F9") {
  auto e = FieldExtension::make(3, 1, 2);
  SemilinearGSet s{2, {1, 0}, 2};
  auto form = galois_fixed_coalgebra(s, e);
  CHECK(form.coalg.dim() == 2);
  auto gl = grouplikes(form.coalg);
  CHECK(gl.elements.empty());
  CHECK(descent_check(s, e));
  CHECK(galois_unit_check(s, e));
}

TEST_CASE("descent and the unit across the exhaustive range") {
  for (auto& e : test_extensions()) {
    for (auto& s : all_gsets(e.m, 6)) {
      s.validate(e.m);
      auto form = galois_fixed_coalgebra(s, e);
      CHECK(form.coalg.dim() == s.size);  // dim_{F_q} = |S|
      CHECK(descent_check(s, e));
      CHECK(galois_unit_check(s, e));
      // group-like counts: base <= extension, equality iff the action is trivial
      auto base_gl = grouplikes(form.coalg);
      auto pts = points_galois(form.coalg, e);
      CHECK(base_gl.elements.size() <= size_t(pts.gset.size));
      bool trivial = true;
      for (int i = 0; i < s.size; ++i) trivial = trivial && s.perm[i] == i;
      CHECK((base_gl.elements.size() == size_t(pts.gset.size)) == trivial);
    }
  }
}

TEST_CASE("orbit decomposition gives a block-diagonal descent matrix") {
  auto e = FieldExtension::make(2, 1, 3);
  SemilinearGSet s{4, {1, 2, 0, 3}, 3};  // a 3-cycle and a fixed point
  auto form = galois_fixed_coalgebra(s, e);
  CHECK(form.coalg.dim() == 4);
  CHECK(descent_check(s, e));
  CHECK(galois_unit_check(s, e));
  // the fixed point contributes a group-like already over the base
  auto gl = grouplikes(form.coalg);
  CHECK(gl.elements.size() == 1);
}

TEST_CASE("equivariant descent with a trivial Galois action recovers the plain unit") {
  auto e = FieldExtension::make(2, 1, 2);
  auto g = FiniteGroup::cyclic(2);
  GSimplicialSet y(model_wedge_s1_s1(3), g);
  y.set_action(1, 1, 0, 1);
  y.set_action(1, 1, 1, 0);
  y.validate();
  GaloisSimplicialAction psi;
  psi.perm.resize(4);
  for (int n = 0; n <= 3; ++n) {
    psi.perm[n].resize(y.sset().count(n));
    for (int i = 0; i < y.sset().count(n); ++i) psi.perm[n][i] = i;
  }
  auto rep = equivariant_descent(y, psi, e);
  CHECK(rep.ok);
}

TEST_CASE("equivariant descent with the Galois group swapping wedge summands") {
  auto e = FieldExtension::make(2, 1, 2);
  auto g = FiniteGroup::trivial();
  GSimplicialSet y = GSimplicialSet::trivial_action(model_wedge_s1_s1(3), g);
  GaloisSimplicialAction psi;
  psi.perm.resize(4);
  for (int n = 0; n <= 3; ++n) {
    psi.perm[n].resize(y.sset().count(n));
    for (int i = 0; i < y.sset().count(n); ++i) psi.perm[n][i] = i;
  }
  psi.perm[1] = {1, 0};  // swap the two circles by Frobenius twist
  auto rep = equivariant_descent(y, psi, e);
  CHECK(rep.ok);
}

TEST_CASE("non-commuting actions are rejected") {
  auto e = FieldExtension::make(2, 1, 2);
  auto g = FiniteGroup::cyclic(2);
  // G swaps a and b; psi maps a -> a, b -> b on a three-circle wedge where
  // the G action is the swap on the first two circles only
  auto s1 = model_s1(3);
  auto w3 = wedge({&s1, &s1, &s1}, {"p:", "q:", "r:"});
  GSimplicialSet y(*w3.sset, g);
  y.set_action(1, 1, 0, 1);
  y.set_action(1, 1, 1, 0);
  y.validate();
  GaloisSimplicialAction psi;
  psi.perm.resize(4);
  for (int n = 0; n <= 3; ++n) {
    psi.perm[n].resize(y.sset().count(n));
    for (int i = 0; i < y.sset().count(n); ++i) psi.perm[n][i] = i;
  }
  psi.perm[1] = {0, 2, 1};  // swaps q and r: does not commute with the G swap
  CHECK_THROWS_AS(equivariant_descent(y, psi, e), InputError);
}
