#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "equicobar/models.hpp"

using namespace eqc;

TEST_CASE("degeneracy word normalization is idempotent and canonical") {
  Rng rng(21);
  for (int iter = 0; iter < 400; ++iter) {
    // random application-order sequence of degeneracy indices, valid from dim k
    int k = int(rng.below(4));
    int len = int(rng.below(5));
    DegWord w;
    int dim = k;
    for (int t = 0; t < len; ++t) {
      int i = int(rng.below(uint64_t(dim + 1)));
      w = outer_compose(w, i);  // always normalized by construction
      ++dim;
    }
    CHECK(w.valid_from(k));
    // inserting then re-normalizing the same letters one at a time is stable
    DegWord again;
    std::vector<int> order(w.v.rbegin(), w.v.rend());  // inner to outer = application order
    for (int i : order) again = outer_compose(again, i);
    CHECK(again == w);
  }
}

TEST_CASE("outer and inner composition agree with the simplicial identities") {
  // s_0 s_0 = s_1 s_0 and friends
  DegWord w;
  w = outer_compose(w, 0);   // s_0
  w = outer_compose(w, 0);   // s_0 . s_0
  CHECK(w.v == std::vector<int>{1, 0});
  DegWord u;
  u = inner_compose(u, 0);
  u = inner_compose(u, 0);
  CHECK(u.v == std::vector<int>{1, 0});
}

TEST_CASE("standard models validate") {
  for (auto nm : {"point", "S1", "S2", "S3", "RP2", "T2", "wedge_S1_S1"}) {
    auto x = standard_model(nm, 5);
    CHECK(!x.validate().has_value());
    CHECK(x.reduced());
  }
  auto d2 = model_delta(2, 4);
  CHECK(!d2.validate().has_value());
  auto bd2 = model_delta(2, 4, true);
  CHECK(bd2.count(2) == 0);
  CHECK(bd2.count(1) == 3);
}

TEST_CASE("documented nondegenerate counts") {
  auto s1 = standard_model("S1", 4);
  CHECK(s1.count(0) == 1);
  CHECK(s1.count(1) == 1);
  auto s2 = standard_model("S2", 4);
  CHECK(s2.count(0) == 1);
  CHECK(s2.count(1) == 0);
  CHECK(s2.count(2) == 1);
  auto rp2 = standard_model("RP2", 4);
  CHECK(rp2.count(1) == 2);
  CHECK(rp2.count(2) == 2);
}

TEST_CASE("face referencing an unknown simplex is reported") {
  SimplicialSet z(2, true);
  auto zv = z.add_simplex(0, "*");
  auto ze = z.add_simplex(1, "a");
  z.set_face(ze, 0, SPair{DegWord{}, zv});
  z.set_face(ze, 1, SPair{DegWord{}, SimplexId{0, 7}});  // unknown simplex
  auto bad = z.validate();
  REQUIRE(bad.has_value());
  CHECK(bad->message.find("unknown") != std::string::npos);
}

TEST_CASE("a genuinely broken d_i d_j identity is caught") {
  // triangle whose d0/d1 faces force inconsistent vertices
  SimplicialSet x(2, false);
  auto p = x.add_simplex(0, "p");
  auto q = x.add_simplex(0, "q");
  auto e = x.add_simplex(1, "e");  // p -> q
  x.set_face(e, 0, SPair{DegWord{}, q});
  x.set_face(e, 1, SPair{DegWord{}, p});
  auto l = x.add_simplex(1, "l");  // loop at p
  x.set_face(l, 0, SPair{DegWord{}, p});
  x.set_face(l, 1, SPair{DegWord{}, p});
  auto t = x.add_simplex(2, "t");
  x.set_face(t, 0, SPair{DegWord{}, e});
  x.set_face(t, 1, SPair{DegWord{}, l});  // d0 d1 t = p but d0 d0 t = q
  x.set_face(t, 2, SPair{DegWord{}, e});
  auto v = x.validate();
  REQUIRE(v.has_value());
  CHECK(v->message.find("d0 d1") != std::string::npos);
}

TEST_CASE("simplex enumeration for the reduced circle") {
  auto s1 = standard_model("S1", 4);
  auto deg1 = s1.simplices(1);
  CHECK(deg1.size() == 2);  // a and s0 *
  auto deg2 = s1.simplices(2);
  CHECK(deg2.size() == 3);  // s0 a, s1 a, s1 s0 *
  auto pt = standard_model("point", 4);
  CHECK(pt.simplices(3).size() == 1);
  CHECK_THROWS_AS(pt.simplices(5), InputError);
}

TEST_CASE("enumeration counts match brute-force degeneracy closure") {
  for (auto nm : {"S1", "S2", "RP2", "T2", "wedge_S1_S1"}) {
    auto x = standard_model(nm, 4);
    std::vector<std::set<SPair>> all(5);
    for (int i = 0; i < x.count(0); ++i) all[0].insert(SPair{DegWord{}, SimplexId{0, i}});
    for (int n = 1; n <= 4; ++n) {
      for (int i = 0; i < x.count(n); ++i) all[n].insert(SPair{DegWord{}, SimplexId{n, i}});
      for (auto& p : all[n - 1])
        for (int i = 0; i <= n - 1; ++i) all[n].insert(x.degeneracy(p, i));
    }
    for (int n = 0; n <= 4; ++n) {
      auto enumd = x.simplices(n);
      CHECK(enumd.size() == all[n].size());
      CHECK(std::set<SPair>(enumd.begin(), enumd.end()) == all[n]);
    }
  }
}

TEST_CASE("faces of pairs satisfy all simplicial identities on the corpus") {
  Rng rng(31);
  for (auto nm : {"S1", "RP2", "T2", "S2"}) {
    auto x = standard_model(nm, 4);
    for (int n = 2; n <= 4; ++n)
      for (auto& p : x.simplices(n))
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            CHECK(x.face(x.face(p, j), i) == x.face(x.face(p, i), j - 1));
    // d_i s_j identities on pairs
    for (int n = 0; n <= 3; ++n)
      for (auto& p : x.simplices(n))
        for (int j = 0; j <= n; ++j) {
          SPair sp = x.degeneracy(p, j);
          CHECK(x.face(sp, j) == p);
          CHECK(x.face(sp, j + 1) == p);
          for (int i = 0; i <= n + 1; ++i) {
            if (i == j || i == j + 1) continue;
            if (n == 0 && i <= n) continue;  // no faces of a vertex
            if (i < j)
              CHECK(x.face(sp, i) == x.degeneracy(x.face(p, i), j - 1));
            else if (i > j + 1 && n > 0)
              CHECK(x.face(sp, i) == x.degeneracy(x.face(p, i - 1), j));
          }
        }
  }
  (void)rng;
}

TEST_CASE("wedge of circles and unary wedge") {
  auto s1 = standard_model("S1", 4);
  auto w = wedge({&s1, &s1});
  CHECK(w.sset->count(0) == 1);
  CHECK(w.sset->count(1) == 2);
  auto unary = wedge({&s1});
  CHECK(unary.sset->count(1) == 1);
  CHECK(unary.inclusions[0].is_isomorphism());
  auto s2 = standard_model("S2", 4);
  auto w2 = wedge({&s1, &s2});
  CHECK(w2.sset->count(0) == 1);
  CHECK(w2.sset->count(1) == 1);
  CHECK(w2.sset->count(2) == 1);
  for (auto& inc : w2.inclusions) CHECK(is_mono(inc));
}

TEST_CASE("wedge is associative up to canonical renaming") {
  auto s1 = standard_model("S1", 4);
  auto s2 = standard_model("S2", 4);
  auto rp2 = standard_model("RP2", 4);
  auto ab = wedge({&s1, &s2});
  auto abc1 = wedge({ab.sset.get(), &rp2});
  auto bc = wedge({&s2, &rp2});
  auto abc2 = wedge({&s1, bc.sset.get()});
  for (int n = 0; n <= 4; ++n) CHECK(abc1.sset->count(n) == abc2.sset->count(n));
}

TEST_CASE("map validation and composition") {
  auto w = standard_model("wedge_S1_S1", 4);
  auto s1 = standard_model("S1", 4);
  SimplicialMap f(&w, &s1);
  f.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  f.set_image({1, 0}, SPair{DegWord{}, SimplexId{1, 0}});
  f.set_image({1, 1}, SPair{DegWord{}, SimplexId{1, 0}});
  CHECK(!f.validate().has_value());

  auto rp2 = standard_model("RP2", 4);
  auto idm = SimplicialMap::identity(rp2);
  CHECK(!idm.validate().has_value());
  CHECK(idm.is_isomorphism());
  auto comp = SimplicialMap::compose(f, SimplicialMap::identity(w));
  CHECK(!comp.validate().has_value());

  // wrong degeneracy shape: send the 2-simplex U somewhere inconsistent
  SimplicialMap bad(&rp2, &s1);
  bad.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  bad.set_image({1, 0}, SPair{DegWord{}, SimplexId{1, 0}});
  bad.set_image({1, 1}, SPair{DegWord{std::vector<int>{0}}, SimplexId{0, 0}});
  bad.set_image({2, 0}, SPair{DegWord{std::vector<int>{0}}, SimplexId{1, 0}});
  bad.set_image({2, 1}, SPair{DegWord{std::vector<int>{1}}, SimplexId{1, 0}});
  CHECK(bad.validate().has_value());
}

TEST_CASE("pushout of basepoint inclusions is the wedge") {
  auto pt = standard_model("point", 4);
  auto s1 = standard_model("S1", 4);
  auto s2 = standard_model("S2", 4);
  auto f = basepoint_inclusion(pt, s1);
  auto g = basepoint_inclusion(pt, s2);
  auto po = pushout(f, g);
  CHECK(po.sset->count(0) == 1);
  CHECK(po.sset->count(1) == 1);
  CHECK(po.sset->count(2) == 1);
  auto w = wedge({&s1, &s2});
  for (int n = 0; n <= 4; ++n) CHECK(po.sset->count(n) == w.sset->count(n));
  CHECK(pushout_satisfies_cone(po, f, g, w.inclusions[0], w.inclusions[1]));
}

TEST_CASE("pushout collapsing the boundary of Delta^2 gives the S2 model") {
  auto d2 = model_delta(2, 4);
  auto bd2 = model_delta(2, 4, true);
  auto pt0 = model_delta(0, 4);  // single point, not flagged reduced internally

  // inclusion boundary -> Delta^2
  SimplicialMap inc(&bd2, &d2);
  for (int n = 0; n <= 4; ++n)
    for (int i = 0; i < bd2.count(n); ++i) {
      auto id = d2.find(n, bd2.name({n, i}));
      REQUIRE(id.has_value());
      inc.set_image({n, i}, SPair{DegWord{}, *id});
    }
  inc.require_valid("boundary inclusion");
  CHECK(is_mono(inc));

  // collapse boundary -> point
  SimplicialMap col(&bd2, &pt0);
  for (int n = 0; n <= 4; ++n) {
    DegWord w;
    for (int i = n - 1; i >= 0; --i) w.v.push_back(i);
    for (int i = 0; i < bd2.count(n); ++i) col.set_image({n, i}, SPair{w, SimplexId{0, 0}});
  }
  col.require_valid("boundary collapse");

  auto po = pushout(inc, col);
  auto s2 = standard_model("S2", 4);
  REQUIRE(po.sset->count(0) == 1);
  REQUIRE(po.sset->count(1) == 0);
  REQUIRE(po.sset->count(2) == 1);
  SimplicialMap iso(po.sset.get(), &s2);
  iso.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  iso.set_image({2, 0}, SPair{DegWord{}, SimplexId{2, 0}});
  CHECK(iso.is_isomorphism());
}

TEST_CASE("pushout along the identity is the other leg") {
  auto rp2 = standard_model("RP2", 4);
  auto s1 = standard_model("S1", 4);
  SimplicialMap f(&s1, &rp2);  // a |-> a
  f.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  f.set_image({1, 0}, SPair{DegWord{}, *rp2.find(1, "a")});
  f.require_valid("edge inclusion");
  auto idm = SimplicialMap::identity(s1);
  auto po = pushout(idm, f);
  for (int n = 0; n <= 4; ++n) CHECK(po.sset->count(n) == rp2.count(n));
  CHECK(po.from_y.is_isomorphism());
}

TEST_CASE("pushout of a monomorphism is a monomorphism") {
  auto pt = standard_model("point", 4);
  auto s1 = standard_model("S1", 4);
  auto rp2 = standard_model("RP2", 4);
  auto f = basepoint_inclusion(pt, s1);  // mono
  auto g = basepoint_inclusion(pt, rp2);
  auto po = pushout(f, g);
  CHECK(is_mono(po.from_y));  // pushout of mono f along g is mono
  auto po2 = pushout(g, f);
  CHECK(is_mono(po2.from_y));
}
