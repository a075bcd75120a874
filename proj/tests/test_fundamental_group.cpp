#include <catch2/catch_amalgamated.hpp>

#include "equicobar/fundamental_group.hpp"

using namespace eqc;

TEST_CASE("edge-path presentations agree with the h0 presentations on reduced models") {
  for (auto nm : {"S1", "S2", "RP2", "T2", "wedge_S1_S1"}) {
    auto x = standard_model(nm, 3);
    auto ep = edge_path_presentation(x);
    auto h0 = h0_presentation(x);
    CHECK(ep.pres.gens == h0.gens);
    CHECK(ep.pres.rels == h0.rels);
  }
}

TEST_CASE("coset enumeration on small presentations") {
  auto rp2 = edge_path_presentation(model_rp2(3));
  auto t = todd_coxeter(rp2.pres, 100);
  REQUIRE(t.has_value());
  CHECK(t->order == 2);

  auto s2 = edge_path_presentation(model_sphere(2, 3));
  auto t2 = todd_coxeter(s2.pres, 100);
  REQUIRE(t2.has_value());
  CHECK(t2->order == 1);

  auto s1 = edge_path_presentation(model_s1(3));
  CHECK(!todd_coxeter(s1.pres, 100).has_value());
  CHECK(abelianization(s1.pres).free_rank == 1);  // infinite certificate
}

TEST_CASE("coset enumeration certifies classical group orders") {
  // S3 = <x, y | x^2, y^2, (xy)^3>
  MonoidPresentation s3;
  s3.gens = {"x", "y"};
  s3.inverse = {-1, -1};
  s3.rels.push_back({Word{0, 0}, Word{}});
  s3.rels.push_back({Word{1, 1}, Word{}});
  s3.rels.push_back({Word{0, 1, 0, 1, 0, 1}, Word{}});
  auto t = todd_coxeter(s3, 200);
  REQUIRE(t.has_value());
  CHECK(t->order == 6);

  // Z/3
  MonoidPresentation z3;
  z3.gens = {"a"};
  z3.inverse = {-1};
  z3.rels.push_back({Word{0, 0, 0}, Word{}});
  auto tz = todd_coxeter(z3, 50);
  REQUIRE(tz.has_value());
  CHECK(tz->order == 3);

  // quaternion group: a^4 = 1, a^2 = b^2, aba = b
  MonoidPresentation q8;
  q8.gens = {"a", "b"};
  q8.inverse = {-1, -1};
  q8.rels.push_back({Word{0, 0, 0, 0}, Word{}});
  q8.rels.push_back({Word{0, 0}, Word{1, 1}});
  q8.rels.push_back({Word{0, 1, 0}, Word{1}});
  auto tq = todd_coxeter(q8, 200);
  REQUIRE(tq.has_value());
  CHECK(tq->order == 8);

  // trefoil group: infinite, certified through the abelianization
  MonoidPresentation tref;
  tref.gens = {"a", "b"};
  tref.inverse = {-1, -1};
  tref.rels.push_back({Word{0, 1, 0}, Word{1, 0, 1}});
  CHECK(abelianization(tref).free_rank == 1);
}

TEST_CASE("deck group of RP2 is Z/2") {
  auto ep = edge_path_presentation(model_rp2(3));
  auto t = todd_coxeter(ep.pres, 100);
  REQUIRE(t.has_value());
  auto g = deck_group(*t);
  CHECK(g.size() == 2);
  CHECK(g.mul(1, 1) == 0);
}

TEST_CASE("universal cover of RP2 is the simply connected double cover") {
  auto rp2 = model_rp2(4);
  auto ep = edge_path_presentation(rp2);
  auto t = todd_coxeter(ep.pres, 100);
  REQUIRE(t.has_value());
  auto cover = universal_cover(rp2, *t, ep);
  // twice the simplices of the base in each dimension
  for (int n = 0; n <= 4; ++n) CHECK(cover.total.count(n) == 2 * rp2.count(n));

  // the projection is simplicial with fibers of size |pi_1|
  auto proj = cover_projection(cover, rp2);
  CHECK(!proj.validate().has_value());

  // deck action is free away from nothing
  for (int h = 1; h < cover.deck.size(); ++h)
    for (int n = 0; n <= 4; ++n)
      for (int i = 0; i < cover.total.count(n); ++i) CHECK(cover.gcover.act(h, n, i) != i);

  // simply connected: its own edge-path group enumerates to the trivial group
  auto cp = pi1_pipeline(cover.total, 200);
  REQUIRE(cp.table.has_value());
  CHECK(cp.table->order == 1);

  // quotient by the deck action recovers the base
  CHECK(cover_quotient_recovers_base(cover, rp2));

  // homology of the cover: the 2-sphere's, over Q and over F_2
  Rational::Ctx q;
  GF::Ctx f2(2, 1);
  auto hq = homology_dims(simplicial_homology_complex<Rational>(cover.total, q), 2);
  CHECK(hq == std::vector<int>{1, 0, 1});
  auto h2 = homology_dims(simplicial_homology_complex<GF>(cover.total, f2), 2);
  CHECK(h2 == std::vector<int>{1, 0, 1});
  // and through the coalgebra route
  auto ch = chains<Rational>(cover.total, q);
  auto nr = normalized_chains(ch.sc);
  CHECK(homology_dims(nr.dg.complex(), 2) == std::vector<int>{1, 0, 1});
}

TEST_CASE("trivial fundamental group gives the identity cover") {
  auto s2 = model_sphere(2, 4);
  auto ep = edge_path_presentation(s2);
  auto t = todd_coxeter(ep.pres, 50);
  REQUIRE(t.has_value());
  REQUIRE(t->order == 1);
  auto cover = universal_cover(s2, *t, ep);
  for (int n = 0; n <= 4; ++n) CHECK(cover.total.count(n) == s2.count(n));
  GF::Ctx f3(3, 1);
  CHECK(homology_dims(simplicial_homology_complex<GF>(cover.total, f3), 2) ==
        std::vector<int>{1, 0, 1});
}

TEST_CASE("pi1 pipeline summary flags") {
  auto r = pi1_pipeline(model_rp2(3));
  CHECK(r.certified_finite);
  CHECK(r.table->order == 2);
  auto s = pi1_pipeline(model_s1(3), 80);
  CHECK(!s.certified_finite);
  CHECK(s.certified_infinite);
  auto w = pi1_pipeline(model_wedge_s1_s1(3), 80);
  CHECK(w.certified_infinite);
  CHECK(w.abelian.free_rank == 2);
}
