#include <catch2/catch_amalgamated.hpp>

#include "equicobar/equivariant.hpp"

using namespace eqc;

static GSimplicialSet swap_wedge(int D = 4) {
  // C2 swapping the two circles of S1 v S1
  auto g = FiniteGroup::cyclic(2);
  GSimplicialSet y(model_wedge_s1_s1(D), g);
  y.set_action(1, 1, 0, 1);
  y.set_action(1, 1, 1, 0);
  y.validate();
  return y;
}

TEST_CASE("subgroup enumeration") {
  auto c2 = FiniteGroup::cyclic(2);
  CHECK(subgroups(c2).all.size() == 2);
  auto c4 = FiniteGroup::cyclic(4);
  auto sl4 = subgroups(c4);
  CHECK(sl4.all.size() == 3);  // e, C2, C4
  auto s3 = FiniteGroup::symmetric(3);
  auto sl = subgroups(s3);
  CHECK(sl.all.size() == 6);
  int classes = 1 + *std::max_element(sl.conjugacy_class.begin(), sl.conjugacy_class.end());
  CHECK(classes == 4);
  CHECK_THROWS_AS(subgroups(FiniteGroup::symmetric(4), 20), InputError);  // bound
}

TEST_CASE("coset spaces and orbits") {
  auto s3 = FiniteGroup::symmetric(3);
  auto sl = subgroups(s3);
  for (auto& h : sl.all) {
    auto cs = coset_space(s3, h);
    CHECK(cs.gset.size * h.order() == s3.size());
    cs.gset.validate(s3);
    CHECK(cs.gset.orbits().size() == 1);  // transitive
  }
}

TEST_CASE("fixed points of the swap action on a wedge of circles") {
  auto y = swap_wedge();
  auto sl = subgroups(y.group());
  auto fp_triv = fixed_points(y, sl.all[0]);
  CHECK(fp_triv.sset.count(1) == 2);  // X^e = X
  auto fp_c2 = fixed_points(y, sl.all[1]);
  CHECK(fp_c2.sset.count(0) == 1);
  CHECK(fp_c2.sset.count(1) == 0);  // only the basepoint survives
  // trivial action: X^H = X
  auto triv = GSimplicialSet::trivial_action(model_rp2(4), FiniteGroup::cyclic(2));
  auto fp = fixed_points(triv, sl.all[1]);
  CHECK(fp.sset.count(2) == 2);
}

TEST_CASE("tensor_set: G/G and free orbits") {
  auto g = FiniteGroup::cyclic(2);
  auto sl = subgroups(g);
  auto s1 = model_s1(4);
  // G/G tensor X = X with trivial action
  auto gg = coset_space(g, sl.all[1]);
  auto t1 = tensor_set(gg.gset, s1, g);
  CHECK(t1.sset().count(1) == 1);
  for (int a = 0; a < 2; ++a) CHECK(t1.act(a, 1, 0) == 0);
  // G/e tensor S1: two circles with swap
  auto ge = coset_space(g, sl.all[0]);
  auto t2 = tensor_set(ge.gset, s1, g);
  CHECK(t2.sset().count(1) == 2);
  CHECK(t2.act(1, 1, 0) == 1);
}

TEST_CASE("tensor then fixed points counts match cellularity condition 3") {
  auto s3 = FiniteGroup::symmetric(3);
  OrbitCategory oc(s3);
  auto x = model_s1(3);
  for (int h = 0; h < oc.num_objects(); ++h)
    for (int k = 0; k < oc.num_objects(); ++k) {
      CosetSpace cs = coset_space(s3, oc.subgroup(h));
      auto t = tensor_set(cs.gset, x, s3);
      auto fp = fixed_points(t, oc.subgroup(k));
      int fixed_cosets = int(cs.gset.fixed(oc.subgroup(k).elems).size());
      CHECK(fp.sset.count(1) == fixed_cosets * x.count(1));
    }
}

TEST_CASE("orbit category hom-set sizes for C2") {
  auto g = FiniteGroup::cyclic(2);
  OrbitCategory oc(g);
  REQUIRE(oc.num_objects() == 2);
  int e = oc.trivial_index(), full = oc.full_index();
  CHECK(oc.hom(e, e).size() == 2);
  CHECK(oc.hom(full, e).size() == 0);
  CHECK(oc.hom(e, full).size() == 1);
  CHECK(oc.hom(full, full).size() == 1);
}

TEST_CASE("phi produces fixed-point diagrams") {
  auto y = swap_wedge();
  OrbitCategory oc(y.group());
  auto d = phi(y, oc);
  int e = oc.trivial_index(), full = oc.full_index();
  CHECK(d.object(e).count(1) == 2);
  CHECK(d.object(full).count(1) == 0);
  // free G-object: fixed points at nontrivial subgroups are the point
  auto g = y.group();
  auto ge = coset_space(g, oc.subgroup(e));
  auto free = tensor_set(ge.gset, model_s1(4), g);
  auto df = phi(free, oc);
  CHECK(df.object(full).total_nondegenerate() == 1);
  // trivial action gives the constant diagram
  auto triv = GSimplicialSet::trivial_action(model_s1(4), g);
  auto dt = phi(triv, oc);
  CHECK(dt.object(e).count(1) == 1);
  CHECK(dt.object(full).count(1) == 1);
}

TEST_CASE("theta(phi(Y)) = Y strictly on corpus G-objects") {
  auto g = FiniteGroup::cyclic(2);
  OrbitCategory oc(g);
  CHECK(theta_phi_is_identity(swap_wedge(), oc));
  CHECK(theta_phi_is_identity(GSimplicialSet::trivial_action(model_rp2(4), g), oc));
  auto ge = coset_space(g, oc.subgroup(oc.trivial_index()));
  CHECK(theta_phi_is_identity(tensor_set(ge.gset, model_s1(4), g), oc));

  auto s3 = FiniteGroup::symmetric(3);
  OrbitCategory oc3(s3);
  auto cs = coset_space(s3, oc3.subgroup(1));  // an order-2 subgroup
  CHECK(theta_phi_is_identity(tensor_set(cs.gset, model_sphere(2, 4), s3), oc3));
}

TEST_CASE("theta of the represented cell diagram is the orbit tensor") {
  auto g = FiniteGroup::cyclic(2);
  OrbitCategory oc(g);
  DiagramCellComplex cc;
  cc.cells.push_back({oc.trivial_index(), model_s1(4)});
  auto d = build_cell_diagram(oc, cc);
  auto th = theta(d);
  // should match G/e tensor S1: two edges swapped by the generator
  CHECK(th.sset().count(1) == 2);
  CHECK(th.act(1, 1, 0) == 1);
  CHECK(th.act(1, 1, 1) == 0);
}

TEST_CASE("elmendorf unit is an isomorphism on cell diagrams") {
  for (auto grp : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
    OrbitCategory oc(grp);
    for (int h = 0; h < oc.num_objects(); ++h) {
      DiagramCellComplex cc;
      cc.cells.push_back({h, model_s1(3)});
      auto d = build_cell_diagram(oc, cc);
      auto r = elmendorf_unit_check(d);
      CHECK(r.ok);
    }
    // a two-cell complex
    DiagramCellComplex cc2;
    cc2.cells.push_back({oc.trivial_index(), model_s1(3)});
    cc2.cells.push_back({oc.full_index(), model_sphere(2, 3)});
    auto d2 = build_cell_diagram(oc, cc2);
    CHECK(elmendorf_unit_check(d2).ok);
  }
}

TEST_CASE("non-cell diagrams are rejected by the unit check") {
  auto g = FiniteGroup::cyclic(2);
  OrbitCategory oc(g);
  auto d = phi(GSimplicialSet::trivial_action(model_s1(4), g), oc);  // constant diagram
  CHECK_THROWS_AS(elmendorf_unit_check(d), InputError);
}

TEST_CASE("cellularity conditions for C2 on the circle") {
  auto g = FiniteGroup::cyclic(2);
  OrbitCategory oc(g);
  auto x = model_s1(3);
  auto pt = model_point(3);
  auto f = basepoint_inclusion(pt, x);
  auto rep = check_cellularity(oc, x, f);
  CHECK(rep.all_pass);
  CHECK(rep.entries.size() == 3u * 2 * 2);
}

TEST_CASE("cellularity for the trivial group is vacuously fine") {
  auto g = FiniteGroup::trivial();
  OrbitCategory oc(g);
  auto x = model_sphere(2, 3);
  auto pt = model_point(3);
  auto f = basepoint_inclusion(pt, x);
  auto rep = check_cellularity(oc, x, f);
  CHECK(rep.all_pass);
}

TEST_CASE("cellularity for S3 on the sphere with the basepoint inclusion") {
  auto g = FiniteGroup::symmetric(3);
  OrbitCategory oc(g);
  auto x = model_sphere(2, 3);
  auto pt = model_point(3);
  auto f = basepoint_inclusion(pt, x);
  auto rep = check_cellularity(oc, x, f);
  CHECK(rep.all_pass);
}

TEST_CASE("equivariant pushout carries the induced action") {
  auto g = FiniteGroup::cyclic(2);
  OrbitCategory oc(g);
  auto cs = coset_space(g, oc.subgroup(oc.trivial_index()));
  auto s1 = model_s1(3);
  auto pt = model_point(3);
  GSimplicialSet tpt = tensor_set(cs.gset, pt, g);  // two points wedged = point
  GSimplicialSet ts1 = tensor_set(cs.gset, s1, g);
  GMap f{&tpt, &ts1, tensor_map(cs.gset, basepoint_inclusion(pt, s1), tpt, ts1)};
  GSimplicialSet dpt = GSimplicialSet::trivial_action(pt, g);
  SimplicialMap coll(&tpt.sset(), &dpt.sset());
  coll.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  GMap att{&tpt, &dpt, coll};
  auto po = equivariant_pushout(att, f);
  CHECK(po.gss->sset().count(1) == 2);
  CHECK(po.gss->act(1, 1, 0) == 1);  // swap survives
}
