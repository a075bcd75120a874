#pragma once

// The acceptance suite: one function per criterion, everything exact.
// Shared between the test binary and the CLI `corpus` command.

#include <chrono>
#include <functional>

#include "equicobar/galois.hpp"
#include "equicobar/oracles.hpp"

namespace eqc {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string details;
};

namespace acceptdetail {

inline const std::vector<std::string>& corpus_names() {
  static std::vector<std::string> names{"point", "S1", "S2", "RP2", "T2", "wedge_S1_S1"};
  return names;
}

inline GSimplicialSet swap_wedge(int D) {
  auto g = FiniteGroup::cyclic(2);
  GSimplicialSet y(model_wedge_s1_s1(D), g);
  y.set_action(1, 1, 0, 1);
  y.set_action(1, 1, 1, 0);
  y.validate();
  return y;
}

// 1. the unit X -> P(F[X]) is an isomorphism for the corpus over F2, F3, Q
inline bool criterion_unit(std::string& details) {
  for (auto& nm : corpus_names()) {
    auto x = standard_model(nm, 4);
    if (!unit_check<GF>(x, GF::Ctx(2, 1)).ok || !unit_check<GF>(x, GF::Ctx(3, 1)).ok ||
        !unit_check<Rational>(x, Rational::Ctx{}).ok) {
      details = "unit fails on " + nm;
      return false;
    }
  }
  details = "degreewise bijection commuting with all operators, 6 spaces x 3 fields";
  return true;
}

// 2. homology dimensions of the normalized chains
inline bool criterion_homology(std::string& details) {
  auto dims = [](const std::string& nm, auto ctx, int through) {
    using F = typename decltype(ctx)::Elem;
    auto x = standard_model(nm, 4);
    auto ch = chains<F>(x, ctx);
    auto nr = normalized_chains(ch.sc);
    return homology_dims(nr.dg.complex(), through);
  };
  GF::Ctx f2(2, 1), f3(3, 1);
  Rational::Ctx q;
  bool ok = dims("RP2", f2, 2) == std::vector<int>{1, 1, 1} &&
            dims("RP2", f3, 2) == std::vector<int>{1, 0, 0} &&
            dims("RP2", q, 2) == std::vector<int>{1, 0, 0} &&
            dims("T2", q, 2) == std::vector<int>{1, 2, 1} &&
            dims("S2", f2, 2) == std::vector<int>{1, 0, 1} &&
            dims("S2", f3, 2) == std::vector<int>{1, 0, 1} &&
            dims("S2", q, 2) == std::vector<int>{1, 0, 1};
  details = ok ? "RP2 / T2 / S2 dimensions over F2, F3, Q" : "a homology table entry differs";
  return ok;
}

// 3. loop-space homology of the sphere, cap independent
inline bool criterion_cobar_sphere(std::string& details) {
  auto run = [&](auto ctx) {
    using F = typename decltype(ctx)::Elem;
    auto ch = chains<F>(model_sphere(2, 6), ctx);
    auto nr = normalized_chains(ch.sc);
    for (int length : {5, 7}) {
      auto cb = cobar(nr.dg, 5, length);
      if (!cb.simply_connected_regime) return false;
      for (int n = 0; n <= 4; ++n)
        if (cb.complex().homology_dim(n) != 1) return false;
    }
    return true;
  };
  bool ok = run(GF::Ctx(2, 1)) && run(Rational::Ctx{});
  details = ok ? "dim H_n = 1 for n <= 4 over F2 and Q, two length caps"
               : "loop-space homology of the sphere differs";
  return ok;
}

// 4. the pi_1 pipeline on RP2
inline bool criterion_pi1_pipeline(std::string& details) {
  auto rp2 = model_rp2(4);
  auto ep = edge_path_presentation(rp2);
  auto t = todd_coxeter(ep.pres, 200);
  if (!t || t->order != 2) {
    details = "enumeration did not give order 2";
    return false;
  }
  auto cover = universal_cover(rp2, *t, ep);  // validates internally
  auto again = pi1_pipeline(cover.total, 200);
  if (!again.table || again.table->order != 1) {
    details = "cover is not simply connected by re-enumeration";
    return false;
  }
  Rational::Ctx q;
  if (homology_dims(simplicial_homology_complex<Rational>(cover.total, q), 2) !=
      std::vector<int>{1, 0, 1}) {
    details = "cover homology over Q is not (1,0,1)";
    return false;
  }
  auto p = h0_presentation(rp2);
  marked_elements(p);
  auto loc = localize_h0(p);
  auto dim = presented_dimension(loc, 64);
  if (!dim || *dim != 2) {
    details = "localized H_0 dimension is not 2";
    return false;
  }
  auto table = presented_table(loc, 64);
  auto z2 = FiniteGroup::cyclic(2);
  if (!table || *table != z2.table()) {
    details = "localized H_0 differs from the group algebra of Z/2";
    return false;
  }
  details = "order 2, simply connected cover with H = (1,0,1), group algebra of Z/2";
  return true;
}

// 5. coalgebra fixed points of the swap action collapse to the point
inline bool criterion_coalg_fixed(std::string& details) {
  auto y = swap_wedge(3);
  auto sl = subgroups(y.group());
  for (int which = 0; which < 2; ++which) {
    GF::Ctx ctx(which == 0 ? 2 : 3, 1);
    auto gsc = chains_equivariant<GF>(y, ctx);
    auto cfp = coalg_fixed_points(gsc.gsc, sl.all[1]);
    auto cpt = chains<GF>(model_point(3), ctx);
    for (int n = 0; n <= 3; ++n)
      if (cfp.sc.dim(n) != cpt.sc.dim(n)) {
        details = "fixed coalgebra dimensions differ from the point's chains";
        return false;
      }
    if (!coalg_fixed_matches_fixed_points<GF>(y, sl.all[1], ctx)) {
      details = "points of the fixed coalgebra differ from the fixed points";
      return false;
    }
    auto fp = fixed_points(y, sl.all[1]);
    if (fp.sset.total_nondegenerate() != 1) {
      details = "simplicial fixed points are not the point";
      return false;
    }
  }
  details = "F[X]^C2 = F[point] and P(F[X]^C2) = X^C2 over F2 and F3";
  return true;
}

// 6. cellularity conditions (3) and (1) across groups, subgroup pairs, corpus
inline bool criterion_cellularity(std::string& details) {
  std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                  FiniteGroup::symmetric(3)};
  for (auto& g : groups) {
    OrbitCategory oc(g);
    for (auto& nm : corpus_names()) {
      auto x = standard_model(nm, 3);
      auto pt = model_point(3);
      auto f = basepoint_inclusion(pt, x);
      for (int h = 0; h < oc.num_objects(); ++h)
        for (int k = 0; k < oc.num_objects(); ++k) {
          if (!cellularity_condition3(oc, h, k, x)) {
            details = "condition (3) fails: " + nm;
            return false;
          }
          if (!cellularity_condition1(oc, h, k, f)) {
            details = "condition (1) fails: " + nm;
            return false;
          }
        }
    }
  }
  details = "conditions (3) and (1) for C2, C3, S3 across all subgroup pairs and 6 spaces";
  return true;
}

// 7. Elmendorf: theta . phi is the identity; the unit is an isomorphism on
// diagrams built from the generator cells
inline bool criterion_elmendorf(std::string& details) {
  {
    auto g = FiniteGroup::cyclic(2);
    OrbitCategory oc(g);
    std::vector<GSimplicialSet> corpus;
    corpus.push_back(swap_wedge(3));
    corpus.push_back(GSimplicialSet::trivial_action(model_rp2(3), g));
    corpus.push_back(tensor_set(coset_space(g, oc.subgroup(0)).gset, model_s1(3), g));
    for (auto& y : corpus)
      if (!theta_phi_is_identity(y, oc)) {
        details = "theta . phi is not the identity for C2";
        return false;
      }
  }
  {
    auto g = FiniteGroup::symmetric(3);
    OrbitCategory oc(g);
    auto y = tensor_set(coset_space(g, oc.subgroup(1)).gset, model_sphere(2, 3), g);
    if (!theta_phi_is_identity(y, oc)) {
      details = "theta . phi is not the identity for S3";
      return false;
    }
  }
  for (auto grp : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
    OrbitCategory oc(grp);
    for (int h = 0; h < oc.num_objects(); ++h)
      for (auto nm : {"S1", "S2"}) {
        DiagramCellComplex cc;
        cc.cells.push_back({h, standard_model(nm, 3)});
        if (!elmendorf_unit_check(build_cell_diagram(oc, cc)).ok) {
          details = "unit fails on a one-cell diagram";
          return false;
        }
      }
    DiagramCellComplex two;
    two.cells.push_back({oc.trivial_index(), model_s1(3)});
    two.cells.push_back({oc.full_index(), model_sphere(2, 3)});
    if (!elmendorf_unit_check(build_cell_diagram(oc, two)).ok) {
      details = "unit fails on a two-cell diagram";
      return false;
    }
  }
  details = "evaluation after fixed points is the identity; the unit is an isomorphism on cells";
  return true;
}

// 8. the equivariant chains square: F_G[G/H (x) X] = G/H-indexed wedge sum
inline bool criterion_chains_square(std::string& details) {
  for (auto grp : {FiniteGroup::cyclic(2), FiniteGroup::symmetric(3)}) {
    auto sl = subgroups(grp);
    for (auto& h : sl.all) {
      auto cs = coset_space(grp, h);
      for (auto nm : {"S1", "RP2", "S2"}) {
        auto x = standard_model(nm, 3);
        if (!equivariant_chains_square_check<GF>(cs.gset, x, grp, GF::Ctx(2, 1)) ||
            !equivariant_chains_square_check<Rational>(cs.gset, x, grp, Rational::Ctx{})) {
          details = std::string("square fails for ") + nm;
          return false;
        }
      }
    }
  }
  details = "data-exact match including the permutation action, C2 and S3, over F2 and Q";
  return true;
}

// 9. Galois descent across the exhaustive range
inline bool criterion_galois(std::string& details) {
  std::vector<FieldExtension> exts{FieldExtension::make(2, 1, 2), FieldExtension::make(2, 1, 3),
                                   FieldExtension::make(3, 1, 2)};
  for (auto& e : exts) {
    // all G-sets with |S| <= 6: multisets of orbits with size dividing m
    std::vector<int> divisors;
    for (int d = 1; d <= e.m; ++d)
      if (e.m % d == 0) divisors.push_back(d);
    std::vector<std::vector<int>> shapes;
    std::function<void(size_t, std::vector<int>&)> rec = [&](size_t i, std::vector<int>& cur) {
      int total = 0;
      for (int v : cur) total += v;
      if (total >= 1) shapes.push_back(cur);
      for (size_t j2 = i; j2 < divisors.size(); ++j2) {
        if (total + divisors[j2] > 6) continue;
        cur.push_back(divisors[j2]);
        rec(j2, cur);
        cur.pop_back();
      }
    };
    std::vector<int> cur;
    rec(0, cur);
    for (auto& shape : shapes) {
      SemilinearGSet s;
      for (int v : shape) {
        int off = s.size;
        for (int t = 0; t < v; ++t) s.perm.push_back(off + (t + 1) % v);
        s.size += v;
      }
      s.order = 1;
      auto form = galois_fixed_coalgebra(s, e);
      if (form.coalg.dim() != s.size || !descent_check(s, e) || !galois_unit_check(s, e)) {
        details = "descent fails for an orbit shape over " + e.top->name();
        return false;
      }
    }
  }
  // the swap two-set over F2 in F4, with the brute-force oracle
  auto e = FieldExtension::make(2, 1, 2);
  SemilinearGSet s{2, {1, 0}, 2};
  auto form = galois_fixed_coalgebra(s, e);
  auto base_brute = coalgdetail::brute_force_grouplikes(form.coalg, 1u << 20);
  if (!base_brute || !base_brute->empty()) {
    details = "the twisted form has group-likes over the base field";
    return false;
  }
  GF::Ctx tc(e.top);
  Coalgebra<GF> lifted;
  lifted.ctx = tc;
  lifted.basis = form.coalg.basis;
  lifted.delta.resize(2);
  for (int i = 0; i < 2; ++i)
    for (auto& [a, b, c] : form.coalg.delta[i]) lifted.delta[i].emplace_back(a, b, e.embed(c));
  for (auto& c : form.coalg.counit) lifted.counit.push_back(e.embed(c));
  auto top_brute = coalgdetail::brute_force_grouplikes(lifted, 1u << 20);
  if (!top_brute || top_brute->size() != 2) {
    details = "the twisted form does not have exactly two group-likes over F4";
    return false;
  }
  details = "dim = |S|, descent iso, unit recovers the action; twisted form 0/2 group-likes";
  return true;
}

// 10. the inclusion audit with its two strictness witnesses
inline bool criterion_audit(std::string& details) {
  OracleCaps caps;
  caps.cobar_degree = 3;
  caps.cobar_length = 5;
  GF::Ctx f2(2, 1), f3(3, 1);
  Rational::Ctx q;
  auto rp2 = model_rp2(4);
  auto t2 = model_t2(4);
  auto s2 = model_sphere(2, 4);
  auto s1 = model_s1(4);
  auto w = model_wedge_s1_s1(4);
  auto pt = model_point(4);
  SimplicialMap collapse_w(&w, &s1);
  collapse_w.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  collapse_w.set_image({1, 0}, SPair{DegWord{}, SimplexId{1, 0}});
  collapse_w.set_image({1, 1}, SPair{DegWord{}, SimplexId{1, 0}});
  collapse_w.require_valid("wedge collapse");

  std::vector<AuditEntry> entries;
  entries.push_back(audit_map<GF>("id RP2 / F2", SimplicialMap::identity(rp2), f2, caps));
  entries.push_back(audit_map<Rational>("id T2 / Q", SimplicialMap::identity(t2), q, caps));
  entries.push_back(audit_map<GF>("id S2 / F3", SimplicialMap::identity(s2), f3, caps));
  entries.push_back(audit_map<Rational>("id S1 / Q", SimplicialMap::identity(s1), q, caps));
  entries.push_back(audit_map<GF>("RP2 -> pt / F3", collapse_map(rp2, pt), f3, caps));
  entries.push_back(audit_map<GF>("RP2 -> pt / F2", collapse_map(rp2, pt), f2, caps));
  entries.push_back(audit_map<Rational>("S1vS1 -> S1 / Q", collapse_w, q, caps));
  entries.push_back(audit_map<GF>("S1vS1 -> S1 / F2", collapse_w, f2, caps));
  entries.push_back(audit_map<Rational>("pt -> S2 / Q", basepoint_inclusion(pt, s2), q, caps));
  entries.push_back(audit_map<GF>("S2 -> pt / F2", collapse_map(s2, pt), f2, caps));
  for (auto& e : entries)
    if (!e.monotone) {
      details = "monotonicity violated on " + e.name;
      return false;
    }
  // witness A: (2) strictly inside (3)
  auto& wa = entries[4];
  if (!(wa.v3.yes() && wa.v2.no() && (wa.v1.no() || wa.v1.inconclusive()))) {
    details = "witness RP2 -> pt / F3 does not behave as documented";
    return false;
  }
  // witness B: the wedge collapse over Q, No certified at the H_0 level
  auto& wb = entries[6];
  if (!(wb.v3.no() && wb.v2.no() && wb.v1.no())) {
    details = "witness S1vS1 -> S1 / Q does not behave as documented";
    return false;
  }
  details = "10 maps monotone; both strictness witnesses as documented";
  return true;
}

// 11. structural exactness sweep with fixed randomized seeds
inline bool criterion_structural(std::string& details) {
  GF::Ctx f2(2, 1), f4(2, 2), f3(3, 1);
  Rational::Ctx q;
  // every corpus chains coalgebra passes the exact structure checks, every
  // normalized complex has d^2 = 0, every cobar construction asserts too
  for (auto& nm : acceptdetail::corpus_names()) {
    auto x = standard_model(nm, 4);
    auto ch2 = chains<GF>(x, f2);
    ch2.sc.require_valid("chains over F2");
    auto chq = chains<Rational>(x, q);
    chq.sc.require_valid("chains over Q");
    auto nr = normalized_chains(chq.sc);  // validates
    if (x.reduced()) cobar(nr.dg, 3, 4);  // asserts d^2 = 0 on retained words
  }
  // covers validate under construction; re-run the RP2 one
  {
    auto rp2 = model_rp2(3);
    auto ep = edge_path_presentation(rp2);
    auto t = todd_coxeter(ep.pres, 100);
    if (!t) {
      details = "enumeration failed";
      return false;
    }
    universal_cover(rp2, *t, ep);  // validates
  }
  // randomized sweeps: field axioms, kernel exactness, subcoalgebra laws
  Rng rng(2026);
  for (int iter = 0; iter < 60; ++iter) {
    int nr2 = 1 + int(rng.below(6)), nc = 1 + int(rng.below(6));
    Matrix<GF> m(nr2, nc, f4);
    for (int t = 0; t < nr2 * nc / 2 + 1; ++t)
      m.add_entry(int(rng.below(uint64_t(nr2))), int(rng.below(uint64_t(nc))),
                  f4.from_code(rng.below(4)));
    auto k = kernel(m);
    if (!(m * k).is_zero() || rank(m) + k.cols() != nc) {
      details = "kernel exactness failed";
      return false;
    }
  }
  auto chr = chains<GF>(model_rp2(3), f3);
  for (int iter = 0; iter < 12; ++iter) {
    auto& c = chr.sc.deg[2];
    Matrix<GF> w(c.dim(), 2, f3);
    for (int t = 0; t < 6; ++t)
      w.add_entry(int(rng.below(uint64_t(c.dim()))), int(rng.below(2)),
                  f3.from_int(1 + long(rng.below(2))));
    auto v = largest_subcoalgebra_basis(c, column_space(w));
    auto v2 = largest_subcoalgebra_basis(c, v);
    if (v2.cols() != v.cols()) {
      details = "largest subcoalgebra is not idempotent";
      return false;
    }
  }
  details = "exact structure checks and randomized sweeps (fixed seeds)";
  return true;
}

}  // namespace acceptdetail

inline std::vector<CriterionResult> run_acceptance() {
  using Clock = std::chrono::steady_clock;
  std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria = {
      {"unit-isomorphism", acceptdetail::criterion_unit},
      {"homology-oracle", acceptdetail::criterion_homology},
      {"cobar-loop-space", acceptdetail::criterion_cobar_sphere},
      {"pi1-pipeline", acceptdetail::criterion_pi1_pipeline},
      {"coalgebra-fixed-points", acceptdetail::criterion_coalg_fixed},
      {"cellularity", acceptdetail::criterion_cellularity},
      {"elmendorf", acceptdetail::criterion_elmendorf},
      {"equivariant-chains-square", acceptdetail::criterion_chains_square},
      {"galois-descent", acceptdetail::criterion_galois},
      {"inclusion-audit", acceptdetail::criterion_audit},
      {"structural-exactness", acceptdetail::criterion_structural},
  };
  std::vector<CriterionResult> out;
  int id = 1;
  for (auto& [name, fn] : criteria) {
    CriterionResult r;
    r.id = id++;
    r.name = name;
    auto start = Clock::now();
    try {
      r.pass = fn(r.details);
    } catch (const std::exception& ex) {
      r.pass = false;
      r.details = std::string("exception: ") + ex.what();
    }
    r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    // the loop-space criterion carries its own wall-clock budget
    if (r.name == "cobar-loop-space" && r.seconds >= 10.0) {
      r.pass = false;
      r.details += " (exceeded the 10 s budget)";
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace eqc
