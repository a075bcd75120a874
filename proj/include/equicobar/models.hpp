#pragma once

// The model corpus (fixed conventions for point, spheres, RP^2, torus,
// wedges, simplices) plus wedge and pushout constructions.

#include "equicobar/simplicial.hpp"

namespace eqc {

inline SimplicialSet model_point(int D) {
  SimplicialSet x(D, true);
  x.add_simplex(0, "*");
  x.require_valid("point");
  return x;
}

inline SimplicialSet model_s1(int D) {
  SimplicialSet x(D, true);
  auto v = x.add_simplex(0, "*");
  auto a = x.add_simplex(1, "a");
  x.set_face(a, 0, SPair{DegWord{}, v});
  x.set_face(a, 1, SPair{DegWord{}, v});
  x.require_valid("S1");
  return x;
}

// one vertex and one nondegenerate n-cell whose faces are all the full
// degeneracy of the vertex (the quotient Delta^n / boundary)
inline SimplicialSet model_sphere(int n, int D) {
  if (n < 2 || D < n) throw InputError("sphere model needs 2 <= n <= D");
  SimplicialSet x(D, true);
  auto v = x.add_simplex(0, "*");
  auto c = x.add_simplex(n, "sigma");
  DegWord full;
  for (int i = n - 2; i >= 0; --i) full.v.push_back(i);
  for (int i = 0; i <= n; ++i) x.set_face(c, i, SPair{full, v});
  x.require_valid("S" + std::to_string(n));
  return x;
}

// 1 vertex, edges a b, triangles U (b = a.a) and V (a = a.b)
inline SimplicialSet model_rp2(int D) {
  SimplicialSet x(D, true);
  auto v = x.add_simplex(0, "*");
  auto a = x.add_simplex(1, "a");
  auto b = x.add_simplex(1, "b");
  for (auto e : {a, b}) {
    x.set_face(e, 0, SPair{DegWord{}, v});
    x.set_face(e, 1, SPair{DegWord{}, v});
  }
  auto U = x.add_simplex(2, "U");
  x.set_face(U, 0, SPair{DegWord{}, a});
  x.set_face(U, 1, SPair{DegWord{}, b});
  x.set_face(U, 2, SPair{DegWord{}, a});
  auto V = x.add_simplex(2, "V");
  x.set_face(V, 0, SPair{DegWord{}, b});
  x.set_face(V, 1, SPair{DegWord{}, a});
  x.set_face(V, 2, SPair{DegWord{}, a});
  x.require_valid("RP2");
  return x;
}

// 1 vertex, edges a b c, triangles U (c = a.b) and V (c = b.a)
inline SimplicialSet model_t2(int D) {
  SimplicialSet x(D, true);
  auto v = x.add_simplex(0, "*");
  auto a = x.add_simplex(1, "a");
  auto b = x.add_simplex(1, "b");
  auto c = x.add_simplex(1, "c");
  for (auto e : {a, b, c}) {
    x.set_face(e, 0, SPair{DegWord{}, v});
    x.set_face(e, 1, SPair{DegWord{}, v});
  }
  auto U = x.add_simplex(2, "U");
  x.set_face(U, 0, SPair{DegWord{}, b});
  x.set_face(U, 1, SPair{DegWord{}, c});
  x.set_face(U, 2, SPair{DegWord{}, a});
  auto V = x.add_simplex(2, "V");
  x.set_face(V, 0, SPair{DegWord{}, a});
  x.set_face(V, 1, SPair{DegWord{}, c});
  x.set_face(V, 2, SPair{DegWord{}, b});
  x.require_valid("T2");
  return x;
}

inline SimplicialSet model_wedge_s1_s1(int D) {
  SimplicialSet x(D, true);
  auto v = x.add_simplex(0, "*");
  for (auto nm : {"a", "b"}) {
    auto e = x.add_simplex(1, nm);
    x.set_face(e, 0, SPair{DegWord{}, v});
    x.set_face(e, 1, SPair{DegWord{}, v});
  }
  x.require_valid("S1vS1");
  return x;
}

// the standard n-simplex: nondegenerate simplices are the nonempty vertex
// subsets; not reduced for n >= 1
inline SimplicialSet model_delta(int n, int D, bool boundary = false) {
  if (D < (boundary ? n - 1 : n)) throw InputError("dimension bound too small for Delta^n");
  SimplicialSet x(D, n == 0 && !boundary);
  std::map<std::vector<int>, SimplexId> ids;
  std::vector<std::vector<int>> subsets;
  for (int mask = 1; mask < (1 << (n + 1)); ++mask) {
    std::vector<int> s;
    for (int i = 0; i <= n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    if (boundary && int(s.size()) == n + 1) continue;
    subsets.push_back(std::move(s));
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return std::pair(a.size(), a) < std::pair(b.size(), b);
  });
  for (auto& s : subsets) {
    std::string nm;
    for (int v : s) nm += std::to_string(v);
    ids[s] = x.add_simplex(int(s.size()) - 1, nm);
  }
  for (auto& s : subsets) {
    if (s.size() == 1) continue;
    for (int i = 0; i < int(s.size()); ++i) {
      std::vector<int> f = s;
      f.erase(f.begin() + i);
      x.set_face(ids[s], i, SPair{DegWord{}, ids[f]});
    }
  }
  x.require_valid(boundary ? "dDelta" : "Delta");
  return x;
}

inline SimplicialSet standard_model(const std::string& name, int D = 6) {
  if (name == "point") return model_point(D);
  if (name == "S1") return model_s1(D);
  if (name == "S2") return model_sphere(2, D);
  if (name == "S3") return model_sphere(3, D);
  if (name == "RP2") return model_rp2(D);
  if (name == "T2") return model_t2(D);
  if (name == "wedge_S1_S1") return model_wedge_s1_s1(D);
  if (name.size() > 1 && name[0] == 'D') return model_delta(std::stoi(name.substr(1)), D);
  if (name.size() > 2 && name.substr(0, 2) == "dD")
    return model_delta(std::stoi(name.substr(2)), D, true);
  throw InputError("unknown standard model: " + name);
}

// ---------------------------------------------------------------------------
// wedge
// ---------------------------------------------------------------------------

struct WedgeResult {
  std::shared_ptr<SimplicialSet> sset;
  std::vector<SimplicialMap> inclusions;  // sources must outlive the maps
};

inline WedgeResult wedge(const std::vector<const SimplicialSet*>& parts,
                         const std::vector<std::string>& prefixes = {}) {
  if (parts.empty()) throw InputError("wedge of nothing");
  int D = parts[0]->dim_bound();
  for (auto* p : parts) {
    if (!p->reduced()) throw InputError("wedge requires reduced inputs");
    D = std::min(D, p->dim_bound());
  }
  SimplicialSet w(D, true);
  auto base = w.add_simplex(0, "*");
  std::vector<std::vector<std::vector<SimplexId>>> remap(parts.size());
  for (size_t k = 0; k < parts.size(); ++k) {
    const SimplicialSet& X = *parts[k];
    std::string pre = k < prefixes.size() ? prefixes[k]
                                          : (parts.size() == 1 ? "" : "w" + std::to_string(k) + ":");
    remap[k].resize(D + 1);
    remap[k][0] = {base};
    for (int n = 1; n <= D; ++n) {
      remap[k][n].resize(X.count(n));
      for (int i = 0; i < X.count(n); ++i)
        remap[k][n][i] = w.add_simplex(n, pre + X.name({n, i}));
    }
  }
  for (size_t k = 0; k < parts.size(); ++k) {
    const SimplicialSet& X = *parts[k];
    for (int n = 1; n <= D; ++n)
      for (int i = 0; i < X.count(n); ++i)
        for (int j = 0; j <= n; ++j) {
          const SPair& f = X.stored_face({n, i}, j);
          w.set_face(remap[k][n][i], j, SPair{f.w, remap[k][f.s.dim][f.s.idx]});
        }
  }
  w.require_valid("wedge");
  WedgeResult out;
  out.sset = std::make_shared<SimplicialSet>(std::move(w));
  for (size_t k = 0; k < parts.size(); ++k) {
    SimplicialMap inc(parts[k], out.sset.get());
    for (int n = 0; n <= D; ++n)
      for (int i = 0; i < parts[k]->count(n); ++i)
        inc.set_image({n, i}, SPair{DegWord{}, remap[k][n][i]});
    inc.retain(nullptr, out.sset);
    inc.require_valid("wedge inclusion");
    out.inclusions.push_back(std::move(inc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// pushout along a monomorphism
// ---------------------------------------------------------------------------

inline bool is_mono(const SimplicialMap& f) {
  for (int n = 0; n <= std::min(f.src().dim_bound(), f.dst().dim_bound()); ++n) {
    std::map<SPair, int> seen;
    for (auto& p : f.src().simplices(n))
      if (++seen[f.apply(p)] > 1) return false;
  }
  return true;
}

struct PushoutResult {
  std::shared_ptr<SimplicialSet> sset;
  SimplicialMap from_x, from_y;  // structure maps; sources must outlive them
};

// pushout of X <-f- A -g-> Y; one leg must be a monomorphism
inline PushoutResult pushout(const SimplicialMap& f, const SimplicialMap& g) {
  if (!(f.src() == g.src())) throw InputError("pushout legs must share a source");
  if (!is_mono(f) && !is_mono(g))
    throw InputError("pushout requires at least one monomorphism leg");
  const SimplicialSet &A = f.src(), &X = f.dst(), &Y = g.dst();
  int D = std::min({A.dim_bound(), X.dim_bound(), Y.dim_bound()});

  struct Level {
    std::vector<SPair> xs, ys;
    std::map<SPair, int> xi, yi;   // pair -> label (y labels offset by |xs|)
    std::vector<int> cls;          // label -> class id
    std::vector<SPair> rep;        // class -> representative pair
    std::vector<bool> rep_in_x;
  };
  std::vector<Level> lv(D + 1);
  for (int n = 0; n <= D; ++n) {
    auto& L = lv[n];
    L.xs = X.simplices(n);
    L.ys = Y.simplices(n);
    for (int i = 0; i < int(L.xs.size()); ++i) L.xi[L.xs[i]] = i;
    for (int i = 0; i < int(L.ys.size()); ++i) L.yi[L.ys[i]] = int(L.xs.size()) + i;
    int total = int(L.xs.size() + L.ys.size());
    std::vector<int> uf(total);
    for (int i = 0; i < total; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
    for (auto& a : A.simplices(n)) {
      int u = find(L.xi.at(f.apply(a)));
      int v = find(L.yi.at(g.apply(a)));
      if (u != v) uf[std::max(u, v)] = std::min(u, v);
    }
    L.cls.assign(total, -1);
    for (int i = 0; i < total; ++i) {
      int r = find(i);
      if (L.cls[r] < 0) {
        L.cls[r] = int(L.rep.size());
        L.rep.push_back(r < int(L.xs.size()) ? L.xs[r] : L.ys[r - int(L.xs.size())]);
        L.rep_in_x.push_back(r < int(L.xs.size()));
      }
      L.cls[i] = L.cls[r];
    }
  }

  DegreewiseData dd;
  dd.dim_bound = D;
  dd.reduced_hint = lv[0].rep.size() == 1;
  dd.sizes.resize(D + 1);
  for (int n = 0; n <= D; ++n) dd.sizes[n] = int(lv[n].rep.size());
  dd.face = [&](int n, int i, int e) {
    auto& L = lv[n];
    SPair fp = L.rep_in_x[e] ? X.face(L.rep[e], i) : Y.face(L.rep[e], i);
    auto& M = lv[n - 1];
    return M.cls[L.rep_in_x[e] ? M.xi.at(fp) : M.yi.at(fp)];
  };
  dd.degen = [&](int n, int i, int e) {
    auto& L = lv[n];
    SPair sp = L.rep_in_x[e] ? X.degeneracy(L.rep[e], i) : Y.degeneracy(L.rep[e], i);
    auto& M = lv[n + 1];
    return M.cls[L.rep_in_x[e] ? M.xi.at(sp) : M.yi.at(sp)];
  };
  dd.namer = [&](int n, int e) {
    auto& L = lv[n];
    return (L.rep_in_x[e] ? "x:" : "y:") +
           (L.rep_in_x[e] ? X.pair_name(L.rep[e]) : Y.pair_name(L.rep[e]));
  };
  Extraction ex = degreewise_extract(dd);

  PushoutResult out;
  out.sset = std::make_shared<SimplicialSet>(std::move(ex.sset));
  out.from_x = SimplicialMap(&X, out.sset.get());
  for (int n = 0; n <= D; ++n)
    for (int i = 0; i < X.count(n); ++i) {
      SPair p{DegWord{}, SimplexId{n, i}};
      out.from_x.set_image({n, i}, ex.expr[n][lv[n].cls[lv[n].xi.at(p)]]);
    }
  out.from_y = SimplicialMap(&Y, out.sset.get());
  for (int n = 0; n <= D; ++n)
    for (int i = 0; i < Y.count(n); ++i) {
      SPair p{DegWord{}, SimplexId{n, i}};
      out.from_y.set_image({n, i}, ex.expr[n][lv[n].cls[lv[n].yi.at(p)]]);
    }
  out.from_x.retain(nullptr, out.sset);
  out.from_y.retain(nullptr, out.sset);
  out.from_x.require_valid("pushout structure map X");
  out.from_y.require_valid("pushout structure map Y");
  return out;
}

// basepoint of a reduced simplicial set, as a map from a point model
inline SimplicialMap basepoint_inclusion(const SimplicialSet& pt, const SimplicialSet& X) {
  if (!pt.reduced() || pt.total_nondegenerate() != 1 || !X.reduced())
    throw InputError("basepoint_inclusion expects a point model and a reduced target");
  SimplicialMap f(&pt, &X);
  f.set_image({0, 0}, SPair{DegWord{}, SimplexId{0, 0}});
  f.require_valid("basepoint inclusion");
  return f;
}

// collapse everything to the basepoint
inline SimplicialMap collapse_map(const SimplicialSet& X, const SimplicialSet& pt) {
  if (!pt.reduced() || pt.total_nondegenerate() != 1 || !X.reduced())
    throw InputError("collapse_map expects a reduced source and a point model");
  SimplicialMap f(&X, &pt);
  for (int n = 0; n <= X.dim_bound(); ++n) {
    DegWord w;
    for (int i = n - 1; i >= 0; --i) w.v.push_back(i);
    for (int i = 0; i < X.count(n); ++i) f.set_image({n, i}, SPair{w, SimplexId{0, 0}});
  }
  f.require_valid("collapse");
  return f;
}

// The map P -> Q forced by commuting squares u_i : A_i -> P, v_i : A_i -> Q
// (the u_i jointly surjective on nondegenerate simplices of P); nullopt when
// the records clash, no record reaches some simplex, or the result is not
// simplicial.
inline std::optional<SimplicialMap> induced_map(const SimplicialSet& P, const SimplicialSet& Q,
                                                const std::vector<const SimplicialMap*>& us,
                                                const std::vector<const SimplicialMap*>& vs) {
  if (us.size() != vs.size()) throw InputError("induced_map: leg count mismatch");
  SimplicialMap h(&P, &Q);
  std::vector<std::vector<bool>> defined(P.dim_bound() + 1);
  for (int n = 0; n <= P.dim_bound(); ++n) defined[n].assign(P.count(n), false);
  for (size_t t = 0; t < us.size(); ++t) {
    const SimplicialSet& A = us[t]->src();
    for (int n = 0; n <= P.dim_bound(); ++n)
      for (int i = 0; i < A.count(n); ++i) {
        SPair p{DegWord{}, SimplexId{n, i}};
        SPair tgt = us[t]->apply(p);
        SPair val = vs[t]->apply(p);
        if (tgt.degenerate()) {
          if (val.w == tgt.w) continue;  // consistent shape; nondeg record decides the rest
          continue;
        }
        if (!defined[tgt.s.dim][tgt.s.idx]) {
          h.set_image(tgt.s, val);
          defined[tgt.s.dim][tgt.s.idx] = true;
        } else if (!(h.image(tgt.s) == val)) {
          return std::nullopt;
        }
      }
  }
  for (int n = 0; n <= P.dim_bound(); ++n)
    for (int i = 0; i < P.count(n); ++i)
      if (!defined[n][i]) return std::nullopt;
  if (h.validate()) return std::nullopt;
  return h;
}

// check the universal property against one explicit test cone
inline bool pushout_satisfies_cone(const PushoutResult& po, const SimplicialMap& f,
                                   const SimplicialMap& g, const SimplicialMap& u,
                                   const SimplicialMap& v) {
  // cone condition
  const SimplicialSet& A = f.src();
  for (int n = 0; n <= po.sset->dim_bound(); ++n)
    for (int i = 0; i < A.count(n); ++i) {
      SPair p{DegWord{}, SimplexId{n, i}};
      if (!(u.apply(f.apply(p)) == v.apply(g.apply(p)))) return false;
    }
  auto h = induced_map(*po.sset, u.dst(), {&po.from_x, &po.from_y}, {&u, &v});
  if (!h) return false;
  // commutation
  for (int n = 0; n <= po.sset->dim_bound(); ++n) {
    for (int i = 0; i < f.dst().count(n); ++i) {
      SPair p{DegWord{}, SimplexId{n, i}};
      if (!(h->apply(po.from_x.apply(p)) == u.apply(p))) return false;
    }
    for (int i = 0; i < g.dst().count(n); ++i) {
      SPair p{DegWord{}, SimplexId{n, i}};
      if (!(h->apply(po.from_y.apply(p)) == v.apply(p))) return false;
    }
  }
  return true;
}

}  // namespace eqc
