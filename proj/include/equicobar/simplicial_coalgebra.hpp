#pragma once

// Simplicial coalgebras, the chains functor F[-], the points functor P,
// coalgebra fixed points, and coproducts (wedge sums) of connected objects.

#include "equicobar/coalgebra.hpp"
#include "equicobar/equivariant.hpp"

namespace eqc {

template <FieldScalar F>
struct SimplicialCoalgebra {
  using Ctx = typename F::Ctx;
  Ctx ctx;
  int top = 0;
  std::vector<Coalgebra<F>> deg;               // 0..top
  std::vector<std::vector<Matrix<F>>> face;    // face[n][i]: C_n -> C_{n-1}
  std::vector<std::vector<Matrix<F>>> degen;   // degen[n][i]: C_n -> C_{n+1}
  bool connected = false;
  bool chains_type = false;

  int dim(int n) const { return deg[n].dim(); }

  // the canonical group-like in degree 0 of a connected object
  std::vector<F> unit_vector() const {
    if (!connected || deg[0].dim() != 1) throw InputError("not a connected simplicial coalgebra");
    return {deg[0].counit[0].inv()};
  }

  // s_{n-1} ... s_0 applied to the unit: the coaugmentation line in degree n
  std::vector<F> coaug_vector(int n) const {
    std::vector<F> v = unit_vector();
    for (int i = 0; i < n; ++i) v = degen[i][i].apply(v);
    return v;
  }

  void require_valid(const std::string& label) const {
    for (int n = 0; n <= top; ++n) deg[n].require_valid(label + " degree " + std::to_string(n));
    for (int n = 1; n <= top; ++n) {
      if (int(face[n].size()) != n + 1) throw InputError(label + ": missing face operators");
      for (int i = 0; i <= n; ++i)
        if (!is_coalgebra_morphism(deg[n], deg[n - 1], face[n][i]))
          throw InputError(label + ": face is not a coalgebra morphism");
    }
    for (int n = 0; n < top; ++n) {
      if (int(degen[n].size()) != n + 1) throw InputError(label + ": missing degeneracies");
      for (int i = 0; i <= n; ++i)
        if (!is_coalgebra_morphism(deg[n], deg[n + 1], degen[n][i]))
          throw InputError(label + ": degeneracy is not a coalgebra morphism");
    }
    // simplicial operator identities
    for (int n = 2; n <= top; ++n)
      for (int j = 1; j <= n; ++j)
        for (int i = 0; i < j; ++i)
          if (!(face[n - 1][i] * face[n][j] == face[n - 1][j - 1] * face[n][i]))
            throw InputError(label + ": d_i d_j identity fails");
    for (int n = 0; n + 2 <= top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= j; ++i)
          if (!(degen[n + 1][i] * degen[n][j] == degen[n + 1][j + 1] * degen[n][i]))
            throw InputError(label + ": s_i s_j identity fails");
    for (int n = 0; n < top; ++n)
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          Matrix<F> lhs = face[n + 1][i] * degen[n][j];
          if (i == j || i == j + 1) {
            if (!(lhs == Matrix<F>::identity(dim(n), ctx)))
              throw InputError(label + ": d_i s_j != id");
          } else if (i < j) {
            if (!(lhs == degen[n - 1][j - 1] * face[n][i]))
              throw InputError(label + ": d_i s_j identity fails");
          } else {
            if (!(lhs == degen[n - 1][j] * face[n][i - 1]))
              throw InputError(label + ": d_i s_j identity fails");
          }
        }
    if (connected) {
      if (deg[0].dim() != 1 || deg[0].counit[0].is_zero())
        throw InputError(label + ": connectedness fails in degree 0");
      if (!deg[0].is_grouplike(unit_vector()))
        throw InputError(label + ": degree-0 unit is not group-like");
    }
  }
};

// ---------------------------------------------------------------------------
// chains
// ---------------------------------------------------------------------------

template <FieldScalar F>
struct ChainsResult {
  SimplicialCoalgebra<F> sc;
  std::vector<std::vector<SPair>> pairs;  // basis order per degree
  std::vector<std::map<SPair, int>> index;

  int pair_index(int n, const SPair& p) const { return index[n].at(p); }
};

template <FieldScalar F>
ChainsResult<F> chains(const SimplicialSet& x, typename F::Ctx ctx) {
  ChainsResult<F> out;
  auto& sc = out.sc;
  sc.ctx = ctx;
  sc.top = x.dim_bound();
  sc.connected = x.reduced();
  sc.chains_type = true;
  out.pairs.resize(sc.top + 1);
  out.index.resize(sc.top + 1);
  sc.deg.resize(sc.top + 1);
  for (int n = 0; n <= sc.top; ++n) {
    out.pairs[n] = x.simplices(n);
    std::vector<std::string> names;
    for (int i = 0; i < int(out.pairs[n].size()); ++i) {
      out.index[n][out.pairs[n][i]] = i;
      names.push_back(x.pair_name(out.pairs[n][i]));
    }
    sc.deg[n] = Coalgebra<F>::diagonal(ctx, std::move(names));
  }
  sc.face.resize(sc.top + 1);
  sc.degen.resize(sc.top + 1);
  for (int n = 1; n <= sc.top; ++n) {
    sc.face[n].assign(n + 1, Matrix<F>(int(out.pairs[n - 1].size()), int(out.pairs[n].size()), ctx));
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < int(out.pairs[n].size()); ++c)
        sc.face[n][i].add_entry(out.index[n - 1].at(x.face(out.pairs[n][c], i)), c, ctx.one());
  }
  for (int n = 0; n < sc.top; ++n) {
    sc.degen[n].assign(n + 1, Matrix<F>(int(out.pairs[n + 1].size()), int(out.pairs[n].size()), ctx));
    for (int i = 0; i <= n; ++i)
      for (int c = 0; c < int(out.pairs[n].size()); ++c)
        sc.degen[n][i].add_entry(out.index[n + 1].at(x.degeneracy(out.pairs[n][c], i)), c, ctx.one());
  }
  return out;
}

// ---------------------------------------------------------------------------
// points
// ---------------------------------------------------------------------------

template <FieldScalar F>
struct PointsResult {
  Extraction ex;                                  // the reduced simplicial set
  std::vector<GroupLikeResult<F>> grouplikes;     // per degree, canonical order
};

template <FieldScalar F>
PointsResult<F> points(const SimplicialCoalgebra<F>& sc, uint64_t brute_budget = 1u << 20) {
  if (!sc.connected) throw InputError("points requires a connected simplicial coalgebra");
  PointsResult<F> out;
  out.grouplikes.resize(sc.top + 1);
  for (int n = 0; n <= sc.top; ++n) {
    out.grouplikes[n] = grouplikes(sc.deg[n], brute_budget);
    if (!out.grouplikes[n].stats.complete)
      throw InconclusiveError("group-like search inconclusive in degree " + std::to_string(n) +
                              ": " + out.grouplikes[n].stats.note);
  }
  auto locate = [&](int n, const std::vector<F>& v) {
    auto& els = out.grouplikes[n].elements;
    for (int i = 0; i < int(els.size()); ++i)
      if (els[i] == v) return i;
    throw InputError("coalgebra map does not preserve group-likes");
  };
  DegreewiseData dd;
  dd.dim_bound = sc.top;
  dd.reduced_hint = out.grouplikes[0].elements.size() == 1;
  dd.sizes.resize(sc.top + 1);
  for (int n = 0; n <= sc.top; ++n) dd.sizes[n] = int(out.grouplikes[n].elements.size());
  dd.face = [&, locate](int n, int i, int e) {
    return locate(n - 1, sc.face[n][i].apply(out.grouplikes[n].elements[e]));
  };
  dd.degen = [&, locate](int n, int i, int e) {
    return locate(n + 1, sc.degen[n][i].apply(out.grouplikes[n].elements[e]));
  };
  dd.namer = [&](int n, int e) {
    // indicator vectors get their basis name; others a generic one
    const auto& v = out.grouplikes[n].elements[e];
    int ones = 0, pos = -1;
    bool indicator = true;
    for (int i = 0; i < int(v.size()); ++i) {
      if (v[i].is_zero()) continue;
      if (!v[i].is_one()) indicator = false;
      ++ones;
      pos = i;
    }
    if (indicator && ones == 1) return sc.deg[n].basis[pos];
    return "g" + std::to_string(n) + "_" + std::to_string(e);
  };
  out.ex = degreewise_extract(dd);
  return out;
}

// unit X -> P(F[X]): a degreewise bijection commuting with all operators
template <FieldScalar F>
struct UnitResult {
  bool ok = false;
  std::string note;
};

template <FieldScalar F>
UnitResult<F> unit_check(const SimplicialSet& x, typename F::Ctx ctx) {
  UnitResult<F> out;
  auto ch = chains<F>(x, ctx);
  PointsResult<F> pr = points(ch.sc);
  // eta sends a nondegenerate simplex to the class of its indicator vector
  SimplicialMap eta(&x, &pr.ex.sset);
  for (int n = 0; n <= x.dim_bound(); ++n)
    for (int i = 0; i < x.count(n); ++i) {
      SPair p{DegWord{}, SimplexId{n, i}};
      int pi = ch.pair_index(n, p);
      std::vector<F> v(ch.sc.dim(n), ctx.zero());
      v[pi] = ctx.one();
      int e = -1;
      auto& els = pr.grouplikes[n].elements;
      for (int t = 0; t < int(els.size()); ++t)
        if (els[t] == v) e = t;
      if (e < 0) {
        out.note = "indicator vector is not among the group-likes";
        return out;
      }
      SPair img = pr.ex.expr[n][e];
      if (img.degenerate()) {
        out.note = "unit image of a nondegenerate simplex is degenerate";
        return out;
      }
      eta.set_image({n, i}, img);
    }
  if (auto v = eta.validate()) {
    out.note = v->message;
    return out;
  }
  if (!eta.is_isomorphism()) {
    out.note = "unit is not a degreewise bijection";
    return out;
  }
  out.ok = true;
  return out;
}

// ---------------------------------------------------------------------------
// equivariant chains and coalgebra fixed points
// ---------------------------------------------------------------------------

template <FieldScalar F>
struct GSimplicialCoalgebra {
  SimplicialCoalgebra<F> sc;
  FiniteGroup group;
  std::vector<std::vector<Matrix<F>>> act;  // act[g][n]: C_n -> C_n

  void require_valid(const std::string& label) const {
    sc.require_valid(label);
    for (int g = 0; g < group.size(); ++g)
      for (int n = 0; n <= sc.top; ++n) {
        if (!is_coalgebra_morphism(sc.deg[n], sc.deg[n], act[g][n]))
          throw InputError(label + ": action is not by coalgebra morphisms");
        for (int i = 0; i <= n && n >= 1; ++i)
          if (!(sc.face[n][i] * act[g][n] == act[g][n - 1] * sc.face[n][i]))
            throw InputError(label + ": action does not commute with faces");
        for (int i = 0; i <= n && n < sc.top; ++i)
          if (!(sc.degen[n][i] * act[g][n] == act[g][n + 1] * sc.degen[n][i]))
            throw InputError(label + ": action does not commute with degeneracies");
      }
    for (int n = 0; n <= sc.top; ++n) {
      if (!(act[group.identity()][n] == Matrix<F>::identity(sc.dim(n), sc.ctx)))
        throw InputError(label + ": identity acts nontrivially");
      for (int a = 0; a < group.size(); ++a)
        for (int b = 0; b < group.size(); ++b)
          if (!(act[group.mul(a, b)][n] == act[a][n] * act[b][n]))
            throw InputError(label + ": action is not a homomorphism");
    }
  }
};

template <FieldScalar F>
struct EquivariantChainsResult {
  GSimplicialCoalgebra<F> gsc;
  std::vector<std::vector<SPair>> pairs;
  std::vector<std::map<SPair, int>> index;
};

template <FieldScalar F>
EquivariantChainsResult<F> chains_equivariant(const GSimplicialSet& y, typename F::Ctx ctx) {
  EquivariantChainsResult<F> out;
  auto ch = chains<F>(y.sset(), ctx);
  out.gsc.sc = std::move(ch.sc);
  out.pairs = std::move(ch.pairs);
  out.index = std::move(ch.index);
  out.gsc.group = y.group();
  out.gsc.act.resize(y.group().size());
  for (int g = 0; g < y.group().size(); ++g) {
    out.gsc.act[g].resize(out.gsc.sc.top + 1);
    for (int n = 0; n <= out.gsc.sc.top; ++n) {
      Matrix<F> m(out.gsc.sc.dim(n), out.gsc.sc.dim(n), ctx);
      for (int c = 0; c < out.gsc.sc.dim(n); ++c)
        m.add_entry(out.index[n].at(y.apply(g, out.pairs[n][c])), c, ctx.one());
      out.gsc.act[g][n] = std::move(m);
    }
  }
  return out;
}

template <FieldScalar F>
struct CoalgFixedPoints {
  SimplicialCoalgebra<F> sc;
  std::vector<Matrix<F>> inclusion;  // per degree, into the ambient object
};

// degreewise: largest subcoalgebra inside the H-invariant vectors
template <FieldScalar F>
CoalgFixedPoints<F> coalg_fixed_points(const GSimplicialCoalgebra<F>& g, const Subgroup& h) {
  CoalgFixedPoints<F> out;
  out.sc.ctx = g.sc.ctx;
  out.sc.top = g.sc.top;
  out.sc.connected = g.sc.connected;
  out.sc.chains_type = false;
  out.sc.deg.resize(g.sc.top + 1);
  out.inclusion.resize(g.sc.top + 1);
  for (int n = 0; n <= g.sc.top; ++n) {
    int d = g.sc.dim(n);
    Matrix<F> stack(0, d, g.sc.ctx);
    for (int e : h.elems) {
      if (e == g.group.identity()) continue;
      stack = stack.vstack(g.act[e][n] - Matrix<F>::identity(d, g.sc.ctx));
    }
    Matrix<F> inv = stack.rows() == 0 ? Matrix<F>::identity(d, g.sc.ctx) : kernel(stack);
    auto sub = largest_subcoalgebra(g.sc.deg[n], inv,
                                    "f" + std::to_string(n) + "_");
    out.sc.deg[n] = std::move(sub.coalg);
    out.inclusion[n] = std::move(sub.inclusion);
  }
  out.sc.face.resize(g.sc.top + 1);
  out.sc.degen.resize(g.sc.top + 1);
  for (int n = 1; n <= g.sc.top; ++n)
    for (int i = 0; i <= n; ++i) {
      auto m = solve(out.inclusion[n - 1], g.sc.face[n][i] * out.inclusion[n]);
      if (!m) throw InputError("coalgebra fixed points: face does not restrict");
      out.sc.face[n].push_back(std::move(*m));
    }
  for (int n = 0; n < g.sc.top; ++n)
    for (int i = 0; i <= n; ++i) {
      auto m = solve(out.inclusion[n + 1], g.sc.degen[n][i] * out.inclusion[n]);
      if (!m) throw InputError("coalgebra fixed points: degeneracy does not restrict");
      out.sc.degen[n].push_back(std::move(*m));
    }
  out.sc.require_valid("coalgebra fixed points");
  return out;
}

// ---------------------------------------------------------------------------
// wedge sum (coproduct of connected simplicial coalgebras)
// ---------------------------------------------------------------------------

template <FieldScalar F>
struct WedgeSumResult {
  SimplicialCoalgebra<F> sc;
  // inclusion[k][n] : C^k_n -> R_n, identifying the coaugmentation lines
  std::vector<std::vector<Matrix<F>>> inclusion;
  // block bookkeeping: per degree, for each of the result basis vectors
  // beyond the coaugmentation, its (input, input basis index) origin
  std::vector<std::vector<std::pair<int, int>>> origin;
};

template <FieldScalar F>
WedgeSumResult<F> wedge_sum(const std::vector<const SimplicialCoalgebra<F>*>& parts) {
  if (parts.empty()) throw InputError("wedge_sum of nothing");
  for (auto* p : parts)
    if (!p->connected) throw InputError("wedge_sum requires connected inputs");
  auto ctx = parts[0]->ctx;
  int top = parts[0]->top;
  for (auto* p : parts) {
    top = std::min(top, p->top);
    if (!p->ctx.same(ctx)) throw InputError("wedge_sum: field mismatch");
  }
  WedgeSumResult<F> out;
  out.sc.ctx = ctx;
  out.sc.top = top;
  out.sc.connected = true;
  out.inclusion.assign(parts.size(), {});
  out.origin.resize(top + 1);
  out.sc.deg.resize(top + 1);

  // choose, per input and degree, basis indices completing the coaugmentation
  std::vector<std::vector<std::vector<int>>> chosen(parts.size());
  for (size_t k = 0; k < parts.size(); ++k) {
    chosen[k].resize(top + 1);
    out.inclusion[k].resize(top + 1);
  }
  for (int n = 0; n <= top; ++n) {
    int rdim = 1;
    for (size_t k = 0; k < parts.size(); ++k) {
      Matrix<F> l = Matrix<F>::from_column(parts[k]->coaug_vector(n), ctx);
      Matrix<F> cand = Matrix<F>::identity(parts[k]->dim(n), ctx);
      chosen[k][n] = greedy_complete(l, cand);
      if (int(chosen[k][n].size()) + 1 != parts[k]->dim(n))
        throw InputError("wedge_sum: coaugmentation completion failed");
      rdim += int(chosen[k][n].size());
    }
    // result basis: index 0 = coaugmentation, then blocks
    std::vector<std::string> names{"l" + std::to_string(n)};
    out.origin[n].clear();
    for (size_t k = 0; k < parts.size(); ++k)
      for (int c : chosen[k][n]) {
        names.push_back("w" + std::to_string(k) + ":" + parts[k]->deg[n].basis[c]);
        out.origin[n].emplace_back(int(k), c);
      }
    (void)rdim;
    out.sc.deg[n].ctx = ctx;
    out.sc.deg[n].basis = names;
    out.sc.deg[n].delta.resize(names.size());
    out.sc.deg[n].counit.assign(names.size(), ctx.zero());
  }

  // inclusion matrices: l^k |-> e_0, chosen basis vectors to unit vectors,
  // and the remaining basis vector expressed through them
  for (int n = 0; n <= top; ++n) {
    int offset = 1;
    for (size_t k = 0; k < parts.size(); ++k) {
      int d = parts[k]->dim(n);
      int rdim = int(out.sc.deg[n].basis.size());
      // base-change: express each e_i of C^k_n in the basis {l, chosen}
      Matrix<F> cols(d, d, ctx);
      {
        std::vector<std::vector<F>> cc;
        cc.push_back(parts[k]->coaug_vector(n));
        for (int c : chosen[k][n]) {
          std::vector<F> v(d, ctx.zero());
          v[c] = ctx.one();
          cc.push_back(std::move(v));
        }
        cols = Matrix<F>::from_columns(cc, d, ctx);
      }
      auto coords = solve(cols, Matrix<F>::identity(d, ctx));
      if (!coords) throw InputError("wedge_sum: base change failed");
      Matrix<F> inc(rdim, d, ctx);
      for (int i = 0; i < d; ++i) {
        F cl = coords->at(0, i);
        if (!cl.is_zero()) inc.add_entry(0, i, cl);
        for (int t = 0; t < int(chosen[k][n].size()); ++t) {
          F c = coords->at(t + 1, i);
          if (!c.is_zero()) inc.add_entry(offset + t, i, c);
        }
      }
      out.inclusion[k][n] = std::move(inc);
      offset += int(chosen[k][n].size());
    }
  }

  // structure: coproduct and counit through the inclusions
  for (int n = 0; n <= top; ++n) {
    int rdim = int(out.sc.deg[n].basis.size());
    // coaugmentation vector: group-like with counit 1
    out.sc.deg[n].delta[0] = {{0, 0, ctx.one()}};
    out.sc.deg[n].counit[0] = ctx.one();
    int offset = 1;
    for (size_t k = 0; k < parts.size(); ++k) {
      const Matrix<F>& inc = out.inclusion[k][n];
      Matrix<F> dm = inc.kron(inc) * parts[k]->deg[n].delta_matrix();
      for (int t = 0; t < int(chosen[k][n].size()); ++t) {
        int src = chosen[k][n][t];
        for (int j = 0; j < rdim; ++j)
          for (int kk = 0; kk < rdim; ++kk) {
            F c = dm.at(j * rdim + kk, src);
            if (!c.is_zero()) out.sc.deg[n].delta[offset + t].emplace_back(j, kk, c);
          }
        out.sc.deg[n].counit[offset + t] = parts[k]->deg[n].counit[src];
      }
      offset += int(chosen[k][n].size());
    }
    out.sc.deg[n].require_valid("wedge_sum degree " + std::to_string(n));
  }

  // operators: defined blockwise; the coaugmentation goes to coaugmentation
  out.sc.face.resize(top + 1);
  out.sc.degen.resize(top + 1);
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i) {
      int rows = int(out.sc.deg[n - 1].basis.size());
      int cols = int(out.sc.deg[n].basis.size());
      Matrix<F> m(rows, cols, ctx);
      m.add_entry(0, 0, ctx.one());
      int offset = 1;
      for (size_t k = 0; k < parts.size(); ++k) {
        Matrix<F> blk = out.inclusion[k][n - 1] * parts[k]->face[n][i];
        for (int t = 0; t < int(chosen[k][n].size()); ++t) {
          int src = chosen[k][n][t];
          for (int r = 0; r < rows; ++r) {
            F c = blk.at(r, src);
            if (!c.is_zero()) m.add_entry(r, offset + t, c);
          }
        }
        offset += int(chosen[k][n].size());
      }
      out.sc.face[n].push_back(std::move(m));
    }
  for (int n = 0; n < top; ++n)
    for (int i = 0; i <= n; ++i) {
      int rows = int(out.sc.deg[n + 1].basis.size());
      int cols = int(out.sc.deg[n].basis.size());
      Matrix<F> m(rows, cols, ctx);
      m.add_entry(0, 0, ctx.one());
      int offset = 1;
      for (size_t k = 0; k < parts.size(); ++k) {
        Matrix<F> blk = out.inclusion[k][n + 1] * parts[k]->degen[n][i];
        for (int t = 0; t < int(chosen[k][n].size()); ++t) {
          int src = chosen[k][n][t];
          for (int r = 0; r < rows; ++r) {
            F c = blk.at(r, src);
            if (!c.is_zero()) m.add_entry(r, offset + t, c);
          }
        }
        offset += int(chosen[k][n].size());
      }
      out.sc.degen[n].push_back(std::move(m));
    }
  out.sc.require_valid("wedge_sum");
  return out;
}

// permutation action on the copies of an orbit-indexed wedge sum; all parts
// must be the same object
template <FieldScalar F>
struct GWedgeSumResult {
  GSimplicialCoalgebra<F> gsc;
  std::vector<std::vector<std::pair<int, int>>> origin;  // per degree, (copy, input index)
};

template <FieldScalar F>
GWedgeSumResult<F> wedge_sum_with_action(const SimplicialCoalgebra<F>& part, const GSet& s,
                                         const FiniteGroup& grp) {
  std::vector<const SimplicialCoalgebra<F>*> parts(size_t(s.size), &part);
  if (s.size == 0) throw InputError("wedge_sum_with_action: empty orbit");
  auto ws = wedge_sum(parts);
  GWedgeSumResult<F> out;
  out.gsc.sc = std::move(ws.sc);
  out.origin = std::move(ws.origin);
  out.gsc.group = grp;
  out.gsc.act.resize(grp.size());
  for (int g = 0; g < grp.size(); ++g) {
    out.gsc.act[g].resize(out.gsc.sc.top + 1);
    for (int n = 0; n <= out.gsc.sc.top; ++n) {
      int rdim = out.gsc.sc.dim(n);
      Matrix<F> m(rdim, rdim, out.gsc.sc.ctx);
      m.add_entry(0, 0, out.gsc.sc.ctx.one());
      int block = (rdim - 1) / std::max(1, s.size);
      for (int k = 0; k < s.size; ++k)
        for (int t = 0; t < block; ++t)
          m.add_entry(1 + s.act[g][k] * block + t, 1 + k * block + t, out.gsc.sc.ctx.one());
      out.gsc.act[g][n] = std::move(m);
    }
  }
  out.gsc.require_valid("wedge_sum_with_action");
  return out;
}

// points with the induced group action
template <FieldScalar F>
struct EquivariantPointsResult {
  GSimplicialSet gss;
  PointsResult<F> pr;
};

template <FieldScalar F>
EquivariantPointsResult<F> points_equivariant(const GSimplicialCoalgebra<F>& g,
                                              uint64_t brute_budget = 1u << 20) {
  EquivariantPointsResult<F> out;
  out.pr = points(g.sc, brute_budget);
  GSimplicialSet gss(out.pr.ex.sset, g.group);
  for (int a = 0; a < g.group.size(); ++a)
    for (int n = 0; n <= g.sc.top; ++n) {
      auto& els = out.pr.grouplikes[n].elements;
      for (int e = 0; e < int(els.size()); ++e) {
        if (out.pr.ex.expr[n][e].degenerate()) continue;
        std::vector<F> moved = g.act[a][n].apply(els[e]);
        int target = -1;
        for (int t = 0; t < int(els.size()); ++t)
          if (els[t] == moved) target = t;
        if (target < 0) throw InputError("points_equivariant: action does not preserve group-likes");
        const SPair& img = out.pr.ex.expr[n][target];
        if (img.degenerate())
          throw InputError("points_equivariant: action image became degenerate");
        gss.set_action(a, n, out.pr.ex.expr[n][e].s.idx, img.s.idx);
      }
    }
  gss.validate();
  out.gss = std::move(gss);
  return out;
}

// F_G[S (x) X] = S (x) F[X]: data-exact comparison of the equivariant chains
// of an orbit wedge with the orbit-indexed wedge sum carrying the
// permutation action
template <FieldScalar F>
bool equivariant_chains_square_check(const GSet& s, const SimplicialSet& x, const FiniteGroup& grp,
                                     typename F::Ctx ctx) {
  GSimplicialSet t = tensor_set(s, x, grp);
  auto a = chains_equivariant<F>(t, ctx);
  auto chx = chains<F>(x, ctx);
  auto b = wedge_sum_with_action(chx.sc, s, grp);

  int top = b.gsc.sc.top;
  // canonical correspondence sigma: A basis index -> B basis index
  std::vector<std::vector<int>> sigma(top + 1);
  // lookup (copy, X pair index) -> B index
  std::vector<std::map<std::pair<int, int>, int>> origin_index(top + 1);
  for (int n = 0; n <= top; ++n)
    for (int t2 = 0; t2 < int(b.origin[n].size()); ++t2)
      origin_index[n][b.origin[n][t2]] = 1 + t2;
  for (int n = 0; n <= top; ++n) {
    sigma[n].assign(a.gsc.sc.dim(n), -1);
    for (int c = 0; c < int(a.pairs[n].size()); ++c) {
      const SPair& p = a.pairs[n][c];
      if (p.s.dim == 0) {
        sigma[n][c] = 0;  // the basepoint degeneracy line
        continue;
      }
      const std::string& nm = t.sset().name(p.s);
      auto colon = nm.find(':');
      int copy = std::stoi(nm.substr(1, colon - 1));
      auto core = x.find(p.s.dim, nm.substr(colon + 1));
      if (!core) return false;
      int xi = chx.pair_index(p.dim(), SPair{p.w, *core});
      auto it = origin_index[p.dim()].find({copy, xi});
      if (it == origin_index[p.dim()].end()) return false;
      sigma[n][c] = it->second;
    }
    // bijective?
    std::vector<bool> hit(b.gsc.sc.dim(n), false);
    if (a.gsc.sc.dim(n) != b.gsc.sc.dim(n)) return false;
    for (int v : sigma[n]) {
      if (v < 0 || hit[v]) return false;
      hit[v] = true;
    }
  }
  auto transported_equal = [&](const Matrix<F>& ma, const Matrix<F>& mb, int nrow, int ncol) {
    for (int r = 0; r < ma.rows(); ++r)
      for (int c = 0; c < ma.cols(); ++c)
        if (!(ma.at(r, c) == mb.at(sigma[nrow][r], sigma[ncol][c]))) return false;
    return true;
  };
  for (int n = 1; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      if (!transported_equal(a.gsc.sc.face[n][i], b.gsc.sc.face[n][i], n - 1, n)) return false;
  for (int n = 0; n < top; ++n)
    for (int i = 0; i <= n; ++i)
      if (!transported_equal(a.gsc.sc.degen[n][i], b.gsc.sc.degen[n][i], n + 1, n)) return false;
  for (int g = 0; g < grp.size(); ++g)
    for (int n = 0; n <= top; ++n)
      if (!transported_equal(a.gsc.act[g][n], b.gsc.act[g][n], n, n)) return false;
  // coproducts: both diagonal on corresponding basis lines
  for (int n = 0; n <= top; ++n)
    for (int c = 0; c < a.gsc.sc.dim(n); ++c) {
      auto& bd = b.gsc.sc.deg[n].delta[sigma[n][c]];
      if (bd.size() != 1) return false;
      auto& [j, k, coef] = bd[0];
      if (j != sigma[n][c] || k != sigma[n][c] || !coef.is_one()) return false;
      if (!b.gsc.sc.deg[n].counit[sigma[n][c]].is_one()) return false;
    }
  return true;
}

// P(F[X]^H) agrees with X^H for a G-simplicial set X
template <FieldScalar F>
bool coalg_fixed_matches_fixed_points(const GSimplicialSet& y, const Subgroup& h,
                                      typename F::Ctx ctx) {
  auto gsc = chains_equivariant<F>(y, ctx);
  auto cfp = coalg_fixed_points(gsc.gsc, h);
  auto pts = points(cfp.sc);
  FixedPoints fp = fixed_points(y, h);
  // map each fixed nondegenerate simplex to the class of its indicator
  SimplicialMap cmp(&fp.sset, &pts.ex.sset);
  for (int n = 0; n <= fp.sset.dim_bound(); ++n)
    for (int i = 0; i < fp.sset.count(n); ++i) {
      SPair orig{DegWord{}, SimplexId{n, fp.to_orig[n][i]}};
      int pi = gsc.index[n].at(orig);
      std::vector<F> ambient(gsc.gsc.sc.dim(n), ctx.zero());
      ambient[pi] = ctx.one();
      auto sub = solve(cfp.inclusion[n], Matrix<F>::from_column(ambient, ctx));
      if (!sub) return false;
      int e = -1;
      auto& els = pts.grouplikes[n].elements;
      for (int t = 0; t < int(els.size()); ++t)
        if (els[t] == sub->column(0)) e = t;
      if (e < 0) return false;
      const SPair& img = pts.ex.expr[n][e];
      if (img.degenerate()) return false;
      cmp.set_image({n, i}, img);
    }
  return cmp.is_isomorphism();
}

// the unit as an equivariant comparison: P_G(F_G[X]) recovers X, action and all
template <FieldScalar F>
bool equivariant_unit_check(const GSimplicialSet& y, typename F::Ctx ctx) {
  auto gsc = chains_equivariant<F>(y, ctx);
  auto pe = points_equivariant(gsc.gsc);
  SimplicialMap eta(&y.sset(), &pe.gss.sset());
  for (int n = 0; n <= y.sset().dim_bound(); ++n)
    for (int i = 0; i < y.sset().count(n); ++i) {
      int pi = gsc.index[n].at(SPair{DegWord{}, SimplexId{n, i}});
      std::vector<F> v(gsc.gsc.sc.dim(n), ctx.zero());
      v[pi] = ctx.one();
      int e = -1;
      auto& els = pe.pr.grouplikes[n].elements;
      for (int t = 0; t < int(els.size()); ++t)
        if (els[t] == v) e = t;
      if (e < 0) return false;
      const SPair& img = pe.pr.ex.expr[n][e];
      if (img.degenerate()) return false;
      eta.set_image({n, i}, img);
    }
  if (!eta.is_isomorphism()) return false;
  // equivariance of eta
  for (int a = 0; a < y.group().size(); ++a)
    for (int n = 0; n <= y.sset().dim_bound(); ++n)
      for (int i = 0; i < y.sset().count(n); ++i) {
        SPair lhs = eta.apply(y.apply(a, SPair{DegWord{}, SimplexId{n, i}}));
        SPair rhs = pe.gss.apply(a, eta.image({n, i}));
        if (!(lhs == rhs)) return false;
      }
  return true;
}

}  // namespace eqc
