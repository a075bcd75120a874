#pragma once

// Chain complexes, normalized chains of a simplicial coalgebra with the
// Alexander-Whitney coproduct, homology, and induced maps.

#include "equicobar/simplicial_coalgebra.hpp"

namespace eqc {

template <FieldScalar F>
struct ChainComplex {
  using Ctx = typename F::Ctx;
  Ctx ctx;
  int top = 0;
  std::vector<int> dims;          // 0..top
  std::vector<Matrix<F>> d;       // d[n]: C_n -> C_{n-1}, n >= 1; d[0] unused

  void require_valid(const std::string& label) const {
    for (int n = 2; n <= top; ++n)
      if (!(d[n - 1] * d[n]).is_zero()) throw InputError(label + ": d^2 != 0");
  }

  int homology_dim(int n) const {
    if (n < 0 || n > top) throw InputError("homology degree out of range");
    int z = n == 0 ? dims[0] : kernel(d[n]).cols();
    int b = n + 1 <= top ? rank(d[n + 1]) : 0;
    return z - b;
  }

  // representatives: columns spanning a complement of the boundaries in the cycles
  Matrix<F> homology_basis(int n) const {
    Matrix<F> z = n == 0 ? Matrix<F>::identity(dims[0], ctx) : kernel(d[n]);
    Matrix<F> b = n + 1 <= top ? column_space(d[n + 1]) : Matrix<F>(dims[n], 0, ctx);
    std::vector<int> chosen = greedy_complete(b, z);
    std::vector<std::vector<F>> cols;
    for (int c : chosen) cols.push_back(z.column(c));
    return Matrix<F>::from_columns(cols, dims[n], ctx);
  }
};

template <FieldScalar F>
struct ChainMap {
  std::vector<Matrix<F>> f;  // f[n]: src_n -> dst_n

  static void require_chain_map(const ChainComplex<F>& src, const ChainComplex<F>& dst,
                                const std::vector<Matrix<F>>& f, const std::string& label) {
    int top = std::min(src.top, dst.top);
    for (int n = 1; n <= top; ++n)
      if (!(dst.d[n] * f[n] == f[n - 1] * src.d[n]))
        throw InputError(label + ": not a chain map in degree " + std::to_string(n));
  }
};

// Is the induced map on degree-n homology an isomorphism? Exact rank test.
template <FieldScalar F>
bool homology_iso(const ChainComplex<F>& src, const ChainComplex<F>& dst,
                  const std::vector<Matrix<F>>& f, int n) {
  Matrix<F> hx = src.homology_basis(n);
  Matrix<F> hy = dst.homology_basis(n);
  if (hx.cols() != hy.cols()) return false;
  if (hx.cols() == 0) return true;
  // express f(hx) in (hy | boundaries): the hy-block must be invertible
  Matrix<F> by = n + 1 <= dst.top ? column_space(dst.d[n + 1]) : Matrix<F>(dst.dims[n], 0, dst.ctx);
  Matrix<F> space = hy.hstack(by);
  auto coords = solve(space, f[n] * hx);
  if (!coords) return false;  // image not even in the cycle span mod boundaries
  Matrix<F> block(hy.cols(), hx.cols(), src.ctx);
  for (int r = 0; r < hy.cols(); ++r)
    for (int c = 0; c < hx.cols(); ++c) block.add_entry(r, c, coords->at(r, c));
  return rank(block) == hy.cols();
}

// ---------------------------------------------------------------------------
// dg coalgebras and normalized chains
// ---------------------------------------------------------------------------

template <FieldScalar F>
struct DgCoalgebra {
  using Ctx = typename F::Ctx;
  Ctx ctx;
  int top = 0;
  std::vector<std::vector<std::string>> basis;  // per degree
  std::vector<Matrix<F>> d;                     // d[n]: N_n -> N_{n-1}
  // delta[n][p]: N_n -> N_p (x) N_{n-p}, rows flattened (a * dim_{n-p} + b)
  std::vector<std::vector<Matrix<F>>> delta;
  std::vector<F> counit0;                       // counit on degree 0
  bool connected = false;
  bool chains_type = false;

  int dim(int n) const { return n >= 0 && n <= top ? int(basis[n].size()) : 0; }

  ChainComplex<F> complex() const {
    ChainComplex<F> c;
    c.ctx = ctx;
    c.top = top;
    c.dims.resize(top + 1);
    for (int n = 0; n <= top; ++n) c.dims[n] = dim(n);
    c.d = d;
    return c;
  }

  void require_valid(const std::string& label) const {
    complex().require_valid(label);
    // Delta is a chain map: Delta_{p,q} d = (d (x) 1) Delta_{p+1,q} + (-1)^p (1 (x) d) Delta_{p,q+1}
    for (int n = 1; n <= top; ++n)
      for (int p = 0; p + 1 <= n; ++p) {
        int q = n - 1 - p;
        Matrix<F> lhs = delta[n - 1][p] * d[n];
        Matrix<F> rhs(dim(p) * dim(q), dim(n), ctx);
        if (p + 1 <= n)
          rhs = rhs + Matrix<F>(d[p + 1]).kron(Matrix<F>::identity(dim(q), ctx)) * delta[n][p + 1];
        {
          Matrix<F> term = Matrix<F>::identity(dim(p), ctx).kron(d[q + 1]) * delta[n][p];
          if (p % 2 == 1) term = -term;
          rhs = rhs + term;
        }
        if (!(lhs == rhs)) throw InputError(label + ": coproduct is not a chain map");
      }
    // coassociativity
    for (int n = 0; n <= top; ++n)
      for (int p = 0; p <= n; ++p)
        for (int q = 0; p + q <= n; ++q) {
          int r = n - p - q;
          Matrix<F> lhs =
              delta[p + q][p].kron(Matrix<F>::identity(dim(r), ctx)) * delta[n][p + q];
          Matrix<F> rhs =
              Matrix<F>::identity(dim(p), ctx).kron(delta[q + r][q]) * delta[n][p];
          if (!(lhs == rhs)) throw InputError(label + ": coproduct not coassociative");
        }
    // counit laws against degree 0
    for (int n = 0; n <= top; ++n) {
      Matrix<F> eps(1, dim(0), ctx);
      for (int i = 0; i < dim(0); ++i) eps.add_entry(0, i, counit0[i]);
      Matrix<F> l = eps.kron(Matrix<F>::identity(dim(n), ctx)) * delta[n][0];
      Matrix<F> r = Matrix<F>::identity(dim(n), ctx).kron(eps) * delta[n][n];
      if (!(l == Matrix<F>::identity(dim(n), ctx)) || !(r == Matrix<F>::identity(dim(n), ctx)))
        throw InputError(label + ": counit law fails");
    }
  }
};

template <FieldScalar F>
struct NormalizedResult {
  DgCoalgebra<F> dg;
  std::vector<Matrix<F>> proj;  // C_n -> N_n
  std::vector<Matrix<F>> sect;  // N_n -> C_n, proj . sect = id
};

// Normalized chains: quotient by the degenerate subspaces, differential the
// alternating face sum, coproduct the Alexander-Whitney approximation.
template <FieldScalar F>
NormalizedResult<F> normalized_chains(const SimplicialCoalgebra<F>& sc) {
  auto ctx = sc.ctx;
  NormalizedResult<F> out;
  out.dg.ctx = ctx;
  out.dg.top = sc.top;
  out.dg.connected = sc.connected;
  out.dg.chains_type = sc.chains_type;
  out.dg.basis.resize(sc.top + 1);
  out.proj.resize(sc.top + 1);
  out.sect.resize(sc.top + 1);
  for (int n = 0; n <= sc.top; ++n) {
    int dn = sc.dim(n);
    Matrix<F> degsp(dn, 0, ctx);
    if (n >= 1)
      for (int i = 0; i <= n - 1; ++i) degsp = degsp.hstack(sc.degen[n - 1][i]);
    Matrix<F> dbasis = column_space(degsp);
    std::vector<int> chosen = greedy_complete(dbasis, Matrix<F>::identity(dn, ctx));
    for (int c : chosen) out.dg.basis[n].push_back(sc.deg[n].basis[c]);
    int nn = int(chosen.size());
    Matrix<F> sect(dn, nn, ctx);
    for (int t = 0; t < nn; ++t) sect.add_entry(chosen[t], t, ctx.one());
    // proj: coordinates in [dbasis | sect], keeping the tail block
    Matrix<F> full = dbasis.hstack(sect);
    auto coords = solve(full, Matrix<F>::identity(dn, ctx));
    if (!coords) throw InputError("normalized chains: base change failed");
    Matrix<F> proj(nn, dn, ctx);
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < dn; ++c) {
        F v = coords->at(dbasis.cols() + r, c);
        if (!v.is_zero()) proj.add_entry(r, c, v);
      }
    out.proj[n] = std::move(proj);
    out.sect[n] = std::move(sect);
  }
  // differential
  out.dg.d.resize(sc.top + 1);
  out.dg.d[0] = Matrix<F>(0, out.dg.dim(0), ctx);
  for (int n = 1; n <= sc.top; ++n) {
    Matrix<F> alt(sc.dim(n - 1), sc.dim(n), ctx);
    for (int i = 0; i <= n; ++i) {
      Matrix<F> t = sc.face[n][i];
      if (i % 2 == 1) t = -t;
      alt = alt + t;
    }
    out.dg.d[n] = out.proj[n - 1] * alt * out.sect[n];
    // well-definedness: the alternating sum maps degenerates to degenerates
    if (n >= 1) {
      Matrix<F> degsp(sc.dim(n), 0, ctx);
      for (int i = 0; i <= n - 1; ++i) degsp = degsp.hstack(sc.degen[n - 1][i]);
      if (!(out.proj[n - 1] * alt * degsp).is_zero())
        throw InputError("normalized chains: differential not defined on the quotient");
    }
  }
  // AW coproduct
  out.dg.delta.resize(sc.top + 1);
  for (int n = 0; n <= sc.top; ++n) {
    out.dg.delta[n].resize(n + 1);
    for (int p = 0; p <= n; ++p) {
      int q = n - p;
      // front p-face: d_{p+1} ... d_n; back q-face: d_0^{n-q}
      Matrix<F> front = Matrix<F>::identity(sc.dim(p), ctx);
      for (int j = p + 1; j <= n; ++j) front = front * sc.face[j][j];
      Matrix<F> back = Matrix<F>::identity(sc.dim(q), ctx);
      for (int j = q + 1; j <= n; ++j) back = back * sc.face[j][0];
      Matrix<F> aw = (out.proj[p] * front).kron(out.proj[q] * back) *
                     sc.deg[n].delta_matrix() * out.sect[n];
      out.dg.delta[n][p] = std::move(aw);
    }
  }
  out.dg.counit0.clear();
  for (int i = 0; i < out.dg.dim(0); ++i) {
    F acc = ctx.zero();
    for (int r = 0; r < sc.dim(0); ++r) acc = acc + sc.deg[0].counit[r] * out.sect[0].at(r, i);
    out.dg.counit0.push_back(acc);
  }
  out.dg.require_valid("normalized chains");
  return out;
}

// induced map of normalized chains from a simplicial map (on chains coalgebras)
template <FieldScalar F>
std::vector<Matrix<F>> normalized_map(const SimplicialMap& f, const ChainsResult<F>& cx,
                                      const ChainsResult<F>& cy, const NormalizedResult<F>& nx,
                                      const NormalizedResult<F>& ny) {
  auto ctx = cx.sc.ctx;
  int top = std::min(cx.sc.top, cy.sc.top);
  std::vector<Matrix<F>> out(top + 1);
  for (int n = 0; n <= top; ++n) {
    Matrix<F> m(cy.sc.dim(n), cx.sc.dim(n), ctx);
    for (int c = 0; c < cx.sc.dim(n); ++c)
      m.add_entry(cy.pair_index(n, f.apply(cx.pairs[n][c])), c, ctx.one());
    out[n] = ny.proj[n] * m * nx.sect[n];
  }
  return out;
}

// homology of a simplicial set: boundary matrices on nondegenerate simplices
// (the independent route used to cross-check the coalgebra pipeline)
template <FieldScalar F>
ChainComplex<F> simplicial_homology_complex(const SimplicialSet& x, typename F::Ctx ctx) {
  ChainComplex<F> c;
  c.ctx = ctx;
  c.top = x.dim_bound();
  c.dims.resize(c.top + 1);
  for (int n = 0; n <= c.top; ++n) c.dims[n] = x.count(n);
  c.d.resize(c.top + 1);
  c.d[0] = Matrix<F>(0, c.dims[0], ctx);
  for (int n = 1; n <= c.top; ++n) {
    Matrix<F> m(c.dims[n - 1], c.dims[n], ctx);
    for (int idx = 0; idx < x.count(n); ++idx)
      for (int i = 0; i <= n; ++i) {
        const SPair& f = x.stored_face({n, idx}, i);
        if (f.degenerate()) continue;
        F coef = i % 2 == 0 ? ctx.one() : -ctx.one();
        m.add_entry(f.s.idx, idx, coef);
      }
    c.d[n] = std::move(m);
  }
  c.require_valid("simplicial homology complex");
  return c;
}

template <FieldScalar F>
std::vector<int> homology_dims(const ChainComplex<F>& c, int through_degree) {
  std::vector<int> out;
  for (int n = 0; n <= std::min(through_degree, c.top); ++n) out.push_back(c.homology_dim(n));
  return out;
}

}  // namespace eqc
