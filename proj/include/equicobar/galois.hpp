#pragma once

// Finite-level Galois descent: semilinear actions on coalgebras of chains,
// fixed-point forms over the base field computed by restriction of scalars,
// the descent isomorphism, and the points functor P_G.

#include "equicobar/simplicial_coalgebra.hpp"

namespace eqc {

struct FieldExtension {
  std::shared_ptr<const FqSpec> base, top;
  int m = 1;          // [top : base]
  GF root;            // image of the base generator in the top field
  GF::Ctx base_ctx() const { return GF::Ctx(base); }
  GF::Ctx top_ctx() const { return GF::Ctx(top); }

  static FieldExtension make(uint32_t p, uint32_t k_base, uint32_t k_top) {
    if (k_top % k_base != 0) throw InputError("field extension: degrees do not divide");
    FieldExtension e;
    e.base = FqSpec::get(p, k_base);
    e.top = FqSpec::get(p, k_top);
    e.m = int(k_top / k_base);
    GF::Ctx tc(e.top);
    if (k_base == 1) {
      e.root = tc.one();  // prime field embeds by constants
      return e;
    }
    // canonical root: the least root of the base defining polynomial
    Poly<GF> f(tc, {});
    {
      std::vector<GF> cs;
      for (uint32_t c : e.base->modulus) cs.push_back(tc.from_int(long(c)));
      f = Poly<GF>(tc, std::move(cs));
    }
    for (uint64_t v = 0; v < e.top->q; ++v) {
      GF cand = tc.from_code(v);
      if (f.eval(cand).is_zero()) {
        e.root = cand;
        return e;
      }
    }
    throw InputError("field extension: no root of the base polynomial in the top field");
  }

  GF embed(const GF& a) const {
    if (!(a.spec() == *base)) throw FieldError("embed: element not in the base field");
    GF::Ctx tc(top);
    GF acc = tc.zero(), pw = tc.one();
    for (uint32_t i = 0; i < base->k; ++i) {
      acc = acc + tc.from_int(long(a.coeffs()[i])) * pw;
      pw = pw * root;
    }
    return acc;
  }

  // x |-> x^q for q = |base|; generates Gal(top/base) and fixes embed(base)
  GF frob(const GF& x) const { return frobenius(x, base->q); }

  // inverse of embed on its image; nullopt if the element is not fixed
  std::optional<GF> unembed(const GF& x) const {
    GF::Ctx bc(base);
    for (uint64_t v = 0; v < base->q; ++v) {
      GF cand = bc.from_code(v);
      if (embed(cand) == x) return cand;
    }
    return std::nullopt;
  }
};

struct SemilinearGSet {
  int size = 0;
  std::vector<int> perm;  // action of the Galois generator
  int order = 1;          // its order (divides m)

  void validate(int m) const {
    std::vector<bool> hit(size, false);
    for (int v : perm) {
      if (v < 0 || v >= size || hit[v]) throw InputError("semilinear G-set: not a permutation");
      hit[v] = true;
    }
    std::vector<int> id(size);
    for (int i = 0; i < size; ++i) id[i] = i;
    std::vector<int> cur = id;
    int k = 0;
    do {
      std::vector<int> next(size);
      for (int i = 0; i < size; ++i) next[i] = perm[cur[i]];
      cur = next;
      ++k;
    } while (cur != id && k <= m + 1);
    if (cur != id || m % k != 0)
      throw InputError("semilinear G-set: the action does not factor through the quotient");
  }

  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size, false);
    for (int s = 0; s < size; ++s) {
      if (seen[s]) continue;
      std::vector<int> orb;
      int c = s;
      while (!seen[c]) {
        seen[c] = true;
        orb.push_back(c);
        c = perm[c];
      }
      out.push_back(std::move(orb));
    }
    return out;
  }
};

namespace galdetail {

// top-field vectors as F_p coordinate columns
inline std::vector<GF> flatten(const std::vector<GF>& v, const GF::Ctx& fp) {
  std::vector<GF> out;
  for (auto& x : v)
    for (uint32_t c : x.coeffs()) out.push_back(fp.from_int(long(c)));
  return out;
}

inline std::vector<GF> unflatten(const std::vector<GF>& v, const GF::Ctx& tc, int n) {
  std::vector<GF> out;
  int k = int(tc.s->k);
  for (int i = 0; i < n; ++i) {
    std::vector<uint32_t> cs;
    for (int j = 0; j < k; ++j) cs.push_back(uint32_t(v[i * k + j].to_int()));
    out.push_back(GF(tc.s, cs));
  }
  return out;
}

// multiplication by a fixed top-field scalar, as an F_p matrix block
inline Matrix<GF> scalar_block(const GF& lambda, const GF::Ctx& tc, const GF::Ctx& fp) {
  int k = int(tc.s->k);
  Matrix<GF> m(k, k, fp);
  for (int j = 0; j < k; ++j) {
    std::vector<uint32_t> unit(k, 0);
    unit[j] = 1;
    GF col = GF(tc.s, unit) * lambda;
    for (int i = 0; i < k; ++i) m.add_entry(i, j, fp.from_int(long(col.coeffs()[i])));
  }
  return m;
}

// Frobenius x -> x^q as an F_p matrix on the top field
inline Matrix<GF> frobenius_block(const FieldExtension& e, const GF::Ctx& fp) {
  GF::Ctx tc(e.top);
  int k = int(e.top->k);
  Matrix<GF> m(k, k, fp);
  for (int j = 0; j < k; ++j) {
    std::vector<uint32_t> unit(k, 0);
    unit[j] = 1;
    GF col = e.frob(GF(e.top, unit));
    for (int i = 0; i < k; ++i) m.add_entry(i, j, fp.from_int(long(col.coeffs()[i])));
  }
  return m;
}

}  // namespace galdetail

// The Galois-fixed F_q-form of the diagonal top-field coalgebra on a
// semilinear G-set, with its chosen basis inside the ambient space.
struct GaloisForm {
  Coalgebra<GF> coalg;                     // over the base field
  std::vector<std::vector<GF>> basis;      // |S| vectors with top-field coords
};

// generic: fixed form of a semilinear action on an arbitrary top-field
// coalgebra whose structure constants are Frobenius-stable under the action
inline GaloisForm semilinear_fixed_form(const Coalgebra<GF>& ambient, const std::vector<int>& perm,
                                        const FieldExtension& e, const std::string& prefix) {
  GF::Ctx tc(e.top), bc(e.base), fp(e.top->p, 1);
  int ns = ambient.dim();
  int kt = int(e.top->k), kb = int(e.base->k);
  int np = ns * kt;

  // the semilinear operator over F_p
  Matrix<GF> frob = galdetail::frobenius_block(e, fp);
  Matrix<GF> T(np, np, fp);
  for (int s = 0; s < ns; ++s)
    for (auto& [i, j, v] : frob.entries()) T.add_entry(perm[s] * kt + i, s * kt + j, v);
  Matrix<GF> fixed = kernel(T - Matrix<GF>::identity(np, fp));
  if (fixed.cols() != ns * kb)
    throw InputError("semilinear fixed form: unexpected fixed-space dimension");

  // greedy F_q-basis of the fixed space
  std::vector<GF> beta_powers;
  {
    GF::Ctx bctx(e.base);
    GF b = kb == 1 ? bctx.one() : bctx.gen();
    GF acc = bctx.one();
    for (int j = 0; j < kb; ++j) {
      beta_powers.push_back(e.embed(acc));
      acc = acc * b;
    }
  }
  GaloisForm out;
  Matrix<GF> span(np, 0, fp);
  for (int c = 0; c < fixed.cols() && int(out.basis.size()) < ns; ++c) {
    std::vector<GF> cand_p = fixed.column(c);
    if (subspace_contains(span, Matrix<GF>::from_column(cand_p, fp))) continue;
    std::vector<GF> cand_top = galdetail::unflatten(cand_p, tc, ns);
    out.basis.push_back(cand_top);
    for (int j = 0; j < kb; ++j) {
      std::vector<GF> scaled;
      for (auto& x : cand_top) scaled.push_back(x * beta_powers[size_t(j)]);
      span = span.hstack(Matrix<GF>::from_column(galdetail::flatten(scaled, fp), fp));
    }
  }
  if (int(out.basis.size()) != ns)
    throw InputError("semilinear fixed form: could not complete an F_q basis");

  // express Delta(v_i) and eps(v_i) with F_q coefficients
  // unknown columns: (j, k, beta power) -> flatten(beta^t v_j (x) v_k)
  int nunk = ns * ns * kb;
  Matrix<GF> sys(np * ns /*tensor coords*/, nunk, fp);
  {
    int col = 0;
    for (int j = 0; j < ns; ++j)
      for (int k = 0; k < ns; ++k)
        for (int t = 0; t < kb; ++t, ++col) {
          // v_j (x) v_k in the ambient tensor basis: entries (a,b)
          for (int a = 0; a < ns; ++a)
            for (int b = 0; b < ns; ++b) {
              GF val = out.basis[j][a] * out.basis[k][b] * beta_powers[size_t(t)];
              if (val.is_zero()) continue;
              // flatten the (a,b) coordinate
              for (int cc = 0; cc < kt; ++cc) {
                long coef = long(val.coeffs()[cc]);
                if (coef) sys.add_entry((a * ns + b) * kt + cc, col, fp.from_int(coef));
              }
            }
        }
  }
  out.coalg.ctx = bc;
  for (int i = 0; i < ns; ++i) out.coalg.basis.push_back(prefix + std::to_string(i));
  out.coalg.delta.resize(ns);
  out.coalg.counit.assign(ns, bc.zero());
  GF::Ctx bctx(e.base);
  GF bgen = kb == 1 ? bctx.one() : bctx.gen();
  for (int i = 0; i < ns; ++i) {
    // Delta(v_i) in ambient tensor coordinates
    std::vector<GF> dv(size_t(ns) * ns, tc.zero());
    for (int a = 0; a < ns; ++a) {
      if (out.basis[i][a].is_zero()) continue;
      for (auto& [j2, k2, c] : ambient.delta[a]) {
        GF lift = c;  // already a top-field scalar
        dv[j2 * ns + k2] = dv[j2 * ns + k2] + lift * out.basis[i][a];
      }
    }
    Matrix<GF> rhs = Matrix<GF>::from_column(galdetail::flatten(dv, fp), fp);
    auto sol = solve(sys, rhs);
    if (!sol) throw InputError("semilinear fixed form: coproduct does not descend");
    int col = 0;
    for (int j = 0; j < ns; ++j)
      for (int k = 0; k < ns; ++k) {
        GF coef = bctx.zero();
        GF acc = bctx.one();
        for (int t = 0; t < kb; ++t, ++col) {
          coef = coef + acc * bctx.from_int(long(sol->at(col, 0).to_int()));
          acc = acc * bgen;
        }
        if (!coef.is_zero()) out.coalg.delta[i].emplace_back(j, k, coef);
      }
    // counit: sum of ambient counits weighted by coordinates, in F_q
    GF eps = tc.zero();
    for (int a = 0; a < ns; ++a) eps = eps + ambient.counit[a] * out.basis[i][a];
    auto back = e.unembed(eps);
    if (!back) throw InputError("semilinear fixed form: counit not in the base field");
    out.coalg.counit[i] = *back;
  }
  out.coalg.require_valid("galois fixed form");
  return out;
}

inline GaloisForm galois_fixed_coalgebra(const SemilinearGSet& s, const FieldExtension& e,
                                         const std::string& prefix = "v") {
  s.validate(e.m);
  GF::Ctx tc(e.top);
  std::vector<std::string> names;
  for (int i = 0; i < s.size; ++i) names.push_back("e" + std::to_string(i));
  Coalgebra<GF> ambient = Coalgebra<GF>::diagonal(tc, names);
  return semilinear_fixed_form(ambient, s.perm, e, prefix);
}

// the canonical map V (x)_{F_q} top -> top[S] is a coalgebra isomorphism
inline bool descent_check(const SemilinearGSet& s, const FieldExtension& e) {
  GaloisForm form = galois_fixed_coalgebra(s, e);
  GF::Ctx tc(e.top);
  int ns = s.size;
  Matrix<GF> m(ns, ns, tc);
  for (int i = 0; i < ns; ++i)
    for (int a = 0; a < ns; ++a)
      if (!form.basis[i][a].is_zero()) m.add_entry(a, i, form.basis[i][a]);
  if (rank(m) != ns) return false;
  // base change the form to the top field and compare with the diagonal
  Coalgebra<GF> lifted;
  lifted.ctx = tc;
  lifted.basis = form.coalg.basis;
  lifted.delta.resize(ns);
  for (int i = 0; i < ns; ++i)
    for (auto& [j, k, c] : form.coalg.delta[i]) lifted.delta[i].emplace_back(j, k, e.embed(c));
  for (auto& c : form.coalg.counit) lifted.counit.push_back(e.embed(c));
  lifted.require_valid("lifted galois form");
  std::vector<std::string> names;
  for (int i = 0; i < ns; ++i) names.push_back("e" + std::to_string(i));
  Coalgebra<GF> diag = Coalgebra<GF>::diagonal(tc, names);
  return is_coalgebra_morphism(lifted, diag, m);
}

// P_G: group-likes over the top field with the Frobenius action
struct PointsGaloisResult {
  SemilinearGSet gset;
  std::vector<std::vector<GF>> grouplike_vectors;  // in A (x) top coordinates
  GroupLikeStats stats;
};

inline PointsGaloisResult points_galois(const Coalgebra<GF>& a, const FieldExtension& e,
                                        uint64_t brute_budget = 1u << 20) {
  if (!(*a.ctx.s == *e.base))
    throw InputError("points_galois: coalgebra is not over the base field");
  GF::Ctx tc(e.top);
  Coalgebra<GF> ext;
  ext.ctx = tc;
  ext.basis = a.basis;
  ext.delta.resize(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (auto& [j, k, c] : a.delta[i]) ext.delta[i].emplace_back(j, k, e.embed(c));
  for (auto& c : a.counit) ext.counit.push_back(e.embed(c));
  ext.require_valid("extended coalgebra");
  auto gl = grouplikes(ext, brute_budget);
  if (!gl.stats.complete)
    throw InconclusiveError("points_galois: group-like search inconclusive: " + gl.stats.note);
  PointsGaloisResult out;
  out.stats = gl.stats;
  out.grouplike_vectors = gl.elements;
  out.gset.size = int(gl.elements.size());
  out.gset.perm.assign(gl.elements.size(), -1);
  for (int i = 0; i < int(gl.elements.size()); ++i) {
    std::vector<GF> moved;
    for (auto& x : gl.elements[i]) moved.push_back(e.frob(x));
    int target = -1;
    for (int t = 0; t < int(gl.elements.size()); ++t)
      if (gl.elements[t] == moved) target = t;
    if (target < 0) throw InputError("points_galois: Frobenius does not permute the points");
    out.gset.perm[i] = target;
  }
  out.gset.order = 1;
  {
    std::vector<int> id(out.gset.size), cur = out.gset.perm;
    for (int i = 0; i < out.gset.size; ++i) id[i] = i;
    while (cur != id) {
      std::vector<int> next(out.gset.size);
      for (int i = 0; i < out.gset.size; ++i) next[i] = out.gset.perm[cur[i]];
      cur = next;
      ++out.gset.order;
    }
  }
  return out;
}

// the unit S -> P_G(top[S]^G) is a natural isomorphism on G-sets
inline bool galois_unit_check(const SemilinearGSet& s, const FieldExtension& e) {
  GaloisForm form = galois_fixed_coalgebra(s, e);
  PointsGaloisResult pts = points_galois(form.coalg, e);
  if (pts.gset.size != s.size) return false;
  // unit: e_t corresponds to the group-like with coordinates M^{-1} e_t
  GF::Ctx tc(e.top);
  int ns = s.size;
  Matrix<GF> m(ns, ns, tc);
  for (int i = 0; i < ns; ++i)
    for (int a = 0; a < ns; ++a)
      if (!form.basis[i][a].is_zero()) m.add_entry(a, i, form.basis[i][a]);
  std::vector<int> unit_of(ns, -1);
  for (int t = 0; t < ns; ++t) {
    Matrix<GF> rhs(ns, 1, tc);
    rhs.add_entry(t, 0, tc.one());
    auto coords = solve(m, rhs);
    if (!coords) return false;
    std::vector<GF> v = coords->column(0);
    for (int i = 0; i < pts.gset.size; ++i)
      if (pts.grouplike_vectors[i] == v) unit_of[t] = i;
    if (unit_of[t] < 0) return false;
  }
  // bijective and equivariant
  std::vector<bool> hit(ns, false);
  for (int t = 0; t < ns; ++t) {
    if (hit[unit_of[t]]) return false;
    hit[unit_of[t]] = true;
  }
  for (int t = 0; t < ns; ++t)
    if (pts.gset.perm[unit_of[t]] != unit_of[s.perm[t]]) return false;
  return true;
}

// ---------------------------------------------------------------------------
// equivariant descent: a G-simplicial set with a commuting simplicial
// Galois action; the fixed forms assemble to a G-simplicial coalgebra over
// the base field, and P_G recovers the space with both actions
// ---------------------------------------------------------------------------

// the simplicial Galois action: a permutation of the nondegenerate
// simplices per dimension (the generator of the finite Galois quotient)
struct GaloisSimplicialAction {
  std::vector<std::vector<int>> perm;  // [dim][idx]
};

struct EquivariantDescentReport {
  bool ok = true;
  std::vector<std::string> notes;
  void fail(const std::string& s) {
    ok = false;
    notes.push_back(s);
  }
};

// express a top-coordinate vector in a Galois form basis with base-field
// coefficients; nullopt when it does not descend
inline std::optional<std::vector<GF>> express_in_form(const GaloisForm& form,
                                                      const FieldExtension& e,
                                                      const std::vector<GF>& target) {
  GF::Ctx fp(e.top->p, 1), bctx(e.base);
  int ns = int(form.basis.size());
  int amb = ns == 0 ? int(target.size()) : int(form.basis[0].size());
  int kb = int(e.base->k);
  GF bgen = kb == 1 ? bctx.one() : bctx.gen();
  std::vector<GF> beta_powers;
  {
    GF acc = bctx.one();
    for (int j = 0; j < kb; ++j) {
      beta_powers.push_back(e.embed(acc));
      acc = acc * bgen;
    }
  }
  Matrix<GF> sys(amb * int(e.top->k), ns * kb, fp);
  int col = 0;
  for (int j = 0; j < ns; ++j)
    for (int t = 0; t < kb; ++t, ++col) {
      std::vector<GF> scaled;
      for (auto& x : form.basis[j]) scaled.push_back(x * beta_powers[size_t(t)]);
      auto flat = galdetail::flatten(scaled, fp);
      for (int r = 0; r < int(flat.size()); ++r)
        if (!flat[r].is_zero()) sys.add_entry(r, col, flat[r]);
    }
  auto rhs = Matrix<GF>::from_column(galdetail::flatten(target, fp), fp);
  auto sol = solve(sys, rhs);
  if (!sol) return std::nullopt;
  std::vector<GF> out;
  col = 0;
  for (int j = 0; j < ns; ++j) {
    GF coef = bctx.zero();
    GF acc = bctx.one();
    for (int t = 0; t < kb; ++t, ++col) {
      coef = coef + acc * bctx.from_int(long(sol->at(col, 0).to_int()));
      acc = acc * bgen;
    }
    out.push_back(coef);
  }
  return out;
}

inline EquivariantDescentReport equivariant_descent(const GSimplicialSet& y,
                                                    const GaloisSimplicialAction& psi,
                                                    const FieldExtension& e) {
  EquivariantDescentReport rep;
  const SimplicialSet& x = y.sset();
  int D = x.dim_bound();
  // psi must be a simplicial automorphism commuting with the G-action
  SimplicialMap pm(&x, &x);
  for (int n = 0; n <= D; ++n)
    for (int i = 0; i < x.count(n); ++i)
      pm.set_image({n, i}, SPair{DegWord{}, SimplexId{n, psi.perm[n][i]}});
  if (!pm.is_isomorphism()) throw InputError("equivariant_descent: Galois action is not simplicial");
  for (int g = 0; g < y.group().size(); ++g)
    for (int n = 0; n <= D; ++n)
      for (int i = 0; i < x.count(n); ++i)
        if (psi.perm[n][y.act(g, n, i)] != y.act(g, n, psi.perm[n][i]))
          throw InputError("equivariant_descent: actions do not commute");

  GF::Ctx tc(e.top);
  // per-degree pair data and the Galois permutation on all simplices
  std::vector<std::vector<SPair>> pairs(D + 1);
  std::vector<std::map<SPair, int>> index(D + 1);
  std::vector<GaloisForm> forms(D + 1);
  std::vector<PointsGaloisResult> pts(D + 1);
  std::vector<std::vector<int>> unit_of(D + 1);  // pair index -> group-like index
  for (int n = 0; n <= D; ++n) {
    pairs[n] = x.simplices(n);
    for (int i = 0; i < int(pairs[n].size()); ++i) index[n][pairs[n][i]] = i;
    std::vector<int> perm(pairs[n].size());
    for (int i = 0; i < int(pairs[n].size()); ++i) {
      SPair p = pairs[n][i];
      perm[i] = index[n].at(SPair{p.w, SimplexId{p.s.dim, psi.perm[p.s.dim][p.s.idx]}});
    }
    SemilinearGSet s{int(pairs[n].size()), perm, 1};
    forms[n] = galois_fixed_coalgebra(s, e, "f" + std::to_string(n) + "_");
    if (forms[n].coalg.dim() != int(pairs[n].size()))
      rep.fail("fixed form dimension mismatch in degree " + std::to_string(n));
    if (!descent_check(s, e)) rep.fail("descent isomorphism fails in degree " + std::to_string(n));
    pts[n] = points_galois(forms[n].coalg, e);
    if (pts[n].gset.size != int(pairs[n].size()))
      rep.fail("points count mismatch in degree " + std::to_string(n));
    // unit bijection via the descent matrix
    int ns = int(pairs[n].size());
    Matrix<GF> m(ns, ns, tc);
    for (int i = 0; i < ns; ++i)
      for (int a = 0; a < ns; ++a)
        if (!forms[n].basis[i][a].is_zero()) m.add_entry(a, i, forms[n].basis[i][a]);
    unit_of[n].assign(ns, -1);
    for (int t = 0; t < ns; ++t) {
      Matrix<GF> rhs(ns, 1, tc);
      rhs.add_entry(t, 0, tc.one());
      auto coords = solve(m, rhs);
      if (!coords) {
        rep.fail("descent matrix not invertible in degree " + std::to_string(n));
        continue;
      }
      std::vector<GF> v = coords->column(0);
      for (int i = 0; i < pts[n].gset.size; ++i)
        if (pts[n].grouplike_vectors[i] == v) unit_of[n][t] = i;
      if (unit_of[n][t] < 0) rep.fail("unit misses a point in degree " + std::to_string(n));
    }
    // the Frobenius action on points recovers psi on simplices
    for (int t = 0; t < ns && rep.ok; ++t)
      if (pts[n].gset.perm[unit_of[n][t]] != unit_of[n][perm[t]])
        rep.fail("recovered Galois action differs in degree " + std::to_string(n));
  }
  if (!rep.ok) return rep;

  // operators and the G-action descend to the fixed forms, and transport to
  // the recovered points exactly as in the original space
  for (int n = 1; n <= D; ++n) {
    for (int i = 0; i <= n; ++i) {
      for (int c = 0; c < int(pairs[n].size()); ++c) {
        // face of the c-th fixed basis vector, in ambient top coordinates
        std::vector<GF> img(pairs[n - 1].size(), tc.zero());
        for (int a = 0; a < int(pairs[n].size()); ++a) {
          if (forms[n].basis[c][a].is_zero()) continue;
          int fa = index[n - 1].at(x.face(pairs[n][a], i));
          img[fa] = img[fa] + forms[n].basis[c][a];
        }
        auto coords = express_in_form(forms[n - 1], e, img);
        if (!coords) {
          rep.fail("face operator does not descend in degree " + std::to_string(n));
          return rep;
        }
      }
    }
  }
  for (int g = 0; g < y.group().size() && rep.ok; ++g)
    for (int n = 0; n <= D && rep.ok; ++n) {
      int ns = int(pairs[n].size());
      // descended action matrix over the base field
      Matrix<GF> ag(ns, ns, e.base_ctx());
      for (int c = 0; c < ns; ++c) {
        std::vector<GF> img(size_t(ns), tc.zero());
        for (int a = 0; a < ns; ++a) {
          if (forms[n].basis[c][a].is_zero()) continue;
          int ga = index[n].at(y.apply(g, pairs[n][a]));
          img[ga] = img[ga] + forms[n].basis[c][a];
        }
        auto coords = express_in_form(forms[n], e, img);
        if (!coords) {
          rep.fail("G-action does not descend in degree " + std::to_string(n));
          return rep;
        }
        for (int r = 0; r < ns; ++r)
          if (!(*coords)[r].is_zero()) ag.add_entry(r, c, (*coords)[r]);
      }
      // transported to points: the unit group-like of pair t moves to g.t
      for (int t = 0; t < ns; ++t) {
        const auto& vt = pts[n].grouplike_vectors[unit_of[n][t]];
        std::vector<GF> moved(size_t(ns), tc.zero());
        for (auto& [r, c, coef] : ag.entries())
          moved[r] = moved[r] + e.embed(coef) * vt[c];
        int gt = index[n].at(y.apply(g, pairs[n][t]));
        if (!(moved == pts[n].grouplike_vectors[unit_of[n][gt]])) {
          rep.fail("recovered G-action differs in degree " + std::to_string(n));
          return rep;
        }
      }
    }
  return rep;
}

}  // namespace eqc
