#pragma once

// Finite-dimensional cocommutative coalgebras over an exact field:
// structure checks, group-like elements, largest subcoalgebras.

#include "equicobar/polynomial.hpp"

namespace eqc {

template <FieldScalar F>
struct Coalgebra {
  using Ctx = typename F::Ctx;
  Ctx ctx;
  std::vector<std::string> basis;
  // Delta(e_i) = sum_{(j,k,c)} c e_j (x) e_k
  std::vector<std::vector<std::tuple<int, int, F>>> delta;
  std::vector<F> counit;

  int dim() const { return int(basis.size()); }

  static Coalgebra diagonal(Ctx ctx, std::vector<std::string> names) {
    Coalgebra c;
    c.ctx = ctx;
    c.basis = std::move(names);
    c.delta.resize(c.basis.size());
    c.counit.assign(c.basis.size(), ctx.one());
    for (int i = 0; i < c.dim(); ++i) c.delta[i] = {{i, i, ctx.one()}};
    return c;
  }

  // Delta as a dim^2 x dim matrix, row (j * dim + k)
  Matrix<F> delta_matrix() const {
    Matrix<F> m(dim() * dim(), dim(), ctx);
    for (int i = 0; i < dim(); ++i)
      for (auto& [j, k, c] : delta[i]) m.add_entry(j * dim() + k, i, c);
    return m;
  }

  std::vector<F> apply_delta(const std::vector<F>& v) const {
    std::vector<F> out(size_t(dim()) * dim(), ctx.zero());
    for (int i = 0; i < dim(); ++i) {
      if (v[i].is_zero()) continue;
      for (auto& [j, k, c] : delta[i]) out[j * dim() + k] = out[j * dim() + k] + c * v[i];
    }
    return out;
  }

  F apply_counit(const std::vector<F>& v) const {
    F acc = ctx.zero();
    for (int i = 0; i < dim(); ++i) acc = acc + counit[i] * v[i];
    return acc;
  }

  bool is_grouplike(const std::vector<F>& v) const {
    if (!apply_counit(v).is_one()) return false;
    std::vector<F> dv = apply_delta(v);
    for (int j = 0; j < dim(); ++j)
      for (int k = 0; k < dim(); ++k)
        if (!(dv[j * dim() + k] == v[j] * v[k])) return false;
    return true;
  }

  std::optional<std::string> check() const {
    int n = dim();
    if (int(delta.size()) != n || int(counit.size()) != n) return "inconsistent dimensions";
    // sparse 3-tensors for coassociativity
    std::map<std::tuple<int, int, int>, F> left, right;
    for (int i = 0; i < n; ++i)
      for (auto& [j, k, c] : delta[i]) {
        for (auto& [a, b, c2] : delta[j]) {
          auto key = std::tuple(a, b, k);
          auto it = left.find(key);
          if (it == left.end())
            left.emplace(key, c * c2);
          else
            it->second = it->second + c * c2;
        }
        for (auto& [a, b, c2] : delta[k]) {
          auto key = std::tuple(j, a, b);
          auto it = right.find(key);
          if (it == right.end())
            right.emplace(key, c * c2);
          else
            it->second = it->second + c * c2;
        }
      }
    for (auto& [k, v] : left) {
      auto it = right.find(k);
      if ((it == right.end() && !v.is_zero()) || (it != right.end() && !(v == it->second)))
        return "coassociativity fails";
    }
    for (auto& [k, v] : right)
      if (!left.count(k) && !v.is_zero()) return "coassociativity fails";
    // counit laws: (eps (x) id) Delta = id = (id (x) eps) Delta
    for (int i = 0; i < n; ++i) {
      std::vector<F> lhs(n, ctx.zero()), rhs(n, ctx.zero());
      for (auto& [j, k, c] : delta[i]) {
        lhs[k] = lhs[k] + counit[j] * c;
        rhs[j] = rhs[j] + counit[k] * c;
      }
      for (int t = 0; t < n; ++t) {
        F want = t == i ? ctx.one() : ctx.zero();
        if (!(lhs[t] == want) || !(rhs[t] == want)) return "counit law fails";
      }
    }
    // cocommutativity
    std::map<std::pair<int, int>, F> sym;
    for (int i = 0; i < n; ++i) {
      sym.clear();
      for (auto& [j, k, c] : delta[i]) {
        auto it = sym.find({j, k});
        if (it == sym.end())
          sym.emplace(std::pair(j, k), c);
        else
          it->second = it->second + c;
      }
      for (auto& [key, v] : sym) {
        auto it = sym.find({key.second, key.first});
        F other = it == sym.end() ? ctx.zero() : it->second;
        if (!(v == other)) return "cocommutativity fails";
      }
    }
    return std::nullopt;
  }

  void require_valid(const std::string& label) const {
    if (auto e = check()) throw InputError("invalid coalgebra (" + label + "): " + *e);
  }
};

// M : C -> D a coalgebra morphism: Delta_D M = (M (x) M) Delta_C, eps_D M = eps_C
template <FieldScalar F>
bool is_coalgebra_morphism(const Coalgebra<F>& c, const Coalgebra<F>& d, const Matrix<F>& m) {
  if (m.rows() != d.dim() || m.cols() != c.dim()) return false;
  Matrix<F> lhs = d.delta_matrix() * m;
  Matrix<F> rhs = m.kron(m) * c.delta_matrix();
  if (!(lhs == rhs)) return false;
  for (int i = 0; i < c.dim(); ++i) {
    F acc = c.ctx.zero();
    for (int r = 0; r < d.dim(); ++r) acc = acc + d.counit[r] * m.at(r, i);
    if (!(acc == c.counit[i])) return false;
  }
  return true;
}

struct GroupLikeStats {
  bool complete = true;
  std::string method;
  std::string note;
};

template <FieldScalar F>
struct GroupLikeResult {
  std::vector<std::vector<F>> elements;  // canonically ordered
  GroupLikeStats stats;
};

namespace coalgdetail {

template <FieldScalar F>
void sort_vectors(std::vector<std::vector<F>>& els) {
  std::sort(els.begin(), els.end(), [](const std::vector<F>& a, const std::vector<F>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == b[i]) continue;
      if constexpr (std::is_same_v<F, GF>)
        return a[i].to_int() < b[i].to_int();
      else
        return a[i] < b[i];
    }
    return false;
  });
  els.erase(std::unique(els.begin(), els.end()), els.end());
}

// exhaustive search over all vectors; finite fields within budget only
inline std::optional<std::vector<std::vector<GF>>> brute_force_grouplikes(const Coalgebra<GF>& c,
                                                                          uint64_t budget) {
  uint64_t q = c.ctx.s->q;
  double total = 1;
  for (int i = 0; i < c.dim(); ++i) {
    total *= double(q);
    if (total > double(budget)) return std::nullopt;
  }
  std::vector<std::vector<GF>> out;
  std::vector<uint64_t> digits(c.dim(), 0);
  std::vector<GF> v(c.dim(), c.ctx.zero());
  while (true) {
    if (c.apply_counit(v).is_one() && c.is_grouplike(v)) out.push_back(v);
    int pos = 0;
    while (pos < c.dim()) {
      if (++digits[pos] < q) {
        v[pos] = c.ctx.from_code(digits[pos]);
        break;
      }
      digits[pos] = 0;
      v[pos] = c.ctx.zero();
      ++pos;
    }
    if (pos == c.dim()) break;
  }
  return out;
}

// Character search on the dual algebra: group-likes of C are the algebra
// characters of C^*, found by splitting the commuting multiplication
// operators along factorizations of their minimal polynomials. Complete
// whenever every factorization is conclusive.
template <FieldScalar F>
GroupLikeResult<F> character_grouplikes(const Coalgebra<F>& c) {
  using Ctx = typename F::Ctx;
  const Ctx& ctx = c.ctx;
  const int n = c.dim();
  GroupLikeResult<F> out;
  out.stats.method = "dual-characters";

  // multiplication operators L_i on the dual basis: column j of L_i has
  // entries c_k^{ij} (the coproduct tensor read as structure constants)
  std::vector<Matrix<F>> mult;
  mult.reserve(n);
  for (int i = 0; i < n; ++i) {
    Matrix<F> l(n, n, ctx);
    for (int k = 0; k < n; ++k)
      for (auto& [a, b, coef] : c.delta[k])
        if (a == i) l.add_entry(k, b, coef);
    mult.push_back(std::move(l));
  }

  struct Component {
    Matrix<F> cols;            // basis of the ideal, as columns in A
    std::vector<F> eigenvals;  // chosen eigenvalue per processed generator
  };
  std::vector<Component> comps;
  {
    Component full{Matrix<F>::identity(n, ctx), {}};
    comps.push_back(std::move(full));
  }
  bool complete = true;
  for (int i = 0; i < n; ++i) {
    std::vector<Component> next;
    for (auto& comp : comps) {
      int m = comp.cols.cols();
      // restrict L_i to the component
      auto restr = solve(comp.cols, mult[i] * comp.cols);
      if (!restr) throw InputError("character search: component not invariant");
      Poly<F> mp = min_poly(*restr);
      auto fac = poly_factor(mp);
      if (!fac.complete) {
        complete = false;
        continue;  // cannot resolve this component; drop it (flagged)
      }
      for (auto& [p, mult_e] : fac.irreducible) {
        if (p.degree() != 1) continue;  // residue field extension: no F-character
        F lambda = -p.coeff(0);
        // generalized eigenspace ker((L - lambda)^mult) inside the component
        Matrix<F> shift = *restr;
        Matrix<F> lam = Matrix<F>::identity(m, ctx).scaled(lambda);
        Matrix<F> op = shift - lam;
        Matrix<F> pw = Matrix<F>::identity(m, ctx);
        for (int t = 0; t < mult_e; ++t) pw = op * pw;
        Matrix<F> ker = kernel(pw);
        if (ker.cols() == 0) continue;
        Component nc;
        nc.cols = comp.cols * ker;
        nc.eigenvals = comp.eigenvals;
        nc.eigenvals.push_back(lambda);
        next.push_back(std::move(nc));
      }
    }
    comps = std::move(next);
  }
  for (auto& comp : comps) {
    if (int(comp.eigenvals.size()) != n) continue;
    std::vector<F> v = comp.eigenvals;  // x_i = chi(f_i)
    if (c.is_grouplike(v)) out.elements.push_back(std::move(v));
  }
  sort_vectors(out.elements);
  out.stats.complete = complete;
  if (!complete) out.stats.note = "rational factorization out of supported range";
  return out;
}

}  // namespace coalgdetail

// Tiered group-like search: diagonal fast path, finite-field brute force
// within budget (the independent oracle), dual-character search in general.
template <FieldScalar F>
GroupLikeResult<F> grouplikes(const Coalgebra<F>& c, uint64_t brute_budget = 1u << 20) {
  // diagonal fast path
  bool diag = true;
  for (int i = 0; i < c.dim() && diag; ++i) {
    diag = c.counit[i].is_one() && c.delta[i].size() == 1;
    if (diag) {
      auto& [j, k, coef] = c.delta[i][0];
      diag = j == i && k == i && coef.is_one();
    }
  }
  if (diag) {
    GroupLikeResult<F> out;
    for (int i = 0; i < c.dim(); ++i) {
      std::vector<F> v(c.dim(), c.ctx.zero());
      v[i] = c.ctx.one();
      out.elements.push_back(std::move(v));
    }
    out.stats.method = "diagonal";
    return out;
  }
  if constexpr (std::is_same_v<F, GF>) {
    auto brute = coalgdetail::brute_force_grouplikes(c, brute_budget);
    if (brute) {
      GroupLikeResult<F> out;
      out.elements = std::move(*brute);
      coalgdetail::sort_vectors(out.elements);
      out.stats.method = "brute-force";
      return out;
    }
  }
  return coalgdetail::character_grouplikes(c);
}

// Largest subcoalgebra contained in the column span of w:
// iterate V <- {v in V : Delta v in V (x) V} until stable.
template <FieldScalar F>
struct SubCoalgebra {
  Matrix<F> inclusion;   // columns: basis of the subcoalgebra inside C
  Coalgebra<F> coalg;    // structure in that basis
};

template <FieldScalar F>
Matrix<F> largest_subcoalgebra_basis(const Coalgebra<F>& c, Matrix<F> v) {
  const int n = c.dim();
  Matrix<F> dm = c.delta_matrix();
  while (true) {
    if (v.cols() == 0) return v;
    // condition: Delta x in V (x) C and in C (x) V, i.e. (Q (x) id) Delta x = 0
    // and (id (x) Q) Delta x = 0 for Q a projection with kernel V
    Matrix<F> q = cokernel_projection(v);
    Matrix<F> id = Matrix<F>::identity(n, c.ctx);
    Matrix<F> top = q.kron(id) * dm * v;
    Matrix<F> bot = id.kron(q) * dm * v;
    Matrix<F> cond = top.vstack(bot);
    Matrix<F> ker = kernel(cond);
    if (ker.cols() == v.cols()) return v;  // stable
    v = v * ker;
  }
}

template <FieldScalar F>
SubCoalgebra<F> largest_subcoalgebra(const Coalgebra<F>& c, const Matrix<F>& w,
                                     const std::string& name_prefix = "v") {
  SubCoalgebra<F> out;
  out.inclusion = largest_subcoalgebra_basis(c, column_space(w));
  const int m = out.inclusion.cols();
  out.coalg.ctx = c.ctx;
  for (int i = 0; i < m; ++i) out.coalg.basis.push_back(name_prefix + std::to_string(i));
  out.coalg.delta.resize(m);
  out.coalg.counit.resize(m, c.ctx.zero());
  if (m == 0) return out;
  // Delta restricted: solve (incl (x) incl) X = Delta . incl
  Matrix<F> rhs = c.delta_matrix() * out.inclusion;
  auto x = solve(out.inclusion.kron(out.inclusion), rhs);
  if (!x) throw InputError("largest_subcoalgebra: coproduct does not restrict");
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k) {
        F coef = x->at(j * m + k, i);
        if (!coef.is_zero()) out.coalg.delta[i].emplace_back(j, k, coef);
      }
  for (int i = 0; i < m; ++i) {
    F acc = c.ctx.zero();
    for (int r = 0; r < c.dim(); ++r) acc = acc + c.counit[r] * out.inclusion.at(r, i);
    out.coalg.counit[i] = acc;
  }
  out.coalg.require_valid("largest subcoalgebra");
  return out;
}

}  // namespace eqc
