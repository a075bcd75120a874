#pragma once

// Truncated Cobar construction: tensor algebra on the desuspended
// coaugmentation coideal, differential extending d + reduced coproduct as a
// derivation, with explicit degree and word-length caps. The length
// truncation is compatible with d (the coproduct part raises length by
// exactly one), so d^2 = 0 holds exactly on every retained word.

#include "equicobar/dg.hpp"

namespace eqc {

template <FieldScalar F>
struct CobarAlgebra {
  using Ctx = typename F::Ctx;
  struct Gen {
    std::string name;
    int deg;        // cobar degree = source degree - 1
    int src_degree; // degree in the dg coalgebra
    int src_index;
  };

  Ctx ctx;
  int degree_cap = 0;  // N
  int length_cap = 0;  // L
  std::vector<Gen> gens;
  std::vector<std::vector<std::vector<int>>> words;  // words[n][j] = generator indices
  std::vector<std::map<std::vector<int>, int>> index;
  std::vector<Matrix<F>> d;  // d[n] : degree n -> n-1
  bool simply_connected_regime = false;  // no degree-0 generators
  bool length_flagged = false;           // results are L-relative

  int dim(int n) const { return int(words[n].size()); }

  ChainComplex<F> complex() const {
    ChainComplex<F> c;
    c.ctx = ctx;
    c.top = degree_cap;
    c.dims.resize(degree_cap + 1);
    for (int n = 0; n <= degree_cap; ++n) c.dims[n] = dim(n);
    c.d = d;
    return c;
  }
};

namespace cobardetail {

template <FieldScalar F>
void enum_words(const CobarAlgebra<F>& cb, std::vector<int>& cur, int deg, int n, int len_cap,
                std::vector<std::vector<int>>& out) {
  if (deg == n && !cur.empty()) out.push_back(cur);
  if (int(cur.size()) >= len_cap) return;
  for (int g = 0; g < int(cb.gens.size()); ++g) {
    if (deg + cb.gens[g].deg > n) continue;
    cur.push_back(g);
    enum_words(cb, cur, deg + cb.gens[g].deg, n, len_cap, out);
    cur.pop_back();
  }
}

}  // namespace cobardetail

template <FieldScalar F>
CobarAlgebra<F> cobar(const DgCoalgebra<F>& dg, int degree_cap, int length_cap) {
  if (!dg.connected) throw InputError("cobar requires a connected coaugmented dg coalgebra");
  if (dg.top < degree_cap + 1)
    throw InputError("cobar: dg coalgebra truncated below degree cap + 1");
  CobarAlgebra<F> out;
  out.ctx = dg.ctx;
  out.degree_cap = degree_cap;
  out.length_cap = length_cap;
  for (int k = 1; k <= std::min(dg.top, degree_cap + 1); ++k)
    for (int i = 0; i < dg.dim(k); ++i)
      out.gens.push_back({"[" + dg.basis[k][i] + "]", k - 1, k, i});
  out.simply_connected_regime = true;
  for (auto& g : out.gens)
    if (g.deg == 0) out.simply_connected_regime = false;
  out.length_flagged = !out.simply_connected_regime;

  out.words.resize(degree_cap + 1);
  out.index.resize(degree_cap + 1);
  for (int n = 0; n <= degree_cap; ++n) {
    std::vector<int> cur;
    if (n == 0) out.words[0].push_back({});  // the empty word (unit)
    cobardetail::enum_words(out, cur, 0, n, length_cap, out.words[n]);
    std::sort(out.words[n].begin(), out.words[n].end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                return std::pair(a.size(), a) < std::pair(b.size(), b);
              });
    for (int j = 0; j < int(out.words[n].size()); ++j) out.index[n][out.words[n][j]] = j;
  }

  // d on generators, as formal combinations of words (degree g.deg - 1)
  auto ctx = dg.ctx;
  std::vector<std::vector<std::pair<std::vector<int>, F>>> dgen(out.gens.size());
  auto gen_of = [&](int k, int i) {
    for (int g = 0; g < int(out.gens.size()); ++g)
      if (out.gens[g].src_degree == k && out.gens[g].src_index == i) return g;
    throw InputError("cobar: missing generator");
  };
  for (int g = 0; g < int(out.gens.size()); ++g) {
    int k = out.gens[g].src_degree, i = out.gens[g].src_index;
    // -[d c]
    if (k - 1 >= 1) {
      for (int r = 0; r < dg.dim(k - 1); ++r) {
        F c = dg.d[k].at(r, i);
        if (!c.is_zero()) dgen[g].push_back({{gen_of(k - 1, r)}, -c});
      }
    }
    // sum over (p,q) splittings with p,q >= 1: (-1)^p [a][b]
    for (int p = 1; p <= k - 1; ++p) {
      int q = k - p;
      const Matrix<F>& dm = dg.delta[k][p];
      for (auto& [row, col, c] : dm.entries()) {
        if (col != i) continue;
        int a = row / dg.dim(q), b = row % dg.dim(q);
        F coef = p % 2 == 1 ? -c : c;
        dgen[g].push_back({{gen_of(p, a), gen_of(q, b)}, coef});
      }
    }
  }

  // extend as a derivation with Koszul signs; drop words beyond the caps
  out.d.resize(degree_cap + 1);
  out.d[0] = Matrix<F>(0, out.dim(0), ctx);
  for (int n = 1; n <= degree_cap; ++n) {
    Matrix<F> m(out.dim(n - 1), out.dim(n), ctx);
    for (int j = 0; j < out.dim(n); ++j) {
      const std::vector<int>& w = out.words[n][j];
      int sign_deg = 0;
      for (int pos = 0; pos < int(w.size()); ++pos) {
        for (auto& [repl, coef] : dgen[w[pos]]) {
          std::vector<int> nw;
          nw.insert(nw.end(), w.begin(), w.begin() + pos);
          nw.insert(nw.end(), repl.begin(), repl.end());
          nw.insert(nw.end(), w.begin() + pos + 1, w.end());
          if (int(nw.size()) > out.length_cap) continue;  // truncated away
          F c = sign_deg % 2 == 1 ? -coef : coef;
          auto it = out.index[n - 1].find(nw);
          if (it == out.index[n - 1].end())
            throw InputError("cobar: derivation image missing from the basis");
          m.add_entry(it->second, j, c);
        }
        sign_deg += out.gens[w[pos]].deg;
      }
    }
    out.d[n] = std::move(m);
  }
  // exactness of the truncation: d^2 = 0 on every retained word
  out.complex().require_valid("cobar");
  return out;
}

// the induced algebra map on cobar from a dg coalgebra map (generator-wise
// images extended multiplicatively); exact on retained words since the
// length filtration is preserved
template <FieldScalar F>
std::vector<Matrix<F>> cobar_map(const CobarAlgebra<F>& src, const CobarAlgebra<F>& dst,
                                 const std::vector<Matrix<F>>& dgmap) {
  auto ctx = src.ctx;
  std::vector<Matrix<F>> out(src.degree_cap + 1);
  auto dst_gen = [&](int k, int i) {
    for (int g = 0; g < int(dst.gens.size()); ++g)
      if (dst.gens[g].src_degree == k && dst.gens[g].src_index == i) return g;
    throw InputError("cobar_map: missing target generator");
  };
  for (int n = 0; n <= src.degree_cap; ++n) {
    Matrix<F> m(dst.dim(n), src.dim(n), ctx);
    for (int j = 0; j < src.dim(n); ++j) {
      const std::vector<int>& w = src.words[n][j];
      // expand the product of generator images
      std::vector<std::pair<std::vector<int>, F>> acc{{{}, ctx.one()}};
      for (int g : w) {
        int k = src.gens[g].src_degree, i = src.gens[g].src_index;
        std::vector<std::pair<std::vector<int>, F>> next;
        for (int r = 0; r < int(dgmap[k].rows()); ++r) {
          F c = dgmap[k].at(r, i);
          if (c.is_zero()) continue;
          int tg = dst_gen(k, r);
          for (auto& [word, coef] : acc) {
            std::vector<int> nw = word;
            nw.push_back(tg);
            next.push_back({std::move(nw), coef * c});
          }
        }
        acc = std::move(next);
      }
      for (auto& [word, coef] : acc) {
        auto it = dst.index[n].find(word);
        if (it == dst.index[n].end()) throw InputError("cobar_map: image word missing");
        m.add_entry(it->second, j, coef);
      }
    }
    out[n] = std::move(m);
  }
  ChainMap<F>::require_chain_map(src.complex(), dst.complex(), out, "cobar map");
  return out;
}

}  // namespace eqc
