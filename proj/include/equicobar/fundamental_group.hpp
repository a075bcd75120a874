#pragma once

// Edge-path group presentations, Todd-Coxeter coset enumeration,
// abelianization certificates, and combinatorial universal covers.

#include "equicobar/presentation.hpp"
#include "equicobar/smith.hpp"

namespace eqc {

// Edge-path presentation of pi_1: generators are the nondegenerate edges
// outside a spanning tree, one relation d1 = d2 * d0 per nondegenerate
// 2-simplex. For a reduced simplicial set the tree is trivial and this
// coincides with the h0 presentation.
struct EdgePathResult {
  MonoidPresentation pres;       // group presentation (relations over gens)
  std::vector<int> edge_gen;     // edge idx -> generator idx or -1 (tree/collapsed)
};

inline EdgePathResult edge_path_presentation(const SimplicialSet& x) {
  if (x.dim_bound() < 2) throw InputError("edge_path_presentation needs dimension bound >= 2");
  int nv = x.count(0), ne = x.count(1);
  // spanning tree over the vertex graph (BFS from vertex 0)
  std::vector<int> parent_edge(nv, -1);
  std::vector<bool> seen(nv, false);
  std::vector<bool> tree(ne, false);
  std::vector<int> queue{0};
  seen[0] = true;
  auto endpoints = [&](int e) {
    SPair p{DegWord{}, SimplexId{1, e}};
    return std::pair(x.face(p, 1).s.idx, x.face(p, 0).s.idx);  // (source, target)
  };
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int e = 0; e < ne; ++e) {
      auto [a, b] = endpoints(e);
      int other = -1;
      if (a == v && !seen[b]) other = b;
      if (b == v && !seen[a]) other = a;
      if (other >= 0) {
        seen[other] = true;
        tree[e] = true;
        parent_edge[other] = e;
        queue.push_back(other);
      }
    }
  }
  for (int v = 0; v < nv; ++v)
    if (!seen[v]) throw InputError("edge_path_presentation: space is not connected");

  EdgePathResult out;
  out.edge_gen.assign(ne, -1);
  for (int e = 0; e < ne; ++e) {
    if (tree[e]) continue;
    out.edge_gen[e] = int(out.pres.gens.size());
    out.pres.gens.push_back(x.name({1, e}));
  }
  out.pres.chains_type = x.reduced();
  out.pres.inverse.assign(out.pres.gens.size(), -1);
  auto letter = [&](const SPair& e) {
    Word w;
    if (!e.degenerate() && out.edge_gen[e.s.idx] >= 0) w.push_back(out.edge_gen[e.s.idx]);
    return w;
  };
  for (int i = 0; i < x.count(2); ++i) {
    SPair sigma{DegWord{}, SimplexId{2, i}};
    Word lhs = letter(x.face(sigma, 1));
    Word rhs = letter(x.face(sigma, 2));
    Word r0 = letter(x.face(sigma, 0));
    rhs.insert(rhs.end(), r0.begin(), r0.end());
    out.pres.rels.emplace_back(std::move(lhs), std::move(rhs));
  }
  out.pres.marked.assign(out.pres.gens.size(), true);
  return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration over the trivial subgroup
// ---------------------------------------------------------------------------

struct CosetTable {
  int ngens = 0;
  long order = 0;
  // action[g][coset] and inverse action; rows are permutations when complete
  std::vector<std::vector<int>> fwd, bwd;

  int trace(const Word& w, int from, const std::vector<int>& signs) const {
    int c = from;
    for (size_t t = 0; t < w.size(); ++t) c = signs[t] > 0 ? fwd[w[t]][c] : bwd[w[t]][c];
    return c;
  }
  // trace a plain generator word
  int trace(const Word& w, int from) const {
    int c = from;
    for (int g : w) c = fwd[g][c];
    return c;
  }
};

namespace tcdetail {

struct Enumerator {
  int ngens;
  std::vector<std::vector<int>> relators;  // letters: 2g = gen, 2g+1 = inverse
  std::vector<std::vector<int>> tab;       // tab[coset][letter]
  std::vector<int> rep;                    // union-find over cosets
  std::vector<std::pair<int, int>> queue;  // coincidences
  long bound;

  int find(int a) { return rep[a] == a ? a : rep[a] = find(rep[a]); }

  int inv_letter(int l) const { return l ^ 1; }

  bool define(int from, int letter, int& out) {
    if (long(tab.size()) >= bound) return false;
    int c = int(tab.size());
    tab.emplace_back(2 * ngens, -1);
    rep.push_back(c);
    set(from, letter, c);
    out = c;
    return true;
  }

  void set(int a, int l, int b) {
    tab[a][l] = b;
    tab[b][inv_letter(l)] = a;
  }

  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep[b] = a;
    for (int l = 0; l < 2 * ngens; ++l) {
      int tb = tab[b][l];
      if (tb < 0) continue;
      int ta = tab[a][l];
      if (ta < 0) {
        set(a, l, find(tb));
      } else {
        queue.emplace_back(find(ta), find(tb));
      }
    }
    // redirect references lazily via find()
  }

  void process_queue() {
    while (!queue.empty()) {
      auto [a, b] = queue.back();
      queue.pop_back();
      merge(a, b);
    }
  }

  int get(int a, int l) {
    int t = tab[find(a)][l];
    return t < 0 ? -1 : find(t);
  }

  // scan a relator at a coset, defining cosets to fill gaps
  bool scan_and_fill(int coset, const std::vector<int>& rel) {
    int a = find(coset);
    size_t i = 0, j = rel.size();
    int front = a, back = a;
    while (true) {
      while (i < j) {
        int nxt = get(front, rel[i]);
        if (nxt < 0) break;
        front = nxt;
        ++i;
      }
      while (j > i) {
        int prv = get(back, inv_letter(rel[j - 1]));
        if (prv < 0) break;
        back = prv;
        --j;
      }
      if (i == j) {
        if (front != back) {
          queue.emplace_back(front, back);
          process_queue();
        }
        return true;
      }
      if (i == j - 1) {
        // deduction: front . rel[i] = back
        set(find(front), rel[i], find(back));
        process_queue();
        return true;
      }
      int out;
      if (!define(find(front), rel[i], out)) return false;
      process_queue();
      front = find(front);
      back = find(back);
      int nxt = get(front, rel[i]);
      if (nxt < 0) return true;  // merged away; rescan later
      front = nxt;
      ++i;
    }
  }
};

}  // namespace tcdetail

inline std::optional<CosetTable> todd_coxeter(const MonoidPresentation& p, long coset_bound = 2000) {
  tcdetail::Enumerator e;
  e.ngens = int(p.gens.size());
  e.bound = coset_bound;
  for (auto& [l, r] : p.rels) {
    std::vector<int> rel;
    for (int g : l) rel.push_back(2 * g);
    for (size_t t = r.size(); t-- > 0;) rel.push_back(2 * r[t] + 1);
    e.relators.push_back(std::move(rel));
  }
  e.tab.emplace_back(2 * e.ngens, -1);
  e.rep.push_back(0);

  // HLT main loop
  for (int c = 0; c < int(e.tab.size()); ++c) {
    if (e.find(c) != c) continue;
    for (auto& rel : e.relators)
      if (!e.scan_and_fill(c, rel)) return std::nullopt;
    if (e.find(c) != c) continue;
    for (int l = 0; l < 2 * e.ngens; ++l) {
      if (e.get(c, l) >= 0) continue;
      int out;
      if (!e.define(e.find(c), l, out)) return std::nullopt;
      e.process_queue();
    }
  }
  // closure: retrace every relator on the (now total) table until stable
  bool changed = true;
  while (changed) {
    changed = false;
    for (int c = 0; c < int(e.tab.size()); ++c) {
      if (e.find(c) != c) continue;
      for (auto& rel : e.relators) {
        int cur = c;
        bool gap = false;
        for (int l : rel) {
          cur = e.get(cur, l);
          if (cur < 0) {
            gap = true;
            break;
          }
        }
        if (gap) return std::nullopt;  // should not happen on a total table
        if (cur != e.find(c)) {
          e.queue.emplace_back(cur, e.find(c));
          e.process_queue();
          changed = true;
        }
      }
    }
  }

  // compress live cosets
  std::vector<int> live;
  std::map<int, int> idx;
  for (int c = 0; c < int(e.tab.size()); ++c)
    if (e.find(c) == c) {
      idx[c] = int(live.size());
      live.push_back(c);
    }
  CosetTable t;
  t.ngens = e.ngens;
  t.order = long(live.size());
  t.fwd.assign(e.ngens, std::vector<int>(live.size(), -1));
  t.bwd.assign(e.ngens, std::vector<int>(live.size(), -1));
  for (int i = 0; i < int(live.size()); ++i)
    for (int g = 0; g < e.ngens; ++g) {
      int f = e.get(live[i], 2 * g);
      int b = e.get(live[i], 2 * g + 1);
      if (f < 0 || b < 0) throw InputError("todd_coxeter produced an incomplete table");
      t.fwd[g][i] = idx.at(f);
      t.bwd[g][i] = idx.at(b);
    }
  // soundness: every generator acts by a permutation and every relator
  // traces to the identity at every coset
  for (int g = 0; g < t.ngens; ++g) {
    std::vector<bool> hit(live.size(), false);
    for (int c = 0; c < int(live.size()); ++c) {
      if (t.bwd[g][t.fwd[g][c]] != c) throw InputError("todd_coxeter: inverse mismatch");
      if (hit[t.fwd[g][c]]) throw InputError("todd_coxeter: generator is not a permutation");
      hit[t.fwd[g][c]] = true;
    }
  }
  for (auto& [l, r] : p.rels)
    for (int c = 0; c < int(live.size()); ++c)
      if (t.trace(l, c) != t.trace(r, c)) throw InputError("todd_coxeter: relation fails");
  return t;
}

// abelianization via the Smith normal form of the relation matrix
struct AbelianizationResult {
  int free_rank = 0;
  std::vector<mpz_class> torsion;
  bool infinite() const { return free_rank > 0; }
};

inline AbelianizationResult abelianization(const MonoidPresentation& p) {
  int n = int(p.gens.size());
  std::vector<std::vector<mpz_class>> m;
  for (auto& [l, r] : p.rels) {
    std::vector<mpz_class> row(n, 0);
    for (int g : l) row[g] += 1;
    for (int g : r) row[g] -= 1;
    m.push_back(std::move(row));
  }
  if (m.empty()) m.push_back(std::vector<mpz_class>(n, 0));
  auto s = smith_normal_form(m);
  AbelianizationResult out;
  out.free_rank = n - s.rank;
  out.torsion = s.divisors;
  return out;
}

// the deck group: cosets of the complete table as group elements
inline FiniteGroup deck_group(const CosetTable& t) {
  int n = int(t.order);
  // word representing each coset, by BFS from the identity coset
  std::vector<Word> word(n);
  std::vector<bool> seen(n, false);
  std::vector<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int c = queue.front();
    queue.erase(queue.begin());
    for (int g = 0; g < t.ngens; ++g) {
      int d = t.fwd[g][c];
      if (!seen[d]) {
        seen[d] = true;
        word[d] = word[c];
        word[d].push_back(g);
        queue.push_back(d);
      }
    }
  }
  for (int c = 0; c < n; ++c)
    if (!seen[c]) throw InputError("deck group: coset table is not transitive");
  std::vector<std::string> names;
  for (int c = 0; c < n; ++c) names.push_back(c == 0 ? "e" : "q" + std::to_string(c));
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = t.trace(word[b], a);
  return FiniteGroup(std::move(names), std::move(table));
}

// ---------------------------------------------------------------------------
// universal cover: simplices (g, x), with d_0 twisted by the class of the
// (0,1)-edge; the deck group acts on the left, the twist multiplies on the
// right, and validate() enforces the convention structurally
// ---------------------------------------------------------------------------

struct CoverData {
  SimplicialSet total;
  FiniteGroup deck;
  GSimplicialSet gcover;                             // total with the deck action
  std::vector<std::vector<std::vector<int>>> id_of;  // [dim][g][x] -> total idx
  std::vector<std::vector<std::pair<int, int>>> of_total;  // [dim][idx] -> (g, x)
};

inline CoverData universal_cover(const SimplicialSet& x, const CosetTable& t,
                                 const EdgePathResult& ep) {
  if (!x.reduced()) throw InputError("universal_cover expects a reduced base");
  FiniteGroup deck = deck_group(t);
  int n = deck.size();
  CoverData out;
  out.deck = deck;
  out.total = SimplicialSet(x.dim_bound(), n == 1 && x.reduced());

  out.id_of.resize(x.dim_bound() + 1);
  out.of_total.resize(x.dim_bound() + 1);
  for (int dim = 0; dim <= x.dim_bound(); ++dim) {
    out.id_of[dim].assign(n, std::vector<int>(x.count(dim), -1));
    for (int g = 0; g < n; ++g)
      for (int i = 0; i < x.count(dim); ++i) {
        out.id_of[dim][g][i] =
            out.total.add_simplex(dim, deck.name(g) + "|" + x.name({dim, i})).idx;
        out.of_total[dim].emplace_back(g, i);
      }
  }
  // the deck element of the (0,1)-edge of a nondegenerate simplex
  auto edge_class = [&](SimplexId s) {
    SPair e{DegWord{}, s};
    for (int j = s.dim; j >= 2; --j) e = x.face(e, j);
    if (e.degenerate()) return deck.identity();
    int gen = ep.edge_gen[e.s.idx];
    if (gen < 0) return deck.identity();  // tree edge (reduced base: none)
    return t.fwd[gen][0] >= 0 ? t.fwd[gen][0] : deck.identity();
  };
  for (int dim = 1; dim <= x.dim_bound(); ++dim)
    for (int g = 0; g < n; ++g)
      for (int i = 0; i < x.count(dim); ++i) {
        int w = edge_class({dim, i});
        for (int j = 0; j <= dim; ++j) {
          const SPair& f = x.stored_face({dim, i}, j);
          int gg = j == 0 ? deck.mul(g, w) : g;
          out.total.set_face({dim, out.id_of[dim][g][i]}, j,
                             SPair{f.w, SimplexId{f.s.dim, out.id_of[f.s.dim][gg][f.s.idx]}});
        }
      }
  out.total.require_valid("universal cover");

  // left deck action h . (g, x) = (hg, x): free, commutes with the twist
  out.gcover = GSimplicialSet(out.total, deck);
  for (int h = 0; h < n; ++h)
    for (int dim = 0; dim <= x.dim_bound(); ++dim)
      for (int g = 0; g < n; ++g)
        for (int i = 0; i < x.count(dim); ++i)
          out.gcover.set_action(h, dim, out.id_of[dim][g][i], out.id_of[dim][deck.mul(h, g)][i]);
  out.gcover.validate();
  return out;
}

inline SimplicialMap cover_projection(const CoverData& cd, const SimplicialSet& base) {
  SimplicialMap proj(&cd.total, &base);
  for (int dim = 0; dim <= base.dim_bound(); ++dim)
    for (int g = 0; g < cd.deck.size(); ++g)
      for (int i = 0; i < base.count(dim); ++i)
        proj.set_image({dim, cd.id_of[dim][g][i]}, SPair{DegWord{}, SimplexId{dim, i}});
  proj.require_valid("cover projection");
  return proj;
}

// quotient of the cover by the deck action; the recovery check compares it
// with the base through the fiber bookkeeping
inline bool cover_quotient_recovers_base(const CoverData& cd, const SimplicialSet& base) {
  const SimplicialSet& tot = cd.gcover.sset();
  int D = tot.dim_bound();
  struct Level {
    std::vector<SPair> simp;
    std::map<SPair, int> index;
    std::vector<int> cls;
    std::vector<SPair> rep;
  };
  std::vector<Level> lv(D + 1);
  for (int n = 0; n <= D; ++n) {
    auto& L = lv[n];
    L.simp = tot.simplices(n);
    for (int i = 0; i < int(L.simp.size()); ++i) L.index[L.simp[i]] = i;
    std::vector<int> uf(L.simp.size());
    for (int i = 0; i < int(uf.size()); ++i) uf[i] = i;
    std::function<int(int)> find = [&](int a) { return uf[a] == a ? a : uf[a] = find(uf[a]); };
    for (int i = 0; i < int(L.simp.size()); ++i)
      for (int h = 0; h < cd.deck.size(); ++h) {
        int j = L.index.at(cd.gcover.apply(h, L.simp[i]));
        int u = find(i), v = find(j);
        if (u != v) uf[std::max(u, v)] = std::min(u, v);
      }
    L.cls.assign(L.simp.size(), -1);
    for (int i = 0; i < int(L.simp.size()); ++i) {
      int r = find(i);
      if (L.cls[r] < 0) {
        L.cls[r] = int(L.rep.size());
        L.rep.push_back(L.simp[r]);
      }
      L.cls[i] = L.cls[r];
    }
  }
  DegreewiseData dd;
  dd.dim_bound = D;
  dd.reduced_hint = base.reduced() && lv[0].rep.size() == 1;
  dd.sizes.resize(D + 1);
  for (int n = 0; n <= D; ++n) dd.sizes[n] = int(lv[n].rep.size());
  dd.face = [&](int n, int i, int e) {
    return lv[n - 1].cls[lv[n - 1].index.at(tot.face(lv[n].rep[e], i))];
  };
  dd.degen = [&](int n, int i, int e) {
    return lv[n + 1].cls[lv[n + 1].index.at(tot.degeneracy(lv[n].rep[e], i))];
  };
  Extraction ex = degreewise_extract(dd);
  // map the quotient onto the base through the fiber coordinates
  SimplicialMap cmp(&ex.sset, &base);
  for (int n = 0; n <= D; ++n)
    for (int e = 0; e < int(lv[n].rep.size()); ++e) {
      const SPair& p = ex.expr[n][e];
      if (p.degenerate()) continue;
      const SPair& rep = lv[n].rep[e];
      if (rep.degenerate()) return false;
      auto [g, xi] = cd.of_total[n][rep.s.idx];
      (void)g;
      cmp.set_image(p.s, SPair{rep.w, SimplexId{n, xi}});
    }
  return cmp.is_isomorphism();
}

// pi_1 pipeline summary for one space
struct Pi1Result {
  MonoidPresentation presentation;           // unlocalized, chains grammar
  MonoidPresentation localized;
  std::optional<CosetTable> table;           // complete enumeration when found
  AbelianizationResult abelian;
  bool certified_finite = false;
  bool certified_infinite = false;
};

inline Pi1Result pi1_pipeline(const SimplicialSet& x, long coset_bound = 2000) {
  Pi1Result out;
  auto ep = edge_path_presentation(x);
  out.presentation = ep.pres;
  MonoidPresentation marked = ep.pres;
  marked.chains_type = x.reduced();
  marked_elements(marked);
  out.localized = localize_h0(marked);
  out.table = todd_coxeter(ep.pres, coset_bound);
  out.abelian = abelianization(ep.pres);
  out.certified_finite = out.table.has_value();
  out.certified_infinite = !out.certified_finite && out.abelian.infinite();
  return out;
}

}  // namespace eqc
