#pragma once

// Monoid/group presentations in the shared report grammar, the H_0
// presentation of the cobar construction, monoid-like markings,
// localization, and bounded Knuth-Bendix completion for word problems.

#include "equicobar/cobar.hpp"

namespace eqc {

using Word = std::vector<int>;

struct MonoidPresentation {
  std::vector<std::string> gens;
  std::vector<std::pair<Word, Word>> rels;  // left = right
  std::vector<bool> marked;                 // monoid-like classes
  std::vector<int> inverse;                 // inverse[i] >= 0 after localization
  bool chains_type = false;
  bool localized = false;
  bool marking_conclusive = true;
  std::string marking_note;

  std::string word_str(const Word& w) const {
    if (w.empty()) return "1";
    std::vector<std::string> parts;
    for (int g : w) parts.push_back(gens[g]);
    return join(parts, "*");
  }
  std::string str() const {
    std::vector<std::string> rs;
    for (auto& [l, r] : rels) rs.push_back(word_str(l) + " = " + word_str(r));
    return "< " + join(gens, ", ") + " | " + join(rs, ", ") + " >";
  }
};

// H_0 of the cobar construction of the chains of a reduced simplicial set,
// read off in the group-like variables: one generator per nondegenerate
// 1-simplex, one relation d1 = d2 * d0 per nondegenerate 2-simplex,
// degenerate edges giving the empty word.
inline MonoidPresentation h0_presentation(const SimplicialSet& x) {
  if (!x.reduced()) throw InputError("h0_presentation expects a reduced simplicial set");
  if (x.dim_bound() < 2) throw InputError("h0_presentation needs dimension bound >= 2");
  MonoidPresentation p;
  p.chains_type = true;
  for (int i = 0; i < x.count(1); ++i) p.gens.push_back(x.name({1, i}));
  p.inverse.assign(p.gens.size(), -1);
  auto letter = [&](const SPair& e) {
    Word w;
    if (!e.degenerate()) w.push_back(e.s.idx);
    return w;
  };
  for (int i = 0; i < x.count(2); ++i) {
    SPair sigma{DegWord{}, SimplexId{2, i}};
    Word lhs = letter(x.face(sigma, 1));
    Word rhs = letter(x.face(sigma, 2));
    Word r0 = letter(x.face(sigma, 0));
    rhs.insert(rhs.end(), r0.begin(), r0.end());
    p.rels.emplace_back(std::move(lhs), std::move(rhs));
  }
  p.marked.assign(p.gens.size(), false);
  return p;
}

// monoid-like classes: for chains-type presentations every generator class
// is monoid-like; detection elsewhere is flagged inconclusive
inline void marked_elements(MonoidPresentation& p) {
  if (p.chains_type) {
    p.marked.assign(p.gens.size(), true);
    p.marking_conclusive = true;
    return;
  }
  p.marking_conclusive = false;
  p.marking_note = "monoid-like detection implemented for chains-type presentations only";
}

// universal localization at the marks: a formal inverse and the two
// relations g g^-1 = 1 = g^-1 g per marked generator
inline MonoidPresentation localize_h0(const MonoidPresentation& in) {
  MonoidPresentation p = in;
  if (p.localized) return p;
  int n = int(p.gens.size());
  p.inverse.assign(2 * size_t(n), -1);
  for (int i = 0; i < n; ++i) {
    if (!p.marked[i]) continue;
    p.gens.push_back(p.gens[i] + "^-1");
    int inv = int(p.gens.size()) - 1;
    p.inverse[i] = inv;
    p.inverse.resize(p.gens.size(), -1);
    p.inverse[inv] = i;
    p.rels.push_back({Word{i, inv}, Word{}});
    p.rels.push_back({Word{inv, i}, Word{}});
  }
  p.inverse.resize(p.gens.size(), -1);
  p.localized = true;
  return p;
}

// ---------------------------------------------------------------------------
// Knuth-Bendix completion (shortlex), bounded
// ---------------------------------------------------------------------------

struct KbCaps {
  int max_rules = 400;
  int max_len = 40;
  int max_passes = 60;
};

struct RewriteSystem {
  int ngens = 0;
  std::vector<std::pair<Word, Word>> rules;  // lhs -> rhs, lhs > rhs shortlex

  Word normalize(Word w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& [l, r] : rules) {
        if (l.size() > w.size()) continue;
        for (size_t pos = 0; pos + l.size() <= w.size(); ++pos) {
          if (std::equal(l.begin(), l.end(), w.begin() + long(pos))) {
            Word nw(w.begin(), w.begin() + long(pos));
            nw.insert(nw.end(), r.begin(), r.end());
            nw.insert(nw.end(), w.begin() + long(pos + l.size()), w.end());
            w = std::move(nw);
            changed = true;
            break;
          }
        }
        if (changed) break;
      }
    }
    return w;
  }

  bool is_irreducible(const Word& w) const {
    for (auto& [l, r] : rules) {
      if (l.empty() || l.size() > w.size()) continue;
      for (size_t pos = 0; pos + l.size() <= w.size(); ++pos)
        if (std::equal(l.begin(), l.end(), w.begin() + long(pos))) return false;
    }
    return true;
  }

  // all irreducible words, or nullopt if more than max_count exist
  std::optional<std::vector<Word>> normal_forms(size_t max_count) const {
    std::vector<Word> out;
    std::vector<Word> frontier{Word{}};
    if (is_irreducible(Word{})) out.push_back(Word{});
    while (!frontier.empty()) {
      std::vector<Word> next;
      for (auto& w : frontier)
        for (int g = 0; g < ngens; ++g) {
          Word cand = w;
          cand.push_back(g);
          if (!is_irreducible(cand)) continue;
          out.push_back(cand);
          if (out.size() > max_count) return std::nullopt;
          next.push_back(std::move(cand));
        }
      frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
      return std::pair(a.size(), a) < std::pair(b.size(), b);
    });
    return out;
  }
};

namespace kbdetail {

inline bool shortlex_less(const Word& a, const Word& b) {
  return std::pair(a.size(), a) < std::pair(b.size(), b);
}

}  // namespace kbdetail

// bounded completion; nullopt = gave up (never a wrong answer)
inline std::optional<RewriteSystem> kb_complete(const MonoidPresentation& p,
                                                const KbCaps& caps = {}) {
  RewriteSystem rs;
  rs.ngens = int(p.gens.size());
  auto add_rule = [&](Word a, Word b) -> bool {
    a = rs.normalize(std::move(a));
    b = rs.normalize(std::move(b));
    if (a == b) return true;
    if (kbdetail::shortlex_less(a, b)) std::swap(a, b);
    if (int(a.size()) > caps.max_len) return false;
    rs.rules.emplace_back(std::move(a), std::move(b));
    return int(rs.rules.size()) <= caps.max_rules;
  };
  for (auto& [l, r] : p.rels)
    if (!add_rule(l, r)) return std::nullopt;

  for (int pass = 0; pass < caps.max_passes; ++pass) {
    bool added = false;
    size_t nrules = rs.rules.size();
    for (size_t i = 0; i < nrules; ++i)
      for (size_t j = 0; j < nrules; ++j) {
        const Word l1 = rs.rules[i].first, r1 = rs.rules[i].second;
        const Word l2 = rs.rules[j].first, r2 = rs.rules[j].second;
        // overlaps: a proper suffix of l1 equals a proper prefix of l2
        for (size_t k = 1; k < l1.size() && k <= l2.size(); ++k) {
          if (!std::equal(l1.end() - long(k), l1.end(), l2.begin())) continue;
          // word = l1 + tail(l2, k): two reductions
          Word u(l1.begin(), l1.end());
          u.insert(u.end(), l2.begin() + long(k), l2.end());
          Word a = r1;
          a.insert(a.end(), l2.begin() + long(k), l2.end());
          Word b(l1.begin(), l1.end() - long(k));
          b.insert(b.end(), r2.begin(), r2.end());
          Word na = rs.normalize(a), nb = rs.normalize(b);
          if (na != nb) {
            if (!add_rule(na, nb)) return std::nullopt;
            added = true;
          }
        }
        // l2 inside l1 (i != j)
        if (i != j && l2.size() < l1.size()) {
          for (size_t pos = 0; pos + l2.size() <= l1.size(); ++pos) {
            if (!std::equal(l2.begin(), l2.end(), l1.begin() + long(pos))) continue;
            Word a = r1;
            Word b(l1.begin(), l1.begin() + long(pos));
            b.insert(b.end(), r2.begin(), r2.end());
            b.insert(b.end(), l1.begin() + long(pos + l2.size()), l1.end());
            Word na = rs.normalize(a), nb = rs.normalize(b);
            if (na != nb) {
              if (!add_rule(na, nb)) return std::nullopt;
              added = true;
            }
          }
        }
        if (rs.rules.size() != nrules) break;  // restart pass over the new set
      }
    if (!added && rs.rules.size() == nrules) {
      // interreduce for a tidy confluent system
      std::vector<std::pair<Word, Word>> keep;
      for (size_t i = 0; i < rs.rules.size(); ++i) {
        RewriteSystem others;
        others.ngens = rs.ngens;
        for (size_t j = 0; j < rs.rules.size(); ++j)
          if (j != i) others.rules.push_back(rs.rules[j]);
        if (others.is_irreducible(rs.rules[i].first))
          keep.push_back({rs.rules[i].first, others.normalize(rs.rules[i].second)});
      }
      rs.rules = keep;
      return rs;
    }
  }
  return std::nullopt;
}

// decide a word problem if completion succeeds
inline std::optional<bool> words_equal(const MonoidPresentation& p, const Word& a, const Word& b,
                                       const KbCaps& caps = {}) {
  auto rs = kb_complete(p, caps);
  if (!rs) return std::nullopt;
  return rs->normalize(a) == rs->normalize(b);
}

// dimension of the presented algebra (= number of monoid elements) when
// finite and certified by a confluent system; nullopt when inconclusive
// or infinite within the cap
inline std::optional<long> presented_dimension(const MonoidPresentation& p, size_t max_count = 4096,
                                               const KbCaps& caps = {}) {
  auto rs = kb_complete(p, caps);
  if (!rs) return std::nullopt;
  auto nf = rs->normal_forms(max_count);
  if (!nf) return std::nullopt;
  return long(nf->size());
}

// multiplication table of the presented monoid on its normal forms
inline std::optional<std::vector<std::vector<int>>> presented_table(const MonoidPresentation& p,
                                                                    size_t max_count = 512,
                                                                    const KbCaps& caps = {}) {
  auto rs = kb_complete(p, caps);
  if (!rs) return std::nullopt;
  auto nf = rs->normal_forms(max_count);
  if (!nf) return std::nullopt;
  std::map<Word, int> idx;
  for (int i = 0; i < int(nf->size()); ++i) idx[(*nf)[i]] = i;
  std::vector<std::vector<int>> table(nf->size(), std::vector<int>(nf->size()));
  for (size_t a = 0; a < nf->size(); ++a)
    for (size_t b = 0; b < nf->size(); ++b) {
      Word w = (*nf)[a];
      w.insert(w.end(), (*nf)[b].begin(), (*nf)[b].end());
      table[a][b] = idx.at(rs->normalize(w));
    }
  return table;
}

// additivity of H_0 under wedges: free product = disjoint union of data
inline MonoidPresentation free_product(const MonoidPresentation& a, const MonoidPresentation& b) {
  MonoidPresentation p;
  p.chains_type = a.chains_type && b.chains_type;
  p.gens = a.gens;
  for (auto& g : b.gens) p.gens.push_back(g);
  p.rels = a.rels;
  int off = int(a.gens.size());
  for (auto& [l, r] : b.rels) {
    Word ll = l, rr = r;
    for (auto& x : ll) x += off;
    for (auto& x : rr) x += off;
    p.rels.emplace_back(std::move(ll), std::move(rr));
  }
  p.marked = a.marked;
  for (bool m : b.marked) p.marked.push_back(m);
  p.inverse.assign(p.gens.size(), -1);
  return p;
}

// Ties the presentation to the dg side: in the group-like variables
// u = 1 + [a], the relation elements u_{d1} - u_{d2} u_{d0}, padded on both
// sides by degree-0 words and truncated by the length cap, must span exactly
// the image of the degree-1 cobar differential.
template <FieldScalar F>
bool h0_presentation_matches_cobar(const CobarAlgebra<F>& cb, const MonoidPresentation& p) {
  auto ctx = cb.ctx;
  const int d0 = cb.dim(0);
  Matrix<F> bd = column_space(cb.d[1]);
  if (p.rels.empty()) return bd.cols() == 0;

  // relation element of (l = r): terms over order-preserving subwords,
  // +1 from u_l, -1 from u_r; constants cancel
  auto expand_into = [&](const Word& w, const F& sign, std::map<Word, F>& acc) {
    int subsets = 1 << w.size();
    for (int mask = 1; mask < subsets; ++mask) {
      Word sub;
      for (size_t t = 0; t < w.size(); ++t)
        if (mask & (1 << t)) sub.push_back(w[t]);
      auto it = acc.find(sub);
      if (it == acc.end())
        acc.emplace(std::move(sub), sign);
      else
        it->second = it->second + sign;
    }
  };
  std::vector<std::map<Word, F>> rel_terms;
  for (auto& [l, r] : p.rels) {
    std::map<Word, F> acc;
    expand_into(l, ctx.one(), acc);
    expand_into(r, -ctx.one(), acc);
    rel_terms.push_back(std::move(acc));
  }
  // padded products x * rel * y over all degree-0 words, length-truncated
  std::vector<std::vector<F>> cols;
  for (auto& pad_x : cb.words[0])
    for (auto& pad_y : cb.words[0])
      for (auto& terms : rel_terms) {
        std::vector<F> v(d0, ctx.zero());
        bool nonzero = false;
        for (auto& [term, coef] : terms) {
          Word w = pad_x;
          w.insert(w.end(), term.begin(), term.end());
          w.insert(w.end(), pad_y.begin(), pad_y.end());
          if (int(w.size()) > cb.length_cap) continue;  // truncated away
          auto it = cb.index[0].find(w);
          if (it == cb.index[0].end()) continue;
          v[it->second] = v[it->second] + coef;
          nonzero = true;
        }
        if (nonzero) cols.push_back(std::move(v));
      }
  Matrix<F> rv = cols.empty() ? Matrix<F>(d0, 0, ctx) : Matrix<F>::from_columns(cols, d0, ctx);
  return rank(rv) == rank(bd) && rank(rv.hstack(bd)) == rank(bd);
}

}  // namespace eqc
