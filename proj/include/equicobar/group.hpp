#pragma once

// Finite groups by multiplication table, subgroup enumeration, G-sets.

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "equicobar/util.hpp"

namespace eqc {

class FiniteGroup {
 public:
  FiniteGroup() = default;
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
      : names_(std::move(names)), table_(std::move(table)) {
    int n = size();
    if (int(table_.size()) != n) throw InputError("group table has wrong size");
    for (auto& row : table_)
      if (int(row.size()) != n) throw InputError("group table has wrong size");
    // identity
    id_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int g = 0; g < n; ++g) ok = ok && table_[e][g] == g && table_[g][e] == g;
      if (ok) id_ = e;
    }
    if (id_ < 0) throw InputError("group table has no identity");
    inv_.assign(n, -1);
    for (int g = 0; g < n; ++g)
      for (int h = 0; h < n; ++h)
        if (table_[g][h] == id_) inv_[g] = h;
    for (int g = 0; g < n; ++g) {
      if (inv_[g] < 0 || table_[inv_[g]][g] != id_) throw InputError("group table has no inverses");
      for (int h = 0; h < n; ++h)
        for (int k = 0; k < n; ++k)
          if (table_[table_[g][h]][k] != table_[g][table_[h][k]])
            throw InputError("group table is not associative");
    }
  }

  int size() const { return int(names_.size()); }
  int identity() const { return id_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }  // g a g^-1
  const std::string& name(int g) const { return names_[g]; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  std::optional<int> find(const std::string& nm) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == nm) return i;
    return std::nullopt;
  }

  static FiniteGroup trivial() { return cyclic(1); }

  static FiniteGroup cyclic(int n) {
    std::vector<std::string> names;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      names.push_back(i == 0 ? "e" : "g" + std::to_string(i));
      for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
    }
    return FiniteGroup(std::move(names), std::move(t));
  }

  // symmetric group on m letters (m small), elements named by one-line notation
  static FiniteGroup symmetric(int m) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p(m);
    for (int i = 0; i < m; ++i) p[i] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    // identity first is guaranteed by starting at sorted order
    int n = int(perms.size());
    std::map<std::vector<int>, int> idx;
    for (int i = 0; i < n; ++i) idx[perms[i]] = i;
    std::vector<std::string> names;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i) {
      std::string nm = "p";
      for (int v : perms[i]) nm += std::to_string(v);
      names.push_back(nm);
      for (int j = 0; j < n; ++j) {
        std::vector<int> c(m);
        for (int x = 0; x < m; ++x) c[x] = perms[i][perms[j][x]];  // i after j
        t[i][j] = idx[c];
      }
    }
    return FiniteGroup(std::move(names), std::move(t));
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inv_;
  int id_ = 0;
};

struct Subgroup {
  std::vector<int> elems;  // sorted, contains identity
  int order() const { return int(elems.size()); }
  bool contains(int g) const { return std::binary_search(elems.begin(), elems.end(), g); }
  bool operator==(const Subgroup& o) const { return elems == o.elems; }
  bool operator<(const Subgroup& o) const {
    return std::pair(elems.size(), elems) < std::pair(o.elems.size(), o.elems);
  }
};

inline Subgroup close_subset(const FiniteGroup& g, std::vector<int> gens) {
  std::set<int> s{g.identity()};
  for (int x : gens) s.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(s.begin(), s.end());
    for (int a : cur)
      for (int b : cur) {
        if (s.insert(g.mul(a, b)).second) grew = true;
        if (s.insert(g.inv(a)).second) grew = true;
      }
  }
  return Subgroup{std::vector<int>(s.begin(), s.end())};
}

struct SubgroupList {
  std::vector<Subgroup> all;        // sorted by (order, elems)
  std::vector<int> conjugacy_class; // class id per subgroup
};

// complete enumeration by closing generator sets; |G| is assumed small
inline SubgroupList subgroups(const FiniteGroup& g, int bound = 24) {
  if (g.size() > bound) throw InputError("group order exceeds the configured bound");
  std::set<Subgroup> found;
  found.insert(close_subset(g, {}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> cur(found.begin(), found.end());
    for (auto& h : cur)
      for (int x = 0; x < g.size(); ++x) {
        if (h.contains(x)) continue;
        std::vector<int> gens = h.elems;
        gens.push_back(x);
        if (found.insert(close_subset(g, gens)).second) grew = true;
      }
  }
  SubgroupList out;
  out.all.assign(found.begin(), found.end());
  std::sort(out.all.begin(), out.all.end());
  // conjugacy classes
  out.conjugacy_class.assign(out.all.size(), -1);
  int next = 0;
  for (size_t i = 0; i < out.all.size(); ++i) {
    if (out.conjugacy_class[i] >= 0) continue;
    out.conjugacy_class[i] = next;
    for (int x = 0; x < g.size(); ++x) {
      std::vector<int> c;
      for (int h : out.all[i].elems) c.push_back(g.conj(x, h));
      std::sort(c.begin(), c.end());
      Subgroup sc{c};
      for (size_t j = 0; j < out.all.size(); ++j)
        if (out.all[j] == sc) out.conjugacy_class[j] = next;
    }
    ++next;
  }
  return out;
}

// a finite set with a G-action
struct GSet {
  int size = 0;
  std::vector<std::vector<int>> act;  // act[g][s]

  void validate(const FiniteGroup& g) const {
    if (int(act.size()) != g.size()) throw InputError("G-set action has wrong group size");
    for (auto& p : act) {
      if (int(p.size()) != size) throw InputError("G-set permutation has wrong size");
      std::vector<bool> hit(size, false);
      for (int v : p) {
        if (v < 0 || v >= size || hit[v]) throw InputError("G-set action is not a permutation");
        hit[v] = true;
      }
    }
    for (int s = 0; s < size; ++s) {
      if (act[g.identity()][s] != s) throw InputError("G-set identity acts nontrivially");
      for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b)
          if (act[g.mul(a, b)][s] != act[a][act[b][s]])
            throw InputError("G-set action is not a homomorphism");
    }
  }

  std::vector<int> fixed(const std::vector<int>& subgroup_elems) const {
    std::vector<int> out;
    for (int s = 0; s < size; ++s) {
      bool fix = true;
      for (int h : subgroup_elems) fix = fix && act[h][s] == s;
      if (fix) out.push_back(s);
    }
    return out;
  }

  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size, false);
    for (int s = 0; s < size; ++s) {
      if (seen[s]) continue;
      std::set<int> orb{s};
      bool grew = true;
      while (grew) {
        grew = false;
        for (int t : std::vector<int>(orb.begin(), orb.end()))
          for (auto& p : act)
            if (orb.insert(p[t]).second) grew = true;
      }
      for (int t : orb) seen[t] = true;
      out.emplace_back(orb.begin(), orb.end());
    }
    return out;
  }
};

// left cosets G/H with left translation action
struct CosetSpace {
  GSet gset;
  std::vector<int> reps;                 // minimal representative per coset
  std::vector<int> coset_of;             // element -> coset index
};

inline CosetSpace coset_space(const FiniteGroup& g, const Subgroup& h) {
  CosetSpace out;
  out.coset_of.assign(g.size(), -1);
  for (int x = 0; x < g.size(); ++x) {
    if (out.coset_of[x] >= 0) continue;
    int c = int(out.reps.size());
    for (int k : h.elems) out.coset_of[g.mul(x, k)] = c;
    out.reps.push_back(x);  // x is minimal: smaller elements already assigned
  }
  out.gset.size = int(out.reps.size());
  out.gset.act.assign(g.size(), std::vector<int>(out.gset.size));
  for (int a = 0; a < g.size(); ++a)
    for (int c = 0; c < out.gset.size; ++c) out.gset.act[a][c] = out.coset_of[g.mul(a, out.reps[c])];
  return out;
}

}  // namespace eqc
