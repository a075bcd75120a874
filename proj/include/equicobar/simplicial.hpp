#pragma once

// Finite simplicial sets stored by nondegenerate simplices with face data
// in Eilenberg-Zilber canonical form: every simplex is a unique pair
// (degeneracy word, nondegenerate simplex). Face and degeneracy operators
// act on pairs by rewriting with the simplicial identities.

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "equicobar/util.hpp"

namespace eqc {

// Degeneracy word s_{v[0]} . s_{v[1]} ... s_{v[m-1]} with v strictly
// decreasing; v.back() is applied first.
struct DegWord {
  std::vector<int> v;

  int size() const { return int(v.size()); }
  bool empty() const { return v.empty(); }
  bool operator==(const DegWord& o) const { return v == o.v; }
  bool operator<(const DegWord& o) const { return v < o.v; }

  // valid as a word from dimension k upward?
  bool valid_from(int k) const {
    for (int t = 0; t < size(); ++t) {
      int idx = v[size() - 1 - t];  // t-th applied, at dimension k + t
      if (idx < 0 || idx > k + t) return false;
    }
    for (int j = 0; j + 1 < size(); ++j)
      if (v[j] <= v[j + 1]) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (int j = 0; j < size(); ++j) out += "s" + std::to_string(v[j]);
    return out;
  }
};

// s_i applied after w (outermost); EZ-normalized
inline DegWord outer_compose(DegWord w, int i) {
  int c = i;
  for (size_t j = 0; j < w.v.size(); ++j) {
    if (c > w.v[j]) {
      w.v.insert(w.v.begin() + long(j), c);
      return w;
    }
    w.v[j] += 1;  // s_c . s_a = s_{a+1} . s_c when c <= a
  }
  w.v.push_back(c);
  return w;
}

// w . s_i (s_i applied first, innermost); EZ-normalized
inline DegWord inner_compose(DegWord w, int i) {
  int c = i;
  for (size_t j = w.v.size(); j-- > 0;) {
    if (c < w.v[j]) {
      w.v.insert(w.v.begin() + long(j) + 1, c);
      return w;
    }
    c += 1;  // s_a . s_c = s_{c+1} . s_a when a <= c
  }
  w.v.insert(w.v.begin(), c);
  return w;
}

// w1 . w2 as operator composition (w2 applied first)
inline DegWord word_compose(DegWord w1, const DegWord& w2) {
  for (int e : w2.v) w1 = inner_compose(w1, e);
  return w1;
}

// Push d_i through the word from the outside. Either the face is absorbed
// (d_i s_j = id) or a residual face survives to hit the core simplex.
struct FacePush {
  DegWord word;
  std::optional<int> residual;
};

inline FacePush push_face(const DegWord& w, int i) {
  FacePush out;
  int c = i;
  for (size_t j = 0; j < w.v.size(); ++j) {
    int a = w.v[j];
    if (c < a) {
      out.word.v.push_back(a - 1);  // d_c s_a = s_{a-1} d_c
    } else if (c == a || c == a + 1) {
      for (size_t k = j + 1; k < w.v.size(); ++k) out.word.v.push_back(w.v[k]);
      out.residual = std::nullopt;
      return out;
    } else {
      out.word.v.push_back(a);  // d_c s_a = s_a d_{c-1}
      c -= 1;
    }
  }
  out.residual = c;
  return out;
}

struct SimplexId {
  int dim = -1;
  int idx = -1;
  bool operator==(const SimplexId& o) const { return dim == o.dim && idx == o.idx; }
  bool operator<(const SimplexId& o) const { return std::pair(dim, idx) < std::pair(o.dim, o.idx); }
};

// canonical form of a (possibly degenerate) simplex
struct SPair {
  DegWord w;
  SimplexId s;
  int dim() const { return s.dim + w.size(); }
  bool degenerate() const { return !w.empty(); }
  bool operator==(const SPair& o) const { return w == o.w && s == o.s; }
  bool operator<(const SPair& o) const { return std::tie(s, w) < std::tie(o.s, o.w); }
};

struct Violation {
  std::string message;
};

class SimplicialSet {
 public:
  SimplicialSet() = default;
  SimplicialSet(int dim_bound, bool reduced)
      : dim_bound_(dim_bound), reduced_(reduced), names_(dim_bound + 1), faces_(dim_bound + 1),
        index_(dim_bound + 1) {}

  int dim_bound() const { return dim_bound_; }
  bool reduced() const { return reduced_; }

  int count(int n) const { return n <= dim_bound_ && n >= 0 ? int(names_[n].size()) : 0; }
  const std::string& name(SimplexId s) const { return names_[s.dim][s.idx]; }
  std::string pair_name(const SPair& p) const {
    return p.w.empty() ? name(p.s) : p.w.str() + "." + name(p.s);
  }

  SimplexId add_simplex(int dim, const std::string& nm) {
    if (dim < 0 || dim > dim_bound_) throw InputError("simplex dimension out of bounds");
    if (index_[dim].count(nm)) throw InputError("duplicate simplex name: " + nm);
    names_[dim].push_back(nm);
    faces_[dim].emplace_back(dim > 0 ? dim + 1 : 0);
    index_[dim][nm] = int(names_[dim].size()) - 1;
    return {dim, int(names_[dim].size()) - 1};
  }

  void set_face(SimplexId s, int i, SPair face) {
    if (i < 0 || i > s.dim || s.dim == 0) throw InputError("face index out of range");
    faces_[s.dim][s.idx][i] = std::move(face);
  }

  std::optional<SimplexId> find(int dim, const std::string& nm) const {
    if (dim < 0 || dim > dim_bound_) return std::nullopt;
    auto it = index_[dim].find(nm);
    if (it == index_[dim].end()) return std::nullopt;
    return SimplexId{dim, it->second};
  }

  const SPair& stored_face(SimplexId s, int i) const { return faces_[s.dim][s.idx][i]; }

  // d_i on a canonical pair
  SPair face(const SPair& p, int i) const {
    int n = p.dim();
    if (n <= 0 || i < 0 || i > n) throw InputError("face index out of range");
    FacePush fp = push_face(p.w, i);
    if (!fp.residual) return SPair{fp.word, p.s};
    const SPair& f = faces_[p.s.dim][p.s.idx][*fp.residual];
    return SPair{word_compose(fp.word, f.w), f.s};
  }

  // s_i on a canonical pair
  SPair degeneracy(const SPair& p, int i) const {
    int n = p.dim();
    if (i < 0 || i > n) throw InputError("degeneracy index out of range");
    if (n + 1 > dim_bound_) throw InputError("degeneracy exceeds dimension bound");
    return SPair{outer_compose(p.w, i), p.s};
  }

  // all n-simplices in canonical form, ordered by (core simplex, word)
  std::vector<SPair> simplices(int n) const {
    if (n < 0 || n > dim_bound_)
      throw InputError("simplex enumeration beyond dimension bound " + std::to_string(dim_bound_));
    std::vector<SPair> out;
    for (int k = 0; k <= n; ++k) {
      int r = n - k;
      // strictly decreasing r-subsets of {0..n-1}
      std::vector<std::vector<int>> words;
      std::vector<int> cur;
      enum_words(n, r, 0, cur, words);
      for (int idx = 0; idx < count(k); ++idx)
        for (auto& w : words) out.push_back(SPair{DegWord{w}, SimplexId{k, idx}});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::optional<Violation> validate() const {
    if (reduced_ && count(0) != 1)
      return Violation{"reduced simplicial set must have exactly one 0-simplex"};
    for (int n = 1; n <= dim_bound_; ++n) {
      for (int idx = 0; idx < count(n); ++idx) {
        for (int i = 0; i <= n; ++i) {
          const SPair& f = faces_[n][idx][i];
          if (f.s.dim < 0 || f.s.dim > dim_bound_ || f.s.idx < 0 || f.s.idx >= count(f.s.dim))
            return Violation{"face of " + names_[n][idx] + " references an unknown simplex"};
          if (f.dim() != n - 1)
            return Violation{"face of " + names_[n][idx] + " has wrong dimension"};
          if (!f.w.valid_from(f.s.dim))
            return Violation{"face of " + names_[n][idx] + " carries an invalid degeneracy word"};
        }
      }
    }
    // d_i d_j = d_{j-1} d_i for i < j, checked on nondegenerate simplices
    for (int n = 2; n <= dim_bound_; ++n) {
      for (int idx = 0; idx < count(n); ++idx) {
        SPair p{DegWord{}, SimplexId{n, idx}};
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i) {
            SPair lhs = face(face(p, j), i);
            SPair rhs = face(face(p, i), j - 1);
            if (!(lhs == rhs))
              return Violation{"identity d" + std::to_string(i) + " d" + std::to_string(j) +
                               " fails on " + names_[n][idx]};
          }
      }
    }
    return std::nullopt;
  }

  void require_valid(const std::string& label) const {
    if (auto v = validate())
      throw InputError("invalid simplicial set (" + label + "): " + v->message);
  }

  int total_nondegenerate() const {
    int t = 0;
    for (int n = 0; n <= dim_bound_; ++n) t += count(n);
    return t;
  }

  bool operator==(const SimplicialSet& o) const {
    return dim_bound_ == o.dim_bound_ && reduced_ == o.reduced_ && names_ == o.names_ &&
           faces_equal(o);
  }

 private:
  bool faces_equal(const SimplicialSet& o) const {
    for (int n = 1; n <= dim_bound_; ++n)
      for (int idx = 0; idx < count(n); ++idx)
        for (int i = 0; i <= n; ++i)
          if (!(faces_[n][idx][i] == o.faces_[n][idx][i])) return false;
    return true;
  }
  static void enum_words(int n, int r, int start, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out) {
    if (int(cur.size()) == r) {
      std::vector<int> w(cur.rbegin(), cur.rend());  // decreasing
      out.push_back(std::move(w));
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      enum_words(n, r, i + 1, cur, out);
      cur.pop_back();
    }
  }

  int dim_bound_ = 0;
  bool reduced_ = false;
  std::vector<std::vector<std::string>> names_;                // per dim
  std::vector<std::vector<std::vector<SPair>>> faces_;         // [dim][idx][i]
  std::vector<std::map<std::string, int>> index_;
};

// A simplicial map, stored on nondegenerate simplices; extends to all
// simplices by f(w . x) = w . f(x). Holds raw views of its endpoints;
// factory functions attach owning handles via retain().
class SimplicialMap {
 public:
  SimplicialMap() = default;
  SimplicialMap(const SimplicialSet* src, const SimplicialSet* dst)
      : src_(src), dst_(dst), img_(src->dim_bound() + 1) {
    for (int n = 0; n <= src->dim_bound(); ++n) img_[n].resize(src->count(n));
  }

  void retain(std::shared_ptr<const SimplicialSet> src_hold,
              std::shared_ptr<const SimplicialSet> dst_hold) {
    src_hold_ = std::move(src_hold);
    dst_hold_ = std::move(dst_hold);
    if (src_hold_) src_ = src_hold_.get();
    if (dst_hold_) dst_ = dst_hold_.get();
  }

  static SimplicialMap identity(const SimplicialSet& x) {
    SimplicialMap f(&x, &x);
    for (int n = 0; n <= x.dim_bound(); ++n)
      for (int i = 0; i < x.count(n); ++i) f.set_image({n, i}, SPair{DegWord{}, SimplexId{n, i}});
    return f;
  }

  const SimplicialSet& src() const { return *src_; }
  const SimplicialSet& dst() const { return *dst_; }

  void set_image(SimplexId s, SPair p) { img_[s.dim][s.idx] = std::move(p); }
  const SPair& image(SimplexId s) const { return img_[s.dim][s.idx]; }

  SPair apply(const SPair& p) const {
    const SPair& base = img_[p.s.dim][p.s.idx];
    return SPair{word_compose(p.w, base.w), base.s};
  }

  std::optional<Violation> validate() const {
    for (int n = 0; n <= src_->dim_bound(); ++n)
      for (int idx = 0; idx < src_->count(n); ++idx) {
        const SPair& im = img_[n][idx];
        if (im.s.dim < 0 || im.s.idx < 0 || im.s.dim > dst_->dim_bound() ||
            im.s.idx >= dst_->count(im.s.dim))
          return Violation{"image of " + src_->name({n, idx}) + " is not in the target"};
        if (im.dim() != n) return Violation{"image of " + src_->name({n, idx}) + " has wrong dimension"};
        if (!im.w.valid_from(im.s.dim))
          return Violation{"image of " + src_->name({n, idx}) + " has an invalid word"};
      }
    for (int n = 1; n <= src_->dim_bound(); ++n)
      for (int idx = 0; idx < src_->count(n); ++idx) {
        SPair p{DegWord{}, SimplexId{n, idx}};
        for (int i = 0; i <= n; ++i) {
          SPair lhs = apply(src_->face(p, i));
          SPair rhs = dst_->face(apply(p), i);
          if (!(lhs == rhs))
            return Violation{"map does not commute with d" + std::to_string(i) + " on " +
                             src_->name({n, idx})};
        }
      }
    return std::nullopt;
  }

  void require_valid(const std::string& label) const {
    if (auto v = validate()) throw InputError("invalid simplicial map (" + label + "): " + v->message);
  }

  // g . f
  static SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f) {
    if (&f.dst() != &g.src() && !(f.dst() == g.src()))
      throw InputError("map composition mismatch");
    SimplicialMap h(f.src_, g.dst_);
    for (int n = 0; n <= f.src_->dim_bound(); ++n)
      for (int idx = 0; idx < f.src_->count(n); ++idx)
        h.set_image({n, idx}, g.apply(f.image({n, idx})));
    return h;
  }

  // bijective on nondegenerate simplices in every dimension
  bool is_isomorphism() const {
    if (src_->dim_bound() != dst_->dim_bound()) return false;
    for (int n = 0; n <= src_->dim_bound(); ++n) {
      if (src_->count(n) != dst_->count(n)) return false;
      std::vector<bool> hit(dst_->count(n), false);
      for (int idx = 0; idx < src_->count(n); ++idx) {
        const SPair& im = img_[n][idx];
        if (im.degenerate()) return false;
        if (hit[im.s.idx]) return false;
        hit[im.s.idx] = true;
      }
    }
    return validate() == std::nullopt;
  }

 private:
  const SimplicialSet* src_ = nullptr;
  const SimplicialSet* dst_ = nullptr;
  std::shared_ptr<const SimplicialSet> src_hold_, dst_hold_;
  std::vector<std::vector<SPair>> img_;
};

// ---------------------------------------------------------------------------
// Degreewise extraction: build a SimplicialSet in canonical form from an
// arbitrary degreewise description (finite sets with operators). Used for
// pushouts, points of coalgebras, covers, quotients and colimits.
// ---------------------------------------------------------------------------

struct DegreewiseData {
  int dim_bound = 0;
  bool reduced_hint = false;
  std::vector<int> sizes;                              // sizes[n] = |S_n|
  std::function<int(int, int, int)> face;              // (n, i, elt) -> elt of S_{n-1}
  std::function<int(int, int, int)> degen;             // (n, i, elt) -> elt of S_{n+1}
  std::function<std::string(int, int)> namer;          // (n, elt) -> name for new nondegenerates
};

struct Extraction {
  SimplicialSet sset;
  std::vector<std::vector<SPair>> expr;  // canonical pair of every input element
};

inline Extraction degreewise_extract(const DegreewiseData& d) {
  Extraction out;
  out.sset = SimplicialSet(d.dim_bound, d.reduced_hint);
  out.expr.resize(d.dim_bound + 1);
  for (int n = 0; n <= d.dim_bound; ++n) out.expr[n].assign(d.sizes[n], SPair{});

  auto namer = d.namer ? d.namer : [](int n, int e) {
    return "c" + std::to_string(n) + "_" + std::to_string(e);
  };

  for (int n = 0; n <= d.dim_bound; ++n) {
    std::vector<bool> assigned(d.sizes[n], false);
    if (n > 0) {
      for (int e = 0; e < d.sizes[n - 1]; ++e)
        for (int i = 0; i <= n - 1; ++i) {
          int t = d.degen(n - 1, i, e);
          SPair p = out.sset.degeneracy(out.expr[n - 1][e], i);
          if (!assigned[t]) {
            out.expr[n][t] = p;
            assigned[t] = true;
          } else if (!(out.expr[n][t] == p)) {
            throw InputError("degreewise data is not simplicial: degeneracy images clash");
          }
        }
    }
    for (int e = 0; e < d.sizes[n]; ++e) {
      if (assigned[e]) continue;
      SimplexId s = out.sset.add_simplex(n, namer(n, e));
      for (int i = 0; i <= n && n > 0; ++i) {
        int fe = d.face(n, i, e);
        out.sset.set_face(s, i, out.expr[n - 1][fe]);
      }
      out.expr[n][e] = SPair{DegWord{}, s};
    }
  }
  out.sset.require_valid("degreewise extraction");
  return out;
}

}  // namespace eqc
