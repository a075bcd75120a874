#pragma once

// Support routines for the equivalence oracles: coset words and the H_0
// monoid comparison.

#include "equicobar/fundamental_group.hpp"

namespace eqc {
namespace oracledetail {

// BFS words representing each coset of a complete table
inline std::vector<Word> coset_words(const CosetTable& t) {
  int n = int(t.order);
  std::vector<Word> word(n);
  std::vector<bool> seen(n, false);
  std::vector<int> queue{0};
  seen[0] = true;
  size_t qi = 0;
  while (qi < queue.size()) {
    int c = queue[qi++];
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
  return word;
}

struct H0Comparison {
  bool yes = false;
  bool no = false;
  std::string note;
};

// Compare H_0 of two cobar constructions through the induced monoid map.
// Sound: Yes only on a certified monoid bijection, No only on an explicit
// witness (collision, or finite vs certified-infinite mismatch).
inline H0Comparison h0_map_comparison(const MonoidPresentation& px, const MonoidPresentation& py,
                                      const std::vector<Word>& gen_img, size_t nf_bound) {
  H0Comparison out;
  auto apply = [&](const Word& w) {
    Word img;
    for (int g : w) {
      img.insert(img.end(), gen_img[g].begin(), gen_img[g].end());
    }
    return img;
  };
  auto rx = kb_complete(px);
  auto ry = kb_complete(py);
  if (!rx || !ry) {
    out.note = "rewriting did not complete within the caps";
    return out;
  }
  // well-definedness witness: relations map to equalities
  for (auto& [l, r] : px.rels)
    if (ry->normalize(apply(l)) != ry->normalize(apply(r))) {
      out.note = "induced map failed to preserve a relation";
      return out;  // should not happen for simplicial maps
    }
  auto nx = rx->normal_forms(nf_bound);
  auto ny = ry->normal_forms(nf_bound);
  if (nx && ny) {
    // finite case: exact bijection test
    if (nx->size() != ny->size()) {
      out.no = true;
      out.note = "H_0 dimensions differ: " + std::to_string(nx->size()) + " vs " +
                 std::to_string(ny->size());
      return out;
    }
    std::set<Word> images;
    for (auto& w : *nx) {
      Word img = ry->normalize(apply(w));
      if (!images.insert(img).second) {
        out.no = true;
        out.note = "induced map collides on monoid elements";
        return out;
      }
    }
    out.yes = true;
    out.note = "monoid bijection on " + std::to_string(nx->size()) + " elements";
    return out;
  }
  if (nx && !ny) {
    out.no = true;
    out.note = "H_0 finite dimensional on the source, infinite on the target";
    return out;
  }
  if (!nx && ny) {
    out.no = true;
    out.note = "H_0 infinite dimensional on the source, finite on the target";
    return out;
  }
  // both infinite: look for an injectivity collision among bounded normal forms
  auto bounded = rx->normal_forms(64);
  std::vector<Word> sample;
  if (!bounded) {
    // collect normal forms by increasing length until the budget
    std::vector<Word> frontier{Word{}};
    sample.push_back(Word{});
    for (int round = 0; round < 3 && sample.size() < 64; ++round) {
      std::vector<Word> next;
      for (auto& w : frontier)
        for (int g = 0; g < int(px.gens.size()); ++g) {
          Word c = w;
          c.push_back(g);
          if (rx->is_irreducible(c)) {
            sample.push_back(c);
            next.push_back(c);
          }
        }
      frontier = std::move(next);
    }
  } else {
    sample = *bounded;
  }
  std::map<Word, Word> images;
  for (auto& w : sample) {
    Word img = ry->normalize(apply(w));
    auto it = images.find(img);
    if (it != images.end() && it->second != w) {
      out.no = true;
      out.note = "induced map collides on monoid elements (" + px.word_str(w) + " and " +
                 px.word_str(it->second) + ")";
      return out;
    }
    images.emplace(std::move(img), w);
  }
  out.note = "both H_0 monoids are infinite within the caps; no certificate either way";
  return out;
}

}  // namespace oracledetail
}  // namespace eqc
