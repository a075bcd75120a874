#pragma once

// Smith normal form over the integers (dense, arbitrary precision).

#include <gmpxx.h>

#include <vector>

#include "equicobar/util.hpp"

namespace eqc {

struct SmithResult {
  int rank = 0;                     // rank over Q
  std::vector<mpz_class> divisors;  // nontrivial elementary divisors d1 | d2 | ...
};

// Classical elimination: move a minimal nonzero entry to the pivot, clear
// its row and column, fix divisibility, recurse on the trailing block.
inline SmithResult smith_normal_form(std::vector<std::vector<mpz_class>> a) {
  SmithResult out;
  int nr = int(a.size());
  int nc = nr ? int(a[0].size()) : 0;
  int t = 0;
  while (t < nr && t < nc) {
    // find minimal |entry| != 0 in the trailing block
    int pr = -1, pc = -1;
    for (int i = t; i < nr; ++i)
      for (int j = t; j < nc; ++j) {
        if (a[i][j] == 0) continue;
        if (pr < 0 || cmp(abs(a[i][j]), abs(a[pr][pc])) < 0) {
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    std::swap(a[t], a[pr]);
    for (int i = t; i < nr; ++i) std::swap(a[i][t], a[i][pc]);

    bool clean = true;
    for (int i = t + 1; i < nr; ++i) {
      if (a[i][t] == 0) continue;
      mpz_class q = a[i][t] / a[t][t];
      for (int j = t; j < nc; ++j) a[i][j] -= q * a[t][j];
      if (a[i][t] != 0) clean = false;
    }
    for (int j = t + 1; j < nc; ++j) {
      if (a[t][j] == 0) continue;
      mpz_class q = a[t][j] / a[t][t];
      for (int i = t; i < nr; ++i) a[i][j] -= q * a[i][t];
      if (a[t][j] != 0) clean = false;
    }
    if (!clean) continue;  // smaller remainders appeared; repick pivot

    // divisibility: pivot must divide every entry of the trailing block
    bool fixed = true;
    for (int i = t + 1; i < nr && fixed; ++i)
      for (int j = t + 1; j < nc && fixed; ++j)
        if (a[i][j] % a[t][t] != 0) {
          for (int jj = t; jj < nc; ++jj) a[t][jj] += a[i][jj];
          fixed = false;
        }
    if (!fixed) continue;
    ++t;
  }
  out.rank = t;
  for (int i = 0; i < t; ++i) {
    mpz_class d = abs(a[i][i]);
    if (d != 1) out.divisors.push_back(d);
  }
  return out;
}

}  // namespace eqc
