#pragma once

#include <stdexcept>

#include "mgcount/big_count.hpp"
#include "mgcount/rooted_counts.hpp"

namespace mgcount {

struct FreeCountResult {
  int n = 0;
  int delta = 0;
  BigCount unicentroid_part;
  BigCount bicentroid_part;  // zero for odd n
  BigCount total;
};

// Rooted classes whose root is the unicentroid: every child subtree fits in
// floor((n-1)/2) vertices. Src is any engine exposing lll_full (DpTables or
// RootedCounts).
template <class Src>
BigCount count_unicentroid(int n, int delta, const Src& src) {
  if (n < 1 || delta < 0) throw std::invalid_argument("count_unicentroid: bad instance");
  if (src.n_cap() < n || src.delta_cap() < delta)
    throw std::invalid_argument("count_unicentroid: tables too small");
  return src.lll_full(n, delta, (n - 1) / 2);
}

// Free classes whose underlying tree splits at an edge into two halves of
// n/2 vertices each. Sums over the extra multiplicity l on that edge and
// the split of the remaining extras across the halves; {X, Y} is an
// unordered pair, so when both halves draw from the same (n/2, a) family
// the pair count is C(m + 1, 2) rather than m^2.
template <class Src>
BigCount count_bicentroid(int n, int delta, const Src& src) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("count_bicentroid: n must be even");
  if (delta < 0 || src.n_cap() < n / 2 || src.delta_cap() < delta)
    throw std::invalid_argument("count_bicentroid: tables too small");
  const int h = n / 2;
  BigCount total;
  for (int l = 0; l <= delta; ++l) {
    const int rem = delta - l;
    for (int a = 0; 2 * a <= rem; ++a) {
      const int b = rem - a;
      const BigCount& ma = src.lll_full(h, a, h - 1);
      if (a == b)
        total += multiset_coefficient(ma, 2);
      else
        total.add_mul(ma, src.lll_full(h, b, h - 1));
    }
  }
  return total;
}

template <class Src>
FreeCountResult count_free_with(int n, int delta, const Src& src) {
  FreeCountResult r;
  r.n = n;
  r.delta = delta;
  if (n <= 0) return r;
  r.unicentroid_part = count_unicentroid(n, delta, src);
  if (n % 2 == 0) r.bicentroid_part = count_bicentroid(n, delta, src);
  r.total = r.unicentroid_part + r.bicentroid_part;
  return r;
}

// Number of free (unrooted) tree-like multigraphs with n vertices and delta
// extra parallel edges; the library's top-level answer.
inline FreeCountResult count_free(int n, int delta) {
  if (n < 0 || delta < 0) throw std::invalid_argument("count_free: negative argument");
  FreeCountResult r;
  r.n = n;
  r.delta = delta;
  if (n == 0) return r;
  RootedCounts src(n, delta);
  return count_free_with(n, delta, src);
}

}  // namespace mgcount
