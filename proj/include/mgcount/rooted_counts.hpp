#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgcount/big_count.hpp"
#include "mgcount/dp_core.hpp"
#include "mgcount/types.hpp"

namespace mgcount {

// Production-scale fill for rooted counts. Runs the same recursion as
// DpTables but sweeps (w, u) slabs: only the slice with the current exact
// (w, u) is alive at a time, everything else is folded into running sums.
// What survives is m(i, j, w<=, j<=, j<=) for every (i, j, w) -- the slice
// all free-count assembly and total queries read -- in O(n^2 * delta)
// cells instead of the dense engine's O(n^2 * delta^3).
class RootedCounts {
 public:
  RootedCounts(int n_cap, int delta_cap) : n_(n_cap), d_(delta_cap) {
    if (n_cap < 1 || delta_cap < 0) throw std::invalid_argument("RootedCounts: bad caps");
    allocate();
    run_fill(nullptr, nullptr);
  }

  int n_cap() const { return n_; }
  int delta_cap() const { return d_; }

  // m(i, j, min(w, i-1)<=, j<=, j<=).
  const BigCount& lll_full(int i, int j, int w) const {
    if (i < 1 || i > n_ || j < 0 || j > d_ || w < 0)
      throw std::out_of_range("RootedCounts::lll_full: key out of range");
    return slice_[idx3(i, j, std::min(w, i - 1))];
  }

  const BigCount& rooted_total(int i, int j) const { return lll_full(i, j, i - 1); }

  // One-shot m(n, delta, k<=, d<=, l<=) accumulated during a dedicated
  // sweep; nothing is retained afterwards. Same contract as
  // DpTables::count_bounded but without the dense-table memory.
  static BigCount count_bounded(int n, int delta, int k, int d, int l) {
    if (n < 0 || delta < 0 || k < 0 || d < 0 || l < 0)
      throw std::invalid_argument("count_bounded: negative argument");
    if (n == 0) return BigCount();
    k = std::min(k, n - 1);
    d = std::min(d, delta);
    l = std::min(l, delta);
    if (n == 1) return BigCount(delta == 0 ? 1ul : 0ul);
    if (k == 0) return BigCount();
    RootedCounts rc(n, delta, Query{k, d, l});
    return rc.query_out_;
  }

 private:
  struct Query {
    int k, d, l;
  };

  RootedCounts(int n_cap, int delta_cap, Query q) : n_(n_cap), d_(delta_cap) {
    allocate();
    run_fill(&q, &query_out_);
  }

  void allocate() {
    // slice: ragged (i, j, w) with w <= i-1
    off3_.assign(n_ + 1, 0);
    for (int i = 1; i <= n_; ++i)
      off3_[i] = off3_[i - 1] + static_cast<std::size_t>(i) * (d_ + 1);
    slice_.assign(off3_[n_], BigCount());
    // slab: ragged (i, j, v) with v <= j, rows i >= 2
    slab_off_.assign(static_cast<std::size_t>(std::max(0, n_ - 1)) * (d_ + 1) + 1, 0);
    std::size_t acc = 0;
    for (int i = 2; i <= n_; ++i)
      for (int j = 0; j <= d_; ++j) {
        slab_off_[slab_row(i, j)] = acc;
        acc += static_cast<std::size_t>(j) + 1;
      }
    slab_off_.back() = acc;
    slab_.assign(acc, BigCount());
    ell_run_.assign(static_cast<std::size_t>(n_ + 1) * (d_ + 1), BigCount());
  }

  std::size_t idx3(int i, int j, int w) const {
    assert(i >= 1 && i <= n_ && j >= 0 && j <= d_ && w >= 0 && w <= i - 1);
    return off3_[i - 1] + static_cast<std::size_t>(w) * (d_ + 1) + j;
  }
  std::size_t slab_row(int i, int j) const {
    assert(i >= 2 && i <= n_ && j >= 0 && j <= d_);
    return static_cast<std::size_t>(i - 2) * (d_ + 1) + j;
  }
  BigCount& slab_at(int i, int j, int v) {
    assert(v >= 0 && v <= j);
    return slab_[slab_off_[slab_row(i, j)] + v];
  }
  const BigCount& slab_at(int i, int j, int v) const {
    assert(v >= 0 && v <= j);
    return slab_[slab_off_[slab_row(i, j)] + v];
  }
  BigCount& ell_run_at(int i, int j) {
    return ell_run_[static_cast<std::size_t>(i) * (d_ + 1) + j];
  }

  // Read adapter for the shared recursion during the (w, u) slab. Slab rows
  // with i <= w or j < u stay untouched by this slab and read as zero: an
  // exact-(w, u) family needs at least w+1 vertices and u extras.
  struct Src {
    const RootedCounts& rc;
    int w, u;
    const BigCount& base(int w_, int u_) const { return rc.slice_[rc.idx3(w_, u_, w_ - 1)]; }
    const BigCount& lll(int i2, int j2, int wb) const { return rc.slice_[rc.idx3(i2, j2, wb)]; }
    const BigCount& ell(int i2, int j2) const {
      if (i2 <= w) return kZeroCount;
      return rc.ell_run_[static_cast<std::size_t>(i2) * (rc.d_ + 1) + j2];
    }
    const BigCount& eel(int i2, int j2, int vb) const {
      if (i2 <= w || j2 < u) return kZeroCount;
      return rc.slab_at(i2, j2, std::min(vb, j2 - u));  // saturated above j2 - u
    }
  };

  void run_fill(const Query* q, BigCount* q_out) {
    // i = 1 row: the single vertex, one class when j = 0.
    slice_[idx3(1, 0, 0)].set_one();
    detail::CellScratch scratch;
    for (int w = 1; w <= n_ - 1; ++w) {
      for (int i = 2; i <= n_; ++i)
        for (int j = 0; j <= d_; ++j) ell_run_at(i, j).set_zero();
      for (int u = 0; u <= d_; ++u) {
        const Src src{*this, w, u};
        for (int i = w + 1; i <= n_; ++i)
          for (int j = u; j <= d_; ++j) {
            BigCount* row = &slab_[slab_off_[slab_row(i, j)]];
            for (int v = 0; v <= j - u; ++v) {
              detail::pinned_cell(row[v], src, i, j, w, u, v, scratch);
              if (v >= 1) row[v] += row[v - 1];  // roll the attachment bound up
            }
          }
        // fold the completed (w, u) slab into the running exact-w sums at
        // the full attachment bound
        for (int i = w + 1; i <= n_; ++i)
          for (int j = u; j <= d_; ++j) ell_run_at(i, j) += slab_at(i, j, j - u);
        if (q != nullptr && w <= q->k && u <= q->d && n_ >= w + 1 && u <= d_)
          *q_out += slab_at(n_, d_, std::min(q->l, d_ - u));
      }
      // close the w level: m(i, j, w<=, j<=, j<=) = level below + exact w
      for (int i = w + 1; i <= n_; ++i)
        for (int j = 0; j <= d_; ++j) {
          BigCount& dst = slice_[idx3(i, j, w)];
          dst = slice_[idx3(i, j, w - 1)];
          dst += ell_run_at(i, j);
        }
    }
  }

  int n_, d_;
  std::vector<std::size_t> off3_, slab_off_;
  std::vector<BigCount> slice_, slab_, ell_run_;
  BigCount query_out_;
};

}  // namespace mgcount
