#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "mgcount/big_count.hpp"
#include "mgcount/dp_core.hpp"
#include "mgcount/types.hpp"

namespace mgcount {

// Dense tables for the four bounded families, one cell per
// (i, j, w, u, v) with 1 <= i <= n_cap, 0 <= j <= delta_cap,
// 0 <= w <= n_cap-1 and 0 <= u, v <= delta_cap. Cells outside the
// meaningful region (w >= i, u > j, v > j) stay zero and are never read by
// queries. Memory grows as n^2 * (delta+1)^3, so this engine is for desk
// scale -- verification against the oracle and ad-hoc bounded queries. The
// sweep engine in rooted_counts.hpp covers large instances.
class DpTables {
 public:
  DpTables(int n_cap, int delta_cap) : n_(n_cap), d_(delta_cap) {
    if (n_cap < 1 || delta_cap < 0) throw std::invalid_argument("DpTables: bad caps");
    const std::size_t bytes = bytes_estimate(n_cap, delta_cap);
    if (bytes > kMaxBytes)
      throw ResourceError("DpTables: " + std::to_string(n_cap) + " x " +
                          std::to_string(delta_cap + 1) + " x " + std::to_string(n_cap) + " x " +
                          std::to_string(delta_cap + 1) + "^2 cells x 4 tables (~" +
                          std::to_string(bytes >> 20) + " MiB) exceeds the dense-table limit");
    const std::size_t cells = cell_count(n_cap, delta_cap);
    for (auto* t : {&lll_, &ell_, &eel_, &eee_}) t->assign(cells, BigCount());
    seed();
  }

  int n_cap() const { return n_; }
  int delta_cap() const { return d_; }
  bool filled() const { return filled_; }

  // Fills every cell for i >= 3 in ascending (i, j, w, u, v) order; i = 1, 2
  // are seeded at construction.
  void fill() {
    detail::CellScratch scratch;
    for (int i = 3; i <= n_; ++i)
      for (int j = 0; j <= d_; ++j)
        for (int w = 1; w <= std::min(i - 1, n_ - 1); ++w)
          for (int u = 0; u <= j; ++u) {
            const Src src{*this, w, u};
            for (int v = 0; v <= j; ++v) {
              BigCount& eee = at(eee_, i, j, w, u, v);
              if (u + v <= j)
                detail::pinned_cell(eee, src, i, j, w, u, v, scratch);
              else
                eee.set_zero();
              // partition rollups; a bound of -1 reads as zero
              BigCount& eel = at(eel_, i, j, w, u, v);
              eel = eee;
              if (v >= 1) eel += at(eel_, i, j, w, u, v - 1);
              BigCount& ell = at(ell_, i, j, w, u, v);
              ell = eel;
              if (u >= 1) ell += at(ell_, i, j, w, u - 1, v);
              BigCount& lll = at(lll_, i, j, w, u, v);
              lll = ell;
              lll += at(lll_, i, j, w - 1, u, v);
            }
          }
    filled_ = true;
  }

  const BigCount& cell(Mode mode, int i, int j, int w, int u, int v) const {
    if (i < 1 || i > n_ || j < 0 || j > d_ || w < 0 || w > i - 1 || u < 0 || u > j || v < 0 ||
        v > j)
      throw std::out_of_range("DpTables::cell: key out of range");
    return table(mode)[idx(i, j, w, u, v)];
  }
  const BigCount& cell(const FamilyKey& key) const {
    return cell(key.mode, key.i, key.j, key.w, key.u, key.v);
  }

  // m(n, delta, k<=, d<=, l<=) with the saturation rules applied: k caps at
  // n-1, d and l at delta. n = 0 yields 0 without touching the tables.
  BigCount count_bounded(int n, int delta, int k, int d, int l) const {
    if (n < 0 || delta < 0 || k < 0 || d < 0 || l < 0)
      throw std::invalid_argument("count_bounded: negative argument");
    if (n == 0) return BigCount();
    if (n > n_ || delta > d_) throw std::invalid_argument("count_bounded: exceeds table caps");
    k = std::min(k, n - 1);
    d = std::min(d, delta);
    l = std::min(l, delta);
    if (n >= 2 && k == 0) return BigCount();  // every child subtree would be empty
    if (!filled_ && n >= 3) throw InternalError("count_bounded: tables not filled");
    return cell(Mode::LLL, n, delta, k, d, l);
  }

  BigCount rooted_total(int n, int delta) const {
    return count_bounded(n, delta, n - 1, delta, delta);
  }

  // m(i, j, min(w, i-1)<=, j<=, j<=); the slice the free-count assembly uses.
  const BigCount& lll_full(int i, int j, int w) const {
    return cell(Mode::LLL, i, j, std::min(w, i - 1), j, j);
  }

  // Test hook: overwrite one cell to check that downstream verification
  // really trips on a wrong table.
  void set_cell_for_fault_injection(const FamilyKey& key, BigCount value) {
    cell(key);  // validate
    const_cast<BigCount&>(table(key.mode)[idx(key.i, key.j, key.w, key.u, key.v)]) =
        std::move(value);
  }

  static std::size_t cell_count(int n_cap, int delta_cap) {
    const auto n = static_cast<std::size_t>(n_cap);
    const auto d1 = static_cast<std::size_t>(delta_cap) + 1;
    return n * d1 * n * d1 * d1;
  }
  static std::size_t bytes_estimate(int n_cap, int delta_cap) {
    return cell_count(n_cap, delta_cap) * 4 * sizeof(BigCount);
  }

 private:
  static constexpr std::size_t kMaxBytes = std::size_t{2} << 30;  // 2 GiB of cell structs

  // Seeds per the base cases: the single vertex at (1, 0) counts once, and
  // for i = 2 the unique two-vertex graph with j extras has statistics
  // (1, 0, j), so only cells whose root-edge bound equals j hold 1.
  void seed() {
    for (auto* t : {&lll_, &ell_, &eel_, &eee_}) (*t)[idx(1, 0, 0, 0, 0)].set_one();
    if (n_ < 2) return;
    for (int j = 0; j <= d_; ++j) {
      at(eee_, 2, j, 1, 0, j).set_one();
      at(eel_, 2, j, 1, 0, j).set_one();
      for (int u = 0; u <= j; ++u) {
        at(ell_, 2, j, 1, u, j).set_one();
        at(lll_, 2, j, 1, u, j).set_one();
      }
    }
  }

  std::size_t idx(int i, int j, int w, int u, int v) const {
    assert(i >= 1 && i <= n_ && j >= 0 && j <= d_);
    assert(w >= 0 && w <= n_ - 1 && u >= 0 && u <= d_ && v >= 0 && v <= d_);
    const auto d1 = static_cast<std::size_t>(d_) + 1;
    return (((static_cast<std::size_t>(i - 1) * d1 + j) * n_ + w) * d1 + u) * d1 + v;
  }

  const std::vector<BigCount>& table(Mode m) const {
    switch (m) {
      case Mode::LLL: return lll_;
      case Mode::ELL: return ell_;
      case Mode::EEL: return eel_;
      case Mode::EEE: return eee_;
    }
    throw InternalError("bad mode");
  }

  BigCount& at(std::vector<BigCount>& t, int i, int j, int w, int u, int v) {
    return t[idx(i, j, w, u, v)];
  }
  const BigCount& at(const std::vector<BigCount>& t, int i, int j, int w, int u, int v) const {
    return t[idx(i, j, w, u, v)];
  }

  // Read adapter for the shared recursion; (w, u) is the cell being filled.
  struct Src {
    const DpTables& t;
    int w, u;
    const BigCount& base(int w_, int u_) const { return t.at(t.lll_, w_, u_, w_ - 1, u_, u_); }
    const BigCount& lll(int i2, int j2, int wb) const { return t.at(t.lll_, i2, j2, wb, j2, j2); }
    const BigCount& ell(int i2, int j2) const {
      return t.at(t.ell_, i2, j2, w, std::min(j2, u - 1), j2);
    }
    const BigCount& eel(int i2, int j2, int vb) const {
      return t.at(t.eel_, i2, j2, w, u, std::min(j2, vb));
    }
  };

  int n_, d_;
  bool filled_ = false;
  std::vector<BigCount> lll_, ell_, eel_, eee_;
};

}  // namespace mgcount
