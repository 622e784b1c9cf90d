#pragma once

// Cross-checks between the DP engines and the brute-force oracle, shared by
// `mgcount verify` and the acceptance suite. Each check scans exhaustively
// and stops at the first counterexample.

#include <sstream>
#include <string>

#include "mgcount/dp_tables.hpp"
#include "mgcount/free_count.hpp"
#include "mgcount/oracle.hpp"
#include "mgcount/rooted_counts.hpp"

namespace mgcount {

struct CheckResult {
  bool ok = true;
  std::size_t checked = 0;
  std::string detail;  // first counterexample, empty when ok

  void fail(const std::string& d) {
    if (ok) {
      ok = false;
      detail = d;
    }
  }
};

inline std::string key_str(Mode m, int i, int j, int w, int u, int v) {
  std::ostringstream os;
  os << mode_name(m) << "(i=" << i << ",j=" << j << ",w=" << w << ",u=" << u << ",v=" << v << ")";
  return os.str();
}

// Every cell of all four tables against the oracle's filtered class counts.
inline CheckResult check_cells_vs_oracle(oracle::ClassTable& oracle, const DpTables& t, int n_max,
                                         int delta_max) {
  CheckResult res;
  for (int i = 1; i <= n_max; ++i)
    for (int j = 0; j <= delta_max; ++j)
      for (int w = 0; w <= i - 1; ++w)
        for (int u = 0; u <= j; ++u)
          for (int v = 0; v <= j; ++v)
            for (Mode m : kAllModes) {
              const BigCount want = oracle.bounded_count(i, j, w, u, v, m);
              const BigCount& got = t.cell(m, i, j, w, u, v);
              ++res.checked;
              if (got != want) {
                res.fail(key_str(m, i, j, w, u, v) + ": dp=" + got.to_decimal() +
                         " oracle=" + want.to_decimal());
                return res;
              }
            }
  return res;
}

// The three partition identities linking consecutive tables, plus the
// telescoped forms.
inline CheckResult check_partition_identities(const DpTables& t) {
  CheckResult res;
  for (int i = 1; i <= t.n_cap(); ++i)
    for (int j = 0; j <= t.delta_cap(); ++j)
      for (int w = 0; w <= i - 1; ++w)
        for (int u = 0; u <= j; ++u)
          for (int v = 0; v <= j; ++v) {
            ++res.checked;
            if (w >= 1) {
              BigCount sum = t.cell(Mode::LLL, i, j, w - 1, u, v);
              sum += t.cell(Mode::ELL, i, j, w, u, v);
              if (t.cell(Mode::LLL, i, j, w, u, v) != sum) {
                res.fail("w-partition fails at " + key_str(Mode::LLL, i, j, w, u, v));
                return res;
              }
            }
            if (u >= 1) {
              BigCount sum = t.cell(Mode::ELL, i, j, w, u - 1, v);
              sum += t.cell(Mode::EEL, i, j, w, u, v);
              if (t.cell(Mode::ELL, i, j, w, u, v) != sum) {
                res.fail("u-partition fails at " + key_str(Mode::ELL, i, j, w, u, v));
                return res;
              }
            }
            if (v >= 1) {
              BigCount sum = t.cell(Mode::EEL, i, j, w, u, v - 1);
              sum += t.cell(Mode::EEE, i, j, w, u, v);
              if (t.cell(Mode::EEL, i, j, w, u, v) != sum) {
                res.fail("v-partition fails at " + key_str(Mode::EEL, i, j, w, u, v));
                return res;
              }
            }
            // telescoped: the <=-count is the sum of the exact counts below it
            BigCount tele;
            for (int w2 = 0; w2 <= w; ++w2) tele += t.cell(Mode::ELL, i, j, w2, u, v);
            if (t.cell(Mode::LLL, i, j, w, u, v) != tele) {
              res.fail("w-telescope fails at " + key_str(Mode::LLL, i, j, w, u, v));
              return res;
            }
            tele.set_zero();
            for (int u2 = 0; u2 <= u; ++u2) tele += t.cell(Mode::EEL, i, j, w, u2, v);
            if (t.cell(Mode::ELL, i, j, w, u, v) != tele) {
              res.fail("u-telescope fails at " + key_str(Mode::ELL, i, j, w, u, v));
              return res;
            }
            tele.set_zero();
            for (int v2 = 0; v2 <= v; ++v2) tele += t.cell(Mode::EEE, i, j, w, u, v2);
            if (t.cell(Mode::EEL, i, j, w, u, v) != tele) {
              res.fail("v-telescope fails at " + key_str(Mode::EEL, i, j, w, u, v));
              return res;
            }
          }
  return res;
}

// Structural zeros: pinned cells vanish when u + v > j, when w = 1 with
// u >= 1, and whole rows vanish for w >= i; the <=-tables are monotone in
// each bound.
inline CheckResult check_zero_rows_and_monotonicity(const DpTables& t) {
  CheckResult res;
  for (int i = 1; i <= t.n_cap(); ++i)
    for (int j = 0; j <= t.delta_cap(); ++j)
      for (int w = 0; w <= i - 1; ++w)
        for (int u = 0; u <= j; ++u)
          for (int v = 0; v <= j; ++v) {
            ++res.checked;
            if (u + v > j && !t.cell(Mode::EEE, i, j, w, u, v).is_zero()) {
              res.fail("nonzero pinned cell with u+v>j at " + key_str(Mode::EEE, i, j, w, u, v));
              return res;
            }
            if (w == 1 && u >= 1 && !t.cell(Mode::EEE, i, j, w, u, v).is_zero()) {
              res.fail("nonzero pinned cell with w=1,u>=1 at " +
                       key_str(Mode::EEE, i, j, w, u, v));
              return res;
            }
            const BigCount& lll = t.cell(Mode::LLL, i, j, w, u, v);
            if (w >= 1 && t.cell(Mode::LLL, i, j, w - 1, u, v) > lll) {
              res.fail("w-monotonicity fails at " + key_str(Mode::LLL, i, j, w, u, v));
              return res;
            }
            if (u >= 1 && t.cell(Mode::LLL, i, j, w, u - 1, v) > lll) {
              res.fail("u-monotonicity fails at " + key_str(Mode::LLL, i, j, w, u, v));
              return res;
            }
            if (v >= 1 && t.cell(Mode::LLL, i, j, w, u, v - 1) > lll) {
              res.fail("v-monotonicity fails at " + key_str(Mode::LLL, i, j, w, u, v));
              return res;
            }
          }
  return res;
}

// Dense engine vs the sweep engine on the slice both expose.
inline CheckResult check_dense_vs_sweep(const DpTables& t, const RootedCounts& rc) {
  CheckResult res;
  const int n = std::min(t.n_cap(), rc.n_cap());
  const int d = std::min(t.delta_cap(), rc.delta_cap());
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= d; ++j)
      for (int w = 0; w <= i - 1; ++w) {
        ++res.checked;
        if (t.lll_full(i, j, w) != rc.lll_full(i, j, w)) {
          res.fail("dense/sweep divergence at (i=" + std::to_string(i) +
                   ",j=" + std::to_string(j) + ",w=" + std::to_string(w) + ")");
          return res;
        }
      }
  return res;
}

// Free counts assembled from the DP against the oracle's doubly-checked
// enumeration.
inline CheckResult check_free_vs_oracle(oracle::ClassTable& oracle, int n_max, int delta_max) {
  CheckResult res;
  for (int n = 1; n <= n_max; ++n)
    for (int delta = 0; delta <= delta_max; ++delta) {
      ++res.checked;
      const FreeCountResult got = count_free(n, delta);
      const BigCount want = oracle.free_count(n, delta);
      if (got.total != want) {
        res.fail("free count at (n=" + std::to_string(n) + ",delta=" + std::to_string(delta) +
                 "): dp=" + got.total.to_decimal() + " oracle=" + want.to_decimal());
        return res;
      }
      if (n % 2 == 1 && !got.bicentroid_part.is_zero()) {
        res.fail("odd n with nonzero bicentroid part at n=" + std::to_string(n));
        return res;
      }
      if (got.total != got.unicentroid_part + got.bicentroid_part) {
        res.fail("parts do not add up at n=" + std::to_string(n));
        return res;
      }
    }
  return res;
}

}  // namespace mgcount
