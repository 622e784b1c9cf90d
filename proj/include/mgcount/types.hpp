#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mgcount {

// Bound pattern for the three subtree statistics (max_v, max_m, max_l), in
// that order: 'E' pins a statistic to the key's value, 'L' only caps it.
// Exactly these four patterns form counting families; mixed patterns such
// as (<=, =, =) are not representable.
enum class Mode : std::uint8_t { LLL, ELL, EEL, EEE };

constexpr const char* mode_name(Mode m) {
  switch (m) {
    case Mode::LLL: return "LLL";
    case Mode::ELL: return "ELL";
    case Mode::EEL: return "EEL";
    case Mode::EEE: return "EEE";
  }
  return "?";
}

constexpr Mode kAllModes[] = {Mode::LLL, Mode::ELL, Mode::EEL, Mode::EEE};

// Top-level problem size: n vertices, delta extra parallel edges.
struct QueryParams {
  int n = 0;
  int delta = 0;
};

// Per-root statistics of a rooted multigraph, taken over the root's child
// subtrees: largest subtree size, most extra edges among subtrees of that
// size, and the largest root-edge multiplicity among those. All zero for a
// single vertex.
struct StatsTriple {
  int max_v = 0;
  int max_m = 0;
  int max_l = 0;
  friend bool operator==(const StatsTriple&, const StatsTriple&) = default;
};

// Address of one DP cell: an (i, j) subinstance with bounds (w, u, v) on the
// statistics triple; mode says which bounds are equalities.
struct FamilyKey {
  int i = 1;
  int j = 0;
  int w = 0;
  int u = 0;
  int v = 0;
  Mode mode = Mode::LLL;
};

// Work or memory beyond a configured limit (table allocation, enumeration
// budget). CLI maps this to exit code 3.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated internal contract (inexact division, cross-check mismatch inside
// the oracle). Not reachable through valid inputs.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace mgcount
