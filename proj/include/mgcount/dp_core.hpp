#pragma once

#include <algorithm>
#include <cassert>

#include "mgcount/big_count.hpp"

namespace mgcount::detail {

struct CellScratch {
  BigCount h, r, tmp;
};

// Count with all three statistics pinned at (w, u, v) for an (i, j)
// subinstance; requires i >= 2, 1 <= w <= i - 1, u + v <= j.
//
// Such a graph has p >= 1 maximal children realizing the pinned triple --
// each a w-vertex subtree with u internal extras attached through a root
// edge of multiplicity v -- plus a residual rooted graph whose remaining
// children all sit strictly below (w, u, v) in the (size, extras,
// attachment) order. For each p the children form a multiset drawn from all
// w-vertex / u-extra shapes, counted by the running coefficient h, and the
// residual count is read from smaller subinstances at i - p*w vertices and
// j - p*(u+v) extras. The residual splits by its own top statistic:
// strictly smaller attachment (same w, u), strictly fewer subtree extras
// (same w), or strictly smaller subtrees.
//
// Src supplies the reads, which land only on already-final values:
//   base(w, u)        m(w, u, w-1<=, u<=, u<=), the shape pool
//   lll(i2, j2, wb)   m(i2, j2, wb<=, j2<=, j2<=)
//   ell(i2, j2)       m(i2, j2, w=, min(j2, u-1)<=, j2<=)
//   eel(i2, j2, vb)   m(i2, j2, w=, u=, min(j2, vb)<=)
template <class Src>
void pinned_cell(BigCount& out, const Src& src, int i, int j, int w, int u, int v,
                 CellScratch& s) {
  assert(i >= 2 && w >= 1 && w <= i - 1);
  assert(u >= 0 && v >= 0 && u + v <= j);
  out.set_zero();
  const int uv = u + v;
  int z = (i - 1) / w;
  if (uv >= 1) z = std::min(z, j / uv);
  if (z < 1) return;
  const BigCount& base = src.base(w, u);
  if (base.is_zero()) return;  // empty shape pool, every p >= 1 term vanishes
  s.h.set_one();
  for (int p = 1; p <= z; ++p) {
    multiset_coefficient_step_inplace(s.h, base, static_cast<unsigned long>(p), s.tmp);
    const int i2 = i - p * w;
    const int j2 = j - p * uv;
    assert(i2 >= 1 && j2 >= 0);  // guaranteed by the range of p
    s.r = src.lll(i2, j2, std::min(i2 - 1, w - 1));
    if (u >= 1) s.r += src.ell(i2, j2);
    if (v >= 1) s.r += src.eel(i2, j2, v - 1);
    out.add_mul(s.h, s.r);
  }
}

}  // namespace mgcount::detail
