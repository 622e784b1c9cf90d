#pragma once

// Brute-force ground truth at desk scale: explicit enumeration of rooted
// tree-like multigraphs (connected, acyclic, parallel edges, no self-loops)
// one canonical representative per isomorphism class, plus free (unrooted)
// counting by two independent routes. Everything here trades speed for
// obviousness; the DP engines are validated cell by cell against it.

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mgcount/big_count.hpp"
#include "mgcount/types.hpp"

namespace mgcount::oracle {

struct RootedMultigraph;
using NodePtr = std::shared_ptr<const RootedMultigraph>;

// children pairs are (subtree, extra multiplicity of the edge down to it);
// multiplicity 0 means just the single tree edge. e_count covers extras
// inside the subtree plus those on the edges to the children, but not the
// edge up to any parent.
struct RootedMultigraph {
  std::vector<std::pair<NodePtr, int>> children;
  int v_count = 1;
  int e_count = 0;
};

inline NodePtr make_leaf() {
  static const NodePtr leaf = std::make_shared<RootedMultigraph>();
  return leaf;
}

inline NodePtr make_node(std::vector<std::pair<NodePtr, int>> children) {
  auto node = std::make_shared<RootedMultigraph>();
  node->children = std::move(children);
  for (const auto& [child, att] : node->children) {
    node->v_count += child->v_count;
    node->e_count += child->e_count + att;
  }
  return node;
}

// Flat integer encoding of a rooted multigraph, equal iff isomorphic.
// Layout per node: v, e, child count, then per child (in canonical order)
// its edge multiplicity followed by the child's own encoding.
using Code = std::vector<int>;

inline Code canonical_code(const RootedMultigraph& g) {
  struct Item {
    int v, e, att;
    Code code;
  };
  std::vector<Item> items;
  items.reserve(g.children.size());
  for (const auto& [child, att] : g.children)
    items.push_back({child->v_count, child->e_count, att, canonical_code(*child)});
  // Child order: subtree size desc, subtree extras desc, edge multiplicity
  // desc, then full code desc as the final tiebreak so the order is total.
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.v != b.v) return a.v > b.v;
    if (a.e != b.e) return a.e > b.e;
    if (a.att != b.att) return a.att > b.att;
    return a.code > b.code;
  });
  Code c{g.v_count, g.e_count, static_cast<int>(items.size())};
  for (const Item& it : items) {
    c.push_back(it.att);
    c.insert(c.end(), it.code.begin(), it.code.end());
  }
  return c;
}

inline StatsTriple stats(const RootedMultigraph& g) {
  StatsTriple s;
  for (const auto& [child, att] : g.children) s.max_v = std::max(s.max_v, child->v_count);
  for (const auto& [child, att] : g.children)
    if (child->v_count == s.max_v) s.max_m = std::max(s.max_m, child->e_count);
  if (!g.children.empty())
    for (const auto& [child, att] : g.children)
      if (child->v_count == s.max_v && child->e_count == s.max_m)
        s.max_l = std::max(s.max_l, att);
  return s;
}

// Debug dump form, documented in the README:
//   graph := "(" v " " e { " " att ":" graph } ")"
inline std::string to_text(const RootedMultigraph& g) {
  std::string out = "(" + std::to_string(g.v_count) + " " + std::to_string(g.e_count);
  for (const auto& [child, att] : g.children)
    out += " " + std::to_string(att) + ":" + to_text(*child);
  out += ")";
  return out;
}

enum class CentroidType { UnicentroidAtRoot, Bicentroid, CentroidElsewhere };

// The root is the unicentroid iff every child subtree fits in floor((n-1)/2)
// vertices; a child subtree of exactly n/2 vertices marks the root-child
// edge as the bicentroid.
inline CentroidType centroid_type(const RootedMultigraph& g) {
  const int n = g.v_count;
  int largest = 0;
  for (const auto& [child, att] : g.children) largest = std::max(largest, child->v_count);
  if (largest <= (n - 1) / 2) return CentroidType::UnicentroidAtRoot;
  if (n % 2 == 0)
    for (const auto& [child, att] : g.children)
      if (child->v_count == n / 2) return CentroidType::Bicentroid;
  return CentroidType::CentroidElsewhere;
}

namespace detail {

// Undirected view used for re-rooting: adj[u] holds (neighbor, extra mult).
struct FlatTree {
  std::vector<std::vector<std::pair<int, int>>> adj;
};

inline int flatten_into(const RootedMultigraph& g, FlatTree& f) {
  const int id = static_cast<int>(f.adj.size());
  f.adj.emplace_back();
  for (const auto& [child, att] : g.children) {
    const int cid = flatten_into(*child, f);
    f.adj[id].push_back({cid, att});
    f.adj[cid].push_back({id, att});
  }
  return id;
}

inline NodePtr build_rooted(const FlatTree& f, int u, int parent) {
  std::vector<std::pair<NodePtr, int>> children;
  for (const auto& [nb, att] : f.adj[u])
    if (nb != parent) children.push_back({build_rooted(f, nb, u), att});
  return make_node(std::move(children));
}

}  // namespace detail

// Centroid-canonical encoding of the underlying free multigraph: re-root at
// the unicentroid, or split at the bicentroid edge and pair the half codes.
// Equal iff the free multigraphs are isomorphic.
inline Code free_code(const RootedMultigraph& g) {
  const int n = g.v_count;
  detail::FlatTree f;
  detail::flatten_into(g, f);

  std::vector<int> size(n, 1), parent(n, -1), order;
  order.reserve(n);
  std::vector<int> stack{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (const auto& [nb, att] : f.adj[u])
      if (!seen[nb]) {
        seen[nb] = true;
        parent[nb] = u;
        stack.push_back(nb);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];

  std::vector<int> unicentroids;
  for (int v = 0; v < n; ++v) {
    int max_comp = (v == 0) ? 0 : n - size[v];
    for (const auto& [nb, att] : f.adj[v])
      if (parent[nb] == v) max_comp = std::max(max_comp, size[nb]);
    if (max_comp <= (n - 1) / 2) unicentroids.push_back(v);
  }
  if (!unicentroids.empty()) {
    if (unicentroids.size() != 1) throw InternalError("oracle: non-unique unicentroid");
    Code c{1};
    Code body = canonical_code(*detail::build_rooted(f, unicentroids[0], -1));
    c.insert(c.end(), body.begin(), body.end());
    return c;
  }

  std::vector<int> halves;
  for (int v = 1; v < n; ++v)
    if (2 * size[v] == n) halves.push_back(v);
  if (n % 2 != 0 || halves.size() != 1)
    throw InternalError("oracle: expected a unique bicentroid edge");
  const int v = halves[0], p = parent[v];
  int att = -1;
  for (const auto& [nb, a] : f.adj[v])
    if (nb == p) att = a;
  assert(att >= 0);
  Code cx = canonical_code(*detail::build_rooted(f, v, p));
  Code cy = canonical_code(*detail::build_rooted(f, p, v));
  if (cx < cy) std::swap(cx, cy);
  Code c{2, att, static_cast<int>(cx.size())};
  c.insert(c.end(), cx.begin(), cx.end());
  c.insert(c.end(), cy.begin(), cy.end());
  return c;
}

// Memoized bottom-up enumeration of canonical classes per (v, e). Children
// multisets are generated in non-increasing canonical order, so each class
// is produced exactly once; canonical codes double-check that.
class ClassTable {
 public:
  struct Entry {
    NodePtr graph;
    Code code;
    StatsTriple st;
  };

  explicit ClassTable(std::size_t class_budget = 10'000'000) : budget_(class_budget) {}

  const std::vector<Entry>& classes(int v, int e) {
    assert(v >= 1 && e >= 0);
    auto it = memo_.find({v, e});
    if (it != memo_.end()) return it->second;
    build(v, e);
    return memo_.at({v, e});
  }

  // Classes with the stats triple constrained by `mode` against (k, d, l).
  BigCount bounded_count(int n, int delta, int k, int d, int l, Mode mode) {
    unsigned long cnt = 0;
    for (const Entry& entry : classes(n, delta)) {
      const StatsTriple& s = entry.st;
      bool ok = false;
      switch (mode) {
        case Mode::LLL: ok = s.max_v <= k && s.max_m <= d && s.max_l <= l; break;
        case Mode::ELL: ok = s.max_v == k && s.max_m <= d && s.max_l <= l; break;
        case Mode::EEL: ok = s.max_v == k && s.max_m == d && s.max_l <= l; break;
        case Mode::EEE: ok = s.max_v == k && s.max_m == d && s.max_l == l; break;
      }
      cnt += ok ? 1 : 0;
    }
    return BigCount(cnt);
  }

  BigCount rooted_count(int n, int delta) {
    return BigCount(static_cast<unsigned long>(classes(n, delta).size()));
  }

  // Free classes counted two independent ways, asserted equal:
  //  (a) centroid classification: unicentroid-rooted classes plus unordered
  //      bicentroid half pairs;
  //  (b) re-root every rooted class at its centroid and deduplicate codes.
  BigCount free_count(int n, int delta) {
    assert(n >= 1 && delta >= 0);
    unsigned long uni = 0;
    for (const Entry& entry : classes(n, delta))
      if (centroid_type(*entry.graph) == CentroidType::UnicentroidAtRoot) ++uni;
    unsigned long bi = 0;
    if (n % 2 == 0) {
      const int h = n / 2;
      for (int l = 0; l <= delta; ++l) {
        const int rem = delta - l;
        for (int a = 0; 2 * a <= rem; ++a) {
          const int b = rem - a;
          const unsigned long ma = classes(h, a).size();
          const unsigned long mb = classes(h, b).size();
          bi += (a == b) ? ma * (ma + 1) / 2 : ma * mb;
        }
      }
    }

    std::set<Code> codes;
    for (const Entry& entry : classes(n, delta)) codes.insert(free_code(*entry.graph));

    if (uni + bi != codes.size())
      throw InternalError("oracle: free-count methods disagree at n=" + std::to_string(n) +
                          " delta=" + std::to_string(delta));
    return BigCount(uni + bi);
  }

  std::size_t total_classes() const { return total_classes_; }

 private:
  void build(int v, int e) {
    memo_[{v, e}];  // reserve the slot; filled below
    if (v == 1) {
      if (e == 0) {
        NodePtr leaf = make_leaf();
        memo_.at({v, e}).push_back({leaf, canonical_code(*leaf), stats(*leaf)});
        bump_budget();
      }
      return;
    }

    // Candidate child items, largest-first per the canonical child order.
    struct Item {
      int v, e, att;
      const Entry* cls;
    };
    std::vector<Item> items;
    for (int cv = v - 1; cv >= 1; --cv)
      for (int ce = e; ce >= 0; --ce) {
        const auto& bucket = classes(cv, ce);
        for (int att = e - ce; att >= 0; --att)
          for (const Entry& cls : bucket) items.push_back({cv, ce, att, &cls});
      }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      if (a.v != b.v) return a.v > b.v;
      if (a.e != b.e) return a.e > b.e;
      if (a.att != b.att) return a.att > b.att;
      return a.cls->code > b.cls->code;
    });
    // first_le[r] = first index whose subtree size fits in r vertices; items
    // are size-descending, so the qualifying indices form a suffix.
    std::vector<int> first_le(v, static_cast<int>(items.size()));
    {
      int idx = 0;
      for (int r = v - 1; r >= 0; --r) {
        while (idx < static_cast<int>(items.size()) && items[idx].v > r) ++idx;
        first_le[r] = idx;
      }
    }

    std::vector<std::pair<NodePtr, int>> acc;
    auto& result = memo_.at({v, e});
    auto rec = [&](auto&& self, int idx, int rem_v, int rem_e) -> void {
      if (rem_v == 0) {
        if (rem_e == 0) {
          NodePtr node = make_node(acc);
          result.push_back({node, canonical_code(*node), stats(*node)});
          bump_budget();
        }
        return;
      }
      for (int t = std::max(idx, first_le[rem_v]); t < static_cast<int>(items.size()); ++t) {
        const Item& it = items[t];
        if (it.v > rem_v || it.e + it.att > rem_e) continue;
        acc.push_back({it.cls->graph, it.att});
        self(self, t, rem_v - it.v, rem_e - it.e - it.att);
        acc.pop_back();
      }
    };
    rec(rec, 0, v - 1, e);

    // Multiset generation should never repeat a class; trust but verify.
    std::sort(result.begin(), result.end(),
              [](const Entry& a, const Entry& b) { return a.code > b.code; });
    for (std::size_t t = 1; t < result.size(); ++t)
      if (result[t - 1].code == result[t].code)
        throw InternalError("oracle: duplicate class generated at v=" + std::to_string(v) +
                            " e=" + std::to_string(e));
  }

  void bump_budget() {
    if (++total_classes_ > budget_)
      throw ResourceError("oracle enumeration budget exceeded (" + std::to_string(budget_) +
                          " classes)");
  }

  std::map<std::pair<int, int>, std::vector<Entry>> memo_;
  std::size_t budget_;
  std::size_t total_classes_ = 0;
};

}  // namespace mgcount::oracle
