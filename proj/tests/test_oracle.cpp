#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mgcount/oracle.hpp"

using namespace mgcount;
using namespace mgcount::oracle;

namespace {

NodePtr shuffled_copy(const RootedMultigraph& g, std::mt19937& rng) {
  std::vector<std::pair<NodePtr, int>> children;
  for (const auto& [child, att] : g.children) children.push_back({shuffled_copy(*child, rng), att});
  std::shuffle(children.begin(), children.end(), rng);
  return make_node(std::move(children));
}

}  // namespace

TEST_CASE("stats of hand-built graphs") {
  CHECK_EQ(stats(*make_leaf()), StatsTriple{0, 0, 0});

  // root with two leaf children at multiplicities 3 and 1
  auto two_leaves = make_node({{make_leaf(), 3}, {make_leaf(), 1}});
  CHECK_EQ(stats(*two_leaves), StatsTriple{1, 0, 3});
  CHECK_EQ(two_leaves->v_count, 3);
  CHECK_EQ(two_leaves->e_count, 4);

  // 10 vertices, 7 extras: largest subtrees have 4 vertices; among them the
  // most extras is 2; that subtree attaches with multiplicity 1.
  auto spine = [](int extras_first, int extras_second) {
    auto a = make_node({{make_leaf(), 0}});
    auto b = make_node({{a, extras_second}, {make_leaf(), extras_first}});
    return b;  // 4 vertices, extras_first + extras_second extras inside
  };
  auto big_a = spine(1, 1);  // (4 vertices, 2 extras)
  auto big_b = spine(1, 0);  // (4 vertices, 1 extra)
  auto g = make_node({{big_a, 1}, {big_b, 2}, {make_leaf(), 1}});
  CHECK_EQ(g->v_count, 10);
  CHECK_EQ(g->e_count, 7);
  CHECK_EQ(stats(*g), StatsTriple{4, 2, 1});
}

TEST_CASE("canonical code ignores child presentation order") {
  auto l = make_leaf();
  auto x = make_node({{make_node({{l, 2}}), 0}, {l, 1}});
  auto y = make_node({{l, 1}, {make_node({{l, 2}}), 0}});
  CHECK_EQ(canonical_code(*x), canonical_code(*y));

  std::mt19937 rng(20240811);
  ClassTable table;
  int shuffles = 0;
  for (int n = 1; n <= 8 && shuffles < 1200; ++n)
    for (int e = 0; e <= 2 && shuffles < 1200; ++e)
      for (const auto& entry : table.classes(n, e)) {
        auto copy = shuffled_copy(*entry.graph, rng);
        CHECK_EQ(canonical_code(*copy), entry.code);
        if (++shuffles >= 1200) break;
      }
  CHECK_GE(shuffles, 1000);
}

TEST_CASE("rooted class counts at small sizes") {
  ClassTable table;
  CHECK_EQ(table.classes(1, 0).size(), 1u);
  CHECK_EQ(table.classes(1, 2).size(), 0u);
  CHECK_EQ(table.classes(3, 0).size(), 2u);
  for (int k = 0; k <= 5; ++k) CHECK_EQ(table.classes(2, k).size(), 1u);
  // rooted trees (no extras) for n = 1..9
  const unsigned long want[] = {1, 1, 2, 4, 9, 20, 48, 115, 286};
  for (int n = 1; n <= 9; ++n) CHECK_EQ(table.classes(n, 0).size(), want[n - 1]);
  // m(3, 2): path rooted at an end gives 3 splits, star at the center 2
  CHECK_EQ(table.classes(3, 2).size(), 5u);
}

TEST_CASE("bounded counts cross-foot with totals") {
  ClassTable table;
  for (int n = 1; n <= 6; ++n)
    for (int delta = 0; delta <= 3; ++delta) {
      BigCount sum;
      for (int w = 0; w <= n - 1; ++w)
        for (int u = 0; u <= delta; ++u)
          for (int v = 0; v <= delta; ++v)
            sum += table.bounded_count(n, delta, w, u, v, Mode::EEE);
      CHECK_EQ(sum, table.rooted_count(n, delta));
    }
  CHECK_EQ(table.bounded_count(1, 0, 0, 0, 0, Mode::EEE), BigCount(1ul));
  CHECK_EQ(table.bounded_count(4, 0, 3, 0, 0, Mode::LLL), BigCount(4ul));
  // stars rooted at the center with one extra edge to a child
  CHECK_EQ(table.bounded_count(3, 1, 1, 0, 1, Mode::EEE), BigCount(1ul));
}

TEST_CASE("stats stay inside the instance") {
  ClassTable table;
  for (int n = 1; n <= 7; ++n)
    for (int delta = 0; delta <= 3; ++delta)
      for (const auto& entry : table.classes(n, delta)) {
        CHECK_LT(entry.st.max_v, entry.graph->v_count);
        CHECK_LE(entry.st.max_m + entry.st.max_l, entry.graph->e_count);
        if (entry.graph->v_count >= 2) CHECK_GE(entry.st.max_v, 1);
      }
}

TEST_CASE("centroid classification") {
  CHECK_EQ(centroid_type(*make_leaf()), CentroidType::UnicentroidAtRoot);
  auto two = make_node({{make_leaf(), 0}});
  CHECK_EQ(centroid_type(*two), CentroidType::Bicentroid);
  // root with a single chain of 3 below it: centroid is inside the chain
  auto chain3 = make_node({{make_node({{make_leaf(), 0}}), 0}});
  auto rooted_off_center = make_node({{chain3, 0}});
  CHECK_EQ(rooted_off_center->v_count, 4);
  CHECK_EQ(centroid_type(*rooted_off_center), CentroidType::CentroidElsewhere);
}

TEST_CASE("free counts by double enumeration") {
  ClassTable table;
  CHECK_EQ(table.free_count(1, 0), BigCount(1ul));
  CHECK_EQ(table.free_count(3, 2), BigCount(2ul));
  CHECK_EQ(table.free_count(7, 0), BigCount(11ul));
  CHECK_EQ(table.free_count(6, 1), BigCount(16ul));
  const unsigned long frees[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (int n = 1; n <= 10; ++n) CHECK_EQ(table.free_count(n, 0), BigCount(frees[n - 1]));
}

TEST_CASE("enumeration budget is enforced") {
  ClassTable tiny(50);
  CHECK_THROWS_AS(tiny.classes(7, 2), ResourceError);
}

TEST_CASE("text dump form") {
  auto g = make_node({{make_node({{make_leaf(), 2}}), 0}, {make_leaf(), 1}});
  CHECK_EQ(to_text(*g), "(4 3 0:(2 2 2:(1 0)) 1:(1 0))");
  CHECK_EQ(to_text(*make_leaf()), "(1 0)");
}
