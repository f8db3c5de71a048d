#include <doctest.h>

#include <deque>

#include "schrom/graph_families.hpp"
#include "schrom/signed_graph.hpp"
#include "test_support.hpp"

using namespace schrom;
using namespace schrom::testing;

namespace {

// Balance oracle: BFS over the signed double cover. A component is unbalanced
// iff some vertex (v, +) reaches (v, -).
std::vector<bool> double_cover_unbalanced(const SignedGraph& g, EdgeSubset s) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> unbalanced(n, false);
  for (VertexId start = 0; start < n; ++start) {
    std::vector<std::array<bool, 2>> seen(n, {false, false});
    std::deque<std::pair<VertexId, int>> queue{{start, 0}};
    seen[start][0] = true;
    while (!queue.empty()) {
      const auto [v, parity] = queue.front();
      queue.pop_front();
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (!s.contains(e)) continue;
        const SignedEdge& edge = g.edge(e);
        const int flip = edge.sign == Sign::kNegative ? 1 : 0;
        for (const auto& [from, to] : {std::pair{edge.tail, edge.head}, std::pair{edge.head, edge.tail}}) {
          if (from != v) continue;
          const int p = parity ^ flip;
          if (!seen[to][p]) {
            seen[to][p] = true;
            queue.emplace_back(to, p);
          }
        }
      }
    }
    unbalanced[start] = seen[start][1];
  }
  return unbalanced;
}

// Shortest negative closed walk, which has the length of a shortest negative circuit.
std::optional<std::size_t> double_cover_girth(const SignedGraph& g) {
  std::optional<std::size_t> best;
  const std::size_t n = g.vertex_count();
  for (VertexId start = 0; start < n; ++start) {
    std::vector<std::array<int, 2>> dist(n, {-1, -1});
    std::deque<std::pair<VertexId, int>> queue{{start, 0}};
    dist[start][0] = 0;
    while (!queue.empty()) {
      const auto [v, parity] = queue.front();
      queue.pop_front();
      for (const SignedEdge& edge : g.edges()) {
        const int flip = edge.sign == Sign::kNegative ? 1 : 0;
        for (const auto& [from, to] : {std::pair{edge.tail, edge.head}, std::pair{edge.head, edge.tail}}) {
          if (from != v) continue;
          const int p = parity ^ flip;
          if (dist[to][p] < 0) {
            dist[to][p] = dist[v][parity] + 1;
            queue.emplace_back(to, p);
          }
        }
      }
    }
    if (dist[start][1] > 0) {
      const auto d = static_cast<std::size_t>(dist[start][1]);
      if (!best || d < *best) best = d;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("components of the two-squares graph") {
  const SignedGraph g = families::two_squares();
  const ComponentStructure cs = components(g, EdgeSubset::all(g.edge_count()));
  CHECK(cs.component_count == 2);
  CHECK(cs.balanced_count == 1);
}

TEST_CASE("empty subset gives balanced singletons") {
  const SignedGraph g = families::sp3();
  const ComponentStructure cs = components(g, EdgeSubset());
  CHECK(cs.component_count == 3);
  CHECK(cs.balanced_count == 3);
  for (std::size_t k = 0; k < 3; ++k) CHECK(cs.components[k].members == std::vector<VertexId>{VertexId(k)});
}

TEST_CASE("one triangle edge joins its endpoints") {
  const ComponentStructure cs = components(families::sp3(), EdgeSubset(0b001));
  REQUIRE(cs.component_count == 2);
  CHECK(cs.components[0].members == std::vector<VertexId>{0, 2});
  CHECK(cs.components[1].members == std::vector<VertexId>{1});
  CHECK(cs.balanced_count == 2);
}

TEST_CASE("a subset bit beyond the edge list is rejected") {
  CHECK_THROWS_AS(components(families::sp2(), EdgeSubset(0b100)), InputError);
}

TEST_CASE("vertex switching") {
  SUBCASE("negative loop keeps its sign") {
    const SignedGraph g = families::sn(1, 1);
    CHECK(vertex_switch(g, 0) == g);
  }
  SUBCASE("digon signs swap") {
    const SignedGraph s = vertex_switch(families::sp2(), 1);
    CHECK(s.edge(0).sign == kMinus);
    CHECK(s.edge(1).sign == kPlus);
  }
  SUBCASE("out of range") { CHECK_THROWS_AS(vertex_switch(families::sp2(), 2), InputError); }
}

TEST_CASE("deletion") {
  const SignedGraph path = delete_edge(families::sp3(), 2);
  CHECK(path == SignedGraph(3, {{0, 2, kPlus}, {0, 1, kPlus}}));
  CHECK(delete_edge(SignedGraph(2, {{0, 1, kPlus}}), 0) == SignedGraph(2));
  CHECK(delete_edge(families::sp2(), 1) == SignedGraph(2, {{0, 1, kPlus}}));
  CHECK_THROWS_AS(delete_edge(families::sp2(), 2), InputError);
}

TEST_CASE("contraction") {
  SUBCASE("triangle edge gives a mixed digon") {
    const SignedGraph d = contract_edge(families::sp3(), 0);
    CHECK(d == SignedGraph(2, {{0, 1, kPlus}, {0, 1, kMinus}}));
  }
  SUBCASE("single edge") { CHECK(contract_edge(SignedGraph(2, {{0, 1, kPlus}}), 0) == SignedGraph(1)); }
  SUBCASE("positive triangle gives positive parallel edges") {
    const SignedGraph d = contract_edge(families::complete(3), 2);
    REQUIRE(d.edge_count() == 2);
    CHECK(d.vertex_count() == 2);
    CHECK(d.edge(0).joins(0, 1));
    CHECK(d.edge(1).joins(0, 1));
    CHECK(d.edge(0).sign == kPlus);
    CHECK(d.edge(1).sign == kPlus);
  }
  SUBCASE("ids above the removed vertex shift down") {
    const SignedGraph g(4, {{1, 2, kPlus}, {3, 2, kMinus}, {0, 3, kPlus}});
    CHECK(contract_edge(g, 0) == SignedGraph(3, {{2, 1, kMinus}, {0, 2, kPlus}}));
  }
  SUBCASE("loops cannot be contracted") {
    CHECK_THROWS_AS(contract_edge(families::sn(1, 1), 0), ContractLoopError);
  }
}

TEST_CASE("disjoint union") {
  const SignedGraph u = disjoint_union(families::sn(1, 1), families::sn(1, 0));
  CHECK(u == SignedGraph(2, {{0, 0, kMinus}}));
  const SignedGraph two = disjoint_union(families::sp2(), families::sp2());
  CHECK(two.vertex_count() == 4);
  CHECK(two.edge_count() == 4);
  const ComponentStructure cs = components(two, EdgeSubset::all(4));
  CHECK(cs.component_count == 2);
  CHECK(cs.balanced_count == 0);
  const SignedGraph g = families::sp3();
  CHECK(disjoint_union(g, SignedGraph(1)) == SignedGraph(4, g.edges()));
}

TEST_CASE("unbalanced girth examples") {
  CHECK(unbalanced_girth(families::sn(1, 1)) == std::optional<std::size_t>(1));
  CHECK(unbalanced_girth(families::sp2()) == std::optional<std::size_t>(2));
  CHECK(unbalanced_girth(families::complete(3)) == std::nullopt);
  CHECK(unbalanced_girth(families::unbalanced_polygon(5)) == std::optional<std::size_t>(5));
}

TEST_CASE("graph construction validates endpoints") {
  CHECK_THROWS_AS(SignedGraph(2, {{0, 2, kPlus}}), InputError);
  SignedGraph g(1);
  CHECK_THROWS_AS(g.add_edge(0, 1, kPlus), InputError);
}

TEST_CASE("balance flags agree with the double-cover oracle") {
  for (const SignedGraph& g : random_graphs(150, 5, 7, 7)) {
    const std::vector<bool> oracle = double_cover_unbalanced(g, EdgeSubset::all(g.edge_count()));
    const ComponentStructure cs = components(g, EdgeSubset::all(g.edge_count()));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      CHECK(cs.components[cs.component_of[v]].balanced == !oracle[v]);
    }
    CHECK((unbalanced_girth(g) == double_cover_girth(g)));
  }
}

TEST_CASE("switching preserves balance of every subset") {
  for (const SignedGraph& g : random_graphs(60, 4, 6, 11)) {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const SignedGraph s = vertex_switch(g, v);
      CHECK(vertex_switch(s, v) == g);
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
        const ComponentStructure a = components(g, EdgeSubset(bits));
        const ComponentStructure b = components(s, EdgeSubset(bits));
        REQUIRE(a.component_count == b.component_count);
        for (std::size_t c = 0; c < a.component_count; ++c) {
          CHECK(a.components[c].members == b.components[c].members);
          CHECK(a.components[c].balanced == b.components[c].balanced);
        }
      }
    }
  }
}

TEST_CASE("adding an edge merges at most two components and never restores balance") {
  for (const SignedGraph& g : random_graphs(60, 5, 6, 13)) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << g.edge_count()); ++bits) {
      const EdgeSubset s(bits);
      const ComponentStructure before = components(g, s);
      CHECK(before.balanced_count <= before.component_count);
      CHECK(std::is_sorted(before.components.begin(), before.components.end(),
                           [](const Component& a, const Component& b) {
                             return a.representative < b.representative;
                           }));
      for (std::size_t e = 0; e < g.edge_count(); ++e) {
        if (s.contains(e)) continue;
        const ComponentStructure after = components(g, s.with(e));
        CHECK(after.component_count + 1 >= before.component_count);
        CHECK(after.component_count <= before.component_count);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
          if (!before.components[before.component_of[v]].balanced) {
            CHECK_FALSE(after.components[after.component_of[v]].balanced);
          }
        }
      }
    }
  }
}

TEST_CASE("girth is absent exactly for balanced graphs") {
  for (const SignedGraph& g : exhaustive_graphs(3, 3)) {
    const bool balanced = components(g, EdgeSubset::all(g.edge_count())).all_balanced();
    CHECK(balanced == !unbalanced_girth(g).has_value());
  }
}

TEST_CASE("edge permutation helpers") {
  const SignedGraph g = families::sp3();
  CHECK(permute_edges(g, {2, 0, 1}) == SignedGraph(3, {{2, 1, kMinus}, {0, 2, kPlus}, {0, 1, kPlus}}));
  CHECK(move_edge_to_front(g, 1) == SignedGraph(3, {{0, 1, kPlus}, {0, 2, kPlus}, {2, 1, kMinus}}));
  CHECK_THROWS_AS(permute_edges(g, {0, 0, 1}), InputError);
  CHECK(degree(g, 0) == 2);
  CHECK(degree(families::sn(1, 1), 0) == 2);
}
