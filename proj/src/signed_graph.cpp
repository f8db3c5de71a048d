#include "schrom/signed_graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace schrom {

namespace {

void check_vertex(const SignedGraph& g, VertexId v) {
  if (v >= g.vertex_count()) {
    throw InputError("vertex " + std::to_string(v) + " out of range (graph has " +
                     std::to_string(g.vertex_count()) + " vertices)");
  }
}

void check_edge(const SignedGraph& g, std::size_t e) {
  if (e >= g.edge_count()) {
    throw InputError("edge index " + std::to_string(e) + " out of range (graph has " +
                     std::to_string(g.edge_count()) + " edges)");
  }
}

// Union-find carrying the parity of the switching function relative to the root.
class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0), balanced_(n, true) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, unsigned> find(std::size_t v) {
    unsigned parity = 0;
    std::size_t root = v;
    while (parent_[root] != root) {
      parity ^= parity_[root];
      root = parent_[root];
    }
    // path compression
    unsigned acc = parity;
    while (parent_[v] != root) {
      std::size_t next = parent_[v];
      unsigned next_parity = acc ^ parity_[v];
      parent_[v] = root;
      parity_[v] = acc;
      v = next;
      acc = next_parity;
    }
    return {root, parity};
  }

  void join(std::size_t u, std::size_t v, Sign sign) {
    const unsigned want = sign == Sign::kNegative ? 1U : 0U;
    auto [ru, pu] = find(u);
    auto [rv, pv] = find(v);
    if (ru == rv) {
      if ((pu ^ pv) != want) balanced_[ru] = false;
      return;
    }
    parent_[rv] = ru;
    parity_[rv] = pu ^ pv ^ want;
    balanced_[ru] = balanced_[ru] && balanced_[rv];
  }

  bool balanced(std::size_t root) const { return balanced_[root]; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<unsigned> parity_;
  std::vector<bool> balanced_;
};

}  // namespace

SignedGraph::SignedGraph(std::size_t vertex_count, std::vector<SignedEdge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (edges_.size() > kMaxEdges) {
    throw InputError("at most " + std::to_string(kMaxEdges) + " edges are supported");
  }
  for (const auto& e : edges_) {
    if (e.tail >= vertex_count_ || e.head >= vertex_count_) {
      throw InputError("edge endpoint out of range");
    }
  }
}

const SignedEdge& SignedGraph::edge(std::size_t e) const {
  check_edge(*this, e);
  return edges_[e];
}

SignedGraph& SignedGraph::add_edge(VertexId tail, VertexId head, Sign sign) {
  check_vertex(*this, tail);
  check_vertex(*this, head);
  if (edges_.size() == kMaxEdges) {
    throw InputError("at most " + std::to_string(kMaxEdges) + " edges are supported");
  }
  edges_.push_back({tail, head, sign});
  return *this;
}

ComponentStructure components(const SignedGraph& g, EdgeSubset s) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() < 64 && (s.bits() >> g.edge_count()) != 0) {
    throw InputError("edge subset references edges beyond the graph");
  }
  ParityForest forest(n);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (!s.contains(e)) continue;
    const auto& edge = g.edges()[e];
    forest.join(edge.tail, edge.head, edge.sign);
  }

  ComponentStructure out;
  out.component_of.assign(n, 0);
  std::vector<std::size_t> index_of_root(n, n);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t root = forest.find(v).first;
    if (index_of_root[root] == n) {
      index_of_root[root] = out.components.size();
      out.components.push_back({v, {}, forest.balanced(root)});
    }
    const std::size_t c = index_of_root[root];
    out.components[c].members.push_back(v);
    out.component_of[v] = c;
  }
  out.component_count = out.components.size();
  out.balanced_count = static_cast<std::size_t>(std::count_if(
      out.components.begin(), out.components.end(), [](const Component& c) { return c.balanced; }));
  return out;
}

SignedGraph vertex_switch(const SignedGraph& g, VertexId v) {
  check_vertex(g, v);
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) {
    if (!e.is_loop() && (e.tail == v || e.head == v)) e.sign = -e.sign;
  }
  return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph delete_edge(const SignedGraph& g, std::size_t e) {
  check_edge(g, e);
  std::vector<SignedEdge> edges = g.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
  return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph contract_edge(const SignedGraph& g, std::size_t e) {
  check_edge(g, e);
  const SignedEdge& target = g.edges()[e];
  if (target.is_loop()) {
    throw ContractLoopError("cannot contract loop edge " + std::to_string(e));
  }
  const VertexId keep = std::min(target.tail, target.head);
  const VertexId gone = std::max(target.tail, target.head);
  auto rename = [&](VertexId v) -> VertexId {
    if (v == gone) return keep;
    return v > gone ? v - 1 : v;
  };
  std::vector<SignedEdge> edges;
  edges.reserve(g.edge_count() - 1);
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k == e) continue;
    const auto& old = g.edges()[k];
    edges.push_back({rename(old.tail), rename(old.head), old.sign});
  }
  return SignedGraph(g.vertex_count() - 1, std::move(edges));
}

SignedGraph disjoint_union(const SignedGraph& g1, const SignedGraph& g2) {
  const auto offset = static_cast<VertexId>(g1.vertex_count());
  std::vector<SignedEdge> edges = g1.edges();
  for (const auto& e : g2.edges()) {
    edges.push_back({e.tail + offset, e.head + offset, e.sign});
  }
  return SignedGraph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

std::optional<std::size_t> unbalanced_girth(const SignedGraph& g) {
  const std::size_t m = g.edge_count();
  if (components(g, EdgeSubset::all(m)).all_balanced()) return std::nullopt;
  // A negative circuit visits each vertex at most once, so its length is at most |V|.
  const std::size_t longest = std::min(m, g.vertex_count());
  for (std::size_t k = 1; k <= longest; ++k) {
    // Gosper's hack over k-subsets of the m edges.
    std::uint64_t subset = (std::uint64_t{1} << k) - 1;
    const std::uint64_t limit = m >= 64 ? 0 : std::uint64_t{1} << m;
    while (limit == 0 || subset < limit) {
      if (!components(g, EdgeSubset(subset)).all_balanced()) return k;
      const std::uint64_t low = subset & (~subset + 1);
      const std::uint64_t ripple = subset + low;
      if (ripple == 0) break;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;  // unreachable for an unbalanced graph
}

SignedGraph permute_edges(const SignedGraph& g, const std::vector<std::size_t>& order) {
  if (order.size() != g.edge_count()) throw InputError("permutation has wrong length");
  std::vector<bool> seen(order.size(), false);
  std::vector<SignedEdge> edges;
  edges.reserve(order.size());
  for (std::size_t k : order) {
    if (k >= order.size() || seen[k]) throw InputError("not a permutation of the edge indices");
    seen[k] = true;
    edges.push_back(g.edges()[k]);
  }
  return SignedGraph(g.vertex_count(), std::move(edges));
}

SignedGraph move_edge_to_front(const SignedGraph& g, std::size_t e) {
  check_edge(g, e);
  std::vector<std::size_t> order{e};
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (k != e) order.push_back(k);
  }
  return permute_edges(g, order);
}

SignedGraph all_positive(const SignedGraph& g) {
  std::vector<SignedEdge> edges = g.edges();
  for (auto& e : edges) e.sign = Sign::kPositive;
  return SignedGraph(g.vertex_count(), std::move(edges));
}

std::size_t degree(const SignedGraph& g, VertexId v) {
  check_vertex(g, v);
  std::size_t d = 0;
  for (const auto& e : g.edges()) {
    if (e.tail == v) ++d;
    if (e.head == v) ++d;
  }
  return d;
}

}  // namespace schrom
