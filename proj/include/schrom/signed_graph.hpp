#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace schrom {

/// Raised for malformed caller input: out-of-range ids, bad indices, parse failures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Contraction was requested on a loop edge.
class ContractLoopError : public InputError {
 public:
  using InputError::InputError;
};

enum class Sign : std::int8_t { kPositive = 1, kNegative = -1 };

constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::kPositive : Sign::kNegative;
}
constexpr Sign operator-(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}
constexpr char to_char(Sign s) { return s == Sign::kPositive ? '+' : '-'; }

using VertexId = std::uint32_t;

struct SignedEdge {
  VertexId tail = 0;
  VertexId head = 0;
  Sign sign = Sign::kPositive;

  constexpr bool is_loop() const { return tail == head; }
  constexpr bool joins(VertexId u, VertexId v) const {
    return (tail == u && head == v) || (tail == v && head == u);
  }
  friend constexpr bool operator==(const SignedEdge&, const SignedEdge&) = default;
};

inline constexpr std::size_t kMaxEdges = 64;

/// A set of edge indices, stored as a bitmask over the edge order.
class EdgeSubset {
 public:
  constexpr EdgeSubset() = default;
  constexpr explicit EdgeSubset(std::uint64_t bits) : bits_(bits) {}

  static constexpr EdgeSubset all(std::size_t edge_count) {
    return EdgeSubset(edge_count >= 64 ? ~std::uint64_t{0}
                                       : (std::uint64_t{1} << edge_count) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(std::size_t e) const { return (bits_ >> e) & 1U; }
  constexpr EdgeSubset with(std::size_t e) const {
    return EdgeSubset(bits_ | (std::uint64_t{1} << e));
  }
  constexpr EdgeSubset without(std::size_t e) const {
    return EdgeSubset(bits_ & ~(std::uint64_t{1} << e));
  }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  /// Number of member edges with index smaller than `e`: the n(e) of the differential.
  constexpr int count_before(std::size_t e) const {
    return std::popcount(bits_ & ((std::uint64_t{1} << e) - 1));
  }

  friend constexpr auto operator<=>(EdgeSubset, EdgeSubset) = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Signed multigraph on vertices 0..vertex_count-1. Loops and parallel edges are
/// allowed and the edge order is part of the value.
class SignedGraph {
 public:
  SignedGraph() = default;
  explicit SignedGraph(std::size_t vertex_count, std::vector<SignedEdge> edges = {});

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<SignedEdge>& edges() const { return edges_; }
  const SignedEdge& edge(std::size_t e) const;

  SignedGraph& add_edge(VertexId tail, VertexId head, Sign sign);

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<SignedEdge> edges_;
};

struct Component {
  VertexId representative = 0;  // minimal member id
  std::vector<VertexId> members;
  bool balanced = true;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Connected components of the spanning subgraph [G:s], in ascending
/// representative order, with their balance flags.
struct ComponentStructure {
  std::vector<Component> components;
  std::vector<std::size_t> component_of;  // vertex -> index into components
  std::size_t balanced_count = 0;
  std::size_t component_count = 0;

  bool all_balanced() const { return balanced_count == component_count; }
};

ComponentStructure components(const SignedGraph& g, EdgeSubset s);

SignedGraph vertex_switch(const SignedGraph& g, VertexId v);
SignedGraph delete_edge(const SignedGraph& g, std::size_t e);
SignedGraph contract_edge(const SignedGraph& g, std::size_t e);
SignedGraph disjoint_union(const SignedGraph& g1, const SignedGraph& g2);

/// Length of the shortest negative circuit, or nullopt when g is balanced.
std::optional<std::size_t> unbalanced_girth(const SignedGraph& g);

/// Reorders edges so that new edge k is old edge order[k].
SignedGraph permute_edges(const SignedGraph& g, const std::vector<std::size_t>& order);

/// Moves edge e to the front, keeping the relative order of the others.
SignedGraph move_edge_to_front(const SignedGraph& g, std::size_t e);

/// Same edges with every sign made positive.
SignedGraph all_positive(const SignedGraph& g);

std::size_t degree(const SignedGraph& g, VertexId v);

}  // namespace schrom
