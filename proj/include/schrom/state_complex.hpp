#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "schrom/signed_graph.hpp"

namespace schrom {

/// Which enhanced-state complex to build.
///   kUnsigned  - every component carries a free {1, x} label, signs ignored.
///   kChromatic - unbalanced components are pinned to 1.
///   kBalanced  - only subsets whose spanning subgraph is balanced contribute.
enum class Variant { kUnsigned, kChromatic, kBalanced };

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

enum class Label : std::uint8_t { kOne, kX };

struct EnhancedState {
  EdgeSubset subset;
  std::vector<Label> labels;  // one per component, representative order

  int i() const { return subset.size(); }
  int j() const;

  friend bool operator==(const EnhancedState&, const EnhancedState&) = default;
};

struct Triplet {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

/// Sparse integer matrix in triplet form, sorted by (col, row), no zero entries.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Triplet> entries;

  bool is_zero() const { return entries.empty(); }
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// Sorts, merges duplicate coordinates and drops zeros.
void canonicalize(SparseMatrix& m);

/// a * b; throws InputError on a dimension mismatch.
SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b);

struct DifferentialMatrix {
  std::vector<EnhancedState> domain;    // basis of C^{i,j}
  std::vector<EnhancedState> codomain;  // basis of C^{i+1,j}
  SparseMatrix matrix;                  // codomain.size() x domain.size()
};

class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// All bigraded bases and differentials of one variant's complex for one graph.
///
/// Component data for all 2^|E| spanning subgraphs is computed once; bases are
/// ordered by subset bitmask, then by label tuple lexicographically with 1 < x
/// and the first component most significant.
class StateComplex {
 public:
  StateComplex(SignedGraph graph, Variant variant);

  const SignedGraph& graph() const { return graph_; }
  Variant variant() const { return variant_; }
  int max_i() const { return static_cast<int>(graph_.edge_count()); }
  int max_j() const { return static_cast<int>(graph_.vertex_count()); }

  std::size_t rank(int i, int j) const;
  std::vector<EnhancedState> basis(int i, int j) const;

  /// Position of an enhanced state in basis(i, j), if it is a basis element.
  std::optional<std::size_t> index_of(EdgeSubset s, std::uint32_t x_mask) const;

  /// d : C^{i,j} -> C^{i+1,j}.
  SparseMatrix differential(int i, int j) const;

  /// Raw basis element: subset and bitmask of x-labelled components.
  struct Cell {
    EdgeSubset subset;
    std::uint32_t x_mask = 0;
  };
  const std::vector<Cell>& cells(int i, int j) const;

 private:
  struct SubsetData {
    std::uint32_t balanced_mask = 0;  // bit c set iff component c is balanced
    std::uint8_t component_count = 0;
  };

  const SubsetData& data(std::uint64_t subset) const { return subset_data_[subset]; }
  const std::uint8_t* component_of(std::uint64_t subset) const {
    return &component_ids_[subset * graph_.vertex_count()];
  }
  EnhancedState to_state(const Cell& cell) const;
  std::size_t key_slot(int i, int j) const;

  SignedGraph graph_;
  Variant variant_;
  std::vector<SubsetData> subset_data_;
  std::vector<std::uint8_t> component_ids_;
  std::vector<std::vector<Cell>> cells_;  // indexed by key_slot(i, j)
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Upper bounds for building a full complex: 2^|E| subsets are materialised.
inline constexpr std::size_t kMaxComplexEdges = 24;
inline constexpr std::size_t kMaxComplexVertices = 31;

std::vector<EnhancedState> enumerate_basis(const SignedGraph& g, Variant v, int i, int j);
DifferentialMatrix differential_matrix(const SignedGraph& g, Variant v, int i, int j);

/// Where a basis element of C^{i,j}(SG) lands under C^i(SG) = C^i(SG-e) + C^{i-1}(SG/e).
struct ConeIndex {
  enum class Part { kDeletion, kContraction };
  Part part = Part::kDeletion;
  std::size_t index = 0;
};

struct ConeBlock {
  int i = 0;
  int j = 0;
  std::size_t rank_graph = 0;        // rank C^{i,j}(SG)
  std::size_t rank_deletion = 0;     // rank C^{i,j}(SG-e)
  std::size_t rank_contraction = 0;  // rank C^{i-1,j}(SG/e)
  std::vector<ConeIndex> bijection;  // one entry per basis element of C^{i,j}(SG)
  bool bijective = false;
  bool block_triangular = false;  // d = [[d1, 0], [m~, -d2]] on this bidegree
};

struct ConeDecomposition {
  SignedGraph deletion;     // SG - e
  SignedGraph contraction;  // SG / e (SG - e when e is a positive loop)
  std::vector<ConeBlock> blocks;
  bool block_triangular = false;
  std::string diagnostic;  // first failing bidegree, empty on success
};

/// Identifies C(SG) with the mapping cone of m~ : C(SG-e) -> C(SG/e).
/// Requires e to be a positive edge and the first edge in g's order.
ConeDecomposition cone_decomposition(const SignedGraph& g, std::size_t e, Variant v);

}  // namespace schrom
