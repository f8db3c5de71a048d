#include "schrom/state_complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace schrom {

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::kUnsigned: return "unsigned";
    case Variant::kChromatic: return "chromatic";
    case Variant::kBalanced: return "balanced";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
  if (name == "unsigned") return Variant::kUnsigned;
  if (name == "chromatic") return Variant::kChromatic;
  if (name == "balanced") return Variant::kBalanced;
  return std::nullopt;
}

int EnhancedState::j() const {
  return static_cast<int>(std::count(labels.begin(), labels.end(), Label::kX));
}

void canonicalize(SparseMatrix& m) {
  auto& es = m.entries;
  std::sort(es.begin(), es.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  std::vector<Triplet> merged;
  merged.reserve(es.size());
  for (const auto& t : es) {
    if (!merged.empty() && merged.back().row == t.row && merged.back().col == t.col) {
      merged.back().value += t.value;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Triplet& t) { return t.value == 0; });
  es = std::move(merged);
}

SparseMatrix multiply(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw InputError("sparse product dimension mismatch");
  // rows of b, grouped: b is sorted by column, so bucket by row.
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> a_by_col(a.cols);
  for (const auto& t : a.entries) a_by_col[t.col].emplace_back(t.row, t.value);
  SparseMatrix out{a.rows, b.cols, {}};
  for (const auto& t : b.entries) {
    for (const auto& [row, value] : a_by_col[t.row]) {
      out.entries.push_back({row, t.col, value * t.value});
    }
  }
  canonicalize(out);
  return out;
}

namespace {

std::uint64_t cell_key(std::uint64_t subset, std::uint32_t mask) {
  return (subset << 32) | mask;
}

// Representative-order index of the first vertex of each component, given the
// vertex -> component map of one subset (ids appear in first-occurrence order).
std::vector<VertexId> representatives(const std::uint8_t* comp_of, std::size_t n) {
  std::vector<VertexId> reps;
  for (VertexId v = 0; v < n; ++v) {
    if (comp_of[v] == reps.size()) reps.push_back(v);
  }
  return reps;
}

}  // namespace

StateComplex::StateComplex(SignedGraph graph, Variant variant)
    : graph_(std::move(graph)), variant_(variant) {
  const std::size_t m = graph_.edge_count();
  const std::size_t n = graph_.vertex_count();
  if (m > kMaxComplexEdges) {
    throw InputError("graph has " + std::to_string(m) + " edges; complexes support at most " +
                     std::to_string(kMaxComplexEdges));
  }
  if (n > kMaxComplexVertices) {
    throw InputError("graph has " + std::to_string(n) +
                     " vertices; complexes support at most " +
                     std::to_string(kMaxComplexVertices));
  }
  const std::uint64_t subset_count = std::uint64_t{1} << m;
  subset_data_.resize(subset_count);
  component_ids_.resize(subset_count * n);
  cells_.resize((m + 1) * (n + 1));

  for (std::uint64_t s = 0; s < subset_count; ++s) {
    const ComponentStructure cs = components(graph_, EdgeSubset(s));
    SubsetData& d = subset_data_[s];
    d.component_count = static_cast<std::uint8_t>(cs.component_count);
    for (std::size_t c = 0; c < cs.component_count; ++c) {
      if (cs.components[c].balanced) d.balanced_mask |= std::uint32_t{1} << c;
    }
    for (std::size_t v = 0; v < n; ++v) {
      component_ids_[s * n + v] = static_cast<std::uint8_t>(cs.component_of[v]);
    }

    const std::uint32_t all_mask =
        d.component_count == 32 ? ~std::uint32_t{0}
                                : (std::uint32_t{1} << d.component_count) - 1;
    std::uint32_t free_mask = all_mask;
    if (variant_ == Variant::kChromatic) free_mask = d.balanced_mask;
    if (variant_ == Variant::kBalanced && d.balanced_mask != all_mask) continue;

    std::vector<std::uint32_t> free_components;
    for (std::uint32_t c = 0; c < d.component_count; ++c) {
      if ((free_mask >> c) & 1U) free_components.push_back(c);
    }
    const int i = std::popcount(s);
    const std::size_t f = free_components.size();
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << f); ++t) {
      std::uint32_t mask = 0;
      for (std::size_t k = 0; k < f; ++k) {
        // first free component is the most significant label position
        if ((t >> (f - 1 - k)) & 1U) mask |= std::uint32_t{1} << free_components[k];
      }
      auto& bucket = cells_[key_slot(i, std::popcount(mask))];
      index_.emplace(cell_key(s, mask), bucket.size());
      bucket.push_back({EdgeSubset(s), mask});
    }
  }
}

std::size_t StateComplex::key_slot(int i, int j) const {
  return static_cast<std::size_t>(i) * (graph_.vertex_count() + 1) + static_cast<std::size_t>(j);
}

const std::vector<StateComplex::Cell>& StateComplex::cells(int i, int j) const {
  static const std::vector<Cell> kEmpty;
  if (i < 0 || j < 0 || i > max_i() || j > max_j()) return kEmpty;
  return cells_[key_slot(i, j)];
}

std::size_t StateComplex::rank(int i, int j) const { return cells(i, j).size(); }

EnhancedState StateComplex::to_state(const Cell& cell) const {
  EnhancedState st{cell.subset, {}};
  const auto count = data(cell.subset.bits()).component_count;
  st.labels.resize(count, Label::kOne);
  for (std::uint32_t c = 0; c < count; ++c) {
    if ((cell.x_mask >> c) & 1U) st.labels[c] = Label::kX;
  }
  return st;
}

std::vector<EnhancedState> StateComplex::basis(int i, int j) const {
  std::vector<EnhancedState> out;
  for (const auto& cell : cells(i, j)) out.push_back(to_state(cell));
  return out;
}

std::optional<std::size_t> StateComplex::index_of(EdgeSubset s, std::uint32_t x_mask) const {
  auto it = index_.find(cell_key(s.bits(), x_mask));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

SparseMatrix StateComplex::differential(int i, int j) const {
  const auto& domain = cells(i, j);
  SparseMatrix out{rank(i + 1, j), domain.size(), {}};
  const std::size_t n = graph_.vertex_count();
  const std::size_t m = graph_.edge_count();

  for (std::size_t col = 0; col < domain.size(); ++col) {
    const Cell& cell = domain[col];
    const std::uint64_t s = cell.subset.bits();
    const auto reps = representatives(component_of(s), n);
    for (std::size_t e = 0; e < m; ++e) {
      if (cell.subset.contains(e)) continue;
      const std::uint64_t target = s | (std::uint64_t{1} << e);
      const std::uint8_t* target_comp = component_of(target);
      const SubsetData& target_data = data(target);

      std::uint32_t mask = 0;
      bool killed = false;
      for (std::size_t c = 0; c < reps.size(); ++c) {
        if (!((cell.x_mask >> c) & 1U)) continue;
        const std::uint32_t bit = std::uint32_t{1} << target_comp[reps[c]];
        if (mask & bit) {  // m(x, x) = 0
          killed = true;
          break;
        }
        mask |= bit;
      }
      if (killed) continue;
      if (variant_ == Variant::kChromatic && (mask & ~target_data.balanced_mask) != 0) continue;
      if (variant_ == Variant::kBalanced &&
          std::popcount(target_data.balanced_mask) != target_data.component_count) {
        continue;
      }
      auto row = index_of(EdgeSubset(target), mask);
      if (!row) throw std::logic_error("differential target missing from basis");
      const std::int64_t sign = cell.subset.count_before(e) % 2 == 0 ? 1 : -1;
      out.entries.push_back({*row, col, sign});
    }
  }
  canonicalize(out);
  return out;
}

std::vector<EnhancedState> enumerate_basis(const SignedGraph& g, Variant v, int i, int j) {
  return StateComplex(g, v).basis(i, j);
}

DifferentialMatrix differential_matrix(const SignedGraph& g, Variant v, int i, int j) {
  const StateComplex complex(g, v);
  return {complex.basis(i, j), complex.basis(i + 1, j), complex.differential(i, j)};
}

namespace {

struct ConeSide {
  const StateComplex& complex;
  // vertex map from SG into this side's vertex set
  std::vector<VertexId> vertex_map;
};

// Label mask of the image of an enhanced state of SG (given by its subset in SG
// and x-mask) inside `side`, whose subset is `side_subset`. Returns nullopt when
// two x-labelled components merge.
std::optional<std::uint32_t> transport_mask(const ComponentStructure& from, std::uint32_t x_mask,
                                            const ComponentStructure& to,
                                            const std::vector<VertexId>& vertex_map) {
  std::uint32_t mask = 0;
  for (std::size_t c = 0; c < from.component_count; ++c) {
    if (!((x_mask >> c) & 1U)) continue;
    const auto target = to.component_of[vertex_map[from.components[c].representative]];
    const std::uint32_t bit = std::uint32_t{1} << target;
    if (mask & bit) return std::nullopt;
    mask |= bit;
  }
  return mask;
}

bool survives_projection(Variant v, const ComponentStructure& cs, std::uint32_t mask) {
  if (v == Variant::kBalanced) return cs.all_balanced();
  if (v == Variant::kChromatic) {
    for (std::size_t c = 0; c < cs.component_count; ++c) {
      if (((mask >> c) & 1U) && !cs.components[c].balanced) return false;
    }
  }
  return true;
}

}  // namespace

ConeDecomposition cone_decomposition(const SignedGraph& g, std::size_t e, Variant v) {
  if (e >= g.edge_count()) throw PreconditionError("cone edge index out of range");
  if (e != 0) throw PreconditionError("cone edge must be the first edge in the order");
  const SignedEdge& edge = g.edges()[0];
  if (edge.sign != Sign::kPositive) throw PreconditionError("cone edge must be positive");

  ConeDecomposition out;
  out.deletion = delete_edge(g, 0);
  out.contraction = edge.is_loop() ? out.deletion : contract_edge(g, 0);

  std::vector<VertexId> identity(g.vertex_count());
  for (VertexId w = 0; w < g.vertex_count(); ++w) identity[w] = w;
  std::vector<VertexId> collapse = identity;
  if (!edge.is_loop()) {
    const VertexId keep = std::min(edge.tail, edge.head);
    const VertexId gone = std::max(edge.tail, edge.head);
    for (VertexId w = 0; w < g.vertex_count(); ++w) {
      collapse[w] = w == gone ? keep : (w > gone ? w - 1 : w);
    }
  }

  const StateComplex whole(g, v);
  const StateComplex del(out.deletion, v);
  const StateComplex con(out.contraction, v);

  // Bijection C^{i,j}(SG) -> C^{i,j}(SG-e) + C^{i-1,j}(SG/e).
  auto build_bijection = [&](int i, int j, ConeBlock& block) {
    block.i = i;
    block.j = j;
    block.rank_graph = whole.rank(i, j);
    block.rank_deletion = del.rank(i, j);
    block.rank_contraction = con.rank(i - 1, j);
    bool ok = block.rank_graph == block.rank_deletion + block.rank_contraction;
    std::vector<bool> hit_del(block.rank_deletion, false), hit_con(block.rank_contraction, false);
    for (const auto& cell : whole.cells(i, j)) {
      const ComponentStructure here = components(g, cell.subset);
      const EdgeSubset rest(cell.subset.bits() >> 1);
      ConeIndex idx;
      std::optional<std::size_t> pos;
      if (!cell.subset.contains(0)) {
        const auto cs = components(out.deletion, rest);
        auto mask = transport_mask(here, cell.x_mask, cs, identity);
        idx.part = ConeIndex::Part::kDeletion;
        if (mask) pos = del.index_of(rest, *mask);
        if (pos && (hit_del[*pos] || del.cells(i, j)[*pos].subset != rest)) pos.reset();
        if (pos) hit_del[*pos] = true;
      } else {
        const auto cs = components(out.contraction, rest);
        auto mask = transport_mask(here, cell.x_mask, cs, collapse);
        idx.part = ConeIndex::Part::kContraction;
        if (mask) pos = con.index_of(rest, *mask);
        if (pos && (hit_con[*pos] || con.cells(i - 1, j)[*pos].subset != rest)) pos.reset();
        if (pos) hit_con[*pos] = true;
      }
      if (!pos) {
        ok = false;
        idx.index = 0;
      } else {
        idx.index = *pos;
      }
      block.bijection.push_back(idx);
    }
    block.bijective = ok;
  };

  // m~ : C^{i,j}(SG-e) -> C^{i,j}(SG/e), built from component data directly.
  auto m_tilde = [&](int i, int j) {
    SparseMatrix mt{con.rank(i, j), del.rank(i, j), {}};
    const auto& dom = del.cells(i, j);
    for (std::size_t col = 0; col < dom.size(); ++col) {
      const auto& cell = dom[col];
      const auto before = components(out.deletion, cell.subset);
      const auto after = components(out.contraction, cell.subset);
      auto mask = transport_mask(before, cell.x_mask, after, collapse);
      if (!mask || !survives_projection(v, after, *mask)) continue;
      auto row = con.index_of(cell.subset, *mask);
      if (!row) throw std::logic_error("m~ target missing from basis");
      mt.entries.push_back({*row, col, 1});
    }
    canonicalize(mt);
    return mt;
  };

  const int max_i = static_cast<int>(g.edge_count());
  const int max_j = static_cast<int>(g.vertex_count());
  std::vector<std::vector<ConeBlock>> blocks(max_i + 2, std::vector<ConeBlock>(max_j + 1));
  for (int i = 0; i <= max_i + 1; ++i) {
    for (int j = 0; j <= max_j; ++j) build_bijection(i, j, blocks[i][j]);
  }

  out.block_triangular = true;
  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) {
      ConeBlock block = blocks[i][j];
      const ConeBlock& next = blocks[i + 1][j];
      bool ok = block.bijective && next.bijective;
      if (ok) {
        // Positions of the cone summands inside SG's own bases.
        std::vector<std::size_t> dom_del(block.rank_deletion), dom_con(block.rank_contraction);
        for (std::size_t k = 0; k < block.bijection.size(); ++k) {
          const auto& b = block.bijection[k];
          (b.part == ConeIndex::Part::kDeletion ? dom_del : dom_con)[b.index] = k;
        }
        std::vector<std::size_t> cod_del(next.rank_deletion), cod_con(next.rank_contraction);
        for (std::size_t k = 0; k < next.bijection.size(); ++k) {
          const auto& b = next.bijection[k];
          (b.part == ConeIndex::Part::kDeletion ? cod_del : cod_con)[b.index] = k;
        }
        SparseMatrix expected{whole.rank(i + 1, j), whole.rank(i, j), {}};
        for (const auto& t : del.differential(i, j).entries) {
          expected.entries.push_back({cod_del[t.row], dom_del[t.col], t.value});
        }
        for (const auto& t : m_tilde(i, j).entries) {
          expected.entries.push_back({cod_con[t.row], dom_del[t.col], t.value});
        }
        if (i >= 1) {
          for (const auto& t : con.differential(i - 1, j).entries) {
            expected.entries.push_back({cod_con[t.row], dom_con[t.col], -t.value});
          }
        }
        canonicalize(expected);
        ok = expected == whole.differential(i, j);
      }
      block.block_triangular = ok;
      if (!ok && out.block_triangular) {
        out.block_triangular = false;
        std::ostringstream msg;
        msg << "bidegree (" << i << "," << j << "): "
            << (block.bijective && next.bijective ? "differential is not [[d1,0],[m~,-d2]]"
                                                  : "basis does not split as C(SG-e) + C(SG/e)");
        out.diagnostic = msg.str();
      }
      out.blocks.push_back(std::move(block));
    }
  }
  return out;
}

}  // namespace schrom
