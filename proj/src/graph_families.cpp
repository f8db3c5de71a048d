#include "schrom/graph_families.hpp"

namespace schrom::families {

namespace {
constexpr Sign kPlus = Sign::kPositive;
constexpr Sign kMinus = Sign::kNegative;
}  // namespace

SignedGraph sp3() {
  return SignedGraph(3, {{0, 2, kPlus}, {0, 1, kPlus}, {2, 1, kMinus}});
}

SignedGraph sp2() { return SignedGraph(2, {{0, 1, kPlus}, {0, 1, kMinus}}); }

SignedGraph sn(std::size_t m, std::size_t n) {
  if (n > m) throw InputError("SN_m^n needs n <= m");
  SignedGraph g(m);
  for (std::size_t v = 0; v < n; ++v) {
    g.add_edge(static_cast<VertexId>(v), static_cast<VertexId>(v), kMinus);
  }
  return g;
}

SignedGraph polygon(const std::vector<Sign>& signs) {
  const std::size_t n = signs.size();
  if (n == 0) throw InputError("a polygon needs at least one edge");
  SignedGraph g(n);
  for (std::size_t k = 0; k < n; ++k) {
    g.add_edge(static_cast<VertexId>(k), static_cast<VertexId>((k + 1) % n), signs[k]);
  }
  return g;
}

SignedGraph unbalanced_polygon(std::size_t n) {
  std::vector<Sign> signs(n, kPlus);
  if (n > 0) signs.back() = kMinus;
  return polygon(signs);
}

SignedGraph path(const std::vector<Sign>& signs) {
  SignedGraph g(signs.size() + 1);
  for (std::size_t k = 0; k < signs.size(); ++k) {
    g.add_edge(static_cast<VertexId>(k), static_cast<VertexId>(k + 1), signs[k]);
  }
  return g;
}

SignedGraph star(const std::vector<Sign>& signs) {
  SignedGraph g(signs.size() + 1);
  for (std::size_t k = 0; k < signs.size(); ++k) {
    g.add_edge(0, static_cast<VertexId>(k + 1), signs[k]);
  }
  return g;
}

SignedGraph complete(std::size_t n) {
  SignedGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v, kPlus);
  }
  return g;
}

SignedGraph two_squares() {
  return SignedGraph(8, {{0, 1, kPlus},
                         {0, 2, kPlus},
                         {0, 3, kPlus},
                         {1, 3, kPlus},
                         {2, 3, kMinus},
                         {4, 5, kPlus},
                         {4, 6, kMinus},
                         {5, 7, kMinus},
                         {6, 7, kPlus}});
}

std::vector<std::vector<Sign>> all_sign_vectors(std::size_t n) {
  std::vector<std::vector<Sign>> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    std::vector<Sign> signs(n);
    for (std::size_t k = 0; k < n; ++k) signs[k] = (bits >> k) & 1U ? kMinus : kPlus;
    out.push_back(std::move(signs));
  }
  return out;
}

}  // namespace schrom::families
