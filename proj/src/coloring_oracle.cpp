#include "schrom/coloring_oracle.hpp"

#include <algorithm>
#include <string>

namespace schrom {

ColorSet::ColorSet(std::int64_t lambda) : lambda_(lambda) {
  if (lambda < 1) throw InputError("ColorSet: lambda must be at least 1");
  const std::int64_t mu = lambda / 2;
  for (std::int64_t c = -mu; c <= mu; ++c) {
    if (c != 0 || lambda % 2 == 1) colors_.push_back(c);
  }
}

namespace {

// Depth-first over vertices in id order; an edge is tested as soon as both
// endpoints are coloured.
class Enumerator {
 public:
  Enumerator(const SignedGraph& g, std::int64_t lambda, std::uint64_t budget, bool proper)
      : colors_(ColorSet(lambda).colors()), proper_(proper), colouring_(g.vertex_count(), 0),
        closing_(g.vertex_count()) {
    std::uint64_t maps = 1;
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (maps > budget / static_cast<std::uint64_t>(lambda)) {
        throw OracleBudgetError("colouring oracle: " + std::to_string(lambda) + "^" +
                                std::to_string(g.vertex_count()) + " maps exceed the budget");
      }
      maps *= static_cast<std::uint64_t>(lambda);
    }
    for (const SignedEdge& e : g.edges()) {
      const VertexId last = std::max(e.tail, e.head);
      closing_[last].push_back(e);
    }
  }

  std::uint64_t count() { return extend(0); }

 private:
  std::uint64_t extend(std::size_t v) {
    if (v == colouring_.size()) return 1;
    std::uint64_t total = 0;
    for (const std::int64_t c : colors_) {
      colouring_[v] = c;
      if (consistent(v)) total += extend(v + 1);
    }
    return total;
  }

  bool consistent(std::size_t v) const {
    for (const SignedEdge& e : closing_[v]) {
      const bool equal = colouring_[e.tail] == static_cast<std::int64_t>(e.sign) * colouring_[e.head];
      if (equal == proper_) return false;
    }
    return true;
  }

  std::vector<std::int64_t> colors_;
  bool proper_;
  std::vector<std::int64_t> colouring_;
  std::vector<std::vector<SignedEdge>> closing_;  // edges whose larger endpoint is v
};

}  // namespace

std::uint64_t count_proper_colorings(const SignedGraph& g, std::int64_t lambda, std::uint64_t budget) {
  return Enumerator(g, lambda, budget, true).count();
}

std::uint64_t count_q_colorings(const SignedGraph& g, std::int64_t lambda, std::uint64_t budget) {
  return Enumerator(g, lambda, budget, false).count();
}

}  // namespace schrom
