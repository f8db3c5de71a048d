#include "schrom/chromatic_polynomial.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "schrom/integer_homology.hpp"

namespace schrom {
namespace {

using EdgeKey = std::tuple<VertexId, VertexId, int>;
using GraphKey = std::pair<std::size_t, std::vector<EdgeKey>>;

// Edge order and orientation do not affect the polynomial.
GraphKey memo_key(const SignedGraph& g) {
  std::vector<EdgeKey> edges;
  edges.reserve(g.edge_count());
  for (const SignedEdge& e : g.edges()) {
    edges.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head), static_cast<int>(e.sign));
  }
  std::sort(edges.begin(), edges.end());
  return {g.vertex_count(), std::move(edges)};
}

class DeletionContraction {
 public:
  ParityPolynomial run(const SignedGraph& g) {
    GraphKey key = memo_key(g);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
    ParityPolynomial result = compute(g);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  ParityPolynomial compute(const SignedGraph& g) {
    const auto& edges = g.edges();
    for (const SignedEdge& e : edges) {
      if (e.is_loop() && e.sign == Sign::kPositive) return {};
    }
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (!edges[e].is_loop() && edges[e].sign == Sign::kPositive) {
        ParityPolynomial deleted = run(delete_edge(g, e));
        const ParityPolynomial contracted = run(contract_edge(g, e));
        deleted.odd -= contracted.odd;
        deleted.even -= contracted.even;
        return deleted;
      }
    }
    for (const SignedEdge& e : edges) {
      if (!e.is_loop()) return run(vertex_switch(g, e.tail));
    }
    // only negative loops remain
    std::vector<bool> looped(g.vertex_count(), false);
    for (const SignedEdge& e : edges) looped[e.tail] = true;
    const auto n = static_cast<unsigned>(std::count(looped.begin(), looped.end(), true));
    const auto m = static_cast<unsigned>(g.vertex_count());
    const IntPolynomial lambda{0, 1};
    return {lambda.pow(m - n) * IntPolynomial{-1, 1}.pow(n), lambda.pow(m)};
  }

  std::map<GraphKey, ParityPolynomial> memo_;
};

std::string coefficient_list(const IntPolynomial& p) {
  std::string out = "[";
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) out += ",";
    out += std::to_string(c[k]);
  }
  return out + "]";
}

}  // namespace

ParityPolynomial chromatic_dc(const SignedGraph& g) { return DeletionContraction().run(g); }

ParityPolynomial chromatic_statesum(const SignedGraph& g) {
  if (g.edge_count() >= kMaxEdges) throw InputError("chromatic_statesum: too many edges");
  const std::uint64_t subsets = std::uint64_t{1} << g.edge_count();
  // accumulate coefficients of lambda^b directly
  std::vector<std::int64_t> odd(g.vertex_count() + 1, 0);
  std::vector<std::int64_t> even(g.vertex_count() + 1, 0);
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const EdgeSubset s(bits);
    const ComponentStructure cs = components(g, s);
    const std::int64_t sign = s.size() % 2 == 0 ? 1 : -1;
    odd[cs.balanced_count] += sign;
    if (cs.all_balanced()) even[cs.balanced_count] += sign;
  }
  return {IntPolynomial(std::move(odd)), IntPolynomial(std::move(even))};
}

ParityPolynomial q_polynomial(const SignedGraph& g) {
  const ComponentStructure cs = components(g, EdgeSubset::all(g.edge_count()));
  IntPolynomial power = IntPolynomial::monomial(cs.balanced_count);
  return {power, cs.all_balanced() ? power : IntPolynomial{}};
}

IntPolynomial unsigned_chromatic_polynomial(const SignedGraph& g) {
  return chromatic_dc(all_positive(g)).odd;
}

IntPolynomial euler_polynomial(const SignedGraph& g, Variant v, EulerSource source) {
  const StateComplex complex(g, v);
  return source == EulerSource::kChain ? chain_euler(complex) : graded_cohomology(complex).euler();
}

IntPolynomial expected_euler(const SignedGraph& g, Variant v) {
  switch (v) {
    case Variant::kChromatic:
      return chromatic_dc(g).odd.shifted(1);
    case Variant::kBalanced:
      return chromatic_dc(g).even.shifted(1);
    case Variant::kUnsigned:
      return unsigned_chromatic_polynomial(g).shifted(1);
  }
  return {};
}

std::string to_string(const ParityPolynomial& p) {
  return "odd " + coefficient_list(p.odd) + " even " + coefficient_list(p.even);
}

}  // namespace schrom
