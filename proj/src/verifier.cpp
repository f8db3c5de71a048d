#include "schrom/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <set>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "schrom/chromatic_polynomial.hpp"
#include "schrom/graph_families.hpp"

namespace schrom {
namespace {

constexpr std::array<Variant, 3> kAllVariants = {Variant::kChromatic, Variant::kBalanced,
                                                 Variant::kUnsigned};
constexpr std::array<Variant, 2> kSignedVariants = {Variant::kChromatic, Variant::kBalanced};

constexpr std::array<std::string_view, 13> kCheckNames = {
    "D_SQUARED",     "ORDER_INDEPENDENCE", "SWITCH_INVARIANCE", "EULER_MATCH",
    "CONE",          "LES_RANKS",          "PENDANT_SHIFT",     "POS_LOOP_ZERO",
    "NEG_LOOP_BALANCED", "PARALLEL_SAME_SIGN", "KUNNETH",       "LOW_DEGREE_UNSIGNED",
    "KNIGHT_MOVE_FAILS",
};

std::size_t slot(Variant v) { return static_cast<std::size_t>(v); }

std::string bidegree(int i, int j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

PropertyCheck pass(CheckName name, std::string diagnostic = {}) {
  return {name, Status::kPass, std::move(diagnostic)};
}
PropertyCheck fail(CheckName name, std::string diagnostic) {
  return {name, Status::kFail, std::move(diagnostic)};
}
PropertyCheck not_applicable(CheckName name, std::string reason) {
  return {name, Status::kNotApplicable, std::move(reason)};
}

/// First bidegree where the two differ, as "H^(i,j): A vs B".
std::optional<std::string> first_difference(const GradedCohomology& a, const GradedCohomology& b) {
  std::set<std::pair<int, int>> keys;
  for (const auto& e : a.entries()) keys.emplace(e.i, e.j);
  for (const auto& e : b.entries()) keys.emplace(e.i, e.j);
  for (const auto& [i, j] : keys) {
    const AbelianGroup x = a.at(i, j);
    const AbelianGroup y = b.at(i, j);
    if (!(x == y)) return "H^" + bidegree(i, j) + ": " + x.to_string() + " vs " + y.to_string();
  }
  return std::nullopt;
}

std::string variant_prefix(Variant v) { return std::string(to_string(v)) + " "; }

std::optional<std::size_t> first_positive_edge(const SignedGraph& g) {
  std::optional<std::size_t> loop;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const SignedEdge& edge = g.edge(e);
    if (edge.sign != Sign::kPositive) continue;
    if (!edge.is_loop()) return e;
    if (!loop) loop = e;
  }
  return loop;
}

std::optional<std::size_t> chosen_positive_edge(const SignedGraph& g, const CheckInputs& inputs) {
  if (inputs.edge) {
    if (*inputs.edge >= g.edge_count() || g.edge(*inputs.edge).sign != Sign::kPositive) {
      return std::nullopt;
    }
    return inputs.edge;
  }
  return first_positive_edge(g);
}

std::vector<std::size_t> seeded_permutation(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  CorpusRandom rng(seed);
  for (std::size_t k = n; k > 1; --k) std::swap(order[k - 1], order[rng.below(k)]);
  if (n >= 2 && std::is_sorted(order.begin(), order.end())) std::swap(order[0], order[1]);
  return order;
}

// --- individual checks -----------------------------------------------------

PropertyCheck check_d_squared(GraphContext& ctx) {
  constexpr CheckName name = CheckName::kDSquared;
  for (Variant v : kAllVariants) {
    const StateComplex& c = ctx.complex(v);
    for (int j = 0; j <= c.max_j(); ++j) {
      for (int i = 0; i + 1 <= c.max_i(); ++i) {
        const SparseMatrix dd = multiply(c.differential(i + 1, j), c.differential(i, j));
        if (!dd.is_zero()) {
          return fail(name, variant_prefix(v) + "d^2 != 0 from bidegree " + bidegree(i, j));
        }
      }
    }
  }
  return pass(name);
}

PropertyCheck check_order_independence(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kOrderIndependence;
  const SignedGraph& g = ctx.graph();
  if (g.edge_count() < 2 && !inputs.order) return not_applicable(name, "fewer than two edges");
  const std::vector<std::size_t> order =
      inputs.order ? *inputs.order : seeded_permutation(g.edge_count(), inputs.seed);
  const SignedGraph permuted = permute_edges(g, order);
  for (Variant v : kAllVariants) {
    if (auto diff = first_difference(ctx.cohomology(v), graded_cohomology(permuted, v))) {
      return fail(name, variant_prefix(v) + *diff);
    }
  }
  return pass(name);
}

PropertyCheck check_switch_invariance(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kSwitchInvariance;
  const SignedGraph& g = ctx.graph();
  if (g.vertex_count() == 0) return not_applicable(name, "no vertices");
  std::vector<VertexId> vertices;
  if (inputs.vertex) {
    if (*inputs.vertex >= g.vertex_count()) return not_applicable(name, "vertex out of range");
    vertices.push_back(*inputs.vertex);
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) vertices.push_back(v);
  }
  for (VertexId vertex : vertices) {
    const SignedGraph switched = vertex_switch(g, vertex);
    for (Variant v : kSignedVariants) {
      if (auto diff = first_difference(ctx.cohomology(v), graded_cohomology(switched, v))) {
        return fail(name, variant_prefix(v) + "switching v" + std::to_string(vertex) + ": " + *diff);
      }
    }
  }
  return pass(name);
}

std::optional<std::string> first_coefficient_difference(const IntPolynomial& a, const IntPolynomial& b,
                                                        std::string_view a_name,
                                                        std::string_view b_name) {
  const std::size_t top = std::max(a.coefficients().size(), b.coefficients().size());
  for (std::size_t k = 0; k < top; ++k) {
    if (a.coefficient(k) != b.coefficient(k)) {
      return "coefficient of q^" + std::to_string(k) + ": " + std::string(a_name) + " " +
             std::to_string(a.coefficient(k)) + " vs " + std::string(b_name) + " " +
             std::to_string(b.coefficient(k));
    }
  }
  return std::nullopt;
}

PropertyCheck check_euler_match(GraphContext& ctx) {
  constexpr CheckName name = CheckName::kEulerMatch;
  std::string summary;
  for (Variant v : kAllVariants) {
    const IntPolynomial chain = chain_euler(ctx.complex(v));
    const IntPolynomial cohomology = ctx.cohomology(v).euler();
    const IntPolynomial expected = expected_euler(ctx.graph(), v);
    if (auto d = first_coefficient_difference(chain, cohomology, "chain", "cohomology")) {
      return fail(name, variant_prefix(v) + *d);
    }
    if (auto d = first_coefficient_difference(chain, expected, "chain", "polynomial")) {
      return fail(name, variant_prefix(v) + *d);
    }
    if (!summary.empty()) summary += "; ";
    summary += variant_prefix(v) + chain.to_string();
  }
  return pass(name, summary);
}

PropertyCheck check_cone(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kCone;
  const auto e = chosen_positive_edge(ctx.graph(), inputs);
  if (!e) return not_applicable(name, "no positive edge");
  const SignedGraph moved = move_edge_to_front(ctx.graph(), *e);
  for (Variant v : kSignedVariants) {
    const ConeDecomposition cone = cone_decomposition(moved, 0, v);
    if (!cone.block_triangular) {
      return fail(name, variant_prefix(v) + "edge " + std::to_string(*e) + ": " + cone.diagnostic);
    }
  }
  return pass(name);
}

PropertyCheck check_les_ranks(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kLesRanks;
  const auto e = chosen_positive_edge(ctx.graph(), inputs);
  if (!e) return not_applicable(name, "no positive edge");
  const SignedGraph moved = move_edge_to_front(ctx.graph(), *e);
  const SignedGraph deleted = delete_edge(moved, 0);
  const SignedGraph contracted = moved.edge(0).is_loop() ? deleted : contract_edge(moved, 0);
  const int top = static_cast<int>(moved.edge_count());
  for (Variant v : kSignedVariants) {
    const GradedCohomology hg = graded_cohomology(moved, v);
    const GradedCohomology hd = graded_cohomology(deleted, v);
    const GradedCohomology hc = graded_cohomology(contracted, v);
    for (int j = 0; j <= static_cast<int>(moved.vertex_count()); ++j) {
      auto g = [&](int i) { return static_cast<long>(hg.at(i, j).free_rank); };
      auto d = [&](int i) { return static_cast<long>(hd.at(i, j).free_rank); };
      auto c = [&](int i) { return static_cast<long>(hc.at(i, j).free_rank); };
      // ... -> H^{i-1}(SG/e) -> H^i(SG) -> H^i(SG-e) -> H^i(SG/e) -> H^{i+1}(SG) -> ...
      long alternating = 0;
      for (int i = 0; i <= top; ++i) {
        alternating += (i % 2 == 0 ? 1 : -1) * (g(i) - d(i) + c(i));
        const bool exact_g = g(i) <= c(i - 1) + d(i);
        const bool exact_d = d(i) <= g(i) + c(i);
        const bool exact_c = c(i) <= d(i) + g(i + 1);
        if (!exact_g || !exact_d || !exact_c) {
          return fail(name, variant_prefix(v) + "rank inequality broken at " + bidegree(i, j));
        }
      }
      if (alternating != 0) {
        return fail(name, variant_prefix(v) + "alternating rank sum " + std::to_string(alternating) +
                              " at j=" + std::to_string(j));
      }
    }
  }
  return pass(name);
}

PropertyCheck check_pendant_shift(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kPendantShift;
  const SignedGraph& g = ctx.graph();
  std::optional<VertexId> leaf;
  if (inputs.vertex) {
    if (*inputs.vertex < g.vertex_count() && degree(g, *inputs.vertex) == 1) leaf = inputs.vertex;
  } else {
    for (VertexId v = 0; v < g.vertex_count() && !leaf; ++v) {
      if (degree(g, v) == 1) leaf = v;
    }
  }
  if (!leaf) return not_applicable(name, "no vertex of degree one");
  std::size_t e = 0;
  while (g.edge(e).tail != *leaf && g.edge(e).head != *leaf) ++e;
  const SignedGraph contracted = contract_edge(g, e);
  for (Variant v : kAllVariants) {
    const GradedCohomology shifted = graded_cohomology(contracted, v).shifted(1);
    if (auto diff = first_difference(ctx.cohomology(v), shifted)) {
      return fail(name, variant_prefix(v) + "edge " + std::to_string(e) + ": " + *diff);
    }
  }
  return pass(name);
}

PropertyCheck check_pos_loop_zero(GraphContext& ctx) {
  constexpr CheckName name = CheckName::kPosLoopZero;
  const auto& edges = ctx.graph().edges();
  const bool has = std::any_of(edges.begin(), edges.end(), [](const SignedEdge& e) {
    return e.is_loop() && e.sign == Sign::kPositive;
  });
  if (!has) return not_applicable(name, "no positive loop");
  for (Variant v : kAllVariants) {
    const GradedCohomology& h = ctx.cohomology(v);
    if (!h.is_trivial()) {
      const auto first = h.entries().front();
      return fail(name, variant_prefix(v) + "H^" + bidegree(first.i, first.j) + " = " +
                            first.group.to_string());
    }
  }
  return pass(name);
}

PropertyCheck check_neg_loop_balanced(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kNegLoopBalanced;
  const SignedGraph& g = ctx.graph();
  auto is_negative_loop = [&](std::size_t e) {
    return g.edge(e).is_loop() && g.edge(e).sign == Sign::kNegative;
  };
  std::optional<std::size_t> loop;
  if (inputs.edge) {
    if (*inputs.edge < g.edge_count() && is_negative_loop(*inputs.edge)) loop = inputs.edge;
  } else {
    for (std::size_t e = 0; e < g.edge_count() && !loop; ++e) {
      if (is_negative_loop(e)) loop = e;
    }
  }
  if (!loop) return not_applicable(name, "no negative loop");
  const GradedCohomology reduced = graded_cohomology(delete_edge(g, *loop), Variant::kBalanced);
  if (auto diff = first_difference(ctx.cohomology(Variant::kBalanced), reduced)) {
    return fail(name, "edge " + std::to_string(*loop) + ": " + *diff);
  }
  return pass(name);
}

PropertyCheck check_parallel_same_sign(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kParallelSameSign;
  const SignedGraph& g = ctx.graph();
  auto twins = [&](std::size_t a, std::size_t b) {
    const SignedEdge& x = g.edge(a);
    const SignedEdge& y = g.edge(b);
    return a != b && !x.is_loop() && x.joins(y.tail, y.head) && x.sign == y.sign;
  };
  std::optional<std::size_t> removed;
  for (std::size_t a = 0; a < g.edge_count() && !removed; ++a) {
    if (inputs.edge && a != *inputs.edge) continue;
    for (std::size_t b = 0; b < g.edge_count() && !removed; ++b) {
      if ((inputs.edge || b > a) && twins(a, b)) removed = b;
    }
  }
  if (!removed) return not_applicable(name, "no parallel pair of equal sign");
  const SignedGraph reduced = delete_edge(g, *removed);
  for (Variant v : kAllVariants) {
    if (auto diff = first_difference(ctx.cohomology(v), graded_cohomology(reduced, v))) {
      return fail(name, variant_prefix(v) + "deleting edge " + std::to_string(*removed) + ": " + *diff);
    }
  }
  return pass(name);
}

GradedCohomology kunneth_prediction(const GradedCohomology& a, const GradedCohomology& b) {
  GradedCohomology out;
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) {
      out.add(x.i + y.i, x.j + y.j, tensor(x.group, y.group));
      if (x.i + y.i >= 1) out.add(x.i + y.i - 1, x.j + y.j, tor(x.group, y.group));
    }
  }
  return out;
}

PropertyCheck check_kunneth(GraphContext& ctx, const CheckInputs& inputs) {
  constexpr CheckName name = CheckName::kKunneth;
  const SignedGraph& g = ctx.graph();
  // Tor terms need torsion on both sides, so the triangle (which has Z_2) is
  // only worth its cost when g has torsion too.
  auto has_torsion = [&](Variant v) {
    for (const auto& e : ctx.cohomology(v).entries()) {
      if (!e.group.torsion.empty()) return true;
    }
    return false;
  };
  const bool torsion = std::any_of(kAllVariants.begin(), kAllVariants.end(), has_torsion);
  const SignedGraph partner =
      inputs.partner ? *inputs.partner : (torsion ? families::sp3() : families::sn(1, 1));
  if (g.edge_count() + partner.edge_count() > kMaxComplexEdges ||
      g.vertex_count() + partner.vertex_count() > kMaxComplexVertices) {
    return not_applicable(name, "disjoint union too large");
  }
  const SignedGraph joined = disjoint_union(g, partner);
  for (Variant v : kAllVariants) {
    const GradedCohomology predicted =
        kunneth_prediction(ctx.cohomology(v), graded_cohomology(partner, v));
    if (auto diff = first_difference(graded_cohomology(joined, v), predicted)) {
      return fail(name, variant_prefix(v) + "union vs prediction, " + *diff);
    }
  }
  return pass(name);
}

PropertyCheck check_low_degree_unsigned(GraphContext& ctx) {
  constexpr CheckName name = CheckName::kLowDegreeUnsigned;
  const std::optional<std::size_t> girth = unbalanced_girth(ctx.graph());
  if (girth && *girth < 2) return not_applicable(name, "unbalanced girth below 2");
  const int top = girth ? static_cast<int>(*girth) - 2 : static_cast<int>(ctx.graph().edge_count());
  auto truncate = [top](const GradedCohomology& h) {
    GradedCohomology out;
    for (const auto& e : h.entries()) {
      if (e.i <= top) out.set(e.i, e.j, e.group);
    }
    return out;
  };
  const GradedCohomology unsigned_part = truncate(ctx.cohomology(Variant::kUnsigned));
  for (Variant v : kSignedVariants) {
    if (auto diff = first_difference(truncate(ctx.cohomology(v)), unsigned_part)) {
      return fail(name, variant_prefix(v) + "vs unsigned, " + *diff);
    }
  }
  return pass(name);
}

PropertyCheck check_knight_move_fails(GraphContext& ctx) {
  constexpr CheckName name = CheckName::kKnightMoveFails;
  const GradedCohomology& h = ctx.cohomology(Variant::kBalanced);
  auto rank = [&](int i, int j) { return h.at(i, j).free_rank; };
  for (const auto& e : h.entries()) {
    const std::size_t r = e.group.free_rank;
    if (r == 0) continue;
    if (rank(e.i + 1, e.j - 2) == r || rank(e.i - 1, e.j + 2) == r) continue;
    return pass(name, "H_b^" + bidegree(e.i, e.j) + " has rank " + std::to_string(r) + " but H_b^" +
                          bidegree(e.i + 1, e.j - 2) + " has rank " +
                          std::to_string(rank(e.i + 1, e.j - 2)) + " and H_b^" +
                          bidegree(e.i - 1, e.j + 2) + " has rank " +
                          std::to_string(rank(e.i - 1, e.j + 2)));
  }
  return fail(name, "every rational balanced group has a knight-move partner");
}

// --- corpus ----------------------------------------------------------------

void multisets(const std::vector<SignedEdge>& kinds, std::size_t size, std::size_t vertex_count,
               std::vector<SignedGraph>& out) {
  std::vector<std::size_t> pick(size, 0);
  std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t from) {
    if (pos == size) {
      std::vector<SignedEdge> edges;
      for (std::size_t k : pick) edges.push_back(kinds[k]);
      out.emplace_back(vertex_count, std::move(edges));
      return;
    }
    for (std::size_t k = from; k < kinds.size(); ++k) {
      pick[pos] = k;
      fill(pos + 1, k);
    }
  };
  fill(0, 0);
}

using ShapeKey = std::pair<std::size_t, std::vector<std::tuple<VertexId, VertexId, int>>>;

ShapeKey shape(const SignedGraph& g) {
  ShapeKey key{g.vertex_count(), {}};
  for (const SignedEdge& e : g.edges()) {
    key.second.emplace_back(std::min(e.tail, e.head), std::max(e.tail, e.head), static_cast<int>(e.sign));
  }
  std::sort(key.second.begin(), key.second.end());
  return key;
}

using GraphResults = std::array<PropertyCheck, kAllChecks.size() - 1>;

GraphResults run_graph_checks(const SignedGraph& g, std::uint64_t seed) {
  GraphContext ctx(g);
  CheckInputs inputs;
  inputs.seed = seed;
  GraphResults out;
  for (std::size_t k = 0; k + 1 < kAllChecks.size(); ++k) out[k] = check(kAllChecks[k], ctx, inputs);
  return out;
}

}  // namespace

std::string_view to_string(CheckName name) { return kCheckNames[static_cast<std::size_t>(name)]; }

std::optional<CheckName> parse_check(std::string_view name) {
  for (CheckName c : kAllChecks) {
    if (to_string(c) == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(Status status) {
  switch (status) {
    case Status::kPass:
      return "PASS";
    case Status::kFail:
      return "FAIL";
    case Status::kNotApplicable:
      return "NOT_APPLICABLE";
  }
  return "?";
}

const StateComplex& GraphContext::complex(Variant v) {
  auto& entry = complexes_[slot(v)];
  if (!entry) entry.emplace(graph_, v);
  return *entry;
}

const GradedCohomology& GraphContext::cohomology(Variant v) {
  auto& entry = cohomology_[slot(v)];
  if (!entry) entry = graded_cohomology(complex(v));
  return *entry;
}

PropertyCheck check(CheckName name, GraphContext& ctx, const CheckInputs& inputs) {
  switch (name) {
    case CheckName::kDSquared:
      return check_d_squared(ctx);
    case CheckName::kOrderIndependence:
      return check_order_independence(ctx, inputs);
    case CheckName::kSwitchInvariance:
      return check_switch_invariance(ctx, inputs);
    case CheckName::kEulerMatch:
      return check_euler_match(ctx);
    case CheckName::kCone:
      return check_cone(ctx, inputs);
    case CheckName::kLesRanks:
      return check_les_ranks(ctx, inputs);
    case CheckName::kPendantShift:
      return check_pendant_shift(ctx, inputs);
    case CheckName::kPosLoopZero:
      return check_pos_loop_zero(ctx);
    case CheckName::kNegLoopBalanced:
      return check_neg_loop_balanced(ctx, inputs);
    case CheckName::kParallelSameSign:
      return check_parallel_same_sign(ctx, inputs);
    case CheckName::kKunneth:
      return check_kunneth(ctx, inputs);
    case CheckName::kLowDegreeUnsigned:
      return check_low_degree_unsigned(ctx);
    case CheckName::kKnightMoveFails:
      return check_knight_move_fails(ctx);
  }
  return not_applicable(name, "unknown check");
}

PropertyCheck check(CheckName name, const SignedGraph& g, const CheckInputs& inputs) {
  GraphContext ctx(g);
  return check(name, ctx, inputs);
}

std::string describe(const SignedGraph& g) {
  std::string out = "V=" + std::to_string(g.vertex_count()) + " E=[";
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e > 0) out += " ";
    const SignedEdge& edge = g.edge(e);
    out += std::to_string(edge.tail) + "-" + std::to_string(edge.head) + to_char(edge.sign);
  }
  return out + "]";
}

// Lemire's rejection threshold: 2^64 mod bound.
std::uint64_t CorpusRandom::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("CorpusRandom::below: bound must be positive");
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine_();
    if (r >= threshold) return r % bound;
  }
}

std::vector<SignedGraph> generate_corpus(const CorpusSpec& spec) {
  std::vector<SignedGraph> out;
  for (std::size_t n = 1; n <= spec.exhaustive_vertices; ++n) {
    std::vector<SignedEdge> kinds;
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u; v < n; ++v) {
        kinds.push_back({u, v, Sign::kPositive});
        kinds.push_back({u, v, Sign::kNegative});
      }
    }
    for (std::size_t m = 0; m <= spec.exhaustive_edges; ++m) multisets(kinds, m, n, out);
  }
  if (spec.random_count > 0 && spec.random_vertices == 0) {
    throw InputError("random graphs need at least one vertex");
  }
  CorpusRandom rng(spec.seed);
  for (std::size_t k = 0; k < spec.random_count; ++k) {
    const std::size_t n = 1 + rng.below(spec.random_vertices);
    const std::size_t m = rng.below(spec.random_edges + 1);
    SignedGraph g(n);
    for (std::size_t e = 0; e < m; ++e) {
      const auto tail = static_cast<VertexId>(rng.below(n));
      const auto head = static_cast<VertexId>(rng.below(n));
      g.add_edge(tail, head, rng.below(2) == 0 ? Sign::kPositive : Sign::kNegative);
    }
    out.push_back(std::move(g));
  }
  return out;
}

bool SuiteReport::all_passed() const {
  return knight_move.status == Status::kPass &&
         std::all_of(tallies.begin(), tallies.end(), [](const CheckTally& t) { return t.fail == 0; });
}

SuiteReport run_suite(const CorpusSpec& spec, std::size_t jobs) {
  const std::vector<SignedGraph> corpus = generate_corpus(spec);
  std::vector<GraphResults> results(corpus.size());
  auto seed_for = [&](std::size_t index) { return spec.seed * 1'000'003ULL + index; };

  const std::size_t workers = std::min<std::size_t>(std::max<std::size_t>(jobs, 1), corpus.size());
  if (workers <= 1) {
    for (std::size_t k = 0; k < corpus.size(); ++k) results[k] = run_graph_checks(corpus[k], seed_for(k));
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t k = next++; k < corpus.size(); k = next++) {
          results[k] = run_graph_checks(corpus[k], seed_for(k));
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  SuiteReport report;
  report.spec = spec;
  report.graph_count = corpus.size();
  for (std::size_t c = 0; c + 1 < kAllChecks.size(); ++c) {
    CheckTally tally;
    tally.name = kAllChecks[c];
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      const PropertyCheck& r = results[k][c];
      switch (r.status) {
        case Status::kPass:
          ++tally.pass;
          break;
        case Status::kNotApplicable:
          ++tally.not_applicable;
          break;
        case Status::kFail:
          if (tally.fail++ == 0) {
            tally.first_failure = "graph #" + std::to_string(k) + " " + describe(corpus[k]) + ": " +
                                  r.diagnostic;
          }
          break;
      }
    }
    report.tallies.push_back(std::move(tally));
  }
  report.knight_move = check(CheckName::kKnightMoveFails, families::sp2());

  const std::array<std::pair<std::string, SignedGraph>, 2> named = {
      std::pair<std::string, SignedGraph>{"triangle(+,+,-)", families::sp3()},
      std::pair<std::string, SignedGraph>{"digon(+,-)", families::sp2()}};
  const auto euler_slot = static_cast<std::size_t>(CheckName::kEulerMatch);
  for (const auto& [label, g] : named) {
    const ShapeKey key = shape(g);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
      if (shape(corpus[k]) == key) {
        report.euler_samples.emplace_back(label, results[k][euler_slot].diagnostic);
        break;
      }
    }
  }
  return report;
}

std::string to_text(const SuiteReport& report) {
  const CorpusSpec& s = report.spec;
  std::string out = "corpus seed=" + std::to_string(s.seed) + " exhaustive V<=" +
                    std::to_string(s.exhaustive_vertices) + " E<=" + std::to_string(s.exhaustive_edges) +
                    " random " + std::to_string(s.random_count) + " V<=" +
                    std::to_string(s.random_vertices) + " E<=" + std::to_string(s.random_edges) + "\n";
  out += "graphs " + std::to_string(report.graph_count) + "\n";
  for (const CheckTally& t : report.tallies) {
    out += std::string(to_string(t.name)) + " pass=" + std::to_string(t.pass) +
           " fail=" + std::to_string(t.fail) + " not_applicable=" + std::to_string(t.not_applicable) + "\n";
    if (t.fail > 0) out += "  first failure: " + t.first_failure + "\n";
  }
  out += "KNIGHT_MOVE_FAILS digon(+,-) balanced " +
         std::string(report.knight_move.status == Status::kPass ? "counterexample found: "
                                                                : "no counterexample: ") +
         report.knight_move.diagnostic + "\n";
  for (const auto& [label, diagnostic] : report.euler_samples) {
    out += "EULER_MATCH " + label + ": " + diagnostic + "\n";
  }
  out += std::string("result ") + (report.all_passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  const CorpusSpec& s = report.spec;
  j["corpus"] = {{"seed", s.seed},
                 {"exhaustive_vertices", s.exhaustive_vertices},
                 {"exhaustive_edges", s.exhaustive_edges},
                 {"random_count", s.random_count},
                 {"random_vertices", s.random_vertices},
                 {"random_edges", s.random_edges}};
  j["graphs"] = report.graph_count;
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const CheckTally& t : report.tallies) {
    nlohmann::ordered_json c;
    c["name"] = to_string(t.name);
    c["pass"] = t.pass;
    c["fail"] = t.fail;
    c["not_applicable"] = t.not_applicable;
    if (t.fail > 0) c["first_failure"] = t.first_failure;
    checks.push_back(std::move(c));
  }
  j["checks"] = std::move(checks);
  j["knight_move"] = {{"status", to_string(report.knight_move.status)},
                      {"diagnostic", report.knight_move.diagnostic}};
  nlohmann::ordered_json samples = nlohmann::ordered_json::array();
  for (const auto& [label, diagnostic] : report.euler_samples) {
    samples.push_back({{"graph", label}, {"diagnostic", diagnostic}});
  }
  j["euler_samples"] = std::move(samples);
  j["result"] = report.all_passed() ? "PASS" : "FAIL";
  return j.dump();
}

}  // namespace schrom
