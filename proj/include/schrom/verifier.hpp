#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schrom/integer_homology.hpp"
#include "schrom/signed_graph.hpp"
#include "schrom/state_complex.hpp"

namespace schrom {

enum class CheckName {
  kDSquared,
  kOrderIndependence,
  kSwitchInvariance,
  kEulerMatch,
  kCone,
  kLesRanks,
  kPendantShift,
  kPosLoopZero,
  kNegLoopBalanced,
  kParallelSameSign,
  kKunneth,
  kLowDegreeUnsigned,
  kKnightMoveFails,
};

inline constexpr std::array<CheckName, 13> kAllChecks = {
    CheckName::kDSquared,          CheckName::kOrderIndependence, CheckName::kSwitchInvariance,
    CheckName::kEulerMatch,        CheckName::kCone,              CheckName::kLesRanks,
    CheckName::kPendantShift,      CheckName::kPosLoopZero,       CheckName::kNegLoopBalanced,
    CheckName::kParallelSameSign,  CheckName::kKunneth,           CheckName::kLowDegreeUnsigned,
    CheckName::kKnightMoveFails,
};

/// "D_SQUARED", "ORDER_INDEPENDENCE", ...
std::string_view to_string(CheckName name);
std::optional<CheckName> parse_check(std::string_view name);

enum class Status { kPass, kFail, kNotApplicable };
std::string_view to_string(Status status);

struct PropertyCheck {
  CheckName name = CheckName::kDSquared;
  Status status = Status::kNotApplicable;
  std::string diagnostic;  // first offending bidegree or coefficient on FAIL
};

/// Optional inputs; each check falls back to a deterministic choice.
struct CheckInputs {
  std::optional<SignedGraph> partner;              // KUNNETH
  std::optional<std::size_t> edge;                 // CONE, LES_RANKS, PARALLEL_SAME_SIGN
  std::optional<VertexId> vertex;                  // SWITCH_INVARIANCE, PENDANT_SHIFT
  std::optional<std::vector<std::size_t>> order;  // ORDER_INDEPENDENCE
  std::uint64_t seed = 0;                          // picks the permutation when none is given
};

/// Lazily computed complexes and cohomology of one graph, shared by the checks
/// run on it. Not thread-safe; use one per task.
class GraphContext {
 public:
  explicit GraphContext(SignedGraph graph) : graph_(std::move(graph)) {}

  const SignedGraph& graph() const { return graph_; }
  const StateComplex& complex(Variant v);
  const GradedCohomology& cohomology(Variant v);

 private:
  SignedGraph graph_;
  std::array<std::optional<StateComplex>, 3> complexes_;
  std::array<std::optional<GradedCohomology>, 3> cohomology_;
};

PropertyCheck check(CheckName name, GraphContext& context, const CheckInputs& inputs = {});
PropertyCheck check(CheckName name, const SignedGraph& g, const CheckInputs& inputs = {});

/// Compact one-line form such as "V=3 E=[0-2+ 0-1+ 2-1-]".
std::string describe(const SignedGraph& g);

/// mt19937_64 with a bounded draw of its own; the standard distributions are
/// not reproducible across library implementations.
class CorpusRandom {
 public:
  explicit CorpusRandom(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

struct CorpusSpec {
  std::size_t exhaustive_vertices = 3;
  std::size_t exhaustive_edges = 4;
  std::size_t random_count = 200;
  std::size_t random_vertices = 5;
  std::size_t random_edges = 8;
  std::uint64_t seed = 42;
};

/// Every multiset of edges (u <= v, sign) on 1..exhaustive_vertices vertices
/// with at most exhaustive_edges edges, followed by random_count random graphs
/// with 1..random_vertices vertices and 0..random_edges edges.
std::vector<SignedGraph> generate_corpus(const CorpusSpec& spec);

struct CheckTally {
  CheckName name = CheckName::kDSquared;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t not_applicable = 0;
  std::string first_failure;  // graph and diagnostic of the first FAIL
};

struct SuiteReport {
  CorpusSpec spec;
  std::size_t graph_count = 0;
  std::vector<CheckTally> tallies;     // corpus checks in catalog order
  PropertyCheck knight_move;           // run on the two-vertex witness
  /// EULER_MATCH on corpus graphs that coincide with the named examples
  /// (up to edge order and orientation), as (name, diagnostic).
  std::vector<std::pair<std::string, std::string>> euler_samples;

  bool all_passed() const;
};

/// Runs every check except KNIGHT_MOVE_FAILS on every corpus graph, and
/// KNIGHT_MOVE_FAILS on its witness. jobs = 0 or 1 runs on the calling thread.
SuiteReport run_suite(const CorpusSpec& spec, std::size_t jobs = 1);

std::string to_text(const SuiteReport& report);
std::string to_json(const SuiteReport& report);

}  // namespace schrom
