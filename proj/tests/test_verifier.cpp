#include <doctest.h>

#include <set>

#include "schrom/graph_families.hpp"
#include "schrom/verifier.hpp"
#include "test_support.hpp"

using namespace schrom;
using namespace schrom::testing;

TEST_CASE("check names round trip") {
  std::set<std::string_view> seen;
  for (CheckName name : kAllChecks) {
    CHECK(parse_check(to_string(name)) == name);
    seen.insert(to_string(name));
  }
  CHECK(seen.size() == kAllChecks.size());
  CHECK_FALSE(parse_check("d_squared").has_value());
  CHECK(to_string(Status::kNotApplicable) == "NOT_APPLICABLE");
}

TEST_CASE("every check passes on the triangle and the digon") {
  for (const SignedGraph& g : {families::sp3(), families::sp2()}) {
    GraphContext ctx(g);
    for (CheckName name : kAllChecks) {
      if (name == CheckName::kKnightMoveFails) continue;
      const PropertyCheck r = check(name, ctx);
      CHECK_MESSAGE(r.status != Status::kFail, to_string(name), ": ", r.diagnostic);
    }
  }
}

TEST_CASE("pendant edge on a two-edge star") {
  const SignedGraph st = families::star({kPlus, kMinus});
  CHECK(check(CheckName::kPendantShift, st).status == Status::kPass);
  CHECK(check(CheckName::kPendantShift, st, {.vertex = VertexId{0}}).status == Status::kNotApplicable);
  const GradedCohomology h = graded_cohomology(st, Variant::kChromatic);
  CHECK(h.degree(0).to_string() == "Z{3} + Z{2}");
  CHECK(h.degrees().size() == 1);
}

TEST_CASE("loops") {
  const SignedGraph positive(2, {{0, 1, kMinus}, {1, 1, kPlus}});
  CHECK(check(CheckName::kPosLoopZero, positive).status == Status::kPass);
  CHECK(check(CheckName::kNegLoopBalanced, families::sn(2, 1)).status == Status::kPass);
  CHECK(check(CheckName::kNegLoopBalanced, families::sn(2, 2), {.edge = std::size_t{1}}).status ==
        Status::kPass);
  CHECK(check(CheckName::kNegLoopBalanced, families::sp2()).status == Status::kNotApplicable);
  CHECK(check(CheckName::kPosLoopZero, families::sp3()).status == Status::kNotApplicable);
}

TEST_CASE("kunneth on two negative loops") {
  const SignedGraph loop = families::sn(1, 1);
  const PropertyCheck r = check(CheckName::kKunneth, loop, {.partner = loop});
  CHECK(r.status == Status::kPass);
  const GradedCohomology h = graded_cohomology(disjoint_union(loop, loop), Variant::kChromatic);
  CHECK(h.at(0, 2) == AbelianGroup::free(1));
  CHECK(h.entries().size() == 1);
  // torsion on both sides exercises the Tor term
  CHECK(check(CheckName::kKunneth, families::sp3(), {.partner = families::sp3()}).status == Status::kPass);
}

TEST_CASE("parallel edges") {
  const SignedGraph twins(2, {{0, 1, kMinus}, {1, 0, kMinus}, {0, 0, kMinus}});
  CHECK(check(CheckName::kParallelSameSign, twins).status == Status::kPass);
  CHECK(check(CheckName::kParallelSameSign, families::sp2()).status == Status::kNotApplicable);
}

TEST_CASE("not applicable cases") {
  CHECK(check(CheckName::kPendantShift, families::sp3()).status == Status::kNotApplicable);
  CHECK(check(CheckName::kLowDegreeUnsigned, families::sn(1, 1)).status == Status::kNotApplicable);
  CHECK(check(CheckName::kCone, families::sn(2, 2)).status == Status::kNotApplicable);
  CHECK(check(CheckName::kLesRanks, families::sp3(), {.edge = std::size_t{2}}).status == Status::kNotApplicable);
  CHECK(check(CheckName::kOrderIndependence, families::sn(1, 1)).status == Status::kNotApplicable);
  CHECK(check(CheckName::kSwitchInvariance, SignedGraph(0)).status == Status::kNotApplicable);
}

TEST_CASE("explicit inputs") {
  CHECK(check(CheckName::kOrderIndependence, families::sp3(), {.order = std::vector<std::size_t>{2, 1, 0}})
            .status == Status::kPass);
  CHECK(check(CheckName::kCone, families::sp3(), {.edge = std::size_t{1}}).status == Status::kPass);
  CHECK(check(CheckName::kSwitchInvariance, families::sp3(), {.vertex = VertexId{2}}).status == Status::kPass);
}

TEST_CASE("euler diagnostics name every variant") {
  const PropertyCheck r = check(CheckName::kEulerMatch, families::sp3());
  REQUIRE(r.status == Status::kPass);
  CHECK(r.diagnostic.find("chromatic q^3;") != std::string::npos);
  CHECK(r.diagnostic.find("balanced q^3 + 1") != std::string::npos);
  CHECK(r.diagnostic.find("unsigned q^3 - q") != std::string::npos);
}

TEST_CASE("knight move") {
  const PropertyCheck r = check(CheckName::kKnightMoveFails, families::sp2());
  CHECK(r.status == Status::kPass);
  CHECK(r.diagnostic.find("H_b^(0,1) has rank 1") != std::string::npos);
  // no rational balanced cohomology at all, so no counterexample
  const SignedGraph positive(1, {{0, 0, kPlus}});
  CHECK(check(CheckName::kKnightMoveFails, positive).status == Status::kFail);
}

TEST_CASE("describe") {
  CHECK(describe(families::sp3()) == "V=3 E=[0-2+ 0-1+ 2-1-]");
  CHECK(describe(SignedGraph(2)) == "V=2 E=[]");
}

TEST_CASE("corpus random draws") {
  CorpusRandom a(9);
  CorpusRandom b(9);
  std::array<int, 3> hist{};
  for (int k = 0; k < 3000; ++k) {
    const std::uint64_t x = a.below(3);
    CHECK(x == b.below(3));
    REQUIRE(x < 3);
    ++hist[x];
  }
  for (int count : hist) CHECK(count > 800);
  CHECK(a.below(1) == 0);
  CHECK_THROWS_AS(a.below(0), InputError);
}

TEST_CASE("corpus shape") {
  const auto corpus = generate_corpus(CorpusSpec{});
  CHECK(corpus.size() == 2245);
  CHECK(generate_corpus(CorpusSpec{}) == corpus);
  // one vertex: 2 kinds; two vertices: 6 kinds; three vertices: 12 kinds; multisets up to size 4
  CHECK(exhaustive_graphs(1, 4).size() == 15);
  CHECK(exhaustive_graphs(2, 4).size() == 15 + 210);
  for (std::size_t k = exhaustive_graphs(3, 4).size(); k < corpus.size(); ++k) {
    CHECK(corpus[k].vertex_count() >= 1);
    CHECK(corpus[k].vertex_count() <= 5);
    CHECK(corpus[k].edge_count() <= 8);
  }
  CorpusSpec other;
  other.seed = 43;
  CHECK(generate_corpus(other) != corpus);
}

TEST_CASE("an empty corpus gives an empty report") {
  CorpusSpec spec;
  spec.exhaustive_vertices = 0;
  spec.random_count = 0;
  const SuiteReport report = run_suite(spec);
  CHECK(report.graph_count == 0);
  for (const CheckTally& t : report.tallies) CHECK(t.pass + t.fail + t.not_applicable == 0);
  CHECK(report.euler_samples.empty());
  CHECK(report.knight_move.status == Status::kPass);
}

TEST_CASE("suite on a small corpus is deterministic across thread counts") {
  CorpusSpec spec;
  spec.exhaustive_vertices = 2;
  spec.exhaustive_edges = 3;
  spec.random_count = 20;
  spec.random_vertices = 4;
  spec.random_edges = 5;
  spec.seed = 7;
  const SuiteReport one = run_suite(spec, 1);
  const SuiteReport two = run_suite(spec, 3);
  CHECK(one.all_passed());
  CHECK(to_text(one) == to_text(two));
  CHECK(to_json(one) == to_json(two));
  CHECK(one.tallies.size() == kAllChecks.size() - 1);
  REQUIRE(one.euler_samples.size() == 1);
  CHECK(one.euler_samples[0].first == "digon(+,-)");
  CHECK(to_text(one).find("result PASS") != std::string::npos);
}
