#include <doctest.h>

#include "schrom/chromatic_polynomial.hpp"
#include "schrom/graph_families.hpp"
#include "test_support.hpp"

using namespace schrom;
using namespace schrom::testing;

namespace {

constexpr std::array<Variant, 3> kVariants = {Variant::kUnsigned, Variant::kChromatic, Variant::kBalanced};

// (x - 1)^n * x^m, ascending
IntPolynomial shifted_power(unsigned m, unsigned n) {
  return IntPolynomial::monomial(m) * IntPolynomial{-1, 1}.pow(n);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const IntPolynomial p{1, -3, 0, 1};
  CHECK(p.to_string() == "q^3 - 3q + 1");
  CHECK(IntPolynomial{}.to_string() == "0");
  CHECK(IntPolynomial{0, -1}.to_string("x") == "-x");
  CHECK(IntPolynomial{-2}.to_string() == "-2");
  CHECK(IntPolynomial{1, 0, 0}.degree() == 0);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(p.evaluate(2) == 3);
  CHECK(p.coefficient(7) == 0);
  CHECK(IntPolynomial{0, 1}.shifted(1) == IntPolynomial{1, 1});
  CHECK(IntPolynomial{-1, 3, -3, 1}.shifted(1) == IntPolynomial::monomial(3));
  CHECK(IntPolynomial{1, 1}.pow(3) == IntPolynomial{1, 3, 3, 1});
  CHECK(IntPolynomial{1, 1}.pow(0) == IntPolynomial{1});
  CHECK((p - p).is_zero());
  CHECK(-p + p == IntPolynomial{});
  CHECK(IntPolynomial{1, 1} * IntPolynomial{-1, 1} == IntPolynomial{-1, 0, 1});
}

TEST_CASE("shifting agrees with evaluation") {
  CorpusRandom rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::int64_t> coeffs(1 + rng.below(5));
    for (auto& c : coeffs) c = static_cast<std::int64_t>(rng.below(11)) - 5;
    const IntPolynomial p(coeffs);
    const auto s = static_cast<std::int64_t>(rng.below(5)) - 2;
    for (std::int64_t x = -3; x <= 3; ++x) CHECK(p.shifted(s).evaluate(x) == p.evaluate(x + s));
  }
}

TEST_CASE("chromatic polynomial examples") {
  SUBCASE("triangle with one negative edge") {
    const ParityPolynomial p = chromatic_dc(families::sp3());
    CHECK(p.odd == IntPolynomial{-1, 3, -3, 1});
    CHECK(p.even == IntPolynomial{0, 3, -3, 1});
    CHECK(chromatic_statesum(families::sp3()) == p);
  }
  SUBCASE("positive triangle") {
    const ParityPolynomial p = chromatic_dc(families::complete(3));
    CHECK(p.odd == IntPolynomial{0, 2, -3, 1});
    CHECK(p.even == p.odd);
    CHECK(unsigned_chromatic_polynomial(families::sp3()) == p.odd);
  }
  SUBCASE("digon") {
    const ParityPolynomial p = chromatic_statesum(families::sp2());
    CHECK(p.odd == IntPolynomial{1, -2, 1});
    CHECK(p.even == IntPolynomial{0, -2, 1});
  }
  SUBCASE("negative loops") {
    for (unsigned m = 0; m <= 4; ++m) {
      for (unsigned n = 0; n <= m; ++n) {
        const ParityPolynomial p = chromatic_dc(families::sn(m, n));
        CHECK(p.odd == shifted_power(m - n, n));
        CHECK(p.even == IntPolynomial::monomial(m));
      }
    }
  }
  SUBCASE("positive loop") {
    const SignedGraph g(2, {{0, 1, kMinus}, {1, 1, kPlus}});
    CHECK(chromatic_dc(g) == ParityPolynomial{});
    CHECK(chromatic_statesum(g) == ParityPolynomial{});
  }
}

TEST_CASE("zero-free colouring counts") {
  CHECK(q_polynomial(families::two_squares()) == ParityPolynomial{IntPolynomial{0, 1}, IntPolynomial{}});
  CHECK(q_polynomial(families::sn(2, 2)) == ParityPolynomial{IntPolynomial{1}, IntPolynomial{}});
  CHECK(q_polynomial(families::complete(3)) ==
        ParityPolynomial{IntPolynomial{0, 1}, IntPolynomial{0, 1}});
  CHECK(q_polynomial(SignedGraph(3)) ==
        ParityPolynomial{IntPolynomial::monomial(3), IntPolynomial::monomial(3)});
}

TEST_CASE("euler characteristic examples") {
  CHECK(euler_polynomial(families::sp3(), Variant::kChromatic, EulerSource::kCohomology) ==
        IntPolynomial::monomial(3));
  CHECK(euler_polynomial(families::sp3(), Variant::kBalanced, EulerSource::kCohomology) ==
        IntPolynomial{1, 0, 0, 1});
  CHECK(euler_polynomial(families::sp2(), Variant::kBalanced, EulerSource::kChain) == IntPolynomial{-1, 0, 1});
  CHECK(euler_polynomial(families::sp2(), Variant::kBalanced, EulerSource::kCohomology) ==
        IntPolynomial{-1, 0, 1});
  CHECK(expected_euler(families::sp3(), Variant::kUnsigned) == IntPolynomial{0, -1, 0, 1});
}

TEST_CASE("deletion-contraction equals the state sum") {
  std::vector<SignedGraph> graphs = exhaustive_graphs(3, 4);
  for (const SignedGraph& g : random_graphs(200, 5, 8, 42)) graphs.push_back(g);
  for (const SignedGraph& g : graphs) CHECK_MESSAGE(chromatic_dc(g) == chromatic_statesum(g), describe(g));
}

TEST_CASE("chromatic polynomial is switching invariant") {
  for (const SignedGraph& g : random_graphs(80, 5, 7, 47)) {
    const ParityPolynomial p = chromatic_dc(g);
    for (VertexId v = 0; v < g.vertex_count(); ++v) CHECK(chromatic_statesum(vertex_switch(g, v)) == p);
  }
}

TEST_CASE("chromatic polynomial is multiplicative under disjoint union") {
  const auto graphs = random_graphs(40, 3, 4, 53);
  for (std::size_t k = 0; k + 1 < graphs.size(); k += 2) {
    const SignedGraph& a = graphs[k];
    const SignedGraph& b = graphs[k + 1];
    CHECK(chromatic_dc(disjoint_union(a, b)) == chromatic_dc(a) * chromatic_dc(b));
    CHECK(q_polynomial(disjoint_union(a, b)) == q_polynomial(a) * q_polynomial(b));
  }
}

TEST_CASE("a positive loop kills the polynomial") {
  for (const SignedGraph& g : random_graphs(40, 4, 5, 59)) {
    SignedGraph h = g;
    h.add_edge(0, 0, kPlus);
    CHECK(chromatic_dc(h) == ParityPolynomial{});
    CHECK(chromatic_statesum(h) == ParityPolynomial{});
  }
}

TEST_CASE("euler characteristic matches the chromatic polynomial in every variant") {
  std::vector<SignedGraph> graphs = exhaustive_graphs(3, 3);
  for (const SignedGraph& g : random_graphs(60, 5, 7, 61)) graphs.push_back(g);
  for (const SignedGraph& g : graphs) {
    for (Variant v : kVariants) {
      const IntPolynomial expected = expected_euler(g, v);
      CHECK_MESSAGE(euler_polynomial(g, v, EulerSource::kChain) == expected, describe(g), " ", to_string(v));
      CHECK_MESSAGE(euler_polynomial(g, v, EulerSource::kCohomology) == expected, describe(g), " ", to_string(v));
    }
  }
}

TEST_CASE("parity polynomial summary") {
  const std::string s = to_string(chromatic_dc(families::sp2()));
  CHECK(s.find("odd") != std::string::npos);
  CHECK(s.find("even") != std::string::npos);
  CHECK(chromatic_dc(families::sp2()).evaluate(3) == 4);
  CHECK(chromatic_dc(families::sp2()).evaluate(4) == 8);
}
