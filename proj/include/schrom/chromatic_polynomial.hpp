#pragma once

#include <cstdint>
#include <string>

#include "schrom/polynomial.hpp"
#include "schrom/signed_graph.hpp"
#include "schrom/state_complex.hpp"

namespace schrom {

/// Signed chromatic polynomial: one polynomial in lambda valid for odd lambda
/// (colours -mu..mu) and one valid for even lambda (zero-free colours).
struct ParityPolynomial {
  IntPolynomial odd;
  IntPolynomial even;

  const IntPolynomial& branch_for(std::int64_t lambda) const { return lambda % 2 == 0 ? even : odd; }
  std::int64_t evaluate(std::int64_t lambda) const { return branch_for(lambda).evaluate(lambda); }

  friend ParityPolynomial operator*(const ParityPolynomial& a, const ParityPolynomial& b) {
    return {a.odd * b.odd, a.even * b.even};
  }
  friend bool operator==(const ParityPolynomial&, const ParityPolynomial&) = default;
};

/// Deletion-contraction on positive non-loop edges, switching an endpoint of
/// a negative edge first when no positive one is left.
ParityPolynomial chromatic_dc(const SignedGraph& g);

/// Sum over edge subsets s of (-1)^|s| Q_[SG:s].
ParityPolynomial chromatic_statesum(const SignedGraph& g);

/// Number of colourings that satisfy k(u) = sigma(e) k(v) on every edge:
/// lambda^b for odd lambda, and for even lambda the same if SG is balanced, else 0.
ParityPolynomial q_polynomial(const SignedGraph& g);

/// Ordinary chromatic polynomial of the underlying graph (signs ignored).
IntPolynomial unsigned_chromatic_polynomial(const SignedGraph& g);

enum class EulerSource { kChain, kCohomology };

/// Sum over i of (-1)^i qdim of C^i or of H^i.
IntPolynomial euler_polynomial(const SignedGraph& g, Variant v, EulerSource source);

/// The polynomial both Euler sources must equal: the matching chromatic
/// polynomial with lambda = 1 + q (odd branch for kChromatic, even branch for
/// kBalanced, the unsigned polynomial for kUnsigned).
IntPolynomial expected_euler(const SignedGraph& g, Variant v);

/// {"odd": ..., "even": ...} style one-line summary, ascending coefficients.
std::string to_string(const ParityPolynomial& p);

}  // namespace schrom
