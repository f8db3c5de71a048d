#pragma once

#include <cstddef>
#include <vector>

#include "schrom/signed_graph.hpp"

// Named signed graphs used throughout the tests and the CLI.
namespace schrom::families {

/// Triangle v1v3 (+), v1v2 (+), v3v2 (-), with v1,v2,v3 as ids 0,1,2.
SignedGraph sp3();

/// Digon with edges (+, -) between vertices 0 and 1.
SignedGraph sp2();

/// m vertices, a negative loop on each of the first n.
SignedGraph sn(std::size_t m, std::size_t n);

/// Cycle on n vertices (edges i -- i+1, closing edge last) with the given signs.
/// n = 1 gives a loop, n = 2 a digon.
SignedGraph polygon(const std::vector<Sign>& signs);

/// Cycle on n vertices whose closing edge is the only negative edge.
SignedGraph unbalanced_polygon(std::size_t n);

/// Path 0 - 1 - ... - n with the given edge signs.
SignedGraph path(const std::vector<Sign>& signs);

/// Star with center 0 and one leaf per sign.
SignedGraph star(const std::vector<Sign>& signs);

/// Complete graph on n vertices, all edges positive.
SignedGraph complete(std::size_t n);

/// Two components: an unbalanced square with a diagonal
/// on vertices 0..3 and a balanced square on 4..7.
SignedGraph two_squares();

/// All 2^n sign vectors of length n, in binary counting order (+ = 0).
std::vector<std::vector<Sign>> all_sign_vectors(std::size_t n);

}  // namespace schrom::families
