#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "schrom/chromatic_polynomial.hpp"
#include "schrom/integer_homology.hpp"
#include "schrom/signed_graph.hpp"
#include "schrom/state_complex.hpp"

namespace schrom {

using Json = nlohmann::ordered_json;

/// {"vertices": N, "edges": [{"tail": u, "head": v, "sign": "+"}, ...]}
Json graph_json(const SignedGraph& g);

/// {"graph": ..., "variant": ..., "groups": [{"i","j","free_rank","torsion"}]},
/// groups sorted by (i, j).
Json cohomology_json(const SignedGraph& g, Variant v, const GradedCohomology& h);

/// One "i j free_rank torsion" row per nontrivial group, then one summary line
/// per cohomological degree such as "H^1 = Z_2{2} + Z{1}".
std::string cohomology_text(const GradedCohomology& h, int max_i);

/// {"odd": [...], "even": [...]} with ascending coefficients.
Json polynomial_json(const ParityPolynomial& p);

/// The enhanced state written per vertex: edge bits in edge order, then the
/// label of each vertex's component, e.g. "(100, x1x)".
std::string per_vertex_notation(const SignedGraph& g, const EnhancedState& s);

}  // namespace schrom
