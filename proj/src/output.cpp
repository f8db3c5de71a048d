#include "schrom/output.hpp"

#include <limits>

namespace schrom {
namespace {

Json integer_json(const Integer& n) {
  if (n <= std::numeric_limits<std::int64_t>::max()) return n.convert_to<std::int64_t>();
  return n.str();
}

Json coefficients_json(const IntPolynomial& p) {
  Json out = Json::array();
  for (std::int64_t c : p.coefficients()) out.push_back(c);
  return out;
}

}  // namespace

Json graph_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const SignedEdge& e : g.edges()) {
    edges.push_back({{"tail", e.tail}, {"head", e.head}, {"sign", std::string(1, to_char(e.sign))}});
  }
  return {{"vertices", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json cohomology_json(const SignedGraph& g, Variant v, const GradedCohomology& h) {
  Json groups = Json::array();
  for (const auto& e : h.entries()) {
    Json torsion = Json::array();
    for (const Integer& t : e.group.torsion) torsion.push_back(integer_json(t));
    groups.push_back(
        {{"i", e.i}, {"j", e.j}, {"free_rank", e.group.free_rank}, {"torsion", std::move(torsion)}});
  }
  return {{"graph", graph_json(g)}, {"variant", std::string(to_string(v))}, {"groups", std::move(groups)}};
}

std::string cohomology_text(const GradedCohomology& h, int max_i) {
  std::string out = "i j free_rank torsion\n";
  for (const auto& e : h.entries()) {
    std::string torsion;
    for (const Integer& t : e.group.torsion) torsion += (torsion.empty() ? "" : ",") + t.str();
    out += std::to_string(e.i) + " " + std::to_string(e.j) + " " + std::to_string(e.group.free_rank) +
           " [" + torsion + "]\n";
  }
  for (int i = 0; i <= max_i; ++i) {
    out += "H^" + std::to_string(i) + " = " + h.degree(i).to_string() + "\n";
  }
  return out;
}

Json polynomial_json(const ParityPolynomial& p) {
  return {{"odd", coefficients_json(p.odd)}, {"even", coefficients_json(p.even)}};
}

std::string per_vertex_notation(const SignedGraph& g, const EnhancedState& s) {
  std::string out = "(";
  for (std::size_t e = 0; e < g.edge_count(); ++e) out += s.subset.contains(e) ? '1' : '0';
  out += ", ";
  const ComponentStructure cs = components(g, s.subset);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += s.labels.at(cs.component_of[v]) == Label::kX ? 'x' : '1';
  }
  return out + ")";
}

}  // namespace schrom
