// Command-line front end: cohomology tables, polynomials, Euler checks,
// property verification and state listings for signed graph files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schrom/chromatic_polynomial.hpp"
#include "schrom/coloring_oracle.hpp"
#include "schrom/graph_io.hpp"
#include "schrom/integer_homology.hpp"
#include "schrom/output.hpp"
#include "schrom/verifier.hpp"

namespace {

using namespace schrom;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

SignedGraph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_graph(text.str());
}

Variant variant_from(const std::string& name) {
  const auto v = parse_variant(name);
  if (!v) throw InputError("unknown variant '" + name + "'");
  return *v;
}

std::size_t jobs_from(std::size_t flag) {
  if (flag > 0) return flag;
  if (const char* env = std::getenv("SCHROM_JOBS")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError(std::string("SCHROM_JOBS is not a number: ") + env);
    }
  }
  return 1;
}

struct Options {
  std::string input;
  std::string variant = "chromatic";
  std::string format = "text";
  std::string method = "dc";
  std::int64_t lambda_max = 7;
  std::vector<std::string> checks;
  bool suite = false;
  CorpusSpec corpus;
  std::size_t jobs = 0;
  std::optional<int> state_i;
  std::optional<int> state_j;
};

int run_cohomology(const Options& o) {
  const SignedGraph g = load_graph(o.input);
  const Variant v = variant_from(o.variant);
  const GradedCohomology h = graded_cohomology(g, v);
  if (o.format == "json") {
    std::cout << cohomology_json(g, v, h).dump() << "\n";
  } else {
    std::cout << cohomology_text(h, static_cast<int>(g.edge_count()));
  }
  return kExitOk;
}

int run_polynomial(const Options& o) {
  const SignedGraph g = load_graph(o.input);
  if (o.method == "oracle") {
    if (o.lambda_max < 1) throw InputError("--lambda-max must be at least 1");
    Json counts = Json::array();
    std::string text = "lambda proper q\n";
    for (std::int64_t lambda = 1; lambda <= o.lambda_max; ++lambda) {
      const std::uint64_t proper = count_proper_colorings(g, lambda);
      const std::uint64_t q = count_q_colorings(g, lambda);
      counts.push_back({{"lambda", lambda}, {"proper", proper}, {"q", q}});
      text += std::to_string(lambda) + " " + std::to_string(proper) + " " + std::to_string(q) + "\n";
    }
    if (o.format == "json") {
      std::cout << Json{{"counts", std::move(counts)}}.dump() << "\n";
    } else {
      std::cout << text;
    }
    return kExitOk;
  }
  const ParityPolynomial p = o.method == "dc" ? chromatic_dc(g) : chromatic_statesum(g);
  const Json j = polynomial_json(p);
  if (o.format == "json") {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "odd " << j["odd"].dump() << "\neven " << j["even"].dump() << "\n";
  }
  return kExitOk;
}

int run_euler(const Options& o) {
  const SignedGraph g = load_graph(o.input);
  const Variant v = variant_from(o.variant);
  const IntPolynomial chain = euler_polynomial(g, v, EulerSource::kChain);
  const IntPolynomial cohomology = euler_polynomial(g, v, EulerSource::kCohomology);
  const IntPolynomial expected = expected_euler(g, v);
  const bool match = chain == cohomology && chain == expected;
  if (o.format == "json") {
    std::cout << Json{{"variant", std::string(to_string(v))},
                      {"chain", chain.coefficients()},
                      {"cohomology", cohomology.coefficients()},
                      {"polynomial", expected.coefficients()},
                      {"match", match}}
                     .dump()
              << "\n";
  } else {
    std::cout << "chain " << chain.to_string() << "\ncohomology " << cohomology.to_string()
              << "\npolynomial " << expected.to_string() << "\nmatch " << (match ? "yes" : "no")
              << "\n";
  }
  return match ? kExitOk : kExitCheckFailed;
}

int run_verify(const Options& o) {
  if (o.suite) {
    const SuiteReport report = run_suite(o.corpus, jobs_from(o.jobs));
    std::cout << (o.format == "json" ? to_json(report) + "\n" : to_text(report));
    return report.all_passed() ? kExitOk : kExitCheckFailed;
  }
  if (o.input.empty()) throw InputError("verify needs --input or --suite");
  std::vector<CheckName> names;
  for (const std::string& n : o.checks) {
    const auto c = parse_check(n);
    if (!c) throw InputError("unknown check '" + n + "'");
    names.push_back(*c);
  }
  if (names.empty()) names.assign(kAllChecks.begin(), kAllChecks.end());

  GraphContext ctx(load_graph(o.input));
  bool failed = false;
  Json results = Json::array();
  std::string text;
  for (CheckName n : names) {
    const PropertyCheck r = check(n, ctx);
    failed |= r.status == Status::kFail;
    results.push_back({{"check", std::string(to_string(n))},
                       {"status", std::string(to_string(r.status))},
                       {"diagnostic", r.diagnostic}});
    text += std::string(to_string(n)) + " " + std::string(to_string(r.status));
    if (!r.diagnostic.empty()) text += " " + r.diagnostic;
    text += "\n";
  }
  if (o.format == "json") {
    std::cout << Json{{"graph", graph_json(ctx.graph())}, {"results", std::move(results)}}.dump() << "\n";
  } else {
    std::cout << text;
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int run_states(const Options& o) {
  const SignedGraph g = load_graph(o.input);
  const StateComplex c(g, variant_from(o.variant));
  for (int i = 0; i <= c.max_i(); ++i) {
    if (o.state_i && *o.state_i != i) continue;
    for (int j = 0; j <= c.max_j(); ++j) {
      if (o.state_j && *o.state_j != j) continue;
      const std::vector<EnhancedState> basis = c.basis(i, j);
      if (basis.empty()) continue;
      std::cout << "C^(" << i << "," << j << ") rank " << basis.size() << ":";
      for (const EnhancedState& s : basis) std::cout << " " << per_vertex_notation(g, s);
      std::cout << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chromatic cohomology of signed graphs"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads for the suite (default: SCHROM_JOBS or 1)");

  const auto formats = CLI::IsMember({"text", "json"});
  const auto variants = CLI::IsMember({"chromatic", "balanced", "unsigned"});

  auto* cohomology = app.add_subcommand("cohomology", "Table of H^{i,j}");
  cohomology->add_option("--variant", o.variant)->required()->check(variants);
  cohomology->add_option("--input", o.input, "Graph file")->required();
  cohomology->add_option("--format", o.format)->check(formats);

  auto* polynomial = app.add_subcommand("polynomial", "Signed chromatic polynomial");
  polynomial->add_option("--method", o.method)->check(CLI::IsMember({"dc", "statesum", "oracle"}));
  polynomial->add_option("--input", o.input, "Graph file")->required();
  polynomial->add_option("--lambda-max", o.lambda_max, "Largest lambda for the oracle");
  polynomial->add_option("--format", o.format)->check(formats);

  auto* euler = app.add_subcommand("euler", "Euler polynomial from chains and from cohomology");
  euler->add_option("--variant", o.variant)->required()->check(variants);
  euler->add_option("--input", o.input, "Graph file")->required();
  euler->add_option("--format", o.format)->check(formats);

  auto* verify = app.add_subcommand("verify", "Run property checks on a graph or a corpus");
  auto* verify_input = verify->add_option("--input", o.input, "Graph file");
  verify->add_option("--check", o.checks, "Check name, repeatable (default: all)");
  auto* suite = verify->add_flag("--suite", o.suite, "Run the corpus suite");
  suite->excludes(verify_input);
  verify->add_option("--seed", o.corpus.seed);
  verify->add_option("--max-vertices", o.corpus.random_vertices, "Vertex bound for random graphs");
  verify->add_option("--max-edges", o.corpus.random_edges, "Edge bound for random graphs");
  verify->add_option("--random", o.corpus.random_count, "Number of random graphs");
  verify->add_option("--exhaustive-vertices", o.corpus.exhaustive_vertices);
  verify->add_option("--exhaustive-edges", o.corpus.exhaustive_edges);
  verify->add_option("--format", o.format)->check(formats);

  auto* states = app.add_subcommand("states", "List enhanced states in per-vertex notation");
  states->add_option("--variant", o.variant)->check(variants);
  states->add_option("--input", o.input, "Graph file")->required();
  states->add_option("--i", o.state_i, "Only this cohomological degree");
  states->add_option("--j", o.state_j, "Only this internal degree");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (cohomology->parsed()) return run_cohomology(o);
    if (polynomial->parsed()) return run_polynomial(o);
    if (euler->parsed()) return run_euler(o);
    if (verify->parsed()) return run_verify(o);
    if (states->parsed()) return run_states(o);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const OracleBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitInputError;
}
