#include "grover/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "grover/bethe_spectrum.hpp"
#include "grover/periodicity.hpp"
#include "grover/report_json.hpp"
#include "grover/spectrum.hpp"
#include "grover/walk.hpp"

namespace grover::cli {

namespace {

Graph load_graph_input(const RunConfig& config) {
  if (config.bethe.has_value() == config.graph_path.has_value())
    throw std::invalid_argument("exactly one of --bethe or --graph is required");
  if (config.bethe) return bethe_graph(parse_bethe_spec(*config.bethe)).graph;
  std::ifstream in(*config.graph_path);
  if (!in) throw std::invalid_argument("cannot open graph file '" + *config.graph_path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_edge_list(buf.str());
}

BetheSpec require_bethe(const RunConfig& config) {
  if (!config.bethe) throw std::invalid_argument("--bethe is required for this command");
  if (config.graph_path) throw std::invalid_argument("--graph cannot be combined with --bethe");
  return parse_bethe_spec(*config.bethe);
}

void require_format(const RunConfig& config, std::string_view expected) {
  if (config.format != expected)
    throw std::invalid_argument(config.subcommand + " only supports --format " + std::string(expected));
}

Json coefficient_table(const std::vector<Polynomial>& polys) {
  Json arr = Json::array();
  for (const auto& p : polys) arr.push_back(to_json(p));
  return arr;
}

}  // namespace

int cmd_analyze(const RunConfig& config, std::ostream& out) {
  require_format(config, "json");
  const BetheSpec spec = require_bethe(config);
  const BetheTree tree = bethe_graph(spec);
  const std::size_t n = spec.levels();

  Json doc;
  doc["spec"] = spec.to_string();
  doc["levels"] = n;
  Json sizes = Json::array();
  for (std::size_t i = 0; i <= n; ++i) sizes.push_back(spec.level_size(i));
  doc["level_sizes"] = sizes;
  doc["vertex_count"] = tree.graph.vertex_count();
  doc["arc_count"] = tree.graph.arc_count();
  Json rates = Json::array();
  for (const auto& d : hopping_rates(spec)) rates.push_back(to_string(d));
  doc["hopping_rates"] = rates;
  doc["omega"] = branching_levels(spec);
  Json mults = Json::object();
  for (const auto& [i, m] : aperp_multiplicities(spec)) mults[std::to_string(i)] = m;
  doc["aperp_multiplicities"] = mults;
  doc["g"] = coefficient_table(g_sequence(spec));
  doc["p"] = coefficient_table(p_sequence(spec));

  const auto classification = classify_bethe(spec);
  const auto spectral = spectral_period_bethe(spec);
  doc["classification"] = to_json(classification);
  doc["spectral"] = to_json(spectral);

  Json checks;
  checks["p_equals_monic_g"] = verify_p_equals_monic_g(spec);
  checks["claim_path"] = claim_path_check(spec);
  checks["quotient_charpoly_matches_p"] = quotient_charpoly(spec) == p_sequence(spec)[n + 1];
  const auto eig = a_eigvec_recurrence_check(spec);
  checks["a_eigvec"] = {{"recurrence_ok", eig.recurrence_ok}, {"max_residual", eig.max_residual}, {"ok", eig.ok()}};
  bool eigenfunctions_ok = true;
  for (std::size_t age : branching_levels(spec))
    for (Vertex center : tree.partition.levels[n - age])
      eigenfunctions_ok = eigenfunctions_ok && verify_eigenfunction(tree, aperp_eigenfunction(tree, age, center));
  checks["aperp_eigenfunctions"] = eigenfunctions_ok;
  if (tree.graph.vertex_count() <= kDefaultCharpolyVertexLimit)
    checks["charpoly_factorization"] = charpoly_factorization_check(spec);
  else
    checks["charpoly_factorization"] = "skipped";
  doc["checks"] = checks;

  bool agree = classification.period() == spectral.period;
  if (config.confirm_bruteforce) {
    const std::uint64_t cap = config.cap.value_or(spectral.period ? 4 * *spectral.period : 1000);
    const auto found = bruteforce_period(build_grover(tree.graph), cap);
    BruteVerdict b{found ? BruteStatus::Period : BruteStatus::NoneWithinCap, found.value_or(0), cap};
    doc["bruteforce"] = to_json(b);
    agree = agree && found == spectral.period;
  }
  doc["agreement"] = agree;
  out << doc.dump(2) << '\n';
  return agree ? kSuccess : kDisagreement;
}

int cmd_simulate(const RunConfig& config, std::ostream& out) {
  require_format(config, "csv");
  const Graph g = load_graph_input(config);
  const GroverOperator u = build_grover(g);
  out << "time,vertex,probability\n";
  if (config.numeric) {
    if (g.arc_count() > config.dense_limit)
      throw std::invalid_argument("graph has " + std::to_string(g.arc_count()) + " arcs, numeric limit is " +
                                  std::to_string(config.dense_limit));
    NumericState s(g.arc_count(), 0.0);
    if (config.initial_arc >= s.size()) throw std::invalid_argument("initial arc out of range");
    s[config.initial_arc] = 1.0;
    out << std::setprecision(15);
    for (std::uint64_t t = 0; t <= config.steps; ++t) {
      if (t > 0) s = step(u, s);
      const auto dist = vertex_distribution(g, s);
      for (Vertex v = 0; v < dist.size(); ++v) out << t << ',' << v << ',' << dist[v] << '\n';
    }
    return kSuccess;
  }
  if (config.initial_arc >= g.arc_count()) throw std::invalid_argument("initial arc out of range");
  ExactState s = basis_state(g.arc_count(), config.initial_arc);
  for (std::uint64_t t = 0; t <= config.steps; ++t) {
    if (t > 0) s = step(u, s);
    const auto dist = vertex_distribution(g, s);
    for (Vertex v = 0; v < dist.size(); ++v) out << t << ',' << v << ',' << to_string(dist[v]) << '\n';
  }
  return kSuccess;
}

int cmd_enumerate(const RunConfig& config, std::ostream& out) {
  require_format(config, "json");
  const auto specs = enumerate_bethe(config.max_levels, config.max_degree, config.max_vertices);
  AgreementOptions options;
  options.cap = config.cap;
  options.run_bruteforce = true;

  std::vector<std::string> lines(specs.size());
  std::vector<char> agreed(specs.size(), 0);
  std::vector<char> periodic(specs.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < specs.size(); i = next++) {
      const auto report = verify_agreement(specs[i], options);
      Json j = to_json(report);
      // Keep lines compact: evidence is available via `analyze`.
      j["spectral"].erase("evidence");
      if (j.contains("graph_spectral")) j["graph_spectral"].erase("evidence");
      lines[i] = j.dump();
      agreed[i] = report.agreement;
      periodic[i] = report.spectral.periodic();
    }
  };
  const unsigned jobs = std::max(1u, config.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::size_t disagreements = 0, periodic_count = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    out << lines[i] << '\n';
    disagreements += agreed[i] ? 0 : 1;
    periodic_count += periodic[i] ? 1 : 0;
  }
  Json summary = {{"summary",
                   {{"specs", specs.size()},
                    {"periodic", periodic_count},
                    {"disagreements", disagreements},
                    {"bounds",
                     {{"max_levels", config.max_levels},
                      {"max_degree", config.max_degree},
                      {"max_vertices", config.max_vertices}}}}}};
  out << summary.dump() << '\n';
  return disagreements == 0 ? kSuccess : kDisagreement;
}

int cmd_spectrum(const RunConfig& config, std::ostream& out) {
  require_format(config, "json");
  const Graph g = load_graph_input(config);
  if (g.arc_count() > config.dense_limit)
    throw std::invalid_argument("graph has " + std::to_string(g.arc_count()) + " arcs, dense limit is " +
                                std::to_string(config.dense_limit));
  const Topology topo = betti_and_bipartite(g);
  const Polynomial chi = charpoly_exact(transition_matrix(g));
  const LiftedSpectrum lifted = lift_spectrum(chi, topo, g.arc_count());
  const auto numeric = numeric_spectrum(build_grover(g), config.dense_limit);
  const double mismatch = spectrum_mismatch(lifted.expand(), numeric);

  Json doc;
  doc["vertex_count"] = g.vertex_count();
  doc["edge_count"] = g.edge_count();
  doc["arc_count"] = g.arc_count();
  doc["betti"] = topo.betti;
  doc["bipartite"] = topo.bipartite;
  doc["charpoly_T"] = to_json(chi);
  doc["charpoly_T_text"] = chi.to_string("x");
  doc["lifted"] = to_json(lifted);
  Json num = Json::array();
  for (const auto& z : numeric) num.push_back({z.real(), z.imag()});
  doc["numeric"] = num;
  doc["max_mismatch"] = mismatch;
  doc["within_tolerance"] = mismatch < 1e-8;
  out << doc.dump(2) << '\n';
  return mismatch < 1e-8 ? kSuccess : kDisagreement;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact periodicity analysis of Grover walks on generalized Bethe trees", "grover-walk"};
  app.require_subcommand(1);
  RunConfig config;

  auto add_input = [&config](CLI::App* sub, bool graph_allowed) {
    auto* b = sub->add_option("--bethe", config.bethe, "Bethe degree sequence, e.g. 2,3,1");
    if (graph_allowed) {
      auto* g = sub->add_option("--graph", config.graph_path, "Edge-list file (0-based vertex pairs)");
      b->excludes(g);
    }
  };
  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--format", config.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--dense-limit", config.dense_limit, "Largest arc count for dense numerics");
  };

  auto* analyze = app.add_subcommand("analyze", "Quotient polynomials, transforms and period of a Bethe tree");
  add_input(analyze, false);
  add_common(analyze);
  analyze->add_option("--cap", config.cap, "Brute-force cap");
  analyze->add_flag("--confirm-bruteforce", config.confirm_bruteforce, "Confirm the period by exact powering");

  auto* simulate = app.add_subcommand("simulate", "Vertex distribution over time as CSV");
  add_input(simulate, true);
  add_common(simulate);
  simulate->add_option("--steps", config.steps, "Number of steps");
  simulate->add_option("--arc", config.initial_arc, "Arc carrying the initial unit amplitude");
  simulate->add_flag("--numeric", config.numeric, "Evolve in double precision");

  auto* enumerate = app.add_subcommand("enumerate", "Cross-check every Bethe spec within bounds");
  add_common(enumerate);
  enumerate->add_option("--max-levels", config.max_levels, "Largest number of levels n")->check(CLI::PositiveNumber);
  enumerate->add_option("--max-degree", config.max_degree, "Largest child count d(i)")->check(CLI::PositiveNumber);
  enumerate->add_option("--max-vertices", config.max_vertices, "Largest vertex count")->check(CLI::PositiveNumber);
  enumerate->add_option("--cap", config.cap, "Brute-force cap");
  enumerate->add_flag("--confirm-bruteforce", config.confirm_bruteforce, "Accepted; sweeps always confirm");
  enumerate->add_option("--jobs", config.jobs, "Worker threads");

  auto* spectrum = app.add_subcommand("spectrum", "Exact and numeric spectrum of the Grover operator");
  add_input(spectrum, true);
  add_common(spectrum);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*simulate) {
      config.subcommand = "simulate";
      if (simulate->count("--format") == 0) config.format = "csv";
      return cmd_simulate(config, out);
    }
    if (*analyze) {
      config.subcommand = "analyze";
      return cmd_analyze(config, out);
    }
    if (*enumerate) {
      config.subcommand = "enumerate";
      return cmd_enumerate(config, out);
    }
    config.subcommand = "spectrum";
    return cmd_spectrum(config, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace grover::cli
