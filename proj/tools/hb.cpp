// hb: exact computation for proportion-based hypergraph burning.
//
// Exit codes: 0 success, 2 validation failure, 3 search budget exhausted,
// 64 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperburn/bounds.hpp"
#include "hyperburn/designs.hpp"
#include "hyperburn/distribution.hpp"
#include "hyperburn/propagation.hpp"
#include "hyperburn/solvers.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;
constexpr int kExitUsage = 64;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw hb::ParseError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

hb::SolveLimits make_limits(std::uint64_t budget_flag) {
  hb::SolveLimits lim;
  if (const char* env = std::getenv("HB_NODE_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) lim.node_budget = v;
  }
  if (budget_flag > 0) lim.node_budget = budget_flag;
  return lim;
}

nlohmann::json result_json(const hb::LazyResult& r) {
  nlohmann::json j;
  j["kind"] = "lazy";
  j["status"] = r.status == hb::SolveStatus::Exact
                    ? "exact"
                    : (r.status == hb::SolveStatus::Interval ? "interval" : "cap-exceeded");
  if (r.exact()) j["value"] = r.upper;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["witness"] = r.witness;
  j["nodes"] = r.nodes;
  return j;
}

nlohmann::json result_json(const hb::BurnResult& r) {
  nlohmann::json j;
  j["kind"] = "burning";
  j["status"] = r.status == hb::SolveStatus::Exact
                    ? "exact"
                    : (r.status == hb::SolveStatus::Interval ? "interval" : "cap-exceeded");
  if (r.exact()) j["value"] = r.upper;
  j["lower"] = r.lower;
  j["upper"] = r.upper;
  j["witness"] = r.witness;
  j["nodes"] = r.nodes;
  return j;
}

std::string design_label(const hb::Design& d) {
  return "(" + std::to_string(d.v) + "," + std::to_string(d.k) + "," + std::to_string(d.lambda) +
         ") " + d.name;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact proportion-based hypergraph burning"};
  app.require_subcommand(1);

  std::string p_text;
  std::string input_path = "-";
  std::string corpus_path;
  bool json_out = false;
  bool show_witness = false;
  bool show_trace = false;
  bool use_brute = false;
  std::uint64_t budget_flag = 0;
  int threads = 1;
  int arg_v = 0, arg_k = 0, arg_lambda = 0;

  auto add_common = [&](CLI::App* cmd, bool needs_p) {
    if (needs_p) cmd->add_option("-p,--proportion", p_text, "proportion in (0,1), e.g. 2/3 or 0.4")
                     ->required();
    cmd->add_option("file", input_path, "hypergraph file ('-' for standard input)");
    cmd->add_flag("--json", json_out, "machine-readable output");
    cmd->add_option("--budget", budget_flag, "search node budget (overrides HB_NODE_BUDGET)");
    cmd->add_option("--threads", threads, "worker count; results do not depend on it");
  };

  CLI::App* lazy_cmd = app.add_subcommand("lazy", "lazy burning number");
  add_common(lazy_cmd, true);
  lazy_cmd->add_flag("--witness", show_witness, "print value, witness and search stats");

  CLI::App* burn_cmd = app.add_subcommand("burn", "round-based burning number");
  add_common(burn_cmd, true);
  burn_cmd->add_flag("--witness", show_witness, "print value, witness and search stats");
  burn_cmd->add_flag("--trace", show_trace, "print the witness game round by round");

  CLI::App* dist_cmd = app.add_subcommand("dist", "burning distribution over p in (0,1)");
  add_common(dist_cmd, false);

  CLI::App* lazydist_cmd = app.add_subcommand("lazydist", "lazy burning distribution");
  add_common(lazydist_cmd, false);

  CLI::App* validate_cmd = app.add_subcommand("validate-bibd", "check a block design");
  validate_cmd->add_option("-v", arg_v, "point count")->required();
  validate_cmd->add_option("-k", arg_k, "block size")->required();
  validate_cmd->add_option("-l,--lambda", arg_lambda, "pair coverage")->required();
  validate_cmd->add_option("file", input_path, "hypergraph file ('-' for standard input)");
  validate_cmd->add_flag("--json", json_out, "machine-readable output");

  CLI::App* aut_cmd = app.add_subcommand("aut", "incidence automorphism group order");
  aut_cmd->add_option("file", input_path, "hypergraph file ('-' for standard input)");
  aut_cmd->add_flag("--brute", use_brute, "exhaustive permutation scan (v <= 10)");
  aut_cmd->add_flag("--json", json_out, "machine-readable output");

  CLI::App* gen_cmd = app.add_subcommand("gen", "emit a generated hypergraph");
  gen_cmd->require_subcommand(1);
  int gen_k = 0, gen_n = 0;
  std::string gen_name;
  CLI::App* gen_tp = gen_cmd->add_subcommand("tight-path", "k-uniform tight path");
  gen_tp->add_option("k", gen_k)->required();
  gen_tp->add_option("n", gen_n)->required();
  CLI::App* gen_nested = gen_cmd->add_subcommand("nested", "nested chain of prefixes");
  gen_nested->add_option("n", gen_n)->required();
  CLI::App* gen_single = gen_cmd->add_subcommand("single-edge", "one edge on all vertices");
  gen_single->add_option("k", gen_k)->required();
  CLI::App* gen_fig = gen_cmd->add_subcommand("figure", "fixed fixture by name");
  gen_fig->add_option("name", gen_name, "fig1|fig2|fig4|fig5")->required();

  CLI::App* probe_cmd = app.add_subcommand("probe", "randomized conjecture probes");
  std::string probe_name;
  int trials = 100;
  std::uint64_t seed = 1;
  hb::RandomHypergraphParams gen_params;
  probe_cmd->add_option("name", probe_name, "interval-containment|ceil-pv|nonmonotone-gap")
      ->required();
  probe_cmd->add_option("--trials", trials, "number of sampled hypergraphs");
  probe_cmd->add_option("--seed", seed, "base seed");
  probe_cmd->add_option("--n", gen_params.n, "vertices per sample");
  probe_cmd->add_option("--m", gen_params.m, "edges per sample");
  probe_cmd->add_option("--size-lo", gen_params.size_lo, "smallest edge size");
  probe_cmd->add_option("--size-hi", gen_params.size_hi, "largest edge size");
  probe_cmd->add_option("--budget", budget_flag, "search node budget");
  probe_cmd->add_option("--threads", threads, "worker count");

  CLI::App* tables_cmd = app.add_subcommand("report-tables",
                                            "condensed distributions and group orders for the "
                                            "shipped design corpus");
  tables_cmd->add_option("--corpus", corpus_path, "additional corpus file to include");
  tables_cmd->add_option("--budget", budget_flag, "search node budget");
  tables_cmd->add_option("--threads", threads, "worker count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    hb::SolveLimits limits = make_limits(budget_flag);

    if (lazy_cmd->parsed()) {
      hb::Hypergraph h = hb::parse_hypergraph(read_input(input_path));
      hb::Proportion p = hb::Proportion::parse(p_text);
      hb::LazyResult r = hb::lazy_burning_number(h, p, limits);
      if (json_out)
        std::cout << result_json(r).dump() << "\n";
      else if (show_witness)
        std::cout << hb::serialize_result(r) << "\n";
      else if (r.exact())
        std::cout << r.value() << "\n";
      else
        std::cout << r.lower << ".." << r.upper << "\n";
      return r.exact() ? 0 : kExitBudget;
    }

    if (burn_cmd->parsed()) {
      hb::Hypergraph h = hb::parse_hypergraph(read_input(input_path));
      hb::Proportion p = hb::Proportion::parse(p_text);
      hb::BurnResult r = hb::burning_number(h, p, limits);
      if (json_out)
        std::cout << result_json(r).dump() << "\n";
      else if (show_witness)
        std::cout << hb::serialize_result(r) << "\n";
      else if (r.exact())
        std::cout << r.value() << "\n";
      else
        std::cout << r.lower << ".." << r.upper << "\n";
      if (show_trace && !r.witness.empty()) {
        hb::RoundOutcome outcome = hb::simulate_round_game(h, p, r.witness);
        std::cout << hb::format_trace(outcome, r.witness);
      }
      return r.exact() ? 0 : kExitBudget;
    }

    if (dist_cmd->parsed() || lazydist_cmd->parsed()) {
      hb::Hypergraph h = hb::parse_hypergraph(read_input(input_path));
      hb::DistKind kind = dist_cmd->parsed() ? hb::DistKind::Burning : hb::DistKind::Lazy;
      hb::Distribution d = hb::compute_distribution(h, kind, limits, threads);
      std::cout << (json_out ? hb::to_json(d) : hb::condensed_text(d)) << "\n";
      return d.all_exact() ? 0 : kExitBudget;
    }

    if (validate_cmd->parsed()) {
      hb::Hypergraph h = hb::parse_hypergraph(read_input(input_path));
      hb::Design d = hb::validate_bibd(h, arg_v, arg_k, arg_lambda);
      if (json_out) {
        nlohmann::json j{{"valid", true}, {"v", d.v},   {"k", d.k},
                         {"lambda", d.lambda},          {"r", d.r},
                         {"b", d.b}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "valid BIBD(" << d.v << "," << d.k << "," << d.lambda << ") r=" << d.r
                  << " b=" << d.b << "\n";
      }
      return 0;
    }

    if (aut_cmd->parsed()) {
      hb::Hypergraph h = hb::parse_hypergraph(read_input(input_path));
      hb::AutResult r = use_brute ? hb::automorphism_order_brute(h) : hb::automorphism_order(h);
      if (json_out) {
        nlohmann::json j{{"order", r.order_str()},
                         {"point_permutations", r.point_stabilizer_count},
                         {"multiplicity_factor", hb::u128_to_string(r.multiplicity_factor)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << r.order_str() << "\n";
      }
      return 0;
    }

    if (gen_cmd->parsed()) {
      hb::Hypergraph h = gen_tp->parsed()       ? hb::gen_tight_path(gen_k, gen_n)
                         : gen_nested->parsed() ? hb::gen_nested_chain(gen_n)
                         : gen_single->parsed() ? hb::gen_single_edge(gen_k)
                                                : hb::gen_figure(gen_name);
      std::cout << hb::serialize_hypergraph(h);
      return 0;
    }

    if (probe_cmd->parsed()) {
      std::vector<hb::PropertyReport> reports;
      if (probe_name == "interval-containment")
        reports = hb::probe_conjecture_interval_containment(gen_params, trials, seed, limits,
                                                            threads);
      else if (probe_name == "ceil-pv")
        reports = hb::probe_conjecture_ceil_pv(gen_params, trials, seed, limits, threads);
      else if (probe_name == "nonmonotone-gap")
        reports = hb::check_difference_nonmonotone_example(limits);
      else
        throw hb::ValidationError("unknown probe: " + probe_name);
      bool violated = false;
      for (const auto& r : reports) {
        std::cout << hb::to_json_line(r) << "\n";
        violated |= r.violated();
      }
      return violated ? kExitValidation : 0;
    }

    if (tables_cmd->parsed()) {
      std::vector<hb::Design> corpus = hb::shipped_corpus();
      if (!corpus_path.empty()) {
        auto extra = hb::parse_design_corpus(read_input(corpus_path));
        corpus.insert(corpus.end(), extra.begin(), extra.end());
      }
      bool partial = false;
      std::cout << "design,lazy_distribution,burning_distribution\n";
      for (const auto& d : corpus) {
        hb::Distribution lazy = hb::compute_distribution(d.hg, hb::DistKind::Lazy, limits, threads);
        hb::Distribution burn =
            hb::compute_distribution(d.hg, hb::DistKind::Burning, limits, threads);
        partial |= !lazy.all_exact() || !burn.all_exact();
        std::cout << "\"" << design_label(d) << "\",\"" << hb::condensed_text(lazy) << "\",\""
                  << hb::condensed_text(burn) << "\"\n";
      }
      std::cout << "\n" << hb::correlation_csv(hb::correlation_report(corpus, limits));
      return partial ? kExitBudget : 0;
    }
  } catch (const hb::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const hb::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const hb::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 0;
}
