#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mcs/bench.hpp"
#include "mcs/colored_tree.hpp"
#include "mcs/consistency.hpp"
#include "mcs/dp_solver.hpp"
#include "mcs/errors.hpp"
#include "mcs/export_dot.hpp"
#include "mcs/generators.hpp"
#include "mcs/oracle.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitInternal = 4;
constexpr int kExitBenchDisagree = 5;

mcs::ColoredTree load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mcs::ParseError("cannot open instance file '" + path + "'");
  return mcs::parse_instance(in);
}

mcs::VertexSubset parse_subset(const std::string& csv, int n) {
  std::vector<mcs::VertexId> members;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw mcs::ParseError("subset entry '" + item + "' is not an integer");
    }
    if (used != item.size()) {
      throw mcs::ParseError("subset entry '" + item + "' is not an integer");
    }
    if (v < 1 || v > n) {
      throw mcs::ValidationError("subset vertex " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
    }
    members.push_back(v);
  }
  return mcs::VertexSubset::from_unsorted(std::move(members));
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw mcs::Error("cannot open output file '" + path + "'");
  out << content;
}

std::string solution_text(int size, const std::vector<mcs::VertexId>& vertices,
                          const mcs::SolveStats* stats) {
  std::ostringstream out;
  out << "size " << size << "\n";
  out << "vertices";
  for (mcs::VertexId v : vertices) out << ' ' << v;
  out << "\n";
  if (stats != nullptr) {
    out << "stats\n";
    out << "  states_max " << stats->states_max << "\n";
    out << "  states_total " << stats->states_total << "\n";
    out << "  merges_total " << stats->merges_total << "\n";
  }
  return out.str();
}

std::string solution_json(int size, const std::vector<mcs::VertexId>& vertices,
                          const char* algorithm,
                          const mcs::SolveStats* stats) {
  nlohmann::json doc;
  doc["size"] = size;
  doc["vertices"] = vertices;
  doc["algorithm"] = algorithm;
  if (stats != nullptr) {
    nlohmann::json s;
    s["states_max"] = stats->states_max;
    s["states_total"] = stats->states_total;
    s["merges_total"] = stats->merges_total;
    s["table_sizes"] = std::vector<std::size_t>(
        stats->final_table_sizes.begin() + 1, stats->final_table_sizes.end());
    doc["stats"] = s;
  }
  return doc.dump() + "\n";
}

int run(int argc, char** argv) {
  CLI::App app{"Exact minimum consistent subset solver for colored trees"};
  app.require_subcommand(1);

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve an instance exactly");
  std::string solve_path;
  int solve_root = 1;
  std::string solve_format = "text";
  bool solve_stats = false;
  solve_cmd->add_option("instance", solve_path, "instance file")->required();
  solve_cmd->add_option("--root", solve_root, "root vertex (default 1)");
  solve_cmd->add_option("--format", solve_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  solve_cmd->add_flag("--stats", solve_stats, "print table statistics");

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "check a subset for consistency");
  std::string verify_path;
  std::string verify_subset;
  verify_cmd->add_option("instance", verify_path, "instance file")->required();
  verify_cmd->add_option("--subset", verify_subset, "comma-separated vertices")
      ->required();

  // oracle
  auto* oracle_cmd =
      app.add_subcommand("oracle", "solve by exhaustive enumeration");
  std::string oracle_path;
  std::string oracle_format = "text";
  int oracle_cap = mcs::kDefaultBruteForceCap;
  oracle_cmd->add_option("instance", oracle_path, "instance file")->required();
  oracle_cmd->add_option("--format", oracle_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  oracle_cmd->add_option("--cap", oracle_cap, "max n for enumeration");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "generate an instance");
  std::string gen_family = "random";
  std::string gen_coloring = "uniform-random";
  int gen_n = 8;
  int gen_k = 2;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  gen_cmd->add_option("--family", gen_family,
                      "random|path|star|caterpillar|spider|binary");
  gen_cmd->add_option("--n", gen_n, "vertex count")->required();
  gen_cmd->add_option("--k", gen_k, "color count");
  gen_cmd->add_option("--seed", gen_seed, "generator seed");
  gen_cmd->add_option("--coloring", gen_coloring,
                      "uniform-random|alternating|blocks");
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");

  // export-dot
  auto* dot_cmd = app.add_subcommand("export-dot", "write a Graphviz view");
  std::string dot_path;
  std::string dot_subset;
  std::string dot_out;
  dot_cmd->add_option("instance", dot_path, "instance file")->required();
  dot_cmd->add_option("--subset", dot_subset,
                      "comma-separated vertices drawn as boxes");
  dot_cmd->add_option("--out", dot_out, "output file (default stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "scaling measurements");
  std::vector<std::string> bench_families{"random"};
  int bench_nmin = 4, bench_nmax = 12, bench_step = 1;
  int bench_k = 2, bench_reps = 1;
  std::uint64_t bench_seed = 1;
  bool bench_oracle = false;
  int bench_oracle_cap = mcs::kDefaultBruteForceCap;
  std::string bench_csv;
  bench_cmd->add_option("--families", bench_families, "tree families")
      ->delimiter(',');
  bench_cmd->add_option("--nmin", bench_nmin, "smallest n");
  bench_cmd->add_option("--nmax", bench_nmax, "largest n");
  bench_cmd->add_option("--step", bench_step, "n increment");
  bench_cmd->add_option("--k", bench_k, "color count");
  bench_cmd->add_option("--reps", bench_reps, "timed repetitions per instance");
  bench_cmd->add_option("--seed", bench_seed, "base seed");
  bench_cmd->add_flag("--with-oracle", bench_oracle,
                      "cross-check sizes against the oracle");
  bench_cmd->add_option("--oracle-cap", bench_oracle_cap,
                        "skip the oracle above this n");
  bench_cmd->add_option("--csv", bench_csv, "append rows to this CSV file");

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    const mcs::ColoredTree tree = load_instance(solve_path);
    if (solve_root < 1 || solve_root > tree.vertex_count()) {
      throw mcs::ValidationError("root " + std::to_string(solve_root) +
                                 " outside 1.." +
                                 std::to_string(tree.vertex_count()));
    }
    const mcs::SolveResult result = mcs::solve(tree, solve_root);
    const mcs::SolveStats* stats = solve_stats ? &result.stats : nullptr;
    if (solve_format == "json") {
      std::cout << solution_json(result.solution.size,
                                 result.solution.subset.members, "dp", stats);
    } else {
      std::cout << solution_text(result.solution.size,
                                 result.solution.subset.members, stats);
    }
    return 0;
  }

  if (verify_cmd->parsed()) {
    const mcs::ColoredTree tree = load_instance(verify_path);
    const mcs::VertexSubset subset =
        parse_subset(verify_subset, tree.vertex_count());
    const auto offender = mcs::first_inconsistent_vertex(tree, subset);
    if (offender) {
      std::cout << "inconsistent vertex " << *offender << "\n";
      return 1;
    }
    std::cout << "consistent\n";
    return 0;
  }

  if (oracle_cmd->parsed()) {
    const mcs::ColoredTree tree = load_instance(oracle_path);
    const mcs::OracleResult result = mcs::brute_force_min(tree, oracle_cap);
    if (oracle_format == "json") {
      std::cout << solution_json(result.size, result.witness.members, "oracle",
                                 nullptr);
    } else {
      std::cout << solution_text(result.size, result.witness.members, nullptr);
    }
    return 0;
  }

  if (gen_cmd->parsed()) {
    mcs::GenSpec spec;
    const auto family = mcs::parse_family(gen_family);
    if (!family) throw mcs::InvalidSpec("unknown family '" + gen_family + "'");
    const auto coloring = mcs::parse_coloring(gen_coloring);
    if (!coloring) {
      throw mcs::InvalidSpec("unknown coloring '" + gen_coloring + "'");
    }
    spec.family = *family;
    spec.coloring = *coloring;
    spec.n = gen_n;
    spec.k = gen_k;
    spec.seed = gen_seed;
    write_output(gen_out, mcs::serialize(mcs::generate(spec)));
    return 0;
  }

  if (dot_cmd->parsed()) {
    const mcs::ColoredTree tree = load_instance(dot_path);
    std::optional<mcs::VertexSubset> subset;
    if (dot_cmd->count("--subset") > 0) {
      subset = parse_subset(dot_subset, tree.vertex_count());
    }
    write_output(dot_out, mcs::to_dot(tree, subset ? &*subset : nullptr));
    return 0;
  }

  // bench
  mcs::ScalingParams params;
  params.families.clear();
  for (const std::string& name : bench_families) {
    const auto family = mcs::parse_family(name);
    if (!family) throw mcs::InvalidSpec("unknown family '" + name + "'");
    params.families.push_back(*family);
  }
  params.n_min = bench_nmin;
  params.n_max = bench_nmax;
  params.n_step = bench_step;
  params.k = bench_k;
  params.reps = bench_reps;
  params.seed = bench_seed;
  params.with_oracle = bench_oracle;
  params.oracle_cap = bench_oracle_cap;

  const mcs::ScalingReport report = mcs::run_scaling(params);

  if (bench_csv.empty()) {
    std::cout << mcs::csv_header() << "\n";
    for (const auto& record : report.records) {
      std::cout << mcs::csv_row(record) << "\n";
    }
    std::cerr << mcs::summary_table(report);
  } else {
    std::ifstream probe(bench_csv);
    const bool fresh = !probe || probe.peek() == std::ifstream::traits_type::eof();
    probe.close();
    std::ofstream out(bench_csv, std::ios::app);
    if (!out) throw mcs::Error("cannot open CSV file '" + bench_csv + "'");
    if (fresh) out << mcs::csv_header() << "\n";
    for (const auto& record : report.records) {
      out << mcs::csv_row(record) << "\n";
    }
    std::cout << mcs::summary_table(report);
  }
  if (!report.all_agree) {
    std::cerr << "error: DP and oracle disagree\n";
    return kExitBenchDisagree;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const mcs::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const mcs::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const mcs::InstanceTooLarge& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const mcs::InvalidSpec& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const mcs::InternalInconsistency& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const mcs::CorruptTable& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
