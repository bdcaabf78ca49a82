#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "mrce/errors.hpp"
#include "mrce/exact_oracle.hpp"
#include "mrce/formats.hpp"
#include "mrce/general_approx.hpp"
#include "mrce/instance_forge.hpp"
#include "mrce/interval_solver.hpp"
#include "mrce/split_solver.hpp"

namespace mrce::cli {

namespace fs = std::filesystem;

namespace {

struct Instance {
  RootedGraph graph;
  std::optional<IntervalRealization> realization;
};

std::size_t oracle_cap() {
  if (const char* env = std::getenv("MRCE_ORACLE_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      throw InputError(std::string("MRCE_ORACLE_CAP is not a number: ") + env);
    }
  }
  return kDefaultOracleCap;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return in;
}

std::string infer_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return flag;
  return fs::path(path).extension() == ".intervals" ? "intervals" : "edgelist";
}

Instance load(const std::string& path, const std::string& format) {
  auto in = open_input(path);
  if (format == "intervals") {
    const IntervalFile file = read_intervals(in);
    IntervalRealization r = canonicalize_realization(file.intervals);
    RootedGraph g = intersection_graph(r, file.root);
    return Instance{std::move(g), std::move(r)};
  }
  return Instance{read_edge_list(in), std::nullopt};
}

Solution run_algorithm(const Instance& inst, const std::string& algo, int k) {
  if (algo == "exact") return solve_exact(inst.graph, std::nullopt, oracle_cap());
  if (algo == "split") return approximate_split(inst.graph, k);
  if (algo == "general") return greedy_mrce(inst.graph);
  if (!inst.realization) {
    throw IncompatibleInput("the interval algorithm needs an intervals file");
  }
  return solve_interval(inst.graph, *inst.realization);
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << content;
}

// Maps library exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const IncompatibleInput& e) {
    err << "error: " << e.what() << '\n';
    return kIncompatible;
  } catch (const CapacityError& e) {
    err << "error: " << e.what() << " (raise MRCE_ORACLE_CAP to force)\n";
    return kCapacity;
  } catch (const FeasibilityError& e) {
    err << "error: " << e.what() << '\n';
    return kIncompatible;
  }
}

int cmd_solve(const std::string& input, const std::string& format_flag,
              const std::string& algo, int k, const std::string& output,
              std::ostream& out) {
  const Instance inst = load(input, infer_format(input, format_flag));
  const Solution sol = run_algorithm(inst, algo, k);
  out << "ratio " << sol.ratio.str() << '\n'
      << "decimal " << sol.ratio.decimal(10) << '\n'
      << "size " << sol.size() << '\n'
      << "closed_neighborhood " << sol.closed_nbhd_size << '\n'
      << "surveillance_lower_bound " << surveillance_lower_bound(sol) << '\n';
  if (!output.empty()) {
    std::ostringstream text;
    std::vector<std::string> comments{"algo " + algo};
    if (algo == "split") comments.back() += " k=" + std::to_string(k);
    write_solution(text, sol, comments);
    write_file(output, text.str());
  }
  return kOk;
}

int cmd_check(const std::string& input, const std::string& solution_path,
              const std::string& format_flag, std::ostream& out) {
  const Instance inst = load(input, infer_format(input, format_flag));
  auto in = open_input(solution_path);
  const ClaimedSolution claim = read_solution(in);
  const RootedGraph& g = inst.graph;

  auto reject = [&](const std::string& why) {
    out << "invalid: " << why << '\n';
    return kRejected;
  };
  for (Vertex v : claim.vertices) {
    if (!g.contains(v)) return reject("vertex " + std::to_string(v) + " out of range");
  }
  VertexSet sorted(claim.vertices);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return reject("duplicate vertex");
  }
  if (sorted.empty()) return reject("empty set");
  if (!std::binary_search(sorted.begin(), sorted.end(), g.root())) {
    return reject("root missing");
  }
  if (!is_connected_containing_root(g, sorted)) return reject("disconnected");
  const Solution actual = evaluate(g, sorted);
  if (actual.ratio != claim.ratio) {
    return reject("ratio mismatch (claimed " + claim.ratio.str() + ", actual " +
                  actual.ratio.str() + ")");
  }
  out << "ok ratio " << actual.ratio.str() << '\n';
  return kOk;
}

struct GenOptions {
  std::string kind;
  std::size_t n = 10;
  std::uint64_t seed = 1;
  std::string out;
  double density = 0.3;
  std::size_t clique = 0;
  double p = 0.5;
  std::string cnf;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  if (o.out.empty()) throw InputError("--out is required");
  auto emit_graph = [&](const fs::path& path, const RootedGraph& g,
                        const std::vector<std::string>& comments) {
    std::ostringstream text;
    write_edge_list(text, g, comments);
    write_file(path, text.str());
    out << "wrote " << path.string() << '\n';
  };
  const fs::path graph_path = o.out + ".graph";

  if (o.kind == "split") {
    SplitParams params{o.n, std::nullopt, o.p};
    if (o.clique > 0) params.clique_size = o.clique;
    emit_graph(graph_path, random_split(params, o.seed),
               {"split n=" + std::to_string(o.n) + " seed=" + std::to_string(o.seed)});
  } else if (o.kind == "general") {
    std::ostringstream density;
    density << o.density;
    emit_graph(graph_path, random_connected(o.n, o.density, o.seed),
               {"general n=" + std::to_string(o.n) + " density=" + density.str() +
                " seed=" + std::to_string(o.seed)});
  } else if (o.kind == "interval") {
    const IntervalInstance inst = random_interval(o.n, o.seed);
    std::ostringstream text;
    write_intervals(text, IntervalFile{inst.root, inst.raw});
    const fs::path iv_path = o.out + ".intervals";
    write_file(iv_path, text.str());
    out << "wrote " << iv_path.string() << '\n';
    emit_graph(graph_path, inst.graph,
               {"interval n=" + std::to_string(o.n) + " seed=" + std::to_string(o.seed)});
  } else if (o.kind == "reduction") {
    if (o.cnf.empty()) throw InputError("reduction needs --cnf");
    auto in = open_input(o.cnf);
    CnfFormula f = read_dimacs(in);
    if (f.variables < 1 || static_cast<std::size_t>(f.variables) != f.clauses.size()) {
      f = equalize(f);
      out << "equalized to " << f.variables << " variables and clauses\n";
    }
    const ReductionOutput red = reduce_to_split_mrce(f);
    emit_graph(graph_path, red.graph, {"threshold " + red.threshold.str()});
    std::ostringstream roles;
    write_roles(roles, red.roles);
    const fs::path roles_path = o.out + ".roles";
    write_file(roles_path, roles.str());
    out << "wrote " << roles_path.string() << '\n';
  } else {
    throw InputError("unknown instance kind '" + o.kind + "'");
  }
  return kOk;
}

int cmd_audit(const std::string& dir, const std::string& algo, int k,
              std::ostream& out, std::ostream& err) {
  if (!fs::is_directory(dir)) throw InputError("not a directory: " + dir);
  const std::string ext = algo == "interval" ? ".intervals" : ".graph";
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ext) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());

  Ratio threshold(1, 1);
  if (algo == "split") threshold = Ratio(k, k + 2);
  if (algo == "general") threshold = Ratio(105, 1000);

  const std::size_t cap = oracle_cap();
  std::optional<Ratio> min_quotient;
  std::size_t audited = 0, skipped = 0;
  out << "instance,n,exact,algo,quotient\n";
  for (const fs::path& file : files) {
    const Instance inst = load(file.string(), algo == "interval" ? "intervals" : "edgelist");
    Solution exact;
    Solution approx;
    try {
      exact = solve_exact(inst.graph, std::nullopt, cap);
      approx = run_algorithm(inst, algo, k);
    } catch (const CapacityError& e) {
      err << "warning: skipping " << file.filename().string() << ": " << e.what() << '\n';
      ++skipped;
      continue;
    } catch (const IncompatibleInput& e) {
      err << "warning: skipping " << file.filename().string() << ": " << e.what() << '\n';
      ++skipped;
      continue;
    }
    const Ratio quotient = approx.ratio.divided_by(exact.ratio);
    if (!min_quotient || quotient < *min_quotient) min_quotient = quotient;
    ++audited;
    out << file.filename().string() << ',' << inst.graph.size() << ','
        << exact.ratio.str() << ',' << approx.ratio.str() << ',' << quotient.str()
        << '\n';
  }
  const bool pass = !min_quotient || *min_quotient >= threshold;
  out << "# audited " << audited << ", skipped " << skipped << '\n';
  if (min_quotient) {
    out << "# min quotient " << min_quotient->str() << " (" << min_quotient->decimal(10)
        << ")\n";
  }
  out << "# threshold " << threshold.str() << " (" << threshold.decimal(10) << ")\n"
      << "# result " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? kOk : kRejected;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Maximum rooted connected expansion solver"};
  app.require_subcommand(1);
  const std::vector<std::string> algos{"exact", "split", "general", "interval"};

  std::string input, format, algo = "exact", output, solution, dir;
  int k = 3;
  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("input", input, "Edge list or intervals file")->required();
  solve->add_option("--format", format, "edgelist or intervals (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "intervals"}));
  solve->add_option("--algo", algo, "Algorithm")->check(CLI::IsMember(algos));
  solve->add_option("--k", k, "Split search depth, sets of size <= k+2")
      ->check(CLI::PositiveNumber);
  solve->add_option("--output,-o", output, "Solution file to write");

  auto* check = app.add_subcommand("check", "Verify a solution file");
  check->add_option("input", input, "Instance file")->required();
  check->add_option("solution", solution, "Solution file")->required();
  check->add_option("--format", format, "edgelist or intervals")
      ->check(CLI::IsMember({"edgelist", "intervals"}));

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("kind", gen_opts.kind, "split, interval, general or reduction")
      ->required()
      ->check(CLI::IsMember({"split", "interval", "general", "reduction"}));
  gen->add_option("-n", gen_opts.n, "Vertex count");
  gen->add_option("--seed", gen_opts.seed, "Generator seed");
  gen->add_option("--out", gen_opts.out, "Output path prefix")->required();
  gen->add_option("--density", gen_opts.density, "Edge density for general graphs");
  gen->add_option("--clique", gen_opts.clique, "Clique size for split graphs");
  gen->add_option("--p", gen_opts.p, "Independent-to-clique edge probability");
  gen->add_option("--cnf", gen_opts.cnf, "DIMACS formula for the reduction");

  auto* audit = app.add_subcommand("audit", "Compare an algorithm with the exact optimum");
  audit->add_option("corpus", dir, "Directory of instances")->required();
  audit->add_option("--algo", algo, "split, general or interval")
      ->required()
      ->check(CLI::IsMember({"split", "general", "interval"}));
  audit->add_option("--k", k, "Split search depth")->check(CLI::PositiveNumber);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  return guarded(err, [&]() -> int {
    if (*solve) return cmd_solve(input, format, algo, k, output, out);
    if (*check) return cmd_check(input, solution, format, out);
    if (*gen) return cmd_gen(gen_opts, out);
    return cmd_audit(dir, algo, k, out, err);
  });
}

}  // namespace mrce::cli
