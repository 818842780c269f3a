// gavekit: solvability analysis for Ax - B|x| = b from the command line.
//
//   gavekit check FILE [--conditions IDS] [--json]
//   gavekit solve FILE [--method newton|picard|enumerate] [--tol T] [--maxit K]
//   gavekit gavme FILE ...          (alias of solve)
//   gavekit enumerate FILE [--cap N]
//   gavekit bench [--sizes 600,2000] [--full] [--repeats R] [--out PATH]
//
// Exit codes: 0 success / proved claim, 1 input error, 2 nothing proved,
// 3 solver failure, 4 enumeration cap exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gavekit/bench.hpp"
#include "gavekit/checkers.hpp"
#include "gavekit/errors.hpp"
#include "gavekit/json_io.hpp"
#include "gavekit/oracle.hpp"
#include "gavekit/solvers.hpp"

namespace {

using namespace gavekit;

enum Exit { kOk = 0, kInputError = 1, kNothingProved = 2, kSolverFailure = 3, kCapExceeded = 4 };

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string fmt(const Eigen::VectorXd& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v(i));
  return s + "]";
}

std::string fmt(const Matrix& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + fmt(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("GAVEKIT_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring non-numeric GAVEKIT_SEED\n";
    }
  }
  return 42;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

void print_report(const ConditionReport& r, std::ostream& out) {
  out << "problem " << r.problem.kind << " n=" << r.problem.n << " hash=" << r.problem.hash << "\n";
  char line[160];
  std::snprintf(line, sizeof line, "%-26s %-15s %-20s %-13s %s\n", "CONDITION", "STATUS", "CLAIM",
                "SOUNDNESS", "CERTIFICATE");
  out << line;
  for (const Verdict& v : r.verdicts) {
    std::string cert;
    for (const auto& [name, value] : v.certificate()) cert += name + "=" + fmt(value) + " ";
    std::snprintf(line, sizeof line, "%-26s %-15s %-20s %-13s ", std::string(to_string(v.id())).c_str(),
                  std::string(to_string(v.status())).c_str(), std::string(to_string(v.claim())).c_str(),
                  std::string(to_string(v.soundness())).c_str());
    out << line << cert;
    if (!v.note().empty()) out << "(" << v.note() << ")";
    out << "\n";
  }
  out << "summary: " << (r.summary ? std::string(to_string(*r.summary)) : "None") << "\n";
}

int cmd_check(const std::string& file, const std::string& conditions, bool as_json) {
  const io::Problem problem = io::load_problem(file);
  std::optional<std::vector<CheckerId>> only;
  if (!conditions.empty()) {
    only.emplace();
    for (const std::string& name : split_csv(conditions)) {
      const auto id = checker_from_string(name);
      if (!id) throw ParseError("unknown condition id " + name);
      only->push_back(*id);
    }
  }
  checks::CheckOptions opts;
  opts.seed = seed_from_env();

  std::vector<ConditionReport> reports;
  if (const auto* gave = std::get_if<GaveProblem>(&problem)) {
    reports.push_back(checks::run_all(*gave, opts, only));
  } else {
    // Uniqueness conditions depend only on (A, B); unsolvability is per column.
    const auto& gavme = std::get<GavmeProblem>(problem);
    for (std::size_t j = 0; j < gavme.m(); ++j) reports.push_back(checks::run_all(gavme.column(j), opts, only));
  }

  bool all_proved = true;
  for (const auto& r : reports) all_proved = all_proved && r.summary.has_value();
  if (as_json) {
    if (reports.size() == 1) {
      std::cout << io::report_to_json(reports.front()).dump(2) << "\n";
    } else {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : reports) arr.push_back(io::report_to_json(r));
      std::cout << arr.dump(2) << "\n";
    }
  } else {
    for (std::size_t j = 0; j < reports.size(); ++j) {
      if (reports.size() > 1) std::cout << "== column " << j << " ==\n";
      print_report(reports[j], std::cout);
    }
  }
  return all_proved ? kOk : kNothingProved;
}

int cmd_solve(const std::string& file, const std::string& method, double tol, int maxit) {
  const io::Problem problem = io::load_problem(file);
  if (const auto* p = std::get_if<GaveProblem>(&problem)) {
    Vector x(p->n());
    if (method == "picard") {
      x = solvers::picard_solve(*p, tol, maxit > 0 ? maxit : 10000).x;
    } else if (method == "newton") {
      x = solvers::newton_solve(*p, tol, maxit > 0 ? maxit : 100).x;
    } else {
      const SolutionSet set = oracle::enumerate_solutions(*p);
      if (set.solutions.size() != 1 || set.degenerate_orthants != 0) {
        std::cerr << "enumeration found " << set.solutions.size() << " solutions\n";
        return kSolverFailure;
      }
      x = set.solutions.front();
    }
    std::cout << "x = " << fmt(x.eigen()) << "\nresidual = " << fmt(residual(*p, x)) << "\n";
    return kOk;
  }
  const auto& g = std::get<GavmeProblem>(problem);
  const auto m = method == "picard"   ? solvers::GavmeMethod::Picard
                 : method == "newton" ? solvers::GavmeMethod::Newton
                                      : solvers::GavmeMethod::Enumerate;
  const Matrix X = solvers::gavme_solve(g, m, tol, maxit);
  const Eigen::MatrixXd r = g.A().eigen() * X.eigen() - g.B().eigen() * X.eigen().cwiseAbs() - g.F().eigen();
  std::cout << "X = " << fmt(X) << "\nresidual = " << fmt(r.cwiseAbs().maxCoeff()) << "\n";
  return kOk;
}

int cmd_enumerate(const std::string& file, std::size_t cap) {
  const io::Problem problem = io::load_problem(file);
  std::vector<GaveProblem> columns;
  if (const auto* p = std::get_if<GaveProblem>(&problem)) {
    columns.push_back(*p);
  } else {
    const auto& g = std::get<GavmeProblem>(problem);
    for (std::size_t j = 0; j < g.m(); ++j) columns.push_back(g.column(j));
  }
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns.size() > 1) std::cout << "== column " << j << " ==\n";
    const SolutionSet set = oracle::enumerate_solutions(columns[j], cap);
    std::cout << "solutions: " << set.solutions.size() << "\n";
    for (const Vector& x : set.solutions) std::cout << "  " << fmt(x.eigen()) << "\n";
    std::cout << "degenerate_orthants: " << set.degenerate_orthants << "\n";
  }
  return kOk;
}

int cmd_bench(const std::string& sizes_csv, bool full, int repeats, const std::string& out_path) {
  std::vector<std::size_t> sizes;
  for (const std::string& s : split_csv(sizes_csv)) sizes.push_back(std::stoul(s));
  if (full)
    for (std::size_t n : {3000, 4000, 5000}) sizes.push_back(n);

  const auto rows = bench::bench_conditions(sizes, repeats);
  if (out_path.empty()) {
    bench::write_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return kInputError;
    }
    bench::write_csv(out, rows);
    if (!out) {
      std::cerr << "error: write failed for " << out_path << "\n";
      return kInputError;
    }
  }
  for (std::size_t n : sizes) {
    std::cerr << "n=" << n << " ordering ROW_DOM < SIGMA_AINVB < RHO_ABS_AINVB: "
              << (bench::timing_order_holds(rows, n) ? "pass" : "fail")
              << (n < 600 ? " (not asserted below n=600)" : "") << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solvability analysis for generalized absolute value equations"};
  app.require_subcommand(1);

  std::string file;
  std::string conditions;
  bool as_json = false;
  auto* check = app.add_subcommand("check", "run the condition checkers on a problem file");
  check->add_option("file", file, "problem JSON")->required();
  check->add_option("--conditions", conditions, "comma-separated condition ids");
  check->add_flag("--json", as_json, "print the report as JSON");

  std::string method = "newton";
  double tol = 1e-10;
  int maxit = 0;
  auto add_solve_options = [&](CLI::App* sub) {
    sub->add_option("file", file, "problem JSON")->required();
    sub->add_option("--method", method, "picard, newton or enumerate")
        ->check(CLI::IsMember({"picard", "newton", "enumerate"}));
    sub->add_option("--tol", tol, "relative residual tolerance");
    sub->add_option("--maxit", maxit, "iteration cap (0 = method default)");
  };
  auto* solve = app.add_subcommand("solve", "solve a GAVE or GAVME problem");
  add_solve_options(solve);
  auto* gavme = app.add_subcommand("gavme", "alias of solve for F-problems");
  add_solve_options(gavme);

  std::size_t cap = oracle::kEnumerateCap;
  auto* enumerate = app.add_subcommand("enumerate", "list every solution by orthant enumeration");
  enumerate->add_option("file", file, "problem JSON")->required();
  enumerate->add_option("--cap", cap, "largest dimension to enumerate");

  std::string sizes = "600,2000";
  std::string out_path;
  bool full = false;
  int repeats = 3;
  auto* bench_cmd = app.add_subcommand("bench", "time three conditions on the tridiagonal family");
  bench_cmd->add_option("--sizes", sizes, "comma-separated sizes");
  bench_cmd->add_flag("--full", full, "also run n = 3000, 4000, 5000");
  bench_cmd->add_option("--repeats", repeats, "timed repeats per cell")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(file, conditions, as_json);
    if (*solve || *gavme) return cmd_solve(file, method, tol, maxit);
    if (*enumerate) return cmd_enumerate(file, cap);
    if (*bench_cmd) return cmd_bench(sizes, full, repeats, out_path);
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const NoConvergence& e) {
    std::cerr << "error: " << e.what() << " (residual " << fmt(e.residual()) << ")\n";
    return kSolverFailure;
  } catch (const SingularError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSolverFailure;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
