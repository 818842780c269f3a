// pybind11 bindings. Reports cross the boundary as JSON text and are decoded
// into dicts by the Python package.

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gavekit/bench.hpp"
#include "gavekit/checkers.hpp"
#include "gavekit/errors.hpp"
#include "gavekit/json_io.hpp"
#include "gavekit/numkernel.hpp"
#include "gavekit/oracle.hpp"
#include "gavekit/solvers.hpp"

namespace py = pybind11;
using namespace gavekit;

namespace {

Matrix b_or_identity(const std::optional<Eigen::MatrixXd>& B, Eigen::Index n) {
  return B ? Matrix(*B) : Matrix::identity(static_cast<std::size_t>(n));
}

std::optional<std::vector<CheckerId>> parse_ids(const std::optional<std::vector<std::string>>& names) {
  if (!names) return std::nullopt;
  std::vector<CheckerId> ids;
  for (const std::string& name : *names) {
    const auto id = checker_from_string(name);
    if (!id) throw std::invalid_argument("unknown condition id " + name);
    ids.push_back(*id);
  }
  return ids;
}

checks::CheckOptions options(std::uint64_t seed) {
  checks::CheckOptions opts;
  opts.seed = seed;
  return opts;
}

std::string reports_json(const io::Problem& problem, const checks::CheckOptions& opts,
                         const std::optional<std::vector<CheckerId>>& only) {
  if (const auto* gave = std::get_if<GaveProblem>(&problem))
    return io::report_to_json(checks::run_all(*gave, opts, only)).dump();
  const auto& gavme = std::get<GavmeProblem>(problem);
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t j = 0; j < gavme.m(); ++j) arr.push_back(io::report_to_json(checks::run_all(gavme.column(j), opts, only)));
  return arr.dump();
}

solvers::GavmeMethod gavme_method(const std::string& name) {
  if (name == "picard") return solvers::GavmeMethod::Picard;
  if (name == "newton") return solvers::GavmeMethod::Newton;
  if (name == "enumerate") return solvers::GavmeMethod::Enumerate;
  throw std::invalid_argument("unknown method " + name);
}

py::dict solve_result(const solvers::SolveResult& r) {
  py::dict d;
  d["x"] = r.x.eigen();
  d["residual"] = r.residual;
  d["iterations"] = r.iterations;
  return d;
}

}  // namespace

PYBIND11_MODULE(_gavekit, m) {
  m.doc() = "Solvability checks and solvers for Ax - B|x| = b";

  auto base = py::register_exception<GaveError>(m, "GaveError");
  py::register_exception<SingularError>(m, "SingularError", base.ptr());
  py::register_exception<ConvergenceError>(m, "ConvergenceError", base.ptr());
  py::register_exception<NotSymmetricError>(m, "NotSymmetricError", base.ptr());
  py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
  py::register_exception<NoConvergence>(m, "NoConvergence", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  m.def("_check_json",
        [](const Eigen::MatrixXd& A, const std::optional<Eigen::MatrixXd>& B, const Eigen::MatrixXd& rhs,
           const std::optional<std::vector<std::string>>& conditions, std::uint64_t seed) {
          const Matrix b_mat = b_or_identity(B, A.rows());
          io::Problem problem = rhs.cols() == 1
                                    ? io::Problem(GaveProblem(Matrix(A), b_mat, Vector(Eigen::VectorXd(rhs.col(0)))))
                                    : io::Problem(GavmeProblem(Matrix(A), b_mat, Matrix(rhs)));
          return reports_json(problem, options(seed), parse_ids(conditions));
        },
        py::arg("A"), py::arg("B"), py::arg("rhs"), py::arg("conditions"), py::arg("seed"));

  m.def("_check_file_json",
        [](const std::string& path, const std::optional<std::vector<std::string>>& conditions, std::uint64_t seed) {
          return reports_json(io::load_problem(path), options(seed), parse_ids(conditions));
        },
        py::arg("path"), py::arg("conditions"), py::arg("seed"));

  m.def("condition_ids", [] {
    std::vector<std::string> names;
    for (CheckerId id : all_checkers()) names.emplace_back(to_string(id));
    return names;
  });

  m.def("enumerate_solutions",
        [](const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const std::optional<Eigen::MatrixXd>& B,
           std::size_t cap) {
          const SolutionSet set = oracle::enumerate_solutions(GaveProblem(Matrix(A), b_or_identity(B, A.rows()), Vector(b)), cap);
          std::vector<Eigen::VectorXd> xs;
          for (const Vector& x : set.solutions) xs.push_back(x.eigen());
          py::dict d;
          d["solutions"] = xs;
          d["degenerate_orthants"] = set.degenerate_orthants;
          return d;
        },
        py::arg("A"), py::arg("b"), py::arg("B") = py::none(), py::arg("cap") = oracle::kEnumerateCap);

  m.def("picard_solve",
        [](const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const std::optional<Eigen::MatrixXd>& B, double tol,
           int maxit) {
          return solve_result(solvers::picard_solve(GaveProblem(Matrix(A), b_or_identity(B, A.rows()), Vector(b)), tol, maxit));
        },
        py::arg("A"), py::arg("b"), py::arg("B") = py::none(), py::arg("tol") = 1e-10, py::arg("maxit") = 10000);

  m.def("newton_solve",
        [](const Eigen::MatrixXd& A, const Eigen::VectorXd& b, const std::optional<Eigen::MatrixXd>& B, double tol,
           int maxit) {
          return solve_result(solvers::newton_solve(GaveProblem(Matrix(A), b_or_identity(B, A.rows()), Vector(b)), tol, maxit));
        },
        py::arg("A"), py::arg("b"), py::arg("B") = py::none(), py::arg("tol") = 1e-10, py::arg("maxit") = 100);

  m.def("gavme_solve",
        [](const Eigen::MatrixXd& A, const Eigen::MatrixXd& F, const std::optional<Eigen::MatrixXd>& B,
           const std::string& method, double tol, int maxit) {
          const GavmeProblem p(Matrix(A), b_or_identity(B, A.rows()), Matrix(F));
          return Eigen::MatrixXd(solvers::gavme_solve(p, gavme_method(method), tol, maxit).eigen());
        },
        py::arg("A"), py::arg("F"), py::arg("B") = py::none(), py::arg("method") = "picard", py::arg("tol") = 1e-10,
        py::arg("maxit") = 0);

  m.def("sigma_extremes",
        [](const Eigen::MatrixXd& M) {
          const auto s = num::sigma_extremes(M);
          return py::make_tuple(s.sigma_max, s.sigma_min);
        },
        "(sigma_max, sigma_min)");

  m.def("sym_eigen", [](const Eigen::MatrixXd& M) {
    const auto e = num::sym_eigen(M);
    py::dict d;
    d["eigenvalues"] = e.eigenvalues;
    d["signature"] = py::make_tuple(e.signature.positive, e.signature.negative, e.signature.zero);
    return d;
  });

  m.def("nonneg_spectral_radius", [](const Eigen::MatrixXd& M) { return num::nonneg_spectral_radius(M); });

  m.def("is_nonsingular_m_matrix",
        [](const Eigen::MatrixXd& M) { return num::is_nonsingular_m_matrix(Matrix(M)).holds; });

  m.def("interval_regularity",
        [](const Eigen::MatrixXd& C, const Eigen::MatrixXd& Delta, std::size_t cap) {
          const auto r = oracle::interval_regularity(Matrix(C), Matrix(Delta), cap);
          py::dict d;
          d["regular"] = r.regular;
          d["boundary"] = r.boundary;
          d["vertices_checked"] = r.vertices_checked;
          return d;
        },
        py::arg("C"), py::arg("Delta"), py::arg("cap") = oracle::kRegularityCap);

  m.def("tridiag_problem", [](std::size_t n) {
    const GaveProblem p = bench::tridiag_problem(n);
    return py::make_tuple(p.A().eigen(), p.B().eigen(), p.b().eigen());
  });

  m.def("bench_conditions",
        [](const std::vector<std::size_t>& sizes, int repeats) {
          py::list rows;
          for (const auto& r : bench::bench_conditions(sizes, repeats)) {
            py::dict d;
            d["n"] = r.n;
            d["condition"] = std::string(to_string(r.condition));
            d["seconds"] = r.seconds;
            d["status"] = std::string(to_string(r.status));
            rows.append(d);
          }
          return rows;
        },
        py::arg("sizes"), py::arg("repeats") = 3);
}
