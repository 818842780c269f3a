#include "gavekit/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gavekit/errors.hpp"

namespace gavekit::io {
namespace {

using nlohmann::json;

std::string line_context(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  std::size_t begin = text.rfind('\n', byte == 0 ? 0 : byte - 1);
  begin = (begin == std::string_view::npos) ? 0 : begin + 1;
  std::size_t end = text.find('\n', begin);
  if (end == std::string_view::npos) end = text.size();
  return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " +
         std::string(text.substr(begin, end - begin));
}

std::vector<double> read_numbers(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw ParseError(where + " must be a nonempty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ParseError(where + "[" + std::to_string(i) + "] is not a number");
    out.push_back(j[i].get<double>());
  }
  return out;
}

Matrix read_matrix(const json& j, const std::string& name) {
  if (!j.is_array() || j.empty()) throw ParseError("\"" + name + "\" must be a nonempty array of rows");
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    rows.push_back(read_numbers(j[i], name + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) {
      throw ParseError("\"" + name + "\" is ragged: row " + std::to_string(i) + " has " +
                       std::to_string(rows.back().size()) + " entries, row 0 has " +
                       std::to_string(rows.front().size()));
    }
  }
  try {
    return Matrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    throw ParseError("\"" + name + "\": " + e.what());
  }
}

}  // namespace

Problem parse_problem(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("malformed JSON at " + line_context(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object()) throw ParseError("problem must be a JSON object");
  if (!doc.contains("A")) throw ParseError("missing key \"A\"");
  const bool has_b = doc.contains("b");
  const bool has_f = doc.contains("F");
  if (has_b == has_f) throw ParseError("exactly one of \"b\" or \"F\" must be present");

  Matrix A = read_matrix(doc["A"], "A");
  if (!A.is_square()) {
    throw ParseError("\"A\" must be square, got " + std::to_string(A.rows()) + "x" + std::to_string(A.cols()));
  }
  Matrix B = doc.contains("B") ? read_matrix(doc["B"], "B") : Matrix::identity(A.rows());
  try {
    if (has_b) {
      Vector b(read_numbers(doc["b"], "b"));
      return GaveProblem(std::move(A), std::move(B), std::move(b));
    }
    return GavmeProblem(std::move(A), std::move(B), read_matrix(doc["F"], "F"));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("dimension mismatch: ") + e.what());
  }
}

Problem load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json problem_to_json(const Problem& p) {
  return std::visit(
      [](const auto& q) {
        json j{{"A", matrix_to_json(q.A())}, {"B", matrix_to_json(q.B())}};
        if constexpr (std::is_same_v<std::decay_t<decltype(q)>, GaveProblem>) {
          j["b"] = q.b().values();
        } else {
          j["F"] = matrix_to_json(q.F());
        }
        return j;
      },
      p);
}

json digest_to_json(const ProblemDigest& d) {
  return {{"kind", d.kind}, {"n", d.n}, {"rhs_cols", d.rhs_cols}, {"hash", d.hash}};
}

json verdict_to_json(const Verdict& v) {
  json cert = json::object();
  for (const auto& [name, value] : v.certificate()) cert[name] = value;
  json j{{"id", to_string(v.id())},
         {"claim", to_string(v.claim())},
         {"status", to_string(v.status())},
         {"soundness", to_string(v.soundness())},
         {"certificate", std::move(cert)}};
  if (!v.note().empty()) j["note"] = v.note();
  return j;
}

json report_to_json(const ConditionReport& r) {
  json verdicts = json::array();
  for (const Verdict& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
  return {{"problem", digest_to_json(r.problem)},
          {"verdicts", std::move(verdicts)},
          {"summary", r.summary ? std::string(to_string(*r.summary)) : std::string("None")}};
}

ProblemDigest problem_digest(const Problem& p) {
  return std::visit([](const auto& q) { return digest(q); }, p);
}

}  // namespace gavekit::io
