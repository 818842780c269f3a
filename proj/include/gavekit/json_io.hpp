#pragma once

#include <filesystem>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "gavekit/model.hpp"

namespace gavekit::io {

using Problem = std::variant<GaveProblem, GavmeProblem>;

/// Canonical problem encoding: {"A": rows, "B": rows (optional, identity by
/// default), and exactly one of "b": array or "F": rows}. Throws ParseError
/// with line context for malformed text and named dimension mismatches.
Problem parse_problem(std::string_view text);
Problem load_problem(const std::filesystem::path& path);

nlohmann::json problem_to_json(const Problem& p);
nlohmann::json matrix_to_json(const Matrix& m);
nlohmann::json digest_to_json(const ProblemDigest& d);
nlohmann::json verdict_to_json(const Verdict& v);

/// {"problem": digest, "verdicts": [...], "summary": claim or "None"}.
nlohmann::json report_to_json(const ConditionReport& r);

ProblemDigest problem_digest(const Problem& p);

}  // namespace gavekit::io
