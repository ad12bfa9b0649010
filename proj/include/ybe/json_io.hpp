#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybe/identity.hpp"
#include "ybe/set_solution.hpp"
#include "ybe/twist.hpp"

namespace ybe {

using Json = nlohmann::json;

// {"name"?, "n", "sigma", "tau"?}; tau is derived from sigma when absent.
// Malformed input throws InputError.
SetSolution solution_from_json(const Json& j);
Json solution_to_json(const SetSolution& s);
SetSolution parse_solution(const std::string& text);
SetSolution load_solution(const std::filesystem::path& path);

// {"dim", "entries": [[row, col, "value"], ...]} in row-major order.
Json matrix_to_json(const SparseMat& m);
Json report_to_json(const CheckReport& r);
Json reports_to_json(const std::string& solution, const std::vector<CheckReport>& checks);
Json conjecture_to_json(const ConjectureReport& c);

}  // namespace ybe
