#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dmod/engine.hpp"
#include "dmod/polynomial.hpp"

namespace dmod::cli {

enum Exit : int { kPass = 0, kFail = 1, kUsage = 2 };

// Runs the tool on argv-style arguments (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

nlohmann::json report_json(const Report& report);
nlohmann::json basis_json(const std::vector<Monomial>& basis, std::uint32_t vars);
std::string basis_text(const std::vector<Monomial>& basis, std::uint32_t vars);

}  // namespace dmod::cli
