#include "dmod/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "dmod/errors.hpp"
#include "dmod/poly_model.hpp"

namespace dmod::cli {

namespace {

struct CheckArgs {
  std::string model;
  std::uint32_t size = 0;
  bool size_given = false;
  std::uint32_t characteristic = 0;
  unsigned max_degree = 0;
  bool degree_given = false;
  unsigned max_n = 2;
  unsigned max_order = 3;
  std::size_t samples = 16;
  std::uint64_t seed = 1;
  std::vector<std::string> suites;
  std::vector<std::size_t> mutate;
  std::string json;
};

struct BasisArgs {
  std::uint32_t vars = 1;
  std::uint32_t characteristic = 0;
  unsigned r = 0;
  unsigned max_degree = 8;
  std::string json;
};

nlohmann::json params_json(const CheckResult& c) {
  auto out = nlohmann::json::object();
  for (const auto& [k, v] : c.params) out[k] = v;
  return out;
}

// "-" writes to out.
bool write_json(const std::string& path, const nlohmann::json& j, std::ostream& out, std::ostream& err) {
  if (path == "-") {
    out << j.dump(2) << "\n";
    return true;
  }
  std::ofstream f(path);
  if (!f) {
    err << "error: cannot write " << path << "\n";
    return false;
  }
  f << j.dump(2) << "\n";
  return static_cast<bool>(f);
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.model = a.model == "rel" ? ModelKind::Rel : ModelKind::Poly;
  cfg.size = a.size_given ? a.size : (cfg.model == ModelKind::Rel ? 2 : 1);
  cfg.characteristic = cfg.model == ModelKind::Poly ? a.characteristic : 0;
  cfg.max_degree = a.degree_given ? a.max_degree : (cfg.model == ModelKind::Rel ? 3 : 8);
  cfg.options.max_n = a.max_n;
  cfg.options.max_order = a.max_order;
  cfg.options.samples = a.samples;
  cfg.options.seed = a.seed;
  cfg.suites.insert(a.suites.begin(), a.suites.end());
  if (!a.mutate.empty()) {
    if (cfg.model != ModelKind::Rel) {
      err << "error: --mutate applies to the rel model only\n";
      return kUsage;
    }
    const std::size_t top = *std::max_element(a.mutate.begin(), a.mutate.end());
    auto pool = sample_mutations(RelFragment(cfg.size, cfg.max_degree), top + 1, a.seed);
    for (auto i : a.mutate) {
      if (i >= pool.size()) {
        err << "error: only " << pool.size() << " mutations are available for this fragment\n";
        return kUsage;
      }
      cfg.mutations.push_back(pool[i]);
    }
  }

  Report report;
  try {
    report = run_suite(cfg);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  if (a.json == "-") {
    out << report_json(report).dump(2) << "\n";
    return report.passed() ? kPass : kFail;
  }
  std::size_t failed = 0;
  for (const auto& c : report.checks) {
    out << (c.passed ? "PASS " : "FAIL ") << c.label() << "\n";
    if (c.passed) continue;
    ++failed;
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      out << "  counterexample: row " << ce.row;
      if (!ce.column.empty()) out << " column " << ce.column << " lhs " << ce.lhs << " rhs " << ce.rhs;
      out << "\n";
    }
    if (!c.note.empty()) out << "  " << c.note << "\n";
  }
  out << report.checks.size() << " checks, " << failed << " failed\n";
  if (!a.json.empty() && !write_json(a.json, report_json(report), out, err)) return kUsage;
  return report.passed() ? kPass : kFail;
}

int cmd_basis(const BasisArgs& a, std::ostream& out, std::ostream& err) {
  if (a.characteristic != 0 && !is_prime(a.characteristic)) {
    err << "error: characteristic must be 0 or a prime, got " << a.characteristic << "\n";
    return kUsage;
  }
  PolyFragment frag(a.vars, a.characteristic, a.max_degree);
  auto basis = kernel_slice(frag, a.r);
  if (a.json != "-") out << basis_text(basis, a.vars) << "\n";
  if (!a.json.empty() && !write_json(a.json, basis_json(basis, a.vars), out, err)) return kUsage;
  return kPass;
}

}  // namespace

nlohmann::json report_json(const Report& report) {
  const auto& cfg = report.config;
  const bool rel = cfg.model == ModelKind::Rel;
  nlohmann::json config = {
      {"command", "check"},
      {"model", rel ? "rel" : "poly"},
      {rel ? "size" : "vars", cfg.size},
      {"characteristic", cfg.characteristic},
      {"max_degree", cfg.max_degree},
      {"max_n", cfg.options.max_n},
      {"max_order", cfg.options.max_order},
      {"samples", cfg.options.samples},
      {"seed", cfg.options.seed},
  };
  auto suites = nlohmann::json::array();
  for (const auto& s : suite_names())
    if (cfg.suites.empty() || cfg.suites.count(s)) suites.push_back(s);
  config["suites"] = suites;

  auto checks = nlohmann::json::array();
  for (const auto& c : report.checks) {
    nlohmann::json j = {{"name", c.name}, {"params", params_json(c)}, {"status", c.passed ? "pass" : "fail"}};
    if (c.counterexample) {
      const auto& ce = *c.counterexample;
      j["counterexample"] = {{"row", ce.row}, {"column", ce.column}, {"lhs", ce.lhs}, {"rhs", ce.rhs}};
    }
    if (!c.note.empty()) j["note"] = c.note;
    checks.push_back(std::move(j));
  }
  return {{"config", config}, {"checks", checks}, {"status", report.passed() ? "pass" : "fail"}};
}

nlohmann::json basis_json(const std::vector<Monomial>& basis, std::uint32_t vars) {
  auto out = nlohmann::json::array();
  for (const auto& m : basis) {
    std::vector<std::uint32_t> exps(vars, 0);
    for (std::uint32_t i = 1; i <= vars; ++i) exps[i - 1] = m.count(i);
    out.push_back(exps);
  }
  return out;
}

std::string basis_text(const std::vector<Monomial>& basis, std::uint32_t vars) {
  std::string s;
  for (const auto& m : basis) {
    if (!s.empty()) s += ' ';
    s += monomial_to_string(m, vars);
  }
  return s;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of differential modalities on truncated Rel and polynomial fragments", "dmod"};
  app.require_subcommand(1);

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run the axiom suites on a fragment");
  check->add_option("model", ca.model, "rel or poly")->required()->check(CLI::IsMember({"rel", "poly"}));
  check->add_option("--size,--vars", ca.size, "Base set size (rel) or number of variables (poly)")
      ->each([&](const std::string&) { ca.size_given = true; });
  check->add_option("--char", ca.characteristic, "Field characteristic, 0 or a prime (poly only)");
  check->add_option("--max-degree", ca.max_degree, "Degree bound D (default 3 for rel, 8 for poly)")
      ->each([&](const std::string&) { ca.degree_given = true; });
  check->add_option("--max-n", ca.max_n, "Largest grade index")->capture_default_str();
  check->add_option("--max-order", ca.max_order, "Largest order in the higher-order families")->capture_default_str();
  check->add_option("--samples", ca.samples, "Sampled maps for naturality checks")->capture_default_str();
  check->add_option("--seed", ca.seed, "Sampling seed")->capture_default_str();
  check->add_option("--suite", ca.suites, "Restrict to suites (repeatable)")
      ->check(CLI::IsMember(suite_names()));
  check->add_option("--mutate", ca.mutate, "Flip the INDEX-th sampled entry of m, Δ or ∂ (rel only; testing aid)");
  check->add_option("--json", ca.json, "Write the JSON report to PATH ('-' for stdout)");

  BasisArgs ba;
  auto* basis = app.add_subcommand("basis", "Print the kernel basis of the (r+1)-st derivative up to degree D");
  basis->add_option("--vars", ba.vars, "Number of variables")->capture_default_str();
  basis->add_option("--char", ba.characteristic, "Field characteristic, 0 or a prime")->capture_default_str();
  basis->add_option("--r", ba.r, "Order r")->required();
  basis->add_option("--max-degree", ba.max_degree, "Degree bound D")->capture_default_str();
  basis->add_option("--json", ba.json, "Write the exponent vectors to PATH ('-' for stdout)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    auto used = app.get_subcommands();
    out << (used.empty() ? app.help() : used.front()->help());
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(ca, out, err);
    return cmd_basis(ba, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace dmod::cli
