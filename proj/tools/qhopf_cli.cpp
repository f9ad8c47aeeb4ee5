// qhopf: validation, character tables and Frobenius–Schur indicators from the command line.
// Exit codes: 0 ok, 1 failure or mismatch, 2 parse/usage error, 3 entry budget exhausted.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "qhopf/algebra_spec.hpp"
#include "qhopf/errors.hpp"
#include "qhopf/indicators.hpp"
#include "qhopf/qha.hpp"
#include "qhopf/reptheory.hpp"
#include "qhopf/serialization.hpp"
#include "qhopf/tensor.hpp"

using namespace qhopf;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kBudget = 3;
constexpr std::uint32_t kMaxN = 12;

struct TableRow {
  const char* label;
  const char* spec;
  int values[7];
};

// ν_2 … ν_8 of the two-dimensional simple module
const TableRow kTable6[] = {
    {"K", "kac", {1, 0, 0, 0, 1, 0, 2}},
    {"K_u", "h_u:kac", {-1, 0, 0, 0, -1, 0, 2}},
    {"C[D8]", "group:D8", {1, 0, 2, 0, 1, 0, 2}},
    {"C[D8]_u", "h_u:group:D8", {-1, 0, 2, 0, -1, 0, 2}},
    {"C[Q8]", "group:Q8", {-1, 0, 2, 0, -1, 0, 2}},
    {"C[Q8]_u", "h_u:group:Q8", {1, 0, 2, 0, 1, 0, 2}},
};

struct Common {
  std::string format = "table";
  std::optional<std::size_t> budget;
  std::optional<std::uint64_t> gauge_seed;
};

void apply_budget(const Common& c) {
  if (c.budget) {
    set_entry_budget(*c.budget);
  } else if (const char* env = std::getenv("QHOPF_BUDGET")) {
    try {
      set_entry_budget(std::stoull(env));
    } catch (const std::exception&) {
      throw ParseError(std::string("bad QHOPF_BUDGET '") + env + "'");
    }
  }
}

QuasiHopfAlgebra load(const std::string& text, const Common& c) {
  AlgebraSpec spec = AlgebraSpec::parse(text);
  if (c.gauge_seed) spec.gauge_seed = c.gauge_seed;
  return build_algebra(spec);
}

bool json_format(const Common& c) { return c.format == "json"; }

int cmd_validate(const std::string& text, const Common& c) {
  const QuasiHopfAlgebra h = load(text, c);
  const ValidationReport r = validate(h);
  if (json_format(c)) {
    Json checks = Json::array();
    for (const auto& k : r.checks) checks.push_back(Json{{"name", k.name}, {"passed", k.passed}, {"witness", k.witness}});
    std::cout << Json{{"algebra", h.name}, {"passed", r.passed()}, {"checks", checks}}.dump(2) << "\n";
  } else {
    std::cout << "algebra " << h.name << " (dim " << h.dim << ")\n" << r.to_text();
    std::cout << (r.passed() ? "all axioms hold\n" : "axiom failure\n");
  }
  return r.passed() ? kOk : kFailure;
}

std::vector<SimpleCharacter> characters_for(const QuasiHopfAlgebra& h, const std::string& source) {
  if (source == "regular") {
    QuasiHopfAlgebra fresh = h;
    fresh.blocks = compute_block_basis(h);
    return simple_characters(fresh);
  }
  return simple_characters(h);
}

void require_valid(const QuasiHopfAlgebra& h) {
  const ValidationReport r = validate(h);
  if (!r.passed()) throw ValidationFailure(h.name + " is not a quasi-Hopf algebra:\n" + r.to_text());
}

int report_holes(const IndicatorTable& t) {
  if (!t.has_holes()) return kOk;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    for (std::uint32_t n = t.n_min; n <= t.n_max; ++n) {
      const IndicatorCell& cell = t.at(r, n);
      if (!cell.value) std::cerr << "hole: V" << r << " n=" << n << ": " << cell.note << "\n";
    }
  }
  return kBudget;
}

int cmd_indicators(const std::string& text, std::uint32_t n_min, std::uint32_t n_max, const std::string& source,
                   const Common& c) {
  if (n_min > n_max) throw ParseError("--n-min exceeds --n-max");
  const QuasiHopfAlgebra h = load(text, c);
  require_valid(h);
  TableOptions options;
  options.n_min = n_min;
  options.n_max = n_max;
  options.characters = characters_for(h, source);
  const IndicatorTable t = indicator_table(h, options);
  if (json_format(c)) {
    std::cout << table_to_json(t).dump(2) << "\n";
  } else {
    std::cout << "algebra " << t.algebra_name << "\n" << table_to_markdown(t);
  }
  return report_holes(t);
}

int cmd_characters(const std::string& text, const std::string& source, const Common& c) {
  const QuasiHopfAlgebra h = load(text, c);
  require_valid(h);
  const auto chars = characters_for(h, source);
  if (json_format(c)) {
    Json j = characters_to_json(chars);
    j["algebra"] = h.name;
    j["basis_labels"] = h.basis_labels;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "algebra " << h.name << "\n" << characters_to_text(h, chars);
  }
  return kOk;
}

int cmd_export(const std::string& text, const Common& c) {
  std::cout << algebra_to_json(load(text, c)).dump(2) << "\n";
  return kOk;
}

int cmd_table6(const Common& c) {
  constexpr std::uint32_t n_min = 2, n_max = 8;
  std::vector<std::vector<std::optional<CycNumber>>> got;
  std::vector<std::string> mismatches;
  bool holes = false;
  for (const auto& row : kTable6) {
    const QuasiHopfAlgebra h = load(row.spec, c);
    TableOptions options;
    options.n_min = n_min;
    options.n_max = n_max;
    for (const auto& s : simple_characters(h)) {
      if (s.dim == 2) options.characters.push_back(s);
    }
    if (options.characters.size() != 1) throw IdentityViolation(h.name + " lacks a unique 2-dimensional simple");
    const IndicatorTable t = indicator_table(h, options);
    std::vector<std::optional<CycNumber>> values;
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
      const IndicatorCell& cell = t.at(0, n);
      values.push_back(cell.value);
      const CycNumber expected(static_cast<long>(row.values[n - n_min]));
      if (!cell.value) {
        holes = true;
        mismatches.push_back(std::string(row.label) + " ν_" + std::to_string(n) + ": hole (" + cell.note + ")");
      } else if (*cell.value != expected) {
        mismatches.push_back(std::string(row.label) + " ν_" + std::to_string(n) + ": expected " +
                             to_string(expected) + ", got " + to_string(*cell.value));
      }
    }
    got.push_back(values);
  }

  auto show = [](const std::optional<CycNumber>& v) { return v ? to_string(*v) : std::string("?"); };
  if (json_format(c)) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < got.size(); ++r) {
      Json values = Json::array();
      for (const auto& v : got[r]) values.push_back(v ? cyc_to_json(*v) : Json());
      rows.push_back(Json{{"algebra", kTable6[r].label}, {"spec", kTable6[r].spec}, {"values", values}});
    }
    std::cout << Json{{"n_min", n_min}, {"n_max", n_max}, {"rows", rows}, {"matches", mismatches.empty()}}.dump(2)
              << "\n";
  } else {
    std::ostringstream os;
    os << "|         |";
    for (std::uint32_t n = n_min; n <= n_max; ++n) os << " ν_" << n << "(V) |";
    os << "\n|---------|";
    for (std::uint32_t n = n_min; n <= n_max; ++n) os << "--------|";
    os << "\n";
    for (std::size_t r = 0; r < got.size(); ++r) {
      std::string label = kTable6[r].label;
      label.resize(7, ' ');
      os << "| " << label << " |";
      for (const auto& v : got[r]) {
        std::string cell = show(v);
        cell.insert(0, 6 - std::min<std::size_t>(6, cell.size()), ' ');
        os << " " << cell << " |";
      }
      os << "\n";
    }
    std::cout << os.str();
  }
  for (const auto& m : mismatches) std::cerr << "mismatch: " << m << "\n";
  if (holes) return kBudget;
  return mismatches.empty() ? kOk : kFailure;
}

int cmd_gauge_check(const std::string& text, std::uint32_t seeds, std::uint32_t n_max, const Common& c) {
  if (c.gauge_seed) throw ParseError("gauge-check draws its own gauges; drop --gauge-seed");
  const QuasiHopfAlgebra h = load(text, c);
  require_valid(h);
  std::vector<SparseTensor> reference;
  for (std::uint32_t n = 1; n <= n_max; ++n) reference.push_back(mu_n(h, n));
  for (std::uint32_t s = 0; s < seeds; ++s) {
    const QuasiHopfAlgebra twisted = gauge_twist(h, random_gauge_transform(h, s));
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      if (mu_n(twisted, n) != reference[n - 1]) {
        std::cout << "gauge dependence: seed " << s << ", n " << n << "\n";
        return kFailure;
      }
    }
  }
  std::cout << h.name << ": mu_n unchanged for " << seeds << " gauges, n <= " << n_max << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Frobenius–Schur indicators of semisimple quasi-Hopf algebras"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub, bool with_gauge) {
    sub->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"table", "markdown", "json"}))
        ->capture_default_str();
    sub->add_option("--budget", common.budget, "Maximum stored tensor entries (overrides QHOPF_BUDGET)")
        ->check(CLI::PositiveNumber);
    if (with_gauge) sub->add_option("--gauge-seed", common.gauge_seed, "Apply a seeded random gauge transform first");
  };

  std::string spec;
  std::uint32_t n_min = 1, n_max = 8, seeds = 10, gauge_n_max = 5;
  std::string source = "auto";

  auto* validate_cmd = app.add_subcommand("validate", "Check the quasi-Hopf axioms");
  validate_cmd->add_option("spec", spec, "Algebra, e.g. kac, group:Q8, h_u:group:D8, file:alg.json")->required();
  add_common(validate_cmd, true);

  auto* indicators_cmd = app.add_subcommand("indicators", "Indicator table of every simple module");
  indicators_cmd->add_option("spec", spec, "Algebra")->required();
  indicators_cmd->add_option("--n-min", n_min, "First n")->check(CLI::Range(1u, kMaxN))->capture_default_str();
  indicators_cmd->add_option("--n-max", n_max, "Last n")->check(CLI::Range(1u, kMaxN))->capture_default_str();
  indicators_cmd->add_option("--character-source", source, "Where the simple characters come from")
      ->check(CLI::IsMember({"auto", "regular"}))
      ->capture_default_str();
  add_common(indicators_cmd, true);

  auto* characters_cmd = app.add_subcommand("characters", "Simple characters");
  characters_cmd->add_option("spec", spec, "Algebra")->required();
  characters_cmd->add_option("--character-source", source, "Where the simple characters come from")
      ->check(CLI::IsMember({"auto", "regular"}))
      ->capture_default_str();
  add_common(characters_cmd, true);

  auto* table6_cmd = app.add_subcommand("table6", "Two-dimensional simples of K, C[D8], C[Q8] and their twists");
  add_common(table6_cmd, true);

  auto* gauge_cmd = app.add_subcommand("gauge-check", "Compare mu_n before and after random gauge transforms");
  gauge_cmd->add_option("spec", spec, "Algebra")->required();
  gauge_cmd->add_option("--seeds", seeds, "Number of gauges")->capture_default_str();
  gauge_cmd->add_option("--n-max", gauge_n_max, "Last n")->check(CLI::Range(1u, kMaxN))->capture_default_str();
  add_common(gauge_cmd, false);

  auto* export_cmd = app.add_subcommand("export", "Print the algebra as JSON");
  export_cmd->add_option("spec", spec, "Algebra")->required();
  add_common(export_cmd, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    apply_budget(common);
    if (*validate_cmd) return cmd_validate(spec, common);
    if (*indicators_cmd) return cmd_indicators(spec, n_min, n_max, source, common);
    if (*characters_cmd) return cmd_characters(spec, source, common);
    if (*table6_cmd) return cmd_table6(common);
    if (*gauge_cmd) return cmd_gauge_check(spec, seeds, gauge_n_max, common);
    if (*export_cmd) return cmd_export(spec, common);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
