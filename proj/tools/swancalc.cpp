#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "swancalc/catalog/catalog.hpp"
#include "swancalc/error.hpp"
#include "swancalc/local/extension.hpp"

using namespace swancalc;

namespace {

catalog::json load(const std::string& path) {
  if (path.empty()) return catalog::builtin_document();
  std::ifstream in(path);
  if (!in) throw InputError("cannot read catalog " + path);
  try {
    return catalog::json::parse(in);
  } catch (const catalog::json::exception& e) {
    throw InputError(std::string("catalog is not valid JSON: ") + e.what());
  }
}

std::pair<std::uint32_t, int> parse_field(const std::string& s) {
  std::uint32_t p = 0;
  int k = 1;
  char hat = 0;
  std::istringstream in(s);
  in >> p;
  if (!in.eof()) in >> hat >> k;
  if (in.fail() || !in.eof() || (hat != 0 && hat != '^') || p < 2 || k < 1) throw InputError("--field expects p^k, got '" + s + "'");
  return {p, k};
}

std::string summary(const catalog::Report& r) {
  std::string s = std::string(catalog::status_name(r.status)) + " " + r.entry + " " + r.check;
  if (!r.values.is_null()) s += " " + r.values.dump();
  if (!r.message.empty()) s += " (" + r.message + ")";
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact ramification invariants: Swan classes, Euler characteristics and Kato's c_F."};
  app.require_subcommand(1);
  std::string catalog_path;
  app.add_option("--catalog", catalog_path, "Catalog JSON file (default: built-in catalog)");

  auto* run = app.add_subcommand("run", "Run catalog entries");
  std::vector<std::string> entries, checks;
  bool all = false, quiet = false;
  std::int64_t precision = 0;
  std::string field, json_path;
  run->add_option("--entry", entries, "Entry id (repeatable)");
  run->add_flag("--all", all, "Run every entry");
  run->add_option("--check", checks, "Restrict to checks")->check(CLI::IsMember(catalog::check_names()));
  run->add_option("--precision", precision, "Series precision in coefficients (default 64, or SWANCALC_PRECISION)")
      ->check(CLI::Range(std::int64_t{4}, std::int64_t{1} << 20));
  run->add_option("--field", field, "Base change curve and surface entries to F_{p^k}");
  run->add_option("--json", json_path, "Write the JSON report here");
  run->add_flag("--quiet", quiet, "Only print failures");

  auto* val = app.add_subcommand("validate", "Validate a catalog without running it");
  auto* list = app.add_subcommand("list", "List catalog entries");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto doc = load(catalog_path);
    if (*val) {
      auto diags = catalog::validate(doc);
      for (auto& d : diags) std::cout << (d.entry.empty() ? "catalog" : d.entry) << ": " << d.message << "\n";
      if (diags.empty()) std::cout << "ok\n";
      return diags.empty() ? 0 : 2;
    }
    const auto cat = catalog::parse(doc);
    if (*list) {
      for (auto& e : cat.entries) {
        std::cout << e.id << " " << e.kind;
        for (auto& c : e.checks) std::cout << " " << c;
        std::cout << "\n";
      }
      return 0;
    }
    if (!all && entries.empty()) throw InputError("give --entry or --all");
    catalog::RunOptions opt;
    if (!all) opt.entries = entries;
    opt.checks = checks;
    opt.precision = precision > 0 ? precision : local::default_precision();
    if (!field.empty()) std::tie(opt.field_p, opt.field_k) = parse_field(field);
    const auto reports = catalog::run(cat, opt);
    for (auto& r : reports) {
      if (!quiet || r.status != catalog::Status::Pass) std::cout << summary(r) << "\n";
    }
    if (!json_path.empty()) {
      std::ofstream out(json_path);
      if (!out) throw InputError("cannot write " + json_path);
      out << catalog::to_json(reports).dump(2) << "\n";
    }
    const int code = catalog::exit_code(reports);
    if (!quiet) {
      std::size_t passed = 0;
      for (auto& r : reports) passed += r.status == catalog::Status::Pass;
      std::cout << passed << "/" << reports.size() << " checks passed\n";
    }
    return code;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
