#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace swancalc::catalog {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

/// kind is one of curve-cover, surface-rank1, chow, log-chart, group-rep,
/// correspondence; params and expected are kind specific.
struct Entry {
  std::string id;
  std::string kind;
  std::vector<std::string> checks;
  json params;
  json expected;  // {check: {value name: value, ..., "source": "..."}}
};

struct Catalog {
  std::vector<Entry> entries;
};

struct Diagnostic {
  std::string entry;
  std::string message;
};

/// Schema and invariant validation, no execution.
std::vector<Diagnostic> validate(const json& doc);
/// Throws InputError listing the diagnostics.
Catalog parse(const json& doc);
/// The catalog compiled into the library.
const json& builtin_document();
Catalog builtin();

/// swan, gos, trace, different, kato, laumon, log, group.
const std::vector<std::string>& check_names();

struct RunOptions {
  std::vector<std::string> entries;  // empty: all
  std::vector<std::string> checks;   // empty: every check listed by the entry
  std::int64_t precision = 0;        // 0: default precision
  std::uint32_t field_p = 0;         // nonzero: base change to F_{p^k}
  int field_k = 0;
};

enum class Status { Pass, Fail, InputError, Error };

struct Report {
  std::string entry;
  std::string check;
  Status status = Status::Fail;
  json values;
  std::string message;
};

/// Reports sorted by entry id, then check name.
std::vector<Report> run(const Catalog& c, const RunOptions& opt);
Report run_check(const Entry& e, const std::string& check, const RunOptions& opt);

const char* status_name(Status s);
json to_json(const std::vector<Report>& reports);
/// 0 all pass, 2 any input error, else 1.
int exit_code(const std::vector<Report>& reports);

}  // namespace swancalc::catalog
