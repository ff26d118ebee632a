#pragma once

// Verification suite files, a small TOML subset:
//
//   [[run]]
//   claims = ["Thm2.5", "Thm3.1"]   # or ["all"]
//   rings  = ["data/rings/z6.json"]
//   scope  = "all"                  # or "sample"
//   n      = 200                    # sample size (scope = "sample")
//   seed   = 42
//
// Supported syntax: [[table]] headers, key = value with strings, integers,
// booleans and flat string arrays, and # comments.

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ginv/claims.hpp"
#include "ginv/report.hpp"

namespace ginv {

using TomlValue = std::variant<std::string, std::int64_t, bool, std::vector<std::string>>;
using TomlTable = std::map<std::string, TomlValue>;

// Parses the subset above: returns the array-of-tables per header name.
std::map<std::string, std::vector<TomlTable>> parse_toml_subset(const std::string& text);

struct SuiteRun {
  std::vector<std::string> claim_ids;  // expanded (no "all")
  std::string ring_path;
  Scope scope;
};

// Expands the [[run]] tables against the claim registry. Paths are resolved
// relative to base_dir when relative.
std::vector<SuiteRun> parse_suite(const std::string& text, const std::string& base_dir);
std::vector<SuiteRun> load_suite_file(const std::string& path);

std::vector<ClaimResult> run_suite(const std::vector<SuiteRun>& runs,
                                   par::ExecMode mode = par::ExecMode::Parallel);

}  // namespace ginv
