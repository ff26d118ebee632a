#include "ginv/suite.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ginv/ring_io.hpp"

namespace ginv {

namespace {

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::string parse_quoted(const std::string& s, const std::string& what) {
  if (s.size() < 2 || s.front() != '"' || s.back() != '"')
    throw Error(Errc::ParseError, "expected quoted string for " + what + ": " + s);
  return s.substr(1, s.size() - 2);
}

TomlValue parse_value(const std::string& raw, const std::string& key) {
  std::string v = strip(raw);
  if (v.empty()) throw Error(Errc::ParseError, "empty value for " + key);
  if (v.front() == '"') return parse_quoted(v, key);
  if (v.front() == '[') {
    if (v.back() != ']') throw Error(Errc::ParseError, "unterminated array for " + key);
    std::vector<std::string> items;
    std::string body = v.substr(1, v.size() - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      std::size_t comma = body.find(',', pos);
      std::string item = strip(body.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos));
      if (!item.empty()) items.push_back(parse_quoted(item, key));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
    return items;
  }
  if (v == "true") return true;
  if (v == "false") return false;
  try {
    return static_cast<std::int64_t>(std::stoll(v));
  } catch (...) {
    throw Error(Errc::ParseError, "cannot parse value for " + key + ": " + v);
  }
}

}  // namespace

std::map<std::string, std::vector<TomlTable>> parse_toml_subset(const std::string& text) {
  std::map<std::string, std::vector<TomlTable>> out;
  TomlTable* current = nullptr;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    if (line.size() > 4 && line.substr(0, 2) == "[[" && line.substr(line.size() - 2) == "]]") {
      std::string name = strip(line.substr(2, line.size() - 4));
      out[name].emplace_back();
      current = &out[name].back();
      continue;
    }
    std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw Error(Errc::ParseError,
                  "suite line " + std::to_string(lineno) + ": expected key = value");
    if (current == nullptr)
      throw Error(Errc::ParseError, "suite line " + std::to_string(lineno) +
                                        ": key outside any [[table]]");
    std::string key = strip(line.substr(0, eq));
    (*current)[key] = parse_value(line.substr(eq + 1), key);
  }
  return out;
}

std::vector<SuiteRun> parse_suite(const std::string& text, const std::string& base_dir) {
  auto tables = parse_toml_subset(text);
  std::vector<SuiteRun> runs;
  auto it = tables.find("run");
  if (it == tables.end()) throw Error(Errc::ParseError, "suite has no [[run]] tables");
  for (const TomlTable& tbl : it->second) {
    std::vector<std::string> claims;
    if (auto c = tbl.find("claims"); c != tbl.end())
      claims = std::get<std::vector<std::string>>(c->second);
    else if (auto c1 = tbl.find("claim"); c1 != tbl.end())
      claims.push_back(std::get<std::string>(c1->second));
    else
      throw Error(Errc::ParseError, "[[run]] needs claim or claims");
    if (claims.size() == 1 && claims[0] == "all") claims = registered_claim_ids();
    for (const auto& id : claims)
      if (find_claim(id) == nullptr)
        throw Error(Errc::ParseError, "unknown claim id in suite: " + id);

    std::vector<std::string> rings;
    if (auto r = tbl.find("rings"); r != tbl.end())
      rings = std::get<std::vector<std::string>>(r->second);
    else if (auto r1 = tbl.find("ring"); r1 != tbl.end())
      rings.push_back(std::get<std::string>(r1->second));
    else
      throw Error(Errc::ParseError, "[[run]] needs ring or rings");

    Scope scope = Scope::all();
    if (auto s = tbl.find("scope"); s != tbl.end()) {
      std::string kind = std::get<std::string>(s->second);
      if (kind == "sample") {
        std::int64_t n = 100;
        if (auto nn = tbl.find("n"); nn != tbl.end()) n = std::get<std::int64_t>(nn->second);
        auto sd = tbl.find("seed");
        if (sd == tbl.end())
          throw Error(Errc::ParseError, "sampled runs require an explicit seed");
        std::int64_t seed = std::get<std::int64_t>(sd->second);
        scope = Scope::sample(static_cast<std::size_t>(n), static_cast<std::uint64_t>(seed));
      } else if (kind != "all") {
        throw Error(Errc::ParseError, "scope must be \"all\" or \"sample\"");
      }
    }
    for (const auto& ring_path : rings) {
      SuiteRun run;
      run.claim_ids = claims;
      std::filesystem::path p(ring_path);
      run.ring_path = p.is_absolute() ? ring_path : (std::filesystem::path(base_dir) / p).string();
      run.scope = scope;
      runs.push_back(std::move(run));
    }
  }
  return runs;
}

std::vector<SuiteRun> load_suite_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_suite(buf.str(), std::filesystem::path(path).parent_path().string());
}

std::vector<ClaimResult> run_suite(const std::vector<SuiteRun>& runs, par::ExecMode mode) {
  std::vector<ClaimResult> results;
  for (const auto& run : runs) {
    RingPtr ring = ring_from_spec_file(run.ring_path);
    for (const auto& id : run.claim_ids) {
      const Claim* claim = find_claim(id);
      results.push_back(run_claim(*claim, ring, run.scope, mode));
    }
  }
  return results;
}

}  // namespace ginv
