// ginv: compute and certify generalized inverses over exact ring backends,
// run verification suites, and emit the relation schema.
//
// Exit codes: 0 success / certificate found / all claims pass; 1 IO or parse
// failure; 2 usage error; 3 witness does not exist; 4 undecided at solver
// bounds; 5 verification counterexample.

#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>

#include "ginv/gen_inverse.hpp"
#include "ginv/oracle.hpp"
#include "ginv/report.hpp"
#include "ginv/ring_io.hpp"
#include "ginv/suite.hpp"
#include "ginv/toeplitz.hpp"

namespace {

using namespace ginv;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitNotFound = 3;
constexpr int kExitUnknown = 4;
constexpr int kExitCounterexample = 5;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file_atomic(out_path, content);
}

int env_k_max() {
  const char* env = std::getenv("GINV_KMAX");
  if (env == nullptr) return 0;
  int v = std::atoi(env);
  if (v < 1) throw Error(Errc::InvalidBound, "GINV_KMAX must be a positive integer");
  return v;
}

RingPtr load_ring(const std::string& path, int band_bound, int corr_bound) {
  json spec = load_json_file(path);
  if (band_bound >= 0) spec["band_bound"] = band_bound;
  if (corr_bound >= 0) spec["corr_bound"] = corr_bound;
  return ring_from_spec(spec);
}

json result_document(const RingPtr& ring, InverseKind kind, const Element& a,
                     const FindResult& result) {
  if (result.found()) {
    json doc = certificate_to_json(*result.certificate);
    doc["status"] = "found";
    return doc;
  }
  json doc{{"ring_id", ring->id()},
           {"kind", kind_name(kind)},
           {"a", ring->element_payload(a)},
           {"status",
            result.status == FindStatus::NotFound ? "not-found" : "unknown-at-bound"},
           {"reason", result.reason}};
  return doc;
}

int status_exit(const FindResult& result) {
  switch (result.status) {
    case FindStatus::Found: return kExitOk;
    case FindStatus::NotFound: return kExitNotFound;
    case FindStatus::UnknownAtBound: return kExitUnknown;
  }
  return kExitError;
}

struct ComputeArgs {
  std::string ring_path, element_path, b_path, c_path, out_path, certificate_path;
  std::string kind_name;
  int k_max = 0;
  int band_bound = -1, corr_bound = -1;
  bool verify_only = false;
};

InverseKind parse_kind_or_die(const std::string& name) {
  auto kind = parse_kind(name);
  if (!kind) {
    std::string msg = "unknown kind '" + name + "'; valid kinds:";
    for (const auto& k : all_kind_names()) msg += " " + k;
    throw CLI::ValidationError(msg);
  }
  return *kind;
}

int run_compute(const ComputeArgs& args, bool oracle_mode) {
  RingPtr ring = load_ring(args.ring_path, args.band_bound, args.corr_bound);
  if (args.verify_only) {
    json doc = load_json_file(args.certificate_path);
    Certificate cert = certificate_from_json(ring, doc);
    json eqs = json::array();
    for (const auto& e : cert.equations)
      eqs.push_back(json{{"id", e.id}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds}});
    bool ok = cert.verified();
    json verdict{{"ring_id", ring->id()},
                 {"kind", kind_name(cert.kind)},
                 {"status", ok ? "verified" : "failed"},
                 {"equations", eqs}};
    emit(args.out_path, verdict.dump(2) + "\n");
    return ok ? kExitOk : kExitCounterexample;
  }

  InverseKind kind = parse_kind_or_die(args.kind_name);
  Element a = element_from_doc(ring, load_json_file(args.element_path));
  std::optional<AuxPair> aux;
  if (kind_needs_aux(kind)) {
    if (args.b_path.empty() || args.c_path.empty())
      throw CLI::ValidationError("kind " + args.kind_name + " needs --b and --c element files");
    aux = AuxPair{element_from_doc(ring, load_json_file(args.b_path)),
                  element_from_doc(ring, load_json_file(args.c_path))};
  }
  int k_max = args.k_max > 0 ? args.k_max : env_k_max();

  FindResult result;
  if (oracle_mode) {
    OracleOptions opts;
    opts.k_max = k_max;
    auto cert = oracle_search(a, kind, aux, opts);
    result = cert ? FindResult::ok(*cert)
                  : FindResult::none("exhaustive search found no witness");
  } else {
    ComputeOptions opts;
    opts.k_max = k_max;
    result = compute_inverse(a, kind, aux, opts);
  }
  emit(args.out_path, result_document(ring, kind, a, result).dump(2) + "\n");
  return status_exit(result);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact generalized-inverse calculator and claim verifier"};
  app.require_subcommand(1);

  ComputeArgs cargs;
  CLI::App* compute = app.add_subcommand("compute", "compute an inverse with certificate");
  compute->add_option("--ring", cargs.ring_path, "ring spec JSON")->required();
  compute->add_option("--element", cargs.element_path, "element JSON");
  compute->add_option("--kind", cargs.kind_name, "inverse kind (kebab-case)");
  compute->add_option("--b", cargs.b_path, "b element for (b,c) kinds");
  compute->add_option("--c", cargs.c_path, "c element for (b,c) kinds");
  compute->add_option("--k-max", cargs.k_max, "index search bound");
  compute->add_option("--band-bound", cargs.band_bound, "Toeplitz symbol bound");
  compute->add_option("--corr-bound", cargs.corr_bound, "Toeplitz correction bound");
  compute->add_option("--out", cargs.out_path, "output path (default stdout)");
  compute->add_flag("--verify-only", cargs.verify_only, "re-verify a certificate");
  compute->add_option("--certificate", cargs.certificate_path,
                      "certificate JSON for --verify-only");

  ComputeArgs oargs;
  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive-search certificate");
  oracle->add_option("--ring", oargs.ring_path, "ring spec JSON")->required();
  oracle->add_option("--element", oargs.element_path, "element JSON")->required();
  oracle->add_option("--kind", oargs.kind_name, "inverse kind")->required();
  oracle->add_option("--b", oargs.b_path, "b element for (b,c) kinds");
  oracle->add_option("--c", oargs.c_path, "c element for (b,c) kinds");
  oracle->add_option("--k-max", oargs.k_max, "index search bound");
  oracle->add_option("--out", oargs.out_path, "output path (default stdout)");

  std::string suite_path, verify_out, verify_format = "md";
  std::int64_t verify_seed = -1;
  bool serial = false;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite_path, "suite TOML")->required();
  verify->add_option("--out", verify_out, "output path (default stdout)");
  verify->add_option("--format", verify_format, "report format: json|md");
  verify->add_option("--seed", verify_seed, "override sample seeds");
  verify->add_flag("--serial", serial, "serial claim evaluation");

  std::vector<std::string> schema_ring_paths;
  std::string schema_out, schema_format = "dot";
  int schema_k_max = 0;
  CLI::App* schema_cmd = app.add_subcommand("schema", "emit the relation schema");
  schema_cmd->add_option("--rings", schema_ring_paths, "ring spec JSONs")->required();
  schema_cmd->add_option("--format", schema_format, "dot|json|md");
  schema_cmd->add_option("--out", schema_out, "output path (default stdout)");
  schema_cmd->add_option("--k-max", schema_k_max, "index search bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (compute->parsed()) {
      if (!cargs.verify_only && (cargs.element_path.empty() || cargs.kind_name.empty()))
        throw CLI::ValidationError("compute needs --element and --kind (or --verify-only)");
      if (cargs.verify_only && cargs.certificate_path.empty())
        throw CLI::ValidationError("--verify-only needs --certificate");
      return run_compute(cargs, false);
    }
    if (oracle->parsed()) return run_compute(oargs, true);
    if (verify->parsed()) {
      auto runs = load_suite_file(suite_path);
      if (verify_seed >= 0)
        for (auto& run : runs)
          if (run.scope.kind == Scope::Kind::Sample)
            run.scope.seed = static_cast<std::uint64_t>(verify_seed);
      auto results =
          run_suite(runs, serial ? par::ExecMode::Serial : par::ExecMode::Parallel);
      emit(verify_out,
           emit_report(results, nullptr, parse_report_format(verify_format)));
      for (const auto& r : results)
        if (r.verdict == ClaimResult::Verdict::Counterexample) return kExitCounterexample;
      return kExitOk;
    }
    if (schema_cmd->parsed()) {
      std::vector<RingPtr> rings;
      for (const auto& p : schema_ring_paths) rings.push_back(ring_from_spec_file(p));
      ComputeOptions opts;
      opts.k_max = schema_k_max > 0 ? schema_k_max : env_k_max();
      RelationSchema schema = build_relation_schema(rings, opts);
      ReportFormat fmt = parse_report_format(schema_format);
      std::string content = fmt == ReportFormat::DOT
                                ? schema_to_dot(schema)
                                : emit_report({}, &schema, fmt);
      emit(schema_out, content);
      return kExitOk;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}
