// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria run against the finite test rings Z6, Z8, Z12, Z2xZ4, M2(Z2),
// M2(Z3), the rational matrix backend, and the Toeplitz backend.

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ginv/gen_inverse.hpp"
#include "ginv/matmod_ring.hpp"
#include "ginv/matq_ring.hpp"
#include "ginv/oracle.hpp"
#include "ginv/report.hpp"
#include "ginv/ring_io.hpp"
#include "ginv/suite.hpp"
#include "ginv/toeplitz.hpp"
#include "ginv/zn_ring.hpp"

using namespace ginv;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("[AC%d] %s %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

std::vector<RingPtr> finite_rings() {
  return {ZnRing::create(6),
          ZnRing::create(8),
          ZnRing::create(12),
          ProductRing::create({ZnRing::create(2), ZnRing::create(4)}),
          MatModRing::create(2, 2),
          MatModRing::create(2, 3)};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// AC1: every registered claim over every finite test ring, exhaustively.
void criterion1() {
  auto t0 = std::chrono::steady_clock::now();
  std::size_t runs = 0, passes = 0;
  std::string first_failure;
  for (const auto& ring : finite_rings())
    for (const auto& claim : claim_registry()) {
      ClaimResult res = run_claim(claim, ring, Scope::all());
      ++runs;
      if (res.verdict == ClaimResult::Verdict::Pass) {
        ++passes;
      } else if (first_failure.empty()) {
        first_failure = claim.id + " over " + ring->id();
        if (!res.tuple.empty()) first_failure += " at " + res.tuple[0];
      }
    }
  double secs = seconds_since(t0);
  bool ok = passes == runs && runs == claim_registry().size() * 6 && secs < 60.0;
  std::ostringstream detail;
  detail << "equivalence suite: " << passes << "/" << runs << " claim runs pass in " << secs
         << " s (< 60 s)";
  if (!first_failure.empty()) detail << "; first failure: " << first_failure;
  report(1, ok, detail.str());
}

// AC2: construction-route vs oracle agreement for every element and kind.
void criterion2() {
  std::size_t checked = 0, disagreements = 0;
  std::string first;
  for (const auto& ring : finite_rings()) {
    for (std::size_t i = 0; i < ring->size(); ++i) {
      Element a = ring->element_at(i);
      for (InverseKind kind : kAllKinds) {
        std::optional<AuxPair> aux;
        if (kind_needs_aux(kind)) aux = AuxPair{a, ring->star(a)};
        FindResult built = compute_inverse(a, kind, aux);
        auto oracle = oracle_search(a, kind, aux);
        ++checked;
        bool agree = built.found() == oracle.has_value();
        if (agree && built.found() && kind_is_unique(kind)) {
          agree = ring->equal(built.certificate->witness, oracle->witness);
          if (kind_uses_index(kind)) agree = agree && built.certificate->index_k == oracle->index_k;
        }
        if (!agree) {
          ++disagreements;
          if (first.empty())
            first = ring->id() + " " + ring->encode(a) + " " + kind_name(kind);
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "oracle agreement: " << checked << " (element, kind) pairs, " << disagreements
         << " disagreements";
  if (!first.empty()) detail << "; first: " << first;
  report(2, disagreements == 0, detail.str());
}

// AC3: all right-core witnesses of an element share the product a*x.
void criterion3() {
  std::size_t elements = 0, violations = 0;
  for (const auto& ring : finite_rings()) {
    auto table = FiniteTable::cached(ring);
    for (std::size_t i = 0; i < table->size(); ++i) {
      auto a = static_cast<FiniteTable::Idx>(i);
      auto ws = all_witness_indices(*table, a, InverseKind::RightCore);
      if (ws.empty()) continue;
      ++elements;
      auto ax0 = table->mul(a, ws[0]);
      for (auto w : ws)
        if (table->mul(a, w) != ax0) ++violations;
    }
  }
  std::ostringstream detail;
  detail << "right-core invariance: " << elements << " right-core-invertible elements, "
         << violations << " products a*x differing from the first witness";
  report(3, violations == 0, detail.str());
}

// AC4: witness power laws for n in {2,3}.
void criterion4() {
  std::size_t checks = 0, violations = 0;
  for (const auto& ring : finite_rings()) {
    auto table = FiniteTable::cached(ring);
    for (std::size_t i = 0; i < table->size(); ++i) {
      auto a = static_cast<FiniteTable::Idx>(i);
      auto ws = all_witness_indices(*table, a, InverseKind::RightCore);
      if (ws.empty()) continue;
      for (int n = 2; n <= 3; ++n) {
        auto an = table->pow(a, n);
        auto an1 = table->pow(a, n - 1);
        for (auto x : ws) {
          ++checks;
          if (!table_satisfies(*table, InverseKind::RightCore, an, table->pow(x, n)))
            ++violations;
        }
        for (auto w : all_witness_indices(*table, an, InverseKind::RightCore)) {
          ++checks;
          if (!table_satisfies(*table, InverseKind::RightCore, a, table->mul(an1, w)))
            ++violations;
        }
      }
    }
  }
  std::ostringstream detail;
  detail << "power laws (n = 2, 3): " << checks << " witness checks, " << violations
         << " violations";
  report(4, violations == 0, detail.str());
}

// AC5: the one-sided separation in the Toeplitz backend.
void criterion5() {
  auto ring = ToeplitzRing::create();  // band/corr bounds 4
  Element s = ring->make(ToeplitzElement::shift());
  Element ss = ring->make(ToeplitzElement::shift_star());
  bool ok = true;
  std::string detail = "Toeplitz separation:";

  FindResult rc = right_core_inverse(ss);
  bool rc_ok = rc.found() && ring->equal(rc.certificate->witness, s) &&
               rc.certificate->equations.size() == 3 && rc.certificate->verified();
  ok = ok && rc_ok;
  detail += rc_ok ? " S* right-core-certified with witness S;"
                  : " S* right-core certificate WRONG;";

  FindResult core = core_inverse(ss);
  bool core_none = !core.found();
  ok = ok && core_none;
  detail += core_none ? " core(S*) reports none;" : " core(S*) unexpectedly found;";

  FindResult s_rc = right_core_inverse(s);
  bool s_none = !s_rc.found();
  ok = ok && s_none;
  auto ring6 = ToeplitzRing::create({6, 6});
  FindResult s_rc6 = right_core_inverse(ring6->make(ToeplitzElement::shift()));
  bool s_none6 = !s_rc6.found();
  ok = ok && s_none6;
  detail += (s_none && s_none6) ? " S has no certificate at bounds 4 and 6"
                                : " S unexpectedly certified";
  report(5, ok, detail);
}

// AC6: pseudo-core strictly beyond core in Z8 and in rational matrices.
void criterion6() {
  bool ok = true;
  std::string detail = "pseudo-core separations:";

  auto z8 = ZnRing::create(8);
  FindResult pc = pseudo_core_inverse(z8->make(2));
  bool z8_ok = pc.found() && z8->is_zero(pc.certificate->witness) &&
               pc.certificate->index_k == 3 && !core_inverse(z8->make(2)).found();
  ok = ok && z8_ok;
  detail += z8_ok ? " 2 in Z8 pseudo-core (0, k=3) and not core;" : " Z8 case WRONG;";

  auto mq = GaussianMatrixRing::create(2);
  Element nil = mq->make(ExactMatrix::parse_rows({{"0", "1"}, {"0", "0"}}));
  FindResult mpc = pseudo_core_inverse(nil);
  bool mq_ok = mpc.found() && mq->is_zero(mpc.certificate->witness) &&
               mpc.certificate->index_k == 2 && !core_inverse(nil).found();
  ok = ok && mq_ok;
  detail += mq_ok ? " [[0,1],[0,0]] pseudo-core (0, k=2) and not core" : " matrix case WRONG";
  report(6, ok, detail);
}

// AC7: 500 seeded random rational matrices up to 5x5, exact kernel equations.
void criterion7() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(20240807);
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> im(0, 3);
  auto cell = [&] {
    Rational re(BigInt(num(rng)), BigInt(den(rng)));
    Rational imag = im(rng) == 0 ? Rational(BigInt(num(rng)), BigInt(den(rng))) : Rational(0);
    return Gaussian(std::move(re), std::move(imag));
  };
  std::size_t failures = 0;
  for (int t = 0; t < 500; ++t) {
    int n = 1 + t % 5;
    ExactMatrix a(n, n);
    if (t % 2 == 0) {
      // rank-deficient by construction
      int r = t % n;
      ExactMatrix f(n, r), g(r, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) f.at(i, j) = cell();
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j) g.at(i, j) = cell();
      a = f * g;
    } else {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.at(i, j) = cell();
    }
    ExactMatrix mp = mp_inverse(a);
    ExactMatrix amp = a * mp, mpa = mp * a;
    if (!(amp * a == a && mpa * mp == mp && amp.conj_transpose() == amp &&
          mpa.conj_transpose() == mpa))
      ++failures;
    DrazinResult d = drazin_inverse(a);
    if (!(a * d.inverse == d.inverse * a && d.inverse * a * d.inverse == d.inverse &&
          a.pow(d.index) == a.pow(d.index + 1) * d.inverse))
      ++failures;
    auto g = group_inverse(a);
    if (g.has_value() != (d.index <= 1)) ++failures;
    if (g && !(a * *g * a == a && *g * a * *g == *g && a * *g == *g * a)) ++failures;
  }
  double secs = seconds_since(t0);
  std::ostringstream detail;
  detail << "exact matrix kernels: 500 seeded matrices (1x1..5x5, half rank-deficient), "
         << failures << " equation failures in " << secs << " s (< 120 s)";
  report(7, failures == 0 && secs < 120.0, detail.str());
}

// AC8: relation schema content and golden DOT byte stability.
void criterion8() {
  std::vector<RingPtr> rings = {ZnRing::create(6), ZnRing::create(8), MatModRing::create(2, 2),
                                GaussianMatrixRing::create(2), ToeplitzRing::create()};
  RelationSchema schema = build_relation_schema(rings);
  bool edges_ok = schema.has_edge(SchemaClass::RightCore, SchemaClass::RightPseudoCore) &&
                  schema.has_edge(SchemaClass::Core, SchemaClass::RightCore) &&
                  schema.has_edge(SchemaClass::Core, SchemaClass::PseudoCore) &&
                  schema.has_edge(SchemaClass::PseudoCore, SchemaClass::Drazin) &&
                  schema.has_edge(SchemaClass::EP, SchemaClass::Core);
  const SchemaNonEdge* sep1 = schema.find_non_edge(SchemaClass::RightCore, SchemaClass::Core);
  const SchemaNonEdge* sep2 = schema.find_non_edge(SchemaClass::PseudoCore, SchemaClass::Core);
  bool seps_ok = sep1 != nullptr && sep1->witness == "T{1:1}+C[]" &&
                 sep1->ring_id == "Toeplitz(Q)" && sep2 != nullptr && sep2->witness == "2" &&
                 sep2->ring_id == "Z8";

  std::string dot1 = schema_to_dot(schema);
  std::string dot2 = schema_to_dot(build_relation_schema(rings));
  bool stable = dot1 == dot2;

  bool golden_ok = false;
  const char* golden_env = std::getenv("GINV_GOLDEN");
  std::string golden_path = golden_env ? golden_env : "tests/golden/relation_schema.dot";
  std::ifstream golden(golden_path, std::ios::binary);
  if (golden) {
    std::stringstream buf;
    buf << golden.rdbuf();
    golden_ok = buf.str() == dot1;
  }
  std::ostringstream detail;
  detail << "relation schema: required edges " << (edges_ok ? "present" : "MISSING")
         << ", separations " << (seps_ok ? "present" : "MISSING") << ", DOT "
         << (stable ? "byte-stable" : "UNSTABLE") << ", golden "
         << (golden_ok ? "matches" : "differs");
  report(8, edges_ok && seps_ok && stable && golden_ok, detail.str());
}

// AC9: CLI compute -> verify-only round trip on 50 mixed cases.
void criterion9() {
  const char* cli = std::getenv("GINV_CLI");
  const char* data = std::getenv("GINV_DATA");
  if (cli == nullptr || data == nullptr) {
    report(9, false, "CLI round trip: GINV_CLI / GINV_DATA not set");
    return;
  }
  struct Case {
    const char* ring;
    std::string element;
    const char* kind;
    int expect_exit;  // 0 found, 3 not found, 4 unknown-at-bound
  };
  std::vector<Case> cases;
  // Z6: every element, three kinds each (all exist in Z6)
  for (int v = 0; v < 6; ++v)
    for (const char* kind : {"core", "right-core", "mp"})
      cases.push_back({"z6.json", "{\"ring_id\":\"Z6\",\"value\":\"" + std::to_string(v) + "\"}",
                       kind, 0});
  // Z8: pseudo-core exists everywhere, core fails for 2 and 6
  for (int v = 0; v < 8; ++v)
    cases.push_back({"z8.json", "{\"ring_id\":\"Z8\",\"value\":\"" + std::to_string(v) + "\"}",
                     "pseudo-core", 0});
  for (int v : {2, 6})
    cases.push_back({"z8.json", "{\"ring_id\":\"Z8\",\"value\":\"" + std::to_string(v) + "\"}",
                     "core", 3});
  // Z12: drazin everywhere
  for (int v = 0; v < 12; ++v)
    cases.push_back({"z12.json", "{\"ring_id\":\"Z12\",\"value\":\"" + std::to_string(v) + "\"}",
                     "drazin", 0});
  // Z2xZ4 product ring: group inverse of the two idempotent components
  for (const char* comp : {"[\"0\",\"1\"]", "[\"1\",\"0\"]", "[\"1\",\"1\"]",
                           "[\"0\",\"0\"]"})
    cases.push_back({"z2xz4.json",
                     std::string("{\"ring_id\":\"Z2xZ4\",\"components\":") + comp + "}",
                     "drazin", 0});
  // matrices
  cases.push_back({"matqi2.json",
                   R"x({"ring_id":"M2(Q(i))","entries":[["1","1"],["0","0"]]})x", "core", 0});
  cases.push_back({"matqi2.json",
                   R"x({"ring_id":"M2(Q(i))","entries":[["0","1"],["0","0"]]})x", "core", 3});
  cases.push_back({"matqi2.json",
                   R"x({"ring_id":"M2(Q(i))","entries":[["0","1"],["0","0"]]})x", "pseudo-core",
                   0});
  cases.push_back({"matqi2.json",
                   R"x({"ring_id":"M2(Q(i))","entries":[["i","0"],["0","0"]]})x", "mp", 0});
  // Toeplitz
  cases.push_back({"toeplitz.json", R"x({"ring_id":"Toeplitz(Q)","name":"S*"})x", "right-core", 0});
  cases.push_back({"toeplitz.json", R"x({"ring_id":"Toeplitz(Q)","name":"S"})x", "right-core", 4});
  cases.push_back({"toeplitz.json", R"x({"ring_id":"Toeplitz(Q)","name":"S*"})x", "core", 4});
  cases.push_back(
      {"toeplitz.json", R"x({"ring_id":"Toeplitz(Q)","name":"S*"})x", "right-pseudo-core", 0});

  std::size_t ran = 0, bad = 0;
  std::string first;
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const Case& c = cases[i];
    std::string elem_path = "ac9_elem_" + std::to_string(i) + ".json";
    std::string cert_path = "ac9_cert_" + std::to_string(i) + ".json";
    {
      std::ofstream out(elem_path);
      out << c.element;
    }
    std::string ring_path = std::string(data) + "/rings/" + c.ring;
    std::string cmd = std::string(cli) + " compute --ring " + ring_path + " --element " +
                      elem_path + " --kind " + c.kind + " --out " + cert_path +
                      " >/dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    int exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    ++ran;
    bool ok = exit_code == c.expect_exit;
    if (ok && exit_code == 0) {
      std::string vcmd = std::string(cli) + " compute --ring " + ring_path +
                         " --verify-only --certificate " + cert_path + " >/dev/null 2>&1";
      int vc = std::system(vcmd.c_str());
      ok = WIFEXITED(vc) && WEXITSTATUS(vc) == 0;
    }
    if (!ok) {
      ++bad;
      if (first.empty())
        first = std::string(c.ring) + " " + c.kind + " expected " +
                std::to_string(c.expect_exit) + " got " + std::to_string(exit_code);
    }
    std::remove(elem_path.c_str());
    std::remove(cert_path.c_str());
  }
  std::ostringstream detail;
  detail << "CLI round trip: " << ran << " cases (>= 50), " << bad << " failures";
  if (!first.empty()) detail << "; first: " << first;
  report(9, ran >= 50 && bad == 0, detail.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0)
    std::printf("acceptance: all 9 criteria pass\n");
  else
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
