// Benchmark comparing the serial reference kernels against the OpenMP
// versions on the workloads that dominate the exhaustive suites: full oracle
// sweeps and claim replays over the largest finite test rings.
//
//   ginv_bench           full workload
//   ginv_bench --quick   reduced workload (smoke use)

#include <chrono>
#include <cstring>
#include <iostream>
#ifdef _OPENMP
#include <omp.h>
#endif

#include "ginv/claims.hpp"
#include "ginv/matmod_ring.hpp"
#include "ginv/oracle.hpp"
#include "ginv/zn_ring.hpp"

using namespace ginv;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

// sweep every element x every kind through the oracle
std::size_t oracle_sweep(const RingPtr& ring, par::ExecMode mode) {
  std::size_t found = 0;
  OracleOptions opts;
  opts.mode = mode;
  for (std::size_t i = 0; i < ring->size(); ++i) {
    Element a = ring->element_at(i);
    for (InverseKind kind : kAllKinds) {
      if (kind_needs_aux(kind)) continue;
      if (oracle_search(a, kind, std::nullopt, opts)) ++found;
    }
  }
  return found;
}

std::size_t claim_sweep(const RingPtr& ring, par::ExecMode mode,
                        const std::vector<std::string>& ids) {
  std::size_t passes = 0;
  for (const auto& id : ids) {
    auto res = run_claim(*find_claim(id), ring, Scope::all(), mode);
    if (res.verdict == ClaimResult::Verdict::Pass) ++passes;
  }
  return passes;
}

void report(const char* name, double serial_ms, double parallel_ms) {
  std::cout << name << ": serial " << serial_ms << " ms, openmp " << parallel_ms
            << " ms, speedup " << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0) << "x\n";
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
  std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without openmp; both columns run the serial kernels\n";
#endif

  RingPtr ring = quick ? MatModRing::create(2, 2) : MatModRing::create(2, 3);
  std::cout << "ring: " << ring->id() << " (" << ring->size() << " elements)\n";
  FiniteTable::cached(ring);  // table build excluded from timings

  {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t serial_found = oracle_sweep(ring, par::ExecMode::Serial);
    double serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    std::size_t parallel_found = oracle_sweep(ring, par::ExecMode::Parallel);
    double parallel_ms = ms_since(t0);
    if (serial_found != parallel_found) {
      std::cerr << "MISMATCH: oracle sweep results differ\n";
      return 1;
    }
    report("oracle sweep", serial_ms, parallel_ms);
  }

  {
    std::vector<std::string> ids = quick ? std::vector<std::string>{"Thm2.5", "Lemma2.6"}
                                         : std::vector<std::string>{"Thm2.5", "Thm3.1",
                                                                    "Lemma2.6", "Prop4.2"};
    auto t0 = std::chrono::steady_clock::now();
    std::size_t serial_pass = claim_sweep(ring, par::ExecMode::Serial, ids);
    double serial_ms = ms_since(t0);
    t0 = std::chrono::steady_clock::now();
    std::size_t parallel_pass = claim_sweep(ring, par::ExecMode::Parallel, ids);
    double parallel_ms = ms_since(t0);
    if (serial_pass != parallel_pass) {
      std::cerr << "MISMATCH: claim sweep results differ\n";
      return 1;
    }
    report("claim sweep", serial_ms, parallel_ms);
  }
  return 0;
}
