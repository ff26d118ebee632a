#pragma once

// Executable claim registry. Each claim packages independent condition
// evaluators over a finite ring table plus the expected relation between
// them: the "equivalent" conditions must agree on every checked tuple and the
// "always" conditions must hold outright. Universally quantified powers are
// checked for exponents 1..4 (documented bound).

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ginv/finite_table.hpp"
#include "ginv/parallel.hpp"

namespace ginv {

struct Condition {
  std::string id;
  std::function<bool(const FiniteTable&, std::span<const FiniteTable::Idx>)> eval;
};

struct Claim {
  std::string id;         // e.g. "Thm2.5"
  std::string statement;  // one-line description of what is replayed
  int arity = 1;          // ring elements per checked tuple
  // tuple participates only when the guard passes (e.g. both factors right
  // core invertible); empty means all tuples
  std::function<bool(const FiniteTable&, std::span<const FiniteTable::Idx>)> guard;
  std::vector<Condition> equivalent;
  std::vector<Condition> always;
};

const std::vector<Claim>& claim_registry();
const Claim* find_claim(const std::string& id);
std::vector<std::string> registered_claim_ids();

struct Scope {
  enum class Kind { AllElements, Sample };
  Kind kind = Kind::AllElements;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;

  static Scope all() { return {}; }
  static Scope sample(std::size_t n, std::uint64_t seed) {
    return {Kind::Sample, n, seed};
  }
};

struct ClaimResult {
  std::string claim_id;
  std::string ring_id;
  std::size_t elements_checked = 0;
  enum class Verdict { Pass, Counterexample, Skipped } verdict = Verdict::Pass;
  std::string skip_reason;
  // first violating tuple in canonical order, with the full truth vector
  std::vector<std::string> tuple;
  std::vector<std::pair<std::string, bool>> condition_truths;
};

ClaimResult run_claim(const Claim& claim, const RingPtr& ring, const Scope& scope,
                      par::ExecMode mode = par::ExecMode::Parallel);

}  // namespace ginv
