#pragma once

// Exhaustive-search ground truth over enumerable rings. Searches scan the
// canonical enumeration order (smallest index k first, then first witness),
// optionally in parallel with a deterministic min-index reduce; results are
// identical to the serial reference by construction.

#include <optional>

#include "ginv/certificate.hpp"
#include "ginv/finite_table.hpp"
#include "ginv/parallel.hpp"

namespace ginv {

// Does x satisfy the kind's defining equations for a (index k, aux pair)?
// Pure table arithmetic; the certificate layer re-verifies independently.
bool table_satisfies(const FiniteTable& t, InverseKind kind, FiniteTable::Idx a,
                     FiniteTable::Idx x, int k = 0,
                     std::optional<std::pair<FiniteTable::Idx, FiniteTable::Idx>> aux =
                         std::nullopt);

struct OracleOptions {
  int k_max = 0;  // 0: use the ring's default
  par::ExecMode mode = par::ExecMode::Parallel;
};

// First witness in canonical order (smallest k first) satisfying the kind's
// equations, with every equation re-verified; nullopt iff no element
// satisfies them for any admissible k <= k_max.
std::optional<Certificate> oracle_search(const Element& a, InverseKind kind,
                                         const std::optional<AuxPair>& aux = std::nullopt,
                                         const OracleOptions& opts = {});

// All witnesses for a fixed k (ascending index order).
std::vector<FiniteTable::Idx> all_witness_indices(
    const FiniteTable& t, FiniteTable::Idx a, InverseKind kind, int k = 0,
    std::optional<std::pair<FiniteTable::Idx, FiniteTable::Idx>> aux = std::nullopt,
    par::ExecMode mode = par::ExecMode::Parallel);

// Exactly { x : x*a = 0 }, in canonical order.
std::vector<Element> left_annihilator(const Element& a,
                                      par::ExecMode mode = par::ExecMode::Parallel);

// True iff every right-invertible element of the ring is invertible.
bool dedekind_finiteness_audit(const RingPtr& ring,
                               par::ExecMode mode = par::ExecMode::Parallel);

}  // namespace ginv
