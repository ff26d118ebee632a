#pragma once

// The inverse kinds and their defining equation systems. Every certificate in
// the toolkit is re-verified against these lists by exact arithmetic replay;
// no construction shortcut is trusted.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ginv/star_ring.hpp"

namespace ginv {

enum class InverseKind {
  Inner,
  OneThree,
  OneFour,
  MP,
  Group,
  Drazin,
  Core,
  DualCore,
  RightCore,
  LeftCore,
  PseudoCore,
  RightPseudoCore,
  RightInverse,
  LeftInverse,
  BC,
  LeftBC,
  RightBC,
};

inline constexpr InverseKind kAllKinds[] = {
    InverseKind::Inner,        InverseKind::OneThree,   InverseKind::OneFour,
    InverseKind::MP,           InverseKind::Group,      InverseKind::Drazin,
    InverseKind::Core,         InverseKind::DualCore,   InverseKind::RightCore,
    InverseKind::LeftCore,     InverseKind::PseudoCore, InverseKind::RightPseudoCore,
    InverseKind::RightInverse, InverseKind::LeftInverse, InverseKind::BC,
    InverseKind::LeftBC,       InverseKind::RightBC,
};

// Kebab-case names, used verbatim by the CLI and all JSON documents.
const char* kind_name(InverseKind k);
std::optional<InverseKind> parse_kind(const std::string& name);
std::vector<std::string> all_kind_names();

// Kinds whose system carries a power index k.
bool kind_uses_index(InverseKind k);
// Kinds that need an auxiliary (b, c) pair.
bool kind_needs_aux(InverseKind k);
// Kinds whose witness is unique whenever it exists.
bool kind_is_unique(InverseKind k);

// The documented equation list, with "k" standing for the index where used.
std::vector<std::string> kind_equation_ids(InverseKind k);

struct EquationCheck {
  std::string id;
  std::string lhs;  // canonical encoding of the evaluated left side
  std::string rhs;
  bool holds = false;
};

struct AuxPair {
  Element b;
  Element c;
};

// Named witnesses for the membership-style equations ("x in bR" carries the s
// with x = b*s), so verification is pure replay even on bounded backends.
using AuxWitnesses = std::map<std::string, Element>;

// Evaluates every defining equation of `kind` for witness x (index k, aux pair
// for the (b,c) family). Membership equations replay a provided witness, or
// fall back to the backend solver when none is given.
std::vector<EquationCheck> check_equations(InverseKind kind, const Element& a, const Element& x,
                                           int k = 0,
                                           const std::optional<AuxPair>& aux = std::nullopt,
                                           const AuxWitnesses& aux_witnesses = {});

bool all_hold(const std::vector<EquationCheck>& eqs);
// id of the first failing equation, empty when all hold
std::string first_failure(const std::vector<EquationCheck>& eqs);

// True iff all of the kind's defining equations hold exactly for (a, x, k).
inline bool verify_witness(const Element& a, const Element& x, InverseKind kind, int k = 0) {
  return all_hold(check_equations(kind, a, x, k));
}

}  // namespace ginv
