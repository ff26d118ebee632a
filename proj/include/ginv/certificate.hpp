#pragma once

// A certificate binds an input, a witness, the index k, and the re-verified
// defining equations. A certificate with a failing equation is never returned
// by any construction; callers may re-verify at will.

#include <optional>
#include <string>
#include <vector>

#include "ginv/inverse_kind.hpp"

namespace ginv {

struct Certificate {
  InverseKind kind = InverseKind::Inner;
  Element input;
  Element witness;
  int index_k = 0;
  std::vector<EquationCheck> equations;
  std::string construction_route;
  std::optional<AuxPair> aux;       // (b, c) for the bc family
  AuxWitnesses aux_witnesses;       // membership replay data

  bool verified() const { return all_hold(equations); }
};

// Re-runs the defining equations from scratch; true iff every one holds.
bool reverify(const Certificate& cert);

// Outcome of a construction that may be undecided on bounded backends.
enum class FindStatus { Found, NotFound, UnknownAtBound };

struct FindResult {
  FindStatus status = FindStatus::NotFound;
  std::optional<Certificate> certificate;
  std::string reason;  // set for NotFound / UnknownAtBound

  bool found() const { return status == FindStatus::Found; }
  static FindResult ok(Certificate c) { return {FindStatus::Found, std::move(c), {}}; }
  static FindResult none(std::string why) { return {FindStatus::NotFound, std::nullopt, std::move(why)}; }
  static FindResult unknown(std::string why) {
    return {FindStatus::UnknownAtBound, std::nullopt, std::move(why)};
  }
};

json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const RingPtr& ring, const json& doc);

}  // namespace ginv
