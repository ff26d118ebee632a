#pragma once

// Relation schema over element classes: which invertibility classes imply
// which, derived from audited memberships. An edge carries zero
// counterexamples over all audited rings; a non-edge carries a concrete
// separating element. Bounded-backend memberships that could not be decided
// are tracked as OutAtBound and produce qualified separations.

#include <array>
#include <string>
#include <vector>

#include "ginv/gen_inverse.hpp"

namespace ginv {

enum class SchemaClass {
  Invertible,
  EP,
  Core,
  DualCore,
  RightCore,
  PseudoCore,
  RightPseudoCore,
  Group,
  Drazin,
  MP,
  OneThree,
};

inline constexpr int kSchemaClassCount = 11;
const char* schema_class_name(SchemaClass c);

enum class Membership { In, Out, OutAtBound };

struct ElementAudit {
  std::string ring_id;
  std::string element;
  std::array<Membership, kSchemaClassCount> member;
};

struct SchemaEdge {
  SchemaClass from;
  SchemaClass to;
  std::size_t confirmed = 0;  // elements In(from) & In(to)
};

struct SchemaNonEdge {
  SchemaClass from;
  SchemaClass to;
  std::string ring_id;
  std::string witness;
  bool at_bound = false;  // separation relies on an undecided-at-bound Out
};

struct RelationSchema {
  std::vector<std::string> rings;
  std::vector<ElementAudit> elements;
  std::vector<SchemaEdge> edges;
  std::vector<SchemaNonEdge> non_edges;

  bool has_edge(SchemaClass from, SchemaClass to) const;
  const SchemaNonEdge* find_non_edge(SchemaClass from, SchemaClass to) const;
};

// Class memberships of one element, decided by the construction routes.
std::array<Membership, kSchemaClassCount> audit_element(const Element& a,
                                                        const ComputeOptions& opts = {});

// Audits every element of enumerable rings and a documented catalog of
// elements for the matrix and Toeplitz backends.
RelationSchema build_relation_schema(const std::vector<RingPtr>& rings,
                                     const ComputeOptions& opts = {});

// Catalog used for non-enumerable backends.
std::vector<Element> audit_catalog(const RingPtr& ring);

}  // namespace ginv
