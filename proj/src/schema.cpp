#include "ginv/schema.hpp"

#include "ginv/matq_ring.hpp"
#include "ginv/toeplitz.hpp"

namespace ginv {

const char* schema_class_name(SchemaClass c) {
  switch (c) {
    case SchemaClass::Invertible: return "Invertible";
    case SchemaClass::EP: return "EP";
    case SchemaClass::Core: return "Core";
    case SchemaClass::DualCore: return "DualCore";
    case SchemaClass::RightCore: return "RightCore";
    case SchemaClass::PseudoCore: return "PseudoCore";
    case SchemaClass::RightPseudoCore: return "RightPseudoCore";
    case SchemaClass::Group: return "Group";
    case SchemaClass::Drazin: return "Drazin";
    case SchemaClass::MP: return "MP";
    case SchemaClass::OneThree: return "OneThree";
  }
  return "?";
}

bool RelationSchema::has_edge(SchemaClass from, SchemaClass to) const {
  for (const auto& e : edges)
    if (e.from == from && e.to == to) return true;
  return false;
}

const SchemaNonEdge* RelationSchema::find_non_edge(SchemaClass from, SchemaClass to) const {
  for (const auto& e : non_edges)
    if (e.from == from && e.to == to) return &e;
  return nullptr;
}

namespace {

Membership from_result(const FindResult& r) {
  switch (r.status) {
    case FindStatus::Found: return Membership::In;
    case FindStatus::NotFound: return Membership::Out;
    case FindStatus::UnknownAtBound: return Membership::OutAtBound;
  }
  return Membership::Out;
}

Membership combine_all(std::initializer_list<Membership> ms) {
  bool at_bound = false;
  for (Membership m : ms) {
    if (m == Membership::Out) return Membership::Out;
    if (m == Membership::OutAtBound) at_bound = true;
  }
  return at_bound ? Membership::OutAtBound : Membership::In;
}

}  // namespace

std::array<Membership, kSchemaClassCount> audit_element(const Element& a,
                                                        const ComputeOptions& opts) {
  std::array<Membership, kSchemaClassCount> m;
  auto probe = [&](InverseKind kind) { return from_result(compute_inverse(a, kind, {}, opts)); };
  m[static_cast<int>(SchemaClass::Invertible)] =
      combine_all({probe(InverseKind::RightInverse), probe(InverseKind::LeftInverse)});
  m[static_cast<int>(SchemaClass::EP)] = from_result(ep_check(a));
  m[static_cast<int>(SchemaClass::Core)] = probe(InverseKind::Core);
  m[static_cast<int>(SchemaClass::DualCore)] = probe(InverseKind::DualCore);
  m[static_cast<int>(SchemaClass::RightCore)] = probe(InverseKind::RightCore);
  m[static_cast<int>(SchemaClass::PseudoCore)] = probe(InverseKind::PseudoCore);
  m[static_cast<int>(SchemaClass::RightPseudoCore)] = probe(InverseKind::RightPseudoCore);
  m[static_cast<int>(SchemaClass::Group)] = probe(InverseKind::Group);
  m[static_cast<int>(SchemaClass::Drazin)] = probe(InverseKind::Drazin);
  m[static_cast<int>(SchemaClass::MP)] = probe(InverseKind::MP);
  m[static_cast<int>(SchemaClass::OneThree)] = probe(InverseKind::OneThree);
  return m;
}

std::vector<Element> audit_catalog(const RingPtr& ring) {
  std::vector<Element> out;
  if (ring->has(Capability::Enumerable)) {
    for (std::size_t i = 0; i < ring->size(); ++i) out.push_back(ring->element_at(i));
    return out;
  }
  if (auto mq = std::dynamic_pointer_cast<const GaussianMatrixRing>(ring)) {
    out.push_back(mq->zero());
    out.push_back(mq->one());
    if (mq->dim() == 2) {
      auto mk = [&](std::vector<std::vector<std::string>> rows) {
        return mq->make(ExactMatrix::parse_rows(rows));
      };
      out.push_back(mk({{"1", "1"}, {"0", "0"}}));        // group, not EP
      out.push_back(mk({{"0", "1"}, {"0", "0"}}));        // index-2 nilpotent
      out.push_back(mk({{"i", "0"}, {"0", "0"}}));        // complex rank-1 EP
      out.push_back(mk({{"1", "0"}, {"0", "0"}}));        // orthogonal projection
      out.push_back(mk({{"0", "1"}, {"1", "0"}}));        // symmetric unit
      out.push_back(mk({{"1", "1"}, {"0", "1"}}));        // non-normal unit
      out.push_back(mk({{"1/2", "1/2"}, {"1/2", "1/2"}}));  // rank-1 projection
    } else if (mq->dim() == 3) {
      out.push_back(mq->make(ExactMatrix::parse_rows(
          {{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "1"}})));  // nilpotent + unit block
    }
    return out;
  }
  if (auto tz = std::dynamic_pointer_cast<const ToeplitzRing>(ring)) {
    out.push_back(tz->zero());
    out.push_back(tz->one());
    out.push_back(tz->make(ToeplitzElement::shift()));       // S
    out.push_back(tz->make(ToeplitzElement::shift_star()));  // S*
    out.push_back(tz->make(ToeplitzElement::unit_correction(0, 0)));  // E00
    out.push_back(tz->make(ToeplitzElement::one_element() -
                           ToeplitzElement::unit_correction(0, 0)));  // SS*
    return out;
  }
  throw Error(Errc::Unsupported, "no audit catalog for ring " + ring->id());
}

RelationSchema build_relation_schema(const std::vector<RingPtr>& rings,
                                     const ComputeOptions& opts) {
  if (rings.empty()) throw Error(Errc::InvalidBound, "need at least one ring to audit");
  RelationSchema schema;
  for (const auto& ring : rings) {
    schema.rings.push_back(ring->id());
    for (const Element& a : audit_catalog(ring)) {
      ElementAudit audit;
      audit.ring_id = ring->id();
      audit.element = ring->encode(a);
      audit.member = audit_element(a, opts);
      schema.elements.push_back(std::move(audit));
    }
  }
  for (int from = 0; from < kSchemaClassCount; ++from) {
    for (int to = 0; to < kSchemaClassCount; ++to) {
      if (from == to) continue;
      const ElementAudit* counter = nullptr;
      std::size_t confirmed = 0;
      for (const auto& el : schema.elements) {
        if (el.member[from] != Membership::In) continue;
        if (el.member[to] == Membership::In) {
          ++confirmed;
        } else if (counter == nullptr) {
          counter = &el;
        }
      }
      if (counter == nullptr) {
        schema.edges.push_back(
            {static_cast<SchemaClass>(from), static_cast<SchemaClass>(to), confirmed});
      } else {
        schema.non_edges.push_back({static_cast<SchemaClass>(from),
                                    static_cast<SchemaClass>(to), counter->ring_id,
                                    counter->element,
                                    counter->member[to] == Membership::OutAtBound});
      }
    }
  }
  return schema;
}

}  // namespace ginv
