#include "ginv/certificate.hpp"

namespace ginv {

bool reverify(const Certificate& cert) {
  auto eqs = check_equations(cert.kind, cert.input, cert.witness, cert.index_k, cert.aux,
                             cert.aux_witnesses);
  return all_hold(eqs);
}

json certificate_to_json(const Certificate& cert) {
  const StarRing& r = cert.input.ring();
  json eqs = json::array();
  for (const auto& e : cert.equations)
    eqs.push_back(json{{"id", e.id}, {"lhs", e.lhs}, {"rhs", e.rhs}, {"holds", e.holds}});
  json doc{{"ring_id", r.id()},
           {"kind", kind_name(cert.kind)},
           {"a", r.element_payload(cert.input)},
           {"witness", r.element_payload(cert.witness)},
           {"k", cert.index_k},
           {"index_k", cert.index_k},
           {"construction_route", cert.construction_route},
           {"equations", eqs}};
  if (cert.aux) {
    doc["b"] = r.element_payload(cert.aux->b);
    doc["c"] = r.element_payload(cert.aux->c);
  }
  if (!cert.aux_witnesses.empty()) {
    json aw = json::object();
    for (const auto& [slot, el] : cert.aux_witnesses) aw[slot] = r.element_payload(el);
    doc["aux_witnesses"] = aw;
  }
  return doc;
}

Certificate certificate_from_json(const RingPtr& ring, const json& doc) {
  Certificate cert;
  if (doc.at("ring_id").get<std::string>() != ring->id())
    throw Error(Errc::InvalidElement, "certificate ring_id does not match ring");
  auto kind = parse_kind(doc.at("kind").get<std::string>());
  if (!kind) throw Error(Errc::ParseError, "unknown kind in certificate");
  cert.kind = *kind;
  cert.input = ring->parse_payload(doc.at("a"));
  cert.witness = ring->parse_payload(doc.at("witness"));
  cert.index_k = doc.value("index_k", doc.value("k", 0));
  cert.construction_route = doc.value("construction_route", std::string{});
  if (doc.contains("b") && doc.contains("c"))
    cert.aux = AuxPair{ring->parse_payload(doc.at("b")), ring->parse_payload(doc.at("c"))};
  if (doc.contains("aux_witnesses"))
    for (auto it = doc.at("aux_witnesses").begin(); it != doc.at("aux_witnesses").end(); ++it)
      cert.aux_witnesses.emplace(it.key(), ring->parse_payload(it.value()));
  // Equations are replayed, not trusted from the document.
  cert.equations =
      check_equations(cert.kind, cert.input, cert.witness, cert.index_k, cert.aux,
                      cert.aux_witnesses);
  return cert;
}

}  // namespace ginv
