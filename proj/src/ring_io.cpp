#include "ginv/ring_io.hpp"

#include <cstdio>
#include <fstream>

#include "ginv/matmod_ring.hpp"
#include "ginv/matq_ring.hpp"
#include "ginv/toeplitz.hpp"
#include "ginv/zn_ring.hpp"

namespace ginv {

namespace {

void check_involution(const json& spec, const std::string& expected) {
  if (!spec.contains("involution")) return;
  std::string got = spec.at("involution").get<std::string>();
  if (got != expected)
    throw Error(Errc::ParseError,
                "ring kind requires involution '" + expected + "', got '" + got + "'");
}

}  // namespace

RingPtr ring_from_spec(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind"))
    throw Error(Errc::ParseError, "ring spec must be an object with a kind");
  std::string kind = spec.at("kind").get<std::string>();
  if (kind == "Zn") {
    check_involution(spec, "identity");
    return ZnRing::create(spec.at("n").get<std::uint64_t>());
  }
  if (kind == "MatZp") {
    check_involution(spec, "transpose");
    return MatModRing::create(spec.at("k").get<int>(), spec.at("p").get<int>());
  }
  if (kind == "MatQ(i)") {
    check_involution(spec, "conjugate-transpose");
    return GaussianMatrixRing::create(spec.at("n").get<int>());
  }
  if (kind == "Toeplitz") {
    check_involution(spec, "transpose");
    ToeplitzBounds bounds;
    if (spec.contains("band_bound")) bounds.band = spec.at("band_bound").get<int>();
    if (spec.contains("corr_bound")) bounds.corr = spec.at("corr_bound").get<int>();
    return ToeplitzRing::create(bounds);
  }
  if (kind == "Product") {
    std::vector<RingPtr> factors;
    for (const auto& f : spec.at("factors")) factors.push_back(ring_from_spec(f));
    return ProductRing::create(std::move(factors));
  }
  throw Error(Errc::ParseError, "unknown ring kind: " + kind);
}

json ring_to_spec(const RingPtr& ring) {
  if (auto zn = std::dynamic_pointer_cast<const ZnRing>(ring))
    return json{{"kind", "Zn"}, {"n", zn->modulus()}, {"involution", "identity"}};
  if (auto mm = std::dynamic_pointer_cast<const MatModRing>(ring))
    return json{{"kind", "MatZp"},
                {"k", mm->dim()},
                {"p", mm->modulus()},
                {"involution", "transpose"}};
  if (auto mq = std::dynamic_pointer_cast<const GaussianMatrixRing>(ring))
    return json{{"kind", "MatQ(i)"}, {"n", mq->dim()}, {"involution", "conjugate-transpose"}};
  if (auto tz = std::dynamic_pointer_cast<const ToeplitzRing>(ring))
    return json{{"kind", "Toeplitz"},
                {"band_bound", tz->bounds().band},
                {"corr_bound", tz->bounds().corr},
                {"involution", "transpose"}};
  if (auto pr = std::dynamic_pointer_cast<const ProductRing>(ring)) {
    json factors = json::array();
    for (const auto& f : pr->factors()) factors.push_back(ring_to_spec(f));
    return json{{"kind", "Product"}, {"factors", factors}};
  }
  throw Error(Errc::Unsupported, "cannot serialize ring " + ring->id());
}

RingPtr ring_from_spec_file(const std::string& path) {
  return ring_from_spec(load_json_file(path));
}

Element element_from_doc(const RingPtr& ring, const json& doc) {
  if (doc.is_object() && doc.contains("ring_id") &&
      doc.at("ring_id").get<std::string>() != ring->id())
    throw Error(Errc::InvalidElement, "element ring_id '" +
                                          doc.at("ring_id").get<std::string>() +
                                          "' does not match ring " + ring->id());
  return ring->parse_payload(doc);
}

json element_to_doc(const Element& a) {
  json doc = json{{"ring_id", a.ring().id()}};
  json payload = a.ring().element_payload(a);
  for (auto it = payload.begin(); it != payload.end(); ++it) doc[it.key()] = it.value();
  return doc;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
  return doc;
}

void write_text_file_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::ParseError, "cannot write " + tmp);
    out << content;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw Error(Errc::ParseError, "cannot rename " + tmp + " to " + path);
}

}  // namespace ginv
