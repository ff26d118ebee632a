#include "ginv/zn_ring.hpp"

#include <cmath>

namespace ginv {

namespace {

struct ZnData final : ElementData {
  explicit ZnData(std::uint64_t v) : value(v) {}
  std::uint64_t value;
};

struct TupleData final : ElementData {
  explicit TupleData(std::vector<Element> c) : components(std::move(c)) {}
  std::vector<Element> components;
};

}  // namespace

ZnRing::ZnRing(std::uint64_t n)
    : StarRing("Z" + std::to_string(n), static_cast<unsigned>(Capability::Enumerable)), n_(n) {
  if (n < 2) throw Error(Errc::InvalidFormat, "Zn requires n >= 2");
}

std::shared_ptr<const ZnRing> ZnRing::create(std::uint64_t n) {
  return std::shared_ptr<const ZnRing>(new ZnRing(n));
}

Element ZnRing::make(std::uint64_t value) const {
  return Element(shared_from_this(), std::make_shared<ZnData>(value % n_));
}

std::uint64_t ZnRing::value_of(const Element& a) const {
  check_same_ring(a);
  return a.data<ZnData>().value;
}

Element ZnRing::add(const Element& a, const Element& b) const {
  return make(value_of(a) + value_of(b));
}

Element ZnRing::negate(const Element& a) const { return make(n_ - value_of(a)); }

Element ZnRing::multiply(const Element& a, const Element& b) const {
  return make(value_of(a) * value_of(b));
}

Element ZnRing::star(const Element& a) const {
  check_same_ring(a);
  return a;
}

Element ZnRing::zero() const { return make(0); }
Element ZnRing::one() const { return make(1); }

bool ZnRing::equal(const Element& a, const Element& b) const {
  return value_of(a) == value_of(b);
}

std::string ZnRing::encode(const Element& a) const { return std::to_string(value_of(a)); }

json ZnRing::element_payload(const Element& a) const { return json{{"value", encode(a)}}; }

Element ZnRing::parse_payload(const json& doc) const {
  if (doc.is_string()) return make(std::stoull(doc.get<std::string>()));
  if (doc.is_number_unsigned() || doc.is_number_integer()) {
    long long v = doc.get<long long>();
    long long m = static_cast<long long>(n_);
    return make(static_cast<std::uint64_t>(((v % m) + m) % m));
  }
  if (doc.is_object() && doc.contains("value")) return parse_payload(doc.at("value"));
  throw Error(Errc::ParseError, "Zn element payload must be a value");
}

Element ZnRing::element_at(std::size_t i) const {
  if (i >= n_) throw Error(Errc::InvalidBound, "Zn index out of range");
  return make(i);
}

std::size_t ZnRing::index_of(const Element& a) const { return value_of(a); }

int ZnRing::default_k_max() const {
  int k = 1;
  std::uint64_t p = 2;
  while (p < n_) {
    p *= 2;
    ++k;
  }
  return k + 1;  // nilpotency index in Z_n is at most log2(n)+1
}

ProductRing::ProductRing(std::vector<RingPtr> factors)
    : StarRing(
          [&] {
            std::string id;
            for (std::size_t i = 0; i < factors.size(); ++i) {
              if (i > 0) id += "x";
              id += factors[i]->id();
            }
            return id;
          }(),
          static_cast<unsigned>(Capability::Enumerable)),
      factors_(std::move(factors)) {
  if (factors_.size() < 2) throw Error(Errc::InvalidFormat, "product needs >= 2 factors");
  size_ = 1;
  for (const auto& f : factors_) {
    if (!f->has(Capability::Enumerable))
      throw Error(Errc::Unsupported, "product factors must be enumerable");
    size_ *= f->size();
  }
}

std::shared_ptr<const ProductRing> ProductRing::create(std::vector<RingPtr> factors) {
  return std::shared_ptr<const ProductRing>(new ProductRing(std::move(factors)));
}

Element ProductRing::make(std::vector<Element> components) const {
  if (components.size() != factors_.size())
    throw Error(Errc::InvalidElement, "component count mismatch");
  for (std::size_t i = 0; i < components.size(); ++i) factors_[i]->check_same_ring(components[i]);
  return Element(shared_from_this(), std::make_shared<TupleData>(std::move(components)));
}

const std::vector<Element>& ProductRing::components_of(const Element& a) const {
  check_same_ring(a);
  return a.data<TupleData>().components;
}

Element ProductRing::map_components(
    const Element& a, const Element& b,
    Element (StarRing::*op)(const Element&, const Element&) const) const {
  const auto& ca = components_of(a);
  const auto& cb = components_of(b);
  std::vector<Element> out;
  out.reserve(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i)
    out.push_back(((*factors_[i]).*op)(ca[i], cb[i]));
  return make(std::move(out));
}

Element ProductRing::add(const Element& a, const Element& b) const {
  return map_components(a, b, &StarRing::add);
}

Element ProductRing::multiply(const Element& a, const Element& b) const {
  return map_components(a, b, &StarRing::multiply);
}

Element ProductRing::negate(const Element& a) const {
  const auto& ca = components_of(a);
  std::vector<Element> out;
  out.reserve(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) out.push_back(factors_[i]->negate(ca[i]));
  return make(std::move(out));
}

Element ProductRing::star(const Element& a) const {
  const auto& ca = components_of(a);
  std::vector<Element> out;
  out.reserve(ca.size());
  for (std::size_t i = 0; i < ca.size(); ++i) out.push_back(factors_[i]->star(ca[i]));
  return make(std::move(out));
}

Element ProductRing::zero() const {
  std::vector<Element> out;
  for (const auto& f : factors_) out.push_back(f->zero());
  return make(std::move(out));
}

Element ProductRing::one() const {
  std::vector<Element> out;
  for (const auto& f : factors_) out.push_back(f->one());
  return make(std::move(out));
}

bool ProductRing::equal(const Element& a, const Element& b) const {
  const auto& ca = components_of(a);
  const auto& cb = components_of(b);
  for (std::size_t i = 0; i < ca.size(); ++i)
    if (!factors_[i]->equal(ca[i], cb[i])) return false;
  return true;
}

std::string ProductRing::encode(const Element& a) const {
  const auto& ca = components_of(a);
  std::string out = "(";
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (i > 0) out += "|";
    out += factors_[i]->encode(ca[i]);
  }
  return out + ")";
}

json ProductRing::element_payload(const Element& a) const {
  const auto& ca = components_of(a);
  json comps = json::array();
  for (std::size_t i = 0; i < ca.size(); ++i) comps.push_back(factors_[i]->element_payload(ca[i]));
  return json{{"components", comps}};
}

Element ProductRing::parse_payload(const json& doc) const {
  const json& comps = doc.is_array() ? doc : doc.at("components");
  if (!comps.is_array() || comps.size() != factors_.size())
    throw Error(Errc::ParseError, "product element needs one payload per factor");
  std::vector<Element> out;
  for (std::size_t i = 0; i < factors_.size(); ++i)
    out.push_back(factors_[i]->parse_payload(comps[i]));
  return make(std::move(out));
}

Element ProductRing::element_at(std::size_t i) const {
  if (i >= size_) throw Error(Errc::InvalidBound, "product index out of range");
  std::vector<Element> out;
  out.reserve(factors_.size());
  for (const auto& f : factors_) {
    out.push_back(f->element_at(i % f->size()));
    i /= f->size();
  }
  return make(std::move(out));
}

std::size_t ProductRing::index_of(const Element& a) const {
  const auto& ca = components_of(a);
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    idx += stride * factors_[i]->index_of(ca[i]);
    stride *= factors_[i]->size();
  }
  return idx;
}

int ProductRing::default_k_max() const {
  int k = 1;
  for (const auto& f : factors_) k = std::max(k, f->default_k_max());
  return k;
}

}  // namespace ginv
