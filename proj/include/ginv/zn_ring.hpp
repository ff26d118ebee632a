#pragma once

// Z_n with the identity involution, and finite direct products with the
// componentwise involution. Enumeration order: Z_n counts 0..n-1; a product
// enumerates with component 0 varying fastest.

#include <memory>
#include <vector>

#include "ginv/star_ring.hpp"

namespace ginv {

class ZnRing final : public StarRing {
 public:
  static std::shared_ptr<const ZnRing> create(std::uint64_t n);

  std::uint64_t modulus() const { return n_; }
  Element make(std::uint64_t value) const;
  std::uint64_t value_of(const Element& a) const;

  Element add(const Element& a, const Element& b) const override;
  Element negate(const Element& a) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element star(const Element& a) const override;
  Element zero() const override;
  Element one() const override;
  bool equal(const Element& a, const Element& b) const override;
  std::string encode(const Element& a) const override;
  json element_payload(const Element& a) const override;
  Element parse_payload(const json& doc) const override;
  std::size_t size() const override { return n_; }
  Element element_at(std::size_t i) const override;
  std::size_t index_of(const Element& a) const override;
  int default_k_max() const override;

 private:
  explicit ZnRing(std::uint64_t n);
  std::uint64_t n_;
};

class ProductRing final : public StarRing {
 public:
  // All factors must be enumerable.
  static std::shared_ptr<const ProductRing> create(std::vector<RingPtr> factors);

  const std::vector<RingPtr>& factors() const { return factors_; }
  Element make(std::vector<Element> components) const;
  const std::vector<Element>& components_of(const Element& a) const;

  Element add(const Element& a, const Element& b) const override;
  Element negate(const Element& a) const override;
  Element multiply(const Element& a, const Element& b) const override;
  Element star(const Element& a) const override;
  Element zero() const override;
  Element one() const override;
  bool equal(const Element& a, const Element& b) const override;
  std::string encode(const Element& a) const override;
  json element_payload(const Element& a) const override;
  Element parse_payload(const json& doc) const override;
  std::size_t size() const override { return size_; }
  Element element_at(std::size_t i) const override;
  std::size_t index_of(const Element& a) const override;
  int default_k_max() const override;

 private:
  explicit ProductRing(std::vector<RingPtr> factors);
  Element map_components(const Element& a, const Element& b,
                         Element (StarRing::*op)(const Element&, const Element&) const) const;
  std::vector<RingPtr> factors_;
  std::size_t size_;
};

}  // namespace ginv
