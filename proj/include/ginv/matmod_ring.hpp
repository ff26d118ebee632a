#pragma once

// M_k(Z_p) with the transpose involution (p prime, so the base is a
// commutative field and transpose is a valid involution). Enumeration order:
// entries are base-p digits in row-major positions with entry (0,0) least
// significant, so counting starts 0, E00, 2*E00, ...

#include <cstdint>
#include <vector>

#include "ginv/star_ring.hpp"

namespace ginv {

class MatModRing final : public StarRing {
 public:
  static std::shared_ptr<const MatModRing> create(int k, int p);

  int dim() const { return k_; }
  int modulus() const { return p_; }
  // entries row-major, reduced mod p
  Element make(const std::vector<int>& entries) const;
  const std::vector<std::uint8_t>& entries_of(const Element& a) const;

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
  int default_k_max() const override { return k_; }

 private:
  MatModRing(int k, int p);
  Element wrap(std::vector<std::uint8_t> e) const;
  int k_;
  int p_;
  std::size_t size_;
};

}  // namespace ginv
