#pragma once

// n x n matrices over the Gaussian rationals as a *-ring backend (conjugate
// transpose involution). Not enumerable; linear solving and rank are exact
// and decisive.

#include "ginv/exact_matrix.hpp"
#include "ginv/star_ring.hpp"

namespace ginv {

class GaussianMatrixRing final : public StarRing {
 public:
  static std::shared_ptr<const GaussianMatrixRing> create(int n);

  int dim() const { return n_; }
  Element make(ExactMatrix m) const;
  const ExactMatrix& matrix_of(const Element& a) const;

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
  SolveResult solve_linear(std::span<const SolveTerm> terms, const Element& rhs) const override;
  std::optional<Element> one_three_hint(const Element& a) const override;
  std::optional<std::pair<Element, int>> drazin_hint(const Element& a) const override;
  Element random_element(std::mt19937_64& rng) const override;
  int default_k_max() const override { return n_; }

 private:
  explicit GaussianMatrixRing(int n);
  int n_;
};

}  // namespace ginv
