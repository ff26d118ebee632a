#pragma once

// The *-ring capability layer. A StarRing owns exact element arithmetic, the
// involution, a canonical text encoding (equality is encoding equality), and
// optional capabilities: enumeration of all elements, linear-equation solving,
// rank computation. Rings and elements are immutable after construction and
// freely shareable across threads.

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ginv/error.hpp"
#include "vendor_json_fwd.hpp"

namespace ginv {

class StarRing;

// Backend-owned immutable payload.
struct ElementData {
  virtual ~ElementData() = default;
};

class Element {
 public:
  Element() = default;
  Element(std::shared_ptr<const StarRing> ring, std::shared_ptr<const ElementData> data)
      : ring_(std::move(ring)), data_(std::move(data)) {}

  bool is_null() const { return ring_ == nullptr; }
  const StarRing& ring() const { return *ring_; }
  std::shared_ptr<const StarRing> ring_ptr() const { return ring_; }

  template <class T>
  const T& data() const {
    return static_cast<const T&>(*data_);
  }

 private:
  std::shared_ptr<const StarRing> ring_;
  std::shared_ptr<const ElementData> data_;
};

enum class Capability : unsigned {
  Enumerable = 1u << 0,
  LinearSolvable = 1u << 1,
  RankComputable = 1u << 2,
};

// Three-valued answer for linear solves. Backends whose solver is complete
// (enumeration, exact matrices) answer NoSolution definitively; the bounded
// Toeplitz solver answers UnknownAtBound instead, never NoSolution.
enum class SolveStatus { Found, NoSolution, UnknownAtBound };

struct SolveResult {
  SolveStatus status = SolveStatus::NoSolution;
  std::optional<Element> witness;

  bool found() const { return status == SolveStatus::Found; }
  static SolveResult ok(Element w) { return {SolveStatus::Found, std::move(w)}; }
  static SolveResult none() { return {SolveStatus::NoSolution, std::nullopt}; }
  static SolveResult unknown() { return {SolveStatus::UnknownAtBound, std::nullopt}; }
};

// One term of a generalized linear equation  sum_i  left_i * x * right_i = rhs.
struct SolveTerm {
  Element left;
  Element right;
};

class StarRing : public std::enable_shared_from_this<StarRing> {
 public:
  explicit StarRing(std::string id, unsigned caps) : id_(std::move(id)), caps_(caps) {}
  virtual ~StarRing() = default;

  const std::string& id() const { return id_; }
  bool has(Capability c) const { return (caps_ & static_cast<unsigned>(c)) != 0; }

  virtual Element add(const Element& a, const Element& b) const = 0;
  virtual Element negate(const Element& a) const = 0;
  virtual Element multiply(const Element& a, const Element& b) const = 0;
  virtual Element star(const Element& a) const = 0;
  virtual Element zero() const = 0;
  virtual Element one() const = 0;
  virtual bool equal(const Element& a, const Element& b) const = 0;
  virtual std::string encode(const Element& a) const = 0;

  // Canonical JSON payload of an element and its inverse.
  virtual json element_payload(const Element& a) const = 0;
  virtual Element parse_payload(const json& doc) const = 0;

  // Enumerable capability: a fixed, documented enumeration order. Searches
  // return the first hit in this order, so golden outputs are reproducible.
  virtual std::size_t size() const { throw Error(Errc::Unsupported, id_ + " is not enumerable"); }
  virtual Element element_at(std::size_t) const {
    throw Error(Errc::Unsupported, id_ + " is not enumerable");
  }
  virtual std::size_t index_of(const Element&) const {
    throw Error(Errc::Unsupported, id_ + " is not enumerable");
  }

  // Solve sum_i left_i * x * right_i = rhs for x. The default implementation
  // scans an enumerable ring in canonical order.
  virtual SolveResult solve_linear(std::span<const SolveTerm> terms, const Element& rhs) const;

  // Backend-preferred {1,3}-inverse, when it has a dedicated route.
  virtual std::optional<Element> one_three_hint(const Element&) const { return std::nullopt; }

  // Drazin hint: (inverse, index) from a dedicated backend algorithm.
  virtual std::optional<std::pair<Element, int>> drazin_hint(const Element&) const {
    return std::nullopt;
  }

  // Random element for sampled axiom audits on non-enumerable backends.
  virtual Element random_element(std::mt19937_64& rng) const;

  // Bound for index searches (Drazin / pseudo core style k).
  virtual int default_k_max() const { return 4; }

  Element sub(const Element& a, const Element& b) const { return add(a, negate(b)); }
  bool is_zero(const Element& a) const { return equal(a, zero()); }
  bool is_one(const Element& a) const { return equal(a, one()); }
  Element pow(const Element& a, int k) const;

  void check_same_ring(const Element& a) const;

 private:
  std::string id_;
  unsigned caps_;
};

using RingPtr = std::shared_ptr<const StarRing>;

// Result of the ring-axiom audit: associativity, distributivity, identity and
// the involution laws, exhaustive on enumerable rings and seeded-random
// (>= 1000 triples) otherwise.
struct AxiomAuditReport {
  bool passed = true;
  std::size_t triples_checked = 0;
  std::string first_failure;  // empty when passed
};

AxiomAuditReport audit_ring_axioms(const RingPtr& ring, std::uint64_t seed = 0x5eed);

}  // namespace ginv
