#include "ginv/star_ring.hpp"

#include "ginv/parallel.hpp"

namespace ginv {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::InvalidElement: return "InvalidElement";
    case Errc::NotAProjection: return "NotAProjection";
    case Errc::Unsupported: return "Unsupported";
    case Errc::InvalidBound: return "InvalidBound";
    case Errc::PreconditionFailed: return "PreconditionFailed";
    case Errc::HypothesisNotMet: return "HypothesisNotMet";
    case Errc::InternalInconsistency: return "InternalInconsistency";
    case Errc::InvalidFormat: return "InvalidFormat";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

void StarRing::check_same_ring(const Element& a) const {
  if (a.is_null() || a.ring().id() != id_)
    throw Error(Errc::InvalidElement, "element does not belong to ring " + id_);
}

Element StarRing::pow(const Element& a, int k) const {
  if (k < 0) throw Error(Errc::InvalidBound, "negative power");
  Element r = one();
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

SolveResult StarRing::solve_linear(std::span<const SolveTerm> terms, const Element& rhs) const {
  if (!has(Capability::Enumerable))
    throw Error(Errc::Unsupported, id_ + " has no linear solver");
  const std::size_t n = size();
  auto matches = [&](std::size_t i) {
    Element x = element_at(i);
    Element acc = zero();
    for (const auto& t : terms) acc = add(acc, multiply(multiply(t.left, x), t.right));
    return equal(acc, rhs);
  };
  std::size_t hit = par::find_first_index(n, matches);
  if (hit == par::kNotFound) return SolveResult::none();
  return SolveResult::ok(element_at(hit));
}

Element StarRing::random_element(std::mt19937_64& rng) const {
  if (!has(Capability::Enumerable))
    throw Error(Errc::Unsupported, id_ + " cannot sample random elements");
  std::uniform_int_distribution<std::size_t> dist(0, size() - 1);
  return element_at(dist(rng));
}

AxiomAuditReport audit_ring_axioms(const RingPtr& ring, std::uint64_t seed) {
  AxiomAuditReport report;
  const StarRing& r = *ring;

  auto check_triple = [&](const Element& a, const Element& b, const Element& c) -> const char* {
    if (!r.equal(r.multiply(r.multiply(a, b), c), r.multiply(a, r.multiply(b, c))))
      return "(ab)c != a(bc)";
    if (!r.equal(r.multiply(a, r.add(b, c)), r.add(r.multiply(a, b), r.multiply(a, c))))
      return "a(b+c) != ab+ac";
    if (!r.equal(r.multiply(r.add(a, b), c), r.add(r.multiply(a, c), r.multiply(b, c))))
      return "(a+b)c != ac+bc";
    if (!r.equal(r.multiply(a, r.one()), a) || !r.equal(r.multiply(r.one(), a), a))
      return "1 is not a two-sided identity";
    if (!r.equal(r.star(r.star(a)), a)) return "(a*)* != a";
    if (!r.equal(r.star(r.add(a, b)), r.add(r.star(a), r.star(b)))) return "(a+b)* != a*+b*";
    if (!r.equal(r.star(r.multiply(a, b)), r.multiply(r.star(b), r.star(a))))
      return "(ab)* != b*a*";
    return nullptr;
  };

  if (ring->has(Capability::Enumerable)) {
    const std::size_t n = r.size();
    std::vector<Element> elems;
    elems.reserve(n);
    for (std::size_t i = 0; i < n; ++i) elems.push_back(r.element_at(i));
    for (std::size_t i = 0; i < n && report.passed; ++i)
      for (std::size_t j = 0; j < n && report.passed; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          ++report.triples_checked;
          if (const char* msg = check_triple(elems[i], elems[j], elems[k])) {
            report.passed = false;
            report.first_failure = msg;
            break;
          }
        }
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < 1000; ++t) {
      Element a = r.random_element(rng);
      Element b = r.random_element(rng);
      Element c = r.random_element(rng);
      ++report.triples_checked;
      if (const char* msg = check_triple(a, b, c)) {
        report.passed = false;
        report.first_failure = msg;
        break;
      }
    }
  }
  return report;
}

}  // namespace ginv
