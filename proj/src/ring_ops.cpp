#include "ginv/ring_ops.hpp"

namespace ginv {

bool is_projection(const Element& e) {
  if (e.is_null()) throw Error(Errc::InvalidElement, "null element");
  const StarRing& r = e.ring();
  return r.equal(r.multiply(e, e), e) && r.equal(r.star(e), e);
}

Projection Projection::checked(const Element& e) {
  if (!is_projection(e))
    throw Error(Errc::NotAProjection, e.ring().encode(e) + " is not a projection");
  return Projection(e);
}

PeirceBlocks peirce_decompose(const Element& a, const Projection& p) {
  const StarRing& r = a.ring();
  r.check_same_ring(p.element());
  const Element& pe = p.element();
  Element q = r.sub(r.one(), pe);  // 1 - p
  return PeirceBlocks{p, r.multiply(r.multiply(pe, a), pe), r.multiply(r.multiply(pe, a), q),
                      r.multiply(r.multiply(q, a), pe), r.multiply(r.multiply(q, a), q)};
}

const char* ideal_order_name(IdealOrder o) {
  switch (o) {
    case IdealOrder::Equal: return "Equal";
    case IdealOrder::AsubB: return "AsubB";
    case IdealOrder::BsubA: return "BsubA";
    case IdealOrder::Incomparable: return "Incomparable";
  }
  return "?";
}

SolveResult ideal_member(const Element& a, const Element& b, IdealSide side) {
  const StarRing& r = a.ring();
  r.check_same_ring(b);
  // Right: a = b*t.  Left: a = t*b.
  SolveTerm term = side == IdealSide::Right ? SolveTerm{b, r.one()} : SolveTerm{r.one(), b};
  return r.solve_linear(std::span<const SolveTerm>(&term, 1), a);
}

IdealOrder ideal_compare(const Element& a, const Element& b, IdealSide side) {
  const StarRing& r = a.ring();
  if (!r.has(Capability::Enumerable) && !r.has(Capability::LinearSolvable))
    throw Error(Errc::Unsupported, "ideal_compare needs an enumerable or solvable backend");
  SolveResult a_in_b = ideal_member(a, b, side);
  SolveResult b_in_a = ideal_member(b, a, side);
  if (a_in_b.status == SolveStatus::UnknownAtBound || b_in_a.status == SolveStatus::UnknownAtBound)
    throw Error(Errc::Unsupported, "ideal_compare is not decisive on this backend");
  if (a_in_b.found() && b_in_a.found()) return IdealOrder::Equal;
  if (a_in_b.found()) return IdealOrder::AsubB;
  if (b_in_a.found()) return IdealOrder::BsubA;
  return IdealOrder::Incomparable;
}

}  // namespace ginv
