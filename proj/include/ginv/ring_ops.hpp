#pragma once

// Projection / Peirce / ideal machinery shared by every backend.

#include "ginv/star_ring.hpp"

namespace ginv {

// p with p*p = p and p* = p, verified at construction.
class Projection {
 public:
  static Projection checked(const Element& e);
  const Element& element() const { return e_; }

 private:
  explicit Projection(Element e) : e_(std::move(e)) {}
  Element e_;
};

bool is_projection(const Element& e);

struct PeirceBlocks {
  Projection p;
  Element a11, a12, a21, a22;  // pap, pa(1-p), (1-p)ap, (1-p)a(1-p)
};

PeirceBlocks peirce_decompose(const Element& a, const Projection& p);

enum class IdealOrder { Equal, AsubB, BsubA, Incomparable };
enum class IdealSide { Left, Right };

const char* ideal_order_name(IdealOrder o);

// Membership a in bR (Right) or a in Rb (Left), decided by the backend solver.
SolveResult ideal_member(const Element& a, const Element& b, IdealSide side);

// Classifies aR vs bR (or Ra vs Rb) from the two membership solves. Requires a
// decisive backend; an UnknownAtBound answer raises Unsupported because the
// classification would not be trustworthy.
IdealOrder ideal_compare(const Element& a, const Element& b, IdealSide side);

}  // namespace ginv
