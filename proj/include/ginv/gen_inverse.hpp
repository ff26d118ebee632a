#pragma once

// Construction routes for the generalized inverses, generic over any backend
// that can answer the needed linear solves. Theorem-derived formulas run
// first and every produced witness is re-verified against the defining
// equations before a certificate leaves this module.

#include "ginv/certificate.hpp"
#include "ginv/ring_ops.hpp"

namespace ginv {

struct ComputeOptions {
  int k_max = 0;  // 0: ring default
};

// {1,3}-inverse: backend hint when present, else solve a = t a*a and take t*.
FindResult find_one_three(const Element& a);
// {1,4}-inverse by star duality with the {1,3} route.
FindResult find_one_four(const Element& a);

FindResult moore_penrose(const Element& a);
FindResult group_inverse_of(const Element& a);
FindResult drazin_inverse_of(const Element& a, const ComputeOptions& opts = {});

// p = 1 - a a^{(1,3)}, u = 1 + a t a^{(1,3)} - a t right-inverts p + a when
// a = a^2 t; the witness is u (1-p).
FindResult right_core_inverse(const Element& a);
// From a projection p with pa = 0: right-invert u = p + a^n, then the witness
// is u_r^{-1}(1-p) for n = 1 and a^{n-1} u_r^{-1} for n >= 2.
FindResult right_core_via_projection(const Element& a, const Projection& p, int n);

// 1 - a*witness, verified to be a projection annihilating a on the left.
Projection spectral_idempotent(const Certificate& cert);

FindResult core_inverse(const Element& a);
FindResult dual_core_inverse(const Element& a);

enum class CoreWitnessMode { SymmetricPower, SymmetricAX };
// From x with xa^2 = a, x^k = a x^{k+1} and the mode's symmetry hypothesis,
// produce the core inverse: a^{k-1} x^k (SymmetricPower) or xax (SymmetricAX).
// Throws HypothesisNotMet naming the failed equation.
Certificate core_from_witness(const Element& a, const Element& x, int k, CoreWitnessMode mode);

// EP certificate iff a^dagger and a^sharp both exist and coincide; the
// optional witness route checks xa^2 = a, (xa)* = xa, x^k = a x^{k+1} and
// builds a^sharp = x^2 a from it.
FindResult ep_check(const Element& a);
FindResult ep_check_with_witness(const Element& a, const Element& x, int k);

FindResult pseudo_core_inverse(const Element& a, const ComputeOptions& opts = {});
FindResult right_pseudo_core_inverse(const Element& a, const ComputeOptions& opts = {});

enum class BcSide { Left, Right };
FindResult one_sided_bc_inverse(const Element& a, const Element& b, const Element& c,
                                BcSide side);
// Two-sided (b,c)-inverse: both one-sided inverses exist iff it does, and
// then they coincide with it.
FindResult bc_inverse(const Element& a, const Element& b, const Element& c);

struct CoreNilpotentParts {
  Element a1;  // a^2 x, right core invertible
  Element a2;  // a - a1, square-zero
  Certificate a1_certificate;
};
// a = a1 + a2 with a2^2 = 0, a1 a2* = 0, a2 a1 = 0; y = xax certifies a1.
CoreNilpotentParts decompose_core_nilpotent(const Element& a, const Certificate& cert);

struct RepresentationBlocks {
  Projection q;
  PeirceBlocks a_blocks;
  PeirceBlocks x_blocks;
};
// Row-form block identities relative to q = a*witness.
RepresentationBlocks representation_blocks(const Element& a, const Certificate& cert);

// If a x_a = b x_b, or a = ab x_b and b = a x_a b, then x_b x_a is a right
// core witness for ab; hypotheses unmet is a plain NotFound.
FindResult reverse_order_check(const Certificate& a_cert, const Certificate& b_cert);

// Uniform dispatcher used by the CLI and the oracle-agreement suite.
FindResult compute_inverse(const Element& a, InverseKind kind,
                           const std::optional<AuxPair>& aux = std::nullopt,
                           const ComputeOptions& opts = {});

}  // namespace ginv
