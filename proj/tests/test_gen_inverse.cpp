#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ginv/gen_inverse.hpp"
#include "ginv/matmod_ring.hpp"
#include "ginv/matq_ring.hpp"
#include "ginv/oracle.hpp"
#include "ginv/toeplitz.hpp"
#include "ginv/zn_ring.hpp"

using namespace ginv;

namespace {

ExactMatrix m(std::vector<std::vector<std::string>> rows) {
  return ExactMatrix::parse_rows(std::move(rows));
}

}  // namespace

TEST_CASE("right core inverse of 2 in Z6 matches the oracle") {
  auto z6 = ZnRing::create(6);
  FindResult res = right_core_inverse(z6->make(2));
  REQUIRE(res.found());
  CHECK(z6->encode(res.certificate->witness) == "2");
  auto oracle = oracle_search(z6->make(2), InverseKind::RightCore);
  REQUIRE(oracle.has_value());
  CHECK(z6->equal(res.certificate->witness, oracle->witness));
}

TEST_CASE("right core inverse in the Toeplitz ring: S* gets witness S") {
  auto ring = ToeplitzRing::create();
  Element ss = ring->make(ToeplitzElement::shift_star());
  FindResult res = right_core_inverse(ss);
  REQUIRE(res.found());
  CHECK(ring->equal(res.certificate->witness, ring->make(ToeplitzElement::shift())));
  // a x = 1, so the spectral idempotent vanishes
  Projection api = spectral_idempotent(*res.certificate);
  CHECK(ring->is_zero(api.element()));
}

TEST_CASE("right core inverse: decisive none for the rational nilpotent") {
  auto mq = GaussianMatrixRing::create(2);
  FindResult res = right_core_inverse(mq->make(m({{"0", "1"}, {"0", "0"}})));
  CHECK(res.status == FindStatus::NotFound);
}

TEST_CASE("right core inverse of [[1,1],[0,0]] over Q") {
  auto mq = GaussianMatrixRing::create(2);
  Element a = mq->make(m({{"1", "1"}, {"0", "0"}}));
  FindResult res = right_core_inverse(a);
  REQUIRE(res.found());
  CHECK(mq->encode(res.certificate->witness) == "[[1,0],[0,0]]");
  // Dedekind-finite here, so it coincides with the core inverse
  FindResult core = core_inverse(a);
  REQUIRE(core.found());
  CHECK(mq->equal(core.certificate->witness, res.certificate->witness));
}

TEST_CASE("right core via projection in Z6") {
  auto z6 = ZnRing::create(6);
  Element a = z6->make(2);
  Projection p = Projection::checked(z6->make(3));
  FindResult n1 = right_core_via_projection(a, p, 1);
  REQUIRE(n1.found());
  CHECK(z6->encode(n1.certificate->witness) == "2");
  FindResult n2 = right_core_via_projection(a, p, 2);
  REQUIRE(n2.found());
  CHECK(z6->encode(n2.certificate->witness) == "2");
  // invertible element with the zero projection
  Element u = z6->make(5);
  FindResult inv = right_core_via_projection(u, Projection::checked(z6->zero()), 1);
  REQUIRE(inv.found());
  CHECK(z6->encode(inv.certificate->witness) == "5");
  // pa != 0 is a precondition failure
  CHECK_THROWS_AS(right_core_via_projection(z6->make(5), p, 1), Error);
}

TEST_CASE("spectral idempotent of 2 in Z6 is 3") {
  auto z6 = ZnRing::create(6);
  FindResult res = right_core_inverse(z6->make(2));
  REQUIRE(res.found());
  Projection api = spectral_idempotent(*res.certificate);
  CHECK(z6->encode(api.element()) == "3");
}

TEST_CASE("core inverse examples") {
  auto mq = GaussianMatrixRing::create(2);
  FindResult res = core_inverse(mq->make(m({{"1", "1"}, {"0", "0"}})));
  REQUIRE(res.found());
  CHECK(mq->encode(res.certificate->witness) == "[[1,0],[0,0]]");
  CHECK(core_inverse(mq->make(m({{"0", "1"}, {"0", "0"}}))).status == FindStatus::NotFound);

  auto z6 = ZnRing::create(6);
  FindResult unit = core_inverse(z6->make(5));
  REQUIRE(unit.found());
  CHECK(z6->encode(unit.certificate->witness) == "5");
}

TEST_CASE("dual core inverse via duality") {
  auto mq = GaussianMatrixRing::create(2);
  Element a = mq->make(m({{"1", "1"}, {"0", "0"}}));
  FindResult res = dual_core_inverse(a);
  REQUIRE(res.found());
  // value fixed by the construction (core inverse of a*, starred), verified
  // against the dual equation set
  CHECK(mq->encode(res.certificate->witness) == "[[1/2,1/2],[1/2,1/2]]");

  // symmetric idempotent is its own dual core inverse
  Element p = mq->make(m({{"1", "0"}, {"0", "0"}}));
  FindResult pd = dual_core_inverse(p);
  REQUIRE(pd.found());
  CHECK(mq->equal(pd.certificate->witness, p));

  // units: dual core inverse is the inverse
  auto z6 = ZnRing::create(6);
  FindResult u = dual_core_inverse(z6->make(5));
  REQUIRE(u.found());
  CHECK(z6->encode(u.certificate->witness) == "5");
}

TEST_CASE("core_from_witness modes") {
  auto mq = GaussianMatrixRing::create(2);
  Element a = mq->make(m({{"1", "1"}, {"0", "0"}}));
  Element x = mq->make(m({{"1", "0"}, {"0", "0"}}));
  Certificate c1 = core_from_witness(a, x, 1, CoreWitnessMode::SymmetricPower);
  CHECK(mq->equal(c1.witness, x));
  Certificate c2 = core_from_witness(a, x, 2, CoreWitnessMode::SymmetricPower);
  CHECK(mq->equal(c2.witness, x));
  Certificate c3 = core_from_witness(a, x, 1, CoreWitnessMode::SymmetricAX);
  CHECK(mq->equal(c3.witness, x));

  // invertible: witness a^{-1} reproduces a^{-1}
  auto z6 = ZnRing::create(6);
  Certificate c4 = core_from_witness(z6->make(5), z6->make(5), 1, CoreWitnessMode::SymmetricAX);
  CHECK(z6->encode(c4.witness) == "5");

  // hypothesis failure reports the failing equation
  try {
    core_from_witness(a, mq->make(m({{"0", "1"}, {"0", "0"}})), 1,
                      CoreWitnessMode::SymmetricPower);
    FAIL("expected HypothesisNotMet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::HypothesisNotMet);
    CHECK(std::string(e.what()).find("xa^2=a") != std::string::npos);
  }
}

TEST_CASE("ep_check examples") {
  auto mq = GaussianMatrixRing::create(2);
  // symmetric invertible matrix is EP with a# = a+ = a^{-1}
  Element sym = mq->make(m({{"0", "1"}, {"1", "0"}}));
  FindResult res = ep_check(sym);
  REQUIRE(res.found());
  CHECK(mq->equal(res.certificate->witness, sym));  // self-inverse permutation

  // [[1,1],[0,0]] is not EP
  CHECK(ep_check(mq->make(m({{"1", "1"}, {"0", "0"}}))).status == FindStatus::NotFound);

  // every element of Z6 is EP
  auto z6 = ZnRing::create(6);
  for (std::size_t i = 0; i < 6; ++i) {
    FindResult r = ep_check(z6->element_at(i));
    INFO("element ", i);
    CHECK(r.found());
  }

  // witness route: group inverse built as x^2 a
  FindResult w = ep_check_with_witness(z6->make(2), z6->make(2), 1);
  REQUIRE(w.found());
  CHECK(z6->encode(w.certificate->witness) == "2");
}

TEST_CASE("pseudo core inverse examples") {
  auto mq = GaussianMatrixRing::create(2);
  FindResult nil = pseudo_core_inverse(mq->make(m({{"0", "1"}, {"0", "0"}})));
  REQUIRE(nil.found());
  CHECK(mq->is_zero(nil.certificate->witness));
  CHECK(nil.certificate->index_k == 2);

  auto z8 = ZnRing::create(8);
  FindResult two = pseudo_core_inverse(z8->make(2));
  REQUIRE(two.found());
  CHECK(z8->is_zero(two.certificate->witness));
  CHECK(two.certificate->index_k == 3);
  auto oracle = oracle_search(z8->make(2), InverseKind::PseudoCore);
  REQUIRE(oracle.has_value());
  CHECK(z8->equal(two.certificate->witness, oracle->witness));
  CHECK(two.certificate->index_k == oracle->index_k);

  auto mq3 = GaussianMatrixRing::create(3);
  FindResult blk = pseudo_core_inverse(
      mq3->make(m({{"0", "1", "0"}, {"0", "0", "0"}, {"0", "0", "1"}})));
  REQUIRE(blk.found());
  CHECK(mq3->encode(blk.certificate->witness) == "[[0,0,0],[0,0,0],[0,0,1]]");
  CHECK(blk.certificate->index_k == 2);
}

TEST_CASE("right pseudo core inverse examples") {
  auto ring = ToeplitzRing::create();
  Element ss = ring->make(ToeplitzElement::shift_star());
  FindResult res = right_pseudo_core_inverse(ss);
  REQUIRE(res.found());
  CHECK(res.certificate->index_k == 1);
  CHECK(ring->equal(res.certificate->witness, ring->make(ToeplitzElement::shift())));

  auto z8 = ZnRing::create(8);
  FindResult two = right_pseudo_core_inverse(z8->make(2));
  REQUIRE(two.found());
  CHECK(z8->is_zero(two.certificate->witness));
  CHECK(two.certificate->index_k == 3);

  FindResult unit = right_pseudo_core_inverse(z8->make(5));
  REQUIRE(unit.found());
  CHECK(unit.certificate->index_k == 1);
  CHECK(z8->encode(unit.certificate->witness) == "5");
}

TEST_CASE("one-sided (b,c) inverses") {
  auto z6 = ZnRing::create(6);
  Element u = z6->make(5);
  FindResult res = one_sided_bc_inverse(u, u, u, BcSide::Right);
  REQUIRE(res.found());
  CHECK(z6->encode(res.certificate->witness) == "5");

  // right core inverse as right (a, a*)-inverse
  Element a = z6->make(2);
  FindResult rc = one_sided_bc_inverse(a, a, z6->star(a), BcSide::Right);
  REQUIRE(rc.found());
  CHECK(all_hold(check_equations(InverseKind::RightCore, a, rc.certificate->witness)));

  // S is not right (S, S*)-invertible at the default bounds
  auto ring = ToeplitzRing::create();
  Element s = ring->make(ToeplitzElement::shift());
  FindResult none = one_sided_bc_inverse(s, s, ring->star(s), BcSide::Right);
  CHECK(none.status == FindStatus::UnknownAtBound);
}

TEST_CASE("two-sided (b,c) inverse equals one-sided witnesses") {
  auto z6 = ZnRing::create(6);
  Element a = z6->make(2);
  AuxPair aux{a, z6->star(a)};
  FindResult bc = bc_inverse(a, aux.b, aux.c);
  REQUIRE(bc.found());
  // (a, a*)-inverse is the core inverse
  auto core = oracle_search(a, InverseKind::Core);
  REQUIRE(core.has_value());
  CHECK(z6->equal(bc.certificate->witness, core->witness));
}

TEST_CASE("core-nilpotent decomposition") {
  auto z6 = ZnRing::create(6);
  Element a = z6->make(2);
  FindResult rc = right_core_inverse(a);
  REQUIRE(rc.found());
  CoreNilpotentParts parts = decompose_core_nilpotent(a, *rc.certificate);
  CHECK(z6->encode(parts.a1) == "2");
  CHECK(z6->is_zero(parts.a2));

  auto mq = GaussianMatrixRing::create(2);
  Element b = mq->make(m({{"1", "1"}, {"0", "0"}}));
  FindResult rb = right_core_inverse(b);
  REQUIRE(rb.found());
  CoreNilpotentParts bp = decompose_core_nilpotent(b, *rb.certificate);
  CHECK(mq->equal(mq->add(bp.a1, bp.a2), b));
  CHECK(mq->is_zero(mq->multiply(bp.a2, bp.a2)));
  CHECK(mq->is_zero(mq->multiply(bp.a1, mq->star(bp.a2))));
  CHECK(mq->is_zero(mq->multiply(bp.a2, bp.a1)));
  CHECK(bp.a1_certificate.verified());

  // invertible: a1 = a, a2 = 0
  Element u = mq->make(m({{"1", "1"}, {"0", "1"}}));
  FindResult ru = right_core_inverse(u);
  REQUIRE(ru.found());
  CoreNilpotentParts up = decompose_core_nilpotent(u, *ru.certificate);
  CHECK(mq->equal(up.a1, u));
  CHECK(mq->is_zero(up.a2));
}

TEST_CASE("representation blocks") {
  auto mq = GaussianMatrixRing::create(2);
  Element a = mq->make(m({{"1", "1"}, {"0", "0"}}));
  FindResult rc = right_core_inverse(a);
  REQUIRE(rc.found());
  RepresentationBlocks blocks = representation_blocks(a, *rc.certificate);
  CHECK(mq->encode(blocks.q.element()) == "[[1,0],[0,0]]");

  // invertible: q = 1
  auto z6 = ZnRing::create(6);
  FindResult ru = right_core_inverse(z6->make(5));
  REQUIRE(ru.found());
  RepresentationBlocks ub = representation_blocks(z6->make(5), *ru.certificate);
  CHECK(z6->is_one(ub.q.element()));

  // right pseudo core case with q = 0 in Z8
  auto z8 = ZnRing::create(8);
  FindResult rp = right_pseudo_core_inverse(z8->make(2));
  REQUIRE(rp.found());
  RepresentationBlocks zb = representation_blocks(z8->make(2), *rp.certificate);
  CHECK(z8->is_zero(zb.q.element()));
}

TEST_CASE("reverse order law") {
  auto z6 = ZnRing::create(6);
  Element a = z6->make(2);
  FindResult ra = right_core_inverse(a);
  REQUIRE(ra.found());
  FindResult rev = reverse_order_check(*ra.certificate, *ra.certificate);
  REQUIRE(rev.found());
  CHECK(z6->encode(rev.certificate->input) == "4");
  CHECK(z6->encode(rev.certificate->witness) == "4");

  // invertible pair: (a^2)-witness is a^{-2}
  Element u = z6->make(5);
  FindResult ru = right_core_inverse(u);
  REQUIRE(ru.found());
  FindResult rev_u = reverse_order_check(*ru.certificate, *ru.certificate);
  REQUIRE(rev_u.found());
  CHECK(z6->encode(rev_u.certificate->witness) == "1");  // 5*5 = 25 = 1

  // hypotheses fail: not an error, just none
  auto mq = GaussianMatrixRing::create(2);
  Element p = mq->make(m({{"1", "0"}, {"0", "0"}}));
  Element q = mq->make(m({{"0", "0"}, {"0", "1"}}));
  FindResult rp = right_core_inverse(p);
  FindResult rq = right_core_inverse(q);
  REQUIRE(rp.found());
  REQUIRE(rq.found());
  FindResult none = reverse_order_check(*rp.certificate, *rq.certificate);
  CHECK(none.status == FindStatus::NotFound);
}

TEST_CASE("degenerate input: zero is certified with witness zero") {
  auto z6 = ZnRing::create(6);
  for (InverseKind kind :
       {InverseKind::Core, InverseKind::RightCore, InverseKind::PseudoCore}) {
    FindResult res = compute_inverse(z6->zero(), kind);
    REQUIRE(res.found());
    CHECK(z6->is_zero(res.certificate->witness));
  }
}

TEST_CASE("construction certificates re-verify and record routes") {
  auto z12 = ZnRing::create(12);
  for (std::size_t i = 0; i < z12->size(); ++i) {
    for (InverseKind kind : {InverseKind::RightCore, InverseKind::Core, InverseKind::MP,
                             InverseKind::Drazin, InverseKind::PseudoCore}) {
      FindResult res = compute_inverse(z12->element_at(i), kind);
      if (res.found()) {
        CHECK(reverify(*res.certificate));
        CHECK_FALSE(res.certificate->construction_route.empty());
        CHECK(res.certificate->construction_route != "oracle");
      }
    }
  }
}

TEST_CASE("construction and oracle agree on existence over Z12 for all kinds") {
  auto ring = ZnRing::create(12);
  for (std::size_t i = 0; i < ring->size(); ++i) {
    Element a = ring->element_at(i);
    for (InverseKind kind : kAllKinds) {
      std::optional<AuxPair> aux;
      if (kind_needs_aux(kind)) aux = AuxPair{a, ring->star(a)};
      FindResult built = compute_inverse(a, kind, aux);
      auto oracle = oracle_search(a, kind, aux);
      INFO(ring->id(), " a=", ring->encode(a), " kind=", kind_name(kind));
      CHECK(built.found() == oracle.has_value());
      if (built.found() && kind_is_unique(kind))
        CHECK(ring->equal(built.certificate->witness, oracle->witness));
    }
  }
}
