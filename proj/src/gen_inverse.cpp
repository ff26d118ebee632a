#include "ginv/gen_inverse.hpp"

namespace ginv {

namespace {

SolveResult solve1(const StarRing& r, const Element& l, const Element& rt, const Element& rhs) {
  SolveTerm term{l, rt};
  return r.solve_linear(std::span<const SolveTerm>(&term, 1), rhs);
}

// Conjoin solve outcomes: any decisive miss wins over unknown.
FindStatus combine(std::initializer_list<SolveStatus> sts) {
  bool unknown = false;
  for (SolveStatus s : sts) {
    if (s == SolveStatus::NoSolution) return FindStatus::NotFound;
    if (s == SolveStatus::UnknownAtBound) unknown = true;
  }
  return unknown ? FindStatus::UnknownAtBound : FindStatus::Found;
}

FindResult missing(FindStatus st, const std::string& what) {
  return st == FindStatus::UnknownAtBound
             ? FindResult::unknown(what + " undecided at solver bounds")
             : FindResult::none(what + " does not exist");
}

Certificate make_certificate(InverseKind kind, const Element& a, const Element& x, int k,
                             std::string route, std::optional<AuxPair> aux = std::nullopt,
                             AuxWitnesses aux_witnesses = {}) {
  Certificate cert;
  cert.kind = kind;
  cert.input = a;
  cert.witness = x;
  cert.index_k = k;
  cert.construction_route = std::move(route);
  cert.aux = std::move(aux);
  cert.aux_witnesses = std::move(aux_witnesses);
  cert.equations = check_equations(kind, a, x, k, cert.aux, cert.aux_witnesses);
  if (!cert.verified())
    throw Error(Errc::InternalInconsistency,
                std::string("construction '") + cert.construction_route + "' for " +
                    kind_name(kind) + " produced an invalid witness (" +
                    first_failure(cert.equations) + " failed)");
  return cert;
}

int effective_k_max(const Element& a, const ComputeOptions& opts) {
  if (opts.k_max < 0) throw Error(Errc::InvalidBound, "k_max must be >= 1");
  return opts.k_max > 0 ? opts.k_max : a.ring().default_k_max();
}

}  // namespace

FindResult find_one_three(const Element& a) {
  const StarRing& r = a.ring();
  if (auto hint = r.one_three_hint(a)) {
    auto eqs = check_equations(InverseKind::OneThree, a, *hint);
    if (all_hold(eqs))
      return FindResult::ok(
          make_certificate(InverseKind::OneThree, a, *hint, 0, "backend-13"));
    throw Error(Errc::InternalInconsistency, "backend {1,3} hint failed verification");
  }
  // a = t a*a  =>  t* is a {1,3}-inverse
  Element asa = r.multiply(r.star(a), a);
  SolveResult t = solve1(r, r.one(), asa, a);
  if (!t.found()) return missing(combine({t.status}), "{1,3}-inverse");
  return FindResult::ok(make_certificate(InverseKind::OneThree, a, r.star(*t.witness), 0,
                                         "star-adjoint-13"));
}

FindResult find_one_four(const Element& a) {
  const StarRing& r = a.ring();
  FindResult dual = find_one_three(r.star(a));
  if (!dual.found()) {
    dual.reason = "{1,4}-inverse: " + dual.reason;
    return dual;
  }
  Element x = r.star(dual.certificate->witness);
  return FindResult::ok(make_certificate(InverseKind::OneFour, a, x, 0, "star-dual-14"));
}

FindResult moore_penrose(const Element& a) {
  const StarRing& r = a.ring();
  FindResult r13 = find_one_three(a);
  if (!r13.found()) return missing(r13.status == FindStatus::UnknownAtBound
                                       ? FindStatus::UnknownAtBound
                                       : FindStatus::NotFound,
                                   "Moore-Penrose inverse ({1,3} part)");
  FindResult r14 = find_one_four(a);
  if (!r14.found()) return missing(r14.status == FindStatus::UnknownAtBound
                                       ? FindStatus::UnknownAtBound
                                       : FindStatus::NotFound,
                                   "Moore-Penrose inverse ({1,4} part)");
  Element x = r.multiply(r.multiply(r14.certificate->witness, a), r13.certificate->witness);
  return FindResult::ok(make_certificate(InverseKind::MP, a, x, 0, "mp=x14*a*x13"));
}

FindResult group_inverse_of(const Element& a) {
  const StarRing& r = a.ring();
  if (auto hint = r.drazin_hint(a)) {
    if (hint->second > 1) return FindResult::none("index exceeds 1, no group inverse");
    return FindResult::ok(
        make_certificate(InverseKind::Group, a, hint->first, 0, "backend-drazin-hint"));
  }
  Element a2 = r.multiply(a, a);
  SolveResult right = solve1(r, a2, r.one(), a);  // a = a^2 s
  SolveResult left = solve1(r, r.one(), a2, a);   // a = t a^2
  FindStatus st = combine({right.status, left.status});
  if (st != FindStatus::Found) return missing(st, "group inverse");
  Element x = r.multiply(r.multiply(*left.witness, a), *right.witness);  // t a s
  return FindResult::ok(make_certificate(InverseKind::Group, a, x, 0, "two-sided-squares"));
}

FindResult drazin_inverse_of(const Element& a, const ComputeOptions& opts) {
  const StarRing& r = a.ring();
  if (auto hint = r.drazin_hint(a)) {
    return FindResult::ok(make_certificate(InverseKind::Drazin, a, hint->first, hint->second,
                                           "backend-drazin-hint"));
  }
  const int k_max = effective_k_max(a, opts);
  bool unknown = false;
  // k = 0 means a is invertible
  {
    SolveResult right = solve1(r, a, r.one(), r.one());
    SolveResult left = solve1(r, r.one(), a, r.one());
    FindStatus st = combine({right.status, left.status});
    if (st == FindStatus::Found)
      return FindResult::ok(
          make_certificate(InverseKind::Drazin, a, *right.witness, 0, "two-sided-powers"));
    if (st == FindStatus::UnknownAtBound) unknown = true;
  }
  Element ak = a;
  for (int k = 1; k <= k_max; ++k) {
    Element ak1 = r.multiply(ak, a);
    SolveResult right = solve1(r, ak1, r.one(), ak);  // a^k = a^{k+1} s
    SolveResult left = solve1(r, r.one(), ak1, ak);   // a^k = t a^{k+1}
    FindStatus st = combine({right.status, left.status});
    if (st == FindStatus::Found) {
      // group inverse of a^k is t^k a^k s^k; then a^D = (a^k)# a^{k-1}
      Element sk = r.pow(*right.witness, k);
      Element tk = r.pow(*left.witness, k);
      Element gk = r.multiply(r.multiply(tk, ak), sk);
      Element x = r.multiply(gk, r.pow(a, k - 1));
      return FindResult::ok(
          make_certificate(InverseKind::Drazin, a, x, k, "two-sided-powers"));
    }
    if (st == FindStatus::UnknownAtBound) unknown = true;
    ak = ak1;
  }
  return unknown ? FindResult::unknown("Drazin inverse undecided at solver bounds")
                 : FindResult::none("no Drazin inverse within k_max");
}

FindResult right_core_inverse(const Element& a) {
  const StarRing& r = a.ring();
  FindResult r13 = find_one_three(a);
  SolveResult t = solve1(r, r.multiply(a, a), r.one(), a);  // a = a^2 t
  FindStatus st = combine({r13.found() ? SolveStatus::Found
                                        : (r13.status == FindStatus::UnknownAtBound
                                               ? SolveStatus::UnknownAtBound
                                               : SolveStatus::NoSolution),
                           t.status});
  if (st != FindStatus::Found) return missing(st, "right core inverse");
  const Element& x13 = r13.certificate->witness;
  // u = 1 + a t x13 - a t right-inverts p + a, and the witness is u(1-p)
  Element at = r.multiply(a, *t.witness);
  Element u = r.sub(r.add(r.one(), r.multiply(at, x13)), at);
  Element x = r.multiply(u, r.multiply(a, x13));  // 1 - p = a x13
  return FindResult::ok(
      make_certificate(InverseKind::RightCore, a, x, 0, "projection-unit"));
}

FindResult right_core_via_projection(const Element& a, const Projection& p, int n) {
  const StarRing& r = a.ring();
  r.check_same_ring(p.element());
  if (n < 1) throw Error(Errc::InvalidBound, "n must be >= 1");
  const Element& pe = p.element();
  if (!r.is_zero(r.multiply(pe, a)))
    throw Error(Errc::PreconditionFailed, "projection does not annihilate a (pa != 0)");
  Element u = r.add(pe, r.pow(a, n));
  SolveResult y = solve1(r, u, r.one(), r.one());  // u y = 1
  if (!y.found()) return missing(combine({y.status}), "right inverse of p + a^n");
  Element x = n == 1 ? r.multiply(*y.witness, r.sub(r.one(), pe))
                      : r.multiply(r.pow(a, n - 1), *y.witness);
  return FindResult::ok(make_certificate(InverseKind::RightCore, a, x, 0,
                                         n == 1 ? "projection-unit-n1" : "projection-unit-power"));
}

Projection spectral_idempotent(const Certificate& cert) {
  if (cert.kind != InverseKind::RightCore && cert.kind != InverseKind::Core)
    throw Error(Errc::PreconditionFailed, "spectral idempotent needs a (right) core certificate");
  const StarRing& r = cert.input.ring();
  Element api = r.sub(r.one(), r.multiply(cert.input, cert.witness));
  if (!is_projection(api) || !r.is_zero(r.multiply(api, cert.input)))
    throw Error(Errc::InternalInconsistency, "1 - ax is not an annihilating projection");
  return Projection::checked(api);
}

FindResult core_inverse(const Element& a) {
  const StarRing& r = a.ring();
  FindResult grp = group_inverse_of(a);
  if (!grp.found()) {
    auto res = missing(grp.status == FindStatus::UnknownAtBound ? FindStatus::UnknownAtBound
                                                                : FindStatus::NotFound,
                       "core inverse (group part)");
    res.reason += "; " + grp.reason;
    return res;
  }
  FindResult r13 = find_one_three(a);
  if (!r13.found())
    return missing(r13.status == FindStatus::UnknownAtBound ? FindStatus::UnknownAtBound
                                                            : FindStatus::NotFound,
                   "core inverse ({1,3} part)");
  Element x = r.multiply(r.multiply(grp.certificate->witness, a), r13.certificate->witness);
  return FindResult::ok(make_certificate(InverseKind::Core, a, x, 0, "core=group*a*13"));
}

FindResult dual_core_inverse(const Element& a) {
  const StarRing& r = a.ring();
  FindResult dual = core_inverse(r.star(a));
  if (!dual.found()) {
    dual.reason = "dual core: " + dual.reason;
    return dual;
  }
  Element x = r.star(dual.certificate->witness);
  return FindResult::ok(make_certificate(InverseKind::DualCore, a, x, 0, "dual-of-core"));
}

Certificate core_from_witness(const Element& a, const Element& x, int k, CoreWitnessMode mode) {
  const StarRing& r = a.ring();
  r.check_same_ring(x);
  if (k < 1) throw Error(Errc::InvalidBound, "k must be >= 1");
  auto require = [&](bool ok, const std::string& eq) {
    if (!ok) throw Error(Errc::HypothesisNotMet, "hypothesis " + eq + " fails");
  };
  require(r.equal(r.multiply(r.multiply(x, a), a), a), "xa^2=a");
  Element xk = r.pow(x, k);
  require(r.equal(xk, r.multiply(a, r.multiply(xk, x))), "x^k=ax^{k+1}");
  Element z;
  const char* route = nullptr;
  if (mode == CoreWitnessMode::SymmetricPower) {
    Element akxk = r.multiply(r.pow(a, k), xk);
    require(r.equal(r.star(akxk), akxk), "(a^k x^k)*=a^k x^k");
    z = r.multiply(r.pow(a, k - 1), xk);
    route = "sym-power-core";
  } else {
    Element ax = r.multiply(a, x);
    require(r.equal(r.star(ax), ax), "(ax)*=ax");
    z = r.multiply(r.multiply(x, a), x);
    route = "sym-ax-core";
  }
  return make_certificate(InverseKind::Core, a, z, 0, route);
}

FindResult ep_check(const Element& a) {
  const StarRing& r = a.ring();
  FindResult mp = moore_penrose(a);
  if (!mp.found()) {
    mp.reason = "EP: " + mp.reason;
    return mp;
  }
  FindResult grp = group_inverse_of(a);
  if (!grp.found()) {
    grp.reason = "EP: " + grp.reason;
    return grp;
  }
  if (!r.equal(mp.certificate->witness, grp.certificate->witness))
    return FindResult::none("a^dagger differs from a^sharp, not EP");
  Certificate cert = make_certificate(InverseKind::MP, a, mp.certificate->witness, 0, "ep");
  Element ax = r.multiply(a, cert.witness);
  Element xa = r.multiply(cert.witness, a);
  cert.equations.push_back({"ax=xa", r.encode(ax), r.encode(xa), r.equal(ax, xa)});
  if (!cert.verified())
    throw Error(Errc::InternalInconsistency, "a^dagger = a^sharp but a a^dagger != a^dagger a");
  return FindResult::ok(std::move(cert));
}

FindResult ep_check_with_witness(const Element& a, const Element& x, int k) {
  const StarRing& r = a.ring();
  r.check_same_ring(x);
  if (k < 1) throw Error(Errc::InvalidBound, "k must be >= 1");
  auto require = [&](bool ok, const std::string& eq) {
    if (!ok) throw Error(Errc::HypothesisNotMet, "hypothesis " + eq + " fails");
  };
  require(r.equal(r.multiply(r.multiply(x, a), a), a), "xa^2=a");
  Element xa = r.multiply(x, a);
  require(r.equal(r.star(xa), xa), "(xa)*=xa");
  Element xk = r.pow(x, k);
  require(r.equal(xk, r.multiply(a, r.multiply(xk, x))), "x^k=ax^{k+1}");
  // a^sharp = x^2 a from the witness; EP then follows from the symmetry
  Element sharp = r.multiply(r.multiply(x, x), a);
  Certificate cert = make_certificate(InverseKind::Group, a, sharp, 0, "ep-witness-x2a");
  Element ag = r.multiply(a, sharp);
  cert.equations.push_back({"(ax)*=ax", r.encode(r.star(ag)), r.encode(ag),
                            r.equal(r.star(ag), ag)});
  if (!cert.verified())
    throw Error(Errc::InternalInconsistency, "witness route produced a non-EP group inverse");
  return FindResult::ok(std::move(cert));
}

FindResult pseudo_core_inverse(const Element& a, const ComputeOptions& opts) {
  const StarRing& r = a.ring();
  FindResult drz = drazin_inverse_of(a, opts);
  if (!drz.found()) {
    drz.reason = "pseudo core: " + drz.reason;
    return drz;
  }
  const int k = std::max(drz.certificate->index_k, 1);
  Element ak = r.pow(a, k);
  FindResult r13 = find_one_three(ak);
  if (!r13.found())
    return missing(r13.status == FindStatus::UnknownAtBound ? FindStatus::UnknownAtBound
                                                            : FindStatus::NotFound,
                   "pseudo core inverse ({1,3} of a^k)");
  Element x = r.multiply(r.multiply(drz.certificate->witness, ak), r13.certificate->witness);
  return FindResult::ok(
      make_certificate(InverseKind::PseudoCore, a, x, k, "drazin-power-13"));
}

FindResult right_pseudo_core_inverse(const Element& a, const ComputeOptions& opts) {
  const StarRing& r = a.ring();
  const int k_max = effective_k_max(a, opts);
  bool unknown = false;
  Element ak = a;
  for (int k = 1; k <= k_max; ++k) {
    Element ak1 = r.multiply(ak, a);
    FindResult r13 = find_one_three(ak);
    SolveResult z = solve1(r, ak1, r.one(), ak);  // a^k = a^{k+1} z
    FindStatus st = combine({r13.found() ? SolveStatus::Found
                                          : (r13.status == FindStatus::UnknownAtBound
                                                 ? SolveStatus::UnknownAtBound
                                                 : SolveStatus::NoSolution),
                             z.status});
    if (st == FindStatus::Found) {
      Element x = r.multiply(r.multiply(ak, *z.witness), r13.certificate->witness);
      return FindResult::ok(
          make_certificate(InverseKind::RightPseudoCore, a, x, k, "power-13-solve"));
    }
    if (st == FindStatus::UnknownAtBound) unknown = true;
    ak = ak1;
  }
  return unknown ? FindResult::unknown("right pseudo core inverse undecided at solver bounds")
                 : FindResult::none("no k <= k_max with a^k {1,3}-invertible and a^kR = a^{k+1}R");
}

FindResult one_sided_bc_inverse(const Element& a, const Element& b, const Element& c,
                                BcSide side) {
  const StarRing& r = a.ring();
  r.check_same_ring(b);
  r.check_same_ring(c);
  Element cab = r.multiply(r.multiply(c, a), b);
  if (side == BcSide::Right) {
    SolveResult s = solve1(r, cab, r.one(), c);  // c = cab s
    if (!s.found()) return missing(combine({s.status}), "right (b,c)-inverse");
    Element z = r.multiply(b, *s.witness);
    AuxWitnesses aw{{"s", *s.witness}};
    return FindResult::ok(make_certificate(InverseKind::RightBC, a, z, 0, "bc-right-solve",
                                           AuxPair{b, c}, std::move(aw)));
  }
  SolveResult t = solve1(r, r.one(), cab, b);  // b = t cab
  if (!t.found()) return missing(combine({t.status}), "left (b,c)-inverse");
  Element x = r.multiply(*t.witness, c);
  AuxWitnesses aw{{"t", *t.witness}};
  return FindResult::ok(make_certificate(InverseKind::LeftBC, a, x, 0, "bc-left-solve",
                                         AuxPair{b, c}, std::move(aw)));
}

FindResult bc_inverse(const Element& a, const Element& b, const Element& c) {
  const StarRing& r = a.ring();
  FindResult right = one_sided_bc_inverse(a, b, c, BcSide::Right);
  if (!right.found()) {
    right.reason = "(b,c)-inverse: " + right.reason;
    return right;
  }
  FindResult left = one_sided_bc_inverse(a, b, c, BcSide::Left);
  if (!left.found()) {
    left.reason = "(b,c)-inverse: " + left.reason;
    return left;
  }
  // when both one-sided inverses exist they coincide with the (b,c)-inverse
  const Element& y = right.certificate->witness;
  if (!r.equal(y, left.certificate->witness))
    throw Error(Errc::InternalInconsistency, "left and right (b,c)-inverses differ");
  SolveResult u = r.solve_linear(
      std::vector<SolveTerm>{{b, y}}, y);  // y = b u y
  SolveResult v = r.solve_linear(std::vector<SolveTerm>{{y, c}}, y);  // y = y v c
  FindStatus st = combine({u.status, v.status});
  if (st != FindStatus::Found) return missing(st, "(b,c)-inverse membership");
  AuxWitnesses aw{{"u", *u.witness}, {"v", *v.witness}};
  return FindResult::ok(
      make_certificate(InverseKind::BC, a, y, 0, "bc-two-sided", AuxPair{b, c}, std::move(aw)));
}

CoreNilpotentParts decompose_core_nilpotent(const Element& a, const Certificate& cert) {
  const StarRing& r = a.ring();
  if (cert.kind != InverseKind::RightCore || !r.equal(cert.input, a))
    throw Error(Errc::PreconditionFailed, "need a right core certificate for a");
  const Element& x = cert.witness;
  Element a1 = r.multiply(r.multiply(a, a), x);
  Element a2 = r.sub(a, a1);
  auto fail = [&](const std::string& what) {
    throw Error(Errc::InternalInconsistency, "core-nilpotent decomposition: " + what);
  };
  if (!r.is_zero(r.multiply(a2, a2))) fail("a2^2 != 0");
  if (!r.is_zero(r.multiply(a1, r.star(a2)))) fail("a1 a2* != 0");
  if (!r.is_zero(r.multiply(a2, a1))) fail("a2 a1 != 0");
  if (!r.equal(a, r.add(a1, a2))) fail("a1 + a2 != a");
  Element y = r.multiply(r.multiply(x, a), x);
  Certificate a1_cert = make_certificate(InverseKind::RightCore, a1, y, 0, "nilpotent-part-xax");
  return CoreNilpotentParts{a1, a2, std::move(a1_cert)};
}

RepresentationBlocks representation_blocks(const Element& a, const Certificate& cert) {
  const StarRing& r = a.ring();
  if ((cert.kind != InverseKind::RightCore && cert.kind != InverseKind::RightPseudoCore) ||
      !r.equal(cert.input, a))
    throw Error(Errc::PreconditionFailed,
                "need a right (pseudo) core certificate for a");
  const Element& x = cert.witness;
  Element q = r.multiply(a, x);
  Projection qp = Projection::checked(q);
  PeirceBlocks ab = peirce_decompose(a, qp);
  PeirceBlocks xb = peirce_decompose(x, qp);
  auto fail = [&](const std::string& what) {
    throw Error(Errc::InternalInconsistency, "block representation: " + what);
  };
  if (cert.kind == InverseKind::RightCore) {
    if (!r.equal(r.multiply(q, a), a)) fail("(1-q)a != 0");
  } else {
    Element ak = r.pow(a, cert.index_k);
    if (!r.equal(r.multiply(q, ak), ak)) fail("q a^k != a^k");
  }
  if (!r.equal(r.multiply(q, x), x)) fail("(1-q)x != 0");
  if (!r.equal(r.multiply(ab.a11, xb.a11), q)) fail("a1 x1 != q");
  if (!r.is_zero(r.multiply(ab.a11, xb.a12))) fail("a1 x2 != 0");
  if (cert.kind == InverseKind::RightPseudoCore) {
    if (!r.is_zero(r.multiply(ab.a21, xb.a11))) fail("a3 x1 != 0");
    if (!r.is_zero(r.multiply(ab.a21, xb.a12))) fail("a3 x2 != 0");
  }
  return RepresentationBlocks{qp, std::move(ab), std::move(xb)};
}

FindResult reverse_order_check(const Certificate& a_cert, const Certificate& b_cert) {
  if (a_cert.kind != InverseKind::RightCore || b_cert.kind != InverseKind::RightCore)
    throw Error(Errc::PreconditionFailed, "need right core certificates for both factors");
  const StarRing& r = a_cert.input.ring();
  r.check_same_ring(b_cert.input);
  const Element& a = a_cert.input;
  const Element& b = b_cert.input;
  const Element& xa = a_cert.witness;
  const Element& xb = b_cert.witness;
  bool equal_idempotents = r.equal(r.multiply(a, xa), r.multiply(b, xb));
  bool ordered = r.equal(a, r.multiply(r.multiply(a, b), xb)) &&
                 r.equal(b, r.multiply(r.multiply(a, xa), b));
  if (!equal_idempotents && !ordered)
    return FindResult::none("neither reverse-order hypothesis holds");
  Element ab = r.multiply(a, b);
  Element w = r.multiply(xb, xa);
  return FindResult::ok(make_certificate(InverseKind::RightCore, ab, w, 0,
                                         equal_idempotents ? "equal-idempotents-reverse"
                                                           : "ordered-ideals-reverse"));
}

FindResult compute_inverse(const Element& a, InverseKind kind, const std::optional<AuxPair>& aux,
                           const ComputeOptions& opts) {
  const StarRing& r = a.ring();
  if (kind_needs_aux(kind) && !aux)
    throw Error(Errc::InvalidElement, "(b,c) pair required for this kind");
  switch (kind) {
    case InverseKind::Inner: {
      SolveResult s = r.solve_linear(std::vector<SolveTerm>{{a, a}}, a);  // a x a = a
      if (!s.found()) return missing(combine({s.status}), "inner inverse");
      return FindResult::ok(
          make_certificate(InverseKind::Inner, a, *s.witness, 0, "linear-solve"));
    }
    case InverseKind::OneThree: return find_one_three(a);
    case InverseKind::OneFour: return find_one_four(a);
    case InverseKind::MP: return moore_penrose(a);
    case InverseKind::Group: return group_inverse_of(a);
    case InverseKind::Drazin: return drazin_inverse_of(a, opts);
    case InverseKind::Core: return core_inverse(a);
    case InverseKind::DualCore: return dual_core_inverse(a);
    case InverseKind::RightCore: return right_core_inverse(a);
    case InverseKind::LeftCore: {
      // x = s a* with x a^2 = a: solve s (a* a^2) = a
      Element asa2 = r.multiply(r.star(a), r.multiply(a, a));
      SolveResult s = solve1(r, r.one(), asa2, a);
      if (!s.found()) return missing(combine({s.status}), "left core inverse");
      Element x = r.multiply(*s.witness, r.star(a));
      AuxWitnesses aw{{"s", *s.witness}};
      return FindResult::ok(make_certificate(InverseKind::LeftCore, a, x, 0, "bc-left-solve",
                                             std::nullopt, std::move(aw)));
    }
    case InverseKind::PseudoCore: return pseudo_core_inverse(a, opts);
    case InverseKind::RightPseudoCore: return right_pseudo_core_inverse(a, opts);
    case InverseKind::RightInverse: {
      SolveResult s = solve1(r, a, r.one(), r.one());
      if (!s.found()) return missing(combine({s.status}), "right inverse");
      return FindResult::ok(
          make_certificate(InverseKind::RightInverse, a, *s.witness, 0, "linear-solve"));
    }
    case InverseKind::LeftInverse: {
      SolveResult s = solve1(r, r.one(), a, r.one());
      if (!s.found()) return missing(combine({s.status}), "left inverse");
      return FindResult::ok(
          make_certificate(InverseKind::LeftInverse, a, *s.witness, 0, "linear-solve"));
    }
    case InverseKind::BC: return bc_inverse(a, aux->b, aux->c);
    case InverseKind::LeftBC: return one_sided_bc_inverse(a, aux->b, aux->c, BcSide::Left);
    case InverseKind::RightBC: return one_sided_bc_inverse(a, aux->b, aux->c, BcSide::Right);
  }
  throw Error(Errc::Unsupported, "unhandled kind");
}

}  // namespace ginv
