#include "ginv/inverse_kind.hpp"

namespace ginv {

const char* kind_name(InverseKind k) {
  switch (k) {
    case InverseKind::Inner: return "inner";
    case InverseKind::OneThree: return "one-three";
    case InverseKind::OneFour: return "one-four";
    case InverseKind::MP: return "mp";
    case InverseKind::Group: return "group";
    case InverseKind::Drazin: return "drazin";
    case InverseKind::Core: return "core";
    case InverseKind::DualCore: return "dual-core";
    case InverseKind::RightCore: return "right-core";
    case InverseKind::LeftCore: return "left-core";
    case InverseKind::PseudoCore: return "pseudo-core";
    case InverseKind::RightPseudoCore: return "right-pseudo-core";
    case InverseKind::RightInverse: return "right-inverse";
    case InverseKind::LeftInverse: return "left-inverse";
    case InverseKind::BC: return "bc";
    case InverseKind::LeftBC: return "left-bc";
    case InverseKind::RightBC: return "right-bc";
  }
  return "?";
}

std::optional<InverseKind> parse_kind(const std::string& name) {
  for (InverseKind k : kAllKinds)
    if (name == kind_name(k)) return k;
  return std::nullopt;
}

std::vector<std::string> all_kind_names() {
  std::vector<std::string> out;
  for (InverseKind k : kAllKinds) out.emplace_back(kind_name(k));
  return out;
}

bool kind_uses_index(InverseKind k) {
  return k == InverseKind::Drazin || k == InverseKind::PseudoCore ||
         k == InverseKind::RightPseudoCore;
}

bool kind_needs_aux(InverseKind k) {
  return k == InverseKind::BC || k == InverseKind::LeftBC || k == InverseKind::RightBC;
}

bool kind_is_unique(InverseKind k) {
  switch (k) {
    case InverseKind::MP:
    case InverseKind::Group:
    case InverseKind::Drazin:
    case InverseKind::Core:
    case InverseKind::DualCore:
    case InverseKind::PseudoCore:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> kind_equation_ids(InverseKind k) {
  switch (k) {
    case InverseKind::Inner: return {"axa=a"};
    case InverseKind::OneThree: return {"axa=a", "(ax)*=ax"};
    case InverseKind::OneFour: return {"axa=a", "(xa)*=xa"};
    case InverseKind::MP: return {"axa=a", "xax=x", "(ax)*=ax", "(xa)*=xa"};
    case InverseKind::Group: return {"axa=a", "xax=x", "ax=xa"};
    case InverseKind::Drazin: return {"xax=x", "ax=xa", "a^k=a^{k+1}x"};
    case InverseKind::Core: return {"xa^2=a", "ax^2=x", "(ax)*=ax"};
    case InverseKind::DualCore: return {"a^2x=a", "x^2a=x", "(xa)*=xa"};
    case InverseKind::RightCore: return {"axa=a", "x=ax^2", "(ax)*=ax"};
    case InverseKind::LeftCore: return {"xa^2=a", "x in Ra*"};
    case InverseKind::PseudoCore: return {"xa^{k+1}=a^k", "ax^2=x", "(ax)*=ax"};
    case InverseKind::RightPseudoCore: return {"axa^k=a^k", "x=ax^2", "(ax)*=ax"};
    case InverseKind::RightInverse: return {"ax=1"};
    case InverseKind::LeftInverse: return {"xa=1"};
    case InverseKind::BC: return {"x in bRx", "x in xRc", "xab=b", "cax=c"};
    case InverseKind::LeftBC: return {"x in Rc", "xab=b"};
    case InverseKind::RightBC: return {"x in bR", "cax=c"};
  }
  return {};
}

namespace {

EquationCheck eq_check(const StarRing& r, std::string id, const Element& lhs,
                       const Element& rhs) {
  EquationCheck e;
  e.id = std::move(id);
  e.lhs = r.encode(lhs);
  e.rhs = r.encode(rhs);
  e.holds = r.equal(lhs, rhs);
  return e;
}

// Membership x in (pattern with slot s): replay the recorded witness when
// present, otherwise ask the backend for one. compose(s) rebuilds the element
// the witness must reproduce.
template <class Compose>
EquationCheck membership_check(const StarRing& r, std::string id, const Element& x,
                               const AuxWitnesses& aux_witnesses, const std::string& slot,
                               std::span<const SolveTerm> terms, Compose&& compose) {
  EquationCheck e;
  e.id = std::move(id);
  e.rhs = r.encode(x);
  auto it = aux_witnesses.find(slot);
  if (it != aux_witnesses.end()) {
    Element rebuilt = compose(it->second);
    e.lhs = r.encode(rebuilt);
    e.holds = r.equal(rebuilt, x);
    return e;
  }
  SolveResult s = r.solve_linear(terms, x);
  if (s.found()) {
    Element rebuilt = compose(*s.witness);
    e.lhs = r.encode(rebuilt);
    e.holds = r.equal(rebuilt, x);
  } else {
    e.lhs = "(no witness found)";
    e.holds = false;
  }
  return e;
}

}  // namespace

std::vector<EquationCheck> check_equations(InverseKind kind, const Element& a, const Element& x,
                                           int k, const std::optional<AuxPair>& aux,
                                           const AuxWitnesses& aux_witnesses) {
  const StarRing& r = a.ring();
  r.check_same_ring(x);
  if (kind_needs_aux(kind) && !aux)
    throw Error(Errc::InvalidElement, "(b,c) pair required for this kind");
  if (kind_uses_index(kind)) {
    int min_k = kind == InverseKind::Drazin ? 0 : 1;
    if (k < min_k) throw Error(Errc::InvalidBound, "index k out of range");
  }

  auto mul = [&](const Element& u, const Element& v) { return r.multiply(u, v); };
  std::vector<EquationCheck> out;

  Element ax = mul(a, x);
  Element xa = mul(x, a);
  switch (kind) {
    case InverseKind::Inner:
      out.push_back(eq_check(r, "axa=a", mul(ax, a), a));
      break;
    case InverseKind::OneThree:
      out.push_back(eq_check(r, "axa=a", mul(ax, a), a));
      out.push_back(eq_check(r, "(ax)*=ax", r.star(ax), ax));
      break;
    case InverseKind::OneFour:
      out.push_back(eq_check(r, "axa=a", mul(ax, a), a));
      out.push_back(eq_check(r, "(xa)*=xa", r.star(xa), xa));
      break;
    case InverseKind::MP:
      out.push_back(eq_check(r, "axa=a", mul(ax, a), a));
      out.push_back(eq_check(r, "xax=x", mul(xa, x), x));
      out.push_back(eq_check(r, "(ax)*=ax", r.star(ax), ax));
      out.push_back(eq_check(r, "(xa)*=xa", r.star(xa), xa));
      break;
    case InverseKind::Group:
      out.push_back(eq_check(r, "axa=a", mul(ax, a), a));
      out.push_back(eq_check(r, "xax=x", mul(xa, x), x));
      out.push_back(eq_check(r, "ax=xa", ax, xa));
      break;
    case InverseKind::Drazin: {
      out.push_back(eq_check(r, "xax=x", mul(xa, x), x));
      out.push_back(eq_check(r, "ax=xa", ax, xa));
      Element ak = r.pow(a, k);
      out.push_back(eq_check(r, "a^k=a^{k+1}x", ak, mul(mul(ak, a), x)));
      break;
    }
    case InverseKind::Core:
      out.push_back(eq_check(r, "xa^2=a", mul(xa, a), a));
      out.push_back(eq_check(r, "ax^2=x", mul(ax, x), x));
      out.push_back(eq_check(r, "(ax)*=ax", r.star(ax), ax));
      break;
    case InverseKind::DualCore:
      out.push_back(eq_check(r, "a^2x=a", mul(a, ax), a));
      out.push_back(eq_check(r, "x^2a=x", mul(x, xa), x));
      out.push_back(eq_check(r, "(xa)*=xa", r.star(xa), xa));
      break;
    case InverseKind::RightCore:
      out.push_back(eq_check(r, "axa=a", mul(ax, a), a));
      out.push_back(eq_check(r, "x=ax^2", x, mul(ax, x)));
      out.push_back(eq_check(r, "(ax)*=ax", r.star(ax), ax));
      break;
    case InverseKind::LeftCore: {
      out.push_back(eq_check(r, "xa^2=a", mul(xa, a), a));
      Element astar = r.star(a);
      SolveTerm t{r.one(), astar};  // x = s * a*
      out.push_back(membership_check(r, "x in Ra*", x, aux_witnesses, "s",
                                     std::span<const SolveTerm>(&t, 1),
                                     [&](const Element& s) { return mul(s, astar); }));
      break;
    }
    case InverseKind::PseudoCore: {
      Element ak = r.pow(a, k);
      out.push_back(eq_check(r, "xa^{k+1}=a^k", mul(xa, ak), ak));
      out.push_back(eq_check(r, "ax^2=x", mul(ax, x), x));
      out.push_back(eq_check(r, "(ax)*=ax", r.star(ax), ax));
      break;
    }
    case InverseKind::RightPseudoCore: {
      Element ak = r.pow(a, k);
      out.push_back(eq_check(r, "axa^k=a^k", mul(ax, ak), ak));
      out.push_back(eq_check(r, "x=ax^2", x, mul(ax, x)));
      out.push_back(eq_check(r, "(ax)*=ax", r.star(ax), ax));
      break;
    }
    case InverseKind::RightInverse:
      out.push_back(eq_check(r, "ax=1", ax, r.one()));
      break;
    case InverseKind::LeftInverse:
      out.push_back(eq_check(r, "xa=1", xa, r.one()));
      break;
    case InverseKind::BC: {
      const Element& b = aux->b;
      const Element& c = aux->c;
      {
        SolveTerm t{b, x};  // x = b*u*x
        out.push_back(membership_check(r, "x in bRx", x, aux_witnesses, "u",
                                       std::span<const SolveTerm>(&t, 1),
                                       [&](const Element& u) { return mul(mul(b, u), x); }));
      }
      {
        SolveTerm t{x, c};  // x = x*v*c
        out.push_back(membership_check(r, "x in xRc", x, aux_witnesses, "v",
                                       std::span<const SolveTerm>(&t, 1),
                                       [&](const Element& v) { return mul(mul(x, v), c); }));
      }
      out.push_back(eq_check(r, "xab=b", mul(xa, b), b));
      out.push_back(eq_check(r, "cax=c", mul(mul(c, a), x), c));
      break;
    }
    case InverseKind::LeftBC: {
      const Element& b = aux->b;
      const Element& c = aux->c;
      SolveTerm t{r.one(), c};  // x = t*c
      out.push_back(membership_check(r, "x in Rc", x, aux_witnesses, "t",
                                     std::span<const SolveTerm>(&t, 1),
                                     [&](const Element& w) { return mul(w, c); }));
      out.push_back(eq_check(r, "xab=b", mul(xa, b), b));
      break;
    }
    case InverseKind::RightBC: {
      const Element& b = aux->b;
      const Element& c = aux->c;
      SolveTerm t{b, r.one()};  // x = b*s
      out.push_back(membership_check(r, "x in bR", x, aux_witnesses, "s",
                                     std::span<const SolveTerm>(&t, 1),
                                     [&](const Element& s) { return mul(b, s); }));
      out.push_back(eq_check(r, "cax=c", mul(mul(c, a), x), c));
      break;
    }
  }
  return out;
}

bool all_hold(const std::vector<EquationCheck>& eqs) {
  for (const auto& e : eqs)
    if (!e.holds) return false;
  return true;
}

std::string first_failure(const std::vector<EquationCheck>& eqs) {
  for (const auto& e : eqs)
    if (!e.holds) return e.id;
  return {};
}

}  // namespace ginv
