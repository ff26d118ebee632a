#include "ginv/oracle.hpp"

namespace ginv {

using Idx = FiniteTable::Idx;

bool table_satisfies(const FiniteTable& t, InverseKind kind, Idx a, Idx x, int k,
                     std::optional<std::pair<Idx, Idx>> aux) {
  const Idx ax = t.mul(a, x);
  const Idx xa = t.mul(x, a);
  switch (kind) {
    case InverseKind::Inner:
      return t.mul(ax, a) == a;
    case InverseKind::OneThree:
      return t.mul(ax, a) == a && t.star(ax) == ax;
    case InverseKind::OneFour:
      return t.mul(ax, a) == a && t.star(xa) == xa;
    case InverseKind::MP:
      return t.mul(ax, a) == a && t.mul(xa, x) == x && t.star(ax) == ax && t.star(xa) == xa;
    case InverseKind::Group:
      return t.mul(ax, a) == a && t.mul(xa, x) == x && ax == xa;
    case InverseKind::Drazin: {
      if (t.mul(xa, x) != x || ax != xa) return false;
      const Idx ak = t.pow(a, k);
      return ak == t.mul(t.mul(ak, a), x);
    }
    case InverseKind::Core:
      return t.mul(xa, a) == a && t.mul(ax, x) == x && t.star(ax) == ax;
    case InverseKind::DualCore:
      return t.mul(a, ax) == a && t.mul(x, xa) == x && t.star(xa) == xa;
    case InverseKind::RightCore:
      return t.mul(ax, a) == a && t.mul(ax, x) == x && t.star(ax) == ax;
    case InverseKind::LeftCore:
      return t.mul(xa, a) == a && t.in_left_ideal(x, t.star(a));
    case InverseKind::PseudoCore: {
      const Idx ak = t.pow(a, k);
      return t.mul(xa, ak) == ak && t.mul(ax, x) == x && t.star(ax) == ax;
    }
    case InverseKind::RightPseudoCore: {
      const Idx ak = t.pow(a, k);
      return t.mul(ax, ak) == ak && t.mul(ax, x) == x && t.star(ax) == ax;
    }
    case InverseKind::RightInverse:
      return ax == t.one();
    case InverseKind::LeftInverse:
      return xa == t.one();
    case InverseKind::BC: {
      const Idx b = aux->first;
      const Idx c = aux->second;
      if (t.mul(xa, b) != b || t.mul(t.mul(c, a), x) != c) return false;
      // x in bRx and x in xRc
      bool in_brx = false;
      for (std::size_t u = 0; u < t.size() && !in_brx; ++u)
        in_brx = t.mul(t.mul(b, static_cast<Idx>(u)), x) == x;
      if (!in_brx) return false;
      bool in_xrc = false;
      for (std::size_t v = 0; v < t.size() && !in_xrc; ++v)
        in_xrc = t.mul(t.mul(x, static_cast<Idx>(v)), c) == x;
      return in_xrc;
    }
    case InverseKind::LeftBC:
      return t.in_left_ideal(x, aux->second) && t.mul(xa, aux->first) == aux->first;
    case InverseKind::RightBC:
      return t.in_right_ideal(x, aux->first) &&
             t.mul(t.mul(aux->second, a), x) == aux->second;
  }
  return false;
}

namespace {

// Collect membership witnesses so certificate verification is pure replay.
AuxWitnesses capture_aux_witnesses(const FiniteTable& t, InverseKind kind, Idx x,
                                   std::optional<std::pair<Idx, Idx>> aux) {
  AuxWitnesses out;
  auto elem = [&](int i) { return t.element(static_cast<std::size_t>(i)); };
  if (kind == InverseKind::LeftBC) {
    int w = t.solve_left(aux->second, x);
    if (w != FiniteTable::kNone) out.emplace("t", elem(w));
  } else if (kind == InverseKind::RightBC) {
    int w = t.solve_right(aux->first, x);
    if (w != FiniteTable::kNone) out.emplace("s", elem(w));
  } else if (kind == InverseKind::BC) {
    for (std::size_t u = 0; u < t.size(); ++u)
      if (t.mul(t.mul(aux->first, static_cast<Idx>(u)), x) == x) {
        out.emplace("u", elem(static_cast<int>(u)));
        break;
      }
    for (std::size_t v = 0; v < t.size(); ++v)
      if (t.mul(t.mul(x, static_cast<Idx>(v)), aux->second) == x) {
        out.emplace("v", elem(static_cast<int>(v)));
        break;
      }
  }
  return out;
}

}  // namespace

std::optional<Certificate> oracle_search(const Element& a, InverseKind kind,
                                         const std::optional<AuxPair>& aux,
                                         const OracleOptions& opts) {
  RingPtr ring = a.ring_ptr();
  if (!ring->has(Capability::Enumerable))
    throw Error(Errc::Unsupported, ring->id() + " is not enumerable");
  if (opts.k_max < 0) throw Error(Errc::InvalidBound, "k_max must be >= 1");
  int k_max = opts.k_max > 0 ? opts.k_max : ring->default_k_max();
  if (kind_needs_aux(kind) && !aux)
    throw Error(Errc::InvalidElement, "(b,c) pair required for this kind");

  auto table = FiniteTable::cached(ring);
  const FiniteTable& t = *table;
  const Idx ai = static_cast<Idx>(t.index_of(a));
  std::optional<std::pair<Idx, Idx>> aux_idx;
  if (aux)
    aux_idx = std::make_pair(static_cast<Idx>(t.index_of(aux->b)),
                             static_cast<Idx>(t.index_of(aux->c)));

  int k_lo = 0, k_hi = 0;
  if (kind == InverseKind::Drazin) {
    k_lo = 0;
    k_hi = k_max;
  } else if (kind == InverseKind::PseudoCore || kind == InverseKind::RightPseudoCore) {
    k_lo = 1;
    k_hi = k_max;
  }

  for (int k = k_lo; k <= k_hi; ++k) {
    std::size_t hit = par::find_first_index(
        t.size(),
        [&](std::size_t x) { return table_satisfies(t, kind, ai, static_cast<Idx>(x), k, aux_idx); },
        opts.mode);
    if (hit == par::kNotFound) continue;

    Certificate cert;
    cert.kind = kind;
    cert.input = a;
    cert.witness = t.element(hit);
    cert.index_k = k;
    cert.construction_route = "oracle";
    if (aux) cert.aux = aux;
    if (kind == InverseKind::LeftCore) {
      int s = t.solve_left(t.star(ai), static_cast<Idx>(hit));
      if (s != FiniteTable::kNone) cert.aux_witnesses.emplace("s", t.element(s));
    } else {
      auto aw = capture_aux_witnesses(t, kind, static_cast<Idx>(hit), aux_idx);
      cert.aux_witnesses.insert(aw.begin(), aw.end());
    }
    cert.equations =
        check_equations(kind, a, cert.witness, k, cert.aux, cert.aux_witnesses);
    if (!cert.verified())
      throw Error(Errc::InternalInconsistency,
                  "table search and equation replay disagree for " +
                      std::string(kind_name(kind)));
    return cert;
  }
  return std::nullopt;
}

std::vector<Idx> all_witness_indices(const FiniteTable& t, Idx a, InverseKind kind, int k,
                                     std::optional<std::pair<Idx, Idx>> aux,
                                     par::ExecMode mode) {
  auto hits = par::collect_indices(
      t.size(), [&](std::size_t x) { return table_satisfies(t, kind, a, static_cast<Idx>(x), k, aux); },
      mode);
  std::vector<Idx> out;
  out.reserve(hits.size());
  for (std::size_t h : hits) out.push_back(static_cast<Idx>(h));
  return out;
}

std::vector<Element> left_annihilator(const Element& a, par::ExecMode mode) {
  RingPtr ring = a.ring_ptr();
  if (!ring->has(Capability::Enumerable))
    throw Error(Errc::Unsupported, ring->id() + " is not enumerable");
  auto table = FiniteTable::cached(ring);
  const FiniteTable& t = *table;
  const Idx ai = static_cast<Idx>(t.index_of(a));
  auto hits = par::collect_indices(
      t.size(), [&](std::size_t x) { return t.mul(static_cast<Idx>(x), ai) == t.zero(); }, mode);
  std::vector<Element> out;
  out.reserve(hits.size());
  for (std::size_t h : hits) out.push_back(t.element(h));
  return out;
}

bool dedekind_finiteness_audit(const RingPtr& ring, par::ExecMode mode) {
  auto table = FiniteTable::cached(ring);
  const FiniteTable& t = *table;
  std::size_t bad = par::find_first_index(
      t.size(),
      [&](std::size_t a) {
        for (std::size_t x = 0; x < t.size(); ++x)
          if (t.mul(static_cast<Idx>(a), static_cast<Idx>(x)) == t.one() &&
              t.mul(static_cast<Idx>(x), static_cast<Idx>(a)) != t.one())
            return true;
        return false;
      },
      mode);
  return bad == par::kNotFound;
}

}  // namespace ginv
