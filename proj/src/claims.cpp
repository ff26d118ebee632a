#include "ginv/claims.hpp"

#include <random>

#include "ginv/oracle.hpp"

namespace ginv {

namespace {

using Tb = FiniteTable;
using I = Tb::Idx;

constexpr int kPowerBound = 4;  // documented bound for "any n >= 2 / any k >= 1"

template <class Pred>
bool exists_x(const Tb& t, Pred&& pred) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (pred(static_cast<I>(x))) return true;
  return false;
}

bool rc_witness(const Tb& t, I a, I x) { return table_satisfies(t, InverseKind::RightCore, a, x); }
bool rci(const Tb& t, I a) { return exists_x(t, [&](I x) { return rc_witness(t, a, x); }); }

int first_rc_witness(const Tb& t, I a) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (rc_witness(t, a, static_cast<I>(x))) return static_cast<int>(x);
  return Tb::kNone;
}

bool is13(const Tb& t, I a) {
  return exists_x(t, [&](I x) { return table_satisfies(t, InverseKind::OneThree, a, x); });
}

bool right_invertible(const Tb& t, I u) { return t.right_inverse(u) != Tb::kNone; }

// unique witness searches (kNone when absent)
int unique_witness(const Tb& t, InverseKind kind, I a, int k = 0) {
  for (std::size_t x = 0; x < t.size(); ++x)
    if (table_satisfies(t, kind, a, static_cast<I>(x), k)) return static_cast<int>(x);
  return Tb::kNone;
}

int drazin_index(const Tb& t, I a) {
  for (int k = 0; k <= kPowerBound; ++k)
    if (unique_witness(t, InverseKind::Drazin, a, k) != Tb::kNone) return k;
  return -1;
}

int pseudo_core_index(const Tb& t, I a) {
  for (int k = 1; k <= kPowerBound; ++k)
    if (unique_witness(t, InverseKind::PseudoCore, a, k) != Tb::kNone) return k;
  return -1;
}

// right (a,a*)-invertibility of g with the pair fixed to (a, a*):
// exists s with a* g (a s) = a*
bool right_aastar_invertible(const Tb& t, I a, I g) {
  I astar = t.star(a);
  return exists_x(t, [&](I s) {
    return t.mul(t.mul(astar, g), t.mul(a, s)) == astar;
  });
}

// left (a,a*)-invertibility of g: exists s with (s a*) g a = a
bool left_aastar_invertible(const Tb& t, I a, I g) {
  I astar = t.star(a);
  return exists_x(t, [&](I s) {
    return t.mul(t.mul(t.mul(s, astar), g), a) == a;
  });
}

// counts projections p with pa = 0 and extra(p) true
int count_annihilating_projections(const Tb& t, I a,
                                   const std::function<bool(I)>& extra) {
  int count = 0;
  for (I p : t.projections())
    if (t.mul(p, a) == t.zero() && extra(p)) ++count;
  return count;
}

Condition cond(std::string id,
               std::function<bool(const Tb&, std::span<const I>)> eval) {
  return Condition{std::move(id), std::move(eval)};
}

std::vector<Claim> build_registry() {
  std::vector<Claim> reg;

  // ---- Lemma 2.1: right (a,a*)-invertible iff the three-equation system ----
  {
    Claim c;
    c.id = "Lemma2.1";
    c.statement = "right (a,a*)-invertibility matches the axa=a, x=ax^2, (ax)*=ax system";
    c.equivalent.push_back(cond("right-(a,a*)-invertible", [](const Tb& t, std::span<const I> e) {
      return right_aastar_invertible(t, e[0], e[0]);
    }));
    c.equivalent.push_back(cond("three-equation witness", [](const Tb& t, std::span<const I> e) {
      return rci(t, e[0]);
    }));
    reg.push_back(std::move(c));
  }

  // ---- Remark 2.2: ax is invariant over witnesses; 1-ax annihilates a ----
  {
    Claim c;
    c.id = "Remark2.2";
    c.statement = "all right core witnesses share ax, and 1-ax is a projection killing a";
    c.always.push_back(cond("ax invariant and spectral projection", [](const Tb& t,
                                                                       std::span<const I> e) {
      I a = e[0];
      int w0 = Tb::kNone;
      for (std::size_t x = 0; x < t.size(); ++x) {
        if (!rc_witness(t, a, static_cast<I>(x))) continue;
        if (w0 == Tb::kNone) {
          w0 = static_cast<int>(x);
          continue;
        }
        if (t.mul(a, static_cast<I>(x)) != t.mul(a, static_cast<I>(w0))) return false;
      }
      if (w0 == Tb::kNone) return true;  // vacuous
      I p = t.sub(t.one(), t.mul(a, static_cast<I>(w0)));
      return t.mul(p, p) == p && t.star(p) == p && t.mul(p, a) == t.zero();
    }));
    reg.push_back(std::move(c));
  }

  // ---- Cor 2.3: commuting right core witness makes a EP with x = a# = a+ ----
  {
    Claim c;
    c.id = "Cor2.3";
    c.statement = "a right core witness commuting with a is the group and MP inverse (EP)";
    c.always.push_back(cond("commuting witness is EP inverse", [](const Tb& t,
                                                                  std::span<const I> e) {
      I a = e[0];
      for (std::size_t x = 0; x < t.size(); ++x) {
        I xi = static_cast<I>(x);
        if (!rc_witness(t, a, xi) || t.mul(a, xi) != t.mul(xi, a)) continue;
        int mp = unique_witness(t, InverseKind::MP, a);
        int grp = unique_witness(t, InverseKind::Group, a);
        if (mp == Tb::kNone || grp == Tb::kNone) return false;
        if (mp != grp || static_cast<int>(x) != mp) return false;
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Cor 2.4: powered symmetry variants of the right core system ----
  {
    Claim c;
    c.id = "Cor2.4";
    c.statement = "a^{k+1}x^{k+1}a=a with x=ax^2 and symmetric a^{k+1}x^{k+1} characterizes rci";
    c.equivalent.push_back(cond("right core invertible", [](const Tb& t, std::span<const I> e) {
      return rci(t, e[0]);
    }));
    for (int k = 1; k <= 3; ++k) {
      c.equivalent.push_back(cond("powered system k=" + std::to_string(k),
                                  [k](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    return exists_x(t, [&](I x) {
                                      if (t.mul(t.mul(a, x), x) != x) return false;
                                      I ak1 = t.pow(a, k + 1);
                                      I xk1 = t.pow(x, k + 1);
                                      I m = t.mul(ak1, xk1);
                                      return t.mul(m, a) == a && t.star(m) == m;
                                    });
                                  }));
    }
    reg.push_back(std::move(c));
  }

  // ---- Thm 2.5: unique annihilating projection with p + a right invertible ----
  {
    Claim c;
    c.id = "Thm2.5";
    c.statement = "rci iff a unique projection p has pa=0 and p+a (or a(1-p)+p) right invertible";
    c.equivalent.push_back(cond("right core invertible", [](const Tb& t, std::span<const I> e) {
      return rci(t, e[0]);
    }));
    c.equivalent.push_back(cond("unique p: p+a right invertible", [](const Tb& t,
                                                                     std::span<const I> e) {
      I a = e[0];
      return count_annihilating_projections(
                 t, a, [&](I p) { return right_invertible(t, t.add(p, a)); }) == 1;
    }));
    c.equivalent.push_back(cond("unique p: a(1-p)+p right invertible", [](const Tb& t,
                                                                          std::span<const I> e) {
      I a = e[0];
      return count_annihilating_projections(t, a, [&](I p) {
               I w = t.add(t.mul(a, t.sub(t.one(), p)), p);
               return right_invertible(t, w);
             }) == 1;
    }));
    c.always.push_back(cond("u_r^{-1}(1-p) and (1-p)w_r^{-1} are witnesses", [](const Tb& t,
                                                                                std::span<const I>
                                                                                    e) {
      I a = e[0];
      for (I p : t.projections()) {
        if (t.mul(p, a) != t.zero()) continue;
        I q = t.sub(t.one(), p);
        I u = t.add(p, a);
        I w = t.add(t.mul(a, q), p);
        for (std::size_t v = 0; v < t.size(); ++v) {
          I vi = static_cast<I>(v);
          if (t.mul(u, vi) == t.one() && !rc_witness(t, a, t.mul(vi, q))) return false;
          if (t.mul(w, vi) == t.one() && !rc_witness(t, a, t.mul(q, vi))) return false;
        }
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Lemma 2.6: 1+ab right invertible iff 1+ba right invertible ----
  {
    Claim c;
    c.id = "Lemma2.6";
    c.statement = "1+ab is right invertible iff 1+ba is";
    c.arity = 2;
    c.equivalent.push_back(cond("1+ab right invertible", [](const Tb& t, std::span<const I> e) {
      return right_invertible(t, t.add(t.one(), t.mul(e[0], e[1])));
    }));
    c.equivalent.push_back(cond("1+ba right invertible", [](const Tb& t, std::span<const I> e) {
      return right_invertible(t, t.add(t.one(), t.mul(e[1], e[0])));
    }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 2.7: powers in the projection/unit characterization ----
  {
    Claim c;
    c.id = "Thm2.7";
    c.statement = "rci iff unique p with pa=0 and p+a^n right invertible, n >= 2";
    c.equivalent.push_back(cond("right core invertible", [](const Tb& t, std::span<const I> e) {
      return rci(t, e[0]);
    }));
    for (int n = 2; n <= kPowerBound; ++n) {
      c.equivalent.push_back(cond("unique p: p+a^" + std::to_string(n) + " right invertible",
                                  [n](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    I an = t.pow(a, n);
                                    return count_annihilating_projections(t, a, [&](I p) {
                                             return right_invertible(t, t.add(p, an));
                                           }) == 1;
                                  }));
      c.equivalent.push_back(cond("unique p: a^" + std::to_string(n) + "(1-p)+p right invertible",
                                  [n](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    I an = t.pow(a, n);
                                    return count_annihilating_projections(t, a, [&](I p) {
                                             I w = t.add(t.mul(an, t.sub(t.one(), p)), p);
                                             return right_invertible(t, w);
                                           }) == 1;
                                  }));
    }
    c.always.push_back(cond("a^{n-1}(p+a^n)_r^{-1} is a witness", [](const Tb& t,
                                                                     std::span<const I> e) {
      I a = e[0];
      for (int n = 2; n <= kPowerBound; ++n) {
        I an = t.pow(a, n);
        I an1 = t.pow(a, n - 1);
        for (I p : t.projections()) {
          if (t.mul(p, a) != t.zero()) continue;
          I q = t.sub(t.one(), p);
          I u = t.add(p, an);
          I w = t.add(t.mul(an, q), p);
          for (std::size_t v = 0; v < t.size(); ++v) {
            I vi = static_cast<I>(v);
            if (t.mul(u, vi) == t.one() && !rc_witness(t, a, t.mul(an1, vi))) return false;
            if (t.mul(w, vi) == t.one() &&
                !rc_witness(t, a, t.mul(an1, t.mul(q, vi))))
              return false;
          }
        }
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Prop 2.8: equal spectral idempotents, pairs of rci elements ----
  {
    Claim c;
    c.id = "Prop2.8";
    c.statement = "a a_r = b b_r iff aR = bR iff a^pi-b conditions; then (ab)_r = b_r a_r";
    c.arity = 2;
    c.guard = [](const Tb& t, std::span<const I> e) { return rci(t, e[0]) && rci(t, e[1]); };
    c.equivalent.push_back(cond("a x_a = b x_b", [](const Tb& t, std::span<const I> e) {
      I xa = static_cast<I>(first_rc_witness(t, e[0]));
      I xb = static_cast<I>(first_rc_witness(t, e[1]));
      return t.mul(e[0], xa) == t.mul(e[1], xb);
    }));
    c.equivalent.push_back(cond("aR = bR", [](const Tb& t, std::span<const I> e) {
      return t.right_ideal_eq(e[0], e[1]);
    }));
    c.equivalent.push_back(cond("a^pi b = 0 and a^pi + b right invertible",
                                [](const Tb& t, std::span<const I> e) {
                                  I xa = static_cast<I>(first_rc_witness(t, e[0]));
                                  I api = t.sub(t.one(), t.mul(e[0], xa));
                                  return t.mul(api, e[1]) == t.zero() &&
                                         right_invertible(t, t.add(api, e[1]));
                                }));
    c.equivalent.push_back(cond("a^pi b = 0 and a^pi + b(1-a^pi) right invertible",
                                [](const Tb& t, std::span<const I> e) {
                                  I xa = static_cast<I>(first_rc_witness(t, e[0]));
                                  I api = t.sub(t.one(), t.mul(e[0], xa));
                                  I w = t.add(api, t.mul(e[1], t.sub(t.one(), api)));
                                  return t.mul(api, e[1]) == t.zero() && right_invertible(t, w);
                                }));
    c.always.push_back(cond("x_b x_a right-core-inverts ab when idempotents match",
                            [](const Tb& t, std::span<const I> e) {
                              I a = e[0], b = e[1];
                              I xa0 = static_cast<I>(first_rc_witness(t, a));
                              I xb0 = static_cast<I>(first_rc_witness(t, b));
                              if (t.mul(a, xa0) != t.mul(b, xb0)) return true;  // vacuous
                              I ab = t.mul(a, b);
                              for (std::size_t xa = 0; xa < t.size(); ++xa) {
                                if (!rc_witness(t, a, static_cast<I>(xa))) continue;
                                for (std::size_t xb = 0; xb < t.size(); ++xb) {
                                  if (!rc_witness(t, b, static_cast<I>(xb))) continue;
                                  if (!rc_witness(t, ab,
                                                  t.mul(static_cast<I>(xb), static_cast<I>(xa))))
                                    return false;
                                }
                              }
                              return true;
                            }));
    reg.push_back(std::move(c));
  }

  // ---- Prop 2.9: ordered ideals reverse-order law ----
  {
    Claim c;
    c.id = "Prop2.9";
    c.statement = "a = ab b_r and b = a a_r b iff a*R <= bR <= aR; then (ab)_r = b_r a_r";
    c.arity = 2;
    c.guard = [](const Tb& t, std::span<const I> e) { return rci(t, e[0]) && rci(t, e[1]); };
    c.equivalent.push_back(cond("a = ab x_b and b = a x_a b", [](const Tb& t,
                                                                 std::span<const I> e) {
      I a = e[0], b = e[1];
      I xa = static_cast<I>(first_rc_witness(t, a));
      I xb = static_cast<I>(first_rc_witness(t, b));
      return t.mul(a, t.mul(b, xb)) == a && t.mul(t.mul(a, xa), b) == b;
    }));
    c.equivalent.push_back(cond("a*R <= bR <= aR", [](const Tb& t, std::span<const I> e) {
      return t.in_right_ideal(t.star(e[0]), e[1]) && t.in_right_ideal(e[1], e[0]);
    }));
    c.always.push_back(cond("x_b x_a right-core-inverts ab under the order hypothesis",
                            [](const Tb& t, std::span<const I> e) {
                              I a = e[0], b = e[1];
                              I xa0 = static_cast<I>(first_rc_witness(t, a));
                              I xb0 = static_cast<I>(first_rc_witness(t, b));
                              bool hyp = t.mul(a, t.mul(b, xb0)) == a &&
                                         t.mul(t.mul(a, xa0), b) == b;
                              if (!hyp) return true;
                              I ab = t.mul(a, b);
                              for (std::size_t xa = 0; xa < t.size(); ++xa) {
                                if (!rc_witness(t, a, static_cast<I>(xa))) continue;
                                for (std::size_t xb = 0; xb < t.size(); ++xb) {
                                  if (!rc_witness(t, b, static_cast<I>(xb))) continue;
                                  if (!rc_witness(t, ab,
                                                  t.mul(static_cast<I>(xb), static_cast<I>(xa))))
                                    return false;
                                }
                              }
                              return true;
                            }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 2.10: row-form matrix representation at q = ax ----
  {
    Claim c;
    c.id = "Thm2.10";
    c.statement = "witness pairs match the row-form block shape at q = ax, and conversely";
    c.always.push_back(cond("every witness yields the block identities", [](const Tb& t,
                                                                            std::span<const I> e) {
      I a = e[0];
      for (std::size_t x = 0; x < t.size(); ++x) {
        I xi = static_cast<I>(x);
        if (!rc_witness(t, a, xi)) continue;
        I q = t.mul(a, xi);
        I qc = t.sub(t.one(), q);
        if (t.mul(q, a) != a || t.mul(q, xi) != xi) return false;
        I a1 = t.mul(t.mul(q, a), q);
        I x1 = t.mul(t.mul(q, xi), q);
        I x2 = t.mul(t.mul(q, xi), qc);
        if (t.mul(a1, x1) != q || t.mul(a1, x2) != t.zero()) return false;
      }
      return true;
    }));
    c.always.push_back(cond("block shape conversely certifies the witness", [](const Tb& t,
                                                                               std::span<const I>
                                                                                   e) {
      I a = e[0];
      for (I q : t.projections()) {
        if (t.mul(q, a) != a) continue;  // need (1-q)a = 0
        I qc = t.sub(t.one(), q);
        I a1 = t.mul(t.mul(q, a), q);
        for (std::size_t x = 0; x < t.size(); ++x) {
          I xi = static_cast<I>(x);
          if (t.mul(q, xi) != xi) continue;  // need (1-q)x = 0
          I x1 = t.mul(t.mul(q, xi), q);
          I x2 = t.mul(t.mul(q, xi), qc);
          if (t.mul(a1, x1) != q || t.mul(a1, x2) != t.zero()) continue;
          if (!rc_witness(t, a, xi)) return false;
        }
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 2.11: core-nilpotent style decomposition a = a^2 x + a(1-ax) ----
  {
    Claim c;
    c.id = "Thm2.11";
    c.statement = "a = a1 + a2 with a2^2 = 0, a1 a2* = 0 = a2 a1, a1 rci via xax and x";
    c.always.push_back(cond("decomposition laws for every witness", [](const Tb& t,
                                                                       std::span<const I> e) {
      I a = e[0];
      for (std::size_t x = 0; x < t.size(); ++x) {
        I xi = static_cast<I>(x);
        if (!rc_witness(t, a, xi)) continue;
        I a1 = t.mul(t.mul(a, a), xi);
        I a2 = t.sub(a, a1);
        if (t.mul(a2, a2) != t.zero()) return false;
        if (t.mul(a1, t.star(a2)) != t.zero()) return false;
        if (t.mul(a2, a1) != t.zero()) return false;
        I y = t.mul(t.mul(xi, a), xi);
        if (!rc_witness(t, a1, y)) return false;
        if (!rc_witness(t, a1, xi)) return false;
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 3.1: {1,3} + ideal-chain characterizations, with power formulas ----
  {
    Claim c;
    c.id = "Thm3.1";
    c.statement = "rci iff a in R{1,3} with aR = a^nR; powers of witnesses transfer";
    c.equivalent.push_back(cond("right core invertible", [](const Tb& t, std::span<const I> e) {
      return rci(t, e[0]);
    }));
    c.equivalent.push_back(cond("{1,3} and aR = a^2R", [](const Tb& t, std::span<const I> e) {
      return is13(t, e[0]) && t.right_ideal_eq(e[0], t.pow(e[0], 2));
    }));
    c.equivalent.push_back(cond("{1,3} and aR = a^nR for all n", [](const Tb& t,
                                                                    std::span<const I> e) {
      if (!is13(t, e[0])) return false;
      for (int n = 2; n <= kPowerBound; ++n)
        if (!t.right_ideal_eq(e[0], t.pow(e[0], n))) return false;
      return true;
    }));
    c.equivalent.push_back(cond("{1,3} and aR = a^nR for some n", [](const Tb& t,
                                                                     std::span<const I> e) {
      if (!is13(t, e[0])) return false;
      for (int n = 2; n <= kPowerBound; ++n)
        if (t.right_ideal_eq(e[0], t.pow(e[0], n))) return true;
      return false;
    }));
    c.equivalent.push_back(cond("a^n rci and aR = a^nR for all n", [](const Tb& t,
                                                                      std::span<const I> e) {
      for (int n = 2; n <= kPowerBound; ++n)
        if (!rci(t, t.pow(e[0], n)) || !t.right_ideal_eq(e[0], t.pow(e[0], n))) return false;
      return true;
    }));
    c.equivalent.push_back(cond("a^n rci and aR = a^nR for some n", [](const Tb& t,
                                                                       std::span<const I> e) {
      for (int n = 2; n <= kPowerBound; ++n)
        if (rci(t, t.pow(e[0], n)) && t.right_ideal_eq(e[0], t.pow(e[0], n))) return true;
      return false;
    }));
    c.equivalent.push_back(cond("a^n in R{1,3} and aR = a^kR for all n >= 2, k > n",
                                [](const Tb& t, std::span<const I> e) {
                                  for (int n = 2; n <= kPowerBound; ++n)
                                    for (int k = n + 1; k <= kPowerBound; ++k)
                                      if (!is13(t, t.pow(e[0], n)) ||
                                          !t.right_ideal_eq(e[0], t.pow(e[0], k)))
                                        return false;
                                  return true;
                                }));
    c.equivalent.push_back(cond("a^n in R{1,3} and aR = a^kR for some n >= 2, k > n",
                                [](const Tb& t, std::span<const I> e) {
                                  for (int n = 2; n <= kPowerBound; ++n)
                                    for (int k = n + 1; k <= kPowerBound; ++k)
                                      if (is13(t, t.pow(e[0], n)) &&
                                          t.right_ideal_eq(e[0], t.pow(e[0], k)))
                                        return true;
                                  return false;
                                }));
    c.always.push_back(cond("witness powers: x^n inverts a^n, a^{n-1}w inverts a",
                            [](const Tb& t, std::span<const I> e) {
                              I a = e[0];
                              if (!rci(t, a)) return true;
                              for (int n = 2; n <= 3; ++n) {
                                I an = t.pow(a, n);
                                I an1 = t.pow(a, n - 1);
                                for (std::size_t x = 0; x < t.size(); ++x) {
                                  I xi = static_cast<I>(x);
                                  if (rc_witness(t, a, xi) && !rc_witness(t, an, t.pow(xi, n)))
                                    return false;
                                  if (rc_witness(t, an, xi) && !rc_witness(t, a, t.mul(an1, xi)))
                                    return false;
                                }
                              }
                              return true;
                            }));
    reg.push_back(std::move(c));
  }

  // ---- Remark 3.2: {1,3}-invertible iff Ra = R a*a, witness t* ----
  {
    Claim c;
    c.id = "Remark3.2";
    c.statement = "a in R{1,3} iff Ra = Ra*a; each solution of a = t a*a gives t* as 13-inverse";
    c.equivalent.push_back(cond("{1,3}-invertible", [](const Tb& t, std::span<const I> e) {
      return is13(t, e[0]);
    }));
    c.equivalent.push_back(cond("Ra = Ra*a", [](const Tb& t, std::span<const I> e) {
      return t.left_ideal_eq(e[0], t.mul(t.star(e[0]), e[0]));
    }));
    c.always.push_back(cond("t* is a {1,3}-inverse whenever a = t a*a", [](const Tb& t,
                                                                           std::span<const I> e) {
      I a = e[0];
      I asa = t.mul(t.star(a), a);
      for (std::size_t s = 0; s < t.size(); ++s) {
        I si = static_cast<I>(s);
        if (t.mul(si, asa) != a) continue;
        if (!table_satisfies(t, InverseKind::OneThree, a, t.star(si))) return false;
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Cor 3.3: membership chains with starred powers ----
  {
    Claim c;
    c.id = "Cor3.3";
    c.statement = "rci iff Ra = Ra*a with aR = a^nR iff Ra = R(a*)^n a";
    c.equivalent.push_back(cond("right core invertible", [](const Tb& t, std::span<const I> e) {
      return rci(t, e[0]);
    }));
    for (int n = 2; n <= 3; ++n) {
      c.equivalent.push_back(cond("Ra = Ra*a and aR = a^" + std::to_string(n) + "R",
                                  [n](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    return t.left_ideal_eq(a, t.mul(t.star(a), a)) &&
                                           t.right_ideal_eq(a, t.pow(a, n));
                                  }));
      c.equivalent.push_back(cond("Ra = R(a*)^" + std::to_string(n) + " a",
                                  [n](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    I m = t.mul(t.pow(t.star(a), n), a);
                                    return t.left_ideal_eq(a, m);
                                  }));
      c.equivalent.push_back(cond("Ra^n = R(a*)^n a^n and aR = a^{n+1}R (n=" +
                                      std::to_string(n) + ")",
                                  [n](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    I an = t.pow(a, n);
                                    I m = t.mul(t.pow(t.star(a), n), an);
                                    return t.left_ideal_eq(an, m) &&
                                           t.right_ideal_eq(a, t.pow(a, n + 1));
                                  }));
    }
    reg.push_back(std::move(c));
  }

  // ---- Cor 3.4: right (a,a*)-invertibility of a is left (a,a*)-invertibility of a* ----
  {
    Claim c;
    c.id = "Cor3.4";
    c.statement = "a right (a,a*)-invertible iff a* left (a,a*)-invertible";
    c.equivalent.push_back(cond("a right (a,a*)-invertible", [](const Tb& t,
                                                                std::span<const I> e) {
      return right_aastar_invertible(t, e[0], e[0]);
    }));
    c.equivalent.push_back(cond("a* left (a,a*)-invertible", [](const Tb& t,
                                                                std::span<const I> e) {
      return left_aastar_invertible(t, e[0], t.star(e[0]));
    }));
    reg.push_back(std::move(c));
  }

  // ---- Remark 3.5: powers inside the (a,a*) pair ----
  {
    Claim c;
    c.id = "Remark3.5";
    c.statement = "right (a,a*)-invertibility transfers between a and a^n, dually on the left";
    c.equivalent.push_back(cond("a right (a,a*)-invertible", [](const Tb& t,
                                                                std::span<const I> e) {
      return right_aastar_invertible(t, e[0], e[0]);
    }));
    for (int n = 2; n <= kPowerBound; ++n)
      c.equivalent.push_back(cond("a^" + std::to_string(n) + " right (a,a*)-invertible",
                                  [n](const Tb& t, std::span<const I> e) {
                                    return right_aastar_invertible(t, e[0], t.pow(e[0], n));
                                  }));
    c.equivalent.push_back(cond("a* left (a,a*)-invertible", [](const Tb& t,
                                                                std::span<const I> e) {
      return left_aastar_invertible(t, e[0], t.star(e[0]));
    }));
    for (int n = 2; n <= kPowerBound; ++n)
      c.equivalent.push_back(cond("(a*)^" + std::to_string(n) + " left (a,a*)-invertible",
                                  [n](const Tb& t, std::span<const I> e) {
                                    return left_aastar_invertible(t, e[0],
                                                                  t.pow(t.star(e[0]), n));
                                  }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 4.1: core invertibility from powered symmetry hypotheses ----
  {
    Claim c;
    c.id = "Thm4.1";
    c.statement = "xa^2=a, x^k=ax^{k+1} with symmetric a^kx^k (or ax) characterize core";
    c.equivalent.push_back(cond("core invertible", [](const Tb& t, std::span<const I> e) {
      return unique_witness(t, InverseKind::Core, e[0]) != Tb::kNone;
    }));
    for (int k = 1; k <= 3; ++k) {
      c.equivalent.push_back(cond("power-symmetric system k=" + std::to_string(k),
                                  [k](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    return exists_x(t, [&](I x) {
                                      if (t.mul(t.mul(x, a), a) != a) return false;
                                      if (t.pow(x, k) != t.mul(a, t.pow(x, k + 1))) return false;
                                      I m = t.mul(t.pow(a, k), t.pow(x, k));
                                      return t.star(m) == m;
                                    });
                                  }));
      c.equivalent.push_back(cond("ax-symmetric system k=" + std::to_string(k),
                                  [k](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    return exists_x(t, [&](I x) {
                                      if (t.mul(t.mul(x, a), a) != a) return false;
                                      if (t.pow(x, k) != t.mul(a, t.pow(x, k + 1))) return false;
                                      I ax = t.mul(a, x);
                                      return t.star(ax) == ax;
                                    });
                                  }));
    }
    c.always.push_back(cond("a^{k-1}x^k and xax rebuild the core inverse", [](const Tb& t,
                                                                              std::span<const I>
                                                                                  e) {
      I a = e[0];
      int core = unique_witness(t, InverseKind::Core, a);
      for (int k = 1; k <= 3; ++k) {
        for (std::size_t x = 0; x < t.size(); ++x) {
          I xi = static_cast<I>(x);
          if (t.mul(t.mul(xi, a), a) != a) continue;
          if (t.pow(xi, k) != t.mul(a, t.pow(xi, k + 1))) continue;
          I m = t.mul(t.pow(a, k), t.pow(xi, k));
          if (t.star(m) == m) {
            if (core == Tb::kNone) return false;
            if (t.mul(t.pow(a, k - 1), t.pow(xi, k)) != static_cast<I>(core)) return false;
          }
          I ax = t.mul(a, xi);
          if (t.star(ax) == ax) {
            if (core == Tb::kNone) return false;
            if (t.mul(t.mul(xi, a), xi) != static_cast<I>(core)) return false;
          }
        }
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Prop 4.2: witness systems that pin down the core inverse ----
  {
    Claim c;
    c.id = "Prop4.2";
    c.statement = "two powered systems accept exactly the core inverse";
    c.arity = 2;  // tuple = (a, x)
    c.equivalent.push_back(cond("x is the core inverse of a", [](const Tb& t,
                                                                 std::span<const I> e) {
      int core = unique_witness(t, InverseKind::Core, e[0]);
      return core != Tb::kNone && static_cast<I>(core) == e[1];
    }));
    for (int k = 1; k <= 3; ++k) {
      c.equivalent.push_back(cond("system (ii) k=" + std::to_string(k),
                                  [k](const Tb& t, std::span<const I> e) {
                                    I a = e[0], x = e[1];
                                    I ax = t.mul(a, x);
                                    return t.mul(t.mul(x, a), a) == a &&
                                           t.mul(t.mul(x, a), x) == x && t.star(ax) == ax &&
                                           t.pow(x, k) == t.mul(a, t.pow(x, k + 1));
                                  }));
      c.equivalent.push_back(cond("system (iii) k=" + std::to_string(k),
                                  [k](const Tb& t, std::span<const I> e) {
                                    I a = e[0], x = e[1];
                                    if (t.mul(t.mul(x, a), a) != a) return false;
                                    I ak1 = t.pow(a, k + 1);
                                    I xk = t.pow(x, k);
                                    if (t.mul(t.mul(t.pow(x, k + 1), ak1), x) != x) return false;
                                    I m = t.mul(t.mul(xk, ak1), x);
                                    if (t.star(m) != m) return false;
                                    return xk == t.mul(t.mul(xk, ak1), t.pow(x, k + 1));
                                  }));
    }
    reg.push_back(std::move(c));
  }

  // ---- Thm 4.3: (xa)* = xa variants give EP ----
  {
    Claim c;
    c.id = "Thm4.3";
    c.statement = "xa^2=a, (xa)*=xa, x^k=ax^{k+1} solvable iff a is EP; a# = x^2 a";
    c.equivalent.push_back(cond("EP (a+ exists, a# exists, equal)", [](const Tb& t,
                                                                       std::span<const I> e) {
      int mp = unique_witness(t, InverseKind::MP, e[0]);
      int grp = unique_witness(t, InverseKind::Group, e[0]);
      return mp != Tb::kNone && grp != Tb::kNone && mp == grp;
    }));
    for (int k = 1; k <= 3; ++k) {
      c.equivalent.push_back(cond("system (ii) k=" + std::to_string(k),
                                  [k](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    return exists_x(t, [&](I x) {
                                      I xa = t.mul(x, a);
                                      return t.mul(xa, a) == a && t.star(xa) == xa &&
                                             t.pow(x, k) == t.mul(a, t.pow(x, k + 1));
                                    });
                                  }));
      c.equivalent.push_back(cond("system (iii) k=" + std::to_string(k),
                                  [k](const Tb& t, std::span<const I> e) {
                                    I a = e[0];
                                    return exists_x(t, [&](I x) {
                                      if (t.mul(t.mul(x, a), a) != a) return false;
                                      I m = t.mul(t.pow(x, k + 1), t.pow(a, k + 1));
                                      if (t.star(m) != m) return false;
                                      return t.pow(x, k) ==
                                             t.mul(t.mul(t.pow(x, k), t.pow(a, k + 1)),
                                                   t.pow(x, k + 1));
                                    });
                                  }));
    }
    c.always.push_back(cond("x^2 a is the group inverse for system (ii) witnesses",
                            [](const Tb& t, std::span<const I> e) {
                              I a = e[0];
                              int grp = unique_witness(t, InverseKind::Group, a);
                              for (int k = 1; k <= 3; ++k)
                                for (std::size_t x = 0; x < t.size(); ++x) {
                                  I xi = static_cast<I>(x);
                                  I xa = t.mul(xi, a);
                                  if (t.mul(xa, a) != a || t.star(xa) != xa) continue;
                                  if (t.pow(xi, k) != t.mul(a, t.pow(xi, k + 1))) continue;
                                  if (grp == Tb::kNone) return false;
                                  if (t.mul(t.mul(xi, xi), a) != static_cast<I>(grp))
                                    return false;
                                }
                              return true;
                            }));
    reg.push_back(std::move(c));
  }

  // ---- Lemma 4.6: pseudo core index matches Drazin index with a^k in R{1,3} ----
  {
    Claim c;
    c.id = "Lemma4.6";
    c.statement = "pc index = k iff ind(a) = k and a^k {1,3}; inverse is a^D a^k (a^k)^{(1,3)}";
    c.always.push_back(cond("index biconditional for k = 1..3", [](const Tb& t,
                                                                   std::span<const I> e) {
      I a = e[0];
      int pc = pseudo_core_index(t, a);
      int dz = drazin_index(t, a);
      for (int k = 1; k <= 3; ++k) {
        bool lhs = pc == k;
        bool rhs = dz == k && is13(t, t.pow(a, k));
        if (k == 1) rhs = (dz <= 1 && dz >= 0) && is13(t, a);  // ind 0 collapses into k = 1
        if (lhs != rhs) return false;
      }
      return true;
    }));
    c.always.push_back(cond("formula reproduces the pseudo core inverse", [](const Tb& t,
                                                                             std::span<const I>
                                                                                 e) {
      I a = e[0];
      int pc_k = pseudo_core_index(t, a);
      if (pc_k < 0) return true;
      int pc = unique_witness(t, InverseKind::PseudoCore, a, pc_k);
      int dz = drazin_index(t, a);
      int ad = unique_witness(t, InverseKind::Drazin, a, dz);
      I ak = t.pow(a, pc_k);
      for (std::size_t w = 0; w < t.size(); ++w) {
        I wi = static_cast<I>(w);
        if (!table_satisfies(t, InverseKind::OneThree, ak, wi)) continue;
        I built = t.mul(t.mul(static_cast<I>(ad), ak), wi);
        if (built != static_cast<I>(pc)) return false;
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 4.7: three equivalent pseudo core systems ----
  {
    Claim c;
    c.id = "Thm4.7";
    c.statement = "pseudo core invertibility via the powered symmetric systems";
    c.equivalent.push_back(cond("pseudo core invertible", [](const Tb& t, std::span<const I> e) {
      return pseudo_core_index(t, e[0]) > 0;
    }));
    c.equivalent.push_back(cond("system (ii) for some k", [](const Tb& t, std::span<const I> e) {
      I a = e[0];
      for (int k = 1; k <= kPowerBound; ++k) {
        I ak = t.pow(a, k);
        bool hit = exists_x(t, [&](I x) {
          if (t.mul(x, t.mul(ak, a)) != ak) return false;
          if (t.mul(a, t.pow(x, k + 1)) != t.pow(x, k)) return false;
          I m = t.mul(ak, t.pow(x, k));
          return t.star(m) == m;
        });
        if (hit) return true;
      }
      return false;
    }));
    c.equivalent.push_back(cond("system (iii) for some k", [](const Tb& t, std::span<const I> e) {
      I a = e[0];
      for (int k = 1; k <= kPowerBound; ++k) {
        I ak = t.pow(a, k);
        I ak1 = t.pow(a, k + 1);
        bool hit = exists_x(t, [&](I x) {
          if (t.mul(t.mul(ak, t.pow(x, k + 1)), ak1) != ak) return false;
          if (t.mul(a, t.mul(x, x)) != x) return false;
          I m = t.mul(ak1, t.pow(x, k + 1));
          return t.star(m) == m;
        });
        if (hit) return true;
      }
      return false;
    }));
    c.always.push_back(cond("a^{k-1}x^k rebuilds the pseudo core inverse from (ii)",
                            [](const Tb& t, std::span<const I> e) {
                              I a = e[0];
                              int pc_k = pseudo_core_index(t, a);
                              int pc = pc_k > 0
                                           ? unique_witness(t, InverseKind::PseudoCore, a, pc_k)
                                           : Tb::kNone;
                              for (int k = 1; k <= 3; ++k) {
                                I ak = t.pow(a, k);
                                for (std::size_t x = 0; x < t.size(); ++x) {
                                  I xi = static_cast<I>(x);
                                  if (t.mul(xi, t.mul(ak, a)) != ak) continue;
                                  if (t.mul(a, t.pow(xi, k + 1)) != t.pow(xi, k)) continue;
                                  I m = t.mul(ak, t.pow(xi, k));
                                  if (t.star(m) != m) continue;
                                  if (pc == Tb::kNone) return false;
                                  if (t.mul(t.pow(a, k - 1), t.pow(xi, k)) != static_cast<I>(pc))
                                    return false;
                                }
                              }
                              return true;
                            }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 4.8: right pseudo core of a vs right core of a^k ----
  {
    Claim c;
    c.id = "Thm4.8";
    c.statement = "a right pseudo core invertible iff some a^k is right core invertible";
    c.equivalent.push_back(cond("right pseudo core invertible", [](const Tb& t,
                                                                   std::span<const I> e) {
      for (int k = 1; k <= kPowerBound; ++k)
        if (unique_witness(t, InverseKind::RightPseudoCore, e[0], k) != Tb::kNone) return true;
      return false;
    }));
    c.equivalent.push_back(cond("a^k right core invertible for some k", [](const Tb& t,
                                                                            std::span<const I>
                                                                                e) {
      for (int k = 1; k <= kPowerBound; ++k)
        if (rci(t, t.pow(e[0], k))) return true;
      return false;
    }));
    c.always.push_back(cond("witness transfer both ways", [](const Tb& t, std::span<const I> e) {
      I a = e[0];
      for (int k = 1; k <= 3; ++k) {
        I ak = t.pow(a, k);
        I ak_1 = t.pow(a, k - 1);
        for (std::size_t x = 0; x < t.size(); ++x) {
          I xi = static_cast<I>(x);
          if (table_satisfies(t, InverseKind::RightPseudoCore, a, xi, k) &&
              !rc_witness(t, ak, t.pow(xi, k)))
            return false;
          if (rc_witness(t, ak, xi) &&
              !table_satisfies(t, InverseKind::RightPseudoCore, a, t.mul(ak_1, xi), k))
            return false;
        }
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 4.9: right pseudo core characterizations ----
  {
    Claim c;
    c.id = "Thm4.9";
    c.statement = "rpc via a^{k+1}ya^k system, {1,3} powers with a^kR = a^{k+1}R, powered x";
    c.equivalent.push_back(cond("right pseudo core invertible", [](const Tb& t,
                                                                   std::span<const I> e) {
      for (int k = 1; k <= kPowerBound; ++k)
        if (unique_witness(t, InverseKind::RightPseudoCore, e[0], k) != Tb::kNone) return true;
      return false;
    }));
    c.equivalent.push_back(cond("a^{k+1} y a^k = a^k with symmetric a^{k+1}y",
                                [](const Tb& t, std::span<const I> e) {
                                  I a = e[0];
                                  for (int k = 1; k <= kPowerBound; ++k) {
                                    I ak = t.pow(a, k);
                                    I ak1 = t.pow(a, k + 1);
                                    bool hit = exists_x(t, [&](I y) {
                                      I m = t.mul(ak1, y);
                                      return t.mul(m, ak) == ak && t.star(m) == m;
                                    });
                                    if (hit) return true;
                                  }
                                  return false;
                                }));
    c.equivalent.push_back(cond("a^k in R{1,3} and a^kR = a^{k+1}R", [](const Tb& t,
                                                                        std::span<const I> e) {
      I a = e[0];
      for (int k = 1; k <= kPowerBound; ++k) {
        I ak = t.pow(a, k);
        if (is13(t, ak) && t.right_ideal_eq(ak, t.pow(a, k + 1))) return true;
      }
      return false;
    }));
    c.equivalent.push_back(cond("a^{k+1}x^{k+1}a^k system", [](const Tb& t,
                                                               std::span<const I> e) {
      I a = e[0];
      for (int k = 1; k <= kPowerBound; ++k) {
        I ak = t.pow(a, k);
        I ak1 = t.pow(a, k + 1);
        bool hit = exists_x(t, [&](I x) {
          if (t.mul(a, t.mul(x, x)) != x) return false;
          I m = t.mul(ak1, t.pow(x, k + 1));
          return t.mul(m, ak) == ak && t.star(m) == m;
        });
        if (hit) return true;
      }
      return false;
    }));
    c.always.push_back(cond("a^k z (a^k)^{(1,3)} is an rpc witness", [](const Tb& t,
                                                                        std::span<const I> e) {
      I a = e[0];
      for (int k = 1; k <= 3; ++k) {
        I ak = t.pow(a, k);
        I ak1 = t.pow(a, k + 1);
        for (std::size_t z = 0; z < t.size(); ++z) {
          if (t.mul(ak1, static_cast<I>(z)) != ak) continue;
          for (std::size_t w = 0; w < t.size(); ++w) {
            I wi = static_cast<I>(w);
            if (!table_satisfies(t, InverseKind::OneThree, ak, wi)) continue;
            I x = t.mul(t.mul(ak, static_cast<I>(z)), wi);
            if (!table_satisfies(t, InverseKind::RightPseudoCore, a, x, k)) return false;
          }
        }
      }
      return true;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 4.10: ideal characterizations for rpc ----
  {
    Claim c;
    c.id = "Thm4.10";
    c.statement = "rpc iff Ra^k = R(a^k)*a^k with a^kR = a^{k+1}R iff Ra^k = R(a*)^{k+1}a^k";
    c.equivalent.push_back(cond("right pseudo core invertible", [](const Tb& t,
                                                                   std::span<const I> e) {
      for (int k = 1; k <= kPowerBound; ++k)
        if (unique_witness(t, InverseKind::RightPseudoCore, e[0], k) != Tb::kNone) return true;
      return false;
    }));
    c.equivalent.push_back(cond("Ra^k = R(a^k)*a^k and a^kR = a^{k+1}R", [](const Tb& t,
                                                                            std::span<const I>
                                                                                e) {
      I a = e[0];
      for (int k = 1; k <= kPowerBound; ++k) {
        I ak = t.pow(a, k);
        if (t.left_ideal_eq(ak, t.mul(t.star(ak), ak)) &&
            t.right_ideal_eq(ak, t.pow(a, k + 1)))
          return true;
      }
      return false;
    }));
    c.equivalent.push_back(cond("Ra^k = R(a*)^{k+1}a^k", [](const Tb& t, std::span<const I> e) {
      I a = e[0];
      for (int k = 1; k <= kPowerBound; ++k) {
        I ak = t.pow(a, k);
        if (t.left_ideal_eq(ak, t.mul(t.pow(t.star(a), k + 1), ak))) return true;
      }
      return false;
    }));
    reg.push_back(std::move(c));
  }

  // ---- Thm 4.11: block representation for rpc witnesses ----
  {
    Claim c;
    c.id = "Thm4.11";
    c.statement = "rpc witnesses match the q = ax block shape with qa^k = a^k, and conversely";
    c.always.push_back(cond("every rpc witness yields the block identities",
                            [](const Tb& t, std::span<const I> e) {
                              I a = e[0];
                              for (int k = 1; k <= 3; ++k) {
                                I ak = t.pow(a, k);
                                for (std::size_t x = 0; x < t.size(); ++x) {
                                  I xi = static_cast<I>(x);
                                  if (!table_satisfies(t, InverseKind::RightPseudoCore, a, xi, k))
                                    continue;
                                  I q = t.mul(a, xi);
                                  I qc = t.sub(t.one(), q);
                                  if (t.mul(q, q) != q || t.star(q) != q) return false;
                                  if (t.mul(q, ak) != ak || t.mul(q, xi) != xi) return false;
                                  I a1 = t.mul(t.mul(q, a), q);
                                  I a3 = t.mul(t.mul(qc, a), q);
                                  I x1 = t.mul(t.mul(q, xi), q);
                                  I x2 = t.mul(t.mul(q, xi), qc);
                                  if (t.mul(a1, x1) != q || t.mul(a1, x2) != t.zero())
                                    return false;
                                  if (t.mul(a3, x1) != t.zero() || t.mul(a3, x2) != t.zero())
                                    return false;
                                }
                              }
                              return true;
                            }));
    c.always.push_back(cond("block shape conversely certifies the rpc witness",
                            [](const Tb& t, std::span<const I> e) {
                              I a = e[0];
                              for (I q : t.projections()) {
                                I qc = t.sub(t.one(), q);
                                I a1 = t.mul(t.mul(q, a), q);
                                I a3 = t.mul(t.mul(qc, a), q);
                                for (int k = 1; k <= 3; ++k) {
                                  I ak = t.pow(a, k);
                                  if (t.mul(q, ak) != ak) continue;
                                  for (std::size_t x = 0; x < t.size(); ++x) {
                                    I xi = static_cast<I>(x);
                                    if (t.mul(q, xi) != xi) continue;
                                    I x1 = t.mul(t.mul(q, xi), q);
                                    I x2 = t.mul(t.mul(q, xi), qc);
                                    if (t.mul(a1, x1) != q || t.mul(a1, x2) != t.zero())
                                      continue;
                                    if (t.mul(a3, x1) != t.zero() ||
                                        t.mul(a3, x2) != t.zero())
                                      continue;
                                    if (!table_satisfies(t, InverseKind::RightPseudoCore, a, xi,
                                                         k))
                                      return false;
                                  }
                                }
                              }
                              return true;
                            }));
    reg.push_back(std::move(c));
  }

  return reg;
}

}  // namespace

const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> reg = build_registry();
  return reg;
}

const Claim* find_claim(const std::string& id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return &c;
  return nullptr;
}

std::vector<std::string> registered_claim_ids() {
  std::vector<std::string> out;
  for (const auto& c : claim_registry()) out.push_back(c.id);
  return out;
}

ClaimResult run_claim(const Claim& claim, const RingPtr& ring, const Scope& scope,
                      par::ExecMode mode) {
  ClaimResult res;
  res.claim_id = claim.id;
  res.ring_id = ring->id();
  if (!ring->has(Capability::Enumerable)) {
    res.verdict = ClaimResult::Verdict::Skipped;
    res.skip_reason = "ring is not enumerable";
    return res;
  }
  auto table = FiniteTable::cached(ring);
  const Tb& t = *table;
  const std::size_t n = t.size();

  // tuple space: arity-1 claims scan elements, arity-2 claims scan pairs
  std::size_t space = 1;
  for (int i = 0; i < claim.arity; ++i) space *= n;

  std::vector<std::size_t> tuples;
  if (scope.kind == Scope::Kind::AllElements) {
    tuples.resize(space);
    for (std::size_t i = 0; i < space; ++i) tuples[i] = i;
  } else {
    std::mt19937_64 rng(scope.seed);
    std::uniform_int_distribution<std::size_t> dist(0, space - 1);
    tuples.resize(scope.sample_size);
    for (auto& v : tuples) v = dist(rng);
  }

  auto decode = [&](std::size_t code, std::vector<I>& out) {
    out.clear();
    for (int i = 0; i < claim.arity; ++i) {
      out.push_back(static_cast<I>(code % n));
      code /= n;
    }
  };

  std::vector<char> violated(tuples.size(), 0);
  par::for_each_index(
      tuples.size(),
      [&](std::size_t idx) {
        std::vector<I> tup;
        decode(tuples[idx], tup);
        std::span<const I> sp(tup.data(), tup.size());
        if (claim.guard && !claim.guard(t, sp)) return;
        bool bad = false;
        if (!claim.equivalent.empty()) {
          bool first = claim.equivalent[0].eval(t, sp);
          for (std::size_t c = 1; c < claim.equivalent.size() && !bad; ++c)
            bad = claim.equivalent[c].eval(t, sp) != first;
        }
        for (std::size_t c = 0; c < claim.always.size() && !bad; ++c)
          bad = !claim.always[c].eval(t, sp);
        violated[idx] = bad ? 1 : 0;
      },
      mode);

  res.elements_checked = tuples.size();
  for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
    if (!violated[idx]) continue;
    res.verdict = ClaimResult::Verdict::Counterexample;
    std::vector<I> tup;
    decode(tuples[idx], tup);
    std::span<const I> sp(tup.data(), tup.size());
    for (I el : tup) res.tuple.push_back(ring->encode(t.element(el)));
    for (const auto& c : claim.equivalent)
      res.condition_truths.emplace_back(c.id, c.eval(t, sp));
    for (const auto& c : claim.always) res.condition_truths.emplace_back(c.id, c.eval(t, sp));
    return res;
  }
  res.verdict = ClaimResult::Verdict::Pass;
  return res;
}

}  // namespace ginv
