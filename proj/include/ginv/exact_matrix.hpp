#pragma once

// Dense matrices over the Gaussian rationals with exact arithmetic throughout.
// Involution is the conjugate transpose, which makes G*G invertible for any
// full-column-rank G, so Moore-Penrose inverses always exist here.

#include <optional>
#include <string>
#include <vector>

#include "ginv/gaussian.hpp"

namespace ginv {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}
  static ExactMatrix identity(int n);
  static ExactMatrix zero(int rows, int cols) { return ExactMatrix(rows, cols); }
  // rows of entry strings, e.g. {{"1","1/2+i"},{"0","-i"}}
  static ExactMatrix parse_rows(const std::vector<std::vector<std::string>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Gaussian& at(int i, int j) const { return e_[std::size_t(i) * cols_ + j]; }
  Gaussian& at(int i, int j) { return e_[std::size_t(i) * cols_ + j]; }

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  ExactMatrix conj_transpose() const;
  ExactMatrix operator-() const;
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const Gaussian& s, const ExactMatrix& a);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

  ExactMatrix pow(int k) const;  // square only, k >= 0

  std::string to_string() const;  // canonical "[[..],[..]]"

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Gaussian> e_;
};

// Reduced row echelon form with first-nonzero pivoting (deterministic).
struct EchelonForm {
  ExactMatrix rref;
  std::vector<int> pivot_cols;
  int rank = 0;
};
EchelonForm row_reduce(const ExactMatrix& a);

int rank(const ExactMatrix& a);

// A = F*G with F the pivot columns of A (full column rank) and G the nonzero
// rows of rref(A) (full row rank). Rank-zero A yields empty factors.
struct FullRankFactorization {
  ExactMatrix f;  // rows x r
  ExactMatrix g;  // r x cols
  int rank = 0;
};
FullRankFactorization full_rank_factorize(const ExactMatrix& a);

// Inverse of a square full-rank matrix; nullopt when singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& a);

// Moore-Penrose inverse via full-rank factorization:
//   A = F*G,  A^+ = G* (G G*)^{-1} (F* F)^{-1} F*.
ExactMatrix mp_inverse(const ExactMatrix& a);

struct DrazinResult {
  ExactMatrix inverse;
  int index = 0;  // least k with rank(a^k) = rank(a^{k+1})
};
// Rank stabilization gives the index; then a^D = a^k (a^{2k+1})^+ a^k.
DrazinResult drazin_inverse(const ExactMatrix& a);

// Drazin inverse when the index is <= 1, nullopt otherwise.
std::optional<ExactMatrix> group_inverse(const ExactMatrix& a);

// Default {1,3}-inverse choice: the Moore-Penrose inverse.
ExactMatrix one_three_inverse(const ExactMatrix& a);
// Alternative route: solve a = t a* a and return t*; nullopt if unsolvable
// (never for exact Gaussian-rational matrices, kept for the dual-route check).
std::optional<ExactMatrix> one_three_via_star_adjoint(const ExactMatrix& a);

// Solve the general linear system sum_i L_i X R_i = B for X (n x n), exact,
// deterministic (free variables pinned to zero). nullopt when inconsistent.
std::optional<ExactMatrix> solve_sandwich(
    const std::vector<std::pair<ExactMatrix, ExactMatrix>>& terms, const ExactMatrix& rhs);

}  // namespace ginv
