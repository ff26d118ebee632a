#include "ginv/exact_matrix.hpp"

#include "ginv/error.hpp"

namespace ginv {

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Gaussian(1);
  return m;
}

ExactMatrix ExactMatrix::parse_rows(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw Error(Errc::ParseError, "matrix needs at least one row");
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != static_cast<std::size_t>(m.cols()))
      throw Error(Errc::ParseError, "ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = Gaussian::parse(rows[i][j]);
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : e_)
    if (!v.is_zero()) return false;
  return true;
}

ExactMatrix ExactMatrix::conj_transpose() const {
  ExactMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = -e_[i];
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error(Errc::InvalidElement, "matrix shape mismatch");
  ExactMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = a.e_[i] + b.e_[i];
  return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) { return a + (-b); }

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(Errc::InvalidElement, "matrix shape mismatch");
  ExactMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int l = 0; l < a.cols_; ++l) {
      const Gaussian& av = a.at(i, l);
      if (av.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Gaussian& bv = b.at(l, j);
        if (!bv.is_zero()) m.at(i, j) += av * bv;
      }
    }
  return m;
}

ExactMatrix operator*(const Gaussian& s, const ExactMatrix& a) {
  ExactMatrix m(a.rows_, a.cols_);
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] = s * a.e_[i];
  return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

ExactMatrix ExactMatrix::pow(int k) const {
  if (!is_square()) throw Error(Errc::InvalidElement, "pow needs a square matrix");
  ExactMatrix r = identity(rows_);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

std::string ExactMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i > 0 ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j > 0) out += ",";
      out += at(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

EchelonForm row_reduce(const ExactMatrix& a) {
  EchelonForm out;
  out.rref = a;
  ExactMatrix& m = out.rref;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(row, j));
    Gaussian inv = m.at(row, col).reciprocal();
    for (int j = col; j < m.cols(); ++j) m.at(row, j) = inv * m.at(row, j);
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m.at(i, col).is_zero()) continue;
      Gaussian f = m.at(i, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

int rank(const ExactMatrix& a) { return row_reduce(a).rank; }

FullRankFactorization full_rank_factorize(const ExactMatrix& a) {
  EchelonForm ech = row_reduce(a);
  FullRankFactorization out;
  out.rank = ech.rank;
  out.f = ExactMatrix(a.rows(), ech.rank);
  out.g = ExactMatrix(ech.rank, a.cols());
  for (int r = 0; r < ech.rank; ++r) {
    int pc = ech.pivot_cols[r];
    for (int i = 0; i < a.rows(); ++i) out.f.at(i, r) = a.at(i, pc);
    for (int j = 0; j < a.cols(); ++j) out.g.at(r, j) = ech.rref.at(r, j);
  }
  return out;
}

std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
  if (!a.is_square()) return std::nullopt;
  int n = a.rows();
  ExactMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = Gaussian(1);
  }
  EchelonForm ech = row_reduce(aug);
  for (int i = 0; i < n; ++i)
    if (ech.rank <= i || ech.pivot_cols[i] != i) return std::nullopt;
  ExactMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = ech.rref.at(i, n + j);
  return inv;
}

ExactMatrix mp_inverse(const ExactMatrix& a) {
  if (a.is_zero()) return a.conj_transpose();
  FullRankFactorization frf = full_rank_factorize(a);
  ExactMatrix gs = frf.g.conj_transpose();
  ExactMatrix fs = frf.f.conj_transpose();
  auto ggs_inv = inverse(frf.g * gs);
  auto fsf_inv = inverse(fs * frf.f);
  if (!ggs_inv || !fsf_inv)
    throw Error(Errc::InternalInconsistency, "Gram matrix of a full-rank factor was singular");
  return gs * *ggs_inv * *fsf_inv * fs;
}

DrazinResult drazin_inverse(const ExactMatrix& a) {
  if (!a.is_square()) throw Error(Errc::InvalidElement, "Drazin inverse needs a square matrix");
  int n = a.rows();
  // index = first k with rank(a^k) = rank(a^{k+1}); rank(a^0) = n
  int k = 0;
  int prev_rank = n;
  ExactMatrix p = ExactMatrix::identity(n);
  while (true) {
    ExactMatrix next = p * a;
    int r = rank(next);
    if (r == prev_rank) break;
    prev_rank = r;
    p = next;
    ++k;
  }
  DrazinResult out;
  out.index = k;
  if (k == 0) {
    out.inverse = *inverse(a);
    return out;
  }
  ExactMatrix ak = a.pow(k);
  ExactMatrix mid = mp_inverse(a.pow(2 * k + 1));
  out.inverse = ak * mid * ak;
  return out;
}

std::optional<ExactMatrix> group_inverse(const ExactMatrix& a) {
  DrazinResult d = drazin_inverse(a);
  if (d.index > 1) return std::nullopt;
  return d.inverse;
}

ExactMatrix one_three_inverse(const ExactMatrix& a) { return mp_inverse(a); }

std::optional<ExactMatrix> one_three_via_star_adjoint(const ExactMatrix& a) {
  // a = t (a* a)  =>  t* is a {1,3}-inverse of a
  ExactMatrix asa = a.conj_transpose() * a;
  auto t = solve_sandwich({{ExactMatrix::identity(a.rows()), asa}}, a);
  if (!t) return std::nullopt;
  return t->conj_transpose();
}

std::optional<ExactMatrix> solve_sandwich(
    const std::vector<std::pair<ExactMatrix, ExactMatrix>>& terms, const ExactMatrix& rhs) {
  if (terms.empty()) throw Error(Errc::InvalidElement, "empty system");
  const int xr = terms[0].first.cols();   // X is xr x xc
  const int xc = terms[0].second.rows();
  const int rr = rhs.rows();
  const int rc = rhs.cols();
  // unknowns: X entries (u,v) row-major; equations: rhs entries (p,q)
  const int unknowns = xr * xc;
  const int equations = rr * rc;
  ExactMatrix sys(equations, unknowns + 1);
  for (const auto& [l, r] : terms) {
    if (l.cols() != xr || r.rows() != xc)
      throw Error(Errc::InvalidElement, "system term shape mismatch");
    for (int p = 0; p < rr; ++p)
      for (int q = 0; q < rc; ++q)
        for (int u = 0; u < xr; ++u) {
          if (l.at(p, u).is_zero()) continue;
          for (int v = 0; v < xc; ++v)
            sys.at(p * rc + q, u * xc + v) += l.at(p, u) * r.at(v, q);
        }
  }
  for (int p = 0; p < rr; ++p)
    for (int q = 0; q < rc; ++q) sys.at(p * rc + q, unknowns) = rhs.at(p, q);

  EchelonForm ech = row_reduce(sys);
  // inconsistent iff a pivot lands in the augmented column
  for (int pc : ech.pivot_cols)
    if (pc == unknowns) return std::nullopt;
  // free variables pinned to zero: X(u,v) = rhs coefficient of its pivot row
  ExactMatrix x(xr, xc);
  for (int r = 0; r < ech.rank; ++r) {
    int pc = ech.pivot_cols[r];
    // the pivot row may still reference free columns; pinning them to zero
    // leaves x[pc] = rhs entry of that row
    x.at(pc / xc, pc % xc) = ech.rref.at(r, unknowns);
  }
  // the pinned solution satisfies every RREF row by construction; a replay
  // mismatch means the system was assembled wrong, not that no solution exists
  ExactMatrix acc(rr, rc);
  for (const auto& [l, r] : terms) acc = acc + l * x * r;
  if (!(acc == rhs))
    throw Error(Errc::InternalInconsistency, "sandwich solve replay mismatch");
  return x;
}

}  // namespace ginv
