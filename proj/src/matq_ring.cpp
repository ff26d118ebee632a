#include "ginv/matq_ring.hpp"

namespace ginv {

namespace {

struct QMatData final : ElementData {
  explicit QMatData(ExactMatrix m) : mat(std::move(m)) {}
  ExactMatrix mat;
};

}  // namespace

GaussianMatrixRing::GaussianMatrixRing(int n)
    : StarRing("M" + std::to_string(n) + "(Q(i))",
               static_cast<unsigned>(Capability::LinearSolvable) |
                   static_cast<unsigned>(Capability::RankComputable)),
      n_(n) {
  if (n < 1) throw Error(Errc::InvalidFormat, "matrix dimension must be >= 1");
}

std::shared_ptr<const GaussianMatrixRing> GaussianMatrixRing::create(int n) {
  return std::shared_ptr<const GaussianMatrixRing>(new GaussianMatrixRing(n));
}

Element GaussianMatrixRing::make(ExactMatrix m) const {
  if (m.rows() != n_ || m.cols() != n_)
    throw Error(Errc::InvalidElement, "matrix must be " + std::to_string(n_) + " square");
  return Element(shared_from_this(), std::make_shared<QMatData>(std::move(m)));
}

const ExactMatrix& GaussianMatrixRing::matrix_of(const Element& a) const {
  check_same_ring(a);
  return a.data<QMatData>().mat;
}

Element GaussianMatrixRing::add(const Element& a, const Element& b) const {
  return make(matrix_of(a) + matrix_of(b));
}

Element GaussianMatrixRing::negate(const Element& a) const { return make(-matrix_of(a)); }

Element GaussianMatrixRing::multiply(const Element& a, const Element& b) const {
  return make(matrix_of(a) * matrix_of(b));
}

Element GaussianMatrixRing::star(const Element& a) const {
  return make(matrix_of(a).conj_transpose());
}

Element GaussianMatrixRing::zero() const { return make(ExactMatrix::zero(n_, n_)); }
Element GaussianMatrixRing::one() const { return make(ExactMatrix::identity(n_)); }

bool GaussianMatrixRing::equal(const Element& a, const Element& b) const {
  return matrix_of(a) == matrix_of(b);
}

std::string GaussianMatrixRing::encode(const Element& a) const {
  return matrix_of(a).to_string();
}

json GaussianMatrixRing::element_payload(const Element& a) const {
  const ExactMatrix& m = matrix_of(a);
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).to_string());
    rows.push_back(row);
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Element GaussianMatrixRing::parse_payload(const json& doc) const {
  const json& rows = doc.is_array() ? doc : doc.at("entries");
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> r;
    for (const auto& cell : row)
      r.push_back(cell.is_string() ? cell.get<std::string>()
                                   : std::to_string(cell.get<long long>()));
    cells.push_back(std::move(r));
  }
  ExactMatrix m = ExactMatrix::parse_rows(cells);
  if (doc.is_object() && doc.contains("rows") &&
      (doc.at("rows").get<int>() != m.rows() || doc.at("cols").get<int>() != m.cols()))
    throw Error(Errc::ParseError, "matrix dimensions disagree with entries");
  return make(std::move(m));
}

SolveResult GaussianMatrixRing::solve_linear(std::span<const SolveTerm> terms,
                                             const Element& rhs) const {
  std::vector<std::pair<ExactMatrix, ExactMatrix>> sys;
  sys.reserve(terms.size());
  for (const auto& t : terms) sys.emplace_back(matrix_of(t.left), matrix_of(t.right));
  auto x = solve_sandwich(sys, matrix_of(rhs));
  if (!x) return SolveResult::none();
  return SolveResult::ok(make(std::move(*x)));
}

std::optional<Element> GaussianMatrixRing::one_three_hint(const Element& a) const {
  return make(mp_inverse(matrix_of(a)));
}

std::optional<std::pair<Element, int>> GaussianMatrixRing::drazin_hint(const Element& a) const {
  DrazinResult d = drazin_inverse(matrix_of(a));
  return std::make_pair(make(std::move(d.inverse)), d.index);
}

Element GaussianMatrixRing::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  std::uniform_int_distribution<int> mode(0, 3);
  ExactMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Rational re(BigInt(num(rng)), BigInt(den(rng)));
      Rational im = mode(rng) == 0 ? Rational(BigInt(num(rng)), BigInt(den(rng))) : Rational(0);
      m.at(i, j) = Gaussian(std::move(re), std::move(im));
    }
  return make(std::move(m));
}

}  // namespace ginv
