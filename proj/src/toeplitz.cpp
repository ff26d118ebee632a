#include "ginv/toeplitz.hpp"

#include <algorithm>

#include "ginv/exact_matrix.hpp"

namespace ginv {

ToeplitzElement::ToeplitzElement(std::map<int, Rational> symbol,
                                 std::vector<std::vector<Rational>> correction)
    : symbol_(std::move(symbol)), corr_(std::move(correction)) {
  // normalize the correction block to rectangular
  std::size_t width = 0;
  for (const auto& row : corr_) width = std::max(width, row.size());
  for (auto& row : corr_) row.resize(width, Rational(0));
  strip();
}

ToeplitzElement ToeplitzElement::one_element() {
  return from_symbol({{0, Rational(1)}});
}

ToeplitzElement ToeplitzElement::shift() { return from_symbol({{-1, Rational(1)}}); }

ToeplitzElement ToeplitzElement::shift_star() { return from_symbol({{1, Rational(1)}}); }

ToeplitzElement ToeplitzElement::unit_correction(int i, int j, Rational v) {
  std::vector<std::vector<Rational>> c(i + 1, std::vector<Rational>(j + 1, Rational(0)));
  c[i][j] = std::move(v);
  return ToeplitzElement({}, std::move(c));
}

ToeplitzElement ToeplitzElement::from_symbol(std::map<int, Rational> symbol) {
  return ToeplitzElement(std::move(symbol), {});
}

void ToeplitzElement::strip() {
  for (auto it = symbol_.begin(); it != symbol_.end();)
    it = it->second.is_zero() ? symbol_.erase(it) : std::next(it);
  // drop all-zero trailing columns, then rows
  std::size_t width = corr_.empty() ? 0 : corr_[0].size();
  while (width > 0) {
    bool all_zero = true;
    for (const auto& row : corr_)
      if (!row[width - 1].is_zero()) {
        all_zero = false;
        break;
      }
    if (!all_zero) break;
    --width;
  }
  for (auto& row : corr_) row.resize(width);
  while (!corr_.empty()) {
    bool all_zero = true;
    for (const auto& v : corr_.back())
      if (!v.is_zero()) {
        all_zero = false;
        break;
      }
    if (!all_zero) break;
    corr_.pop_back();
  }
  if (!corr_.empty() && corr_[0].empty()) corr_.clear();
}

int ToeplitzElement::support_bound() const {
  int band = std::max(std::abs(min_degree()), std::abs(max_degree()));
  return std::max({band, corr_rows(), corr_cols()});
}

Rational ToeplitzElement::entry(int i, int j) const {
  Rational v(0);
  auto it = symbol_.find(j - i);
  if (it != symbol_.end()) v = it->second;
  if (i < corr_rows() && j < corr_cols()) v += corr_[i][j];
  return v;
}

ToeplitzElement ToeplitzElement::operator-() const {
  std::map<int, Rational> s;
  for (const auto& [d, v] : symbol_) s.emplace(d, -v);
  auto c = corr_;
  for (auto& row : c)
    for (auto& v : row) v = -v;
  return ToeplitzElement(std::move(s), std::move(c));
}

ToeplitzElement ToeplitzElement::star() const {
  std::map<int, Rational> s;
  for (const auto& [d, v] : symbol_) s.emplace(-d, v);
  std::vector<std::vector<Rational>> c;
  if (!corr_.empty()) {
    c.assign(corr_cols(), std::vector<Rational>(corr_rows(), Rational(0)));
    for (int i = 0; i < corr_rows(); ++i)
      for (int j = 0; j < corr_cols(); ++j) c[j][i] = corr_[i][j];
  }
  return ToeplitzElement(std::move(s), std::move(c));
}

ToeplitzElement operator+(const ToeplitzElement& a, const ToeplitzElement& b) {
  std::map<int, Rational> s = a.symbol_;
  for (const auto& [d, v] : b.symbol_) {
    auto [it, inserted] = s.emplace(d, v);
    if (!inserted) it->second += v;
  }
  int rows = std::max(a.corr_rows(), b.corr_rows());
  int cols = std::max(a.corr_cols(), b.corr_cols());
  std::vector<std::vector<Rational>> c(rows, std::vector<Rational>(cols, Rational(0)));
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      if (i < a.corr_rows() && j < a.corr_cols()) c[i][j] += a.corr_[i][j];
      if (i < b.corr_rows() && j < b.corr_cols()) c[i][j] += b.corr_[i][j];
    }
  return ToeplitzElement(std::move(s), std::move(c));
}

ToeplitzElement operator-(const ToeplitzElement& a, const ToeplitzElement& b) {
  return a + (-b);
}

ToeplitzElement operator*(const ToeplitzElement& a, const ToeplitzElement& b) {
  // symbol part: Laurent convolution
  std::map<int, Rational> s;
  for (const auto& [da, va] : a.symbol_)
    for (const auto& [db, vb] : b.symbol_) {
      auto [it, inserted] = s.emplace(da + db, va * vb);
      if (!inserted) it->second += va * vb;
    }
  // correction: exact window entries minus the pure symbol part. The window
  // strictly contains the possible support, and the outermost ring of the
  // window is asserted zero afterwards (support bound recomputation).
  int w = a.support_bound() + b.support_bound() + 1;
  ToeplitzElement sym_prod(std::move(s), {});
  std::vector<std::vector<Rational>> c(w, std::vector<Rational>(w, Rational(0)));
  int k_hi = std::max(w + a.max_degree(), a.corr_cols() - 1);
  for (int i = 0; i < w; ++i)
    for (int j = 0; j < w; ++j) {
      Rational acc(0);
      for (int k = 0; k <= k_hi; ++k) {
        Rational av = a.entry(i, k);
        if (av.is_zero()) continue;
        Rational bv = b.entry(k, j);
        if (!bv.is_zero()) acc += av * bv;
      }
      c[i][j] = acc - sym_prod.entry(i, j);
    }
  for (int t = 0; t < w; ++t) {
    if (!c[w - 1][t].is_zero() || !c[t][w - 1].is_zero())
      throw Error(Errc::InternalInconsistency, "Toeplitz correction support bound violated");
  }
  return ToeplitzElement(sym_prod.symbol_, std::move(c));
}

std::vector<std::vector<Rational>> ToeplitzElement::truncate(int n) const {
  std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = entry(i, j);
  return out;
}

std::string ToeplitzElement::to_string() const {
  std::string out = "T{";
  bool first = true;
  for (const auto& [d, v] : symbol_) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(d) + ":" + v.to_string();
  }
  out += "}+C[";
  for (int i = 0; i < corr_rows(); ++i) {
    out += i > 0 ? ",[" : "[";
    for (int j = 0; j < corr_cols(); ++j) {
      if (j > 0) out += ",";
      out += corr_[i][j].to_string();
    }
    out += "]";
  }
  return out + "]";
}

namespace {

struct ToeplitzData final : ElementData {
  explicit ToeplitzData(ToeplitzElement v) : value(std::move(v)) {}
  ToeplitzElement value;
};

}  // namespace

ToeplitzRing::ToeplitzRing(ToeplitzBounds bounds)
    : StarRing("Toeplitz(Q)", static_cast<unsigned>(Capability::LinearSolvable)),
      bounds_(bounds) {
  if (bounds.band < 0 || bounds.corr < 0)
    throw Error(Errc::InvalidBound, "Toeplitz bounds must be >= 0");
}

std::shared_ptr<const ToeplitzRing> ToeplitzRing::create(ToeplitzBounds bounds) {
  return std::shared_ptr<const ToeplitzRing>(new ToeplitzRing(bounds));
}

Element ToeplitzRing::make(ToeplitzElement e) const {
  return Element(shared_from_this(), std::make_shared<ToeplitzData>(std::move(e)));
}

const ToeplitzElement& ToeplitzRing::value_of(const Element& a) const {
  check_same_ring(a);
  return a.data<ToeplitzData>().value;
}

Element ToeplitzRing::add(const Element& a, const Element& b) const {
  return make(value_of(a) + value_of(b));
}

Element ToeplitzRing::negate(const Element& a) const { return make(-value_of(a)); }

Element ToeplitzRing::multiply(const Element& a, const Element& b) const {
  return make(value_of(a) * value_of(b));
}

Element ToeplitzRing::star(const Element& a) const { return make(value_of(a).star()); }

Element ToeplitzRing::zero() const { return make(ToeplitzElement::zero_element()); }
Element ToeplitzRing::one() const { return make(ToeplitzElement::one_element()); }

bool ToeplitzRing::equal(const Element& a, const Element& b) const {
  return value_of(a) == value_of(b);
}

std::string ToeplitzRing::encode(const Element& a) const { return value_of(a).to_string(); }

json ToeplitzRing::element_payload(const Element& a) const {
  const ToeplitzElement& v = value_of(a);
  json sym = json::object();
  for (const auto& [d, r] : v.symbol()) sym[std::to_string(d)] = r.to_string();
  json corr = json::array();
  for (int i = 0; i < v.corr_rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < v.corr_cols(); ++j) row.push_back(v.correction()[i][j].to_string());
    corr.push_back(row);
  }
  return json{{"symbol", sym}, {"correction", corr}};
}

Element ToeplitzRing::parse_payload(const json& doc) const {
  if (doc.is_string() || (doc.is_object() && doc.contains("name"))) {
    std::string name = doc.is_string() ? doc.get<std::string>()
                                       : doc.at("name").get<std::string>();
    if (name == "S") return make(ToeplitzElement::shift());
    if (name == "S*") return make(ToeplitzElement::shift_star());
    if (name == "1" || name == "one") return one();
    if (name == "0" || name == "zero") return zero();
    if (name.size() >= 3 && name[0] == 'E') {
      int i = name[1] - '0';
      int j = name[2] - '0';
      if (i >= 0 && i <= 9 && j >= 0 && j <= 9)
        return make(ToeplitzElement::unit_correction(i, j));
    }
    throw Error(Errc::ParseError, "unknown named Toeplitz element: " + name);
  }
  std::map<int, Rational> sym;
  if (doc.contains("symbol"))
    for (auto it = doc.at("symbol").begin(); it != doc.at("symbol").end(); ++it)
      sym.emplace(std::stoi(it.key()), Rational::parse(it.value().get<std::string>()));
  std::vector<std::vector<Rational>> corr;
  if (doc.contains("correction"))
    for (const auto& row : doc.at("correction")) {
      std::vector<Rational> r;
      for (const auto& cell : row)
        r.push_back(cell.is_string() ? Rational::parse(cell.get<std::string>())
                                     : Rational(cell.get<long long>()));
      corr.push_back(std::move(r));
    }
  return make(ToeplitzElement(std::move(sym), std::move(corr)));
}

SolveResult ToeplitzRing::solve_linear(std::span<const SolveTerm> terms,
                                       const Element& rhs) const {
  const int band = bounds_.band;
  const int corr = bounds_.corr;
  // unknown basis: symbol degrees -band..band, then correction cells row-major
  std::vector<ToeplitzElement> basis;
  for (int d = -band; d <= band; ++d)
    basis.push_back(ToeplitzElement::from_symbol({{d, Rational(1)}}));
  for (int i = 0; i < corr; ++i)
    for (int j = 0; j < corr; ++j) basis.push_back(ToeplitzElement::unit_correction(i, j));

  // image of each basis element under the (linear) map x -> sum l*x*r
  std::vector<ToeplitzElement> image;
  image.reserve(basis.size());
  int window = 0;
  int deg_lo = 0, deg_hi = 0;
  const ToeplitzElement& rhs_v = value_of(rhs);
  auto widen = [&](const ToeplitzElement& e) {
    window = std::max({window, e.corr_rows(), e.corr_cols()});
    deg_lo = std::min(deg_lo, e.min_degree());
    deg_hi = std::max(deg_hi, e.max_degree());
  };
  for (const auto& e : basis) {
    ToeplitzElement acc;
    for (const auto& t : terms) acc = acc + value_of(t.left) * e * value_of(t.right);
    widen(acc);
    image.push_back(std::move(acc));
  }
  widen(rhs_v);

  // linear system over Q: one equation per symbol degree, one per window cell
  const int n_unknowns = static_cast<int>(basis.size());
  const int n_eqs = (deg_hi - deg_lo + 1) + window * window;
  ExactMatrix sys(n_eqs, n_unknowns + 1);
  auto fill_column = [&](const ToeplitzElement& e, int col) {
    int row = 0;
    for (int d = deg_lo; d <= deg_hi; ++d, ++row) {
      auto it = e.symbol().find(d);
      if (it != e.symbol().end()) sys.at(row, col) = Gaussian(it->second, Rational(0));
    }
    for (int i = 0; i < window; ++i)
      for (int j = 0; j < window; ++j, ++row) {
        if (i < e.corr_rows() && j < e.corr_cols() && !e.correction()[i][j].is_zero())
          sys.at(row, col) = Gaussian(e.correction()[i][j], Rational(0));
      }
  };
  for (int c = 0; c < n_unknowns; ++c) fill_column(image[c], c);
  fill_column(rhs_v, n_unknowns);

  EchelonForm ech = row_reduce(sys);
  for (int pc : ech.pivot_cols)
    if (pc == n_unknowns) return SolveResult::unknown();
  std::vector<Rational> coeff(n_unknowns, Rational(0));
  for (int r = 0; r < ech.rank; ++r)
    coeff[ech.pivot_cols[r]] = ech.rref.at(r, n_unknowns).re();

  ToeplitzElement x;
  for (int c = 0; c < n_unknowns; ++c) {
    if (coeff[c].is_zero()) continue;
    ToeplitzElement scaled = basis[c];
    // scale the single nonzero cell of the basis element
    if (!scaled.symbol().empty()) {
      int d = scaled.symbol().begin()->first;
      scaled = ToeplitzElement::from_symbol({{d, coeff[c]}});
    } else {
      int i = (c - (2 * band + 1)) / corr;
      int j = (c - (2 * band + 1)) % corr;
      scaled = ToeplitzElement::unit_correction(i, j, coeff[c]);
    }
    x = x + scaled;
  }
  // replay before claiming success
  ToeplitzElement acc;
  for (const auto& t : terms) acc = acc + value_of(t.left) * x * value_of(t.right);
  if (!(acc == rhs_v)) return SolveResult::unknown();
  return SolveResult::ok(make(std::move(x)));
}

Element ToeplitzRing::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> deg(-2, 2);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> count(0, 3);
  std::map<int, Rational> sym;
  int terms = count(rng);
  for (int t = 0; t < terms; ++t) sym[deg(rng)] = Rational(num(rng));
  std::vector<std::vector<Rational>> corr;
  int rows = count(rng) % 3;
  for (int i = 0; i < rows; ++i) {
    std::vector<Rational> row;
    for (int j = 0; j < rows; ++j) row.push_back(Rational(num(rng)));
    corr.push_back(std::move(row));
  }
  return make(ToeplitzElement(std::move(sym), std::move(corr)));
}

}  // namespace ginv
