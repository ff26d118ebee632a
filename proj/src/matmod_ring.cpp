#include "ginv/matmod_ring.hpp"

namespace ginv {

namespace {

struct MatData final : ElementData {
  explicit MatData(std::vector<std::uint8_t> e) : entries(std::move(e)) {}
  std::vector<std::uint8_t> entries;  // row-major
};

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

MatModRing::MatModRing(int k, int p)
    : StarRing("M" + std::to_string(k) + "(Z" + std::to_string(p) + ")",
               static_cast<unsigned>(Capability::Enumerable)),
      k_(k),
      p_(p) {
  if (k < 1) throw Error(Errc::InvalidFormat, "matrix dimension must be >= 1");
  if (!is_prime(p)) throw Error(Errc::InvalidFormat, "MatZp needs a prime modulus");
  size_ = 1;
  for (int i = 0; i < k * k; ++i) {
    if (size_ > (static_cast<std::size_t>(1) << 40) / static_cast<std::size_t>(p))
      throw Error(Errc::InvalidBound, "MatZp enumeration too large");
    size_ *= static_cast<std::size_t>(p);
  }
}

std::shared_ptr<const MatModRing> MatModRing::create(int k, int p) {
  return std::shared_ptr<const MatModRing>(new MatModRing(k, p));
}

Element MatModRing::wrap(std::vector<std::uint8_t> e) const {
  return Element(shared_from_this(), std::make_shared<MatData>(std::move(e)));
}

Element MatModRing::make(const std::vector<int>& entries) const {
  if (entries.size() != static_cast<std::size_t>(k_ * k_))
    throw Error(Errc::InvalidElement, "entry count mismatch");
  std::vector<std::uint8_t> e(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i)
    e[i] = static_cast<std::uint8_t>(((entries[i] % p_) + p_) % p_);
  return wrap(std::move(e));
}

const std::vector<std::uint8_t>& MatModRing::entries_of(const Element& a) const {
  check_same_ring(a);
  return a.data<MatData>().entries;
}

Element MatModRing::add(const Element& a, const Element& b) const {
  const auto& ea = entries_of(a);
  const auto& eb = entries_of(b);
  std::vector<std::uint8_t> out(ea.size());
  for (std::size_t i = 0; i < ea.size(); ++i)
    out[i] = static_cast<std::uint8_t>((ea[i] + eb[i]) % p_);
  return wrap(std::move(out));
}

Element MatModRing::negate(const Element& a) const {
  const auto& ea = entries_of(a);
  std::vector<std::uint8_t> out(ea.size());
  for (std::size_t i = 0; i < ea.size(); ++i)
    out[i] = static_cast<std::uint8_t>((p_ - ea[i]) % p_);
  return wrap(std::move(out));
}

Element MatModRing::multiply(const Element& a, const Element& b) const {
  const auto& ea = entries_of(a);
  const auto& eb = entries_of(b);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(k_) * k_, 0);
  for (int i = 0; i < k_; ++i)
    for (int l = 0; l < k_; ++l) {
      int av = ea[i * k_ + l];
      if (av == 0) continue;
      for (int j = 0; j < k_; ++j)
        out[i * k_ + j] =
            static_cast<std::uint8_t>((out[i * k_ + j] + av * eb[l * k_ + j]) % p_);
    }
  return wrap(std::move(out));
}

Element MatModRing::star(const Element& a) const {
  const auto& ea = entries_of(a);
  std::vector<std::uint8_t> out(ea.size());
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) out[j * k_ + i] = ea[i * k_ + j];
  return wrap(std::move(out));
}

Element MatModRing::zero() const {
  return wrap(std::vector<std::uint8_t>(static_cast<std::size_t>(k_) * k_, 0));
}

Element MatModRing::one() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(k_) * k_, 0);
  for (int i = 0; i < k_; ++i) out[i * k_ + i] = 1;
  return wrap(std::move(out));
}

bool MatModRing::equal(const Element& a, const Element& b) const {
  return entries_of(a) == entries_of(b);
}

std::string MatModRing::encode(const Element& a) const {
  const auto& ea = entries_of(a);
  std::string out = "[";
  for (int i = 0; i < k_; ++i) {
    out += i > 0 ? ",[" : "[";
    for (int j = 0; j < k_; ++j) {
      if (j > 0) out += ",";
      out += std::to_string(ea[i * k_ + j]);
    }
    out += "]";
  }
  return out + "]";
}

json MatModRing::element_payload(const Element& a) const {
  const auto& ea = entries_of(a);
  json rows = json::array();
  for (int i = 0; i < k_; ++i) {
    json row = json::array();
    for (int j = 0; j < k_; ++j) row.push_back(std::to_string(ea[i * k_ + j]));
    rows.push_back(row);
  }
  return json{{"entries", rows}};
}

Element MatModRing::parse_payload(const json& doc) const {
  const json& rows = doc.is_array() ? doc : doc.at("entries");
  if (!rows.is_array() || rows.size() != static_cast<std::size_t>(k_))
    throw Error(Errc::ParseError, "matrix payload must have " + std::to_string(k_) + " rows");
  std::vector<int> entries;
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != static_cast<std::size_t>(k_))
      throw Error(Errc::ParseError, "matrix row length mismatch");
    for (const auto& cell : row)
      entries.push_back(cell.is_string() ? std::stoi(cell.get<std::string>())
                                         : cell.get<int>());
  }
  return make(entries);
}

Element MatModRing::element_at(std::size_t i) const {
  if (i >= size_) throw Error(Errc::InvalidBound, "MatZp index out of range");
  std::vector<std::uint8_t> out(static_cast<std::size_t>(k_) * k_);
  for (std::size_t pos = 0; pos < out.size(); ++pos) {
    out[pos] = static_cast<std::uint8_t>(i % p_);
    i /= p_;
  }
  return wrap(std::move(out));
}

std::size_t MatModRing::index_of(const Element& a) const {
  const auto& ea = entries_of(a);
  std::size_t idx = 0;
  std::size_t stride = 1;
  for (std::size_t pos = 0; pos < ea.size(); ++pos) {
    idx += stride * ea[pos];
    stride *= static_cast<std::size_t>(p_);
  }
  return idx;
}

}  // namespace ginv
