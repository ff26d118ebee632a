#include "ginv/finite_table.hpp"

#include <map>
#include <mutex>

#include "ginv/parallel.hpp"

namespace ginv {

std::shared_ptr<const FiniteTable> FiniteTable::build(const RingPtr& ring) {
  if (!ring->has(Capability::Enumerable))
    throw Error(Errc::Unsupported, ring->id() + " is not enumerable");
  auto t = std::make_shared<FiniteTable>();
  t->ring_ = ring;
  t->n_ = ring->size();
  const std::size_t n = t->n_;
  if (n > 0xffff) throw Error(Errc::InvalidBound, "ring too large for dense tables");
  t->elems_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) t->elems_.push_back(ring->element_at(i));

  t->mul_.resize(n * n);
  t->add_.resize(n * n);
  t->star_.resize(n);
  t->neg_.resize(n);
  par::for_each_index(n, [&](std::size_t i) {
    for (std::size_t j = 0; j < n; ++j) {
      t->mul_[i * n + j] =
          static_cast<Idx>(ring->index_of(ring->multiply(t->elems_[i], t->elems_[j])));
      t->add_[i * n + j] =
          static_cast<Idx>(ring->index_of(ring->add(t->elems_[i], t->elems_[j])));
    }
    t->star_[i] = static_cast<Idx>(ring->index_of(ring->star(t->elems_[i])));
    t->neg_[i] = static_cast<Idx>(ring->index_of(ring->negate(t->elems_[i])));
  });
  t->zero_ = static_cast<Idx>(ring->index_of(ring->zero()));
  t->one_ = static_cast<Idx>(ring->index_of(ring->one()));

  t->rinv_.assign(n, kNone);
  t->linv_.assign(n, kNone);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (t->mul_[a * n + b] == t->one_) {
        if (t->rinv_[a] == kNone) t->rinv_[a] = static_cast<int>(b);
        if (t->linv_[b] == kNone) t->linv_[b] = static_cast<int>(a);
      }
    }
  for (std::size_t p = 0; p < n; ++p) {
    Idx pi = static_cast<Idx>(p);
    if (t->mul_[p * n + p] == pi && t->star_[p] == pi) t->projections_.push_back(pi);
  }
  return t;
}

std::shared_ptr<const FiniteTable> FiniteTable::cached(const RingPtr& ring) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const FiniteTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(ring->id());
  if (it != cache.end()) return it->second;
  auto t = build(ring);
  cache.emplace(ring->id(), t);
  return t;
}

}  // namespace ginv
