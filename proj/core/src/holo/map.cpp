#include "hyperfront/holo/map.hpp"

#include <bit>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace hyperfront::holo {

namespace {

struct PointKey {
  std::uint64_t re;
  std::uint64_t im;
  bool operator==(const PointKey&) const = default;
};

struct PointKeyHash {
  std::size_t operator()(const PointKey& k) const noexcept {
    return std::hash<std::uint64_t>{}(k.re * 0x9E3779B97F4A7C15ULL ^ k.im);
  }
};

// Memo of primitive values keyed by the exact bit pattern of z. The value
// stored for a key is a pure function of z, so lookups are
// indistinguishable from recomputation.
class PrimitiveCache {
 public:
  static constexpr std::size_t kCapacity = 1U << 16;

  bool find(Complex z, Complex& out) const {
    std::shared_lock lock(mutex_);
    auto it = values_.find(key(z));
    if (it == values_.end()) return false;
    out = it->second;
    return true;
  }

  void insert(Complex z, Complex value) {
    std::unique_lock lock(mutex_);
    if (values_.size() < kCapacity) values_.emplace(key(z), value);
  }

 private:
  static PointKey key(Complex z) {
    return {std::bit_cast<std::uint64_t>(z.real()), std::bit_cast<std::uint64_t>(z.imag())};
  }

  mutable std::shared_mutex mutex_;
  std::unordered_map<PointKey, Complex, PointKeyHash> values_;
};

}  // namespace

struct Map::Impl {
  JetFn fn;
  bool primitive = false;
};

Map Map::from_expr(HoloExpr f) {
  auto impl = std::make_shared<Impl>();
  impl->fn = [f = std::move(f)](Complex z) { return eval_jet(f, z); };
  return Map(std::move(impl));
}

Map Map::primitive_of(ComplexFn integrand, double tol) {
  auto cache = std::make_shared<PrimitiveCache>();
  auto impl = std::make_shared<Impl>();
  impl->primitive = true;
  impl->fn = [integrand = std::move(integrand), tol, cache](Complex z) {
    Complex value;
    if (!cache->find(z, value)) {
      value = primitive(integrand, z, tol);
      cache->insert(z, value);
    }
    return Jet{value, integrand(z)};
  };
  return Map(std::move(impl));
}

Map Map::from_jet_fn(JetFn fn) {
  auto impl = std::make_shared<Impl>();
  impl->fn = std::move(fn);
  return Map(std::move(impl));
}

Map Map::constant(Complex c) {
  return from_jet_fn([c](Complex) { return Jet{c, Complex{}}; });
}

Jet Map::jet(Complex z) const { return impl_->fn(z); }

bool Map::is_primitive() const noexcept { return impl_->primitive; }

}  // namespace hyperfront::holo
