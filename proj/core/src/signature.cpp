#include "orbi/signature.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "orbi/error.hpp"

namespace orbi {

int OrbifoldSignature::cones_of_order(int order) const noexcept {
  return static_cast<int>(std::count(data_.cone_orders.begin(),
                                     data_.cone_orders.end(), order));
}

int OrbifoldSignature::corners_of_order(int order) const noexcept {
  return static_cast<int>(std::count(data_.corner_orders.begin(),
                                     data_.corner_orders.end(), order));
}

std::strong_ordering operator<=>(const OrbifoldSignature& lhs,
                                 const OrbifoldSignature& rhs) {
  const auto& a = lhs.data_;
  const auto& b = rhs.data_;
  auto key = [](const SignatureData& d) {
    return std::make_tuple(!d.orientable, d.genus, d.mirror_circles,
                           d.cone_orders.size(), d.corner_orders.size());
  };
  if (auto c = key(a) <=> key(b); c != 0) return c;
  if (auto c = a.cone_orders <=> b.cone_orders; c != 0) return c;
  return a.corner_orders <=> b.corner_orders;
}

OrbifoldSignature validate_signature(SignatureData raw) {
  if (raw.genus < 0) throw InvalidInput("genus must be non-negative");
  if (raw.mirror_circles < 0) {
    throw InvalidInput("mirror circle count must be non-negative");
  }
  if (!raw.orientable && raw.genus < 1) {
    throw InvalidInput("non-orientable surface needs at least one cross-cap");
  }
  for (int m : raw.cone_orders) {
    if (m < 2) throw InvalidInput("cone order " + std::to_string(m) + " < 2");
  }
  for (int n : raw.corner_orders) {
    if (n < 2) throw InvalidInput("corner order " + std::to_string(n) + " < 2");
  }
  if (!raw.corner_orders.empty() && raw.mirror_circles == 0) {
    throw InvalidInput("corner reflectors require a mirror boundary circle");
  }
  std::sort(raw.cone_orders.begin(), raw.cone_orders.end());
  std::sort(raw.corner_orders.begin(), raw.corner_orders.end());
  OrbifoldSignature sig;
  sig.data_ = std::move(raw);
  return sig;
}

OrbifoldSignature sphere(std::vector<int> cone_orders) {
  return validate_signature({true, 0, 0, std::move(cone_orders), {}});
}

OrbifoldSignature triangle(std::vector<int> corner_orders) {
  return validate_signature({true, 0, 1, {}, std::move(corner_orders)});
}

OrbifoldSignature closed_surface(int genus) {
  return validate_signature({true, genus, 0, {}, {}});
}

std::int64_t coarse_euler_characteristic(const OrbifoldSignature& sig) noexcept {
  const std::int64_t handles = sig.orientable() ? 2 * std::int64_t{sig.genus()}
                                                : std::int64_t{sig.genus()};
  return 2 - handles - sig.mirror_circles();
}

namespace {

// 2*chi over the common denominator den = lcm of all orders, so the value
// stays integral until a single final reduction.
std::int64_t twice_chi_scaled(const OrbifoldSignature& sig, std::int64_t& den) {
  den = 1;
  for (int m : sig.cone_orders()) den = std::lcm(den, std::int64_t{m});
  for (int n : sig.corner_orders()) den = std::lcm(den, std::int64_t{n});

  std::int64_t twice = 2 * coarse_euler_characteristic(sig) * den;
  for (int m : sig.cone_orders()) twice -= 2 * (den - den / m);
  for (int n : sig.corner_orders()) twice -= den - den / n;
  return twice;
}

}  // namespace

Rational orbifold_euler_characteristic(const OrbifoldSignature& sig) {
  std::int64_t den = 1;
  const std::int64_t twice = twice_chi_scaled(sig, den);
  return Rational(twice, 2 * den);
}

bool is_hyperbolic(const OrbifoldSignature& sig) {
  // 2 chi = S + T with S = 2 chi(X) - 2k - l integral and 0 <= T <= k + l/2,
  // T = 0 only without cone and corner points. The sign is usually settled
  // by these bounds alone.
  const std::int64_t k = sig.cone_count();
  const std::int64_t l = sig.corner_count();
  const std::int64_t s = 2 * coarse_euler_characteristic(sig) - 2 * k - l;
  if (s >= 0) return false;
  if (-2 * s > 2 * k + l) return true;
  std::int64_t den = 1;
  return twice_chi_scaled(sig, den) < 0;
}

void require_hyperbolic(const OrbifoldSignature& sig, std::string_view what) {
  if (!is_hyperbolic(sig)) {
    throw DomainError(std::string(what) + ": " + to_string(sig) +
                      " is not hyperbolic (orbifold Euler characteristic " +
                      orbifold_euler_characteristic(sig).to_string() + " >= 0)");
  }
}

std::int64_t teichmuller_dimension(const OrbifoldSignature& sig) {
  require_hyperbolic(sig, "teichmuller_dimension");
  return -3 * coarse_euler_characteristic(sig) + 2 * sig.cone_count() +
         sig.corner_count();
}

}  // namespace orbi
