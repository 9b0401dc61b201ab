#include "orbi/riemann_roch.hpp"

#include <numeric>

#include "orbi/error.hpp"

namespace orbi {

namespace {

std::int64_t integral(const Rational& chi) {
  if (!chi.is_integer()) {
    throw DomainError("non-integral sheaf Euler characteristic " +
                      chi.to_string() + " (corrupted bundle data)");
  }
  return chi.numerator();
}

template <typename Curve>
void require_vanishing_range(const Curve& curve, int d, const char* what) {
  if (d < 2) throw DomainError(std::string(what) + " needs d >= 2");
  if (orbifold_euler_characteristic(curve).sign() >= 0) {
    throw DomainError(std::string(what) + " needs a hyperbolic curve");
  }
}

// Sum of fractions a/m kept over a running common denominator; falls back
// to reduced rational arithmetic if the denominator would overflow.
class AgeSum {
 public:
  void add(std::int64_t a, std::int64_t m) {
    if (!exact_) {
      fallback_ += Rational(a, m);
      return;
    }
    const std::int64_t g = std::gcd(den_, m);
    std::int64_t den = 0;
    std::int64_t scaled = 0;
    std::int64_t term = 0;
    if (__builtin_mul_overflow(den_, m / g, &den) ||
        __builtin_mul_overflow(num_, m / g, &scaled) ||
        __builtin_mul_overflow(a, den_ / g, &term) ||
        __builtin_add_overflow(scaled, term, &scaled)) {
      exact_ = false;
      fallback_ = Rational(num_, den_) + Rational(a, m);
      return;
    }
    num_ = scaled;
    den_ = den;
  }

  Rational total() const { return exact_ ? Rational(num_, den_) : fallback_; }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  bool exact_ = true;
  Rational fallback_;
};

}  // namespace

std::int64_t euler_char_sheaf(const OrbiCurve& curve,
                              const OrbiLineBundle& bundle) {
  check_aligned(curve, bundle);
  AgeSum ages;
  for (std::size_t i = 0; i < bundle.isotropies.size(); ++i) {
    ages.add(bundle.isotropies[i], curve.cone_orders()[i]);
  }
  const Rational chi = Rational(1 - std::int64_t{curve.genus()}) +
                       degree(curve, bundle) - ages.total();
  return integral(chi);
}

std::int64_t euler_char_sheaf_real(const RealOrbiCurve& curve,
                                   const RealOrbiLineBundle& bundle) {
  check_aligned(curve, bundle);
  AgeSum ages;
  for (std::size_t i = 0; i < bundle.cone_isotropies.size(); ++i) {
    ages.add(2 * std::int64_t{bundle.cone_isotropies[i]}, curve.cone_orders()[i]);
  }
  for (std::size_t j = 0; j < bundle.dihedral_isotropies.size(); ++j) {
    ages.add(bundle.dihedral_isotropies[j], curve.dihedral_orders()[j]);
  }
  const Rational chi = Rational(1 - std::int64_t{curve.double_cover_genus()}) +
                       degree(curve, bundle) - ages.total();
  return integral(chi);
}

std::int64_t coarse_rr_oracle(const OrbiCurve& curve,
                              const OrbiLineBundle& bundle) {
  check_aligned(curve, bundle);
  return bundle.coarse_degree + 1 - curve.genus();
}

std::int64_t h0_canonical_power(const OrbiCurve& curve, int d) {
  require_vanishing_range(curve, d, "h0_canonical_power");
  // deg K^d = d deg K > deg K, so H^1 = 0 and h^0 = chi.
  return euler_char_sheaf(curve, canonical_power(curve, d));
}

std::int64_t h0_canonical_power(const RealOrbiCurve& curve, int d) {
  require_vanishing_range(curve, d, "h0_canonical_power");
  return euler_char_sheaf_real(curve, canonical_power(curve, d));
}

std::int64_t hitchin_base_dimension(const OrbiCurve& curve, int n) {
  require_vanishing_range(curve, n, "hitchin_base_dimension");
  std::int64_t dim = 0;
  for (int d = 2; d <= n; ++d) dim += h0_canonical_power(curve, d);
  return dim;
}

std::int64_t hitchin_base_dimension(const RealOrbiCurve& curve, int n) {
  require_vanishing_range(curve, n, "hitchin_base_dimension");
  std::int64_t dim = 0;
  for (int d = 2; d <= n; ++d) dim += h0_canonical_power(curve, d);
  return dim;
}

}  // namespace orbi
