#include "orbi/hitchin.hpp"

#include <algorithm>
#include <charconv>

#include "orbi/error.hpp"

namespace orbi {

namespace {

// floor(d(m-1)/m) without the domain check; valid for every d >= 0.
constexpr std::int64_t r_unchecked(std::int64_t d, std::int64_t m) {
  if (d >= 1 && d <= m) return d - 1;
  return d - (d + m - 1) / m;
}

// 2 sum_i R(d, m_i) + sum_j R(d, n_j)
std::int64_t singular_correction(const OrbifoldSignature& sig, int d) {
  std::int64_t total = 0;
  for (int m : sig.cone_orders()) total += 2 * r_unchecked(d, m);
  for (int n : sig.corner_orders()) total += r_unchecked(d, n);
  return total;
}

}  // namespace

std::int64_t r_value(int d, int m) {
  if (d < 2 || m < 2) {
    throw DomainError("R(d, m) needs d >= 2 and m >= 2, got R(" +
                      std::to_string(d) + ", " + std::to_string(m) + ")");
  }
  return r_unchecked(d, m);
}

std::int64_t hitchin_dimension_pgl(const OrbifoldSignature& sig, int n) {
  if (n < 2) throw DomainError("PGL(n) Hitchin dimension needs n >= 2");
  require_hyperbolic(sig, "hitchin_dimension_pgl");
  const std::int64_t rank_term = std::int64_t{n} * n - 1;
  std::int64_t dim = -rank_term * coarse_euler_characteristic(sig);
  for (int d = 2; d <= n; ++d) dim += singular_correction(sig, d);
  return dim;
}

std::int64_t choi_goldman_dimension(const OrbifoldSignature& sig) {
  require_hyperbolic(sig, "choi_goldman_dimension");
  const std::int64_t k = sig.cone_count();
  const std::int64_t l = sig.corner_count();
  return -8 * coarse_euler_characteristic(sig) +
         (6 * k - 2 * sig.cones_of_order(2)) +
         (3 * l - sig.corners_of_order(2));
}

std::int64_t pgl4_dimension(const OrbifoldSignature& sig) {
  require_hyperbolic(sig, "pgl4_dimension");
  const std::int64_t k = sig.cone_count();
  const std::int64_t l = sig.corner_count();
  return -15 * coarse_euler_characteristic(sig) +
         (12 * k - 4 * sig.cones_of_order(2) - 2 * sig.cones_of_order(3)) +
         (6 * l - 2 * sig.corners_of_order(2) - sig.corners_of_order(3));
}

ExponentProfile make_profile(std::string label, std::vector<int> exponents,
                             std::int64_t group_dimension) {
  if (exponents.empty()) {
    throw InvalidInput("exponent profile '" + label + "' has no exponents");
  }
  std::int64_t expected = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] < 1) {
      throw InvalidInput("exponent profile '" + label +
                         "' has a non-positive exponent");
    }
    if (i > 0 && exponents[i] < exponents[i - 1]) {
      throw InvalidInput("exponent profile '" + label +
                         "' is not in ascending order");
    }
    expected += 2 * std::int64_t{exponents[i]} + 1;
  }
  if (group_dimension != expected) {
    throw InvalidInput("exponent profile '" + label + "': group dimension " +
                       std::to_string(group_dimension) +
                       " != sum(2e+1) = " + std::to_string(expected));
  }
  return {std::move(label), std::move(exponents), group_dimension};
}

ExponentProfile make_profile(std::string label, std::vector<int> exponents) {
  std::sort(exponents.begin(), exponents.end());
  std::int64_t dim = 0;
  for (int e : exponents) dim += 2 * std::int64_t{e} + 1;
  return make_profile(std::move(label), std::move(exponents), dim);
}

ExponentProfile lie_type_profile(std::string_view type) {
  auto bad = [&]() {
    return InvalidInput("unknown Lie type '" + std::string(type) +
                        "' (expected A<r>, B<r>, C<r>, D<r> or G2)");
  };
  if (type.size() < 2) throw bad();
  const char family = type.front();
  int rank = 0;
  auto digits = type.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), rank);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) throw bad();

  std::vector<int> exponents;
  switch (family) {
    case 'A':
      if (rank < 1) throw bad();
      for (int e = 1; e <= rank; ++e) exponents.push_back(e);
      break;
    case 'B':
    case 'C':
      if (rank < 2) throw bad();
      for (int i = 1; i <= rank; ++i) exponents.push_back(2 * i - 1);
      break;
    case 'D':
      if (rank < 4) throw bad();
      for (int i = 1; i < rank; ++i) exponents.push_back(2 * i - 1);
      exponents.push_back(rank - 1);
      break;
    case 'G':
      if (rank != 2) throw bad();
      exponents = {1, 5};
      break;
    default:
      throw bad();
  }
  return make_profile(std::string(type), std::move(exponents));
}

std::int64_t hitchin_dimension_exponents(const OrbifoldSignature& sig,
                                         const ExponentProfile& profile) {
  // Re-validate: the struct is an aggregate and may have been built by hand.
  make_profile(profile.label, profile.exponents, profile.group_dimension);
  require_hyperbolic(sig, "hitchin_dimension_exponents");
  std::int64_t dim = -profile.group_dimension * coarse_euler_characteristic(sig);
  for (int e : profile.exponents) dim += singular_correction(sig, e + 1);
  return dim;
}

}  // namespace orbi
