#include "orbi/picard.hpp"

#include <algorithm>
#include <numeric>

#include "orbi/error.hpp"

namespace orbi {

namespace {

void check_orders(std::span<const int> orders, const char* what) {
  for (int m : orders) {
    if (m < 2) {
      throw InvalidInput(std::string(what) + " order " + std::to_string(m) +
                         " < 2");
    }
  }
}

void check_residues(std::span<const int> orders, std::span<const int> residues,
                    const char* what) {
  if (orders.size() != residues.size()) {
    throw InvalidInput(std::string("misaligned bundle: ") + what + " has " +
                       std::to_string(residues.size()) + " isotropies for " +
                       std::to_string(orders.size()) + " points");
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (residues[i] < 0 || residues[i] >= orders[i]) {
      throw InvalidInput(std::string("misaligned bundle: ") + what +
                         " isotropy " + std::to_string(residues[i]) +
                         " outside [0, " + std::to_string(orders[i]) + ")");
    }
  }
}

// sum_i a_i / m_i over a common denominator.
Rational residue_sum(std::span<const int> orders, std::span<const int> residues) {
  std::int64_t den = 1;
  for (int m : orders) den = std::lcm(den, std::int64_t{m});
  std::int64_t num = 0;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    num += residues[i] * (den / orders[i]);
  }
  return Rational(num, den);
}

std::int64_t floor_fraction(std::int64_t d, std::int64_t m) {
  return d * (m - 1) / m;
}

}  // namespace

OrbiCurve::OrbiCurve(int genus, std::vector<int> cone_orders)
    : genus_(genus), cone_orders_(std::move(cone_orders)) {
  if (genus_ < 0) throw InvalidInput("curve genus must be non-negative");
  check_orders(cone_orders_, "cone");
  std::sort(cone_orders_.begin(), cone_orders_.end());
}

RealOrbiCurve::RealOrbiCurve(int double_cover_genus,
                             std::vector<int> cone_orders,
                             std::vector<int> dihedral_orders)
    : genus_(double_cover_genus),
      cone_orders_(std::move(cone_orders)),
      dihedral_orders_(std::move(dihedral_orders)) {
  if (genus_ < 0) throw InvalidInput("double cover genus must be non-negative");
  check_orders(cone_orders_, "cone");
  check_orders(dihedral_orders_, "dihedral");
  std::sort(cone_orders_.begin(), cone_orders_.end());
  std::sort(dihedral_orders_.begin(), dihedral_orders_.end());
}

OrbiCurve curve_of(const OrbifoldSignature& sig) {
  if (!sig.is_orientable_closed()) {
    throw DomainError(to_string(sig) +
                      " has mirrors or is non-orientable; use real_curve_of");
  }
  return OrbiCurve(sig.genus(), sig.data().cone_orders);
}

RealOrbiCurve real_curve_of(const OrbifoldSignature& sig) {
  if (sig.is_orientable_closed()) {
    throw DomainError(to_string(sig) +
                      " is orientable without mirrors; use curve_of");
  }
  // chi(X) <= 1 here, so the genus is a non-negative integer.
  const std::int64_t genus = 1 - coarse_euler_characteristic(sig);
  return RealOrbiCurve(static_cast<int>(genus), sig.data().cone_orders,
                       sig.data().corner_orders);
}

Rational orbifold_euler_characteristic(const OrbiCurve& curve) {
  Rational chi(2 - 2 * std::int64_t{curve.genus()});
  for (int m : curve.cone_orders()) chi -= Rational(m - 1, m);
  return chi;
}

Rational orbifold_euler_characteristic(const RealOrbiCurve& curve) {
  Rational chi(1 - std::int64_t{curve.double_cover_genus()});
  for (int m : curve.cone_orders()) chi -= Rational(m - 1, m);
  for (int n : curve.dihedral_orders()) chi -= Rational(n - 1, 2 * n);
  return chi;
}

OrbiCurve double_cover_curve(const RealOrbiCurve& curve) {
  std::vector<int> cones;
  for (int m : curve.cone_orders()) cones.insert(cones.end(), {m, m});
  cones.insert(cones.end(), curve.dihedral_orders().begin(),
               curve.dihedral_orders().end());
  return OrbiCurve(curve.double_cover_genus(), std::move(cones));
}

void check_aligned(const OrbiCurve& curve, const OrbiLineBundle& bundle) {
  check_residues(curve.cone_orders(), bundle.isotropies, "cone");
}

OrbiLineBundle trivial_bundle(const OrbiCurve& curve) {
  return {0, std::vector<int>(curve.cone_orders().size(), 0)};
}

Rational age(const OrbiCurve& curve, const OrbiLineBundle& bundle,
             std::size_t cone_index) {
  check_aligned(curve, bundle);
  if (cone_index >= bundle.isotropies.size()) {
    throw InvalidInput("cone index " + std::to_string(cone_index) +
                       " out of range");
  }
  return Rational(bundle.isotropies[cone_index],
                  curve.cone_orders()[cone_index]);
}

Rational degree(const OrbiCurve& curve, const OrbiLineBundle& bundle) {
  check_aligned(curve, bundle);
  return Rational(bundle.coarse_degree) +
         residue_sum(curve.cone_orders(), bundle.isotropies);
}

OrbiLineBundle tensor(const OrbiCurve& curve, const OrbiLineBundle& lhs,
                      const OrbiLineBundle& rhs) {
  check_aligned(curve, lhs);
  check_aligned(curve, rhs);
  OrbiLineBundle out{lhs.coarse_degree + rhs.coarse_degree, {}};
  out.isotropies.reserve(lhs.isotropies.size());
  for (std::size_t i = 0; i < lhs.isotropies.size(); ++i) {
    const int m = curve.cone_orders()[i];
    int a = lhs.isotropies[i] + rhs.isotropies[i];
    if (a >= m) {
      a -= m;
      ++out.coarse_degree;
    }
    out.isotropies.push_back(a);
  }
  return out;
}

OrbiLineBundle dual(const OrbiCurve& curve, const OrbiLineBundle& bundle) {
  check_aligned(curve, bundle);
  OrbiLineBundle out{-bundle.coarse_degree, {}};
  out.isotropies.reserve(bundle.isotropies.size());
  for (std::size_t i = 0; i < bundle.isotropies.size(); ++i) {
    const int a = bundle.isotropies[i];
    if (a > 0) --out.coarse_degree;
    out.isotropies.push_back(a == 0 ? 0 : curve.cone_orders()[i] - a);
  }
  return out;
}

OrbiLineBundle canonical_power(const OrbiCurve& curve, int d) {
  if (d < 0) throw DomainError("canonical power needs d >= 0");
  OrbiLineBundle out{std::int64_t{d} * (2 * std::int64_t{curve.genus()} - 2), {}};
  out.isotropies.reserve(curve.cone_orders().size());
  for (int m : curve.cone_orders()) {
    out.coarse_degree += floor_fraction(d, m);
    out.isotropies.push_back(static_cast<int>(std::int64_t{d} * (m - 1) % m));
  }
  return out;
}

void check_aligned(const RealOrbiCurve& curve, const RealOrbiLineBundle& bundle) {
  check_residues(curve.cone_orders(), bundle.cone_isotropies, "cone");
  check_residues(curve.dihedral_orders(), bundle.dihedral_isotropies, "dihedral");
}

Rational degree(const RealOrbiCurve& curve, const RealOrbiLineBundle& bundle) {
  check_aligned(curve, bundle);
  return Rational(bundle.coarse_degree) +
         Rational(2) * residue_sum(curve.cone_orders(), bundle.cone_isotropies) +
         residue_sum(curve.dihedral_orders(), bundle.dihedral_isotropies);
}

OrbiLineBundle complexify(const RealOrbiCurve& curve,
                          const RealOrbiLineBundle& bundle) {
  check_aligned(curve, bundle);
  // Pair each isotropy with its order and sort alongside double_cover_curve.
  std::vector<std::pair<int, int>> points;
  for (std::size_t i = 0; i < bundle.cone_isotropies.size(); ++i) {
    const std::pair<int, int> p{curve.cone_orders()[i], bundle.cone_isotropies[i]};
    points.insert(points.end(), {p, p});
  }
  for (std::size_t j = 0; j < bundle.dihedral_isotropies.size(); ++j) {
    points.emplace_back(curve.dihedral_orders()[j], bundle.dihedral_isotropies[j]);
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  OrbiLineBundle out{bundle.coarse_degree, {}};
  out.isotropies.reserve(points.size());
  for (const auto& [order, residue] : points) out.isotropies.push_back(residue);
  return out;
}

RealOrbiLineBundle canonical_power(const RealOrbiCurve& curve, int d) {
  if (d < 0) throw DomainError("canonical power needs d >= 0");
  RealOrbiLineBundle out{
      std::int64_t{d} * (2 * std::int64_t{curve.double_cover_genus()} - 2), {}, {}};
  for (int m : curve.cone_orders()) {
    out.coarse_degree += 2 * floor_fraction(d, m);
    out.cone_isotropies.push_back(static_cast<int>(std::int64_t{d} * (m - 1) % m));
  }
  for (int n : curve.dihedral_orders()) {
    out.coarse_degree += floor_fraction(d, n);
    out.dihedral_isotropies.push_back(static_cast<int>(std::int64_t{d} * (n - 1) % n));
  }
  return out;
}

}  // namespace orbi
