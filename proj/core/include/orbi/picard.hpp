#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "orbi/rational.hpp"
#include "orbi/signature.hpp"

namespace orbi {

/// Compact analytic orbi-curve: genus of the coarse Riemann surface plus the
/// orders of its cone points (ascending).
class OrbiCurve {
 public:
  /// Throws InvalidInput on negative genus or an order < 2.
  OrbiCurve(int genus, std::vector<int> cone_orders);

  int genus() const noexcept { return genus_; }
  std::span<const int> cone_orders() const noexcept { return cone_orders_; }
  int cone_count() const noexcept { return static_cast<int>(cone_orders_.size()); }

  friend bool operator==(const OrbiCurve&, const OrbiCurve&) = default;

 private:
  int genus_;
  std::vector<int> cone_orders_;
};

/// Orbi-curve defined over R, described through its complex double cover:
/// each cone order is a pair of cone points swapped by the real structure,
/// each dihedral order a single cone point fixed by it.
class RealOrbiCurve {
 public:
  RealOrbiCurve(int double_cover_genus, std::vector<int> cone_orders,
                std::vector<int> dihedral_orders);

  int double_cover_genus() const noexcept { return genus_; }
  std::span<const int> cone_orders() const noexcept { return cone_orders_; }
  std::span<const int> dihedral_orders() const noexcept {
    return dihedral_orders_;
  }

  friend bool operator==(const RealOrbiCurve&, const RealOrbiCurve&) = default;

 private:
  int genus_;
  std::vector<int> cone_orders_;
  std::vector<int> dihedral_orders_;
};

/// Complex curve of an orientable signature without mirrors.
OrbiCurve curve_of(const OrbifoldSignature& sig);
/// Real curve of a non-orientable or mirrored signature. The double cover
/// genus g+ satisfies 2 - 2g+ = 2 chi(X).
RealOrbiCurve real_curve_of(const OrbifoldSignature& sig);

/// 2 - 2g - sum (1 - 1/m_i).
Rational orbifold_euler_characteristic(const OrbiCurve& curve);
/// (1 - g+) - sum (1 - 1/m_i) - 1/2 sum (1 - 1/n_j): half the double cover's.
Rational orbifold_euler_characteristic(const RealOrbiCurve& curve);

/// Complex double cover: every cone order twice, every dihedral order once.
OrbiCurve double_cover_curve(const RealOrbiCurve& curve);

/// Orbifold line bundle in its normalized coarse decomposition
///   p^* L (x) O( sum a_i x_i ),  0 <= a_i < m_i,
/// where coarse_degree = deg L and isotropies[i] = a_i is aligned with the
/// curve's cone list.
struct OrbiLineBundle {
  std::int64_t coarse_degree = 0;
  std::vector<int> isotropies;

  friend bool operator==(const OrbiLineBundle&, const OrbiLineBundle&) = default;
};

/// Throws InvalidInput unless the isotropies match the curve's cone points
/// and each lies in [0, m_i).
void check_aligned(const OrbiCurve& curve, const OrbiLineBundle& bundle);

OrbiLineBundle trivial_bundle(const OrbiCurve& curve);

/// a_i / m_i.
Rational age(const OrbiCurve& curve, const OrbiLineBundle& bundle,
             std::size_t cone_index);
/// deg L + sum a_i / m_i.
Rational degree(const OrbiCurve& curve, const OrbiLineBundle& bundle);

/// Residues add mod m_i; each wrap-around carries one unit into deg L.
OrbiLineBundle tensor(const OrbiCurve& curve, const OrbiLineBundle& lhs,
                      const OrbiLineBundle& rhs);
OrbiLineBundle dual(const OrbiCurve& curve, const OrbiLineBundle& bundle);

/// K^d: coarse degree d(2g-2) + sum R(d, m_i), isotropy d(m_i - 1) mod m_i.
OrbiLineBundle canonical_power(const OrbiCurve& curve, int d);

/// Real orbifold line bundle: the coarse degree of its complexification and
/// one isotropy per cone pair and per dihedral point.
struct RealOrbiLineBundle {
  std::int64_t coarse_degree = 0;
  std::vector<int> cone_isotropies;
  std::vector<int> dihedral_isotropies;

  friend bool operator==(const RealOrbiLineBundle&,
                         const RealOrbiLineBundle&) = default;
};

void check_aligned(const RealOrbiCurve& curve, const RealOrbiLineBundle& bundle);

/// Degree of the complexified bundle: deg L+ + 2 sum a_i/m_i + sum b_j/n_j.
Rational degree(const RealOrbiCurve& curve, const RealOrbiLineBundle& bundle);

OrbiLineBundle complexify(const RealOrbiCurve& curve,
                          const RealOrbiLineBundle& bundle);

RealOrbiLineBundle canonical_power(const RealOrbiCurve& curve, int d);

}  // namespace orbi
