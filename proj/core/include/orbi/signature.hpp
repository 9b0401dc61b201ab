#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbi/rational.hpp"

namespace orbi {

/// Unvalidated signature fields, as read from user input.
///
/// `genus` is the orientable genus of the coarse surface when `orientable`
/// is set and the number of cross-caps otherwise. Mirror circles are
/// boundary circles of the coarse surface made of mirror points; corner
/// reflectors live on them.
struct SignatureData {
  bool orientable = true;
  int genus = 0;
  int mirror_circles = 0;
  std::vector<int> cone_orders;
  std::vector<int> corner_orders;

  friend bool operator==(const SignatureData&, const SignatureData&) = default;
};

/// A validated closed 2-orbifold signature in canonical form.
///
/// Invariants: all orders are >= 2; corners only occur if there is at least
/// one mirror circle; non-orientable coarse surfaces have genus >= 1; order
/// lists are sorted ascending. Instances are only produced by
/// validate_signature() (and the enumerator), so holding one is proof of
/// validity.
class OrbifoldSignature {
 public:
  bool orientable() const noexcept { return data_.orientable; }
  int genus() const noexcept { return data_.genus; }
  int mirror_circles() const noexcept { return data_.mirror_circles; }
  std::span<const int> cone_orders() const noexcept { return data_.cone_orders; }
  std::span<const int> corner_orders() const noexcept {
    return data_.corner_orders;
  }
  int cone_count() const noexcept {
    return static_cast<int>(data_.cone_orders.size());
  }
  int corner_count() const noexcept {
    return static_cast<int>(data_.corner_orders.size());
  }
  /// Number of cone points of order exactly `order` (k_m).
  int cones_of_order(int order) const noexcept;
  /// Number of corner reflectors of order exactly `order` (l_m).
  int corners_of_order(int order) const noexcept;

  /// Orientable coarse surface without mirror boundary: a complex orbi-curve.
  bool is_orientable_closed() const noexcept {
    return data_.orientable && data_.mirror_circles == 0;
  }

  const SignatureData& data() const noexcept { return data_; }

  friend bool operator==(const OrbifoldSignature&,
                         const OrbifoldSignature&) = default;
  /// Orientable before non-orientable, then genus, mirror count, cone count,
  /// corner count, then the order vectors lexicographically.
  friend std::strong_ordering operator<=>(const OrbifoldSignature& lhs,
                                          const OrbifoldSignature& rhs);

 private:
  friend OrbifoldSignature validate_signature(SignatureData raw);
  friend class SignatureStream;

  SignatureData data_;
};

/// Checks the invariants and returns the canonical (sorted) signature.
/// Throws InvalidInput naming the violated invariant.
OrbifoldSignature validate_signature(SignatureData raw);

OrbifoldSignature sphere(std::vector<int> cone_orders);
/// Disk whose boundary is one mirror circle carrying the given corners.
OrbifoldSignature triangle(std::vector<int> corner_orders);
OrbifoldSignature closed_surface(int genus);

/// chi(X) of the coarse surface, mirror circles counted as boundary.
std::int64_t coarse_euler_characteristic(const OrbifoldSignature& sig) noexcept;

/// chi(X) - sum (1 - 1/m_i) - 1/2 sum (1 - 1/n_j).
Rational orbifold_euler_characteristic(const OrbifoldSignature& sig);

bool is_hyperbolic(const OrbifoldSignature& sig);

/// Throws DomainError unless sig is hyperbolic. `what` names the caller.
void require_hyperbolic(const OrbifoldSignature& sig, std::string_view what);

/// -3 chi(X) + 2k + l. Requires a hyperbolic signature.
std::int64_t teichmuller_dimension(const OrbifoldSignature& sig);

/// Canonical text form, e.g. "o0c:2,3,7", "o0b1d:2,3,7", "n1c:3", "o2".
std::string to_string(const OrbifoldSignature& sig);

/// Parses `<o|n><genus>[b<B>][c:<list>][d:<list>]`. Syntax errors and
/// invariant violations both throw ParseError with the offending offset.
OrbifoldSignature parse_signature(std::string_view text);

}  // namespace orbi
