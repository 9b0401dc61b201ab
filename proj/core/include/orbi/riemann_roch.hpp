#pragma once

#include <cstdint>

#include "orbi/picard.hpp"

namespace orbi {

/// Kawasaki-Riemann-Roch on an orbi-curve:
///
///   chi(X; L) = (1 - g) + deg L - sum_i age_{x_i}(L).
///
/// The fractional parts cancel for well-formed data; a non-integral result
/// throws DomainError instead of being rounded.
std::int64_t euler_char_sheaf(const OrbiCurve& curve, const OrbiLineBundle& bundle);

/// Real version, with deg L taken on the complex double cover and
/// g the double cover's genus:
///
///   chi(X; L) = (1 - g) + deg L - 2 sum_i age_{x_i}(L) - sum_j age_{y_j}(L).
std::int64_t euler_char_sheaf_real(const RealOrbiCurve& curve,
                                   const RealOrbiLineBundle& bundle);

/// Classical Riemann-Roch on the coarse bundle: deg L + 1 - g. Does not look
/// at the isotropies, so it is an independent check of euler_char_sheaf.
std::int64_t coarse_rr_oracle(const OrbiCurve& curve, const OrbiLineBundle& bundle);

/// dim H^0(X; K^d) for d >= 2 on a hyperbolic curve, where H^1 vanishes:
/// (2d - 1)(g - 1) + sum_i R(d, m_i).
std::int64_t h0_canonical_power(const OrbiCurve& curve, int d);
/// Real dimension of H^0(X; K^d) for a hyperbolic real curve and d >= 2.
std::int64_t h0_canonical_power(const RealOrbiCurve& curve, int d);

/// Complex dimension of the Hitchin base sum_{d=2}^{n} H^0(X; K^d).
std::int64_t hitchin_base_dimension(const OrbiCurve& curve, int n);
/// Real dimension of the Hitchin base of a real curve.
std::int64_t hitchin_base_dimension(const RealOrbiCurve& curve, int n);

}  // namespace orbi
