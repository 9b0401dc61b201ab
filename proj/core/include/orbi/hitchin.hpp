#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbi/signature.hpp"

namespace orbi {

/// floor(d - d/m) = floor(d(m-1)/m): the number of degree-d differentials an
/// order-m singular point contributes. Requires d >= 2 and m >= 2.
std::int64_t r_value(int d, int m);

/// Dimension of the PGL(n, R) Hitchin component of a hyperbolic orbifold:
///
///   -(n^2 - 1) chi(X) + sum_{d=2}^{n} ( 2 sum_i R(d, m_i) + sum_j R(d, n_j) )
///
/// with m_i the cone orders and n_j the corner orders.
std::int64_t hitchin_dimension_pgl(const OrbifoldSignature& sig, int n);

/// Closed form for PGL(3, R): -8 chi(X) + (6k - 2k_2) + (3l - l_2).
std::int64_t choi_goldman_dimension(const OrbifoldSignature& sig);

/// Closed form for PGL(4, R):
/// -15 chi(X) + (12k - 4k_2 - 2k_3) + (6l - 2l_2 - l_3).
std::int64_t pgl4_dimension(const OrbifoldSignature& sig);

/// Exponents of a split real simple Lie group. The degrees of the
/// invariant polynomials (and of the differentials on the Hitchin base) are
/// exponent + 1, and dim G = sum (2e + 1).
struct ExponentProfile {
  std::string label;
  std::vector<int> exponents;
  std::int64_t group_dimension = 0;
};

/// Validates the profile: exponents positive, ascending, nonempty, and
/// group_dimension == sum (2e + 1). Throws InvalidInput otherwise.
ExponentProfile make_profile(std::string label, std::vector<int> exponents,
                             std::int64_t group_dimension);
/// Profile whose dimension is derived from the exponents.
ExponentProfile make_profile(std::string label, std::vector<int> exponents);

/// Built-in table: "A<r>" (r >= 1), "B<r>"/"C<r>" (r >= 2), "D<r>" (r >= 4),
/// and "G2". A_{n-1} is the profile of PGL(n, R).
ExponentProfile lie_type_profile(std::string_view type);

/// Generalization of the PGL(n) count to an arbitrary exponent profile:
///
///   -chi(X) dim G + sum_e ( 2 sum_i R(e+1, m_i) + sum_j R(e+1, n_j) ).
///
/// For the A series this is exactly hitchin_dimension_pgl. For the other
/// types it extrapolates the Hitchin-base pattern (one summand per degree of
/// an invariant polynomial); only the PGL(n) case is an established result.
std::int64_t hitchin_dimension_exponents(const OrbifoldSignature& sig,
                                         const ExponentProfile& profile);

}  // namespace orbi
