#pragma once

#include <cstdint>
#include <vector>

#include "orbi/permutation.hpp"
#include "orbi/rational.hpp"
#include "orbi/signature.hpp"

namespace orbi {

/// Images of the generators of
///   < a_1, b_1, ..., a_g, b_g, c_1, ..., c_k |
///     [a_1,b_1] ... [a_g,b_g] c_1 ... c_k = 1 = c_1^{m_1} = ... = c_k^{m_k} >
/// in the symmetric group on `degree` points. The c's are aligned with the
/// (sorted) cone orders of the signature the action is paired with.
struct PermutationAction {
  std::size_t degree = 0;
  std::vector<Permutation> a;
  std::vector<Permutation> b;
  std::vector<Permutation> c;
};

/// An action that has passed validate_action for a specific signature.
class CheckedAction {
 public:
  const PermutationAction& action() const noexcept { return action_; }
  const OrbifoldSignature& base() const noexcept { return base_; }
  std::size_t degree() const noexcept { return action_.degree; }

 private:
  friend CheckedAction validate_action(const OrbifoldSignature&,
                                       PermutationAction);
  CheckedAction(OrbifoldSignature base, PermutationAction action)
      : base_(std::move(base)), action_(std::move(action)) {}

  OrbifoldSignature base_;
  PermutationAction action_;
};

/// Verifies that the action defines a connected degree-N orbifold cover:
/// arities match the signature (InvalidInput otherwise), every c_j^{m_j} and
/// the long relation act trivially, and the action is transitive
/// (DomainError otherwise). Only orientable signatures without mirrors.
CheckedAction validate_action(const OrbifoldSignature& sig, PermutationAction action);

/// Signature of the cover: each length-L cycle of c_j gives a cone point of
/// order m_j / L upstairs (dropped when that is 1), and the genus is solved
/// from chi(cover) = N chi(base). Throws DomainError if that genus is not a
/// non-negative integer.
OrbifoldSignature lift_signature(const CheckedAction& checked);

/// Orientable double cover of a non-orientable or mirrored orbifold: cone
/// orders doubled, corner orders become single cone points, chi doubles.
OrbifoldSignature orientation_double_cover(const OrbifoldSignature& sig);

struct MultiplicativityReport {
  Rational base_chi;
  Rational cover_chi;
  /// degree * base_chi
  Rational expected_cover_chi;
  std::size_t degree = 0;
  bool holds = false;
};

/// Compares the cover's orbifold Euler characteristic with N chi(base).
/// A mismatch is reported, not thrown.
MultiplicativityReport check_multiplicativity(const CheckedAction& checked);

/// Regular action of PSL(2, F_7) (order 168) on itself by right
/// multiplication, with c_1, c_2, c_3 of orders 2, 3, 7 and c_1 c_2 c_3 = 1.
/// Pairs with sphere({2, 3, 7}); the cover is the Klein quartic.
PermutationAction klein_quartic_action();

}  // namespace orbi
