#include "orbi/covers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>

#include "orbi/error.hpp"

namespace orbi {

namespace {

void check_arity(const OrbifoldSignature& sig, const PermutationAction& action) {
  auto expect = [](std::size_t got, std::size_t want, const char* what) {
    if (got != want) {
      throw InvalidInput(std::string("action has ") + std::to_string(got) +
                         " '" + what + "' permutations, signature needs " +
                         std::to_string(want));
    }
  };
  if (action.degree == 0) throw InvalidInput("action degree must be positive");
  expect(action.a.size(), static_cast<std::size_t>(sig.genus()), "a");
  expect(action.b.size(), static_cast<std::size_t>(sig.genus()), "b");
  expect(action.c.size(), static_cast<std::size_t>(sig.cone_count()), "c");
  for (const auto* list : {&action.a, &action.b, &action.c}) {
    for (const auto& p : *list) {
      if (p.degree() != action.degree) {
        throw InvalidInput("permutation on " + std::to_string(p.degree()) +
                           " points in a degree-" +
                           std::to_string(action.degree) + " action");
      }
    }
  }
}

}  // namespace

CheckedAction validate_action(const OrbifoldSignature& sig,
                              PermutationAction action) {
  if (!sig.is_orientable_closed()) {
    throw DomainError("permutation covers need an orientable signature "
                      "without mirrors, got " + to_string(sig));
  }
  check_arity(sig, action);

  for (int j = 0; j < sig.cone_count(); ++j) {
    const int m = sig.cone_orders()[static_cast<std::size_t>(j)];
    if (!action.c[static_cast<std::size_t>(j)].pow(static_cast<std::uint64_t>(m)).is_identity()) {
      throw DomainError("relation violated: c" + std::to_string(j + 1) + "^" +
                        std::to_string(m) + " is not the identity");
    }
  }

  Permutation product = Permutation::identity(action.degree);
  for (std::size_t i = 0; i < action.a.size(); ++i) {
    const auto& a = action.a[i];
    const auto& b = action.b[i];
    product = product.then(a).then(b).then(a.inverse()).then(b.inverse());
  }
  for (const auto& c : action.c) product = product.then(c);
  if (!product.is_identity()) {
    throw DomainError("relation violated: [a1,b1]...[ag,bg] c1...ck "
                      "is not the identity");
  }

  std::vector<Permutation> generators;
  for (const auto* list : {&action.a, &action.b, &action.c}) {
    generators.insert(generators.end(), list->begin(), list->end());
  }
  if (!is_transitive(action.degree, generators)) {
    throw DomainError("action is not transitive (cover is disconnected)");
  }
  return CheckedAction(sig, std::move(action));
}

OrbifoldSignature lift_signature(const CheckedAction& checked) {
  const auto& sig = checked.base();
  const auto& action = checked.action();
  const auto degree = static_cast<std::int64_t>(action.degree);

  std::vector<int> cones;
  for (std::size_t j = 0; j < action.c.size(); ++j) {
    const int m = sig.cone_orders()[j];
    for (std::size_t len : action.c[j].cycle_lengths()) {
      // len divides m because c_j^m acts trivially.
      const int upstairs = m / static_cast<int>(len);
      if (upstairs > 1) cones.push_back(upstairs);
    }
  }

  // 2 - 2g - sum (1 - 1/m') = N chi(base)
  Rational twice_genus = Rational(2) - Rational(degree) * orbifold_euler_characteristic(sig);
  for (int m : cones) twice_genus -= Rational(m - 1, m);
  if (!twice_genus.is_integer() || twice_genus.numerator() < 0 ||
      twice_genus.numerator() % 2 != 0) {
    throw DomainError("cover genus 2g = " + twice_genus.to_string() +
                      " is not a non-negative even integer");
  }
  return validate_signature(
      {true, static_cast<int>(twice_genus.numerator() / 2), 0, std::move(cones), {}});
}

OrbifoldSignature orientation_double_cover(const OrbifoldSignature& sig) {
  if (sig.is_orientable_closed()) {
    throw DomainError(to_string(sig) +
                      " is already orientable without mirrors");
  }
  std::vector<int> cones;
  cones.reserve(2 * sig.cone_orders().size() + sig.corner_orders().size());
  for (int m : sig.cone_orders()) cones.insert(cones.end(), {m, m});
  cones.insert(cones.end(), sig.corner_orders().begin(), sig.corner_orders().end());
  // chi(X+) = 2 chi(X) = 2 - 2 g+
  const std::int64_t genus = 1 - coarse_euler_characteristic(sig);
  return validate_signature({true, static_cast<int>(genus), 0, std::move(cones), {}});
}

MultiplicativityReport check_multiplicativity(const CheckedAction& checked) {
  MultiplicativityReport report;
  report.degree = checked.degree();
  report.base_chi = orbifold_euler_characteristic(checked.base());
  report.cover_chi = orbifold_euler_characteristic(lift_signature(checked));
  report.expected_cover_chi =
      Rational(static_cast<std::int64_t>(report.degree)) * report.base_chi;
  report.holds = report.cover_chi == report.expected_cover_chi;
  return report;
}

namespace {

// 2x2 matrices over F_7 modulo +-I, normalized so the first nonzero entry
// lies in {1, 2, 3}.
constexpr int kPrime = 7;
using Matrix = std::array<int, 4>;

Matrix normalize(Matrix m) {
  for (int& v : m) v = ((v % kPrime) + kPrime) % kPrime;
  const int lead = m[0] != 0 ? m[0] : m[1];
  if (lead > kPrime / 2) {
    for (int& v : m) v = (kPrime - v) % kPrime;
  }
  return m;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
  return normalize({x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3],
                    x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]});
}

constexpr Matrix kIdentity{1, 0, 0, 1};

int element_order(const Matrix& g) {
  Matrix power = g;
  int order = 1;
  while (power != kIdentity) {
    power = multiply(power, g);
    ++order;
  }
  return order;
}

}  // namespace

PermutationAction klein_quartic_action() {
  std::vector<Matrix> psl;
  for (int a = 0; a < kPrime; ++a)
    for (int b = 0; b < kPrime; ++b)
      for (int c = 0; c < kPrime; ++c)
        for (int d = 0; d < kPrime; ++d) {
          if (((a * d - b * c) % kPrime + kPrime) % kPrime != 1) continue;
          const Matrix m = normalize({a, b, c, d});
          if (std::find(psl.begin(), psl.end(), m) == psl.end()) psl.push_back(m);
        }
  std::sort(psl.begin(), psl.end());

  // First (x, y) in sorted order with |x| = 2, |y| = 3, |xy| = 7. No proper
  // subgroup of PSL(2,7) has elements of orders 2, 3 and 7, so they generate.
  std::optional<std::pair<Matrix, Matrix>> generators;
  for (const auto& x : psl) {
    if (generators || element_order(x) != 2) continue;
    for (const auto& y : psl) {
      if (element_order(y) == 3 && element_order(multiply(x, y)) == 7) {
        generators = {x, y};
        break;
      }
    }
  }
  const auto [x, y] = *generators;
  const Matrix xy = multiply(x, y);
  Matrix xy_inverse = xy;
  for (int i = 0; i < 5; ++i) xy_inverse = multiply(xy_inverse, xy);

  std::map<Matrix, std::uint32_t> index;
  for (std::uint32_t i = 0; i < psl.size(); ++i) index[psl[i]] = i;

  auto right_multiplication = [&](const Matrix& g) {
    std::vector<std::uint32_t> images(psl.size());
    for (std::size_t i = 0; i < psl.size(); ++i) {
      images[i] = index.at(multiply(psl[i], g));
    }
    return Permutation(std::move(images));
  };

  PermutationAction action;
  action.degree = psl.size();
  action.c = {right_multiplication(x), right_multiplication(y),
              right_multiplication(xy_inverse)};
  return action;
}

}  // namespace orbi
