#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbi/error.hpp"
#include "orbi/picard.hpp"

using namespace orbi;

namespace {

OrbiLineBundle random_bundle(std::mt19937_64& rng, const OrbiCurve& curve) {
  std::uniform_int_distribution<std::int64_t> deg(-20, 20);
  OrbiLineBundle out{deg(rng), {}};
  for (int m : curve.cone_orders()) {
    out.isotropies.push_back(std::uniform_int_distribution<int>(0, m - 1)(rng));
  }
  return out;
}

OrbiCurve random_curve(std::mt19937_64& rng) {
  return OrbiCurve(static_cast<int>(rng() % 6),
                   oracle::random_orders(rng, static_cast<int>(rng() % 7), 12));
}

// sum of a_i / m_i, term by term.
Rational age_sum(const OrbiCurve& curve, const OrbiLineBundle& bundle) {
  Rational total;
  for (std::size_t i = 0; i < bundle.isotropies.size(); ++i) {
    total += Rational(bundle.isotropies[i], curve.cone_orders()[i]);
  }
  return total;
}

const OrbiCurve k237(0, {2, 3, 7});

}  // namespace

TEST_CASE("curve construction") {
  CHECK(OrbiCurve(0, {7, 2, 3}) == k237);
  CHECK_THROWS_AS(OrbiCurve(-1, {}), InvalidInput);
  CHECK_THROWS_AS(OrbiCurve(0, {1}), InvalidInput);
  CHECK(curve_of(sphere({2, 3, 7})) == k237);
  CHECK_THROWS_AS(curve_of(triangle({2, 3, 7})), DomainError);
  CHECK(real_curve_of(triangle({2, 3, 7})) == RealOrbiCurve(0, {}, {2, 3, 7}));
  CHECK(real_curve_of(parse_signature("n1c:3")) == RealOrbiCurve(0, {3}, {}));
  CHECK(real_curve_of(parse_signature("n3b1")).double_cover_genus() == 3);
  CHECK_THROWS_AS(real_curve_of(sphere({2, 3, 7})), DomainError);
}

TEST_CASE("ages") {
  for (int m = 2; m <= 12; ++m) {
    const OrbiCurve c(1, {m});
    CHECK(age(c, canonical_power(c, 1), 0) == Rational(m - 1, m));
    CHECK(age(c, trivial_bundle(c), 0) == Rational(0));
  }
  CHECK(age(OrbiCurve(0, {3}), canonical_power(OrbiCurve(0, {3}), 2), 0) == Rational(1, 3));
  CHECK_THROWS_AS(age(k237, trivial_bundle(k237), 3), InvalidInput);
}

TEST_CASE("degrees") {
  CHECK(degree(k237, trivial_bundle(k237)) == Rational(0));
  const OrbiLineBundle canonical{-2, {1, 2, 6}};
  CHECK(canonical_power(k237, 1) == canonical);
  CHECK(degree(k237, canonical) == Rational(1, 42));
  const OrbiCurve genus2(2, {});
  CHECK(degree(genus2, canonical_power(genus2, 1)) == Rational(2));
  CHECK_THROWS_AS(degree(k237, OrbiLineBundle{0, {0, 0}}), InvalidInput);
  CHECK_THROWS_AS(degree(k237, OrbiLineBundle{0, {0, 3, 0}}), InvalidInput);
  CHECK_THROWS_AS(degree(k237, OrbiLineBundle{0, {-1, 0, 0}}), InvalidInput);
}

TEST_CASE("tensor and dual") {
  const auto k = canonical_power(k237, 1);
  const auto k2 = tensor(k237, k, k);
  CHECK(k2 == OrbiLineBundle{-1, {0, 1, 5}});
  CHECK(k2 == canonical_power(k237, 2));
  CHECK(tensor(k237, k, trivial_bundle(k237)) == k);
  CHECK(dual(k237, trivial_bundle(k237)) == trivial_bundle(k237));
  const auto k_dual = dual(k237, k);
  CHECK(k_dual == OrbiLineBundle{-1, {1, 1, 1}});
  CHECK(degree(k237, k_dual) == Rational(-1, 42));
}

TEST_CASE("canonical powers") {
  CHECK(canonical_power(k237, 0) == trivial_bundle(k237));
  const auto k6 = canonical_power(k237, 6);
  CHECK(k6 == OrbiLineBundle{0, {0, 0, 1}});
  CHECK(degree(k237, k6) == Rational(6, 42));
  CHECK_THROWS_AS(canonical_power(k237, -1), DomainError);
}

TEST_CASE("degree is a homomorphism; dual inverts; ages sum to the fractional part") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto curve = random_curve(rng);
    const auto l1 = random_bundle(rng, curve);
    const auto l2 = random_bundle(rng, curve);
    const Rational d1 = Rational(l1.coarse_degree) + age_sum(curve, l1);
    const Rational d2 = Rational(l2.coarse_degree) + age_sum(curve, l2);
    CHECK(degree(curve, l1) == d1);
    CHECK(degree(curve, tensor(curve, l1, l2)) == d1 + d2);
    CHECK(degree(curve, dual(curve, l1)) == -d1);
    CHECK(tensor(curve, l1, dual(curve, l1)) == trivial_bundle(curve));
    CHECK(tensor(curve, l1, l2) == tensor(curve, l2, l1));
    for (std::size_t j = 0; j < l1.isotropies.size(); ++j) {
      const Rational a = age(curve, l1, j);
      CHECK(a >= Rational(0));
      CHECK(a < Rational(1));
    }
  }
}

TEST_CASE("canonical powers: degree law and fold equality") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 100; ++i) {
    const auto curve = random_curve(rng);
    const Rational chi = orbifold_euler_characteristic(curve);
    CHECK(chi == oracle::chi_by_terms(true, curve.genus(), 0,
                                      {curve.cone_orders().begin(), curve.cone_orders().end()},
                                      {}));
    const auto k = canonical_power(curve, 1);
    auto folded = trivial_bundle(curve);
    for (int d = 0; d <= 8; ++d) {
      const auto kd = canonical_power(curve, d);
      CHECK(degree(curve, kd) == Rational(-d) * chi);
      CHECK(kd == folded);
      folded = tensor(curve, folded, k);
    }
  }
}

TEST_CASE("real curves and bundles") {
  const RealOrbiCurve tri(0, {}, {2, 3, 7});
  CHECK(double_cover_curve(tri) == k237);
  CHECK(orbifold_euler_characteristic(tri) == Rational(-1, 84));
  const RealOrbiCurve rp2(0, {3}, {});
  CHECK(double_cover_curve(rp2) == OrbiCurve(0, {3, 3}));

  const auto k2 = canonical_power(tri, 2);
  CHECK(degree(tri, k2) == Rational(1, 21));
  CHECK(complexify(tri, k2) == canonical_power(k237, 2));

  const RealOrbiCurve mixed(2, {4, 2}, {3, 5});
  for (int d = 0; d <= 6; ++d) {
    const auto real = canonical_power(mixed, d);
    const auto cover = double_cover_curve(mixed);
    CHECK(complexify(mixed, real) == canonical_power(cover, d));
    CHECK(degree(mixed, real) == degree(cover, canonical_power(cover, d)));
  }
  CHECK_THROWS_AS(degree(tri, RealOrbiLineBundle{0, {0}, {0, 0, 0}}), InvalidInput);
}
