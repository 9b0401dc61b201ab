#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbi/error.hpp"
#include "orbi/hitchin.hpp"
#include "orbi/riemann_roch.hpp"

using namespace orbi;

namespace {

const OrbiCurve k237(0, {2, 3, 7});

}  // namespace

TEST_CASE("Euler characteristics of O, K and K^2") {
  for (int g = 0; g <= 5; ++g) {
    for (const auto& cones : {std::vector<int>{}, std::vector<int>{2, 3, 7},
                              std::vector<int>{5, 5, 12, 12}}) {
      const OrbiCurve c(g, cones);
      const auto k = static_cast<std::int64_t>(cones.size());
      CHECK(euler_char_sheaf(c, trivial_bundle(c)) == 1 - g);
      CHECK(euler_char_sheaf(c, canonical_power(c, 1)) == g - 1);
      CHECK(euler_char_sheaf(c, canonical_power(c, 2)) == 3 * (g - 1) + k);
    }
  }
}

TEST_CASE("real Euler characteristics") {
  const RealOrbiCurve tri(0, {}, {2, 3, 7});
  CHECK(euler_char_sheaf_real(tri, canonical_power(tri, 2)) == 0);
  CHECK(euler_char_sheaf_real(tri, canonical_power(tri, 0)) == 1);
  const RealOrbiCurve mixed(3, {2, 5}, {4});
  CHECK(euler_char_sheaf_real(mixed, canonical_power(mixed, 2)) == 3 * (3 - 1) + 2 * 2 + 1);
  CHECK(euler_char_sheaf_real(mixed, canonical_power(mixed, 0)) == 1 - 3);
}

TEST_CASE("misaligned bundles are rejected") {
  CHECK_THROWS_AS(euler_char_sheaf(k237, OrbiLineBundle{0, {1, 1}}), InvalidInput);
  CHECK_THROWS_AS(euler_char_sheaf_real(RealOrbiCurve(0, {3}, {}),
                                        RealOrbiLineBundle{0, {}, {}}),
                  InvalidInput);
}

TEST_CASE("h0 of canonical powers") {
  CHECK(h0_canonical_power(k237, 6) == 1);
  CHECK(h0_canonical_power(k237, 2) == 0);
  CHECK(h0_canonical_power(OrbiCurve(3, {}), 2) == 3 * 3 - 3);
  CHECK_THROWS_AS(h0_canonical_power(k237, 1), DomainError);
  CHECK_THROWS_AS(h0_canonical_power(OrbiCurve(0, {2, 3, 6}), 2), DomainError);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const OrbiCurve c(static_cast<int>(rng() % 5),
                      oracle::random_orders(rng, static_cast<int>(rng() % 6), 12));
    if (orbifold_euler_characteristic(c) >= Rational(0)) continue;
    for (int d = 2; d <= 8; ++d) {
      std::int64_t expected = (2 * d - 1) * (c.genus() - 1);
      for (int m : c.cone_orders()) expected += oracle::r_by_search(d, m);
      CHECK(h0_canonical_power(c, d) == expected);
    }
  }
}

TEST_CASE("coarse Riemann-Roch oracle agrees with the orbifold formula") {
  const auto k2 = canonical_power(k237, 2);
  CHECK(k2.coarse_degree == -1);
  CHECK(coarse_rr_oracle(k237, k2) == 0);
  CHECK(euler_char_sheaf(k237, k2) == 0);
  CHECK(coarse_rr_oracle(OrbiCurve(4, {}), OrbiLineBundle{0, {}}) == -3);

  std::mt19937_64 rng(2024);
  for (int i = 0; i < 100; ++i) {
    const OrbiCurve c(static_cast<int>(rng() % 6),
                      oracle::random_orders(rng, static_cast<int>(rng() % 7), 12));
    OrbiLineBundle l{std::uniform_int_distribution<std::int64_t>(-20, 20)(rng), {}};
    for (int m : c.cone_orders()) l.isotropies.push_back(static_cast<int>(rng() % m));
    CHECK(euler_char_sheaf(c, l) == coarse_rr_oracle(c, l));
  }
}

TEST_CASE("Hitchin base dimensions") {
  CHECK(hitchin_base_dimension(k237, 6) == 1);
  CHECK(hitchin_base_dimension(RealOrbiCurve(0, {}, {2, 3, 7}), 6) == 1);
  CHECK(hitchin_base_dimension(OrbiCurve(3, {}), 6) == 70);
  CHECK_THROWS_AS(hitchin_base_dimension(k237, 1), DomainError);
}

TEST_CASE("twice the complex base dimension is the Hitchin dimension") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const auto sig = validate_signature(
        {true, static_cast<int>(rng() % 4), 0,
         oracle::random_orders(rng, static_cast<int>(rng() % 6), 12), {}});
    if (!is_hyperbolic(sig)) continue;
    for (int n = 2; n <= 7; ++n) {
      CHECK(2 * hitchin_base_dimension(curve_of(sig), n) == hitchin_dimension_pgl(sig, n));
    }
  }
}

TEST_CASE("real base dimension is the Hitchin dimension of the real orbifold") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 300; ++i) {
    const bool orientable = rng() % 2 == 0;
    const int mirrors = static_cast<int>(rng() % 3) + (orientable ? 1 : 0);
    const auto sig = validate_signature(
        {orientable, static_cast<int>(rng() % 3) + (orientable ? 0 : 1), mirrors,
         oracle::random_orders(rng, static_cast<int>(rng() % 4), 12),
         mirrors > 0 ? oracle::random_orders(rng, static_cast<int>(rng() % 4), 12)
                     : std::vector<int>{}});
    if (!is_hyperbolic(sig)) continue;
    const auto real = real_curve_of(sig);
    CHECK(orbifold_euler_characteristic(real) == orbifold_euler_characteristic(sig));
    for (int n = 2; n <= 7; ++n) {
      CHECK(hitchin_base_dimension(real, n) == hitchin_dimension_pgl(sig, n));
    }
  }
}
