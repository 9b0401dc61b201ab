#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "orbi/enumerate.hpp"
#include "orbi/error.hpp"
#include "orbi/hitchin.hpp"

using namespace orbi;

namespace {

EnumerationBounds spheres(int cones, int max_order) {
  EnumerationBounds b;
  b.cone_points = {cones, cones};
  b.max_order = max_order;
  b.orientability = OrientabilityFilter::orientable_only;
  return b;
}

}  // namespace

TEST_CASE("small sphere family") {
  const auto all = enumerate_signatures(spheres(3, 7));
  const auto has = [&](const OrbifoldSignature& s) {
    return std::find(all.begin(), all.end(), s) != all.end();
  };
  CHECK(has(sphere({2, 3, 7})));
  CHECK(has(sphere({2, 3, 6})));
  std::vector<OrbifoldSignature> hyperbolic;
  for (const auto& s : all) if (is_hyperbolic(s)) hyperbolic.push_back(s);
  CHECK(std::find(hyperbolic.begin(), hyperbolic.end(), sphere({2, 3, 6})) == hyperbolic.end());
  CHECK(std::find(hyperbolic.begin(), hyperbolic.end(), sphere({2, 3, 7})) != hyperbolic.end());
}

TEST_CASE("three-cone spheres with orders <= 9: count matches brute force") {
  CHECK(enumerate_signatures(spheres(3, 9)).size() ==
        static_cast<std::size_t>(oracle::multisets_by_search(3, 2, 9)));
  CHECK(oracle::multisets_by_search(3, 2, 9) == 120);
}

TEST_CASE("empty and degenerate bounds") {
  EnumerationBounds none;
  none.orientability = OrientabilityFilter::non_orientable_only;
  none.genus = {0, 0};
  CHECK(enumerate_signatures(none).empty());

  EnumerationBounds no_orders = spheres(2, 1);
  CHECK(enumerate_signatures(no_orders).empty());

  EnumerationBounds inverted;
  inverted.genus = {2, 1};
  CHECK_THROWS_AS(SignatureStream{inverted}, InvalidInput);
  EnumerationBounds negative;
  negative.cone_points = {-1, 2};
  CHECK_THROWS_AS(enumerate_signatures(negative), InvalidInput);
}

TEST_CASE("stream is sorted, duplicate-free, deterministic and complete") {
  EnumerationBounds b;
  b.genus = {0, 2};
  b.mirror_circles = {0, 2};
  b.cone_points = {0, 2};
  b.corner_points = {0, 2};
  b.max_order = 5;
  const auto first = enumerate_signatures(b);
  CHECK(first == enumerate_signatures(b));
  CHECK(std::is_sorted(first.begin(), first.end()));
  CHECK(std::adjacent_find(first.begin(), first.end()) == first.end());

  // Brute-force count over the same box.
  const std::int64_t cones = oracle::multisets_by_search(0, 2, 5) +
                             oracle::multisets_by_search(1, 2, 5) +
                             oracle::multisets_by_search(2, 2, 5);
  const std::int64_t corners_with_mirrors = cones;  // same shape, 0..2 points
  // orientable: genus 0..2, non-orientable: genus 1..2; mirrors 0 has no corners.
  const std::int64_t per_genus = cones + 2 * cones * corners_with_mirrors;
  CHECK(static_cast<std::int64_t>(first.size()) == (3 + 2) * per_genus);

  for (const auto& s : first) CHECK(validate_signature(s.data()) == s);
}

TEST_CASE("parse_bounds") {
  const auto b = parse_bounds("genus=0..2,mirrors=1,cones=3,corners=0..4,order=100,orient=n");
  CHECK(b.genus.min == 0);
  CHECK(b.genus.max == 2);
  CHECK(b.mirror_circles.min == 1);
  CHECK(b.mirror_circles.max == 1);
  CHECK(b.cone_points.min == 3);
  CHECK(b.corner_points.max == 4);
  CHECK(b.max_order == 100);
  CHECK(b.orientability == OrientabilityFilter::non_orientable_only);
  CHECK(parse_bounds("").max_order == EnumerationBounds{}.max_order);
  CHECK_THROWS_AS(parse_bounds("genus=2..1"), InvalidInput);
  CHECK_THROWS_AS(parse_bounds("colour=3"), InvalidInput);
  CHECK_THROWS_AS(parse_bounds("genus"), InvalidInput);
  CHECK_THROWS_AS(parse_bounds("order=x"), InvalidInput);
  CHECK_THROWS_AS(parse_bounds("orient=maybe"), InvalidInput);
}

TEST_CASE("rigid orbifolds") {
  const auto rigid4 = enumerate_rigid(4, spheres(3, 30));
  std::vector<OrbifoldSignature> expected;
  for (int r = 7; r <= 30; ++r) expected.push_back(sphere({2, 3, r}));
  CHECK(rigid4 == expected);

  EnumerationBounds triangles;
  triangles.mirror_circles = {1, 1};
  triangles.cone_points = {0, 0};
  triangles.corner_points = {3, 3};
  triangles.max_order = 10;
  triangles.orientability = OrientabilityFilter::orientable_only;
  const auto rigid2 = enumerate_rigid(2, triangles);
  std::set<std::string> got;
  for (const auto& s : rigid2) got.insert(to_string(s));
  for_each_signature(triangles, [&](const OrbifoldSignature& s) {
    if (is_hyperbolic(s)) CHECK(got.count(to_string(s)) == 1);
  });
  CHECK(got.count("o0b1d:2,3,7") == 1);
  const auto rigid4_tri = enumerate_rigid(4, triangles);
  CHECK(std::find(rigid4_tri.begin(), rigid4_tri.end(), triangle({2, 3, 7})) != rigid4_tri.end());
  for (const auto& s : rigid4_tri) CHECK(hitchin_dimension_pgl(s, 4) == 0);
  CHECK_THROWS_AS(enumerate_rigid(1, triangles), DomainError);
}
