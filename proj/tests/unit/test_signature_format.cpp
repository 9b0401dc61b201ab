#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "orbi/error.hpp"
#include "orbi/signature.hpp"

using namespace orbi;

TEST_CASE("grammar instances") {
  CHECK(parse_signature("o0c:2,3,7") == sphere({2, 3, 7}));
  CHECK(parse_signature("o0b1d:2,3,7") == triangle({2, 3, 7}));
  CHECK(parse_signature("o2") == closed_surface(2));
  CHECK(parse_signature("n1c:3") == validate_signature({false, 1, 0, {3}, {}}));
  CHECK(parse_signature("o1b2c:5d:2,2") == validate_signature({true, 1, 2, {5}, {2, 2}}));
}

TEST_CASE("printing gives the canonical form") {
  CHECK(to_string(parse_signature("o0c:7,3,2")) == "o0c:2,3,7");
  CHECK(to_string(parse_signature("o0b0c:3,2")) == "o0c:2,3");
  CHECK(to_string(triangle({7, 2, 3})) == "o0b1d:2,3,7");
}

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_signature(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return ParseError("", 0);
}

}  // namespace

TEST_CASE("corners without mirrors are reported at the d: token") {
  const auto e = parse_error("o0d:2,3,7");
  CHECK(e.offset() == 2);
  CHECK(e.expected() == std::vector<std::string>{"b<B>"});
}

TEST_CASE("syntax errors carry offset and expected tokens") {
  CHECK(parse_error("").offset() == 0);
  CHECK(parse_error("x0").expected() == std::vector<std::string>{"o", "n"});
  CHECK(parse_error("o").offset() == 1);
  CHECK(parse_error("n0").offset() == 1);
  CHECK(parse_error("o0c:").offset() == 4);
  CHECK(parse_error("o0c:2,1").offset() == 6);
  CHECK(parse_error("o0c:2,").offset() == 6);
  CHECK(parse_error("o0c:2 ").offset() == 5);
  const auto trailing = parse_error("o0x");
  CHECK(trailing.offset() == 2);
  CHECK(trailing.expected() == std::vector<std::string>{"b<B>", "c:", "d:", "<end>"});
  CHECK(parse_error("o0c:2d:3").expected() == std::vector<std::string>{"b<B>"});
  CHECK(parse_error("o99999999999").offset() == 1);
}

TEST_CASE("print/parse round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const bool orientable = rng() % 2 == 0;
    const int mirrors = static_cast<int>(rng() % 3);
    const auto sig = validate_signature(
        {orientable, static_cast<int>(rng() % 5) + (orientable ? 0 : 1), mirrors,
         oracle::random_orders(rng, static_cast<int>(rng() % 6), 99),
         mirrors > 0 ? oracle::random_orders(rng, static_cast<int>(rng() % 5), 99)
                     : std::vector<int>{}});
    const std::string text = to_string(sig);
    CHECK(parse_signature(text) == sig);
    CHECK(to_string(parse_signature(text)) == text);
  }
}
