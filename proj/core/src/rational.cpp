#include "orbi/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "orbi/error.hpp"

namespace orbi {

ParseError::ParseError(std::string message, std::size_t offset,
                       std::vector<std::string> expected)
    : InvalidInput(std::move(message)),
      offset_(offset),
      expected_(std::move(expected)) {}

namespace {

using wide = detail::wide_int;

wide wide_gcd(wide a, wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  *this = from_wide(numerator, denominator);
}

Rational Rational::from_wide(wide numerator, wide denominator) {
  if (denominator == 0) throw DomainError("division by zero");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  // Narrow fast path: 128-bit division is a library call on most targets.
  if (fits(numerator) && fits(denominator) &&
      numerator != std::numeric_limits<std::int64_t>::min()) {
    const auto n = static_cast<std::int64_t>(numerator);
    const auto d = static_cast<std::int64_t>(denominator);
    const std::int64_t g = std::gcd(n, d);
    Rational r;
    r.num_ = g > 1 ? n / g : n;
    r.den_ = g > 1 ? d / g : d;
    return r;
  }
  wide g = wide_gcd(numerator, denominator);
  if (g > 1) {
    numerator /= g;
    denominator /= g;
  }
  if (!fits(numerator) || !fits(denominator)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(numerator);
  r.den_ = static_cast<std::int64_t>(denominator);
  return r;
}

std::int64_t Rational::to_integer() const {
  if (den_ != 1) {
    throw DomainError("expected an integer, got " + to_string());
  }
  return num_;
}

std::int64_t Rational::floor() const noexcept {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::operator-() const {
  return from_wide(-static_cast<wide>(num_), den_);
}

Rational& Rational::operator+=(const Rational& rhs) {
  if (den_ == 1 && rhs.den_ == 1) {
    return *this = from_wide(static_cast<wide>(num_) + rhs.num_, 1);
  }
  *this = from_wide(static_cast<wide>(num_) * rhs.den_ +
                        static_cast<wide>(rhs.num_) * den_,
                    static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
  *this = from_wide(static_cast<wide>(num_) * rhs.num_,
                    static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw DomainError("division by zero");
  *this = from_wide(static_cast<wide>(num_) * rhs.den_,
                    static_cast<wide>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& lhs,
                                 const Rational& rhs) noexcept {
  return static_cast<wide>(lhs.num_) * rhs.den_ <=>
         static_cast<wide>(rhs.num_) * lhs.den_;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::int64_t v = 0;
    const char* first = part.data();
    const char* last = part.data() + part.size();
    if (!part.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
      throw InvalidInput("malformed rational '" + std::string(text) + "'");
    }
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace orbi
