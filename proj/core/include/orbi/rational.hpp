#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace orbi {

namespace detail {
__extension__ typedef __int128 wide_int;
}  // namespace detail

/// Exact rational number over 64-bit integers.
///
/// Always stored in lowest terms with a positive denominator, so equality is
/// member-wise. Arithmetic goes through 128-bit intermediates and throws
/// std::overflow_error if a reduced result does not fit in 64 bits.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT
  Rational(std::int64_t numerator, std::int64_t denominator);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  /// Throws DomainError when the value is not an integer.
  std::int64_t to_integer() const;

  /// Largest integer not exceeding the value.
  std::int64_t floor() const noexcept;
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& lhs,
                                          const Rational& rhs) noexcept;

  /// "p/q", or just "p" when the denominator is 1.
  std::string to_string() const;
  /// Inverse of to_string; also accepts non-reduced input such as "4/-8".
  static Rational parse(std::string_view text);

 private:
  static Rational from_wide(detail::wide_int numerator, detail::wide_int denominator);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace orbi
