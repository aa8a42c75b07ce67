#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "ladder/errors.hpp"

namespace ladder {

/// Non-negative currency amount in whole cents.
///
/// All arithmetic is exact integer arithmetic; operations that would go
/// negative or overflow throw instead of wrapping. Floating point only
/// appears in `dollars()`, which is for display and approximate analysis.
class Money {
 public:
  constexpr Money() = default;

  static Money from_cents(std::int64_t cents);

  // Parses decimal dollars with at most two fraction digits ("12", "12.3",
  // "12.34") exactly into cents. Anything finer or malformed is rejected.
  static Money from_dollars_text(std::string_view text);

  constexpr std::int64_t cents() const noexcept { return cents_; }
  double dollars() const noexcept { return static_cast<double>(cents_) / 100.0; }

  // "1234.56"
  std::string str() const;

  Money& operator+=(Money other);
  Money& operator-=(Money other);
  friend Money operator+(Money a, Money b) { return a += b; }
  friend Money operator-(Money a, Money b) { return a -= b; }

  // Scaling by a unit count, e.g. per-unit royalty times units sold.
  friend Money operator*(Money m, std::int64_t units);
  friend Money operator*(std::int64_t units, Money m) { return m * units; }

  friend constexpr auto operator<=>(Money, Money) = default;

 private:
  explicit constexpr Money(std::int64_t cents) : cents_(cents) {}

  std::int64_t cents_ = 0;
};

std::ostream& operator<<(std::ostream& os, Money m);

}  // namespace ladder
