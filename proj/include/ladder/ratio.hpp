#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ladder/money.hpp"

namespace ladder {

/// Exact non-negative rational, kept normalized. Used for revenue shares
/// and royalty rates so that no share ever passes through floating point.
class Ratio {
 public:
  constexpr Ratio() = default;  // 0/1

  static Ratio of(std::int64_t num, std::int64_t den);
  static Ratio percent(std::int64_t p) { return of(p, 100); }

  // Accepts "70/100", "13%", or a bare integer ("1").
  static Ratio parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == den_; }

  // "70/100" (normalized form, e.g. "7/10")
  std::string str() const;

  Ratio operator+(Ratio other) const;  // exact
  friend bool operator==(Ratio, Ratio) = default;

  // floor(amount * this)
  Money floor_of(Money amount) const;
  // round-half-up(amount * this)
  Money nearest_of(Money amount) const;
  // ceil(amount / this); this must be nonzero
  Money ceil_quotient_of(Money amount) const;

 private:
  Ratio(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace ladder
