#pragma once

#include <cstdint>

#include "ladder/money.hpp"
#include "ladder/ratio.hpp"

namespace ladder {

/// Zero-based index of a buyer in purchase order. The first buyer is 0 and
/// pays the advertised starting price.
using Position = std::int64_t;

/// Parameters of the decaying price ladder.
///
/// The price charged to buyer n is ceil_to_cents(gamma * e^(-beta*n) - alpha),
/// clamped at zero. `gamma - alpha` is the starting price in dollars, `alpha`
/// is the floor below which the good counts as free, and `beta` controls how
/// fast the price decays per copy sold.
class PriceSchedule {
 public:
  PriceSchedule(double gamma, double alpha, double beta);

  double gamma() const noexcept { return gamma_; }
  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double starting_price_dollars() const noexcept { return gamma_ - alpha_; }

 private:
  double gamma_;
  double alpha_;
  double beta_;
};

// Default bound on exact summation length. Longer sums are refused; use the
// closed form instead.
inline constexpr Position kDefaultSumCap = 100'000'000;

/// Price charged to buyer `n`: the ladder value ceiled to a whole cent and
/// clamped at zero. Non-increasing in n.
Money unit_price(const PriceSchedule& schedule, Position n);

/// Smallest position whose price is zero. From there on the good is free.
/// Found by binary search on the monotone price; the analytic value
/// ln(gamma/alpha)/beta only seeds the bracket.
Position free_threshold(const PriceSchedule& schedule);

/// The coarse closed-form approximation 5/beta of the number of buyers
/// until the good becomes free.
double buyers_to_free_approx(const PriceSchedule& schedule);

/// Exact gross revenue after the first `n` purchases: the cent-exact sum of
/// unit_price(0..n-1). Constant for n beyond the free threshold. Refuses
/// summations longer than `cap` terms.
Money cumulative_revenue_exact(const PriceSchedule& schedule, Position n,
                               Position cap = kDefaultSumCap);

/// Closed-form (unrounded) revenue after `n` purchases, in dollars:
/// gamma * (1 - e^(-beta n)) / (1 - e^(-beta)) - alpha * n.
/// Underestimates the exact sum by less than one cent per position.
double cumulative_revenue_geometric(const PriceSchedule& schedule, Position n);

/// Continuous approximation of total earnings over the whole ladder, in
/// dollars: gamma/beta * (1 - e^-5) - 5*alpha/beta.
double earnings_integral_approx(const PriceSchedule& schedule);

/// Smallest position whose price is at or below `price`. Binary search over
/// the monotone ladder; used for free_threshold and price-band counting.
Position first_position_at_or_below(const PriceSchedule& schedule, Money price);

enum class CalibrationMode {
  // beta = gamma / target. The crude large-audience simplification.
  kPaperSimplified,
  // beta = (gamma * (1 - e^-5) - 5 * alpha) / target. Inverts the
  // integral approximation exactly.
  kFullIntegral,
};

/// Closed-form decay rate for a desired gross revenue.
double calibrate_beta_approx(double gamma, double alpha, Money target_gross,
                             CalibrationMode mode);

/// Decay rate whose exact ladder revenue (summed to the free threshold)
/// matches `target_gross` within `rel_tol`. Bisection over a bracket seeded
/// from the closed form; throws CalibrationError with the achievable range
/// if the target cannot be met inside the bracket.
double calibrate_beta_exact(double gamma, double alpha, Money target_gross,
                            double rel_tol, Position cap = kDefaultSumCap);

/// Gross revenue needed so that an `artist_fraction` share pays out at least
/// `target_artist_payout`: ceil(payout / fraction).
Money artist_gross_from_payout(Money target_artist_payout, Ratio artist_fraction);

/// Classic record-deal economics, used as a comparison baseline.
class LegacyDeal {
 public:
  LegacyDeal(Money retail, Money store_cut, Money distributor_cut, Ratio artist_rate);

  Money retail() const noexcept { return retail_; }
  Money store_cut() const noexcept { return store_cut_; }
  Money distributor_cut() const noexcept { return distributor_cut_; }
  Ratio artist_rate() const noexcept { return artist_rate_; }

  // retail - store - distributor
  Money label_pool_per_unit() const;

 private:
  Money retail_;
  Money store_cut_;
  Money distributor_cut_;
  Ratio artist_rate_;
};

/// Artist money under a legacy deal: per-unit rate share of what is left
/// after the store and distributor cuts, rounded to the cent per unit,
/// times units sold.
Money legacy_artist_share(const LegacyDeal& deal, std::int64_t units);

}  // namespace ladder
