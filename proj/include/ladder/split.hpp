#pragma once

#include <string>

#include "ladder/money.hpp"
#include "ladder/ratio.hpp"

namespace ladder {

/// How each payment is partitioned. Fractions are exact rationals and must
/// sum to exactly 1. Default is the 70/15/15 artist/distributor/foundation
/// split.
class SplitPolicy {
 public:
  SplitPolicy() : SplitPolicy(Ratio::percent(70), Ratio::percent(15), Ratio::percent(15)) {}
  SplitPolicy(Ratio artist, Ratio distributor, Ratio foundation);

  Ratio artist() const noexcept { return artist_; }
  Ratio distributor() const noexcept { return distributor_; }
  Ratio foundation() const noexcept { return foundation_; }

 private:
  Ratio artist_;
  Ratio distributor_;
  Ratio foundation_;
};

/// One payment partitioned into the three shares. Components always sum to
/// exactly the amount split.
struct Split {
  Money artist;
  Money distributor;
  Money foundation;

  Money total() const { return artist + distributor + foundation; }
  friend bool operator==(const Split&, const Split&) = default;
};

/// Exact integer split of `amount`. Each share is floored; leftover cents
/// are handed out one at a time in the order artist, distributor, foundation.
Split split_payment(const SplitPolicy& policy, Money amount);

}  // namespace ladder
