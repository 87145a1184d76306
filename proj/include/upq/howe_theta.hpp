#pragma once

#include <optional>

#include "upq/hc_param.hpp"

namespace upq {

/// Outcome of a correspondence recipe. An absent image means the parameter
/// does not occur for the requested target signature; vanishing is a value,
/// not an error, so callers can compose chains.
struct ThetaResult {
  std::optional<HCParam> image;
  int target_r = 0;
  int target_s = 0;
};

/// Equal-rank correspondence on parameters, target signature (r, s) with
/// r + s = p + q. Positive entries keep their sign, negative entries flip
/// it; the image is present iff the resulting signature is (r, s). Entry
/// multiset is preserved. Requires half-odd entries (ParityViolation) and
/// matching total rank (RankMismatch). Applying the recipe again from the
/// image with target (p, q) returns the source.
ThetaResult theta_equal_rank(const HCParam& sigma, int r, int s);

struct ThetaDescent {
  HCParam image;        // parameter of the group one rank down
  ZeroSlot zero_slot;   // side of the source that held the zero
};

/// Rank-lowering correspondence: the source must be integral with exactly
/// one zero entry (NoZeroEntry; MixedParity when entries are half-odd).
/// Drops the zero and applies the sign rule to the rest.
ThetaDescent theta_down_one(const HCParam& sigma);

/// Rank-raising correspondence: inserts a zero on the designated side and
/// applies the sign rule to the (nonzero, integral) entries. Errors:
/// ZeroEntryPresent. Inverse of theta_down_one with matching slot.
HCParam theta_up_one(const HCParam& sigma, ZeroSlot slot);

}  // namespace upq
