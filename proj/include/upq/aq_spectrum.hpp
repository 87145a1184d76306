#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "upq/hc_param.hpp"

namespace upq {

/// The normalized restriction object A_{r,s;s,r}(k1, k2). Its branching
/// data depend only on the drop k1 - k2 and the overall twist k1: the
/// object equals the (0, -(k1-k2)) form tensored by det^{k1}.
struct AqParam {
  int r = 0;
  int s = 0;
  HalfInt k1;
  HalfInt k2;

  /// Requires r, s >= 0 and k1 >= k2.
  static AqParam validate(int r, int s, HalfInt k1, HalfInt k2);

  /// k = k1 - k2 >= 0, the normalized drop.
  HalfInt drop() const { return k1 - k2; }
  /// The det power relating this object to its normalized form.
  HalfInt twist() const { return k1; }
};

/// Inclusive window on doubled entry values.
struct Window {
  std::int64_t lo2x = 0;
  std::int64_t hi2x = -1;

  bool contains(HalfInt v) const {
    return lo2x <= v.twice() && v.twice() <= hi2x;
  }
  bool empty() const { return lo2x > hi2x; }
};

/// One pair of the discrete spectrum; multiplicity is one throughout.
struct SpectrumPair {
  HCParam left;   // factor on the first group
  HCParam right;  // factor on the second group
};

/// A windowed slice of an infinite discrete spectrum.
struct Spectrum {
  std::vector<SpectrumPair> pairs;
  bool truncated = true;
};

/// First branching law, counting form, stated on the (q,p) side: given
/// (eta, t) of signature (q,p) with half-odd entries and k >= 0, returns
/// the partner of signature (p,q) iff the three counting conditions hold:
///   #{eta_i > 0, t_i = +} + #{eta_i < 0, t_i = -} = r,
///   #{eta_i > 0, t_i = -} + #{eta_i < 0, t_i = +} = s,
///   #{eta_i in (-k,0), t_i = +} = #{eta_i in (-k,0), t_i = -};
/// the partner is the dual of (eta, -t') twisted by det^{-k}, where t'
/// flips t exactly on entries in (-k, 0).
std::optional<HCParam> first_law_membership(const HCParam& eta_t, int r,
                                            int s, int k);

/// First branching law, correspondence-composition form, stated on the
/// (p,q) side: applies the equal-rank recipe toward (r,s), twists by
/// det^k, dualizes, and applies the equal-rank recipe toward (q,p).
/// Absent when either recipe step vanishes. Returns the (q,p) partner.
std::optional<HCParam> first_law_membership_via_theta(const HCParam& sigma,
                                                      int r, int s, int k);

/// Membership verdict for sigma on the (p,q) side without constructing the
/// partner: the equal-rank image toward (r,s) exists and its plus and minus
/// parts have equally many entries in [-k, 0].
bool first_law_balance_criterion(const HCParam& sigma, int r, int s, int k);

/// All spectrum pairs whose underlying half-odd parameter lies in the
/// window. left is the (p,q) factor, right the (q,p) factor. The true
/// spectrum is infinite; the result is its restriction to the window.
Spectrum first_law_spectrum(int r, int s, int k, int p, int q,
                            Window window);

/// First law for the twisted object A(k1,k2): conjugates by det^{k1}.
std::optional<HCParam> first_law_membership(const AqParam& aq,
                                            const HCParam& eta_t);

enum class SecondLawAbsence {
  /// The correspondence image of sigma is not a discrete series of the
  /// requested (r,s); any partner would fall outside the discrete-series
  /// recipes (limit of discrete series), which are excluded here.
  theta_image_not_discrete,
  /// The interval counting conditions fail; the multiplicity space
  /// vanishes.
  unbalanced_interval_counts,
};

struct SecondLawResult {
  std::optional<HCParam> partner;               // signature (q+1, p)
  std::optional<ZeroSlot> partner_zero_slot;    // set iff partner present
  std::optional<SecondLawAbsence> absence;      // set iff partner absent

  bool present() const { return partner.has_value(); }
};

/// Second branching law: sigma of signature (p-1, q) with integral entries,
/// none equal to 0 or -k (ZeroOrMinusKEntry), k >= 1, r + s = p + q.
/// Determines the applicable case from the cardinality equations, checks
/// the interval balance, and returns the displayed partner of signature
/// (q+1, p), which carries exactly one zero entry.
SecondLawResult second_law_membership(const HCParam& sigma, int r, int s,
                                      int k);

/// Second law for the twisted object A(k1,k2).
SecondLawResult second_law_membership(const AqParam& aq,
                                      const HCParam& sigma);

/// Induction partner for sigma with no entries in [-k, 0]
/// (EntryInForbiddenInterval otherwise): appends -k and 0 to the swapped
/// parts, dualizes and twists by det^{-k}. The variant names the side of
/// the partner that receives the zero entry. Signature (q+1, p).
HCParam induction_partner(const HCParam& sigma, int k,
                          ZeroSlot partner_zero_slot);

/// Which induction variant the cardinality equations select for (r,s):
/// in_plus when the swapped plus part has r-1 entries, in_minus when it
/// has r, nothing otherwise. At most one variant ever applies.
std::optional<ZeroSlot> applicable_induction_variant(const HCParam& sigma,
                                                     int r, int s);

}  // namespace upq
