#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "upq/half_int.hpp"

namespace upq {

/// Which side of a parameter holds (or receives) a zero entry.
enum class ZeroSlot { in_plus, in_minus };

/// Entry parity of a parameter. Empty parameters are unconstrained; this is
/// the recursion base case and matches either lattice.
enum class Parity { unconstrained, integral, half_odd };

struct Portions;

/// Harish-Chandra parameter (chi, z) of a discrete series of U(p,q):
/// strictly descending distinct entries, one sign per entry, all entries on
/// one lattice (all integral or all half-odd). p = number of plus signs.
///
/// Values are immutable after construction; every operation returns a new
/// parameter. Construction from unsorted input is rejected, not sorted.
class HCParam {
public:
  /// Empty parameter: the trivial group U(0,0).
  HCParam() = default;

  /// Checks all invariants; throws DomainError(LengthMismatch |
  /// NotDescending | MixedParity) naming the violated one.
  static HCParam validate(std::vector<HalfInt> entries,
                          std::vector<Sign> signs);

  /// Assembles the parameter with plus part `plus` and minus part `minus`
  /// (each given in any order), then validates.
  static HCParam from_parts(const std::vector<HalfInt>& plus,
                            const std::vector<HalfInt>& minus);

  std::size_t rank() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<HalfInt>& entries() const { return entries_; }
  const std::vector<Sign>& signs() const { return signs_; }
  HalfInt entry(std::size_t i) const { return entries_[i]; }
  Sign sign(std::size_t i) const { return signs_[i]; }

  int num_plus() const { return num_plus_; }
  int num_minus() const { return static_cast<int>(rank()) - num_plus_; }

  Parity parity() const;

  /// Subsequence of entries with sign +1 (descending).
  std::vector<HalfInt> plus_part() const;
  /// Subsequence of entries with sign -1 (descending).
  std::vector<HalfInt> minus_part() const;

  bool has_zero_entry() const;
  /// Count of entries strictly inside (lo, hi).
  int count_in_open_interval(HalfInt lo, HalfInt hi) const;

  /// Dual parameter: entries negated and re-sorted, each keeping its sign.
  /// Signature (p,q) is unchanged. Involution.
  HCParam contragredient() const;

  /// Tensor by det^m: every entry shifted by m, signs unchanged. A half-odd
  /// shift changes the lattice (the covering-group shift).
  HCParam det_twist(HalfInt m) const;

  /// Same entries, all signs negated: the matching parameter of U(q,p).
  /// Involution.
  HCParam dual_flip() const;

  /// Signed positive/negative portions of the two parts.
  Portions split_portions() const;

  friend bool operator==(const HCParam&, const HCParam&) = default;
  friend auto operator<=>(const HCParam&, const HCParam&) = default;

private:
  HCParam(std::vector<HalfInt> entries, std::vector<Sign> signs,
          int num_plus)
      : entries_(std::move(entries)),
        signs_(std::move(signs)),
        num_plus_(num_plus) {}

  std::vector<HalfInt> entries_;
  std::vector<Sign> signs_;
  int num_plus_ = 0;
};

/// The four signed portions of a parameter, each descending. At most one
/// entry of a valid parameter is zero; its side is reported separately.
struct Portions {
  std::vector<HalfInt> pos_plus;   // positive entries of the plus part
  std::vector<HalfInt> neg_plus;   // negative entries of the plus part
  std::vector<HalfInt> pos_minus;  // positive entries of the minus part
  std::vector<HalfInt> neg_minus;  // negative entries of the minus part
  std::optional<ZeroSlot> zero;    // side holding the zero, if present
};

/// All parameters sharing the entry sequence `chi` and having exactly
/// `num_plus` plus signs: the L-packet for U(num_plus, n - num_plus).
/// Size binomial(n, num_plus). Deterministic order.
std::vector<HCParam> l_packet(const std::vector<HalfInt>& chi, int num_plus);

}  // namespace upq
