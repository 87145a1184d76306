#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "upq/hc_param.hpp"

namespace upq {

/// Mark of one slot in a merged sign pattern. `plus`/`minus` come from the
/// first parameter's signs, `oplus`/`ominus` from the second's.
enum class Mark : std::uint8_t { plus, minus, oplus, ominus };

constexpr bool mark_from_second(Mark m) {
  return m == Mark::oplus || m == Mark::ominus;
}
constexpr Sign mark_sign(Mark m) {
  return (m == Mark::plus || m == Mark::oplus) ? Sign::plus : Sign::minus;
}
/// Rendering alphabet: '+' '-' for the first parameter, 'P' 'M' for the
/// second (P = circled plus, M = circled minus).
constexpr char mark_char(Mark m) {
  switch (m) {
    case Mark::plus: return '+';
    case Mark::minus: return '-';
    case Mark::oplus: return 'P';
    case Mark::ominus: return 'M';
  }
  return '?';
}

/// An adjacent pair is admissible iff the two slots come from different
/// parameters and carry equal signs, or from the same parameter and carry
/// opposite signs. Those are exactly the eight allowed pairs.
constexpr bool adjacent_pair_allowed(Mark a, Mark b) {
  return (mark_from_second(a) == mark_from_second(b)) ==
         (mark_sign(a) != mark_sign(b));
}

struct PatternSlot {
  HalfInt value;
  Mark mark;
  std::size_t origin_index;  // index within the originating parameter
};

/// One descending line-up of the two entry sequences with its sign marks.
struct SignPattern {
  std::vector<PatternSlot> slots;

  /// e.g. "+P+-M".
  std::string marks() const;
  std::vector<HalfInt> values() const;
  /// True iff every adjacent pair is one of the eight allowed ones.
  bool admissible() const;
};

/// All descending merges of the two entry sequences. A single pattern when
/// all values are distinct; ties (one value shared between the parameters)
/// double the count, so there are at most 2^t patterns for t shared values.
std::vector<SignPattern> merge_patterns(const HCParam& a, const HCParam& b);

/// True iff some descending merge of the two parameters has only allowed
/// adjacent pairs (existential over tied line-ups).
bool is_ggp_interlacing(const HCParam& a, const HCParam& b);

/// chi_1 > eta_1 > chi_2 > ... > eta_{n-1} > chi_n. Requires
/// |eta| = |chi| - 1 (LengthMismatch) and both strictly descending.
bool is_cauchy_strict(std::span<const HalfInt> chi,
                      std::span<const HalfInt> eta);

/// Removes the mixed-origin equal-sign adjacent pair at (index, index+1) of
/// the unique merged pattern, one entry from each parameter. Errors:
/// AmbiguousTie when the pattern is not unique, NotDeletablePair when the
/// chosen pair is not one of the four mixed-origin equal-sign pairs.
std::pair<HCParam, HCParam> delete_adjacent_pair(const HCParam& a,
                                                 const HCParam& b,
                                                 std::size_t index);

/// First mark of the unique merged pattern. Errors: AmbiguousTie when a tie
/// exists, LengthMismatch when both parameters are empty.
Mark head_mark(const HCParam& a, const HCParam& b);

}  // namespace upq
