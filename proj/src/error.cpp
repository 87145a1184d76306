#include "upq/error.hpp"

namespace upq {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::not_descending: return "NotDescending";
    case Errc::mixed_parity: return "MixedParity";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::rank_mismatch: return "RankMismatch";
    case Errc::parity_violation: return "ParityViolation";
    case Errc::no_zero_entry: return "NoZeroEntry";
    case Errc::zero_entry_present: return "ZeroEntryPresent";
    case Errc::not_deletable_pair: return "NotDeletablePair";
    case Errc::ambiguous_tie: return "AmbiguousTie";
    case Errc::zero_or_minus_k_entry: return "ZeroOrMinusKEntry";
    case Errc::entry_in_forbidden_interval: return "EntryInForbiddenInterval";
    case Errc::signature_mismatch: return "SignatureMismatch";
    case Errc::parity_clash: return "ParityClash";
    case Errc::non_integral_gap: return "NonIntegralGap";
    case Errc::parse_error: return "ParseError";
    case Errc::budget_exceeded: return "BudgetExceeded";
  }
  return "UnknownError";
}

}  // namespace upq
