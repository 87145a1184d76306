#pragma once

#include <stdexcept>
#include <string>

namespace upq {

enum class Errc {
  not_descending,
  mixed_parity,
  length_mismatch,
  rank_mismatch,
  parity_violation,
  no_zero_entry,
  zero_entry_present,
  not_deletable_pair,
  ambiguous_tie,
  zero_or_minus_k_entry,
  entry_in_forbidden_interval,
  signature_mismatch,
  parity_clash,
  non_integral_gap,
  parse_error,
  budget_exceeded,
};

/// Stable identifier for an error condition, e.g. "NotDescending".
const char* errc_name(Errc c);

/// Validation failure. `name()` is the identifier surfaced on the CLI.
class DomainError : public std::runtime_error {
public:
  DomainError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw DomainError(code, what);
}

}  // namespace upq
