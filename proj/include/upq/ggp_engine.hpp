#pragma once

#include <cstdint>
#include <vector>

#include "upq/aq_spectrum.hpp"
#include "upq/hc_param.hpp"

namespace upq {

enum class Route { direct, reciprocity, both };

/// Data of one reduction step of the recursive membership algorithm: the
/// position of the first sign change of the larger parameter, the entry gap
/// there, and the restriction object signature chosen for the step.
struct ReductionStep {
  std::size_t sign_change_pos = 0;  // 1-based position l
  std::int64_t gap = 0;             // k = chi_l - chi_{l+1}
  int r = 0;
  int s = 0;
};

struct MembershipVerdict {
  bool member = false;
  int multiplicity = 0;  // 0 or 1
  Route route = Route::direct;
  std::vector<ReductionStep> trace;
};

/// Direct criterion: member iff the two parameters satisfy the interlacing
/// relation. Requires big of signature (p,q) with p >= 1, small of
/// signature (p-1,q) (SignatureMismatch), and opposite entry parities
/// (ParityClash).
MembershipVerdict ggp_contains_direct(const HCParam& big,
                                      const HCParam& small);

/// Recursive membership algorithm. Compact or rank <= 2 parameters are
/// decided by the base criterion; otherwise one reduction step normalizes
/// the first sign change of big to (0, -k), tests the smaller parameter
/// against the first branching law of the step's restriction object, and
/// recurses one rank down with the roles exchanged. Same preconditions as
/// the direct criterion; verdicts agree with it.
MembershipVerdict ggp_contains_reciprocity(const HCParam& big,
                                           const HCParam& small);

struct BranchEntry {
  HCParam small;
  MembershipVerdict verdict;
};

/// Windowed slice of the discrete spectrum of big's restriction: every
/// member parameter of signature (p-1,q) and opposite parity with entries
/// in the window.
struct BranchResult {
  std::vector<BranchEntry> members;
  bool truncated = true;
};

BranchResult ggp_branch(const HCParam& big, Window window);

/// Membership incidence between the two full L-packet families over the
/// value sequences chi and eta (|eta| = |chi| - 1, opposite parity).
/// Within each signature-compatible block, each row and each column may
/// contain at most one member.
struct RepulsionReport {
  std::vector<HCParam> bigs;               // all sign choices over chi
  std::vector<HCParam> smalls;             // all sign choices over eta
  std::vector<std::vector<int>> incidence; // bigs x smalls, 0 or 1
  bool pass = false;
};

RepulsionReport l_packet_repulsion_check(const std::vector<HalfInt>& chi,
                                         const std::vector<HalfInt>& eta);

}  // namespace upq
