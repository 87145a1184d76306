#include "upq/ggp_engine.hpp"

#include <algorithm>

#include "upq/error.hpp"
#include "upq/interlacing.hpp"

namespace upq {
namespace {

void check_configuration(const HCParam& big, const HCParam& small) {
  if (big.num_plus() < 1 || small.num_plus() != big.num_plus() - 1 ||
      small.num_minus() != big.num_minus())
    fail(Errc::signature_mismatch,
         "need signatures (p,q) over (p-1,q), got (" +
             std::to_string(big.num_plus()) + "," +
             std::to_string(big.num_minus()) + ") over (" +
             std::to_string(small.num_plus()) + "," +
             std::to_string(small.num_minus()) + ")");
  if (big.parity() != Parity::unconstrained &&
      small.parity() != Parity::unconstrained &&
      big.parity() == small.parity())
    fail(Errc::parity_clash, "parameters must lie on opposite lattices");
}

bool reciprocity_member(const HCParam& big, const HCParam& small,
                        std::vector<ReductionStep>& trace) {
  // Induction floor: compact groups obey the strict interlacing of entry
  // sequences alone; total rank <= 2 is decided by the relation directly.
  if (big.num_minus() == 0)
    return is_cauchy_strict(big.entries(), small.entries());
  if (big.rank() <= 2) return is_ggp_interlacing(big, small);

  // big is a parameter of U(q+1, p) with q+1 = #plus >= 1, p = #minus >= 1.
  std::size_t l = 0;
  while (big.sign(l) == big.sign(l + 1)) ++l;
  const HalfInt gap = big.entry(l) - big.entry(l + 1);
  if (!gap.is_integral() || !gap.is_positive())
    fail(Errc::non_integral_gap,
         "entry gap at the first sign change is " + gap.str());
  const int k = static_cast<int>(gap.twice() / 2);

  // Normalize so the sign change straddles entries (0, -k).
  const HCParam big_n = big.det_twist(-big.entry(l));
  const HCParam small_n = small.det_twist(-big.entry(l));
  const bool plus_first = big_n.sign(l) == Sign::plus;

  // Delete the straddling pair from big.
  std::vector<HalfInt> chi_prime;
  std::vector<Sign> z_prime;
  chi_prime.reserve(big_n.rank() - 2);
  z_prime.reserve(big_n.rank() - 2);
  for (std::size_t i = 0; i < big_n.rank(); ++i) {
    if (i == l || i == l + 1) continue;
    chi_prime.push_back(big_n.entry(i));
    z_prime.push_back(big_n.sign(i));
  }

  int pos_plus = 0, neg_plus = 0, pos_minus = 0, neg_minus = 0;
  for (std::size_t i = 0; i < chi_prime.size(); ++i) {
    const bool plus = z_prime[i] == Sign::plus;
    if (chi_prime[i].is_positive())
      (plus ? pos_plus : pos_minus)++;
    else
      (plus ? neg_plus : neg_minus)++;
  }
  int r, s;
  if (plus_first) {
    s = neg_plus;
    r = pos_plus + neg_minus + 1;
  } else {
    r = neg_minus;
    s = neg_plus + 1 + pos_minus;
  }
  trace.push_back({l + 1, static_cast<std::int64_t>(k), r, s});

  // The smaller parameter must occur in the step's restriction object.
  if (!first_law_membership(small_n, r, s, k)) return false;

  // Exchange roles: the partner data of small descends against the deleted
  // big, both dualized, one rank down on each side.
  std::vector<Sign> new_big_signs(small_n.signs());
  for (std::size_t i = 0; i < small_n.rank(); ++i) {
    const HalfInt v = small_n.entry(i);
    const bool inside =
        HalfInt::whole(-k) < v && v < HalfInt::whole(0);
    // flip inside the interval, then negate everything
    if (!inside) new_big_signs[i] = flipped(new_big_signs[i]);
  }
  for (Sign& z : z_prime) z = flipped(z);

  const HCParam new_big =
      HCParam::validate(small_n.entries(), std::move(new_big_signs));
  const HCParam new_small =
      HCParam::validate(std::move(chi_prime), std::move(z_prime));
  return reciprocity_member(new_big, new_small, trace);
}

}  // namespace

MembershipVerdict ggp_contains_direct(const HCParam& big,
                                      const HCParam& small) {
  check_configuration(big, small);
  MembershipVerdict v;
  v.route = Route::direct;
  v.member = is_ggp_interlacing(big, small);
  v.multiplicity = v.member ? 1 : 0;
  return v;
}

MembershipVerdict ggp_contains_reciprocity(const HCParam& big,
                                           const HCParam& small) {
  check_configuration(big, small);
  MembershipVerdict v;
  v.route = Route::reciprocity;
  v.member = reciprocity_member(big, small, v.trace);
  v.multiplicity = v.member ? 1 : 0;
  return v;
}

BranchResult ggp_branch(const HCParam& big, Window window) {
  BranchResult out;
  out.truncated = true;
  if (big.num_plus() < 1 || window.empty()) return out;
  const int small_rank = static_cast<int>(big.rank()) - 1;
  const int small_plus = big.num_plus() - 1;

  // Opposite lattice inside the window, descending.
  const bool want_integral = big.parity() != Parity::integral;
  std::vector<HalfInt> values;
  for (std::int64_t t = window.hi2x; t >= window.lo2x; --t)
    if ((t % 2 == 0) == want_integral) values.push_back(HalfInt::from_twice(t));
  if (static_cast<int>(values.size()) < small_rank) return out;

  std::vector<int> idx(small_rank);
  for (int i = 0; i < small_rank; ++i) idx[i] = i;
  const auto advance = [&]() {
    int i = small_rank - 1;
    const int m = static_cast<int>(values.size());
    while (i >= 0 && idx[i] == m - small_rank + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < small_rank; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };
  do {
    std::vector<HalfInt> eta(small_rank);
    for (int i = 0; i < small_rank; ++i) eta[i] = values[idx[i]];
    for (const HCParam& small : l_packet(eta, small_plus)) {
      MembershipVerdict verdict = ggp_contains_direct(big, small);
      if (verdict.member) out.members.push_back({small, std::move(verdict)});
    }
  } while (small_rank > 0 && advance());

  std::sort(out.members.begin(), out.members.end(),
            [](const BranchEntry& x, const BranchEntry& y) {
              return x.small < y.small;
            });
  return out;
}

RepulsionReport l_packet_repulsion_check(const std::vector<HalfInt>& chi,
                                         const std::vector<HalfInt>& eta) {
  if (chi.size() != eta.size() + 1)
    fail(Errc::length_mismatch,
         "need |eta| = |chi| - 1, got " + std::to_string(chi.size()) +
             " and " + std::to_string(eta.size()));
  if (!chi.empty() && !eta.empty() &&
      chi[0].is_integral() == eta[0].is_integral())
    fail(Errc::parity_clash, "value sequences must lie on opposite lattices");

  RepulsionReport report;
  const int n = static_cast<int>(chi.size());
  for (int p = 0; p <= n; ++p)
    for (const HCParam& big : l_packet(chi, p)) report.bigs.push_back(big);
  for (int p = 0; p < n; ++p)
    for (const HCParam& small : l_packet(eta, p))
      report.smalls.push_back(small);

  report.incidence.assign(report.bigs.size(),
                          std::vector<int>(report.smalls.size(), 0));
  for (std::size_t i = 0; i < report.bigs.size(); ++i)
    for (std::size_t j = 0; j < report.smalls.size(); ++j) {
      const HCParam& big = report.bigs[i];
      const HCParam& small = report.smalls[j];
      if (big.num_plus() != small.num_plus() + 1) continue;
      report.incidence[i][j] = ggp_contains_direct(big, small).member ? 1 : 0;
    }

  report.pass = true;
  for (const auto& row : report.incidence) {
    int sum = 0;
    for (int x : row) sum += x;
    if (sum > 1) report.pass = false;
  }
  for (std::size_t j = 0; j < report.smalls.size(); ++j) {
    int sum = 0;
    for (const auto& row : report.incidence) sum += row[j];
    if (sum > 1) report.pass = false;
  }
  return report;
}

}  // namespace upq
