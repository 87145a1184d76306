#include "upq/hc_param.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "upq/error.hpp"

namespace upq {

HCParam HCParam::validate(std::vector<HalfInt> entries,
                          std::vector<Sign> signs) {
  if (entries.size() != signs.size())
    fail(Errc::length_mismatch,
         "entries and signs must have equal length (" +
             std::to_string(entries.size()) + " vs " +
             std::to_string(signs.size()) + ")");
  for (std::size_t i = 0; i + 1 < entries.size(); ++i)
    if (!(entries[i] > entries[i + 1]))
      fail(Errc::not_descending,
           "entries must be strictly descending; entry " + entries[i].str() +
               " is followed by " + entries[i + 1].str());
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].is_integral() != entries[0].is_integral())
      fail(Errc::mixed_parity,
           "entries must all be integral or all half-odd; " +
               entries[0].str() + " and " + entries[i].str() + " differ");
  int p = 0;
  for (Sign s : signs)
    if (s == Sign::plus) ++p;
  return HCParam(std::move(entries), std::move(signs), p);
}

HCParam HCParam::from_parts(const std::vector<HalfInt>& plus,
                            const std::vector<HalfInt>& minus) {
  std::vector<std::pair<HalfInt, Sign>> merged;
  merged.reserve(plus.size() + minus.size());
  for (HalfInt v : plus) merged.emplace_back(v, Sign::plus);
  for (HalfInt v : minus) merged.emplace_back(v, Sign::minus);
  std::sort(merged.begin(), merged.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<HalfInt> entries;
  std::vector<Sign> signs;
  entries.reserve(merged.size());
  signs.reserve(merged.size());
  for (const auto& [v, s] : merged) {
    entries.push_back(v);
    signs.push_back(s);
  }
  return validate(std::move(entries), std::move(signs));
}

Parity HCParam::parity() const {
  if (entries_.empty()) return Parity::unconstrained;
  return entries_[0].is_integral() ? Parity::integral : Parity::half_odd;
}

std::vector<HalfInt> HCParam::plus_part() const {
  std::vector<HalfInt> out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (signs_[i] == Sign::plus) out.push_back(entries_[i]);
  return out;
}

std::vector<HalfInt> HCParam::minus_part() const {
  std::vector<HalfInt> out;
  for (std::size_t i = 0; i < rank(); ++i)
    if (signs_[i] == Sign::minus) out.push_back(entries_[i]);
  return out;
}

bool HCParam::has_zero_entry() const {
  for (HalfInt v : entries_)
    if (v.is_zero()) return true;
  return false;
}

int HCParam::count_in_open_interval(HalfInt lo, HalfInt hi) const {
  int n = 0;
  for (HalfInt v : entries_)
    if (lo < v && v < hi) ++n;
  return n;
}

HCParam HCParam::contragredient() const {
  std::vector<HalfInt> entries(rank());
  std::vector<Sign> signs(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    entries[rank() - 1 - i] = -entries_[i];
    signs[rank() - 1 - i] = signs_[i];
  }
  return HCParam(std::move(entries), std::move(signs), num_plus_);
}

HCParam HCParam::det_twist(HalfInt m) const {
  std::vector<HalfInt> entries(entries_);
  for (HalfInt& v : entries) v += m;
  return HCParam(std::move(entries), signs_, num_plus_);
}

HCParam HCParam::dual_flip() const {
  std::vector<Sign> signs(signs_);
  for (Sign& s : signs) s = flipped(s);
  return HCParam(entries_, std::move(signs), num_minus());
}

Portions HCParam::split_portions() const {
  Portions out;
  for (std::size_t i = 0; i < rank(); ++i) {
    const HalfInt v = entries_[i];
    const bool plus = signs_[i] == Sign::plus;
    if (v.is_zero())
      out.zero = plus ? ZeroSlot::in_plus : ZeroSlot::in_minus;
    else if (v.is_positive())
      (plus ? out.pos_plus : out.pos_minus).push_back(v);
    else
      (plus ? out.neg_plus : out.neg_minus).push_back(v);
  }
  return out;
}

std::vector<HCParam> l_packet(const std::vector<HalfInt>& chi, int num_plus) {
  const int n = static_cast<int>(chi.size());
  if (num_plus < 0 || num_plus > n)
    fail(Errc::rank_mismatch, "plus count " + std::to_string(num_plus) +
                                  " out of range for rank " +
                                  std::to_string(n));
  std::vector<HCParam> packet;
  // Subsets of positions receiving a plus sign, in lexicographic order.
  std::vector<int> pos(num_plus);
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    std::vector<Sign> signs(n, Sign::minus);
    for (int i : pos) signs[i] = Sign::plus;
    packet.push_back(HCParam::validate(chi, std::move(signs)));
    int i = num_plus - 1;
    while (i >= 0 && pos[i] == n - num_plus + i) --i;
    if (i < 0) break;
    ++pos[i];
    for (int j = i + 1; j < num_plus; ++j) pos[j] = pos[j - 1] + 1;
  }
  return packet;
}

}  // namespace upq
