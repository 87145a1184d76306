#include "upq/interlacing.hpp"

#include <algorithm>

#include "upq/error.hpp"

namespace upq {
namespace {

Mark mark_of(const HCParam& param, std::size_t i, bool second) {
  const bool plus = param.sign(i) == Sign::plus;
  if (second) return plus ? Mark::oplus : Mark::ominus;
  return plus ? Mark::plus : Mark::minus;
}

void collect_merges(const HCParam& a, const HCParam& b, std::size_t i,
                    std::size_t j, SignPattern& current,
                    std::vector<SignPattern>& out) {
  if (i == a.rank() && j == b.rank()) {
    out.push_back(current);
    return;
  }
  // A descending merge must take the larger head next; equal heads branch.
  const bool take_a =
      i < a.rank() && (j == b.rank() || a.entry(i) >= b.entry(j));
  const bool take_b =
      j < b.rank() && (i == a.rank() || b.entry(j) >= a.entry(i));
  if (take_a) {
    current.slots.push_back({a.entry(i), mark_of(a, i, false), i});
    collect_merges(a, b, i + 1, j, current, out);
    current.slots.pop_back();
  }
  if (take_b) {
    current.slots.push_back({b.entry(j), mark_of(b, j, true), j});
    collect_merges(a, b, i, j + 1, current, out);
    current.slots.pop_back();
  }
}

bool params_share_a_value(const HCParam& a, const HCParam& b) {
  std::size_t i = 0, j = 0;
  while (i < a.rank() && j < b.rank()) {
    if (a.entry(i) == b.entry(j)) return true;
    if (a.entry(i) > b.entry(j))
      ++i;
    else
      ++j;
  }
  return false;
}

// Feasibility search over partial descending merges. State: positions
// consumed in each parameter plus the previous mark (5 possibilities
// including "none"). Memoizing failed states keeps tied inputs linear.
class GgpSearch {
public:
  GgpSearch(const HCParam& a, const HCParam& b)
      : a_(a), b_(b), dead_((a.rank() + 1) * (b.rank() + 1) * 5, false) {}

  bool run() { return admissible_from(0, 0, kNoMark); }

private:
  static constexpr int kNoMark = 4;

  std::size_t state_id(std::size_t i, std::size_t j, int last) const {
    return (i * (b_.rank() + 1) + j) * 5 + static_cast<std::size_t>(last);
  }

  bool step_allowed(int last, Mark next) const {
    return last == kNoMark ||
           adjacent_pair_allowed(static_cast<Mark>(last), next);
  }

  bool admissible_from(std::size_t i, std::size_t j, int last) {
    if (i == a_.rank() && j == b_.rank()) return true;
    const std::size_t id = state_id(i, j, last);
    if (dead_[id]) return false;
    const bool take_a =
        i < a_.rank() && (j == b_.rank() || a_.entry(i) >= b_.entry(j));
    const bool take_b =
        j < b_.rank() && (i == a_.rank() || b_.entry(j) >= a_.entry(i));
    if (take_a) {
      const Mark m = mark_of(a_, i, false);
      if (step_allowed(last, m) &&
          admissible_from(i + 1, j, static_cast<int>(m)))
        return true;
    }
    if (take_b) {
      const Mark m = mark_of(b_, j, true);
      if (step_allowed(last, m) &&
          admissible_from(i, j + 1, static_cast<int>(m)))
        return true;
    }
    dead_[id] = true;
    return false;
  }

  const HCParam& a_;
  const HCParam& b_;
  std::vector<bool> dead_;
};

}  // namespace

std::string SignPattern::marks() const {
  std::string out;
  out.reserve(slots.size());
  for (const PatternSlot& s : slots) out.push_back(mark_char(s.mark));
  return out;
}

std::vector<HalfInt> SignPattern::values() const {
  std::vector<HalfInt> out;
  out.reserve(slots.size());
  for (const PatternSlot& s : slots) out.push_back(s.value);
  return out;
}

bool SignPattern::admissible() const {
  for (std::size_t i = 0; i + 1 < slots.size(); ++i)
    if (!adjacent_pair_allowed(slots[i].mark, slots[i + 1].mark))
      return false;
  return true;
}

std::vector<SignPattern> merge_patterns(const HCParam& a, const HCParam& b) {
  std::vector<SignPattern> out;
  SignPattern current;
  current.slots.reserve(a.rank() + b.rank());
  collect_merges(a, b, 0, 0, current, out);
  return out;
}

bool is_ggp_interlacing(const HCParam& a, const HCParam& b) {
  if (!params_share_a_value(a, b)) {
    // Unique line-up: a plain two-way merge walk, no search needed.
    std::size_t i = 0, j = 0;
    int last = -1;
    while (i < a.rank() || j < b.rank()) {
      const bool from_a =
          j == b.rank() || (i < a.rank() && a.entry(i) > b.entry(j));
      const Mark m = from_a ? mark_of(a, i, false) : mark_of(b, j, true);
      if (last >= 0 && !adjacent_pair_allowed(static_cast<Mark>(last), m))
        return false;
      last = static_cast<int>(m);
      if (from_a)
        ++i;
      else
        ++j;
    }
    return true;
  }
  return GgpSearch(a, b).run();
}

bool is_cauchy_strict(std::span<const HalfInt> chi,
                      std::span<const HalfInt> eta) {
  if (chi.size() != eta.size() + 1)
    fail(Errc::length_mismatch,
         "expected |eta| = |chi| - 1, got |chi| = " +
             std::to_string(chi.size()) + ", |eta| = " +
             std::to_string(eta.size()));
  for (std::size_t i = 0; i < eta.size(); ++i)
    if (!(chi[i] > eta[i] && eta[i] > chi[i + 1])) return false;
  return true;
}

namespace {

SignPattern unique_pattern(const HCParam& a, const HCParam& b) {
  if (params_share_a_value(a, b))
    fail(Errc::ambiguous_tie,
         "parameters share an entry value; the merged pattern is not unique");
  std::vector<SignPattern> all = merge_patterns(a, b);
  return all.front();
}

}  // namespace

std::pair<HCParam, HCParam> delete_adjacent_pair(const HCParam& a,
                                                 const HCParam& b,
                                                 std::size_t index) {
  const SignPattern pattern = unique_pattern(a, b);
  if (index + 1 >= pattern.slots.size())
    fail(Errc::not_deletable_pair,
         "pattern index " + std::to_string(index) + " out of range");
  const PatternSlot& first = pattern.slots[index];
  const PatternSlot& second = pattern.slots[index + 1];
  const bool mixed_origin =
      mark_from_second(first.mark) != mark_from_second(second.mark);
  const bool equal_sign = mark_sign(first.mark) == mark_sign(second.mark);
  if (!mixed_origin || !equal_sign)
    fail(Errc::not_deletable_pair,
         std::string("adjacent pair \"") + mark_char(first.mark) +
             mark_char(second.mark) +
             "\" is not a mixed-origin equal-sign pair");

  const auto erase_at = [](const HCParam& p, std::size_t i) {
    std::vector<HalfInt> entries(p.entries());
    std::vector<Sign> signs(p.signs());
    entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(i));
    signs.erase(signs.begin() + static_cast<std::ptrdiff_t>(i));
    return HCParam::validate(std::move(entries), std::move(signs));
  };
  const PatternSlot& from_a = mark_from_second(first.mark) ? second : first;
  const PatternSlot& from_b = mark_from_second(first.mark) ? first : second;
  return {erase_at(a, from_a.origin_index), erase_at(b, from_b.origin_index)};
}

Mark head_mark(const HCParam& a, const HCParam& b) {
  if (a.empty() && b.empty())
    fail(Errc::length_mismatch, "head mark of two empty parameters");
  return unique_pattern(a, b).slots.front().mark;
}

}  // namespace upq
