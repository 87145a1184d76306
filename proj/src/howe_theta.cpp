#include "upq/howe_theta.hpp"

#include "upq/error.hpp"

namespace upq {
namespace {

// Common core of the three recipes: positive entries keep their sign,
// negative entries flip it. Entries must be nonzero.
std::vector<Sign> flipped_negative_signs(const HCParam& sigma) {
  std::vector<Sign> signs(sigma.signs());
  for (std::size_t i = 0; i < sigma.rank(); ++i)
    if (sigma.entry(i).is_negative()) signs[i] = flipped(signs[i]);
  return signs;
}

}  // namespace

ThetaResult theta_equal_rank(const HCParam& sigma, int r, int s) {
  if (r < 0 || s < 0 || r + s != static_cast<int>(sigma.rank()))
    fail(Errc::rank_mismatch,
         "target signature (" + std::to_string(r) + "," + std::to_string(s) +
             ") must have r + s = " + std::to_string(sigma.rank()));
  if (!sigma.empty() && sigma.parity() != Parity::half_odd)
    fail(Errc::parity_violation,
         "equal-rank recipe requires half-odd entries");
  std::vector<Sign> signs = flipped_negative_signs(sigma);
  int plus = 0;
  for (Sign g : signs)
    if (g == Sign::plus) ++plus;
  ThetaResult out;
  out.target_r = r;
  out.target_s = s;
  if (plus == r)
    out.image = HCParam::validate(sigma.entries(), std::move(signs));
  return out;
}

ThetaDescent theta_down_one(const HCParam& sigma) {
  if (sigma.empty()) fail(Errc::no_zero_entry, "parameter has no zero entry");
  if (sigma.parity() != Parity::integral)
    fail(Errc::mixed_parity, "rank-lowering recipe requires integral entries");
  std::size_t zero_at = sigma.rank();
  for (std::size_t i = 0; i < sigma.rank(); ++i)
    if (sigma.entry(i).is_zero()) zero_at = i;
  if (zero_at == sigma.rank())
    fail(Errc::no_zero_entry, "parameter has no zero entry");

  const ZeroSlot slot = sigma.sign(zero_at) == Sign::plus
                            ? ZeroSlot::in_plus
                            : ZeroSlot::in_minus;
  std::vector<HalfInt> entries;
  std::vector<Sign> signs;
  entries.reserve(sigma.rank() - 1);
  signs.reserve(sigma.rank() - 1);
  for (std::size_t i = 0; i < sigma.rank(); ++i) {
    if (i == zero_at) continue;
    entries.push_back(sigma.entry(i));
    signs.push_back(sigma.entry(i).is_negative() ? flipped(sigma.sign(i))
                                                 : sigma.sign(i));
  }
  return {HCParam::validate(std::move(entries), std::move(signs)), slot};
}

HCParam theta_up_one(const HCParam& sigma, ZeroSlot slot) {
  if (sigma.has_zero_entry())
    fail(Errc::zero_entry_present,
         "rank-raising recipe requires nonzero entries");
  if (!sigma.empty() && sigma.parity() != Parity::integral)
    fail(Errc::parity_violation,
         "rank-raising recipe requires integral entries");
  std::vector<HalfInt> entries;
  std::vector<Sign> signs = flipped_negative_signs(sigma);
  entries.reserve(sigma.rank() + 1);
  std::vector<Sign> out_signs;
  out_signs.reserve(sigma.rank() + 1);
  bool inserted = false;
  for (std::size_t i = 0; i < sigma.rank(); ++i) {
    if (!inserted && sigma.entry(i).is_negative()) {
      entries.push_back(HalfInt::whole(0));
      out_signs.push_back(slot == ZeroSlot::in_plus ? Sign::plus
                                                    : Sign::minus);
      inserted = true;
    }
    entries.push_back(sigma.entry(i));
    out_signs.push_back(signs[i]);
  }
  if (!inserted) {
    entries.push_back(HalfInt::whole(0));
    out_signs.push_back(slot == ZeroSlot::in_plus ? Sign::plus : Sign::minus);
  }
  return HCParam::validate(std::move(entries), std::move(out_signs));
}

}  // namespace upq
