#include "upq/aq_spectrum.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "upq/error.hpp"
#include "upq/howe_theta.hpp"

namespace upq {
namespace {

void require_nonnegative_k(int k) {
  if (k < 0) throw std::invalid_argument("k must be >= 0");
}

void require_rank(int r, int s, std::size_t expected, const char* what) {
  if (r < 0 || s < 0 || r + s != static_cast<int>(expected))
    fail(Errc::rank_mismatch,
         std::string(what) + ": need r + s = " + std::to_string(expected) +
             ", got (" + std::to_string(r) + "," + std::to_string(s) + ")");
}

void require_half_odd(const HCParam& d, const char* what) {
  if (!d.empty() && d.parity() != Parity::half_odd)
    fail(Errc::parity_violation,
         std::string(what) + " requires half-odd entries");
}

void require_integral(const HCParam& d, const char* what) {
  if (!d.empty() && d.parity() != Parity::integral)
    fail(Errc::parity_violation,
         std::string(what) + " requires integral entries");
}

bool in_open_interval(HalfInt v, int k) {
  return HalfInt::whole(-k) < v && v < HalfInt::whole(0);
}

// Swapped decomposition shared by the laws: positive entries keep their
// side, negative entries change side.
struct SwappedParts {
  std::vector<HalfInt> mu_plus;
  std::vector<HalfInt> mu_minus;
};

SwappedParts swapped_parts(const HCParam& sigma) {
  SwappedParts out;
  for (std::size_t i = 0; i < sigma.rank(); ++i) {
    const HalfInt v = sigma.entry(i);
    const bool plus_side =
        v.is_negative() ? sigma.sign(i) == Sign::minus
                        : sigma.sign(i) == Sign::plus;
    (plus_side ? out.mu_plus : out.mu_minus).push_back(v);
  }
  return out;
}

std::vector<HalfInt> shifted(const std::vector<HalfInt>& values, int k) {
  std::vector<HalfInt> out(values);
  for (HalfInt& v : out) v += HalfInt::whole(k);
  return out;
}

std::vector<HalfInt> negated_portion(const std::vector<HalfInt>& values,
                                     bool positive) {
  std::vector<HalfInt> out;
  for (HalfInt v : values)
    if (positive ? v.is_positive() : v.is_negative()) out.push_back(-v);
  return out;
}

std::vector<HalfInt> concat(std::vector<HalfInt> a,
                            const std::vector<HalfInt>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

AqParam AqParam::validate(int r, int s, HalfInt k1, HalfInt k2) {
  if (r < 0 || s < 0)
    fail(Errc::rank_mismatch, "signature components must be nonnegative");
  if (k1 < k2)
    fail(Errc::not_descending,
         "normalized object requires k1 >= k2, got k1 = " + k1.str() +
             ", k2 = " + k2.str());
  return AqParam{r, s, k1, k2};
}

std::optional<HCParam> first_law_membership(const HCParam& eta_t, int r,
                                            int s, int k) {
  require_nonnegative_k(k);
  require_rank(r, s, eta_t.rank(), "first branching law");
  require_half_odd(eta_t, "first branching law");

  int plus_outside = 0, minus_outside = 0;  // signed counts off (-k, 0)
  int plus_inside = 0, minus_inside = 0;    // signed counts in (-k, 0)
  for (std::size_t i = 0; i < eta_t.rank(); ++i) {
    const bool plus = eta_t.sign(i) == Sign::plus;
    if (in_open_interval(eta_t.entry(i), k)) {
      (plus ? plus_inside : minus_inside)++;
    } else {
      const bool positive = eta_t.entry(i).is_positive();
      if (positive == plus)
        ++plus_outside;  // counts toward r
      else
        ++minus_outside;  // counts toward s
    }
  }
  // Entries inside (-k, 0) are negative; with t = +1 they count toward s,
  // with t = -1 toward r.
  const int r_count = plus_outside + minus_inside;
  const int s_count = minus_outside + plus_inside;
  if (r_count != r || s_count != s) return std::nullopt;
  if (plus_inside != minus_inside) return std::nullopt;

  std::vector<Sign> minus_t_prime(eta_t.signs());
  for (std::size_t i = 0; i < eta_t.rank(); ++i) {
    // flip inside the interval (t -> t'), then negate everything
    if (!in_open_interval(eta_t.entry(i), k))
      minus_t_prime[i] = flipped(minus_t_prime[i]);
  }
  const HCParam dual =
      HCParam::validate(eta_t.entries(), std::move(minus_t_prime));
  return dual.contragredient().det_twist(HalfInt::whole(-k));
}

std::optional<HCParam> first_law_membership_via_theta(const HCParam& sigma,
                                                      int r, int s, int k) {
  require_nonnegative_k(k);
  const int p = sigma.num_plus();
  const int q = sigma.num_minus();
  const ThetaResult lift = theta_equal_rank(sigma, r, s);
  if (!lift.image) return std::nullopt;
  const HCParam twisted_dual =
      lift.image->det_twist(HalfInt::whole(k)).contragredient();
  const ThetaResult descent = theta_equal_rank(twisted_dual, q, p);
  return descent.image;
}

bool first_law_balance_criterion(const HCParam& sigma, int r, int s, int k) {
  require_nonnegative_k(k);
  const ThetaResult lift = theta_equal_rank(sigma, r, s);
  if (!lift.image) return false;
  int balance = 0;
  for (std::size_t i = 0; i < lift.image->rank(); ++i)
    if (in_open_interval(lift.image->entry(i), k))
      balance += lift.image->sign(i) == Sign::plus ? 1 : -1;
  return balance == 0;
}

std::optional<HCParam> first_law_membership(const AqParam& aq,
                                            const HCParam& eta_t) {
  if (!aq.drop().is_integral())
    fail(Errc::parity_violation,
         "first branching law requires an integral drop k1 - k2");
  const int k = static_cast<int>(aq.drop().twice() / 2);
  const auto partner =
      first_law_membership(eta_t.det_twist(-aq.twist()), aq.r, aq.s, k);
  if (!partner) return std::nullopt;
  return partner->det_twist(aq.twist());
}

Spectrum first_law_spectrum(int r, int s, int k, int p, int q,
                            Window window) {
  require_nonnegative_k(k);
  if (p < 0 || q < 0 || p + q != r + s)
    fail(Errc::rank_mismatch, "first branching law: need p + q = r + s");
  if (r < 0 || s < 0)
    fail(Errc::rank_mismatch, "signature components must be nonnegative");

  Spectrum out;
  out.truncated = true;
  if (window.empty()) return out;

  // Half-odd values in the window, descending.
  std::vector<HalfInt> values;
  for (std::int64_t t = window.hi2x; t >= window.lo2x; --t)
    if (t % 2 != 0) values.push_back(HalfInt::from_twice(t));
  const int n = r + s;
  if (static_cast<int>(values.size()) < n) {
    if (n > 0) return out;
  }

  // All descending n-tuples from `values`, then all sign vectors with r
  // plus signs: the candidate equal-rank images of signature (r, s).
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  const auto advance = [&]() {
    int i = n - 1;
    const int m = static_cast<int>(values.size());
    while (i >= 0 && idx[i] == m - n + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    return true;
  };

  do {
    std::vector<HalfInt> chi(n);
    for (int i = 0; i < n; ++i) chi[i] = values[idx[i]];
    for (const HCParam& image : l_packet(chi, r)) {
      const Portions pt = image.split_portions();
      const int p_count = static_cast<int>(pt.pos_plus.size()) +
                          static_cast<int>(pt.neg_minus.size());
      if (p_count != p) continue;
      const std::vector<HalfInt> lambda_plus = image.plus_part();
      const std::vector<HalfInt> lambda_minus = image.minus_part();
      int balance = 0;
      for (HalfInt v : lambda_plus)
        if (in_open_interval(v, k)) ++balance;
      for (HalfInt v : lambda_minus)
        if (in_open_interval(v, k)) --balance;
      if (balance != 0) continue;

      const HCParam left = HCParam::from_parts(
          concat(pt.pos_plus, pt.neg_minus), concat(pt.pos_minus, pt.neg_plus));
      const std::vector<HalfInt> a = shifted(lambda_plus, k);
      const std::vector<HalfInt> b = shifted(lambda_minus, k);
      const HCParam right =
          HCParam::from_parts(concat(negated_portion(a, false),
                                     negated_portion(b, true)),
                              concat(negated_portion(b, false),
                                     negated_portion(a, true)));
      assert(left.num_plus() == p && left.num_minus() == q);
      assert(right.num_plus() == q && right.num_minus() == p);
      out.pairs.push_back({left, right});
    }
  } while (n > 0 && advance());

  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const SpectrumPair& x, const SpectrumPair& y) {
              if (x.left != y.left) return x.left < y.left;
              return x.right < y.right;
            });
  return out;
}

SecondLawResult second_law_membership(const HCParam& sigma, int r, int s,
                                      int k) {
  if (k < 1) throw std::invalid_argument("second branching law needs k >= 1");
  require_rank(r, s, sigma.rank() + 1, "second branching law");
  require_integral(sigma, "second branching law");
  for (std::size_t i = 0; i < sigma.rank(); ++i) {
    const HalfInt v = sigma.entry(i);
    if (v.is_zero() || v == HalfInt::whole(-k))
      fail(Errc::zero_or_minus_k_entry,
           "entry " + v.str() + " equals 0 or -k");
  }

  const SwappedParts mu = swapped_parts(sigma);
  const int a = static_cast<int>(mu.mu_plus.size());

  SecondLawResult out;
  // The zero entry of the correspondence image sits on the side whose
  // cardinality equation matches the requested r.
  bool extra_on_plus;
  if (a == r - 1) {
    extra_on_plus = true;
  } else if (a == r) {
    extra_on_plus = false;
  } else {
    out.absence = SecondLawAbsence::theta_image_not_discrete;
    return out;
  }

  int inside_plus = 0, inside_minus = 0;
  for (HalfInt v : mu.mu_plus)
    if (in_open_interval(v, k)) ++inside_plus;
  for (HalfInt v : mu.mu_minus)
    if (in_open_interval(v, k)) ++inside_minus;

  // Balance decides which side of the partner receives the zero.
  ZeroSlot slot;
  if (extra_on_plus) {
    if (inside_plus == inside_minus)
      slot = ZeroSlot::in_plus;
    else if (inside_plus + 1 == inside_minus)
      slot = ZeroSlot::in_minus;
    else {
      out.absence = SecondLawAbsence::unbalanced_interval_counts;
      return out;
    }
  } else {
    if (inside_plus == inside_minus + 1)
      slot = ZeroSlot::in_plus;
    else if (inside_plus == inside_minus)
      slot = ZeroSlot::in_minus;
    else {
      out.absence = SecondLawAbsence::unbalanced_interval_counts;
      return out;
    }
  }

  std::vector<HalfInt> a_side = shifted(mu.mu_plus, k);
  std::vector<HalfInt> b_side = shifted(mu.mu_minus, k);
  (extra_on_plus ? a_side : b_side).push_back(HalfInt::whole(k));

  std::vector<HalfInt> plus_part =
      concat(negated_portion(a_side, false), negated_portion(b_side, true));
  std::vector<HalfInt> minus_part =
      concat(negated_portion(b_side, false), negated_portion(a_side, true));
  (slot == ZeroSlot::in_plus ? plus_part : minus_part)
      .push_back(HalfInt::whole(0));

  out.partner = HCParam::from_parts(plus_part, minus_part);
  out.partner_zero_slot = slot;
  return out;
}

SecondLawResult second_law_membership(const AqParam& aq,
                                      const HCParam& sigma) {
  if (!aq.drop().is_integral())
    fail(Errc::parity_violation,
         "second branching law requires an integral drop k1 - k2");
  const int k = static_cast<int>(aq.drop().twice() / 2);
  SecondLawResult out =
      second_law_membership(sigma.det_twist(-aq.twist()), aq.r, aq.s, k);
  if (out.partner) out.partner = out.partner->det_twist(aq.twist());
  return out;
}

HCParam induction_partner(const HCParam& sigma, int k,
                          ZeroSlot partner_zero_slot) {
  if (k < 1) throw std::invalid_argument("induction partner needs k >= 1");
  require_integral(sigma, "induction partner");
  for (std::size_t i = 0; i < sigma.rank(); ++i) {
    const HalfInt v = sigma.entry(i);
    if (HalfInt::whole(-k) <= v && v <= HalfInt::whole(0))
      fail(Errc::entry_in_forbidden_interval,
           "entry " + v.str() + " lies in [-" + std::to_string(k) + ", 0]");
  }
  std::vector<HalfInt> plus_part = sigma.minus_part();
  std::vector<HalfInt> minus_part = sigma.plus_part();
  if (partner_zero_slot == ZeroSlot::in_plus) {
    plus_part.push_back(HalfInt::whole(-k));
    minus_part.push_back(HalfInt::whole(0));
  } else {
    plus_part.push_back(HalfInt::whole(0));
    minus_part.push_back(HalfInt::whole(-k));
  }
  return HCParam::from_parts(plus_part, minus_part)
      .contragredient()
      .det_twist(HalfInt::whole(-k));
}

std::optional<ZeroSlot> applicable_induction_variant(const HCParam& sigma,
                                                     int r, int s) {
  require_rank(r, s, sigma.rank() + 1, "induction variant");
  if (sigma.has_zero_entry())
    fail(Errc::zero_or_minus_k_entry, "parameter has a zero entry");
  const int a = static_cast<int>(swapped_parts(sigma).mu_plus.size());
  if (a == r - 1) return ZeroSlot::in_plus;
  if (a == r) return ZeroSlot::in_minus;
  return std::nullopt;
}

}  // namespace upq
