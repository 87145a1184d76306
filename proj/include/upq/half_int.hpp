#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace upq {

/// Exact half-integer, stored as twice its value. No floating point:
/// equality, ordering and hashing are bit-exact.
class HalfInt {
public:
  constexpr HalfInt() : twice_(0) {}

  /// Value t/2.
  static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt(t); }
  /// Integer value n.
  static constexpr HalfInt whole(std::int64_t n) { return HalfInt(2 * n); }

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_integral() const { return twice_ % 2 == 0; }
  constexpr bool is_half_odd() const { return twice_ % 2 != 0; }

  constexpr bool is_zero() const { return twice_ == 0; }
  constexpr bool is_positive() const { return twice_ > 0; }
  constexpr bool is_negative() const { return twice_ < 0; }

  constexpr HalfInt operator-() const { return HalfInt(-twice_); }
  constexpr HalfInt& operator+=(HalfInt o) {
    twice_ += o.twice_;
    return *this;
  }
  constexpr HalfInt& operator-=(HalfInt o) {
    twice_ -= o.twice_;
    return *this;
  }
  friend constexpr HalfInt operator+(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ + b.twice_);
  }
  friend constexpr HalfInt operator-(HalfInt a, HalfInt b) {
    return HalfInt(a.twice_ - b.twice_);
  }
  friend constexpr auto operator<=>(HalfInt a, HalfInt b) = default;

  /// "2", "0", "-1/2", "3/2".
  std::string str() const {
    if (is_integral()) return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
  }

private:
  explicit constexpr HalfInt(std::int64_t t) : twice_(t) {}
  std::int64_t twice_;
};

enum class Sign : std::int8_t { minus = -1, plus = +1 };

constexpr Sign flipped(Sign s) {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

constexpr int sign_value(Sign s) { return static_cast<int>(s); }

constexpr char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

}  // namespace upq
