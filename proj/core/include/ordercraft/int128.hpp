#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace ordercraft {

// Signed 128-bit integer. All ordering metrics and arrangement costs are
// computed in this type: thresholds like n^10 * k' overflow 64-bit words
// long before the instances stop being interesting.
class Int128 {
 public:
  constexpr Int128() : v_(0) {}
  constexpr Int128(int v) : v_(v) {}
  constexpr Int128(long v) : v_(v) {}
  constexpr Int128(long long v) : v_(v) {}
  constexpr Int128(unsigned long long v) : v_(static_cast<__int128>(v)) {}

  static constexpr Int128 raw(__int128 v) {
    Int128 x;
    x.v_ = v;
    return x;
  }

  // Parses an optionally signed decimal string. Throws std::invalid_argument
  // on malformed input or overflow.
  static Int128 parse(const std::string& s);

  constexpr __int128 value() const { return v_; }

  friend constexpr Int128 operator+(Int128 a, Int128 b) { return raw(a.v_ + b.v_); }
  friend constexpr Int128 operator-(Int128 a, Int128 b) { return raw(a.v_ - b.v_); }
  friend constexpr Int128 operator*(Int128 a, Int128 b) { return raw(a.v_ * b.v_); }
  friend constexpr Int128 operator/(Int128 a, Int128 b) { return raw(a.v_ / b.v_); }
  friend constexpr Int128 operator%(Int128 a, Int128 b) { return raw(a.v_ % b.v_); }
  constexpr Int128 operator-() const { return raw(-v_); }

  Int128& operator+=(Int128 o) { v_ += o.v_; return *this; }
  Int128& operator-=(Int128 o) { v_ -= o.v_; return *this; }
  Int128& operator*=(Int128 o) { v_ *= o.v_; return *this; }

  friend constexpr bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
  friend constexpr bool operator!=(Int128 a, Int128 b) { return a.v_ != b.v_; }
  friend constexpr bool operator<(Int128 a, Int128 b) { return a.v_ < b.v_; }
  friend constexpr bool operator<=(Int128 a, Int128 b) { return a.v_ <= b.v_; }
  friend constexpr bool operator>(Int128 a, Int128 b) { return a.v_ > b.v_; }
  friend constexpr bool operator>=(Int128 a, Int128 b) { return a.v_ >= b.v_; }

  Int128 abs() const { return v_ < 0 ? raw(-v_) : *this; }

  // Decimal representation; the only sanctioned way to serialize values.
  std::string str() const;

 private:
  __int128 v_;
};

std::ostream& operator<<(std::ostream& os, Int128 v);

inline Int128 int128_pow(Int128 base, unsigned exp) {
  Int128 r(1);
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace ordercraft
