#include "ordercraft/int128.hpp"

#include <ostream>
#include <stdexcept>

namespace ordercraft {

std::string Int128::str() const {
  if (v_ == 0) return "0";
  unsigned __int128 u;
  bool neg = v_ < 0;
  if (neg) {
    u = static_cast<unsigned __int128>(-(v_ + 1)) + 1;
  } else {
    u = static_cast<unsigned __int128>(v_);
  }
  char buf[45];
  int i = 45;
  while (u > 0) {
    buf[--i] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string out;
  if (neg) out.push_back('-');
  out.append(buf + i, buf + 45);
  return out;
}

Int128 Int128::parse(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("Int128::parse: empty number in '" + s + "'");
  unsigned __int128 u = 0;
  const unsigned __int128 limit =
      (static_cast<unsigned __int128>(1) << 127) - (neg ? 0 : 1);
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw std::invalid_argument("Int128::parse: bad digit in '" + s + "'");
    unsigned d = static_cast<unsigned>(s[i] - '0');
    if (u > (limit - d) / 10)
      throw std::invalid_argument("Int128::parse: overflow in '" + s + "'");
    u = u * 10 + d;
  }
  __int128 v;
  if (neg) {
    v = -static_cast<__int128>(u - 1) - 1;
  } else {
    v = static_cast<__int128>(u);
  }
  return Int128::raw(v);
}

std::ostream& operator<<(std::ostream& os, Int128 v) { return os << v.str(); }

}  // namespace ordercraft
