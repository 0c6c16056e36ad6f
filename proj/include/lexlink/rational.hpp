// Copyright 2026 The lexlink Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEXLINK_RATIONAL_HPP
#define LEXLINK_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace lexlink {

// Exact fraction over 64-bit integers, always stored in lowest terms with a
// positive denominator. Comparisons cross-multiply in 128 bits, so two
// values order identically however they were produced.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t num, std::int64_t den = 1)  // NOLINT
      : num_(num), den_(den) {
    if (den_ == 0) throw std::domain_error("Rational: zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // Decimal rendering rounded half away from zero, computed on the exact
  // value: Rational(24535, 12039).to_fixed(2) == "2.04".
  std::string to_fixed(int decimals) const {
    __int128 scale = 1;
    for (int i = 0; i < decimals; ++i) scale *= 10;
    __int128 n = num_;
    bool negative = n < 0;
    if (negative) n = -n;
    __int128 scaled = (2 * n * scale + den_) / (2 * static_cast<__int128>(den_));
    __int128 whole = scaled / scale;
    __int128 frac = scaled % scale;
    std::string out = negative && scaled != 0 ? "-" : "";
    out += to_string(whole);
    if (decimals > 0) {
      std::string f = to_string(frac);
      out += '.';
      out.append(static_cast<std::size_t>(decimals) - f.size(), '0');
      out += f;
    }
    return out;
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;

  friend constexpr std::strong_ordering operator<=>(const Rational& a,
                                                    const Rational& b) {
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend constexpr Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = std::gcd(a.num_, b.den_);
    std::int64_t g2 = std::gcd(b.num_, a.den_);
    if (g1 == 0) g1 = 1;
    if (g2 == 0) g2 = 1;
    return Rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num_;
    if (r.den_ != 1) os << '/' << r.den_;
    return os;
  }

 private:
  static std::string to_string(__int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace lexlink

#endif  // LEXLINK_RATIONAL_HPP
