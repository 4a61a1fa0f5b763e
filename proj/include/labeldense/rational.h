// Copyright 2026 The LabelDense Authors
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
#ifndef LABELDENSE_RATIONAL_H_
#define LABELDENSE_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace labeldense {

// Exact fraction over int64 with a positive, reduced denominator. All
// arithmetic is overflow-checked and throws std::overflow_error rather than
// wrapping. Comparisons cross-multiply in 128 bits and never overflow.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(int64_t value) : num_(value), den_(1) {}  // NOLINT: implicit
  Rational(int64_t num, int64_t den);

  // Accepts "7", "-2.25", "3/4", "1e-4", "2.5E+1".
  static Rational Parse(std::string_view text);

  int64_t num() const { return num_; }
  int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  double ToDouble() const;
  // "8/5", or "3" when integral.
  std::string ToString() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  int64_t num_ = 0;
  int64_t den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.ToString();
}

// Reduces a 128-bit fraction into a Rational, throwing if it does not fit.
Rational MakeRational(__int128 num, __int128 den);

}  // namespace labeldense

#endif  // LABELDENSE_RATIONAL_H_
