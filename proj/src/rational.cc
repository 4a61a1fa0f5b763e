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
#include "labeldense/rational.h"

#include <cctype>
#include <limits>
#include <stdexcept>

#include "labeldense/errors.h"

namespace labeldense {
namespace {

__int128 Gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

constexpr __int128 kMax = std::numeric_limits<int64_t>::max();

}  // namespace

Rational MakeRational(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = Gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < -kMax || den > kMax) {
    throw std::overflow_error("rational value exceeds 64-bit range");
  }
  return Rational(static_cast<int64_t>(num), static_cast<int64_t>(den));
}

Rational::Rational(int64_t num, int64_t den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  __int128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  const __int128 g = Gcd(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  if (n > kMax || n < -kMax || d > kMax) {
    throw std::overflow_error("rational value exceeds 64-bit range");
  }
  num_ = static_cast<int64_t>(n);
  den_ = static_cast<int64_t>(d);
}

Rational operator+(const Rational& a, const Rational& b) {
  return MakeRational(static_cast<__int128>(a.num_) * b.den_ +
                          static_cast<__int128>(b.num_) * a.den_,
                      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return MakeRational(static_cast<__int128>(a.num_) * b.num_,
                      static_cast<__int128>(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("division by zero rational");
  return MakeRational(static_cast<__int128>(a.num_) * b.den_,
                      static_cast<__int128>(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

double Rational::ToDouble() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::ToString() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::Parse(std::string_view text) {
  auto fail = [&]() -> InputError {
    return InputError("not a number: '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const Rational n = Parse(text.substr(0, slash));
    const Rational d = Parse(text.substr(slash + 1));
    if (n.den() != 1 || d.den() != 1) throw fail();
    if (d.is_zero()) throw InputError("zero denominator in '" +
                                      std::string(text) + "'");
    return Rational(n.num(), d.num());
  }

  size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  __int128 mantissa = 0;
  int scale = 0;  // power of ten dividing the mantissa
  bool any_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      any_digit = true;
      mantissa = mantissa * 10 + (c - '0');
      if (seen_point) ++scale;
      if (mantissa > kMax) throw std::overflow_error("number too long");
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw fail();
  int exponent = 0;
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw fail();
    ++i;
    bool exp_negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      exp_negative = text[i] == '-';
      ++i;
    }
    if (i == text.size()) throw fail();
    for (; i < text.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) throw fail();
      exponent = exponent * 10 + (text[i] - '0');
      if (exponent > 36) throw std::overflow_error("exponent too large");
    }
    if (exp_negative) exponent = -exponent;
  }
  scale -= exponent;
  __int128 num = negative ? -mantissa : mantissa;
  __int128 den = 1;
  for (; scale > 0; --scale) {
    den *= 10;
    if (den > kMax) throw std::overflow_error("number too precise");
  }
  for (; scale < 0; ++scale) {
    num *= 10;
    if (num > kMax || num < -kMax) throw std::overflow_error("number too large");
  }
  return MakeRational(num, den);
}

}  // namespace labeldense
