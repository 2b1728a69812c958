// Copyright 2026 The mupir Authors
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

#ifndef MUPIR_RATIONAL_H_
#define MUPIR_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace mupir {

using BigInt = boost::multiprecision::cpp_int;

// Exact fraction in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt num) : num_(std::move(num)), den_(1) {}  // NOLINT
  Rational(int64_t num) : num_(num), den_(1) {}            // NOLINT
  Rational(int num) : num_(num), den_(1) {}                // NOLINT
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool IsInteger() const { return den_ == 1; }
  BigInt Floor() const;
  BigInt Ceil() const;
  double ToDouble() const;

  // "num/den", always with the slash, e.g. "23/9", "0/1".
  std::string ToString() const;
  // Fixed-point decimal with `digits` fractional digits, rounded half away
  // from zero using exact arithmetic.
  std::string ToDecimal(int digits) const;
  // Accepts "a/b" or "a".
  static Rational Parse(std::string_view text);

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    return Rational(-a.num_, a.den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  void Normalize();

  BigInt num_;
  BigInt den_;
};

// Checked narrowing for values known to fit the protocol's index space.
int64_t ToInt64(const BigInt& value);

}  // namespace mupir

#endif  // MUPIR_RATIONAL_H_
