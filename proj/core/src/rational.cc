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

#include "mupir/rational.h"

#include <charconv>
#include <string>

#include "mupir/error.h"

namespace mupir {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

Rational::Rational(BigInt num, BigInt den)
    : num_(std::move(num)), den_(std::move(den)) {
  Require(den_ != 0, ErrorCode::kOutOfRange, "zero denominator");
  Normalize();
}

void Rational::Normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = gcd(abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

BigInt Rational::Floor() const {
  BigInt q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) q -= 1;
  return q;
}

BigInt Rational::Ceil() const {
  BigInt q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) q += 1;
  return q;
}

double Rational::ToDouble() const {
  return num_.convert_to<double>() / den_.convert_to<double>();
}

std::string Rational::ToString() const {
  return num_.str() + "/" + den_.str();
}

std::string Rational::ToDecimal(int digits) const {
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  BigInt mag = abs(num_) * scale;
  BigInt q = mag / den_;
  BigInt r = mag % den_;
  if (2 * r >= den_) q += 1;
  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= static_cast<size_t>(digits)) {
      s.insert(0, static_cast<size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - digits, ".");
  }
  if (num_ < 0 && q != 0) s.insert(0, "-");
  return s;
}

Rational Rational::Parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    Require(!part.empty(), ErrorCode::kConfig,
            "malformed rational '" + std::string(text) + "'");
    size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    Require(part.size() > start, ErrorCode::kConfig,
            "malformed rational '" + std::string(text) + "'");
    for (size_t i = start; i < part.size(); ++i) {
      Require(part[i] >= '0' && part[i] <= '9', ErrorCode::kConfig,
              "malformed rational '" + std::string(text) + "'");
    }
    // Leading zeros would select octal in the BigInt string constructor.
    const bool negative = part[0] == '-';
    std::string_view digits = part.substr(start);
    while (digits.size() > 1 && digits[0] == '0') digits.remove_prefix(1);
    BigInt value(std::string{digits});
    return negative ? BigInt(-value) : value;
  };
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt den = parse_int(text.substr(slash + 1));
  Require(den != 0, ErrorCode::kConfig, "zero denominator in '" +
                                            std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), den);
}

Rational& Rational::operator+=(const Rational& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ *= o.den_;
  Normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ *= o.den_;
  Normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  Normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  Require(o.num_ != 0, ErrorCode::kOutOfRange, "division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  Normalize();
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

int64_t ToInt64(const BigInt& value) {
  Require(value >= std::numeric_limits<int64_t>::min() &&
              value <= std::numeric_limits<int64_t>::max(),
          ErrorCode::kOutOfRange, "value " + value.str() + " exceeds int64");
  return value.convert_to<int64_t>();
}

}  // namespace mupir
