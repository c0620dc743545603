// Copyright 2026 The Pacioli Authors
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

#ifndef PACIOLI_AMOUNT_HPP
#define PACIOLI_AMOUNT_HPP

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace pacioli {

/// An exact, non-negative rational quantity of value.
///
/// Amounts are always held in lowest terms with a positive denominator, so
/// two amounts are equal iff their numerators and denominators are equal.
/// There is no way to construct a negative amount; direction lives in the
/// side of a T-account, not in the sign of a number.
class Amount {
 public:
  Amount() = default;
  explicit Amount(unsigned long value) : value_(value) {}

  /// `numerator / denominator`, reduced. Throws std::invalid_argument on a
  /// zero denominator or a negative result.
  Amount(const mpz_class& numerator, const mpz_class& denominator);

  static Amount ratio(unsigned long numerator, unsigned long denominator) {
    return Amount(mpz_class(numerator), mpz_class(denominator));
  }

  /// Parses the literal forms `123`, `123.45` and `2/25`. The decimal form is
  /// converted exactly, so `493827.16` becomes 49382716/100 = 12345679/2500.
  /// Throws std::invalid_argument with a short message ("zero denominator",
  /// "malformed amount") on rejection.
  static Amount parse(std::string_view text);

  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }
  const mpq_class& value() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }

  Amount operator+(const Amount& other) const;
  Amount operator*(const Amount& other) const;
  /// Throws std::domain_error when `divisor` is zero.
  Amount operator/(const Amount& divisor) const;

  /// `*this - other`; throws std::domain_error if the result would be negative.
  Amount minus(const Amount& other) const;

  Amount& operator+=(const Amount& other);

  friend bool operator==(const Amount& a, const Amount& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Amount& a, const Amount& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Reduced rational: "0", "7", "2/25".
  std::string to_string() const;

  /// Fixed-point rendering with `places` fractional digits, rounding half to
  /// even. Presentation only.
  std::string to_decimal(unsigned places) const;

 private:
  explicit Amount(mpq_class value);

  mpq_class value_{0};
};

const Amount& min(const Amount& a, const Amount& b);

enum class Sign : int { negative = -1, zero = 0, positive = 1 };

/// A signed net quantity. Only produced by balance() and its consumers.
class SignedAmount {
 public:
  SignedAmount() = default;
  /// Throws std::invalid_argument unless `sign` is zero exactly when
  /// `magnitude` is zero.
  SignedAmount(Sign sign, Amount magnitude);

  /// `plus - minus` as a signed quantity.
  static SignedAmount difference(const Amount& plus, const Amount& minus);
  static SignedAmount positive(const Amount& magnitude) { return difference(magnitude, Amount()); }
  static SignedAmount negative(const Amount& magnitude) { return difference(Amount(), magnitude); }

  Sign sign() const { return sign_; }
  const Amount& magnitude() const { return magnitude_; }
  bool is_zero() const { return sign_ == Sign::zero; }

  SignedAmount operator+(const SignedAmount& other) const;
  SignedAmount operator-() const;
  SignedAmount operator-(const SignedAmount& other) const { return *this + (-other); }

  friend bool operator==(const SignedAmount&, const SignedAmount&) = default;

  /// "0", "+100", "-4", "+1/5".
  std::string to_string() const;

 private:
  Sign sign_ = Sign::zero;
  Amount magnitude_;
};

}  // namespace pacioli

#endif  // PACIOLI_AMOUNT_HPP
