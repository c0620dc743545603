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

#include "pacioli/amount.hpp"

#include <algorithm>
#include <stdexcept>

namespace pacioli {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

mpz_class digits_to_mpz(std::string_view s) { return mpz_class(std::string(s), 10); }

}  // namespace

Amount::Amount(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::invalid_argument("negative amount");
}

Amount::Amount(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
  if (sgn(value_) < 0) throw std::invalid_argument("negative amount");
}

Amount Amount::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) throw std::invalid_argument("malformed amount");
    const mpz_class d = digits_to_mpz(den);
    if (d == 0) throw std::invalid_argument("zero denominator");
    return Amount(digits_to_mpz(num), d);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) throw std::invalid_argument("malformed amount");
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    std::string joined(whole);
    joined.append(frac);
    return Amount(digits_to_mpz(joined), scale);
  }
  if (!all_digits(text)) throw std::invalid_argument("malformed amount");
  return Amount(digits_to_mpz(text), mpz_class(1));
}

Amount Amount::operator+(const Amount& other) const { return Amount(mpq_class(value_ + other.value_)); }

Amount Amount::operator*(const Amount& other) const { return Amount(mpq_class(value_ * other.value_)); }

Amount Amount::operator/(const Amount& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero amount");
  return Amount(mpq_class(value_ / divisor.value_));
}

Amount Amount::minus(const Amount& other) const {
  if (*this < other) throw std::domain_error("amount subtraction would go negative");
  return Amount(mpq_class(value_ - other.value_));
}

Amount& Amount::operator+=(const Amount& other) {
  value_ += other.value_;
  return *this;
}

std::string Amount::to_string() const {
  if (denominator() == 1) return numerator().get_str();
  return numerator().get_str() + "/" + denominator().get_str();
}

std::string Amount::to_decimal(unsigned places) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  const mpz_class scaled = numerator() * scale;
  mpz_class q;
  mpz_class r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_mpz_t(), denominator().get_mpz_t());
  const int half = cmp(mpz_class(2 * r), denominator());
  if (half > 0 || (half == 0 && mpz_odd_p(q.get_mpz_t()) != 0)) q += 1;

  std::string digits = q.get_str();
  if (places == 0) return digits;
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, 1, '.');
  return digits;
}

const Amount& min(const Amount& a, const Amount& b) { return b < a ? b : a; }

SignedAmount::SignedAmount(Sign sign, Amount magnitude) : sign_(sign), magnitude_(std::move(magnitude)) {
  if ((sign_ == Sign::zero) != magnitude_.is_zero()) {
    throw std::invalid_argument("sign must be zero exactly when magnitude is zero");
  }
}

SignedAmount SignedAmount::difference(const Amount& plus, const Amount& minus) {
  const auto order = plus <=> minus;
  if (order == 0) return SignedAmount();
  if (order > 0) return SignedAmount(Sign::positive, plus.minus(minus));
  return SignedAmount(Sign::negative, minus.minus(plus));
}

SignedAmount SignedAmount::operator+(const SignedAmount& other) const {
  if (sign_ == Sign::zero) return other;
  if (other.sign_ == Sign::zero) return *this;
  if (sign_ == other.sign_) return SignedAmount(sign_, magnitude_ + other.magnitude_);
  const SignedAmount net = difference(magnitude_, other.magnitude_);
  return sign_ == Sign::positive ? net : -net;
}

SignedAmount SignedAmount::operator-() const {
  switch (sign_) {
    case Sign::positive: return SignedAmount(Sign::negative, magnitude_);
    case Sign::negative: return SignedAmount(Sign::positive, magnitude_);
    case Sign::zero: break;
  }
  return *this;
}

std::string SignedAmount::to_string() const {
  switch (sign_) {
    case Sign::positive: return "+" + magnitude_.to_string();
    case Sign::negative: return "-" + magnitude_.to_string();
    case Sign::zero: break;
  }
  return "0";
}

}  // namespace pacioli
