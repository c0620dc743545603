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

#include "pacioli/taccount.hpp"

namespace pacioli {

TAccount add(const TAccount& a, const TAccount& b) { return {a.debit + b.debit, a.credit + b.credit}; }

TAccount sum(std::span<const TAccount> accounts) {
  TAccount total;
  for (const auto& a : accounts) {
    total.debit += a.debit;
    total.credit += a.credit;
  }
  return total;
}

TAccount inverse(const TAccount& a) { return {a.credit, a.debit}; }

bool equivalent(const TAccount& a, const TAccount& b) { return a.debit + b.credit == b.debit + a.credit; }

TAccount reduce(const TAccount& a) {
  const Amount& common = min(a.debit, a.credit);
  return {a.debit.minus(common), a.credit.minus(common)};
}

bool is_canonical(const TAccount& a) { return a.debit.is_zero() || a.credit.is_zero(); }

SignedAmount balance(const TAccount& a) { return SignedAmount::difference(a.debit, a.credit); }

bool is_zero(const TAccount& a) { return a.debit == a.credit; }

TAccount scale(const TAccount& a, const Amount& k) { return {a.debit * k, a.credit * k}; }

std::optional<Side> side_of(const TAccount& a) {
  switch (balance(a).sign()) {
    case Sign::positive: return Side::debit;
    case Sign::negative: return Side::credit;
    case Sign::zero: break;
  }
  return std::nullopt;
}

std::string to_string(const TAccount& a) {
  return "(" + a.debit.to_string() + ", " + a.credit.to_string() + ")";
}

}  // namespace pacioli
