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

#ifndef PACIOLI_TACCOUNT_HPP
#define PACIOLI_TACCOUNT_HPP

#include <optional>
#include <span>
#include <string>

#include "pacioli/amount.hpp"

namespace pacioli {

/// An ordered pair (debit, credit). Under componentwise addition the
/// equivalence classes of these pairs form a commutative group whose neutral
/// element is the class of every (x, x).
///
/// `operator==` is component equality. Use equivalent() for class equality.
struct TAccount {
  Amount debit;
  Amount credit;

  static TAccount debit_of(Amount value) { return {std::move(value), Amount()}; }
  static TAccount credit_of(Amount value) { return {Amount(), std::move(value)}; }

  friend bool operator==(const TAccount&, const TAccount&) = default;
};

enum class Side { debit, credit };

/// Componentwise sum.
TAccount add(const TAccount& a, const TAccount& b);
inline TAccount operator+(const TAccount& a, const TAccount& b) { return add(a, b); }

/// Sum of a range; the empty sum is (0, 0).
TAccount sum(std::span<const TAccount> accounts);

/// (credit, debit).
TAccount inverse(const TAccount& a);

/// Cross-sum test: a.debit + b.credit == b.debit + a.credit.
bool equivalent(const TAccount& a, const TAccount& b);

/// The class representative with min(debit, credit) == 0.
TAccount reduce(const TAccount& a);

bool is_canonical(const TAccount& a);

/// debit - credit.
SignedAmount balance(const TAccount& a);

bool is_zero(const TAccount& a);

TAccount scale(const TAccount& a, const Amount& k);

/// The side carrying the non-zero component after reduction, or nullopt for
/// a zero representative.
std::optional<Side> side_of(const TAccount& a);

/// "(1, 0)", "(0, 2/5)".
std::string to_string(const TAccount& a);

}  // namespace pacioli

#endif  // PACIOLI_TACCOUNT_HPP
