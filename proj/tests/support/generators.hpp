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

#ifndef PACIOLI_TESTS_GENERATORS_HPP
#define PACIOLI_TESTS_GENERATORS_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pacioli/journal.hpp"

namespace pacioli::testing {

using Rng = std::mt19937_64;

/// numerator in [0, max_num], denominator in [1, max_den].
Amount random_amount(Rng& rng, unsigned long max_num = 1'000'000, unsigned long max_den = 1'000);
Amount random_positive_amount(Rng& rng, unsigned long max_num = 1'000'000, unsigned long max_den = 1'000);
TAccount random_taccount(Rng& rng, unsigned long max_num = 1'000'000, unsigned long max_den = 1'000);

Date random_date(Rng& rng, Date first, int span_days);

struct JournalShape {
  std::size_t max_accounts = 50;
  std::size_t max_transactions = 200;
  std::size_t max_postings = 6;
  bool with_basis = true;
  bool with_schedules = true;
  /// Descriptions drawn from a hostile alphabet: quotes, backslashes, ';',
  /// non-ASCII text.
  bool awkward_descriptions = true;
};

/// A journal whose every transaction balances and posts only to declared
/// leaves. Dates fall within one year so many transactions share a date.
Journal random_journal(Rng& rng, const JournalShape& shape = {});

/// Random text that is valid UTF-8 and leans towards journal-like tokens.
std::string random_utf8_text(Rng& rng, std::size_t max_length);

/// Brute-force single-column ledger: one signed rational per account, each
/// posting adding debit minus credit. Deliberately built on raw mpq_class
/// and never on TAccount.
class SignedLedgerOracle {
 public:
  void post(const Transaction& tx);
  mpq_class at(const AccountPath& account) const;

 private:
  std::map<AccountPath, mpq_class> net_;
};

/// The engine's view of an account's net, as a raw rational, for comparison
/// with the oracle.
mpq_class to_mpq(const SignedAmount& value);

}  // namespace pacioli::testing

#endif  // PACIOLI_TESTS_GENERATORS_HPP
