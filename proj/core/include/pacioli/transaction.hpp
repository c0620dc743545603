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

#ifndef PACIOLI_TRANSACTION_HPP
#define PACIOLI_TRANSACTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "pacioli/account_path.hpp"
#include "pacioli/date.hpp"
#include "pacioli/ledger.hpp"
#include "pacioli/source_span.hpp"
#include "pacioli/taccount.hpp"

namespace pacioli {

/// One summand of a transaction. Postings written in a journal are
/// single-sided; computed postings may carry a general pair.
struct Posting {
  AccountPath account;
  TAccount entry;

  static Posting debit(AccountPath account, Amount value) {
    return {std::move(account), TAccount::debit_of(std::move(value))};
  }
  static Posting credit(AccountPath account, Amount value) {
    return {std::move(account), TAccount::credit_of(std::move(value))};
  }

  bool is_single_sided() const { return entry.debit.is_zero() || entry.credit.is_zero(); }

  friend bool operator==(const Posting&, const Posting&) = default;
};

/// A dated set of postings whose sum is a zero T-account.
struct Transaction {
  Date date;
  std::string description;
  std::vector<Posting> postings;
  /// Where the transaction came from; not part of its identity.
  std::optional<SourceSpan> origin;

  friend bool operator==(const Transaction& a, const Transaction& b) {
    return a.date == b.date && a.description == b.description && a.postings == b.postings;
  }
};

/// The componentwise sum of all posting entries.
TAccount total(const Transaction& tx);

struct TransactionCheck {
  enum class Status { ok, empty, single_posting, imbalance };

  Status status = Status::ok;
  /// Debit minus credit of the posting sum; non-zero only for imbalance.
  SignedAmount residual;

  bool ok() const { return status == Status::ok; }
};

TransactionCheck validate_transaction(const Transaction& tx);

/// Adds every posting of a valid transaction to the ledger.
///
/// Throws LedgerError(empty_transaction | single_posting | imbalance |
/// unknown_account | non_leaf_posting) carrying the transaction's origin.
Ledger post(Ledger ledger, const Transaction& tx);

}  // namespace pacioli

#endif  // PACIOLI_TRANSACTION_HPP
