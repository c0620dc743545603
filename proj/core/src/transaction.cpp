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

#include "pacioli/transaction.hpp"

#include "pacioli/error.hpp"

namespace pacioli {

TAccount total(const Transaction& tx) {
  TAccount sum;
  for (const auto& p : tx.postings) {
    sum.debit += p.entry.debit;
    sum.credit += p.entry.credit;
  }
  return sum;
}

TransactionCheck validate_transaction(const Transaction& tx) {
  if (tx.postings.empty()) return {TransactionCheck::Status::empty, {}};
  if (tx.postings.size() < 2) return {TransactionCheck::Status::single_posting, {}};
  const SignedAmount residual = balance(total(tx));
  if (!residual.is_zero()) return {TransactionCheck::Status::imbalance, residual};
  return {};
}

Ledger post(Ledger ledger, const Transaction& tx) {
  const auto label = [&] { return to_string(tx.date) + " \"" + tx.description + "\""; };
  const TransactionCheck check = validate_transaction(tx);
  switch (check.status) {
    case TransactionCheck::Status::ok: break;
    case TransactionCheck::Status::empty:
      throw LedgerError(ErrorKind::empty_transaction, "transaction " + label() + " has no postings", std::nullopt,
                        tx.origin);
    case TransactionCheck::Status::single_posting:
      throw LedgerError(ErrorKind::single_posting, "transaction " + label() + " needs at least two postings",
                        std::nullopt, tx.origin);
    case TransactionCheck::Status::imbalance:
      throw LedgerError(ErrorKind::imbalance,
                        "transaction " + label() + " does not sum to zero (residual " + check.residual.to_string() + ")",
                        check.residual, tx.origin);
  }
  for (const auto& p : tx.postings) {
    try {
      (void)ledger.at(p.account);
    } catch (const LedgerError& e) {
      throw LedgerError(e.kind(), std::string(e.what()) + " in transaction " + label(), std::nullopt, tx.origin);
    }
  }
  for (const auto& p : tx.postings) ledger = std::move(ledger).with_entry(p.account, p.entry);
  return ledger;
}

}  // namespace pacioli
