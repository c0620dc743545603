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

#ifndef PACIOLI_JOURNAL_HPP
#define PACIOLI_JOURNAL_HPP

#include <optional>
#include <vector>

#include "pacioli/ledger.hpp"
#include "pacioli/matching.hpp"
#include "pacioli/transaction.hpp"

namespace pacioli {

/// Directives plus a date-ordered list of transactions.
///
/// Transactions are kept sorted by date; transactions sharing a date keep
/// the order they were added in. Schedule directives are expanded into
/// additional transactions by effective_transactions().
class Journal {
 public:
  const std::optional<Amount>& basis() const { return basis_; }
  const std::vector<AccountPath>& accounts() const { return accounts_; }
  const std::vector<ScheduleDirective>& schedules() const { return schedules_; }
  const std::vector<Transaction>& transactions() const { return transactions_; }

  void set_basis(Amount basis) { basis_ = std::move(basis); }
  void declare(AccountPath path) { accounts_.push_back(std::move(path)); }
  void add_schedule(ScheduleDirective schedule) { schedules_.push_back(std::move(schedule)); }
  void add_transaction(Transaction tx);
  /// Same result as calling add_transaction() on each, in order.
  void add_transactions(std::vector<Transaction> txs);

  bool empty() const {
    return !basis_ && accounts_.empty() && schedules_.empty() && transactions_.empty();
  }

  /// Declared accounts, then every account a schedule generates.
  /// Throws LedgerError(duplicate_declaration | invalid_path).
  Chart chart() const;

  /// Written transactions merged with schedule-emitted ones. On equal dates
  /// written transactions come first, then schedules in directive order.
  std::vector<Transaction> effective_transactions() const;

  friend bool operator==(const Journal&, const Journal&) = default;

 private:
  std::optional<Amount> basis_;
  std::vector<AccountPath> accounts_;
  std::vector<ScheduleDirective> schedules_;
  std::vector<Transaction> transactions_;
};

/// The raw (unreduced) stock at `cutoff`: every effective transaction dated
/// on or before the cutoff, posted onto an all-zero ledger.
Ledger raw_stock_at(const Journal& journal, Date cutoff);

/// raw_stock_at() with every balance reduced.
Ledger stock_at(const Journal& journal, Date cutoff);

/// Per-account sums of posting entries dated in (from, to]. The total over
/// all accounts is a zero representative. Throws
/// LedgerError(inverted_interval) when from > to.
Ledger flow_between(const Journal& journal, Date from, Date to);

struct ReconciliationViolation {
  AccountPath account;
  TAccount opening;
  TAccount flow;
  TAccount closing;
};

struct ReconciliationReport {
  Date from;
  Date to;
  std::size_t accounts_checked = 0;
  std::vector<ReconciliationViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks stock(from) + flow(from, to) ~ stock(to) for every account.
ReconciliationReport reconcile(const Journal& journal, Date from, Date to);

struct IncomeReport {
  /// Aggregated flow under each nominal root, in the order given.
  std::vector<std::pair<AccountPath, TAccount>> roots;
  TAccount total;
  /// Credit-positive: credit minus debit of `total`.
  SignedAmount net_income;
};

/// Net income over (from, to] as the aggregate of flows under the nominal
/// roots. Throws LedgerError(unknown_root | inverted_interval).
IncomeReport income_report(const Journal& journal, Date from, Date to, const std::vector<AccountPath>& nominal_roots);

/// A transaction that brings every nominal leaf's flow over (from, to] back
/// to zero and books the net into `equity`. nullopt when there is nothing to
/// close.
std::optional<Transaction> closing_transaction(const Journal& journal, Date from, Date to,
                                               const std::vector<AccountPath>& nominal_roots,
                                               const AccountPath& equity, Date date);

}  // namespace pacioli

#endif  // PACIOLI_JOURNAL_HPP
