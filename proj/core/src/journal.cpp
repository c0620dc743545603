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

#include "pacioli/journal.hpp"

#include <algorithm>
#include <iterator>

#include "pacioli/error.hpp"

namespace pacioli {
namespace {

void require_interval(Date from, Date to) {
  if (to < from) {
    throw LedgerError(ErrorKind::inverted_interval,
                      "interval starts at " + to_string(from) + " after it ends at " + to_string(to));
  }
}

}  // namespace

void Journal::add_transaction(Transaction tx) {
  const auto at = std::upper_bound(transactions_.begin(), transactions_.end(), tx.date,
                                   [](const Date& d, const Transaction& t) { return d < t.date; });
  transactions_.insert(at, std::move(tx));
}

void Journal::add_transactions(std::vector<Transaction> txs) {
  const auto middle = static_cast<std::ptrdiff_t>(transactions_.size());
  transactions_.insert(transactions_.end(), std::make_move_iterator(txs.begin()), std::make_move_iterator(txs.end()));
  const auto by_date = [](const Transaction& a, const Transaction& b) { return a.date < b.date; };
  std::stable_sort(transactions_.begin() + middle, transactions_.end(), by_date);
  std::inplace_merge(transactions_.begin(), transactions_.begin() + middle, transactions_.end(), by_date);
}

Chart Journal::chart() const {
  Chart chart;
  for (const auto& path : accounts_) chart = std::move(chart).declare(path);
  for (const auto& directive : schedules_) {
    for (const auto& path : directive.to_schedule().generated_accounts()) chart = std::move(chart).ensure(path);
  }
  return chart;
}

std::vector<Transaction> Journal::effective_transactions() const {
  std::vector<Transaction> out = transactions_;
  for (const auto& directive : schedules_) {
    for (auto& tx : emit_schedule_transactions(directive.to_schedule())) {
      tx.origin = directive.origin;
      out.push_back(std::move(tx));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Transaction& a, const Transaction& b) { return a.date < b.date; });
  return out;
}

Ledger raw_stock_at(const Journal& journal, Date cutoff) {
  Ledger ledger(journal.chart(), Horizon{std::nullopt, cutoff});
  for (const auto& tx : journal.effective_transactions()) {
    if (cutoff < tx.date) break;
    ledger = post(std::move(ledger), tx);
  }
  return ledger;
}

Ledger stock_at(const Journal& journal, Date cutoff) { return raw_stock_at(journal, cutoff).reduced(); }

Ledger flow_between(const Journal& journal, Date from, Date to) {
  require_interval(from, to);
  Ledger ledger(journal.chart(), Horizon{from, to});
  for (const auto& tx : journal.effective_transactions()) {
    if (tx.date <= from) continue;
    if (to < tx.date) break;
    ledger = post(std::move(ledger), tx);
  }
  return ledger;
}

ReconciliationReport reconcile(const Journal& journal, Date from, Date to) {
  require_interval(from, to);
  const Ledger opening = stock_at(journal, from);
  const Ledger flow = flow_between(journal, from, to);
  const Ledger closing = stock_at(journal, to);

  ReconciliationReport report{from, to, 0, {}};
  for (const auto& [path, closing_balance] : closing.balances()) {
    ++report.accounts_checked;
    const TAccount& o = opening.balances().at(path);
    const TAccount& f = flow.balances().at(path);
    if (!equivalent(o + f, closing_balance)) report.violations.push_back({path, o, f, closing_balance});
  }
  return report;
}

IncomeReport income_report(const Journal& journal, Date from, Date to, const std::vector<AccountPath>& nominal_roots) {
  const Ledger flow = flow_between(journal, from, to);
  IncomeReport report;
  for (const auto& root : nominal_roots) {
    if (!flow.chart().contains(root)) {
      throw LedgerError(ErrorKind::unknown_root, "nominal root '" + root.str() + "' is not in the chart");
    }
    // Overlapping roots would count a subtree twice.
    for (const auto& [seen, unused] : report.roots) {
      if (seen.is_self_or_ancestor_of(root) || root.is_ancestor_of(seen)) {
        throw LedgerError(ErrorKind::unknown_root, "nominal roots '" + seen.str() + "' and '" + root.str() + "' overlap");
      }
    }
    const TAccount sub = aggregate(flow, root);
    report.roots.emplace_back(root, sub);
    report.total = report.total + sub;
  }
  report.net_income = -balance(report.total);
  return report;
}

std::optional<Transaction> closing_transaction(const Journal& journal, Date from, Date to,
                                               const std::vector<AccountPath>& nominal_roots,
                                               const AccountPath& equity, Date date) {
  const Ledger flow = flow_between(journal, from, to);
  Transaction tx{date, "close nominal accounts into " + equity.str(), {}, std::nullopt};
  TAccount closed;
  for (const auto& root : nominal_roots) {
    if (!flow.chart().contains(root)) {
      throw LedgerError(ErrorKind::unknown_root, "nominal root '" + root.str() + "' is not in the chart");
    }
    for (const auto& leaf : flow.chart().leaves_under(root)) {
      const TAccount net = reduce(flow.balances().at(leaf));
      if (is_zero(net)) continue;
      tx.postings.push_back({leaf, inverse(net)});
      closed = closed + net;
    }
  }
  if (tx.postings.empty()) return std::nullopt;
  const TAccount to_equity = reduce(closed);
  if (!is_zero(to_equity)) tx.postings.push_back({equity, to_equity});
  return tx;
}

}  // namespace pacioli
