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

#include "pacioli/ledger.hpp"

#include <set>

#include "pacioli/error.hpp"

namespace pacioli {
namespace {

void require_leaf(const Chart& chart, const AccountPath& path) {
  if (!chart.contains(path)) throw LedgerError(ErrorKind::unknown_account, "unknown account '" + path.str() + "'");
  if (!chart.is_leaf(path)) {
    throw LedgerError(ErrorKind::non_leaf_posting, "account '" + path.str() + "' has sub-accounts and cannot be posted to");
  }
}

}  // namespace

Ledger::Ledger(Chart chart, Horizon horizon) : chart_(std::move(chart)), horizon_(std::move(horizon)) {
  for (auto& leaf : chart_.leaves()) balances_.emplace(std::move(leaf), TAccount{});
}

const TAccount& Ledger::at(const AccountPath& leaf) const {
  require_leaf(chart_, leaf);
  return balances_.at(leaf);
}

TAccount& Ledger::leaf_slot(const AccountPath& leaf) {
  require_leaf(chart_, leaf);
  return balances_.at(leaf);
}

Ledger Ledger::with_entry(const AccountPath& leaf, const TAccount& entry) const& {
  return Ledger(*this).with_entry(leaf, entry);
}

Ledger Ledger::with_entry(const AccountPath& leaf, const TAccount& entry) && {
  TAccount& slot = leaf_slot(leaf);
  slot.debit += entry.debit;
  slot.credit += entry.credit;
  return std::move(*this);
}

Ledger Ledger::reduced() const {
  auto balances = balances_;
  for (auto& [path, t] : balances) t = reduce(t);
  return Ledger(chart_, horizon_, std::move(balances));
}

Ledger Ledger::scaled(const Amount& k) const {
  auto balances = balances_;
  for (auto& [path, t] : balances) t = scale(t, k);
  return Ledger(chart_, horizon_, std::move(balances));
}

Ledger Ledger::with_horizon(Horizon horizon) const { return Ledger(chart_, std::move(horizon), balances_); }

TAccount aggregate(const Ledger& ledger, const AccountPath& path) {
  TAccount total;
  for (const auto& leaf : ledger.chart().leaves_under(path)) total = total + ledger.balances().at(leaf);
  return total;
}

TAccount aggregate_root(const Ledger& ledger) {
  TAccount total;
  for (const auto& [path, t] : ledger.balances()) {
    total.debit += t.debit;
    total.credit += t.credit;
  }
  return total;
}

Ledger refine(const Ledger& ledger, const AccountPath& parent, const std::vector<Share>& parts) {
  const TAccount& whole = ledger.at(parent);

  std::set<AccountPath> seen;
  for (const auto& part : parts) {
    if (!parent.is_ancestor_of(part.child)) {
      throw LedgerError(ErrorKind::child_collision,
                        "'" + part.child.str() + "' is not a sub-account of '" + parent.str() + "'");
    }
    if (ledger.chart().contains(part.child) || !seen.insert(part.child).second) {
      throw LedgerError(ErrorKind::child_collision, "sub-account '" + part.child.str() + "' already exists");
    }
  }

  for (const auto& a : seen) {
    for (const auto& b : seen) {
      if (a.is_ancestor_of(b)) {
        throw LedgerError(ErrorKind::child_collision, "sub-accounts '" + a.str() + "' and '" + b.str() + "' overlap");
      }
    }
  }

  TAccount shares;
  for (const auto& part : parts) shares = shares + part.share;
  if (parts.empty() || shares != whole) {
    throw LedgerError(ErrorKind::partition_mismatch,
                      "shares " + to_string(shares) + " do not partition " + parent.str() + " " + to_string(whole),
                      balance(shares) - balance(whole));
  }

  Chart chart = ledger.chart();
  for (const auto& part : parts) chart = std::move(chart).declare(part.child);

  auto balances = ledger.balances();
  balances.erase(parent);
  for (const auto& leaf : chart.leaves()) balances.try_emplace(leaf);
  for (const auto& part : parts) {
    TAccount& slot = balances.at(part.child);
    slot = slot + part.share;
  }
  return Ledger(std::move(chart), ledger.horizon(), std::move(balances));
}

}  // namespace pacioli
