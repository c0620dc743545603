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

#ifndef PACIOLI_LEDGER_HPP
#define PACIOLI_LEDGER_HPP

#include <map>
#include <optional>
#include <vector>

#include "pacioli/chart.hpp"
#include "pacioli/date.hpp"
#include "pacioli/taccount.hpp"

namespace pacioli {

/// The time bound a ledger describes: a stock view has only `to`
/// (inclusive); a flow view covers the half-open interval (from, to].
struct Horizon {
  std::optional<Date> from;
  std::optional<Date> to;

  friend bool operator==(const Horizon&, const Horizon&) = default;
};

/// One part of a partition handed to refine().
struct Share {
  AccountPath child;
  TAccount share;
};

/// A chart together with one T-account per postable leaf.
class Ledger {
 public:
  explicit Ledger(Chart chart, Horizon horizon = {});

  const Chart& chart() const { return chart_; }
  const Horizon& horizon() const { return horizon_; }
  const std::map<AccountPath, TAccount>& balances() const { return balances_; }

  /// The T-account of a leaf. Throws LedgerError(unknown_account) or
  /// LedgerError(non_leaf_posting) for an interior node.
  const TAccount& at(const AccountPath& leaf) const;

  /// Adds `entry` to a leaf's T-account.
  Ledger with_entry(const AccountPath& leaf, const TAccount& entry) const&;
  Ledger with_entry(const AccountPath& leaf, const TAccount& entry) &&;

  /// Every balance replaced by its canonical representative.
  Ledger reduced() const;
  /// Every balance scaled by `k`.
  Ledger scaled(const Amount& k) const;
  Ledger with_horizon(Horizon horizon) const;

  friend bool operator==(const Ledger& a, const Ledger& b) {
    return a.balances_ == b.balances_ && a.horizon_ == b.horizon_;
  }

 private:
  Ledger(Chart chart, Horizon horizon, std::map<AccountPath, TAccount> balances)
      : chart_(std::move(chart)), horizon_(std::move(horizon)), balances_(std::move(balances)) {}

  TAccount& leaf_slot(const AccountPath& leaf);

  friend Ledger refine(const Ledger&, const AccountPath&, const std::vector<Share>&);

  Chart chart_;
  Horizon horizon_;
  std::map<AccountPath, TAccount> balances_;
};

/// Componentwise sum of the leaves in the subtree at `path`.
/// Throws LedgerError(unknown_account).
TAccount aggregate(const Ledger& ledger, const AccountPath& path);

/// Sum over the whole chart. For a ledger built from balanced transactions
/// this is always a zero representative.
TAccount aggregate_root(const Ledger& ledger);

/// Splits a leaf into fresh sub-accounts whose shares add up to the leaf's
/// T-account exactly (componentwise). The leaf becomes an interior node and
/// every ancestor's aggregate is unchanged.
///
/// Throws LedgerError with kind partition_mismatch (residual = balance of
/// the shares minus balance of the parent), child_collision, unknown_account
/// or non_leaf_posting.
Ledger refine(const Ledger& ledger, const AccountPath& parent, const std::vector<Share>& parts);

}  // namespace pacioli

#endif  // PACIOLI_LEDGER_HPP
