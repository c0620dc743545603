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

#ifndef PACIOLI_MATCHING_HPP
#define PACIOLI_MATCHING_HPP

#include <optional>
#include <string>
#include <vector>

#include "pacioli/ledger.hpp"
#include "pacioli/source_span.hpp"
#include "pacioli/transaction.hpp"

namespace pacioli {

/// A debit-side resource set against a credit-side obligation. Completing
/// the activity takes `magnitude` off both.
struct ActivityPair {
  AccountPath resource;
  AccountPath obligation;
  Amount magnitude;
};

/// [obligation dr m, resource cr m]. Requires the resource's reduced debit
/// balance and the obligation's reduced credit balance to cover `magnitude`.
/// Throws LedgerError(insufficient_balance | empty_movement).
Transaction complete_activity(const Ledger& ledger, const ActivityPair& pair, Date date, std::string description);

/// Moves `magnitude` from one account to another on whichever side `from`
/// currently sits: [to dr m, from cr m] for a debit balance, mirrored for a
/// credit balance. Throws LedgerError(insufficient_balance | empty_movement).
Transaction reclassify(const Ledger& ledger, const AccountPath& from, const AccountPath& to, const Amount& magnitude,
                       Date date, std::string description);

enum class ScheduleMode { direct, contra };
enum class Cadence { yearly };

struct SchedulePeriod {
  Date date;
  Amount fraction;

  friend bool operator==(const SchedulePeriod&, const SchedulePeriod&) = default;
};

/// Allocation of `total` of a source account across dated periods. Each
/// period is matched against its own counterpart account, named by appending
/// the 1-based period number to the last segment of the counterpart prefix
/// (`expenses:interest` -> `expenses:interest1`, ...).
///
/// Invariants: fractions positive and summing to exactly 1, dates strictly
/// increasing, total positive.
class MatchingSchedule {
 public:
  /// Throws LedgerError(invalid_schedule) when an invariant fails.
  MatchingSchedule(AccountPath source, AccountPath counterpart_prefix, Amount total,
                   std::vector<SchedulePeriod> periods, ScheduleMode mode);

  const AccountPath& source() const { return source_; }
  const AccountPath& counterpart_prefix() const { return counterpart_prefix_; }
  const Amount& total() const { return total_; }
  const std::vector<SchedulePeriod>& periods() const { return periods_; }
  ScheduleMode mode() const { return mode_; }

  /// Counterpart account of period `k` (1-based).
  AccountPath counterpart(std::size_t k) const;
  /// Where credits land: the source itself in direct mode, its sibling
  /// `accumulated-depreciation` in contra mode.
  AccountPath credit_target() const;
  /// Counterparts and, in contra mode, the contra account.
  std::vector<AccountPath> generated_accounts() const;

  friend bool operator==(const MatchingSchedule&, const MatchingSchedule&) = default;

 private:
  AccountPath source_;
  AccountPath counterpart_prefix_;
  Amount total_;
  std::vector<SchedulePeriod> periods_;
  ScheduleMode mode_;
};

/// The contra account paired with `source` in contra mode.
AccountPath contra_account(const AccountPath& source);

/// Straight-line schedule: `periods` equal fractions 1/n, period k dated
/// `start` + k years. Throws LedgerError(invalid_schedule) for n == 0 or a
/// zero total.
MatchingSchedule build_schedule(const AccountPath& source, const AccountPath& counterpart_prefix, const Amount& total,
                                unsigned periods, Date start, Cadence cadence = Cadence::yearly,
                                ScheduleMode mode = ScheduleMode::direct);

/// One transaction per period: [counterpart_k dr total*fraction_k,
/// credit_target cr total*fraction_k].
std::vector<Transaction> emit_schedule_transactions(const MatchingSchedule& schedule);

/// Reduced carrying amount of the source net of its contra account.
TAccount net_book_value(const Ledger& ledger, const MatchingSchedule& schedule);

/// The journal-file form of a straight-line schedule.
struct ScheduleDirective {
  AccountPath source;
  AccountPath counterpart;
  Amount total;
  unsigned periods = 1;
  Date start;
  ScheduleMode mode = ScheduleMode::direct;
  std::optional<SourceSpan> origin;

  MatchingSchedule to_schedule() const {
    return build_schedule(source, counterpart, total, periods, start, Cadence::yearly, mode);
  }

  friend bool operator==(const ScheduleDirective& a, const ScheduleDirective& b) {
    return a.source == b.source && a.counterpart == b.counterpart && a.total == b.total &&
           a.periods == b.periods && a.start == b.start && a.mode == b.mode;
  }
};

}  // namespace pacioli

#endif  // PACIOLI_MATCHING_HPP
