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

#include "pacioli/matching.hpp"

#include "pacioli/error.hpp"

namespace pacioli {
namespace {

constexpr const char* kContraName = "accumulated-depreciation";

// Magnitude of a leaf's reduced balance on `side`, zero if it sits on the
// other side.
Amount side_balance(const Ledger& ledger, const AccountPath& path, Side side) {
  const SignedAmount net = balance(ledger.at(path));
  const Sign wanted = side == Side::debit ? Sign::positive : Sign::negative;
  return net.sign() == wanted ? net.magnitude() : Amount();
}

void require_movement(const Amount& magnitude) {
  if (magnitude.is_zero()) throw LedgerError(ErrorKind::empty_movement, "movement of zero");
}

}  // namespace

Transaction complete_activity(const Ledger& ledger, const ActivityPair& pair, Date date, std::string description) {
  require_movement(pair.magnitude);
  if (side_balance(ledger, pair.resource, Side::debit) < pair.magnitude) {
    throw LedgerError(ErrorKind::insufficient_balance,
                      "resource '" + pair.resource.str() + "' holds less than " + pair.magnitude.to_string());
  }
  if (side_balance(ledger, pair.obligation, Side::credit) < pair.magnitude) {
    throw LedgerError(ErrorKind::insufficient_balance,
                      "obligation '" + pair.obligation.str() + "' holds less than " + pair.magnitude.to_string());
  }
  return Transaction{date,
                     std::move(description),
                     {Posting::debit(pair.obligation, pair.magnitude), Posting::credit(pair.resource, pair.magnitude)},
                     std::nullopt};
}

Transaction reclassify(const Ledger& ledger, const AccountPath& from, const AccountPath& to, const Amount& magnitude,
                       Date date, std::string description) {
  require_movement(magnitude);
  if (!(side_balance(ledger, from, Side::debit) < magnitude)) {
    return Transaction{date, std::move(description), {Posting::debit(to, magnitude), Posting::credit(from, magnitude)},
                       std::nullopt};
  }
  if (!(side_balance(ledger, from, Side::credit) < magnitude)) {
    return Transaction{date, std::move(description), {Posting::debit(from, magnitude), Posting::credit(to, magnitude)},
                       std::nullopt};
  }
  throw LedgerError(ErrorKind::insufficient_balance,
                    "account '" + from.str() + "' holds less than " + magnitude.to_string());
}

MatchingSchedule::MatchingSchedule(AccountPath source, AccountPath counterpart_prefix, Amount total,
                                   std::vector<SchedulePeriod> periods, ScheduleMode mode)
    : source_(std::move(source)),
      counterpart_prefix_(std::move(counterpart_prefix)),
      total_(std::move(total)),
      periods_(std::move(periods)),
      mode_(mode) {
  if (total_.is_zero()) throw LedgerError(ErrorKind::invalid_schedule, "schedule total must be positive");
  if (periods_.empty()) throw LedgerError(ErrorKind::invalid_schedule, "schedule has no periods");
  Amount fractions;
  for (std::size_t i = 0; i < periods_.size(); ++i) {
    if (periods_[i].fraction.is_zero()) {
      throw LedgerError(ErrorKind::invalid_schedule, "period " + std::to_string(i + 1) + " has a zero fraction");
    }
    if (i > 0 && !(periods_[i - 1].date < periods_[i].date)) {
      throw LedgerError(ErrorKind::invalid_schedule, "period dates must be strictly increasing");
    }
    fractions += periods_[i].fraction;
  }
  if (fractions != Amount(1)) {
    throw LedgerError(ErrorKind::invalid_schedule, "period fractions sum to " + fractions.to_string() + ", not 1");
  }
  if (counterpart_prefix_ == source_ || source_.is_ancestor_of(counterpart_prefix_)) {
    throw LedgerError(ErrorKind::invalid_schedule, "counterpart must lie outside the source account");
  }
}

AccountPath MatchingSchedule::counterpart(std::size_t k) const {
  return counterpart_prefix_.sibling(counterpart_prefix_.name() + std::to_string(k));
}

AccountPath MatchingSchedule::credit_target() const {
  return mode_ == ScheduleMode::contra ? contra_account(source_) : source_;
}

std::vector<AccountPath> MatchingSchedule::generated_accounts() const {
  std::vector<AccountPath> out;
  for (std::size_t k = 1; k <= periods_.size(); ++k) out.push_back(counterpart(k));
  if (mode_ == ScheduleMode::contra) out.push_back(contra_account(source_));
  return out;
}

AccountPath contra_account(const AccountPath& source) { return source.sibling(kContraName); }

MatchingSchedule build_schedule(const AccountPath& source, const AccountPath& counterpart_prefix, const Amount& total,
                                unsigned periods, Date start, Cadence cadence, ScheduleMode mode) {
  if (periods == 0) throw LedgerError(ErrorKind::invalid_schedule, "schedule needs at least one period");
  const Amount share = Amount::ratio(1, periods);
  std::vector<SchedulePeriod> out;
  out.reserve(periods);
  for (unsigned k = 1; k <= periods; ++k) {
    switch (cadence) {
      case Cadence::yearly: out.push_back({add_years(start, static_cast<int>(k)), share}); break;
    }
  }
  return MatchingSchedule(source, counterpart_prefix, total, std::move(out), mode);
}

std::vector<Transaction> emit_schedule_transactions(const MatchingSchedule& schedule) {
  const auto& periods = schedule.periods();
  const AccountPath target = schedule.credit_target();
  std::vector<Transaction> out;
  out.reserve(periods.size());
  for (std::size_t k = 1; k <= periods.size(); ++k) {
    const Amount portion = schedule.total() * periods[k - 1].fraction;
    out.push_back(Transaction{
        periods[k - 1].date,
        schedule.source().str() + " period " + std::to_string(k) + "/" + std::to_string(periods.size()),
        {Posting::debit(schedule.counterpart(k), portion), Posting::credit(target, portion)},
        std::nullopt});
  }
  return out;
}

TAccount net_book_value(const Ledger& ledger, const MatchingSchedule& schedule) {
  TAccount carrying = ledger.at(schedule.source());
  if (schedule.mode() == ScheduleMode::contra) carrying = carrying + ledger.at(contra_account(schedule.source()));
  return reduce(carrying);
}

}  // namespace pacioli
