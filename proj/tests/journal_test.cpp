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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "pacioli/error.hpp"
#include "support/generators.hpp"
#include "support/illustration.hpp"

namespace pacioli {
namespace {

using testing::illustration_in_basis_units;

AccountPath P(std::string_view s) { return AccountPath::parse(s); }
Amount q(unsigned long n, unsigned long d = 1) { return Amount::ratio(n, d); }
Date ymd(int y, unsigned m, unsigned d) { return Date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}}; }

Transaction tx(Date date, std::vector<Posting> postings) { return {date, "t", std::move(postings), std::nullopt}; }

// The reduced, non-zero balances of a ledger.
std::map<AccountPath, TAccount> visible(const Ledger& ledger) {
  std::map<AccountPath, TAccount> out;
  for (const auto& [path, t] : ledger.balances()) {
    if (!is_zero(t)) out.emplace(path, reduce(t));
  }
  return out;
}

TEST(ValidateTransactionTest, Examples) {
  EXPECT_TRUE(validate_transaction(tx(ymd(2024, 1, 15), {Posting::debit(P("suppliers"), q(2, 5)),
                                                         Posting::credit(P("cash2"), q(2, 5))}))
                  .ok());
  EXPECT_TRUE(validate_transaction(tx(ymd(2024, 1, 1), {Posting::debit(P("cash"), q(5)), Posting::credit(P("cash"), q(5))}))
                  .ok());

  const auto bad = validate_transaction(
      tx(ymd(2024, 1, 1), {Posting::debit(P("machine"), q(2, 5)), Posting::credit(P("banks"), q(1, 5))}));
  EXPECT_EQ(bad.status, TransactionCheck::Status::imbalance);
  const mpq_class oracle = mpq_class(2, 5) - mpq_class(1, 5);
  EXPECT_EQ(testing::to_mpq(bad.residual), oracle);
  EXPECT_EQ(bad.residual.to_string(), "+1/5");

  EXPECT_EQ(validate_transaction(tx(ymd(2024, 1, 1), {})).status, TransactionCheck::Status::empty);
  EXPECT_EQ(validate_transaction(tx(ymd(2024, 1, 1), {Posting::debit(P("cash"), q(0))})).status,
            TransactionCheck::Status::single_posting);
}

TEST(PostTest, SupplierPaymentRemovesTheMatchedPair) {
  const Journal j = illustration_in_basis_units();
  const Ledger budget = raw_stock_at(j, testing::budget_allocated());
  const Ledger after = post(budget, tx(testing::suppliers_paid(), {Posting::debit(P("suppliers"), q(2, 5)),
                                                                  Posting::credit(P("cash2"), q(2, 5))}));
  EXPECT_EQ(after.at(P("cash2")), (TAccount{q(2, 5), q(2, 5)}));
  EXPECT_EQ(after.at(P("suppliers")), (TAccount{q(2, 5), q(2, 5)}));
  EXPECT_TRUE(is_zero(after.at(P("cash2"))));
  EXPECT_EQ(visible(after).count(P("cash2")), 0u);
  EXPECT_EQ(visible(after).count(P("suppliers")), 0u);
  EXPECT_TRUE(is_zero(aggregate_root(after)));
}

TEST(PostTest, ZeroEntriesLeaveTheLedgerUnchanged) {
  const Ledger before = raw_stock_at(illustration_in_basis_units(), testing::opening());
  const Ledger after = post(before, tx(testing::opening(), {Posting::debit(P("cash"), q(0)),
                                                            Posting::credit(P("banks"), q(0))}));
  EXPECT_EQ(after.balances(), before.balances());
}

TEST(PostTest, Reclassification) {
  const Ledger before = raw_stock_at(illustration_in_basis_units(), testing::suppliers_paid());
  const Ledger after = post(before, tx(testing::machine_bought(), {Posting::debit(P("machine"), q(2, 5)),
                                                                   Posting::credit(P("cash3"), q(2, 5))}));
  EXPECT_TRUE(is_zero(after.at(P("cash3"))));
  EXPECT_EQ(after.at(P("machine")), TAccount::debit_of(q(2, 5)));
}

TEST(PostTest, Errors) {
  const Ledger ledger(Chart{}.declare(P("assets:cash")).declare(P("claims")));
  const auto kind = [&](const Transaction& t) {
    try {
      (void)post(ledger, t);
    } catch (const LedgerError& e) {
      return e.kind();
    }
    return ErrorKind::internal_inconsistency;
  };
  const Date d = ymd(2024, 1, 1);
  EXPECT_EQ(kind(tx(d, {Posting::debit(P("assets:bank"), q(1)), Posting::credit(P("claims"), q(1))})),
            ErrorKind::unknown_account);
  EXPECT_EQ(kind(tx(d, {Posting::debit(P("assets"), q(1)), Posting::credit(P("claims"), q(1))})),
            ErrorKind::non_leaf_posting);
  EXPECT_EQ(kind(tx(d, {Posting::debit(P("assets:cash"), q(2)), Posting::credit(P("claims"), q(1))})),
            ErrorKind::imbalance);
  EXPECT_EQ(kind(tx(d, {})), ErrorKind::empty_transaction);

  Transaction located = tx(d, {Posting::debit(P("nope"), q(1)), Posting::credit(P("claims"), q(1))});
  located.origin = SourceSpan{"x.journal", 12, 1, 20};
  try {
    (void)post(ledger, located);
    FAIL();
  } catch (const LedgerError& e) {
    ASSERT_TRUE(e.where());
    EXPECT_EQ(e.where()->line, 12u);
  }
}

TEST(JournalTest, TransactionsStaySortedWithStableTies) {
  Journal j;
  j.declare(P("a"));
  j.declare(P("b"));
  const auto mk = [&](Date d, const char* desc) {
    return Transaction{d, desc, {Posting::debit(P("a"), q(1)), Posting::credit(P("b"), q(1))}, std::nullopt};
  };
  j.add_transaction(mk(ymd(2024, 3, 1), "third"));
  j.add_transaction(mk(ymd(2024, 1, 1), "first"));
  j.add_transaction(mk(ymd(2024, 3, 1), "fourth"));
  j.add_transaction(mk(ymd(2024, 2, 1), "second"));
  std::vector<std::string> order;
  for (const auto& t : j.transactions()) order.push_back(t.description);
  EXPECT_EQ(order, (std::vector<std::string>{"first", "second", "third", "fourth"}));
}

TEST(JournalTest, BulkInsertMatchesOneByOne) {
  testing::Rng rng(3);
  for (int round = 0; round < 20; ++round) {
    const Journal j = testing::random_journal(rng, {.max_accounts = 6, .max_transactions = 50});
    std::vector<Transaction> txs = j.transactions();
    std::shuffle(txs.begin(), txs.end(), rng);
    const std::size_t half = txs.size() / 2;
    Journal one;
    Journal bulk;
    for (auto& t : txs) one.add_transaction(t);
    for (std::size_t i = 0; i < half; ++i) bulk.add_transaction(txs[i]);
    bulk.add_transactions(std::vector<Transaction>(txs.begin() + static_cast<std::ptrdiff_t>(half), txs.end()));
    ASSERT_EQ(one.transactions(), bulk.transactions());
    for (std::size_t i = 0; i < one.transactions().size(); ++i) {
      ASSERT_EQ(one.transactions()[i].description, bulk.transactions()[i].description);
    }
  }
}

TEST(StockTest, IllustrationSteps) {
  const Journal j = illustration_in_basis_units();
  using M = std::map<AccountPath, TAccount>;
  EXPECT_EQ(visible(stock_at(j, testing::coarse_opening())),
            (M{{P("cash"), TAccount::debit_of(q(1))}, {P("liabilities"), TAccount::credit_of(q(1))}}));
  EXPECT_EQ(visible(stock_at(j, testing::opening())),
            (M{{P("cash"), TAccount::debit_of(q(1))},
               {P("suppliers"), TAccount::credit_of(q(2, 5))},
               {P("banks"), TAccount::credit_of(q(2, 5))},
               {P("capital"), TAccount::credit_of(q(1, 5))}}));
  EXPECT_EQ(visible(stock_at(j, testing::machine_bought())),
            (M{{P("cash1"), TAccount::debit_of(q(1, 5))},
               {P("capital"), TAccount::credit_of(q(1, 5))},
               {P("machine"), TAccount::debit_of(q(2, 5))},
               {P("banks"), TAccount::credit_of(q(2, 5))}}));
  // Every balance in a stock view is already reduced.
  const Ledger paid = stock_at(j, testing::suppliers_paid());
  for (const auto& [path, t] : paid.balances()) EXPECT_TRUE(is_canonical(t));
}

TEST(StockTest, BeforeEverythingAndEmptyJournal) {
  const Journal j = illustration_in_basis_units();
  const Ledger early = stock_at(j, ymd(2000, 1, 1));
  EXPECT_TRUE(std::all_of(early.balances().begin(), early.balances().end(),
                          [](const auto& kv) { return kv.second == TAccount{}; }));

  Journal empty;
  empty.declare(P("a"));
  empty.declare(P("b:c"));
  const Ledger none = stock_at(empty, ymd(2024, 1, 1));
  EXPECT_EQ(none.balances().size(), 2u);
  for (const auto& [path, t] : none.balances()) EXPECT_EQ(t, TAccount{});
}

TEST(FlowTest, SupplierPaymentInterval) {
  const Journal j = illustration_in_basis_units();
  const Ledger f = flow_between(j, testing::budget_allocated(), testing::suppliers_paid());
  EXPECT_EQ(f.at(P("cash2")), TAccount::credit_of(q(2, 5)));
  EXPECT_EQ(f.at(P("suppliers")), TAccount::debit_of(q(2, 5)));
  EXPECT_EQ(aggregate_root(f), (TAccount{q(2, 5), q(2, 5)}));
  EXPECT_EQ(f.horizon(), (Horizon{testing::budget_allocated(), testing::suppliers_paid()}));
}

TEST(FlowTest, EmptyAndInvertedIntervals) {
  const Journal j = illustration_in_basis_units();
  const Ledger f = flow_between(j, testing::opening(), testing::opening());
  for (const auto& [path, t] : f.balances()) EXPECT_EQ(t, TAccount{});
  EXPECT_THROW((void)flow_between(j, testing::suppliers_paid(), testing::opening()), LedgerError);
}

TEST(FlowTest, FullIntervalMatchesBruteForcePostingSum) {
  const Journal j = illustration_in_basis_units();
  const Date before = ymd(2023, 1, 1);
  const Date after = ymd(2030, 1, 1);
  const Ledger f = flow_between(j, before, after);
  // Oracle: sum raw rationals posting by posting.
  std::map<AccountPath, std::pair<mpq_class, mpq_class>> sums;
  mpq_class debits = 0;
  mpq_class credits = 0;
  for (const auto& t : j.effective_transactions()) {
    for (const auto& p : t.postings) {
      sums[p.account].first += p.entry.debit.value();
      sums[p.account].second += p.entry.credit.value();
      debits += p.entry.debit.value();
      credits += p.entry.credit.value();
    }
  }
  for (const auto& [path, dc] : sums) {
    EXPECT_EQ(f.at(path).debit.value(), dc.first) << path.str();
    EXPECT_EQ(f.at(path).credit.value(), dc.second) << path.str();
  }
  EXPECT_EQ(debits, credits);
  EXPECT_TRUE(is_zero(aggregate_root(f)));
  EXPECT_EQ(aggregate_root(f).debit.value(), debits);
}

TEST(ReconcileTest, IllustrationReconcilesOverEveryStep) {
  const Journal j = illustration_in_basis_units();
  std::vector<Date> dates{ymd(2023, 1, 1), testing::coarse_opening(), testing::opening(), testing::budget_allocated(),
                          testing::suppliers_paid(), testing::machine_bought()};
  for (int k = 1; k <= 5; ++k) dates.push_back(testing::depreciation_year(k));
  for (std::size_t a = 0; a < dates.size(); ++a) {
    for (std::size_t b = a; b < dates.size(); ++b) {
      const auto report = reconcile(j, dates[a], dates[b]);
      EXPECT_TRUE(report.ok()) << to_string(dates[a]) << " .. " << to_string(dates[b]);
      EXPECT_EQ(report.accounts_checked, j.chart().leaves().size());
    }
  }
  // Empty interval: stock unchanged.
  EXPECT_EQ(stock_at(j, testing::opening()).balances(), stock_at(j, testing::opening()).balances());
  EXPECT_TRUE(reconcile(j, testing::opening(), testing::opening()).ok());
  EXPECT_THROW((void)reconcile(j, testing::opening(), testing::coarse_opening()), LedgerError);
}

TEST(IncomeTest, SyntheticNetIncome) {
  Journal j;
  for (const char* a : {"assets:cash", "income:sales", "expenses:cogs", "expenses:other", "inventory"}) j.declare(P(a));
  const Date d = ymd(2024, 6, 1);
  j.add_transaction(tx(d, {Posting::debit(P("assets:cash"), q(10)), Posting::credit(P("income:sales"), q(10))}));
  j.add_transaction(tx(d, {Posting::debit(P("expenses:cogs"), q(6)), Posting::credit(P("inventory"), q(6))}));
  j.add_transaction(tx(d, {Posting::debit(P("expenses:other"), q(2)), Posting::credit(P("assets:cash"), q(2))}));
  const auto report = income_report(j, ymd(2024, 1, 1), ymd(2024, 12, 31), {P("income"), P("expenses")});
  // Hand aggregation: credits 10, debits 6 + 2; credit minus debit = +2.
  EXPECT_EQ(report.total, (TAccount{q(8), q(10)}));
  EXPECT_EQ(report.net_income, SignedAmount::positive(q(2)));
  ASSERT_EQ(report.roots.size(), 2u);
  EXPECT_EQ(report.roots[1].second, TAccount::debit_of(q(8)));

  const auto quiet = income_report(j, ymd(2025, 1, 1), ymd(2025, 12, 31), {P("income"), P("expenses")});
  EXPECT_TRUE(quiet.net_income.is_zero());
  EXPECT_THROW((void)income_report(j, d, d, {P("revenue")}), LedgerError);
  EXPECT_THROW((void)income_report(j, d, d, {P("expenses"), P("expenses:cogs")}), LedgerError);
}

TEST(IncomeTest, FirstYearOfTheMatchingSchedule) {
  const Journal j = illustration_in_basis_units();
  const auto report = income_report(j, testing::machine_bought(), testing::depreciation_year(1), {P("expenses")});
  EXPECT_EQ(report.total, TAccount::debit_of(q(2, 25)));
  EXPECT_EQ(report.net_income, SignedAmount::negative(q(2, 25)));
}

TEST(ClosingTest, ClosesNominalFlowsIntoEquity) {
  Journal j;
  for (const char* a : {"cash", "sales", "costs", "equity"}) j.declare(P(a));
  const Date d = ymd(2024, 6, 1);
  j.add_transaction(tx(d, {Posting::debit(P("cash"), q(10)), Posting::credit(P("sales"), q(10))}));
  j.add_transaction(tx(d, {Posting::debit(P("costs"), q(7)), Posting::credit(P("cash"), q(7))}));
  const auto closing = closing_transaction(j, ymd(2024, 1, 1), ymd(2024, 12, 31), {P("sales"), P("costs")}, P("equity"),
                                           ymd(2024, 12, 31));
  ASSERT_TRUE(closing);
  EXPECT_TRUE(validate_transaction(*closing).ok());
  j.add_transaction(*closing);
  const Ledger after = stock_at(j, ymd(2024, 12, 31));
  EXPECT_TRUE(is_zero(after.at(P("sales"))));
  EXPECT_TRUE(is_zero(after.at(P("costs"))));
  EXPECT_EQ(after.at(P("equity")), TAccount::credit_of(q(3)));
  EXPECT_FALSE(closing_transaction(j, ymd(2025, 1, 1), ymd(2025, 2, 1), {P("sales")}, P("equity"), ymd(2025, 2, 1)));
}

TEST(JournalPropertyTest, SameDayOrderDoesNotMatter) {
  testing::Rng rng(5);
  for (int round = 0; round < 30; ++round) {
    const Journal j = testing::random_journal(rng, {.max_accounts = 10, .max_transactions = 40});
    // Rebuild with the transactions of each date in reverse order.
    Journal shuffled;
    if (j.basis()) shuffled.set_basis(*j.basis());
    for (const auto& a : j.accounts()) shuffled.declare(a);
    for (const auto& s : j.schedules()) shuffled.add_schedule(s);
    std::vector<Transaction> txs = j.transactions();
    std::reverse(txs.begin(), txs.end());
    for (auto& t : txs) shuffled.add_transaction(t);
    const Date lo = ymd(2019, 12, 31);
    for (int m = 1; m <= 12; ++m) {
      const Date cut = ymd(2020, static_cast<unsigned>(m), 15);
      ASSERT_EQ(stock_at(j, cut), stock_at(shuffled, cut));
      ASSERT_EQ(flow_between(j, lo, cut), flow_between(shuffled, lo, cut));
    }
  }
}

TEST(JournalPropertyTest, StockMatchesSignedOracleAtEveryCutoff) {
  testing::Rng rng(17);
  for (int round = 0; round < 30; ++round) {
    const Journal j = testing::random_journal(rng, {.max_accounts = 12, .max_transactions = 60});
    const auto txs = j.effective_transactions();
    testing::SignedLedgerOracle oracle;
    for (std::size_t i = 0; i < txs.size(); ++i) {
      oracle.post(txs[i]);
      if (i + 1 < txs.size() && txs[i + 1].date == txs[i].date) continue;
      const Ledger stock = stock_at(j, txs[i].date);
      for (const auto& [path, t] : stock.balances()) {
        ASSERT_EQ(testing::to_mpq(balance(reduce(t))), oracle.at(path)) << path.str();
      }
    }
  }
}

}  // namespace
}  // namespace pacioli
