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

#include <gtest/gtest.h>

#include "pacioli/chart.hpp"
#include "pacioli/error.hpp"
#include "pacioli/ledger.hpp"
#include "support/generators.hpp"

namespace pacioli {
namespace {

AccountPath P(std::string_view s) { return AccountPath::parse(s); }
Amount q(unsigned long n, unsigned long d = 1) { return Amount::ratio(n, d); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const LedgerError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no LedgerError thrown";
  return ErrorKind::internal_inconsistency;
}

TEST(AccountPathTest, ParsesSegments) {
  const auto p = P("assets:cash-on_hand:Box2");
  EXPECT_EQ(p.depth(), 3u);
  EXPECT_EQ(p.name(), "Box2");
  EXPECT_EQ(p.str(), "assets:cash-on_hand:Box2");
  EXPECT_EQ(p.parent()->str(), "assets:cash-on_hand");
  EXPECT_FALSE(P("assets").parent());
  EXPECT_EQ(P("a:b").sibling("c"), P("a:c"));
  EXPECT_EQ(P("a").child("b"), P("a:b"));
}

TEST(AccountPathTest, RejectsBadSegments) {
  for (const char* bad : {"", ":", "a:", ":a", "a::b", "1cash", "_x", "ca$h", "caf\xC3\xA9", "a b"}) {
    EXPECT_FALSE(AccountPath::try_parse(bad)) << bad;
    EXPECT_EQ(kind_of([&] { (void)P(bad); }), ErrorKind::invalid_path) << bad;
  }
}

TEST(AccountPathTest, ComparisonIsCaseSensitiveAndExact) {
  EXPECT_NE(P("Cash"), P("cash"));
  EXPECT_TRUE(P("a").is_ancestor_of(P("a:b:c")));
  EXPECT_FALSE(P("a").is_ancestor_of(P("a")));
  EXPECT_FALSE(P("a:b").is_ancestor_of(P("a:bc")));
  EXPECT_TRUE(P("a").is_self_or_ancestor_of(P("a")));
}

TEST(ChartTest, DeclareMaterializesAncestors) {
  const Chart chart = Chart{}.declare(P("assets:cash"));
  EXPECT_TRUE(chart.contains(P("assets")));
  EXPECT_FALSE(chart.is_declared(P("assets")));
  EXPECT_TRUE(chart.is_declared(P("assets:cash")));
  EXPECT_TRUE(chart.is_leaf(P("assets:cash")));
  EXPECT_FALSE(chart.is_leaf(P("assets")));
  EXPECT_EQ(chart.nodes(), (std::vector<AccountPath>{P("assets"), P("assets:cash")}));
}

TEST(ChartTest, LeavesUnderTwoRoots) {
  const Chart chart =
      Chart{}.declare(P("liabilities:suppliers")).declare(P("liabilities:banks")).declare(P("equity:capital"));
  EXPECT_EQ(chart.roots(), (std::vector<AccountPath>{P("liabilities"), P("equity")}));
  EXPECT_EQ(chart.leaves(),
            (std::vector<AccountPath>{P("liabilities:suppliers"), P("liabilities:banks"), P("equity:capital")}));
  EXPECT_EQ(chart.leaves_under(P("liabilities")),
            (std::vector<AccountPath>{P("liabilities:suppliers"), P("liabilities:banks")}));
}

TEST(ChartTest, DuplicateDeclarationIsAnError) {
  const Chart chart = Chart{}.declare(P("assets:cash"));
  EXPECT_EQ(kind_of([&] { (void)chart.declare(P("assets:cash")); }), ErrorKind::duplicate_declaration);
  // Declaring an implicit ancestor is fine, once.
  const Chart again = chart.declare(P("assets"));
  EXPECT_TRUE(again.is_declared(P("assets")));
  EXPECT_EQ(kind_of([&] { (void)again.declare(P("assets")); }), ErrorKind::duplicate_declaration);
  EXPECT_NO_THROW((void)again.ensure(P("assets:cash")));
  // The original value is untouched.
  EXPECT_FALSE(chart.is_declared(P("assets")));
}

TEST(ChartTest, UnknownAccountLookups) {
  EXPECT_EQ(kind_of([] { (void)Chart{}.leaves_under(P("nope")); }), ErrorKind::unknown_account);
  EXPECT_EQ(kind_of([] { (void)Chart{}.children(P("nope")); }), ErrorKind::unknown_account);
}

Ledger opening_ledger() {
  // 0 = (1, 0)_cash + (0, 1)_liabilities in basis units.
  Chart chart = Chart{}.declare(P("cash")).declare(P("liabilities"));
  return Ledger(chart).with_entry(P("cash"), TAccount::debit_of(q(1))).with_entry(P("liabilities"),
                                                                                 TAccount::credit_of(q(1)));
}

TEST(AggregateTest, LeafAndRoot) {
  const Ledger ledger = opening_ledger();
  EXPECT_EQ(aggregate(ledger, P("cash")), TAccount::debit_of(q(1)));
  EXPECT_TRUE(is_zero(aggregate_root(ledger)));
  EXPECT_EQ(kind_of([&] { (void)aggregate(ledger, P("nope")); }), ErrorKind::unknown_account);
}

TEST(RefineTest, LiabilitiesIntoStakeholders) {
  const Ledger before = opening_ledger();
  const Ledger after = refine(before, P("liabilities"),
                              {{P("liabilities:suppliers"), TAccount::credit_of(q(2, 5))},
                               {P("liabilities:banks"), TAccount::credit_of(q(2, 5))},
                               {P("liabilities:capital"), TAccount::credit_of(q(1, 5))}});
  EXPECT_FALSE(after.chart().is_leaf(P("liabilities")));
  EXPECT_EQ(after.balances().count(P("liabilities")), 0u);
  EXPECT_EQ(after.at(P("liabilities:banks")), TAccount::credit_of(q(2, 5)));
  // Hand sum: (0,2/5) + (0,2/5) + (0,1/5) = (0,1).
  EXPECT_EQ(aggregate(after, P("liabilities")), TAccount::credit_of(q(1)));
  EXPECT_EQ(aggregate(after, P("liabilities")), aggregate(before, P("liabilities")));
  EXPECT_TRUE(is_zero(aggregate_root(after)));
  EXPECT_EQ(kind_of([&] { (void)after.at(P("liabilities")); }), ErrorKind::non_leaf_posting);
}

TEST(RefineTest, CashIntoBudgetAllocations) {
  const Ledger after = refine(opening_ledger(), P("cash"),
                              {{P("cash:cash1"), TAccount::debit_of(q(1, 5))},
                               {P("cash:cash2"), TAccount::debit_of(q(2, 5))},
                               {P("cash:cash3"), TAccount::debit_of(q(2, 5))}});
  EXPECT_EQ(after.chart().leaves_under(P("cash")).size(), 3u);
  EXPECT_EQ(aggregate(after, P("cash")), TAccount::debit_of(q(1)));
}

TEST(RefineTest, SingleChildIsARename) {
  const Ledger after = refine(opening_ledger(), P("cash"), {{P("cash:till"), TAccount::debit_of(q(1))}});
  EXPECT_EQ(after.at(P("cash:till")), TAccount::debit_of(q(1)));
}

TEST(RefineTest, MismatchReportsSignedResidual) {
  try {
    (void)refine(opening_ledger(), P("liabilities"),
                 {{P("liabilities:a"), TAccount::credit_of(q(2, 5))}, {P("liabilities:b"), TAccount::credit_of(q(2, 5))}});
    FAIL();
  } catch (const LedgerError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::partition_mismatch);
    // shares (0, 4/5) against parent (0, 1): -4/5 - (-1) = +1/5.
    ASSERT_TRUE(e.residual());
    EXPECT_EQ(*e.residual(), SignedAmount::positive(q(1, 5)));
  }
  // Equivalent but not componentwise equal is still a mismatch.
  EXPECT_EQ(kind_of([] {
              (void)refine(opening_ledger(), P("cash"),
                           {{P("cash:a"), TAccount{q(2), q(1)}}});
            }),
            ErrorKind::partition_mismatch);
}

TEST(RefineTest, ChildCollisions) {
  const Ledger base = opening_ledger();
  EXPECT_EQ(kind_of([&] { (void)refine(base, P("cash"), {{P("liabilities:x"), TAccount::debit_of(q(1))}}); }),
            ErrorKind::child_collision);
  EXPECT_EQ(kind_of([&] {
              (void)refine(base, P("cash"),
                           {{P("cash:a"), TAccount::debit_of(q(1, 2))}, {P("cash:a"), TAccount::debit_of(q(1, 2))}});
            }),
            ErrorKind::child_collision);
  EXPECT_EQ(kind_of([&] {
              (void)refine(base, P("cash"),
                           {{P("cash:a"), TAccount::debit_of(q(1, 2))}, {P("cash:a:b"), TAccount::debit_of(q(1, 2))}});
            }),
            ErrorKind::child_collision);
  const Ledger refined = refine(base, P("cash"), {{P("cash:a"), TAccount::debit_of(q(1))}});
  EXPECT_EQ(kind_of([&] { (void)refine(refined, P("cash"), {{P("cash:b"), TAccount{}}}); }),
            ErrorKind::non_leaf_posting);
  EXPECT_EQ(kind_of([&] { (void)refine(refined, P("nope"), {}); }), ErrorKind::unknown_account);
}

TEST(RefineTest, ConservationAndReversibilityOnRandomPartitions) {
  testing::Rng rng(99);
  for (int round = 0; round < 200; ++round) {
    Chart chart = Chart{}.declare(P("top:mid:leaf")).declare(P("top:other")).declare(P("claims"));
    const TAccount whole = testing::random_taccount(rng);
    const TAccount other = testing::random_taccount(rng);
    Ledger ledger = Ledger(chart)
                        .with_entry(P("top:mid:leaf"), whole)
                        .with_entry(P("top:other"), other)
                        .with_entry(P("claims"), inverse(whole + other));
    // Split `whole` into n random componentwise parts.
    const int n = std::uniform_int_distribution<int>(1, 5)(rng);
    std::vector<Share> parts;
    TAccount remaining = whole;
    for (int i = 0; i < n; ++i) {
      const AccountPath child = P("top:mid:leaf:part" + std::to_string(i));
      if (i == n - 1) {
        parts.push_back({child, remaining});
        break;
      }
      const Amount fd = Amount::ratio(std::uniform_int_distribution<unsigned long>(0, 10)(rng), 10);
      const Amount fc = Amount::ratio(std::uniform_int_distribution<unsigned long>(0, 10)(rng), 10);
      const TAccount piece{remaining.debit * fd, remaining.credit * fc};
      parts.push_back({child, piece});
      remaining = {remaining.debit.minus(piece.debit), remaining.credit.minus(piece.credit)};
    }
    const Ledger after = refine(ledger, P("top:mid:leaf"), parts);
    for (const char* ancestor : {"top:mid:leaf", "top:mid", "top"}) {
      ASSERT_EQ(aggregate(after, P(ancestor)), aggregate(ledger, P(ancestor))) << ancestor;
    }
    // Collapsing the children gives back the parent's T-account exactly.
    TAccount collapsed;
    for (const auto& part : parts) collapsed = collapsed + after.at(part.child);
    ASSERT_EQ(collapsed, whole);
    // Compositional: a node's aggregate is the sum over its children.
    for (const auto& node : after.chart().nodes()) {
      const auto& kids = after.chart().children(node);
      if (kids.empty()) continue;
      TAccount sum;
      for (const auto& k : kids) sum = sum + aggregate(after, k);
      ASSERT_EQ(sum, aggregate(after, node));
    }
    ASSERT_TRUE(is_zero(aggregate_root(after)));
  }
}

}  // namespace
}  // namespace pacioli
