// Copyright 2026 The selforg Authors
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

#include "selforg/policy.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "support/reference_sim.hpp"

namespace selforg {
namespace {

using testing::RefRule;

std::vector<int> to_ints(const ListState& s) {
  std::vector<int> v;
  for (ItemId id : s.order()) v.push_back(static_cast<int>(to_int(id)));
  return v;
}

std::vector<int> to_ints(const std::vector<ItemId>& ids) {
  std::vector<int> v;
  for (ItemId id : ids) v.push_back(static_cast<int>(to_int(id)));
  return v;
}

RefRule ref_rule(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::MTF: return RefRule::MoveToFront;
    case PolicyKind::TRANS: return RefRule::Transpose;
    case PolicyKind::FC: return RefRule::FrequencyCount;
  }
  return RefRule::MoveToFront;
}

TEST(Step, TransOnSecondT1Pass) {
  const ListState s{2, 3, 4, 1};
  const auto out = step(Policy(PolicyKind::TRANS), s, ItemId{1}, CostModel::Full);
  EXPECT_EQ(out.cost, 4);
  EXPECT_EQ(out.new_state, (ListState{2, 3, 1, 4}));
  auto ref = testing::reference_run(RefRule::Transpose, {2, 3, 4, 1}, {1});
  EXPECT_EQ(ref.total, out.cost);
  EXPECT_EQ(ref.final_list, to_ints(out.new_state));
}

TEST(Step, MtfFullCost) {
  const auto out = step(Policy(PolicyKind::MTF), ListState{1, 2, 3, 4},
                        ItemId{4}, CostModel::Full);
  EXPECT_EQ(out.cost, 4);
  EXPECT_EQ(out.new_state, (ListState{4, 1, 2, 3}));
}

TEST(Step, FrequencyCountFromZeroCounters) {
  const ListState s{1, 2, 3};
  const Policy fc(PolicyKind::FC, s);
  const auto out = step(fc, s, ItemId{3}, CostModel::Full);
  EXPECT_EQ(out.cost, 3);
  EXPECT_EQ(out.new_state, (ListState{3, 1, 2}));
  EXPECT_EQ(out.new_policy.counter(ItemId{3}), 1u);
  EXPECT_EQ(out.new_policy.counter(ItemId{1}), 0u);
  // The input policy is untouched.
  EXPECT_EQ(fc.counter(ItemId{3}), 0u);
}

TEST(Step, FrequencyCountKeepsTiesStable) {
  // Counters: 1 -> 2, 2 -> 1, 3 -> 0. Accessing 3 raises it to 1, which ties
  // with item 2, so it passes nothing with counter >= 1.
  const ListState s{1, 2, 3};
  Policy fc(PolicyKind::FC, s);
  ListState state = s;
  fc.access(state, ItemId{1}, CostModel::Full);
  fc.access(state, ItemId{1}, CostModel::Full);
  fc.access(state, ItemId{2}, CostModel::Full);
  ASSERT_EQ(state, (ListState{1, 2, 3}));
  fc.access(state, ItemId{3}, CostModel::Full);
  EXPECT_EQ(state, (ListState{1, 2, 3}));
  fc.access(state, ItemId{3}, CostModel::Full);
  EXPECT_EQ(state, (ListState{1, 3, 2}));
}

TEST(Step, MissingItem) {
  EXPECT_THROW(step(Policy(PolicyKind::MTF), ListState{1, 2}, ItemId{3},
                    CostModel::Full),
               ItemNotInListError);
}

TEST(Serve, TransFirstT1Pass) {
  const auto ledger = serve(PolicyKind::TRANS, ListState::identity(4),
                            gen_t1(4, 1), CostModel::Full);
  EXPECT_EQ(ledger.grand_total, 10);
  EXPECT_EQ(ledger.per_request, (std::vector<Cost>{1, 2, 3, 4}));
  ASSERT_EQ(ledger.pass_end_configs.size(), 1u);
  EXPECT_EQ(ledger.pass_end_configs.back(), (ListState{2, 3, 4, 1}));
}

TEST(Serve, TransFirstT2Pass) {
  const auto ledger = serve(PolicyKind::TRANS, ListState::identity(4),
                            gen_t2(4, 1), CostModel::Full);
  EXPECT_EQ(ledger.grand_total, 12);
  EXPECT_EQ(ledger.per_request, (std::vector<Cost>{4, 4, 2, 2}));
  EXPECT_EQ(ledger.pass_end_configs.back(), (ListState{1, 2, 3, 4}));
}

TEST(Serve, MtfTwoT1Passes) {
  const auto ledger = serve(PolicyKind::MTF, ListState::identity(4),
                            gen_t1(4, 2), CostModel::Full);
  EXPECT_EQ(ledger.grand_total, 26);
  EXPECT_EQ(ledger.pass_totals, (std::vector<Cost>{10, 16}));
}

TEST(Serve, EmptySequence) {
  for (auto kind : {PolicyKind::MTF, PolicyKind::TRANS, PolicyKind::FC}) {
    const auto ledger = serve(kind, ListState::identity(3), gen_t1(3, 0),
                              CostModel::Full);
    EXPECT_EQ(ledger.grand_total, 0);
    EXPECT_TRUE(ledger.per_request.empty());
    EXPECT_TRUE(ledger.pass_totals.empty());
  }
}

TEST(Serve, ReportsOffendingRequestIndex) {
  const auto seq = explicit_sequence({ItemId{1}, ItemId{2}, ItemId{9}});
  try {
    serve(PolicyKind::MTF, ListState::identity(3), seq, CostModel::Full);
    FAIL() << "expected ItemNotInListError";
  } catch (const ItemNotInListError& e) {
    EXPECT_TRUE(e.has_request_index());
    EXPECT_EQ(e.request_index(), 2u);
  }
}

TEST(Serve, RejectsRaggedPassStructure) {
  RequestSequence seq{{ItemId{1}, ItemId{2}, ItemId{1}}, 2};
  EXPECT_THROW(serve(PolicyKind::MTF, ListState::identity(2), seq,
                     CostModel::Full),
               InvalidParameterError);
}

TEST(Serve, ExplicitSequenceHasNoPasses) {
  const auto ledger =
      serve(PolicyKind::FC, ListState{1, 2, 3},
            explicit_sequence({ItemId{3}, ItemId{3}, ItemId{2}}),
            CostModel::Full);
  EXPECT_EQ(ledger.grand_total, 7);
  EXPECT_TRUE(ledger.pass_totals.empty());
}

// Random instances against the reference simulator, plus the per-policy
// invariants that do not need an oracle.
TEST(PolicyProperty, RandomInstancesMatchReference) {
  std::mt19937_64 rng(20260415);
  for (int trial = 0; trial < 600; ++trial) {
    const auto kind = static_cast<PolicyKind>(trial % 3);
    const std::size_t n = 1 + rng() % 12;
    std::vector<ItemId> order;
    for (std::size_t i = 0; i < n; ++i) {
      order.push_back(ItemId{static_cast<std::uint32_t>(i + 1)});
    }
    std::shuffle(order.begin(), order.end(), rng);
    const ListState initial(order);
    std::vector<ItemId> requests(rng() % 201);
    for (auto& r : requests) r = order[rng() % n];
    const auto seq = explicit_sequence(requests);

    const auto full = serve(kind, initial, seq, CostModel::Full);
    const auto partial = serve(kind, initial, seq, CostModel::Partial);
    ASSERT_EQ(partial.grand_total,
              full.grand_total - static_cast<Cost>(requests.size()));
    ASSERT_EQ(full.paid_exchange_total, 0);
    ASSERT_EQ(full.grand_total, full.access_total);
    ASSERT_EQ(serve(kind, initial, seq, CostModel::Full), full);

    const auto ref =
        testing::reference_run(ref_rule(kind), to_ints(initial), to_ints(requests));
    ASSERT_EQ(ref.costs, full.per_request) << "trial " << trial;

    // Step-by-step invariants.
    Policy policy(kind, initial);
    ListState state = initial;
    std::map<ItemId, std::uint64_t> last_counters = policy.counters();
    for (ItemId r : requests) {
      const Position before = state.position_of(r);
      policy.access(state, r, CostModel::Full);
      const Position after = state.position_of(r);
      if (kind == PolicyKind::MTF) ASSERT_EQ(after, 1u);
      if (kind == PolicyKind::TRANS) ASSERT_EQ(before - after, before > 1 ? 1u : 0u);
      if (kind == PolicyKind::FC) {
        for (const auto& [id, c] : policy.counters()) {
          ASSERT_GE(c, last_counters[id]);
        }
        last_counters = policy.counters();
        for (Position p = 1; p < state.size(); ++p) {
          ASSERT_GE(policy.counter(state.at(p)), policy.counter(state.at(p + 1)));
        }
      }
    }
    ASSERT_EQ(to_ints(state), ref.final_list);
  }
}

TEST(ParsePolicy, Names) {
  EXPECT_EQ(parse_policy("MTF"), PolicyKind::MTF);
  EXPECT_EQ(parse_policy("trans"), PolicyKind::TRANS);
  EXPECT_EQ(parse_policy("Fc"), PolicyKind::FC);
  EXPECT_THROW(parse_policy("bit"), InvalidParameterError);
}

}  // namespace
}  // namespace selforg
