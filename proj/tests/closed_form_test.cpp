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

#include "selforg/closed_form.hpp"

#include <gtest/gtest.h>

#include "support/reference_sim.hpp"

namespace selforg {
namespace {

using testing::iota_list;
using testing::ref_t1;
using testing::ref_t2;
using testing::reference_run;
using testing::RefRule;

TEST(MtfT1, Values) {
  EXPECT_EQ(mtf_t1(4, 2).total, 26);
  EXPECT_EQ(mtf_t1(5, 1).total, 15);
  for (std::int64_t k = 1; k <= 9; ++k) EXPECT_EQ(mtf_t1(1, k).total, k);
}

TEST(MtfT2, Values) {
  EXPECT_EQ(mtf_t2(5, 1).total, 25);
  EXPECT_EQ(mtf_t2(5, 3).total, 75);
  for (std::int64_t k = 1; k <= 9; ++k) EXPECT_EQ(mtf_t2(1, k).total, k);
}

TEST(TransT1, Values) {
  EXPECT_EQ(trans_t1(4, 2).total, 21);
  EXPECT_EQ(trans_t1(4, 2).theorem_case, "3.1a");
  EXPECT_EQ(trans_t1(4, 3).total, 33);
  EXPECT_EQ(trans_t1(4, 3).theorem_case, "3.1b");
  EXPECT_EQ(trans_t1(3, 2).total, 13);
  EXPECT_EQ(trans_t1(3, 2).theorem_case, "3.1c");
  EXPECT_EQ(trans_t1(5, 4).total, 65);
}

TEST(TransT1, HandTracedPassesAgree) {
  // 10 + 11 + 12 at n = 4 and 15 + 16 + 17 + 17 at n = 5.
  auto four = reference_run(RefRule::Transpose, iota_list(4), ref_t1(4, 3), 4);
  EXPECT_EQ(four.pass_costs, (std::vector<std::int64_t>{10, 11, 12}));
  auto five = reference_run(RefRule::Transpose, iota_list(5), ref_t1(5, 4), 5);
  EXPECT_EQ(five.pass_costs, (std::vector<std::int64_t>{15, 16, 17, 17}));
}

TEST(TransT2, Values) {
  EXPECT_EQ(trans_t2(4, 1).total, 12);
  EXPECT_EQ(trans_t2(4, 1).theorem_case, "3.2a");
  EXPECT_EQ(trans_t2(3, 2).total, 14);
  EXPECT_EQ(trans_t2(3, 2).theorem_case, "3.2b");
  EXPECT_EQ(trans_t2(5, 3).total, 51);
}

TEST(Predict, Dispatch) {
  auto p = predict(PolicyKind::MTF, Family::T2, 5, 1);
  EXPECT_EQ(p.total, 25);
  EXPECT_EQ(p.theorem_case, "2");
  p = predict(PolicyKind::TRANS, Family::T1, 4, 2);
  EXPECT_EQ(p.total, 21);
  EXPECT_EQ(p.theorem_case, "3.1a");
  p = predict(PolicyKind::TRANS, Family::T1, 3, 1);
  EXPECT_EQ(p.total, 6);
  EXPECT_EQ(p.theorem_case, "3.1a");
  EXPECT_EQ(trans_t1_case(TransT1Case::C, 3, 1), 6);
  EXPECT_EQ(predict(PolicyKind::MTF, Family::T1, 4, 2).theorem_case, "1");
}

TEST(Predict, Errors) {
  EXPECT_THROW(predict(PolicyKind::FC, Family::T1, 3, 1), InvalidParameterError);
  EXPECT_THROW(predict(PolicyKind::MTF, Family::PermPower, 3, 1),
               InvalidParameterError);
  EXPECT_THROW(mtf_t1(0, 1), InvalidParameterError);
  EXPECT_THROW(mtf_t2(3, 0), InvalidParameterError);
  EXPECT_THROW(trans_t1(-1, 2), InvalidParameterError);
  EXPECT_THROW(trans_t2(2, -5), InvalidParameterError);
  EXPECT_THROW(trans_t1_case(TransT1Case::B, 3, 2), InvalidParameterError);
  EXPECT_THROW(trans_t1_case(TransT1Case::C, 4, 3), InvalidParameterError);
}

TEST(Predict, OverflowIsReported) {
  EXPECT_THROW(mtf_t2(std::int64_t{1} << 32, 1), OverflowError);
  EXPECT_THROW(trans_t1(3'000'000'000, 3'000'000'000), OverflowError);
}

TEST(DispatchCases, SingletonAlwaysCaseC) {
  for (std::int64_t k = 1; k <= 10; ++k) {
    EXPECT_EQ(trans_t1_case_for(1, k), TransT1Case::C);
    EXPECT_EQ(trans_t1(1, k).total, k);
  }
  EXPECT_EQ(trans_t1_case_for(2, 1), TransT1Case::A);
  EXPECT_EQ(trans_t1_case_for(2, 2), TransT1Case::B);
}

TEST(ClosedFormProperty, CaseBoundariesAgree) {
  for (std::int64_t n = 2; n <= 200; n += 2) {
    EXPECT_EQ(trans_t1_case(TransT1Case::A, n, n / 2),
              trans_t1_case(TransT1Case::B, n, n / 2))
        << "n=" << n;
  }
  for (std::int64_t n = 3; n <= 199; n += 2) {
    EXPECT_EQ(trans_t1_case(TransT1Case::A, n, (n - 1) / 2),
              trans_t1_case(TransT1Case::C, n, (n - 1) / 2))
        << "n=" << n;
  }
}

TEST(ClosedFormProperty, MonotoneInK) {
  for (auto algo : {PolicyKind::MTF, PolicyKind::TRANS}) {
    for (auto fam : {Family::T1, Family::T2}) {
      for (std::int64_t n = 1; n <= 40; ++n) {
        for (std::int64_t k = 1; k < 40; ++k) {
          ASSERT_GT(predict(algo, fam, n, k + 1).total,
                    predict(algo, fam, n, k).total);
        }
      }
    }
  }
}

TEST(ClosedFormProperty, FirstPassAgreement) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    EXPECT_EQ(trans_t1(n, 1).total, n * (n + 1) / 2);
    EXPECT_EQ(mtf_t1(n, 1).total, n * (n + 1) / 2);
  }
}

TEST(ClosedFormProperty, ComparisonDirection) {
  for (std::int64_t k = 1; k <= 40; ++k) {
    // n = 2 on T2: both algorithms pay 4 per pass.
    EXPECT_EQ(trans_t2(2, k).total, mtf_t2(2, k).total);
    for (std::int64_t n = 3; n <= 40; ++n) {
      ASSERT_LT(trans_t2(n, k).total, mtf_t2(n, k).total);
      if (k >= 2) ASSERT_LT(trans_t1(n, k).total, mtf_t1(n, k).total);
    }
  }
}

TEST(PassCostLaw, MatchesReferenceSimulator) {
  for (int n = 1; n <= 20; ++n) {
    const auto run =
        reference_run(RefRule::Transpose, iota_list(n), ref_t1(n, 20), n);
    for (int i = 1; i <= 20; ++i) {
      ASSERT_EQ(trans_t1_pass_cost(n, i), run.pass_costs[i - 1])
          << "n=" << n << " i=" << i;
    }
  }
}

// Independent of the library simulator: the reference loop simulator must
// reproduce every closed form.
TEST(ClosedFormOracle, MatchesReferenceSimulator) {
  for (int n = 1; n <= 24; ++n) {
    const auto mtf1 =
        reference_run(RefRule::MoveToFront, iota_list(n), ref_t1(n, 24), n);
    const auto mtf2 =
        reference_run(RefRule::MoveToFront, iota_list(n), ref_t2(n, 24), n);
    const auto tr1 =
        reference_run(RefRule::Transpose, iota_list(n), ref_t1(n, 24), n);
    const auto tr2 =
        reference_run(RefRule::Transpose, iota_list(n), ref_t2(n, 24), n);
    std::int64_t c[4] = {0, 0, 0, 0};
    for (int k = 1; k <= 24; ++k) {
      c[0] += mtf1.pass_costs[k - 1];
      c[1] += mtf2.pass_costs[k - 1];
      c[2] += tr1.pass_costs[k - 1];
      c[3] += tr2.pass_costs[k - 1];
      ASSERT_EQ(mtf_t1(n, k).total, c[0]) << n << "," << k;
      ASSERT_EQ(mtf_t2(n, k).total, c[1]) << n << "," << k;
      ASSERT_EQ(trans_t1(n, k).total, c[2]) << n << "," << k;
      ASSERT_EQ(trans_t2(n, k).total, c[3]) << n << "," << k;
    }
  }
}

}  // namespace
}  // namespace selforg
