// Copyright 2026 The popmatch Authors
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

#include "popmatch/duplication.hpp"

#include <gtest/gtest.h>

#include <map>

#include "popmatch/gadgets.hpp"
#include "test_support.hpp"

namespace popmatch {
namespace {

std::vector<std::string> list_of(const DuplicatedInstance& dup, const std::string& agent) {
  std::vector<std::string> out;
  for (EdgeCopy c : dup.preferences(*dup.base().find_agent(agent))) {
    out.push_back(to_string(dup.base(), c));
  }
  return out;
}

using Tokens = std::vector<std::string>;

TEST(BuildDuplicatedTest, SingleEdgeFollowsBlockTemplate) {
  InstanceBuilder b(Mode::weak);
  b.add_agent(Side::u, "u").add_agent(Side::w, "w").add_edge("e", "u", "w", 1, 1);
  DuplicatedInstance dup = build_duplicated(b.build());
  EXPECT_EQ(list_of(dup, "u"), (Tokens{"a(e)", "b(e)", "c(e)", "x(e)", "y(e)", "z(e)"}));
  EXPECT_EQ(list_of(dup, "w"), (Tokens{"z(e)", "y(e)", "x(e)", "c(e)", "b(e)", "a(e)"}));
}

TEST(BuildDuplicatedTest, ExampleTwoAgentU1) {
  DuplicatedInstance dup = build_duplicated(fixture(Fixture::example2));
  EXPECT_EQ(list_of(dup, "u1"), (Tokens{"a(f1)", "b(f1)", "a(e1)", "b(e1)", "c(f1)", "c(e1)",
                                        "x(f1)", "y(f1)", "x(e1)", "y(e1)", "z(f1)", "z(e1)"}));
  // The w2 tie between f1 and e2 resolves toward f1, listed first.
  EXPECT_EQ(list_of(dup, "w2"), (Tokens{"z(f1)", "z(e2)", "y(f1)", "y(e2)", "x(f1)", "x(e2)",
                                        "c(f1)", "c(e2)", "b(f1)", "b(e2)", "a(f1)", "a(e2)"}));
}

TEST(BuildDuplicatedTest, GammaThresholdKeepsBehindWhenImprovementTooSmall) {
  InstanceBuilder b(Mode::gamma);
  b.add_agent(Side::u, "u").add_agent(Side::w, "w1").add_agent(Side::w, "w2");
  b.add_edge("f", "u", "w1", 3, 1, Rational(2), Rational(1));
  b.add_edge("e", "u", "w2", 2, 1, Rational(1), Rational(1));
  DuplicatedInstance dup = build_duplicated(b.build());
  EXPECT_EQ(list_of(dup, "u"), (Tokens{"a(f)", "a(e)", "b(f)", "b(e)", "c(f)", "c(e)", "x(f)",
                                       "x(e)", "y(f)", "y(e)", "z(f)", "z(e)"}));
  EXPECT_TRUE(validate_duplicated(dup).empty());
}

TEST(BuildDuplicatedTest, EqualValuesBreakTowardEarlierListedEdge) {
  InstanceBuilder b(Mode::weak);
  b.add_agent(Side::u, "u").add_agent(Side::w, "w1").add_agent(Side::w, "w2");
  b.add_edge("late", "u", "w2", 1, 1).add_edge("early", "u", "w1", 1, 1);
  DuplicatedInstance dup = build_duplicated(b.build());
  EXPECT_EQ(list_of(dup, "u")[0], "a(late)");
  EXPECT_EQ(list_of(dup, "u")[1], "a(early)");
}

// Independent restatement of the copy-order rules, read off ranks.
void check_threshold_rule(const DuplicatedInstance& dup) {
  const Instance& inst = dup.base();
  for (AgentRef v : inst.all_agents()) {
    const auto inc = inst.incident(v);
    ASSERT_EQ(dup.preferences(v).size(), 6 * inc.size());
    const bool is_u = v.side == Side::u;
    const CopyType primary_hi = is_u ? CopyType::a : CopyType::z;
    const CopyType inserted_hi = is_u ? CopyType::b : CopyType::y;
    const CopyType primary_lo = is_u ? CopyType::x : CopyType::c;
    const CopyType inserted_lo = is_u ? CopyType::y : CopyType::b;
    for (EdgeIndex f : inc) {
      for (EdgeIndex e : inc) {
        const Rational pf = inst.edge(f).value(v.side);
        const Rational pe = inst.edge(e).value(v.side);
        const bool should_jump = inst.mode() == Mode::weak ? pf > pe
                                                           : pf >= pe + *inst.edge(f).gamma(v.side);
        ASSERT_EQ(*dup.rank(v, {f, inserted_hi}) < *dup.rank(v, {e, primary_hi}), should_jump);
        ASSERT_EQ(*dup.rank(v, {f, inserted_lo}) < *dup.rank(v, {e, primary_lo}), should_jump);
        // Fixed block order between neighbouring classes.
        const CopyType mid = is_u ? CopyType::c : CopyType::x;
        ASSERT_LT(*dup.rank(v, {f, inserted_hi}), *dup.rank(v, {e, mid}));
        ASSERT_LT(*dup.rank(v, {f, mid}), *dup.rank(v, {e, inserted_lo}));
        const CopyType last = is_u ? CopyType::z : CopyType::a;
        ASSERT_LT(*dup.rank(v, {f, inserted_lo}), *dup.rank(v, {e, last}));
        ASSERT_LT(*dup.rank(v, {f, primary_lo}), *dup.rank(v, {e, last}));
        // Non-inserted classes are non-increasing in value.
        for (CopyType t : {primary_hi, mid, primary_lo, last}) {
          if (pf > pe) ASSERT_LT(*dup.rank(v, {f, t}), *dup.rank(v, {e, t}));
        }
      }
    }
  }
}

TEST(BuildDuplicatedTest, RandomInstancesSatisfyRulesAndValidator) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    Instance inst = random_instance(testing::small_params(seed, seed % 2 == 1));
    DuplicatedInstance dup = build_duplicated(inst);
    EXPECT_TRUE(validate_duplicated(dup).empty()) << write_instance(inst);
    check_threshold_rule(dup);
  }
}

TEST(BuildDuplicatedTest, Deterministic) {
  Instance inst = random_instance(testing::small_params(7, true));
  EXPECT_EQ(dump_duplicated(build_duplicated(inst)), dump_duplicated(build_duplicated(inst)));
}

TEST(DumpDuplicatedTest, OneLinePerAgent) {
  InstanceBuilder b(Mode::weak);
  b.add_agent(Side::u, "u").add_agent(Side::w, "w").add_agent(Side::w, "lonely");
  b.add_edge("e", "u", "w", 1, 1);
  EXPECT_EQ(dump_duplicated(build_duplicated(b.build())),
            "u a(e) b(e) c(e) x(e) y(e) z(e)\nw z(e) y(e) x(e) c(e) b(e) a(e)\nlonely\n");
}

class ValidateDuplicatedTest : public ::testing::Test {
 protected:
  ValidateDuplicatedTest() {
    InstanceBuilder b(Mode::weak);
    b.add_agent(Side::u, "u").add_agent(Side::w, "w1").add_agent(Side::w, "w2");
    b.add_edge("f", "u", "w1", 2, 1).add_edge("e", "u", "w2", 1, 1);
    good_ = std::make_unique<DuplicatedInstance>(build_duplicated(b.build()));
  }

  DuplicatedInstance with_u_list(std::vector<EdgeCopy> list) const {
    std::vector<std::vector<EdgeCopy>> u = {std::move(list)};
    std::vector<std::vector<EdgeCopy>> w = {
        {good_->preferences({Side::w, 0}).begin(), good_->preferences({Side::w, 0}).end()},
        {good_->preferences({Side::w, 1}).begin(), good_->preferences({Side::w, 1}).end()}};
    return DuplicatedInstance(good_->base(), u, w);
  }

  std::vector<EdgeCopy> u_list() const {
    auto p = good_->preferences({Side::u, 0});
    return {p.begin(), p.end()};
  }

  static bool mentions(const std::vector<DuplicationViolation>& v, const std::string& text) {
    for (const auto& item : v) {
      if (item.message.find(text) != std::string::npos) return true;
    }
    return false;
  }

  std::unique_ptr<DuplicatedInstance> good_;
};

TEST_F(ValidateDuplicatedTest, BuiltListsAreClean) { EXPECT_TRUE(validate_duplicated(*good_).empty()); }

TEST_F(ValidateDuplicatedTest, CBeforeBIsReported) {
  auto list = u_list();
  // a(f) b(f) a(e) b(e) c(f) ... -> move c(f) to the front.
  auto c_pos = std::find(list.begin(), list.end(), EdgeCopy{0, CopyType::c});
  std::rotate(list.begin(), c_pos, c_pos + 1);
  auto violations = validate_duplicated(with_u_list(list));
  EXPECT_TRUE(mentions(violations, "b must precede c"));
}

TEST_F(ValidateDuplicatedTest, MissingCopyIsReported) {
  auto list = u_list();
  std::erase(list, EdgeCopy{1, CopyType::y});
  auto violations = validate_duplicated(with_u_list(list));
  ASSERT_EQ(violations.size(), 1u);
  EXPECT_EQ(violations[0].message, "missing copy y(e)");
}

TEST_F(ValidateDuplicatedTest, DuplicateAndThresholdBreachesAreReported) {
  auto list = u_list();
  list.push_back(list.front());
  EXPECT_TRUE(mentions(validate_duplicated(with_u_list(list)), "duplicate copy a(f)"));

  // b(f) must jump a(e) since 2 > 1; swap them back.
  list = u_list();
  std::swap(list[1], list[2]);
  EXPECT_TRUE(mentions(validate_duplicated(with_u_list(list)), "b(f) must precede a(e)"));

  // Value order inside the a class.
  list = u_list();
  std::swap(list[0], list[2]);
  EXPECT_TRUE(mentions(validate_duplicated(with_u_list(list)), "a copies out of value order"));
}

}  // namespace
}  // namespace popmatch
