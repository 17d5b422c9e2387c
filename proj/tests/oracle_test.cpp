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

#include "popmatch/oracle.hpp"

#include <gtest/gtest.h>

#include <set>

#include "popmatch/errors.hpp"
#include "popmatch/gadgets.hpp"
#include "popmatch/solver.hpp"
#include "popmatch/stability.hpp"
#include "popmatch/vote.hpp"
#include "test_support.hpp"

namespace popmatch {
namespace {

std::uint64_t fibonacci(int k) {
  std::uint64_t a = 0, b = 1;
  for (int i = 0; i < k; ++i) {
    std::uint64_t next = a + b;
    a = b;
    b = next;
  }
  return a;
}

// Bitmask enumeration, independent of the recursive enumerator.
std::vector<Matching> bitmask_matchings(const Instance& inst) {
  std::vector<Matching> out;
  const std::size_t m = inst.edge_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::set<AgentRef> used;
    std::vector<EdgeIndex> edges;
    bool ok = true;
    for (EdgeIndex e = 0; e < m && ok; ++e) {
      if (!(mask >> e & 1)) continue;
      ok = used.insert({Side::u, inst.edge(e).u}).second &&
           used.insert({Side::w, inst.edge(e).w}).second;
      edges.push_back(e);
    }
    if (ok) out.emplace_back(edges);
  }
  return out;
}

std::size_t naive_max_popular(const Instance& inst, VoteRule rule, bool* exists) {
  auto all = bitmask_matchings(inst);
  std::size_t best = 0;
  *exists = false;
  for (const Matching& m : all) {
    bool popular = true;
    for (const Matching& n : all) {
      if (delta(inst, m, n, rule) < 0) {
        popular = false;
        break;
      }
    }
    if (popular) {
      *exists = true;
      best = std::max(best, m.size());
    }
  }
  return best;
}

TEST(EnumerateTest, CountsMatchFibonacciOnPaths) {
  InstanceBuilder single(Mode::weak);
  single.add_agent(Side::u, "u").add_agent(Side::w, "w").add_edge("e", "u", "w", 1, 1);
  EXPECT_EQ(enumerate_matchings(single.build()).size(), 2u);

  // Example 1 is a path with 5 edges.
  Instance ex1 = fixture(Fixture::example1);
  EXPECT_EQ(enumerate_matchings(ex1).size(), fibonacci(static_cast<int>(ex1.edge_count()) + 2));
  Instance ex3 = fixture(Fixture::example3);
  EXPECT_EQ(enumerate_matchings(ex3).size(), fibonacci(static_cast<int>(ex3.edge_count()) + 2));
}

TEST(EnumerateTest, ParallelEdgesAndEmptyFirst) {
  InstanceBuilder b(Mode::weak);
  b.add_agent(Side::u, "u").add_agent(Side::w, "w");
  b.add_edge("e", "u", "w", 1, 1).add_edge("f", "u", "w", 2, 2);
  auto all = enumerate_matchings(b.build());
  ASSERT_EQ(all.size(), 3u);
  EXPECT_TRUE(all.front().empty());
}

bool by_edges(const Matching& x, const Matching& y) {
  return std::ranges::lexicographical_compare(x.edges(), y.edges());
}

TEST(EnumerateTest, AgreesWithBitmaskEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = random_instance(testing::small_params(seed, false));
    auto a = enumerate_matchings(inst);
    auto b = bitmask_matchings(inst);
    std::sort(a.begin(), a.end(), by_edges);
    std::sort(b.begin(), b.end(), by_edges);
    EXPECT_EQ(a, b);
  }
}

TEST(EnumerateTest, RefusesLargeInstances) {
  RandomInstanceParams p;
  p.u_count = 6;
  p.w_count = 6;
  p.edge_prob = 1.0;
  Instance inst = random_instance(p);
  ASSERT_EQ(inst.edge_count(), 36u);
  EXPECT_THROW(enumerate_matchings(inst), TooLarge);
  EXPECT_THROW(max_popular(inst, VoteRule::weak), TooLarge);
  EXPECT_NO_THROW(max_matching(inst));
  EXPECT_EQ(max_matching(inst), 6u);
}

TEST(CertifyPopularTest, FixtureVerdicts) {
  Instance ex2 = fixture(Fixture::example2);
  Matching e2 = testing::by_ids(ex2, {"e1", "e2", "e3", "e4"});
  EXPECT_TRUE(certify_popular(ex2, e2, VoteRule::weak).popular());

  Instance ex1 = fixture(Fixture::example1);
  Matching e1 = testing::by_ids(ex1, {"e1", "e2", "e3"});
  PopularityVerdict v = certify_popular(ex1, e1, VoteRule::weak);
  ASSERT_FALSE(v.popular());
  EXPECT_EQ(v.worst_delta, delta(ex1, e1, *v.counterexample, VoteRule::weak));
  EXPECT_LT(v.worst_delta, 0);
  EXPECT_EQ(delta(ex1, e1, testing::by_ids(ex1, {"f1", "f2"}), VoteRule::weak), -2);
  EXPECT_LE(v.worst_delta, -2);
}

TEST(CertifyPopularTest, WorstDeltaIsTheMinimum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = random_instance(testing::small_params(seed, true));
    Matching m = solve(inst);
    for (VoteRule rule : {VoteRule::classic, VoteRule::weak, VoteRule::gamma, VoteRule::super}) {
      int worst = 0;
      for (const Matching& n : bitmask_matchings(inst)) worst = std::min(worst, delta(inst, m, n, rule));
      PopularityVerdict v = certify_popular(inst, m, rule);
      EXPECT_EQ(v.worst_delta, worst);
      EXPECT_EQ(v.popular(), worst == 0);
    }
  }
}

TEST(MaxPopularTest, Fixtures) {
  Instance ex2 = fixture(Fixture::example2);
  auto opt = max_popular(ex2, VoteRule::weak);
  ASSERT_TRUE(opt);
  EXPECT_EQ(opt->size, 4u);
  EXPECT_EQ(opt->witness, testing::by_ids(ex2, {"e1", "e2", "e3", "e4"}));

  Instance empty(Mode::weak, {}, {}, {});
  auto none = max_popular(empty, VoteRule::classic);
  ASSERT_TRUE(none);
  EXPECT_EQ(none->size, 0u);
}

TEST(MaxPopularTest, AgreesWithNaiveSearch) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Instance inst = random_instance(testing::small_params(seed, seed % 2 == 1));
    for (VoteRule rule : {VoteRule::classic, VoteRule::weak, VoteRule::super}) {
      bool exists = false;
      std::size_t best = naive_max_popular(inst, rule, &exists);
      auto opt = max_popular(inst, rule);
      ASSERT_EQ(opt.has_value(), exists) << write_instance(inst);
      if (opt) {
        EXPECT_EQ(opt->size, best);
        EXPECT_EQ(opt->witness.size(), best);
        EXPECT_TRUE(certify_popular(inst, opt->witness, rule).popular());
      }
    }
  }
}

TEST(MaxStableTest, FixturesAndNotions) {
  Instance ex3 = fixture(Fixture::example3);
  auto opt = max_stable(ex3, StabilityNotion::weak_stable);
  ASSERT_TRUE(opt);
  EXPECT_EQ(opt->size, 5u);
  EXPECT_TRUE(is_stable(ex3, opt->witness, StabilityNotion::weak_stable));
  EXPECT_THROW(max_stable(ex3, StabilityNotion::gamma_min), RuleModeMismatch);

  // A tie at w leaves no super-stable matching.
  InstanceBuilder b(Mode::weak);
  b.add_agent(Side::u, "u1").add_agent(Side::u, "u2").add_agent(Side::w, "w");
  b.add_edge("e", "u1", "w", 1, 1).add_edge("f", "u2", "w", 1, 1);
  Instance tie = b.build();
  EXPECT_FALSE(max_stable(tie, StabilityNotion::super));
  EXPECT_FALSE(super_popular_exists(tie));
  ASSERT_TRUE(max_stable(tie, StabilityNotion::weak_stable));
  EXPECT_EQ(max_stable(tie, StabilityNotion::weak_stable)->size, 1u);
}

TEST(SuperPopularTest, SingleEdge) {
  InstanceBuilder b(Mode::weak);
  b.add_agent(Side::u, "u").add_agent(Side::w, "w").add_edge("e", "u", "w", 1, 1);
  Instance inst = b.build();
  auto m = super_popular_exists(inst);
  ASSERT_TRUE(m);
  EXPECT_EQ(m->size(), 1u);
}

TEST(MaxMatchingTest, KnownValuesAndEnumeration) {
  EXPECT_EQ(max_matching(fixture(Fixture::example1)), 3u);
  EXPECT_EQ(max_matching(fixture(Fixture::example2)), 4u);

  InstanceBuilder star(Mode::weak);
  star.add_agent(Side::u, "u").add_agent(Side::w, "w");
  for (int i = 0; i < 4; ++i) star.add_edge("p" + std::to_string(i), "u", "w", 1, 1);
  EXPECT_EQ(max_matching(star.build()), 1u);

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = random_instance(testing::small_params(seed, false));
    std::size_t best = 0, min_maximal = inst.edge_count() + 1;
    for (const Matching& m : bitmask_matchings(inst)) {
      best = std::max(best, m.size());
      if (is_maximal(inst, m)) min_maximal = std::min(min_maximal, m.size());
    }
    EXPECT_EQ(max_matching(inst), best);
    EXPECT_EQ(min_maximal_matching(inst), min_maximal);
  }
}

// Stable under a notion implies popular under the matching rule.
TEST(OraclePropertyTest, StableMatchingsArePopular) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const bool gamma = seed % 2 == 0;
    Instance inst = random_instance(testing::small_params(seed, gamma));
    const StabilityNotion notion = notion_of(inst.mode());
    const VoteRule rule = rule_of(inst.mode());
    for (const Matching& m : enumerate_matchings(inst)) {
      if (!is_stable(inst, m, notion)) continue;
      EXPECT_TRUE(certify_popular(inst, m, rule).popular()) << write_instance(inst);
    }
  }
}

// Super-popular and classically popular each imply weakly popular, which
// implies gamma-popular.
TEST(OraclePropertyTest, RuleLeniencyIsMonotone) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Instance inst = random_instance(testing::small_params(seed, true));
    for (const Matching& m : enumerate_matchings(inst)) {
      const bool sup = certify_popular(inst, m, VoteRule::super).popular();
      const bool classic = certify_popular(inst, m, VoteRule::classic).popular();
      const bool weak = certify_popular(inst, m, VoteRule::weak).popular();
      const bool gam = certify_popular(inst, m, VoteRule::gamma).popular();
      if (sup || classic) EXPECT_TRUE(weak);
      if (weak) EXPECT_TRUE(gam);
    }
  }
}

}  // namespace
}  // namespace popmatch
