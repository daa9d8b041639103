#include "krnn/solvers.hpp"

#include <gtest/gtest.h>

#include <random>

#include "krnn/error.hpp"
#include "krnn/k_permutations.hpp"
#include "krnn/oracle.hpp"
#include "krnn/synthetic.hpp"
#include "krnn/tsplib.hpp"
#include "test_support.hpp"

namespace krnn {
namespace {

using testing::AllEqual;
using testing::RefRepetitive;
using testing::ThreeNodeMatrix;

Instance ThreeNode() { return Instance::FromRows(ThreeNodeMatrix(), "three"); }

Instance Br17() { return tsplib::LoadInstance(testing::DataDir() / "tsplib" / "br17.atsp"); }

// Mix of tie-free and heavily tied, symmetric and asymmetric instances.
std::vector<Instance> RandomCorpus(std::uint64_t seed, int count, int min_n, int max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(min_n, max_n);
  std::vector<Instance> out;
  for (int i = 0; i < count; ++i) {
    RandomInstanceSpec spec;
    spec.n = size(rng);
    spec.symmetric = i % 2 == 0;
    switch (i % 3) {
      case 0: spec.distinct = true; spec.max_cost = 100000; break;
      case 1: spec.max_cost = 4; break;  // many ties
      case 2: spec.max_cost = 50; break;
    }
    out.push_back(RandomInstance(spec, rng, "r" + std::to_string(i)));
  }
  return out;
}

// ----- Tour validation -----

TEST(ValidateTourTest, RecomputesLength) {
  const Instance inst = ThreeNode();
  EXPECT_EQ(ValidateTour(inst, Tour{{0, 1, 2}, 10}), 10);
  EXPECT_THROW(ValidateTour(inst, Tour{{0, 0, 1}, 10}), NotAPermutation);
  EXPECT_THROW(ValidateTour(inst, Tour{{0, 1}, 10}), NotAPermutation);
  EXPECT_THROW(ValidateTour(inst, Tour{{}, 0}), NotAPermutation);
  EXPECT_THROW(ValidateTour(inst, Tour{{0, 1, 3}, 10}), NotAPermutation);
  try {
    ValidateTour(inst, Tour{{0, 1, 2}, 9});
    FAIL();
  } catch (const LengthMismatch& e) {
    EXPECT_EQ(e.claimed(), 9);
    EXPECT_EQ(e.recomputed(), 10);
  }
}

// ----- Nearest neighbor -----

TEST(NnExtendTest, ThreeNodeFromZero) {
  const Instance inst = ThreeNode();
  const Vertex start[] = {0};
  const Tour tour = NnExtend(inst, PartialTour(3, start));
  EXPECT_EQ(tour.order, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(tour.length, 10);  // 1 + 4 + 5
}

TEST(NnExtendTest, FullPrefixOnlyAddsClosingEdge) {
  const Instance inst = ThreeNode();
  const Vertex prefix[] = {2, 0, 1};
  const Tour tour = NnExtend(inst, PartialTour(3, prefix));
  EXPECT_EQ(tour.order, (std::vector<Vertex>{2, 0, 1}));
  EXPECT_EQ(tour.length, 5 + 1 + 4);
}

TEST(NnExtendTest, TiesGoToLowestIndex) {
  const Vertex start[] = {0};
  const Tour tour = NnExtend(AllEqual(4, 7), PartialTour(4, start));
  EXPECT_EQ(tour.order, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(tour.length, 28);
}

TEST(NnExtendTest, RejectsEmptyPartial) {
  EXPECT_THROW(NnExtend(ThreeNode(), PartialTour(3)), Error);
  const Vertex repeated[] = {1, 1};
  EXPECT_THROW(PartialTour(3, repeated), NotAPermutation);
}

TEST(RunNnFromTest, SmallCases) {
  EXPECT_EQ(RunNnFrom(ThreeNode(), 0).length, 10);
  const Instance two = Instance::FromRows({{0, 4}, {9, 0}});
  const Tour t = RunNnFrom(two, 0);
  EXPECT_EQ(t.order, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(t.length, 13);
  EXPECT_THROW(RunNnFrom(two, 2), VertexOutOfRange);
  EXPECT_THROW(RunNnFrom(two, -1), VertexOutOfRange);
}

TEST(RunNnFromTest, DiagonalSentinelsAreNeverUsed) {
  // A 0 on the diagonal would win every scan if it were consulted.
  const Instance inst = Instance::FromRows({{0, 5, 6}, {5, 0, 7}, {6, 7, 0}});
  const Instance sentinel = Instance::FromRows({{9999, 5, 6}, {5, 9999, 7}, {6, 7, 9999}});
  for (Vertex s = 0; s < 3; ++s) EXPECT_EQ(RunNnFrom(inst, s), RunNnFrom(sentinel, s));
}

TEST(RunNnFromTest, MatchesReferenceGreedy) {
  for (const Instance& inst : RandomCorpus(3, 60, 2, 25)) {
    for (Vertex s = 0; s < inst.dimension(); ++s) {
      const auto order = testing::RefGreedy(inst, {s});
      const Tour tour = RunNnFrom(inst, s);
      ASSERT_EQ(tour.order, order) << inst.name() << " start " << s;
      ASSERT_EQ(tour.length, testing::RefCycle(inst, order));
    }
  }
}

TEST(RunNnFromTest, OrderInvariantUnderCostTranslation) {
  for (const Instance& inst : RandomCorpus(4, 30, 3, 20)) {
    for (CostValue delta : {1, 17, 1000}) {
      const Instance shifted = inst.Translated(delta);
      for (Vertex s = 0; s < inst.dimension(); ++s) {
        const Tour a = RunNnFrom(inst, s);
        const Tour b = RunNnFrom(shifted, s);
        ASSERT_EQ(a.order, b.order);
        ASSERT_EQ(b.length, a.length + inst.dimension() * delta);
      }
    }
  }
}

// ----- k-RNN -----

TEST(RunKRnnTest, Br17) {
  const Instance inst = Br17();
  const RunResult one = RunKRnn(inst, 1);
  EXPECT_EQ(one.tour.length, 56);
  EXPECT_EQ(one.starts_evaluated, 17u);
  const RunResult two = RunKRnn(inst, 2);
  EXPECT_EQ(two.tour.length, 39);
  EXPECT_EQ(two.starts_evaluated, 272u);
  EXPECT_EQ(two.variant, Variant::kKRnn);
  EXPECT_EQ(two.k, 2);
  ASSERT_EQ(two.winning_start.size(), 2u);
  EXPECT_EQ(std::vector<Vertex>(two.tour.order.begin(), two.tour.order.begin() + 2),
            two.winning_start);
  EXPECT_EQ(ValidateTour(inst, two.tour), 39);
}

TEST(RunKRnnTest, KOneIsBestSingleStart) {
  for (const Instance& inst : RandomCorpus(5, 20, 2, 30)) {
    CostValue best = std::numeric_limits<CostValue>::max();
    Vertex best_start = -1;
    for (Vertex s = 0; s < inst.dimension(); ++s) {
      const CostValue len = RunNnFrom(inst, s).length;
      if (len < best) {
        best = len;
        best_start = s;
      }
    }
    const RunResult run = RunKRnn(inst, 1);
    EXPECT_EQ(run.tour.length, best);
    EXPECT_EQ(run.winning_start, std::vector<Vertex>{best_start});
    EXPECT_EQ(run.tour, RunNnFrom(inst, best_start));
  }
}

TEST(RunKRnnTest, MatchesReferenceEnumeration) {
  for (const Instance& inst : RandomCorpus(6, 45, 2, 9)) {
    for (int k = 1; k <= std::min(3, inst.dimension()); ++k) {
      SCOPED_TRACE(inst.name() + " k=" + std::to_string(k));
      const auto ref = RefRepetitive(inst, k, false);
      const RunResult run = RunKRnn(inst, k);
      ASSERT_EQ(run.tour.length, ref.length);
      ASSERT_EQ(run.winning_start, ref.start);
      ASSERT_EQ(run.tour.order, ref.order);
      ASSERT_EQ(run.starts_evaluated, ref.starts);
    }
  }
}

TEST(RunKRnnTest, KEqualsNIsExact) {
  for (const Instance& inst : RandomCorpus(7, 30, 2, 8)) {
    const RunResult run = RunKRnn(inst, inst.dimension());
    EXPECT_EQ(run.tour.length, testing::RefOptimum(inst)) << inst.name();
    EXPECT_EQ(run.starts_evaluated, *PermutationCount(inst.dimension(), inst.dimension()));
  }
}

TEST(RunKRnnTest, NonIncreasingInK) {
  for (const Instance& inst : RandomCorpus(8, 60, 4, 9)) {
    CostValue previous = std::numeric_limits<CostValue>::max();
    for (int k = 1; k <= inst.dimension(); ++k) {
      const CostValue len = RunKRnn(inst, k).tour.length;
      ASSERT_LE(len, previous) << inst.name() << " k=" << k;
      previous = len;
    }
  }
}

TEST(RunKRnnTest, ThreadCountDoesNotChangeTheResult) {
  for (const Instance& inst : RandomCorpus(9, 12, 5, 40)) {
    for (int k = 1; k <= 2; ++k) {
      const RunResult serial = RunKRnn(inst, k);
      const RunResult serial_bi = RunBiKRnn(inst, k);
      for (int threads : {2, 3, 8, 64}) {
        RunOptions options;
        options.threads = threads;
        const RunResult par = RunKRnn(inst, k, options);
        ASSERT_EQ(par.tour, serial.tour);
        ASSERT_EQ(par.winning_start, serial.winning_start);
        ASSERT_EQ(par.starts_evaluated, serial.starts_evaluated);
        const RunResult par_bi = RunBiKRnn(inst, k, options);
        ASSERT_EQ(par_bi.tour, serial_bi.tour);
        ASSERT_EQ(par_bi.winning_start, serial_bi.winning_start);
      }
    }
  }
}

TEST(RunKRnnTest, Errors) {
  const Instance inst = ThreeNode();
  EXPECT_THROW(RunKRnn(inst, 0), KOutOfRange);
  EXPECT_THROW(RunKRnn(inst, 4), KOutOfRange);
  EXPECT_THROW(RunBiKRnn(inst, 0), KOutOfRange);
  RunOptions tight;
  tight.start_budget = 5;
  EXPECT_THROW(RunKRnn(inst, 2, tight), BudgetExceeded);
  tight.start_budget = 6;
  EXPECT_EQ(RunKRnn(inst, 2, tight).starts_evaluated, 6u);
  // 30!/(30-15)! does not fit the default budget.
  EXPECT_THROW(RunKRnn(AllEqual(30, 1), 15), BudgetExceeded);
  RunOptions no_threads;
  no_threads.threads = 0;
  EXPECT_THROW(RunKRnn(inst, 1, no_threads), Error);
}

// ----- Bidirectional -----

TEST(RunBiKRnnTest, MatchesReferenceEnumeration) {
  for (const Instance& inst : RandomCorpus(10, 45, 2, 9)) {
    for (int k = 1; k <= std::min(3, inst.dimension()); ++k) {
      SCOPED_TRACE(inst.name() + " k=" + std::to_string(k));
      const auto ref = RefRepetitive(inst, k, true);
      const RunResult run = RunBiKRnn(inst, k);
      ASSERT_EQ(run.tour.length, ref.length);
      ASSERT_EQ(run.winning_start, ref.start);
      ASSERT_EQ(run.tour.order, ref.order);
      ASSERT_EQ(run.variant, Variant::kBiKRnn);
    }
  }
}

TEST(BiExtendTest, PrependsOnlyWhenStrictlyCheaper) {
  // From path (0, 1): vertex 2 costs 3 after the tail and 2 before the head.
  const Instance inst = Instance::FromRows({{0, 1, 9, 9},
                                            {9, 0, 3, 9},
                                            {2, 9, 0, 9},
                                            {9, 9, 9, 0}});
  const Vertex prefix[] = {0, 1};
  const Tour tour = BiExtend(inst, PartialTour(4, prefix));
  // Step 1: candidates (tail 1->2: 3), (head 2->0: 2) -> prepend 2.
  // Step 2: vertex 3 costs 9 either way -> append.
  EXPECT_EQ(tour.order, (std::vector<Vertex>{2, 0, 1, 3}));
  EXPECT_EQ(tour.length, 2 + 1 + 9 + 9);

  // Equal cost on both sides appends.
  const Instance tie = Instance::FromRows({{0, 1, 9}, {9, 0, 4}, {4, 9, 0}});
  const Tour t2 = BiExtend(tie, PartialTour(3, prefix));
  EXPECT_EQ(t2.order, (std::vector<Vertex>{0, 1, 2}));
}

TEST(BiExtendTest, FirstStepMatchesGreedyOnSymmetricInstances) {
  // From a single vertex head and tail coincide, so on a symmetric instance
  // the first extension appends the greedy choice. Later steps only grow the
  // ends, so that vertex stays right after the start.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Instance inst = RandomEuclideanInstance(15, 1000.0, rng);
    for (Vertex s = 0; s < 15; ++s) {
      const Vertex start[] = {s};
      const Tour greedy = NnExtend(inst, PartialTour(15, start));
      const Tour bi = BiExtend(inst, PartialTour(15, start));
      ASSERT_EQ(bi.order.size(), 15u);
      const auto at = std::find(bi.order.begin(), bi.order.end(), s) - bi.order.begin();
      ASSERT_LT(at + 1, 15);
      ASSERT_EQ(bi.order[at + 1], greedy.order[1]);
    }
  }
}

TEST(RunBiKRnnTest, Br17) {
  const RunResult run = RunBiKRnn(Br17(), 2);
  EXPECT_EQ(run.starts_evaluated, 272u);
  EXPECT_EQ(ValidateTour(Br17(), run.tour), run.tour.length);
  EXPECT_EQ(run.tour.length, 56);
}

// ----- Branching -----

TEST(RunBranchingNnTest, NoTiesMeansNoBranching) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    RandomInstanceSpec spec;
    spec.n = 2 + trial * 2;
    spec.symmetric = trial % 2 == 0;
    spec.distinct = true;
    spec.max_cost = 100000;
    const Instance inst = RandomInstance(spec, rng);
    for (Vertex s = 0; s < inst.dimension(); ++s) {
      // With distinct costs the tie-free run needs exactly n nodes.
      ASSERT_EQ(RunBranchingNn(inst, s, inst.dimension()), RunNnFrom(inst, s));
    }
  }
}

TEST(RunBranchingNnTest, AllEqualCostsExploreEveryCompletion) {
  const Tour tour = RunBranchingNn(AllEqual(4, 5), 0, 1000);
  EXPECT_EQ(tour.length, 20);
  EXPECT_EQ(tour.order, (std::vector<Vertex>{0, 1, 2, 3}));
  // 1 + 3 + 6 + 6 partial tours.
  EXPECT_THROW(RunBranchingNn(AllEqual(4, 5), 0, 15), BudgetExceeded);
  EXPECT_NO_THROW(RunBranchingNn(AllEqual(4, 5), 0, 16));
}

TEST(RunBranchingNnTest, BudgetStopsExponentialBlowUp) {
  try {
    RunBranchingNn(AllEqual(12, 1), 0, 100);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.amount(), 101u);
    EXPECT_EQ(e.limit(), 100u);
  }
  EXPECT_THROW(RunBranchingNn(AllEqual(12, 1), 0, 11), Error);  // below n
  EXPECT_THROW(RunBranchingNn(AllEqual(12, 1), 12, 100), VertexOutOfRange);
}

TEST(RunBranchingNnTest, FindsTheBetterTiedBranch) {
  // From 0, vertices 1 and 2 tie at cost 1. Following 1 gives
  // 0-1-2-3-0 = 1+1+1+10; following 2 gives 0-2-3-1-0 = 1+1+1+1.
  const Instance inst = Instance::FromRows({{0, 1, 1, 5},
                                            {1, 0, 1, 2},
                                            {7, 5, 0, 1},
                                            {10, 1, 7, 0}});
  EXPECT_EQ(RunNnFrom(inst, 0).length, 13);
  const Tour best = RunBranchingNn(inst, 0, 100);
  EXPECT_EQ(best.order, (std::vector<Vertex>{0, 2, 3, 1}));
  EXPECT_EQ(best.length, 4);
}

TEST(RunBranchingNnTest, NeverWorseThanPlainNn) {
  for (const Instance& inst : RandomCorpus(14, 40, 3, 10)) {
    for (Vertex s = 0; s < inst.dimension(); ++s) {
      const Tour b = RunBranchingNn(inst, s, 1'000'000);
      ASSERT_EQ(ValidateTour(inst, b), b.length);
      ASSERT_LE(b.length, RunNnFrom(inst, s).length);
    }
  }
}

}  // namespace
}  // namespace krnn
