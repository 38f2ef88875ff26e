// Copyright 2026 The sirtp Authors
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


#include "sirtp/analysis.h"

#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "sirtp/rng.h"
#include "sirtp/solver.h"
#include "test_oracles.h"

namespace sirtp {
namespace {

using ::sirtp::testing::Pinwheel3x3;
using ::sirtp::testing::PinwheelPair;
using ::sirtp::testing::ReferenceCoverage;
using ::sirtp::testing::SixModuleGridPartition;

Partition Make(Dims parent, const std::vector<std::vector<Int>>& rects) {
  Partition part;
  part.parent = parent;
  for (const auto& r : rects) part.Add(r[0], r[1], Dims(r[2], r[3]));
  return part;
}

bool HasKind(const CheckReport& report, ViolationKind kind) {
  for (const Violation& v : report.violations) {
    if (v.kind == kind) return true;
  }
  return false;
}

// Recursive guillotine cuts of the region, then an optional perturbation.
void Guillotine(Rng& rng, Partition& part, Int x, Int y, Int w, Int h) {
  if ((w == 1 && h == 1) || rng.Uniform(0, 3) == 0) {
    part.Add(x, y, Dims(w, h));
    return;
  }
  const bool vertical = h == 1 || (w > 1 && rng.Uniform(0, 1) == 0);
  if (vertical) {
    const Int cut = rng.Uniform(1, w - 1);
    Guillotine(rng, part, x, y, cut, h);
    Guillotine(rng, part, x + cut, y, w - cut, h);
  } else {
    const Int cut = rng.Uniform(1, h - 1);
    Guillotine(rng, part, x, y, w, cut);
    Guillotine(rng, part, x, y + cut, w, h - cut);
  }
}

TEST(CheckTilingTest, Examples) {
  EXPECT_TRUE(CheckTiling(Make(Dims(3, 2), {{0, 0, 2, 2}, {2, 0, 1, 2}})).ok);

  const CheckReport overlap =
      CheckTiling(Make(Dims(3, 2), {{0, 0, 2, 2}, {1, 0, 2, 2}}));
  EXPECT_FALSE(overlap.ok);
  EXPECT_TRUE(HasKind(overlap, ViolationKind::kOverlap)) << overlap.ToString();

  const CheckReport gap = CheckTiling(Make(Dims(3, 2), {{0, 0, 2, 2}}));
  EXPECT_FALSE(gap.ok);
  EXPECT_TRUE(HasKind(gap, ViolationKind::kAreaMismatch) ||
              HasKind(gap, ViolationKind::kGap));
}

TEST(CheckTilingTest, OutOfBounds) {
  const CheckReport r = CheckTiling(Make(Dims(2, 2), {{1, 0, 2, 2}}));
  EXPECT_TRUE(HasKind(r, ViolationKind::kOutOfBounds));
}

TEST(CheckTilingTest, EqualAreaWithOverlapAndGap) {
  // Areas sum correctly but one cell is doubled and one is empty.
  const CheckReport r = CheckTiling(
      Make(Dims(2, 2), {{0, 0, 1, 1}, {0, 0, 1, 1}, {1, 0, 1, 1}, {1, 1, 1, 1}}));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(HasKind(r, ViolationKind::kOverlap));
}

TEST(CheckTilingTest, CapsStoredViolations) {
  Partition part;
  part.parent = Dims(1, 1);
  for (int i = 0; i < 200; ++i) part.Add(0, 0, Dims(1, 1));
  const CheckReport r = CheckTiling(part);
  EXPECT_FALSE(r.ok);
  EXPECT_LE(static_cast<int>(r.violations.size()), CheckReport::kMaxStored);
  EXPECT_GT(r.suppressed, 0);
}

TEST(CheckTilingTest, AgreesWithUnitCellPainting) {
  Rng rng(2024);
  int valid = 0;
  int invalid = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const Int w = rng.Uniform(1, 20);
    const Int h = rng.Uniform(1, 400 / w);
    Partition part;
    part.parent = Dims(w, h);
    Guillotine(rng, part, 0, 0, w, h);
    // Perturb about two thirds of the cases.
    const Int mode = rng.Uniform(0, 2);
    if (mode == 1 && part.size() > 0) {
      PlacedRect& r = part.modules[rng.Uniform(0, part.size() - 1)];
      r.x = std::max<Int>(0, r.x + rng.Uniform(-1, 1));
      r.y = std::max<Int>(0, r.y + rng.Uniform(-1, 1));
    } else if (mode == 2 && part.size() > 0) {
      PlacedRect& r = part.modules[rng.Uniform(0, part.size() - 1)];
      r.dims = Dims(std::max<Int>(1, r.dims.width + rng.Uniform(-1, 1)),
                    std::max<Int>(1, r.dims.height + rng.Uniform(-1, 1)));
    }
    const bool expected = ReferenceCoverage(part);
    ASSERT_EQ(CheckTiling(part).ok, expected) << "trial " << trial;
    (expected ? valid : invalid) += 1;
  }
  EXPECT_GT(valid, 500);
  EXPECT_GT(invalid, 500);
}

TEST(CheckIsomorphismTest, Strict) {
  PartitionPair pair;
  pair.a = Make(Dims(3, 2), {{0, 0, 2, 2}, {2, 0, 1, 1}, {2, 1, 1, 1}});
  pair.b = Make(Dims(2, 3), {{0, 0, 2, 2}, {0, 2, 1, 1}, {1, 2, 1, 1}});
  pair.pairing = {0, 1, 2};
  EXPECT_TRUE(CheckIsomorphism(pair, IsomorphismMode::kStrict).ok);
  EXPECT_TRUE(VerifyPair(pair).ok);
}

TEST(CheckIsomorphismTest, OrientationSemantics) {
  PartitionPair pair;
  pair.a = Make(Dims(1, 3), {{0, 0, 1, 3}});
  pair.b = Make(Dims(3, 1), {{0, 0, 3, 1}});
  pair.pairing = {0};
  EXPECT_FALSE(CheckIsomorphism(pair, IsomorphismMode::kStrict).ok);
  EXPECT_TRUE(CheckIsomorphism(pair, IsomorphismMode::kRotational).ok);
  EXPECT_FALSE(
      CheckIsomorphicMultisets(pair.a, pair.b, IsomorphismMode::kStrict).ok);
  EXPECT_TRUE(
      CheckIsomorphicMultisets(pair.a, pair.b, IsomorphismMode::kRotational).ok);
}

TEST(CheckIsomorphismTest, RejectsNonBijection) {
  PartitionPair pair;
  pair.a = Make(Dims(2, 1), {{0, 0, 1, 1}, {1, 0, 1, 1}});
  pair.b = Make(Dims(1, 2), {{0, 0, 1, 1}, {0, 1, 1, 1}});
  pair.pairing = {0, 0};
  const CheckReport r = CheckIsomorphism(pair, IsomorphismMode::kStrict);
  EXPECT_TRUE(HasKind(r, ViolationKind::kBadPairing));
  pair.pairing = {0};
  EXPECT_FALSE(CheckIsomorphism(pair, IsomorphismMode::kStrict).ok);
  pair.pairing = {0, 5};
  EXPECT_FALSE(CheckIsomorphism(pair, IsomorphismMode::kStrict).ok);
}

TEST(CheckIsomorphismTest, SizeMismatch) {
  PartitionPair pair;
  pair.a = Make(Dims(2, 1), {{0, 0, 2, 1}});
  pair.b = Make(Dims(1, 2), {{0, 0, 1, 1}, {0, 1, 1, 1}});
  pair.pairing = {0};
  const CheckReport r = CheckIsomorphism(pair, IsomorphismMode::kStrict);
  EXPECT_TRUE(HasKind(r, ViolationKind::kSizeMismatch)) << r.ToString();
}

TEST(PatternTest, SingleModule) {
  const Pattern pat = ExtractPattern(Make(Dims(5, 7), {{0, 0, 5, 7}}));
  EXPECT_EQ(pat.rows, 1);
  EXPECT_EQ(pat.cols, 1);
  EXPECT_EQ(pat.alpha, std::vector<Int>{5});
  EXPECT_EQ(pat.beta, std::vector<Int>{7});
}

TEST(PatternTest, SixModuleGrid) {
  const Pattern pat = ExtractPattern(SixModuleGridPartition());
  EXPECT_EQ(pat.rows, 3);
  EXPECT_EQ(pat.cols, 4);
  ASSERT_EQ(pat.size(), 6);
  const auto m = pat.Matrix(2);
  EXPECT_EQ(m[1], (std::vector<int>{1, 1, 1, 0}));
  EXPECT_EQ(m[0], (std::vector<int>{0, 0, 0, 0}));
  EXPECT_EQ(m[2], (std::vector<int>{0, 0, 0, 0}));
}

TEST(PatternTest, TwoThreeSolution) {
  const Pattern pat = ExtractPattern(
      Make(Dims(2, 3), {{0, 0, 2, 2}, {0, 2, 1, 1}, {1, 2, 1, 1}}));
  EXPECT_EQ(pat.rows, 2);
  EXPECT_EQ(pat.cols, 2);
  EXPECT_EQ(pat.alpha, (std::vector<Int>{1, 1}));
  EXPECT_EQ(pat.beta, (std::vector<Int>{2, 1}));
}

TEST(PatternTest, BlocksPartitionGridAndRebuildDims) {
  Rng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const Int p = rng.Uniform(1, 300);
    const Int q = rng.Uniform(1, 300);
    const Partition part = AlgSirtpPartition(SirtpInstance(p, q)).a;
    const Pattern pat = ExtractPattern(part);
    const int k = part.size();
    std::vector<int> hits(static_cast<size_t>(pat.rows) * pat.cols, 0);
    for (const Block& b : pat.blocks) {
      for (int r = b.row_lo; r <= b.row_hi; ++r) {
        for (int c = b.col_lo; c <= b.col_hi; ++c) ++hits[r * pat.cols + c];
      }
    }
    for (int h : hits) ASSERT_EQ(h, 1);
    for (int i = 0; i < k; ++i) EXPECT_EQ(pat.ModuleDims(i), part.modules[i].dims);
    Int sum_alpha = 0;
    Int sum_beta = 0;
    for (Int a : pat.alpha) sum_alpha += a;
    for (Int b : pat.beta) sum_beta += b;
    EXPECT_EQ(sum_alpha, p);
    EXPECT_EQ(sum_beta, q);
    EXPECT_LE(static_cast<long long>(pat.rows) * pat.cols,
              static_cast<long long>(2 * k - 1) * (2 * k - 1));
  }
}

TEST(PatternTest, Equality) {
  const Partition a23 = AlgSirtpPartition(SirtpInstance(2, 3)).a;
  const Partition a46 = AlgSirtpPartition(SirtpInstance(4, 6)).a;
  const Partition a25 = AlgSirtpPartition(SirtpInstance(2, 5)).a;
  EXPECT_TRUE(PatternsEqual(ExtractPattern(a23), ExtractPattern(a46)));
  EXPECT_FALSE(PatternsEqual(ExtractPattern(a23), ExtractPattern(a25)));
  EXPECT_TRUE(PatternsEqual(ExtractPattern(a25), ExtractPattern(a25)));
}

TEST(RatioLemmaTest, ScaledPairsHold) {
  const PartitionPair x = AlgSirtpPartition(SirtpInstance(2, 3));
  const PartitionPair y = AlgSirtpPartition(SirtpInstance(4, 6));
  const RatioLemmaCheck r = CheckRatioLemma(x, y);
  EXPECT_EQ(r.outcome, RatioLemmaCheck::Outcome::kHolds);
  EXPECT_TRUE(r.report.ok);
  EXPECT_EQ(CheckRatioLemma(x, x).outcome, RatioLemmaCheck::Outcome::kHolds);
}

TEST(RatioLemmaTest, DifferentInstancesNotApplicable) {
  const RatioLemmaCheck r =
      CheckRatioLemma(AlgSirtpPartition(SirtpInstance(2, 3)),
                      AlgSirtpPartition(SirtpInstance(3, 4)));
  EXPECT_NE(r.outcome, RatioLemmaCheck::Outcome::kViolated);
}

TEST(RatioLemmaTest, ReindexedPairingStillEquivalent) {
  PartitionPair x = AlgSirtpPartition(SirtpInstance(9, 10));
  PartitionPair y = AlgSirtpPartition(SirtpInstance(18, 20));
  // Reverse y's b list; the pairing follows, so the pair is unchanged.
  const int k = y.size();
  Partition reversed{y.b.parent, {}};
  for (int j = k - 1; j >= 0; --j) {
    const PlacedRect& r = y.b.modules[j];
    reversed.Add(r.x, r.y, r.dims);
  }
  for (int& j : y.pairing) j = k - 1 - j;
  y.b = reversed;
  EXPECT_EQ(CheckRatioLemma(x, y).outcome, RatioLemmaCheck::Outcome::kHolds);
}

TEST(SlatTest, Predicate) {
  EXPECT_TRUE(IsSlat(Make(Dims(3, 2), {{0, 0, 1, 2}, {1, 0, 2, 2}})));
  EXPECT_TRUE(IsSlat(Make(Dims(4, 4), {{0, 0, 4, 4}})));
  EXPECT_FALSE(IsSlat(Pinwheel3x3()));
  // Columns cut at different heights are still slat.
  EXPECT_TRUE(IsSlat(
      Make(Dims(2, 3), {{0, 0, 1, 2}, {0, 2, 1, 1}, {1, 0, 1, 1}, {1, 1, 1, 2}})));
}

TEST(SlatRefineTest, AlreadySlatIsIdentity) {
  PartitionPair pair;
  pair.a = Make(Dims(2, 1), {{0, 0, 1, 1}, {1, 0, 1, 1}});
  pair.b = Make(Dims(1, 2), {{0, 0, 1, 1}, {0, 1, 1, 1}});
  pair.pairing = {1, 0};
  EXPECT_EQ(SlatRefine(pair), pair);
  const PartitionPair squares = AlgSirtpPartition(SirtpInstance(3, 12));
  EXPECT_EQ(SlatRefine(squares), squares);
}

TEST(SlatRefineTest, Pinwheel) {
  const PartitionPair pair = PinwheelPair();
  ASSERT_TRUE(VerifyPair(pair).ok);
  const PartitionPair refined = SlatRefine(pair);
  EXPECT_TRUE(IsSlat(refined.a));
  EXPECT_EQ(refined.size(), 7);
  const CheckReport report = VerifyPair(refined);
  EXPECT_TRUE(report.ok) << report.ToString();
}

TEST(SlatRefineTest, SolverOutputs) {
  for (Int p = 1; p <= 25; ++p) {
    for (Int q = p; q <= 40; ++q) {
      const PartitionPair pair = AlgSirtpPartition(SirtpInstance(p, q));
      const PartitionPair refined = SlatRefine(pair);
      ASSERT_TRUE(IsSlat(refined.a)) << p << "," << q;
      ASSERT_GE(refined.size(), pair.size());
      const CheckReport report = VerifyPair(refined);
      ASSERT_TRUE(report.ok) << p << "," << q << "\n" << report.ToString();
    }
  }
}

TEST(SlatRefineTest, SideB) {
  const PartitionPair refined =
      SlatRefine(AlgSirtpPartition(SirtpInstance(9, 10)), Side::kB);
  EXPECT_TRUE(IsSlat(refined.b));
  EXPECT_TRUE(VerifyPair(refined).ok);
}

TEST(SlatRefineTest, RejectsRotationalPairs) {
  PartitionPair pair = PinwheelPair();
  pair.mode = IsomorphismMode::kRotational;
  EXPECT_THROW(SlatRefine(pair), std::invalid_argument);
}

}  // namespace
}  // namespace sirtp
