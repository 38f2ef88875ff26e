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

// Verification and structural analysis of rectangle partitions: exact tiling,
// isomorphism of paired partitions, grid patterns, and slat refinement.

#ifndef SIRTP_ANALYSIS_H_
#define SIRTP_ANALYSIS_H_

#include <string>
#include <vector>

#include "sirtp/core.h"

namespace sirtp {

enum class ViolationKind {
  kOutOfBounds,
  kOverlap,
  kGap,
  kAreaMismatch,
  kSizeMismatch,
  kBadPairing,
  kDimsMismatch,
  kParentMismatch,
  kRatio,
};

const char* ViolationKindName(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<int> modules;
  std::string description;
};

// ok is true iff no violation was recorded. At most kMaxStored violations are
// kept; the rest are only counted in `suppressed`.
struct CheckReport {
  static constexpr int kMaxStored = 64;

  bool ok = true;
  std::vector<Violation> violations;
  int suppressed = 0;

  void Add(ViolationKind kind, std::vector<int> modules,
           std::string description);
  void Merge(const CheckReport& other, const std::string& prefix = "");
  std::string ToString() const;
};

// Exact tiling: every module inside the parent, pairwise interior-disjoint,
// and together covering the parent. Sweeps the distinct x-coordinates with an
// ordered set of active y-intervals, so it runs in O(k log k).
CheckReport CheckTiling(const Partition& part);

// Checks the pair's own pairing: a bijection between the module lists under
// which paired modules have equal dims (kStrict) or equal dims up to a swap
// (kRotational).
CheckReport CheckIsomorphism(const PartitionPair& pair, IsomorphismMode mode);

// Pairing-free variant: decides whether some bijection exists by comparing
// the multisets of (oriented, for kStrict) module dims.
CheckReport CheckIsomorphicMultisets(const Partition& a, const Partition& b,
                                     IsomorphismMode mode);

// Tiling of both sides plus isomorphism in pair.mode.
CheckReport VerifyPair(const PartitionPair& pair);

// Index ranges are inclusive. Rows run bottom to top, columns left to right.
struct Block {
  int row_lo = 0;
  int row_hi = 0;
  int col_lo = 0;
  int col_hi = 0;

  friend bool operator==(const Block&, const Block&) = default;
};

// Grid extension of a partition: every module side is extended across the
// whole parent, giving a rows x cols grid. Module i covers exactly the
// contiguous (hence rank-1) block blocks[i]. alpha holds the column widths
// and beta the row heights.
struct Pattern {
  int rows = 0;
  int cols = 0;
  std::vector<Block> blocks;
  std::vector<Int> alpha;
  std::vector<Int> beta;

  int size() const { return static_cast<int>(blocks.size()); }
  // The 0-1 membership matrix of module i, rows x cols.
  std::vector<std::vector<int>> Matrix(int i) const;
  // Module dims rebuilt from the length vectors: width = <alpha, row of M_i>,
  // height = <beta, column of M_i>.
  Dims ModuleDims(int i) const;
};

Pattern ExtractPattern(const Partition& part);

// Compares rows, cols and every block; the length vectors are ignored.
bool PatternsEqual(const Pattern& x, const Pattern& y);

// Equivalent solutions (same patterns on both sides once each pair is
// reindexed so that its pairing is the identity) must solve instances with the
// same side ratio.
struct RatioLemmaCheck {
  enum class Outcome { kHolds, kViolated, kNotApplicable };
  Outcome outcome = Outcome::kNotApplicable;
  CheckReport report;
};

RatioLemmaCheck CheckRatioLemma(const PartitionPair& first,
                                const PartitionPair& second);

// Slat partition: any two overlapping horizontal module sides coincide, so
// every vertical cut line runs from bottom to top.
bool IsSlat(const Partition& part);

enum class Side { kA, kB };

// Extends every vertical module side of the chosen side across the parent,
// splitting crossed modules into vertical strips, and applies the same
// relative cuts to the paired modules on the other side. Pieces of a module
// are emitted left to right and paired in that order. The refined side is
// slat; refining kB afterward in general undoes that for kA. Requires a
// strict pair; throws std::invalid_argument otherwise.
PartitionPair SlatRefine(const PartitionPair& pair, Side side = Side::kA);

}  // namespace sirtp

#endif  // SIRTP_ANALYSIS_H_
