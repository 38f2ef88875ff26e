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

// Exhaustive search for the minimum SIRTP size over partitions whose cut
// lines have integer coordinates ("integer-grid minimum"). Only meant for
// small instances: parents are encoded as 64-bit cell masks.

#ifndef SIRTP_ORACLE_H_
#define SIRTP_ORACLE_H_

#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sirtp/core.h"

namespace sirtp {

// Raised when an instance exceeds the configured search caps.
class OracleBudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr Int kMaxOracleArea = 64;
inline constexpr Int kDefaultOracleArea = 36;
inline constexpr Int kDefaultMultisetArea = 64;

// Calls `visit` once for every integer-coordinate tiling of `parent` with at
// most max_modules modules (tilings differing only by module order count
// once). Modules are placed at the leftmost-lowest empty cell. Stops early
// when `visit` returns false. Throws OracleBudgetError if the parent area
// exceeds max_area (at most kMaxOracleArea).
void EnumerateTilings(const Dims& parent, int max_modules,
                      const std::function<bool(const Partition&)>& visit,
                      Int max_area = kDefaultOracleArea);

// Number of tilings EnumerateTilings would visit.
long long CountTilings(const Dims& parent, int max_modules,
                       Int max_area = kDefaultOracleArea);

// Tiling of `parent` by exactly the given modules, orientations fixed, if one
// exists. Throws std::invalid_argument when the areas differ and
// OracleBudgetError above max_area.
std::optional<Partition> FindTilingWithMultiset(
    const Dims& parent, const std::vector<Dims>& modules,
    Int max_area = kDefaultMultisetArea);

bool TilesWithMultiset(const Dims& parent, const std::vector<Dims>& modules,
                       Int max_area = kDefaultMultisetArea);

struct OracleBudget {
  Int max_area = kDefaultOracleArea;
  // Zero means no time limit.
  std::chrono::milliseconds time_limit{0};
};

struct OracleResult {
  Int min_size = 0;
  PartitionPair witness;
  // True iff every size below min_size was ruled out.
  bool exhausted = false;
  OracleBudget budget;
};

// Iterative deepening on the module count k from ceil(q/p): every tiling of
// p x q with k modules whose dims multiset also tiles q x p is a solution.
// Candidate multisets of one k are checked in parallel; the reported witness
// is the first candidate in enumeration order, so results do not depend on
// the thread count. If the time budget runs out, the hybrid solver's solution
// is returned with exhausted = false.
OracleResult MinSirtp(const SirtpInstance& inst, const OracleBudget& budget = {});

// Single-threaded reference for MinSirtp.
OracleResult MinSirtpSerial(const SirtpInstance& inst,
                            const OracleBudget& budget = {});

}  // namespace sirtp

#endif  // SIRTP_ORACLE_H_
