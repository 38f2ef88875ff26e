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

// Experiment harness: solves instance families with every solver and emits
// one CSV row per instance.

#ifndef SIRTP_BENCH_H_
#define SIRTP_BENCH_H_

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sirtp/core.h"

namespace sirtp {

enum class FamilyKind {
  kSuccessor,      // (p, p + 1) for p in [p_min, p_max]
  kCoprimeRandom,  // count coprime pairs p < q <= p_max
  kRatioBand,      // count pairs with p < q < (1 + epsilon) p, p <= p_max
};

struct FamilySpec {
  FamilyKind kind = FamilyKind::kSuccessor;
  Int p_min = 2;
  Int p_max = 10;
  int count = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.5;
};

// The instances of a family, in output order. Throws std::invalid_argument
// for parameters that admit no instance.
std::vector<SirtpInstance> FamilyInstances(const FamilySpec& spec);

struct BenchOptions {
  // The oracle runs only where p * q <= oracle_max_area.
  Int oracle_max_area = 36;
  std::chrono::milliseconds oracle_time_limit{10000};
  // Adds the wall-time columns to the CSV. Off by default because timings
  // differ between runs.
  bool include_timings = false;
};

struct BenchRecord {
  Int p = 0;
  Int q = 0;
  Int lower_bound = 0;
  Int euclid_size = 0;
  std::optional<Int> square_transfer_size;  // only for q == p + 1, p >= 2
  Int algsirtp_size = 0;
  int trace_depth = 0;
  // floor(q/p) + 8 sqrt(p) + log2(p) + 4 * depth
  double lemma_bound = 0;
  // floor(q/p) + 8 sqrt(p) + 10 log2(p), reported only
  double theorem_bound = 0;
  std::optional<Int> oracle_min;
  std::int64_t euclid_micros = 0;
  std::int64_t algsirtp_micros = 0;
  std::int64_t oracle_micros = 0;
};

BenchRecord SolveInstance(const SirtpInstance& inst, const BenchOptions& options);

// Solves the family's instances in parallel; record order follows the
// instance order regardless of completion order.
std::vector<BenchRecord> RunFamily(const FamilySpec& spec,
                                   const BenchOptions& options = {});

// Single-threaded reference for RunFamily.
std::vector<BenchRecord> RunFamilySerial(const FamilySpec& spec,
                                         const BenchOptions& options = {});

// Header plus one LF-terminated row per record.
std::string EmitCsv(const std::vector<BenchRecord>& records,
                    bool include_timings = false);

}  // namespace sirtp

#endif  // SIRTP_BENCH_H_
