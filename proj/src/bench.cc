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

#include "sirtp/bench.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "sirtp/oracle.h"
#include "sirtp/rng.h"
#include "sirtp/solver.h"

namespace sirtp {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t MicrosSince(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() -
                                                               start)
      .count();
}

// Rejection draws give up after this many attempts in a row.
constexpr int kMaxRejections = 1 << 20;

std::vector<BenchRecord> Run(const FamilySpec& spec,
                             const BenchOptions& options, bool parallel) {
  const std::vector<SirtpInstance> instances = FamilyInstances(spec);
  const long n = static_cast<long>(instances.size());
  std::vector<BenchRecord> records(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) {
    records[i] = SolveInstance(instances[i], options);
  }
  return records;
}

std::string FormatFixed4(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

}  // namespace

std::vector<SirtpInstance> FamilyInstances(const FamilySpec& spec) {
  std::vector<SirtpInstance> out;
  switch (spec.kind) {
    case FamilyKind::kSuccessor: {
      if (spec.p_min < 1) throw std::invalid_argument("successor needs p >= 1");
      for (Int p = spec.p_min; p <= spec.p_max; ++p) out.emplace_back(p, p + 1);
      break;
    }
    case FamilyKind::kCoprimeRandom: {
      if (spec.count < 0) throw std::invalid_argument("negative count");
      if (spec.count > 0 && spec.p_max < 2) {
        throw std::invalid_argument("coprime family needs p_max >= 2");
      }
      Rng rng(spec.seed);
      while (static_cast<int>(out.size()) < spec.count) {
        const Int p = rng.Uniform(1, spec.p_max);
        const Int q = rng.Uniform(1, spec.p_max);
        if (p == q || Gcd(p, q) != 1) continue;
        out.emplace_back(std::min(p, q), std::max(p, q));
      }
      break;
    }
    case FamilyKind::kRatioBand: {
      if (spec.count < 0) throw std::invalid_argument("negative count");
      if (!(spec.epsilon > 0)) {
        throw std::invalid_argument("ratio band needs epsilon > 0");
      }
      Rng rng(spec.seed);
      int rejected = 0;
      while (static_cast<int>(out.size()) < spec.count) {
        const Int p = rng.Uniform(std::max<Int>(spec.p_min, 1), spec.p_max);
        const double limit = (1.0 + spec.epsilon) * static_cast<double>(p);
        Int q_max = static_cast<Int>(std::ceil(limit)) - 1;
        if (static_cast<double>(q_max) >= limit) --q_max;
        if (q_max < p + 1) {
          if (++rejected > kMaxRejections) {
            throw std::invalid_argument(
                "ratio band admits no q for the given p range and epsilon");
          }
          continue;
        }
        rejected = 0;
        out.emplace_back(p, rng.Uniform(p + 1, q_max));
      }
      break;
    }
  }
  return out;
}

BenchRecord SolveInstance(const SirtpInstance& inst,
                          const BenchOptions& options) {
  BenchRecord r;
  r.p = inst.p;
  r.q = inst.q;
  r.lower_bound = LowerBound(inst);

  auto start = Clock::now();
  r.euclid_size = EuclidSirtpSize(inst);
  r.euclid_micros = MicrosSince(start);

  start = Clock::now();
  const SizeResult hybrid = AlgSirtpSize(inst);
  r.algsirtp_micros = MicrosSince(start);
  r.algsirtp_size = hybrid.size;
  r.trace_depth = hybrid.trace.depth;

  const Int p = inst.Shorter();
  const Int q = inst.Longer();
  if (q == p + 1 && p >= 2) r.square_transfer_size = SquareTransferSize(p);
  const double root = std::sqrt(static_cast<double>(p));
  const double log2p = std::log2(static_cast<double>(p));
  const double floor_ratio = static_cast<double>(q / p);
  r.lemma_bound = floor_ratio + 8 * root + log2p + 4.0 * r.trace_depth;
  r.theorem_bound = floor_ratio + 8 * root + 10 * log2p;

  if (Area(Dims(p, q)) <=
      std::min(options.oracle_max_area, kMaxOracleArea)) {
    start = Clock::now();
    OracleBudget budget;
    budget.max_area = options.oracle_max_area;
    budget.time_limit = options.oracle_time_limit;
    // Instances are already spread over threads; the oracle runs serially.
    const OracleResult oracle = MinSirtpSerial(inst, budget);
    r.oracle_micros = MicrosSince(start);
    if (oracle.exhausted) r.oracle_min = oracle.min_size;
  }
  return r;
}

std::vector<BenchRecord> RunFamily(const FamilySpec& spec,
                                   const BenchOptions& options) {
  return Run(spec, options, /*parallel=*/true);
}

std::vector<BenchRecord> RunFamilySerial(const FamilySpec& spec,
                                         const BenchOptions& options) {
  return Run(spec, options, /*parallel=*/false);
}

std::string EmitCsv(const std::vector<BenchRecord>& records,
                    bool include_timings) {
  std::ostringstream out;
  out << "p,q,lowerBound,euclidSize,squareTransferSize,algsirtpSize,"
         "traceDepth,lemmaBound,theoremBound,oracleMin";
  if (include_timings) out << ",euclidMicros,algsirtpMicros,oracleMicros";
  out << "\n";
  for (const BenchRecord& r : records) {
    out << r.p << ',' << r.q << ',' << r.lower_bound << ',' << r.euclid_size
        << ',';
    if (r.square_transfer_size) out << *r.square_transfer_size;
    out << ',' << r.algsirtp_size << ',' << r.trace_depth << ','
        << FormatFixed4(r.lemma_bound) << ',' << FormatFixed4(r.theorem_bound)
        << ',';
    if (r.oracle_min) out << *r.oracle_min;
    if (include_timings) {
      out << ',' << r.euclid_micros << ',' << r.algsirtp_micros << ','
          << r.oracle_micros;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace sirtp
