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

#include "sirtp/oracle.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

#include "sirtp/analysis.h"
#include "sirtp/solver.h"

namespace sirtp {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

Mask LowBits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Cells are numbered column-major, x * height + y, so the lowest clear bit
// of a mask is the leftmost-lowest empty cell.
class Grid {
 public:
  explicit Grid(const Dims& parent)
      : width_(static_cast<int>(parent.width)),
        height_(static_cast<int>(parent.height)),
        full_(LowBits(width_ * height_)) {}

  int width() const { return width_; }
  int height() const { return height_; }
  Mask full() const { return full_; }

  Mask Rect(int x, int y, int w, int h) const {
    const Mask column = LowBits(h) << y;
    Mask out = 0;
    for (int c = x; c < x + w; ++c) out |= column << (c * height_);
    return out;
  }

  bool Occupied(Mask mask, int x, int y) const {
    return (mask >> (x * height_ + y)) & 1;
  }

  // Leftmost-lowest empty cell; mask must not be full.
  std::pair<int, int> FirstEmpty(Mask mask) const {
    const int cell = std::countr_zero(~mask);
    return {cell / height_, cell % height_};
  }

 private:
  int width_;
  int height_;
  Mask full_;
};

Grid CheckedGrid(const Dims& parent, Int max_area) {
  const Wide area = Area(parent);
  const Int cap = std::min(max_area, kMaxOracleArea);
  if (area > cap) {
    throw OracleBudgetError("parent " + std::to_string(parent.width) + "x" +
                            std::to_string(parent.height) + " has area " +
                            WideToString(area) + ", above the cap of " +
                            std::to_string(cap));
  }
  return Grid(parent);
}

// Depth-first enumeration of tilings with between min_k and max_k modules,
// each at most max_w wide and max_h tall.
class TilingEnumerator {
 public:
  using Visitor = std::function<bool(const std::vector<PlacedRect>&)>;

  TilingEnumerator(const Grid& grid, int min_k, int max_k, Int max_w,
                   Int max_h, const Visitor& visit)
      : grid_(grid),
        min_k_(min_k),
        max_k_(max_k),
        max_w_(static_cast<int>(std::min<Int>(max_w, grid.width()))),
        max_h_(static_cast<int>(std::min<Int>(max_h, grid.height()))),
        visit_(visit) {}

  void Run() { Recurse(0); }

 private:
  void Recurse(Mask mask) {
    if (mask == grid_.full()) {
      if (static_cast<int>(stack_.size()) >= min_k_ && !visit_(stack_)) {
        stopped_ = true;
      }
      return;
    }
    const int placed = static_cast<int>(stack_.size());
    const int empty = std::popcount(grid_.full() & ~mask);
    const int largest = max_w_ * max_h_;
    if (placed + (empty + largest - 1) / largest > max_k_) return;

    const auto [x, y] = grid_.FirstEmpty(mask);
    for (int w = 1; w <= max_w_ && x + w <= grid_.width(); ++w) {
      if (grid_.Occupied(mask, x + w - 1, y)) break;
      for (int h = 1; h <= max_h_ && y + h <= grid_.height(); ++h) {
        const Mask rect = grid_.Rect(x, y, w, h);
        if (rect & mask) break;
        stack_.push_back(PlacedRect{x, y, Dims(w, h), placed});
        Recurse(mask | rect);
        stack_.pop_back();
        if (stopped_) return;
      }
    }
  }

  const Grid& grid_;
  const int min_k_;
  const int max_k_;
  const int max_w_;
  const int max_h_;
  const Visitor& visit_;
  std::vector<PlacedRect> stack_;
  bool stopped_ = false;
};

// Backtracking exact cover of a grid by a fixed multiset of oriented
// rectangles. Failed (mask, remaining counts) states are memoized.
class MultisetTiler {
 public:
  static constexpr size_t kMemoCap = size_t{1} << 20;

  MultisetTiler(const Grid& grid, const std::vector<Dims>& modules)
      : grid_(grid) {
    std::map<Dims, int> counts;
    for (const Dims& d : modules) ++counts[d];
    for (const auto& [d, n] : counts) {
      types_.push_back(d);
      counts_.push_back(n);
    }
  }

  bool Run() { return Recurse(0); }
  const std::vector<PlacedRect>& placement() const { return stack_; }

 private:
  std::string Key(Mask mask) const {
    std::string key(reinterpret_cast<const char*>(&mask), sizeof(mask));
    for (int c : counts_) key.push_back(static_cast<char>(c));
    return key;
  }

  bool Recurse(Mask mask) {
    if (mask == grid_.full()) return true;
    std::string key = Key(mask);
    if (failed_.contains(key)) return false;
    const auto [x, y] = grid_.FirstEmpty(mask);
    for (size_t t = 0; t < types_.size(); ++t) {
      if (counts_[t] == 0) continue;
      const int w = static_cast<int>(types_[t].width);
      const int h = static_cast<int>(types_[t].height);
      if (x + w > grid_.width() || y + h > grid_.height()) continue;
      const Mask rect = grid_.Rect(x, y, w, h);
      if (rect & mask) continue;
      --counts_[t];
      stack_.push_back(
          PlacedRect{x, y, types_[t], static_cast<int>(stack_.size())});
      if (Recurse(mask | rect)) return true;
      stack_.pop_back();
      ++counts_[t];
    }
    if (failed_.size() < kMemoCap) failed_.insert(std::move(key));
    return false;
  }

  const Grid& grid_;
  std::vector<Dims> types_;
  std::vector<int> counts_;
  std::vector<PlacedRect> stack_;
  std::unordered_set<std::string> failed_;
};

std::vector<Dims> SortedDims(const std::vector<PlacedRect>& modules) {
  std::vector<Dims> out;
  out.reserve(modules.size());
  for (const PlacedRect& r : modules) out.push_back(r.dims);
  std::sort(out.begin(), out.end());
  return out;
}

// Pairs every module of a with an unused module of b of the same dims.
PartitionPair PairByDims(Partition a, Partition b) {
  std::map<Dims, std::vector<int>> pool;
  for (int j = b.size() - 1; j >= 0; --j) pool[b.modules[j].dims].push_back(j);
  PartitionPair pair;
  pair.mode = IsomorphismMode::kStrict;
  for (const PlacedRect& r : a.modules) {
    std::vector<int>& free = pool.at(r.dims);
    pair.pairing.push_back(free.back());
    free.pop_back();
  }
  pair.a = std::move(a);
  pair.b = std::move(b);
  return pair;
}

OracleResult MinSirtpImpl(const SirtpInstance& inst,
                          const OracleBudget& budget, bool parallel) {
  const Dims side_a(inst.p, inst.q);
  const Dims side_b(inst.q, inst.p);
  const Grid grid_a = CheckedGrid(side_a, budget.max_area);
  const Grid grid_b(side_b);
  const bool timed = budget.time_limit.count() > 0;
  const auto deadline = Clock::now() + budget.time_limit;
  auto expired = [&] { return timed && Clock::now() > deadline; };

  OracleResult result;
  result.budget = budget;
  result.witness = AlgSirtpPartition(inst);
  result.min_size = result.witness.size();
  result.exhausted = true;

  for (Int k = LowerBound(inst); k < result.min_size; ++k) {
    std::set<std::vector<Dims>> seen;
    std::vector<std::vector<Dims>> candidates;
    std::vector<std::vector<PlacedRect>> tilings;
    bool out_of_time = false;
    long long visits = 0;
    const TilingEnumerator::Visitor collect =
        [&](const std::vector<PlacedRect>& modules) {
          if ((++visits & 1023) == 0 && expired()) {
            out_of_time = true;
            return false;
          }
          std::vector<Dims> dims = SortedDims(modules);
          if (seen.insert(dims).second) {
            candidates.push_back(std::move(dims));
            tilings.push_back(modules);
          }
          return true;
        };
    // Every module must also fit in the transposed rectangle.
    TilingEnumerator(grid_a, static_cast<int>(k), static_cast<int>(k), inst.q,
                     inst.p, collect)
        .Run();
    if (out_of_time) {
      result.exhausted = false;
      return result;
    }

    const long n = static_cast<long>(candidates.size());
    std::vector<std::optional<std::vector<PlacedRect>>> found(n);
    std::atomic<long> best{n};
    std::atomic<bool> stop{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i = 0; i < n; ++i) {
      if (i > best.load() || stop.load()) continue;
      MultisetTiler tiler(grid_b, candidates[i]);
      if (tiler.Run()) {
        found[i] = tiler.placement();
        long current = best.load();
        while (i < current && !best.compare_exchange_weak(current, i)) {
        }
      }
      if (expired()) stop = true;
    }
    const long hit = best.load();
    if (hit < n) {
      Partition a{side_a, tilings[hit]};
      Partition b{side_b, *found[hit]};
      result.witness = PairByDims(std::move(a), std::move(b));
      const CheckReport report = VerifyPair(result.witness);
      if (!report.ok) {
        throw std::logic_error("oracle witness failed verification:\n" +
                               report.ToString());
      }
      result.min_size = k;
      // A timeout may have skipped earlier candidates of this k, but every
      // smaller k was already ruled out.
      result.exhausted = !stop.load();
      return result;
    }
    if (stop.load()) {
      result.exhausted = false;
      return result;
    }
  }
  return result;
}

}  // namespace

void EnumerateTilings(const Dims& parent, int max_modules,
                      const std::function<bool(const Partition&)>& visit,
                      Int max_area) {
  const Grid grid = CheckedGrid(parent, max_area);
  const TilingEnumerator::Visitor adapter =
      [&](const std::vector<PlacedRect>& modules) {
        return visit(Partition{parent, modules});
      };
  TilingEnumerator(grid, 1, max_modules, parent.width, parent.height, adapter)
      .Run();
}

long long CountTilings(const Dims& parent, int max_modules, Int max_area) {
  const Grid grid = CheckedGrid(parent, max_area);
  long long count = 0;
  const TilingEnumerator::Visitor counter =
      [&](const std::vector<PlacedRect>&) {
        ++count;
        return true;
      };
  TilingEnumerator(grid, 1, max_modules, parent.width, parent.height, counter)
      .Run();
  return count;
}

std::optional<Partition> FindTilingWithMultiset(
    const Dims& parent, const std::vector<Dims>& modules, Int max_area) {
  Wide area = 0;
  for (const Dims& d : modules) area += Area(d);
  if (area != Area(parent)) {
    throw std::invalid_argument("module areas sum to " + WideToString(area) +
                                ", parent has " +
                                WideToString(Area(parent)));
  }
  const Grid grid = CheckedGrid(parent, max_area);
  MultisetTiler tiler(grid, modules);
  if (!tiler.Run()) return std::nullopt;
  return Partition{parent, tiler.placement()};
}

bool TilesWithMultiset(const Dims& parent, const std::vector<Dims>& modules,
                       Int max_area) {
  return FindTilingWithMultiset(parent, modules, max_area).has_value();
}

OracleResult MinSirtp(const SirtpInstance& inst, const OracleBudget& budget) {
  return MinSirtpImpl(inst, budget, /*parallel=*/true);
}

OracleResult MinSirtpSerial(const SirtpInstance& inst,
                            const OracleBudget& budget) {
  return MinSirtpImpl(inst, budget, /*parallel=*/false);
}

}  // namespace sirtp
