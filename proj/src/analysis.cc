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

#include <algorithm>
#include <cassert>
#include <iterator>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace sirtp {

const char* ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kOutOfBounds:
      return "out_of_bounds";
    case ViolationKind::kOverlap:
      return "overlap";
    case ViolationKind::kGap:
      return "coverage";
    case ViolationKind::kAreaMismatch:
      return "coverage_area";
    case ViolationKind::kSizeMismatch:
      return "size_mismatch";
    case ViolationKind::kBadPairing:
      return "bad_pairing";
    case ViolationKind::kDimsMismatch:
      return "dims_mismatch";
    case ViolationKind::kParentMismatch:
      return "parent_mismatch";
    case ViolationKind::kRatio:
      return "ratio";
  }
  return "?";
}

void CheckReport::Add(ViolationKind kind, std::vector<int> modules,
                      std::string description) {
  ok = false;
  if (static_cast<int>(violations.size()) >= kMaxStored) {
    ++suppressed;
    return;
  }
  violations.push_back({kind, std::move(modules), std::move(description)});
}

void CheckReport::Merge(const CheckReport& other, const std::string& prefix) {
  for (const Violation& v : other.violations) {
    Add(v.kind, v.modules, prefix + v.description);
  }
  if (!other.ok) ok = false;
  suppressed += other.suppressed;
}

std::string CheckReport::ToString() const {
  std::ostringstream out;
  for (const Violation& v : violations) {
    out << ViolationKindName(v.kind) << ":";
    for (int id : v.modules) out << " #" << id;
    out << " " << v.description << "\n";
  }
  if (suppressed > 0) out << "(" << suppressed << " more violations)\n";
  return out.str();
}

namespace {

std::string Describe(const PlacedRect& r) {
  std::ostringstream out;
  out << r.dims.width << "x" << r.dims.height << " at (" << r.x << "," << r.y
      << ")";
  return out.str();
}

}  // namespace

CheckReport CheckTiling(const Partition& part) {
  CheckReport report;
  const Int width = part.parent.width;
  const Int height = part.parent.height;

  struct Event {
    Int x;
    bool insert;
    int index;
  };
  std::vector<Event> events;
  events.reserve(2 * part.modules.size());
  Wide area = 0;
  for (int i = 0; i < part.size(); ++i) {
    const PlacedRect& r = part.modules[i];
    area += Area(r.dims);
    if (r.x < 0 || r.y < 0 || static_cast<Wide>(r.x) + r.dims.width > width ||
        static_cast<Wide>(r.y) + r.dims.height > height) {
      report.Add(ViolationKind::kOutOfBounds, {i},
                 Describe(r) + " leaves the parent");
      continue;
    }
    events.push_back({r.x, true, i});
    events.push_back({r.Right(), false, i});
  }
  if (area != Area(part.parent)) {
    report.Add(ViolationKind::kAreaMismatch, {},
               "module areas sum to " + WideToString(area) + ", parent has " +
                   WideToString(Area(part.parent)));
  }
  std::sort(events.begin(), events.end(), [](const Event& l, const Event& r) {
    return std::tie(l.x, l.insert, l.index) < std::tie(r.x, r.insert, r.index);
  });

  // Active y-intervals keyed by bottom edge: y0 -> (y1, module index).
  std::map<Int, std::pair<Int, int>> active;
  std::vector<bool> inserted(part.modules.size(), false);
  Wide covered = 0;
  Int slab_start = 0;
  auto close_slab = [&](Int x) {
    if (x > slab_start && covered != height) {
      report.Add(ViolationKind::kGap, {},
                 "vertical slab x in [" + std::to_string(slab_start) + "," +
                     std::to_string(x) + ") covers " + WideToString(covered) +
                     " of height " + std::to_string(height));
    }
    slab_start = x;
  };
  for (size_t e = 0; e < events.size();) {
    const Int x = events[e].x;
    close_slab(x);
    for (; e < events.size() && events[e].x == x; ++e) {
      const int i = events[e].index;
      const PlacedRect& r = part.modules[i];
      if (!events[e].insert) {
        if (inserted[i]) {
          active.erase(r.y);
          covered -= r.dims.height;
        }
        continue;
      }
      auto next = active.lower_bound(r.y);
      int clash = -1;
      if (next != active.end() && next->first < r.Top()) {
        clash = next->second.second;
      } else if (next != active.begin() &&
                 std::prev(next)->second.first > r.y) {
        clash = std::prev(next)->second.second;
      }
      if (clash >= 0) {
        report.Add(ViolationKind::kOverlap, {clash, i},
                   Describe(part.modules[clash]) + " overlaps " + Describe(r));
        continue;
      }
      active.emplace(r.y, std::make_pair(r.Top(), i));
      covered += r.dims.height;
      inserted[i] = true;
    }
  }
  close_slab(width);
  return report;
}

CheckReport CheckIsomorphism(const PartitionPair& pair, IsomorphismMode mode) {
  CheckReport report;
  const int k = pair.a.size();
  if (k != pair.b.size() || static_cast<int>(pair.pairing.size()) != k) {
    report.Add(ViolationKind::kSizeMismatch, {},
               "sides have " + std::to_string(k) + " and " +
                   std::to_string(pair.b.size()) + " modules, pairing has " +
                   std::to_string(pair.pairing.size()) + " entries");
    return report;
  }
  std::vector<int> seen(k, -1);
  for (int i = 0; i < k; ++i) {
    const int j = pair.pairing[i];
    if (j < 0 || j >= k) {
      report.Add(ViolationKind::kBadPairing, {i},
                 "pairing target " + std::to_string(j) + " out of range");
      continue;
    }
    if (seen[j] >= 0) {
      report.Add(ViolationKind::kBadPairing, {seen[j], i},
                 "both map to b-module " + std::to_string(j));
      continue;
    }
    seen[j] = i;
    const Dims& da = pair.a.modules[i].dims;
    const Dims& db = pair.b.modules[j].dims;
    const bool match = da == db || (mode == IsomorphismMode::kRotational &&
                                    da == db.Transposed());
    if (!match) {
      report.Add(ViolationKind::kDimsMismatch, {i, j},
                 "a-module " + Describe(pair.a.modules[i]) +
                     " paired with b-module " + Describe(pair.b.modules[j]));
    }
  }
  return report;
}

CheckReport CheckIsomorphicMultisets(const Partition& a, const Partition& b,
                                     IsomorphismMode mode) {
  CheckReport report;
  if (a.size() != b.size()) {
    report.Add(ViolationKind::kSizeMismatch, {},
               "sides have " + std::to_string(a.size()) + " and " +
                   std::to_string(b.size()) + " modules");
    return report;
  }
  auto keys = [mode](const Partition& part) {
    std::vector<Dims> out;
    out.reserve(part.modules.size());
    for (const PlacedRect& r : part.modules) {
      Dims d = r.dims;
      if (mode == IsomorphismMode::kRotational && d.width < d.height) {
        d = d.Transposed();
      }
      out.push_back(d);
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  if (keys(a) != keys(b)) {
    report.Add(ViolationKind::kDimsMismatch, {},
               "module dims multisets differ");
  }
  return report;
}

CheckReport VerifyPair(const PartitionPair& pair) {
  CheckReport report;
  if (Area(pair.a.parent) != Area(pair.b.parent)) {
    report.Add(ViolationKind::kParentMismatch, {},
               "parents have different areas");
  }
  report.Merge(CheckTiling(pair.a), "side a: ");
  report.Merge(CheckTiling(pair.b), "side b: ");
  report.Merge(CheckIsomorphism(pair, pair.mode));
  return report;
}

std::vector<std::vector<int>> Pattern::Matrix(int i) const {
  std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
  const Block& b = blocks[i];
  for (int r = b.row_lo; r <= b.row_hi; ++r) {
    for (int c = b.col_lo; c <= b.col_hi; ++c) m[r][c] = 1;
  }
  return m;
}

Dims Pattern::ModuleDims(int i) const {
  const Block& b = blocks[i];
  Int w = 0;
  Int h = 0;
  for (int c = b.col_lo; c <= b.col_hi; ++c) w += alpha[c];
  for (int r = b.row_lo; r <= b.row_hi; ++r) h += beta[r];
  return Dims(w, h);
}

Pattern ExtractPattern(const Partition& part) {
  std::vector<Int> xs{0, part.parent.width};
  std::vector<Int> ys{0, part.parent.height};
  for (const PlacedRect& r : part.modules) {
    xs.push_back(r.x);
    xs.push_back(r.Right());
    ys.push_back(r.y);
    ys.push_back(r.Top());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::sort(ys.begin(), ys.end());
  ys.erase(std::unique(ys.begin(), ys.end()), ys.end());

  Pattern out;
  out.cols = static_cast<int>(xs.size()) - 1;
  out.rows = static_cast<int>(ys.size()) - 1;
  for (size_t i = 1; i < xs.size(); ++i) out.alpha.push_back(xs[i] - xs[i - 1]);
  for (size_t i = 1; i < ys.size(); ++i) out.beta.push_back(ys[i] - ys[i - 1]);
  auto index = [](const std::vector<Int>& v, Int value) {
    return static_cast<int>(std::lower_bound(v.begin(), v.end(), value) -
                            v.begin());
  };
  out.blocks.reserve(part.modules.size());
  for (const PlacedRect& r : part.modules) {
    Block b;
    b.col_lo = index(xs, r.x);
    b.col_hi = index(xs, r.Right()) - 1;
    b.row_lo = index(ys, r.y);
    b.row_hi = index(ys, r.Top()) - 1;
    assert(b.col_lo <= b.col_hi && b.row_lo <= b.row_hi);
    out.blocks.push_back(b);
  }
  return out;
}

bool PatternsEqual(const Pattern& x, const Pattern& y) {
  return x.rows == y.rows && x.cols == y.cols && x.blocks == y.blocks;
}

namespace {

// The b side reordered so that its i-th module is the partner of a's i-th.
Partition AlignedB(const PartitionPair& pair) {
  Partition out;
  out.parent = pair.b.parent;
  for (int j : pair.pairing) {
    const PlacedRect& r = pair.b.modules[j];
    out.Add(r.x, r.y, r.dims);
  }
  return out;
}

}  // namespace

RatioLemmaCheck CheckRatioLemma(const PartitionPair& first,
                                const PartitionPair& second) {
  RatioLemmaCheck out;
  for (const PartitionPair* pair : {&first, &second}) {
    const CheckReport iso = CheckIsomorphism(*pair, IsomorphismMode::kStrict);
    if (!iso.ok) {
      out.report.Merge(iso);
      return out;
    }
  }
  if (first.size() != second.size() ||
      !PatternsEqual(ExtractPattern(first.a), ExtractPattern(second.a)) ||
      !PatternsEqual(ExtractPattern(AlignedB(first)),
                     ExtractPattern(AlignedB(second)))) {
    return out;
  }
  // p / q == p' / q' with p x q the a side of each pair.
  const Wide lhs = static_cast<Wide>(first.a.parent.width) *
                   second.a.parent.height;
  const Wide rhs = static_cast<Wide>(second.a.parent.width) *
                   first.a.parent.height;
  if (lhs == rhs) {
    out.outcome = RatioLemmaCheck::Outcome::kHolds;
  } else {
    out.outcome = RatioLemmaCheck::Outcome::kViolated;
    out.report.Add(ViolationKind::kRatio, {},
                   "equivalent pairs with p*q' = " + WideToString(lhs) +
                       " but p'*q = " + WideToString(rhs));
  }
  return out;
}

bool IsSlat(const Partition& part) {
  // (y, x0, x1) for every horizontal side strictly inside the parent.
  std::vector<std::tuple<Int, Int, Int>> sides;
  sides.reserve(2 * part.modules.size());
  for (const PlacedRect& r : part.modules) {
    if (r.y > 0) sides.emplace_back(r.y, r.x, r.Right());
    if (r.Top() < part.parent.height) sides.emplace_back(r.Top(), r.x, r.Right());
  }
  std::sort(sides.begin(), sides.end());
  sides.erase(std::unique(sides.begin(), sides.end()), sides.end());
  for (size_t i = 1; i < sides.size(); ++i) {
    const auto& [y, x0, x1] = sides[i];
    const auto& [py, px0, px1] = sides[i - 1];
    // Distinct sides on the same line must not overlap.
    if (y == py && x0 < px1) return false;
  }
  return true;
}

PartitionPair SlatRefine(const PartitionPair& pair, Side side) {
  if (pair.mode != IsomorphismMode::kStrict) {
    throw std::invalid_argument("slat refinement needs a strict pair");
  }
  const CheckReport iso = CheckIsomorphism(pair, IsomorphismMode::kStrict);
  if (!iso.ok) {
    throw std::invalid_argument("slat refinement needs a valid pairing:\n" +
                                iso.ToString());
  }
  const bool refine_a = side == Side::kA;
  const Partition& cut_side = refine_a ? pair.a : pair.b;
  const Partition& mirror_side = refine_a ? pair.b : pair.a;
  const int k = pair.size();
  // partner[i] pairs cut_side module i with a mirror_side module.
  std::vector<int> partner(k);
  for (int i = 0; i < k; ++i) {
    if (refine_a) {
      partner[i] = pair.pairing[i];
    } else {
      partner[pair.pairing[i]] = i;
    }
  }

  std::vector<Int> lines;
  lines.reserve(2 * k);
  for (const PlacedRect& r : cut_side.modules) {
    lines.push_back(r.x);
    lines.push_back(r.Right());
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

  // Relative cut offsets per cut_side module, as piece widths.
  std::vector<std::vector<Int>> widths(k);
  for (int i = 0; i < k; ++i) {
    const PlacedRect& r = cut_side.modules[i];
    Int prev = r.x;
    for (auto it = std::upper_bound(lines.begin(), lines.end(), r.x);
         it != lines.end() && *it < r.Right(); ++it) {
      widths[i].push_back(*it - prev);
      prev = *it;
    }
    widths[i].push_back(r.Right() - prev);
  }

  Partition cut_out{cut_side.parent, {}};
  std::vector<std::vector<int>> cut_ids(k);
  for (int i = 0; i < k; ++i) {
    const PlacedRect& r = cut_side.modules[i];
    Int x = r.x;
    for (Int w : widths[i]) {
      cut_ids[i].push_back(cut_out.Add(x, r.y, Dims(w, r.dims.height)));
      x += w;
    }
  }
  std::vector<int> owner(k);
  for (int i = 0; i < k; ++i) owner[partner[i]] = i;
  Partition mirror_out{mirror_side.parent, {}};
  std::vector<std::vector<int>> mirror_ids(k);
  for (int j = 0; j < k; ++j) {
    const PlacedRect& r = mirror_side.modules[j];
    const int i = owner[j];
    Int x = r.x;
    for (Int w : widths[i]) {
      mirror_ids[i].push_back(mirror_out.Add(x, r.y, Dims(w, r.dims.height)));
      x += w;
    }
  }

  PartitionPair out;
  out.mode = IsomorphismMode::kStrict;
  if (refine_a) {
    out.a = std::move(cut_out);
    out.b = std::move(mirror_out);
  } else {
    out.a = std::move(mirror_out);
    out.b = std::move(cut_out);
  }
  out.pairing.assign(out.a.size(), -1);
  for (int i = 0; i < k; ++i) {
    const auto& a_ids = refine_a ? cut_ids[i] : mirror_ids[i];
    const auto& b_ids = refine_a ? mirror_ids[i] : cut_ids[i];
    for (size_t t = 0; t < a_ids.size(); ++t) out.pairing[a_ids[t]] = b_ids[t];
  }
  return out;
}

}  // namespace sirtp
