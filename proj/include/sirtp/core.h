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

// Domain types shared by the solver, the checkers and the oracle.
//
// Coordinates: Dims(w, h) is horizontal extent w and vertical extent h. The
// origin is the bottom-left corner of the parent rectangle and y grows
// upward. All geometry is integral; side lengths are bounded by 2^63 - 1 and
// every product is formed in 128-bit arithmetic.

#ifndef SIRTP_CORE_H_
#define SIRTP_CORE_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sirtp {

using Int = std::int64_t;
using Wide = __int128;

// Oriented side lengths. Dims{2, 3} and Dims{3, 2} are different shapes.
struct Dims {
  Int width = 1;
  Int height = 1;

  Dims() = default;
  // Throws std::invalid_argument unless both sides are positive.
  Dims(Int w, Int h);

  Dims Transposed() const { return Dims(height, width); }
  bool IsSquare() const { return width == height; }

  friend auto operator<=>(const Dims&, const Dims&) = default;
};

// width * height, exact.
Wide Area(const Dims& d);

// Floor of the square root using integer arithmetic only:
// r * r <= n < (r + 1) * (r + 1).
std::uint64_t ISqrt(std::uint64_t n);

Int CeilDiv(Int a, Int b);
Int Gcd(Int a, Int b);

// a + b, throwing std::overflow_error when the sum leaves the Int range.
Int CheckedAdd(Int a, Int b);
// a * b, throwing std::overflow_error when the product leaves the Int range.
Int CheckedMul(Int a, Int b);

std::string WideToString(Wide v);

// A module placed inside a parent rectangle.
struct PlacedRect {
  Int x = 0;
  Int y = 0;
  Dims dims;
  int id = 0;

  Int Right() const { return x + dims.width; }
  Int Top() const { return y + dims.height; }

  friend bool operator==(const PlacedRect&, const PlacedRect&) = default;
};

struct Partition {
  Dims parent;
  std::vector<PlacedRect> modules;

  int size() const { return static_cast<int>(modules.size()); }
  // Appends a module and assigns it the next id; returns that id.
  int Add(Int x, Int y, Dims dims);

  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class IsomorphismMode { kStrict, kRotational };

// Two partitions of equal-area parents with a module correspondence.
// pairing[i] is the index in b.modules paired with a.modules[i].
struct PartitionPair {
  Partition a;
  Partition b;
  std::vector<int> pairing;
  IsomorphismMode mode = IsomorphismMode::kStrict;

  int size() const { return a.size(); }

  friend bool operator==(const PartitionPair&, const PartitionPair&) = default;
};

// SIRTP(p, q): transform p x q into q x p without rotating any module.
// p <= q is not required; algorithms normalize internally.
struct SirtpInstance {
  Int p = 1;
  Int q = 1;

  SirtpInstance() = default;
  SirtpInstance(Int p_in, Int q_in);

  Int Shorter() const { return p < q ? p : q; }
  Int Longer() const { return p < q ? q : p; }

  friend bool operator==(const SirtpInstance&, const SirtpInstance&) = default;
};

// IRTP(a, b, c, d): a x b into c x d, rotation allowed.
// Requires a >= c >= d >= b and a * b == c * d.
struct IrtpInstance {
  Int a = 1;
  Int b = 1;
  Int c = 1;
  Int d = 1;

  IrtpInstance() = default;
  IrtpInstance(Int a_in, Int b_in, Int c_in, Int d_in);
};

enum class Branch { kBase, kEuclidStep, kSquareTransfer };

const char* BranchName(Branch b);

struct TraceRound {
  Int p = 0;
  Int q = 0;
  Int delta = 0;
  Branch branch = Branch::kBase;
  Int added = 0;

  friend bool operator==(const TraceRound&, const TraceRound&) = default;
};

// One entry per recursion round, the last one being the base case. depth is
// the number of non-base rounds.
struct SolveTrace {
  std::vector<TraceRound> rounds;
  int depth = 0;

  Int TotalAdded() const;

  friend bool operator==(const SolveTrace&, const SolveTrace&) = default;
};

}  // namespace sirtp

#endif  // SIRTP_CORE_H_
