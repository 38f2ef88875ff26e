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

// Constructive algorithms for the strict integral rectangle transformation
// problem: transform p x q into q x p by two partitions whose modules match
// one-to-one with identical oriented dimensions.
//
// The hybrid solver alternates two kinds of rounds on SIRTP(p, q), p < q,
// with delta = q mod p:
//   * a Euclid step (4 * delta >= p): besides the floor(q/p) common p x p
//     squares, cut floor(p/delta) - 1 delta x delta squares off the residual
//     strips and recurse on SIRTP(delta, p - (floor(p/delta) - 1) * delta);
//   * a square transfer (4 * delta < p): with m = floor(sqrt(p/delta - 1))
//     and s = m * delta, cut m pieces s x delta off one strip and m pieces
//     delta x s off the other; both sets fill an s x s square carved out of a
//     common p x p square, whose L-shaped rest is split into two rectangles.
//     Recurse on SIRTP(delta, p - m^2 * delta).
// The shorter side at least halves every two rounds, so the recursion depth
// is at most 2 * ceil(log2 p) + 1.
//
// Geometry layout (tall side p x q, wide side q x p):
//   * Euclid squares stack from the bottom of the tall side and from the left
//     of the wide side; the residual strip sits on top / on the right.
//   * Strip pieces pack from the left (tall side) or bottom (wide side).
//   * The transfer square is carved from the bottom-left corner of the first
//     p x p square; the rest of that square becomes a full-height right slab
//     (p - s) x p and a top slab s x (p - s).
//   * The wide side's residual becomes the next round's tall side.

#ifndef SIRTP_SOLVER_H_
#define SIRTP_SOLVER_H_

#include <string>
#include <string_view>

#include "sirtp/core.h"

namespace sirtp {

// ceil(max / min), the trivial lower bound: no module may be longer than the
// shorter side of the transposed rectangle.
Int LowerBound(const SirtpInstance& inst);

struct SolveOptions {
  // Solve SIRTP(p/g, q/g) with g = gcd(p, q) instead. Sizes are unchanged;
  // geometry is then expressed on the reduced rectangles.
  bool reduce_by_gcd = false;
};

struct SizeResult {
  Int size = 0;
  SolveTrace trace;
};

// Size of the hybrid Euclid/square-transfer solution, with its trace.
SizeResult AlgSirtpSize(const SirtpInstance& inst);

// Full geometry of the hybrid solution. pair.a is p x q, pair.b is q x p,
// and the module count equals AlgSirtpSize(inst).size.
PartitionPair AlgSirtpPartition(const SirtpInstance& inst,
                                const SolveOptions& options = {});

// Plain successive division into squares.
Int EuclidSirtpSize(const SirtpInstance& inst);
PartitionPair EuclidSirtp(const SirtpInstance& inst,
                          const SolveOptions& options = {});

// Standalone square-transfer construction for SIRTP(p, p + 1), p >= 2.
// Size is 2 * sqrt(p) + 2 for perfect squares and at most 4 * sqrt(p) + 1
// otherwise. Throws std::invalid_argument for p < 2.
Int SquareTransferSize(Int p);
PartitionPair SquareTransferPair(Int p);

enum class AlignmentRule {
  kAlignLong,   // a against c
  kAlignShort,  // a against d
  kGreedy,      // largest common module each round
};

const char* AlignmentRuleName(AlignmentRule rule);

struct IrtpResult {
  Int size = 0;
  PartitionPair pair;  // rotational mode; a is a x b, b is c x d
};

// Euclidean transform for IRTP(a, b, c, d). Each round keeps the naming
// a >= c >= d >= b on the two residual rectangles, identifies floor(a/c)
// (or floor(a/d)) common modules and recurses until the residuals coincide.
IrtpResult EuclidIrtp(const IrtpInstance& inst,
                      AlignmentRule rule = AlignmentRule::kGreedy);

// Positive rational with int64 numerator and denominator, always reduced.
struct Rational {
  Int num = 1;
  Int den = 1;

  Rational() = default;
  Rational(Int n, Int d = 1);

  // Accepts "n" or "n/d".
  static Rational Parse(std::string_view text);
  std::string ToString() const;

  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Strict transformation of a x b into c x d (a parallel to c) reduced to an
// equivalent SIRTP(p, q) with coprime integers p <= q.
struct SrtpReduction {
  SirtpInstance instance;
  // When false, the p x q side of a solution maps onto a x b; when true it
  // maps onto c x d.
  bool sides_swapped = false;
  // A solution drawn on the integer rectangles maps onto the original pair by
  // stretching x by horizontal_stretch and y by vertical_stretch.
  Rational horizontal_stretch;
  Rational vertical_stretch;
};

// Throws std::invalid_argument unless a * b == c * d.
SrtpReduction ReduceSrtp(const Rational& a, const Rational& b,
                         const Rational& c, const Rational& d);

}  // namespace sirtp

#endif  // SIRTP_SOLVER_H_
