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

#include "sirtp/solver.h"

#include <cassert>
#include <charconv>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace sirtp {

namespace {

// Where a region of one side of the pair sits. Local coordinates map to the
// side's global coordinates by an offset and, for IRTP only, a transposition.
struct Frame {
  int side = 0;  // 0 for pair.a, 1 for pair.b
  Int x0 = 0;
  Int y0 = 0;
  bool transposed = false;

  Frame Sub(Int lx, Int ly, bool transpose = false) const {
    Frame f = *this;
    if (transposed) {
      f.x0 += ly;
      f.y0 += lx;
    } else {
      f.x0 += lx;
      f.y0 += ly;
    }
    f.transposed = transposed != transpose;
    return f;
  }
};

// Accumulates matched modules on both sides of a pair.
class PairBuilder {
 public:
  PairBuilder(Dims a_parent, Dims b_parent, IsomorphismMode mode) {
    pair_.a.parent = a_parent;
    pair_.b.parent = b_parent;
    pair_.mode = mode;
  }

  // Adds a module of local dims w x h at local (x1, y1) in `f1` and its
  // partner at (x2, y2) in `f2`. Under a transposed frame the global module
  // is rotated.
  void Add(const Frame& f1, Int x1, Int y1, const Frame& f2, Int x2, Int y2,
           Int w, Int h) {
    const int id1 = Place(f1, x1, y1, w, h);
    const int id2 = Place(f2, x2, y2, w, h);
    assert(f1.side != f2.side);
    pair_.pairing.push_back(f1.side == 0 ? id2 : id1);
  }

  PartitionPair Take() { return std::move(pair_); }

 private:
  int Place(const Frame& f, Int lx, Int ly, Int w, Int h) {
    Partition& part = f.side == 0 ? pair_.a : pair_.b;
    if (f.transposed) return part.Add(f.x0 + ly, f.y0 + lx, Dims(h, w));
    return part.Add(f.x0 + lx, f.y0 + ly, Dims(w, h));
  }

  PartitionPair pair_;
};

// floor(sqrt(p/delta - 1)) == isqrt(floor((p - delta) / delta)).
Int TransferCount(Int p, Int delta) {
  const Int ratio = (p - delta) / delta;
  const Int m = static_cast<Int>(ISqrt(static_cast<std::uint64_t>(ratio)));
  assert(static_cast<Wide>(m) * m <= ratio);
  return m;
}

SirtpInstance Normalized(const SirtpInstance& inst, const SolveOptions& opt) {
  if (!opt.reduce_by_gcd) return inst;
  const Int g = Gcd(inst.p, inst.q);
  return SirtpInstance(inst.p / g, inst.q / g);
}

// Emits the floor(q/p) common p x p squares of one round, skipping the first
// `skip` of them.
void EmitSquares(PairBuilder& out, const Frame& tall, const Frame& wide, Int p,
                 Int n, Int skip) {
  for (Int j = skip; j < n; ++j) {
    out.Add(tall, 0, j * p, wide, j * p, 0, p, p);
  }
}

enum class Strategy { kHybrid, kEuclid };

PartitionPair BuildSirtp(const SirtpInstance& inst, Strategy strategy) {
  PairBuilder out(Dims(inst.p, inst.q), Dims(inst.q, inst.p),
                  IsomorphismMode::kStrict);
  // The tall region has width p and height q >= p.
  Frame tall{0, 0, 0};
  Frame wide{1, 0, 0};
  if (inst.p > inst.q) std::swap(tall, wide);
  Int p = inst.Shorter();
  Int q = inst.Longer();
  while (true) {
    const Int n = q / p;
    const Int delta = q % p;
    if (delta == 0) {
      EmitSquares(out, tall, wide, p, n, 0);
      break;
    }
    const Int strip = n * p;
    Int next_q;
    if (strategy == Strategy::kEuclid) {
      EmitSquares(out, tall, wide, p, n, 0);
      next_q = p;
      const Frame next_tall = wide.Sub(strip, 0);
      wide = tall.Sub(0, strip);
      tall = next_tall;
    } else if (4 * static_cast<Wide>(delta) >= p) {
      EmitSquares(out, tall, wide, p, n, 0);
      const Int k = p / delta - 1;
      for (Int j = 0; j < k; ++j) {
        out.Add(tall, j * delta, strip, wide, strip, j * delta, delta, delta);
      }
      next_q = p - k * delta;
      const Frame next_tall = wide.Sub(strip, k * delta);
      wide = tall.Sub(k * delta, strip);
      tall = next_tall;
    } else {
      const Int m = TransferCount(p, delta);
      const Int s = m * delta;
      // The first square loses its s x s corner; the L-shaped rest is split.
      out.Add(tall, s, 0, wide, s, 0, p - s, p);
      out.Add(tall, 0, s, wide, 0, s, s, p - s);
      EmitSquares(out, tall, wide, p, n, 1);
      // Tall strip pieces land in the wide side's corner, and vice versa.
      for (Int j = 0; j < m; ++j) {
        out.Add(tall, j * s, strip, wide, 0, j * delta, s, delta);
      }
      for (Int j = 0; j < m; ++j) {
        out.Add(wide, strip, j * s, tall, j * delta, 0, delta, s);
      }
      next_q = p - m * s;
      const Frame next_tall = wide.Sub(strip, m * s);
      wide = tall.Sub(m * s, strip);
      tall = next_tall;
    }
    q = next_q;
    p = delta;
  }
  return out.Take();
}

}  // namespace

Int LowerBound(const SirtpInstance& inst) {
  return CeilDiv(inst.Longer(), inst.Shorter());
}

SizeResult AlgSirtpSize(const SirtpInstance& inst) {
  SizeResult result;
  Int p = inst.Shorter();
  Int q = inst.Longer();
  Int total = 0;
  while (true) {
    const Int n = q / p;
    const Int delta = q % p;
    TraceRound round{p, q, delta, Branch::kBase, n};
    Int next_q = 0;
    if (delta != 0) {
      if (4 * static_cast<Wide>(delta) >= p) {
        const Int k = p / delta - 1;
        round.branch = Branch::kEuclidStep;
        round.added = n + k;
        next_q = p - k * delta;
      } else {
        const Int m = TransferCount(p, delta);
        round.branch = Branch::kSquareTransfer;
        round.added = n + 2 * m + 1;
        next_q = p - m * m * delta;
      }
    }
    total = CheckedAdd(total, round.added);
    result.trace.rounds.push_back(round);
    if (delta == 0) break;
    ++result.trace.depth;
    q = next_q;
    p = delta;
  }
  result.size = total;
  return result;
}

PartitionPair AlgSirtpPartition(const SirtpInstance& inst,
                                const SolveOptions& options) {
  return BuildSirtp(Normalized(inst, options), Strategy::kHybrid);
}

Int EuclidSirtpSize(const SirtpInstance& inst) {
  Int p = inst.Shorter();
  Int q = inst.Longer();
  Int total = 0;
  while (p != 0) {
    total = CheckedAdd(total, q / p);
    const Int r = q % p;
    q = p;
    p = r;
  }
  return total;
}

PartitionPair EuclidSirtp(const SirtpInstance& inst,
                          const SolveOptions& options) {
  return BuildSirtp(Normalized(inst, options), Strategy::kEuclid);
}

Int SquareTransferSize(Int p) {
  if (p < 2) throw std::invalid_argument("square transfer needs p >= 2");
  const Int r = static_cast<Int>(ISqrt(static_cast<std::uint64_t>(p)));
  return 2 * r + 2 + (p - r * r);
}

PartitionPair SquareTransferPair(Int p) {
  if (p < 2) throw std::invalid_argument("square transfer needs p >= 2");
  if (p == std::numeric_limits<Int>::max()) {
    throw std::invalid_argument("square transfer needs p + 1 in range");
  }
  const Int r = static_cast<Int>(ISqrt(static_cast<std::uint64_t>(p)));
  const Int rest = p - r * r;
  PairBuilder out(Dims(p, p + 1), Dims(p + 1, p), IsomorphismMode::kStrict);
  const Frame tall{0, 0, 0};
  const Frame wide{1, 0, 0};
  out.Add(tall, r, 0, wide, r, 0, p - r, p);
  out.Add(tall, 0, r, wide, 0, r, r, p - r);
  for (Int j = 0; j < r; ++j) out.Add(tall, j * r, p, wide, 0, j, r, 1);
  for (Int j = 0; j < r; ++j) out.Add(wide, p, j * r, tall, j, 0, 1, r);
  for (Int j = 0; j < rest; ++j) {
    out.Add(tall, r * r + j, p, wide, p, r * r + j, 1, 1);
  }
  return out.Take();
}

const char* AlignmentRuleName(AlignmentRule rule) {
  switch (rule) {
    case AlignmentRule::kAlignLong:
      return "align-long";
    case AlignmentRule::kAlignShort:
      return "align-short";
    case AlignmentRule::kGreedy:
      return "greedy";
  }
  return "?";
}

IrtpResult EuclidIrtp(const IrtpInstance& inst, AlignmentRule rule) {
  PairBuilder out(Dims(inst.a, inst.b), Dims(inst.c, inst.d),
                  IsomorphismMode::kRotational);
  // Each residual is a frame plus local width and height.
  Frame f1{0, 0, 0};
  Frame f2{1, 0, 0};
  Int w1 = inst.a, h1 = inst.b, w2 = inst.c, h2 = inst.d;
  while (true) {
    if ((w1 == w2 && h1 == h2) || (w1 == h2 && h1 == w2)) {
      if (w1 == w2) {
        out.Add(f1, 0, 0, f2, 0, 0, w1, h1);
      } else {
        out.Add(f1, 0, 0, f2.Sub(0, 0, true), 0, 0, w1, h1);
      }
      break;
    }
    // Orient both residuals landscape, then let the first hold the longest
    // side: a >= c >= d >= b.
    if (w1 < h1) {
      f1 = f1.Sub(0, 0, true);
      std::swap(w1, h1);
    }
    if (w2 < h2) {
      f2 = f2.Sub(0, 0, true);
      std::swap(w2, h2);
    }
    if (w2 > w1) {
      std::swap(f1, f2);
      std::swap(w1, w2);
      std::swap(h1, h2);
    }
    const Int a = w1, b = h1, c = w2, d = h2;
    const bool align_long = rule != AlignmentRule::kAlignShort;
    if (align_long) {
      const Int n = a / c;
      for (Int j = 0; j < n; ++j) out.Add(f1, j * c, 0, f2, 0, j * b, c, b);
      f1 = f1.Sub(n * c, 0);
      f2 = f2.Sub(0, n * b);
      w1 = a - n * c;
      h2 = d - n * b;
    } else {
      const Int n = a / d;
      // Pieces are d x b on the first residual and b x d on the second.
      for (Int j = 0; j < n; ++j) {
        out.Add(f1, j * d, 0, f2.Sub(j * b, 0, true), 0, 0, d, b);
      }
      f1 = f1.Sub(n * d, 0);
      f2 = f2.Sub(n * b, 0);
      w1 = a - n * d;
      w2 = c - n * b;
    }
    if (w1 == 0) break;
  }
  IrtpResult result;
  result.pair = out.Take();
  result.size = result.pair.size();
  return result;
}

Rational::Rational(Int n, Int d) {
  if (n < 1 || d < 1) {
    throw std::invalid_argument("rational side lengths must be positive");
  }
  const Int g = Gcd(n, d);
  num = n / g;
  den = d / g;
}

Rational Rational::Parse(std::string_view text) {
  const auto slash = text.find('/');
  auto parse_int = [&](std::string_view s) {
    Int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
      throw std::invalid_argument("not a positive rational: " +
                                  std::string(text));
    }
    return v;
  };
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)),
                  parse_int(text.substr(slash + 1)));
}

std::string Rational::ToString() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

namespace {

Rational FromWide(Wide n, Wide d) {
  Wide a = n, b = d;
  while (b != 0) {
    const Wide t = a % b;
    a = b;
    b = t;
  }
  n /= a;
  d /= a;
  constexpr Wide kMax = std::numeric_limits<Int>::max();
  if (n > kMax || d > kMax) {
    throw std::overflow_error("rational exceeds the supported range");
  }
  return Rational(static_cast<Int>(n), static_cast<Int>(d));
}

}  // namespace

Rational operator*(const Rational& x, const Rational& y) {
  return FromWide(static_cast<Wide>(x.num) * y.num,
                  static_cast<Wide>(x.den) * y.den);
}

Rational operator/(const Rational& x, const Rational& y) {
  return FromWide(static_cast<Wide>(x.num) * y.den,
                  static_cast<Wide>(x.den) * y.num);
}

SrtpReduction ReduceSrtp(const Rational& a, const Rational& b,
                         const Rational& c, const Rational& d) {
  if (!(a * b == c * d)) {
    throw std::invalid_argument("SRTP needs equal areas: a * b != c * d");
  }
  // Shrinking the a/c direction by d/a turns a x b into d x b and c x d into
  // b x d. Scaling by lcm of the denominators makes both sides integral.
  const Int g_den = Gcd(d.den, b.den);
  const Int lcm = CheckedMul(d.den / g_den, b.den);
  const Int p = CheckedMul(d.num, lcm / d.den);
  const Int q = CheckedMul(b.num, lcm / b.den);
  const Int g = Gcd(p, q);
  SrtpReduction out;
  out.sides_swapped = p > q;
  out.instance = out.sides_swapped ? SirtpInstance(q / g, p / g)
                                   : SirtpInstance(p / g, q / g);
  out.vertical_stretch = Rational(g, lcm);
  out.horizontal_stretch = a / Rational(p / g);
  return out;
}

}  // namespace sirtp
