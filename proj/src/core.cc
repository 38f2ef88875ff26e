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

#include "sirtp/core.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sirtp {

Dims::Dims(Int w, Int h) : width(w), height(h) {
  if (w < 1 || h < 1) {
    throw std::invalid_argument("Dims: sides must be positive, got " +
                                std::to_string(w) + "x" + std::to_string(h));
  }
}

Wide Area(const Dims& d) { return static_cast<Wide>(d.width) * d.height; }

std::uint64_t ISqrt(std::uint64_t n) {
  // Digit-by-digit method, base 4.
  std::uint64_t root = 0;
  std::uint64_t bit = std::uint64_t{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (n >= root + bit) {
      n -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return root;
}

Int CeilDiv(Int a, Int b) { return a / b + (a % b != 0 ? 1 : 0); }

Int Gcd(Int a, Int b) { return std::gcd(a, b); }

Int CheckedAdd(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("integer sum exceeds the supported range");
  }
  return out;
}

Int CheckedMul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("integer product exceeds the supported range");
  }
  return out;
}

std::string WideToString(Wide v) {
  if (v == 0) return "0";
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v)
                                 : static_cast<unsigned __int128>(v);
  std::string out;
  while (u != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

int Partition::Add(Int x, Int y, Dims dims) {
  const int id = size();
  modules.push_back(PlacedRect{x, y, dims, id});
  return id;
}

SirtpInstance::SirtpInstance(Int p_in, Int q_in) : p(p_in), q(q_in) {
  if (p < 1 || q < 1) {
    throw std::invalid_argument("SIRTP instance needs positive sides");
  }
}

IrtpInstance::IrtpInstance(Int a_in, Int b_in, Int c_in, Int d_in)
    : a(a_in), b(b_in), c(c_in), d(d_in) {
  if (b < 1) throw std::invalid_argument("IRTP sides must be positive");
  if (!(a >= c && c >= d && d >= b)) {
    throw std::invalid_argument("IRTP requires a >= c >= d >= b");
  }
  if (static_cast<Wide>(a) * b != static_cast<Wide>(c) * d) {
    throw std::invalid_argument("IRTP requires a * b == c * d");
  }
}

const char* BranchName(Branch b) {
  switch (b) {
    case Branch::kBase:
      return "BASE";
    case Branch::kEuclidStep:
      return "EUCLID_STEP";
    case Branch::kSquareTransfer:
      return "SQUARE_TRANSFER";
  }
  return "?";
}

Int SolveTrace::TotalAdded() const {
  Int total = 0;
  for (const TraceRound& r : rounds) total = CheckedAdd(total, r.added);
  return total;
}

}  // namespace sirtp
