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


// SVG drawings of a partition pair: side a on the left, side b on the right,
// with y flipped so the origin sits at the bottom-left of each drawing.

#ifndef SIRTP_SVG_H_
#define SIRTP_SVG_H_

#include <string>

#include "sirtp/core.h"

namespace sirtp {

// Largest drawing extent in pixels; keeps every coordinate exact in the
// 32-bit and float arithmetic of typical viewers.
inline constexpr Int kMaxRenderPixels = Int{1} << 30;

// One <rect class="module"> per module and one <rect class="frame"> per
// side. Paired modules share a fill taken from a fixed 12-color palette by
// the a-side index. Throws std::invalid_argument for scale < 1 or when the
// drawing would exceed kMaxRenderPixels.
std::string RenderSvg(const PartitionPair& pair, int scale = 16);

}  // namespace sirtp

#endif  // SIRTP_SVG_H_
