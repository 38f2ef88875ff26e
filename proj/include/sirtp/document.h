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

// JSON documents. Every document is a single object
//   {"formatVersion": 1, "kind": <kind>, ...payload}
// written compactly with a fixed key order and a trailing LF, so writing a
// document that was just read reproduces the same bytes. A pair looks like
//   {"formatVersion":1,"kind":"pair","p":2,"q":3,
//    "a":{"parent":[2,3],"modules":[[x,y,w,h],...]},
//    "b":{"parent":[3,2],"modules":[...]},
//    "pairing":[j0,j1,...]}
// where pairing[i] is the b-module matched with a-module i.

#ifndef SIRTP_DOCUMENT_H_
#define SIRTP_DOCUMENT_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "sirtp/core.h"
#include "sirtp/oracle.h"

namespace sirtp {

inline constexpr int kFormatVersion = 1;

// Raised for unreadable or structurally invalid documents.
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string WritePartitionDocument(const Partition& part);
std::string WritePairDocument(const PartitionPair& pair);
std::string WriteTraceDocument(const SirtpInstance& inst, Int size,
                               const SolveTrace& trace);
std::string WriteOracleDocument(const SirtpInstance& inst,
                                const OracleResult& result);

Partition ReadPartitionDocument(std::string_view text);
PartitionPair ReadPairDocument(std::string_view text);

}  // namespace sirtp

#endif  // SIRTP_DOCUMENT_H_
