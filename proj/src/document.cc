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

#include "sirtp/document.h"

#include <string>

#include "json.hpp"

namespace sirtp {

namespace {

using Json = nlohmann::ordered_json;

Json Envelope(const char* kind) {
  Json doc;
  doc["formatVersion"] = kFormatVersion;
  doc["kind"] = kind;
  return doc;
}

std::string Dump(const Json& doc) { return doc.dump() + "\n"; }

Json PartitionPayload(const Partition& part) {
  Json payload;
  payload["parent"] = Json::array({part.parent.width, part.parent.height});
  Json modules = Json::array();
  for (const PlacedRect& r : part.modules) {
    modules.push_back(Json::array({r.x, r.y, r.dims.width, r.dims.height}));
  }
  payload["modules"] = std::move(modules);
  return payload;
}

Json PairPayload(const PartitionPair& pair, Json doc) {
  doc["p"] = pair.a.parent.width;
  doc["q"] = pair.a.parent.height;
  if (pair.mode == IsomorphismMode::kRotational) doc["mode"] = "rotational";
  doc["a"] = PartitionPayload(pair.a);
  doc["b"] = PartitionPayload(pair.b);
  doc["pairing"] = pair.pairing;
  return doc;
}

[[noreturn]] void Fail(const std::string& what) {
  throw DocumentError("malformed document: " + what);
}

const Json& Field(const Json& obj, const char* key) {
  if (!obj.is_object()) Fail("expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) Fail(std::string("missing field \"") + key + "\"");
  return *it;
}

Int IntField(const Json& value, const char* what) {
  if (!value.is_number_integer()) Fail(std::string(what) + " is not an integer");
  return value.get<Int>();
}

Dims DimsOf(Int w, Int h, const char* what) {
  if (w < 1 || h < 1) Fail(std::string(what) + " has a non-positive side");
  return Dims(w, h);
}

Partition ParsePartition(const Json& payload) {
  Partition part;
  const Json& parent = Field(payload, "parent");
  if (!parent.is_array() || parent.size() != 2) Fail("parent must be [w,h]");
  part.parent = DimsOf(IntField(parent[0], "parent width"),
                       IntField(parent[1], "parent height"), "parent");
  const Json& modules = Field(payload, "modules");
  if (!modules.is_array()) Fail("modules must be an array");
  for (const Json& m : modules) {
    if (!m.is_array() || m.size() != 4) Fail("module must be [x,y,w,h]");
    part.Add(IntField(m[0], "module x"), IntField(m[1], "module y"),
             DimsOf(IntField(m[2], "module width"),
                    IntField(m[3], "module height"), "module"));
  }
  return part;
}

Json ParseEnvelope(std::string_view text, const char* kind) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    Fail(e.what());
  }
  if (IntField(Field(doc, "formatVersion"), "formatVersion") != kFormatVersion) {
    Fail("unsupported formatVersion");
  }
  const Json& k = Field(doc, "kind");
  if (!k.is_string() || k.get<std::string>() != kind) {
    Fail(std::string("kind must be \"") + kind + "\"");
  }
  return doc;
}

}  // namespace

std::string WritePartitionDocument(const Partition& part) {
  Json doc = Envelope("partition");
  const Json payload = PartitionPayload(part);
  for (const auto& [key, value] : payload.items()) doc[key] = value;
  return Dump(doc);
}

std::string WritePairDocument(const PartitionPair& pair) {
  return Dump(PairPayload(pair, Envelope("pair")));
}

std::string WriteTraceDocument(const SirtpInstance& inst, Int size,
                               const SolveTrace& trace) {
  Json doc = Envelope("trace");
  doc["p"] = inst.p;
  doc["q"] = inst.q;
  doc["size"] = size;
  doc["depth"] = trace.depth;
  Json rounds = Json::array();
  for (const TraceRound& r : trace.rounds) {
    Json round;
    round["p"] = r.p;
    round["q"] = r.q;
    round["delta"] = r.delta;
    round["branch"] = BranchName(r.branch);
    round["added"] = r.added;
    rounds.push_back(std::move(round));
  }
  doc["rounds"] = std::move(rounds);
  return Dump(doc);
}

std::string WriteOracleDocument(const SirtpInstance& inst,
                                const OracleResult& result) {
  Json doc = Envelope("oracle");
  doc["p"] = inst.p;
  doc["q"] = inst.q;
  doc["minSize"] = result.min_size;
  doc["exhausted"] = result.exhausted;
  doc["label"] = "integer-grid minimum";
  doc["budget"] = {{"maxArea", result.budget.max_area},
                   {"timeLimitMs", result.budget.time_limit.count()}};
  doc["witness"] = PairPayload(result.witness, Json::object());
  return Dump(doc);
}

Partition ReadPartitionDocument(std::string_view text) {
  return ParsePartition(ParseEnvelope(text, "partition"));
}

PartitionPair ReadPairDocument(std::string_view text) {
  const Json doc = ParseEnvelope(text, "pair");
  PartitionPair pair;
  pair.a = ParsePartition(Field(doc, "a"));
  pair.b = ParsePartition(Field(doc, "b"));
  if (IntField(Field(doc, "p"), "p") != pair.a.parent.width ||
      IntField(Field(doc, "q"), "q") != pair.a.parent.height) {
    Fail("p and q must match the parent of side a");
  }
  if (auto it = doc.find("mode"); it != doc.end()) {
    if (*it == "rotational") {
      pair.mode = IsomorphismMode::kRotational;
    } else if (*it != "strict") {
      Fail("mode must be \"strict\" or \"rotational\"");
    }
  }
  const Json& pairing = Field(doc, "pairing");
  if (!pairing.is_array()) Fail("pairing must be an array");
  for (const Json& j : pairing) {
    const Int v = IntField(j, "pairing entry");
    if (v < -1 || v > (Int{1} << 31) - 1) Fail("pairing entry out of range");
    pair.pairing.push_back(static_cast<int>(v));
  }
  return pair;
}

}  // namespace sirtp
