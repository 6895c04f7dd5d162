// Copyright 2026 The gapkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// JSON documents exchanged by the command-line tool. Integers above 2^53 are
// written as decimal strings; readers accept either form.

#include <json.hpp>

#include "gapkit/covering.hpp"
#include "gapkit/ktuples.hpp"
#include "gapkit/normalizers.hpp"

namespace gapkit::json_io {

using nlohmann::json;

json encode_uint(std::uint64_t v);
std::uint64_t decode_uint(const json& j);

json to_json(const CoverCertificate& cert);
CoverCertificate certificate_from_json(const json& j);

json to_json(const CorridorWitness& w);
CorridorWitness witness_from_json(const json& j);

json to_json(const TuplePlan& plan);
/// Union of every set in a tuple plan document.
Tuple tuple_from_plan_json(const json& j);

/// A bare list of primes or {"primes": [...], "c": ...}.
RepulsiveSet repulsive_from_json(const json& j);

json to_json(const KindReport& report);

}  // namespace gapkit::json_io
