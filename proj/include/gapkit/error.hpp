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

#include <stdexcept>
#include <string>

namespace gapkit {

enum class ErrorKind {
  argument,      // malformed or out-of-contract input
  domain,        // argument below a normalizer / parameter domain
  out_of_range,  // query beyond a store's sieve limit
  resource,      // memory budget exceeded
  capacity,      // not enough primes to finish a construction
  integrity,     // certificate or witness failed re-verification
  admissibility,
  degenerate,    // empty residue set or empty interval
  placement,
  partition,
  composition,
  catalog,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + " error: " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::argument: return "argument";
    case ErrorKind::domain: return "domain";
    case ErrorKind::out_of_range: return "out-of-range";
    case ErrorKind::resource: return "resource";
    case ErrorKind::capacity: return "capacity";
    case ErrorKind::integrity: return "integrity";
    case ErrorKind::admissibility: return "admissibility";
    case ErrorKind::degenerate: return "degenerate";
    case ErrorKind::placement: return "placement";
    case ErrorKind::partition: return "partition";
    case ErrorKind::composition: return "composition";
    case ErrorKind::catalog: return "catalog";
  }
  return "unknown";
}

}  // namespace gapkit
