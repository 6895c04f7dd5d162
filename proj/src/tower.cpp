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

#include "gapkit/tower.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "gapkit/error.hpp"

namespace gapkit {

namespace {

const long double kLiftThreshold = std::exp(TowerReal::kLogMax);

}  // namespace

TowerReal::TowerReal(long double value) : height_(0), top_(value) {
  if (std::isinf(value) && value > 0) fail(ErrorKind::argument, "TowerReal from +inf");
  if (value > kLiftThreshold) {
    height_ = 1;
    top_ = std::log(value);
  }
}

TowerReal TowerReal::iterated_exp(int height, long double top) {
  if (height < 0) fail(ErrorKind::argument, "negative tower height");
  while (height > 0 && top <= kLogMax) {
    top = std::exp(top);
    --height;
  }
  TowerReal out;
  out.height_ = height;
  out.top_ = top;
  if (height == 0) return TowerReal(top);
  return out;
}

long double TowerReal::value() const noexcept {
  return height_ == 0 ? top_ : std::numeric_limits<long double>::infinity();
}

TowerReal TowerReal::log() const {
  if (height_ > 0) return iterated_exp(height_ - 1, top_);
  if (!(top_ > 0)) fail(ErrorKind::domain, "log of a non-positive value");
  return TowerReal(std::log(top_));
}

TowerReal TowerReal::exp() const { return iterated_exp(height_ + 1, top_); }

TowerReal TowerReal::scaled(long double c) const {
  if (!(c > 0)) fail(ErrorKind::argument, "tower scale factor must be positive");
  if (c == 1) return *this;
  if (height_ == 0) {
    const long double v = top_ * c;
    if (std::isfinite(v)) return TowerReal(v);
    return iterated_exp(1, std::log(top_) + std::log(c));
  }
  if (height_ == 1) return iterated_exp(1, top_ + std::log(c));
  // Above height 1 the additive log c vanishes against top.
  return *this;
}

TowerReal TowerReal::pow(long double eta) const {
  if (!(eta > 0)) fail(ErrorKind::argument, "tower exponent must be positive");
  if (eta == 1) return *this;
  if (height_ == 0) {
    const long double v = std::pow(top_, eta);
    if (std::isfinite(v)) return TowerReal(v);
  }
  return log().scaled(eta).exp();
}

std::string TowerReal::to_string() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", top_);
  if (height_ == 0) return buf;
  return "exp^" + std::to_string(height_) + "(" + buf + ")";
}

TowerReal TowerReal::parse(const std::string& text) {
  try {
    if (text.rfind("exp^", 0) == 0) {
      const auto open = text.find('(');
      const auto close = text.rfind(')');
      if (open == std::string::npos || close == std::string::npos || close < open)
        fail(ErrorKind::argument, "malformed tower literal '" + text + "'");
      const int h = std::stoi(text.substr(4, open - 4));
      return iterated_exp(h, std::stold(text.substr(open + 1, close - open - 1)));
    }
    std::size_t used = 0;
    const long double v = std::stold(text, &used);
    if (used != text.size()) fail(ErrorKind::argument, "trailing characters in '" + text + "'");
    return TowerReal(v);
  } catch (const std::logic_error&) {
    fail(ErrorKind::argument, "cannot parse real '" + text + "'");
  }
}

std::partial_ordering operator<=>(const TowerReal& a, const TowerReal& b) {
  if (a.height_ != b.height_) return a.height_ <=> b.height_;
  return a.top_ <=> b.top_;
}

long double ratio(const TowerReal& a, const TowerReal& b) {
  if (a.finite() && b.finite()) return a.top() / b.top();
  const TowerReal la = a.log();
  const TowerReal lb = b.log();
  if (la.finite() && lb.finite()) return std::exp(la.top() - lb.top());
  if (la == lb) return 1;
  return la < lb ? 0.0L : std::numeric_limits<long double>::infinity();
}

}  // namespace gapkit
