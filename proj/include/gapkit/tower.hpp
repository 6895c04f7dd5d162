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

#include <compare>
#include <string>

namespace gapkit {

/// A positive real stored as exp^height(top): exp applied `height` times to
/// `top`. Height 0 is an ordinary long double. Anything above e^kLogMax is
/// lifted one level, so heights compare before tops.
///
/// Needed because domain starts such as exp^4(1) (where log_4 T = 1) are far
/// outside long double range while the normalizer values there are modest.
class TowerReal {
 public:
  static constexpr long double kLogMax = 11355.0L;

  TowerReal() = default;
  TowerReal(long double value);  // NOLINT(google-explicit-constructor)

  /// exp^height(top), canonicalized.
  static TowerReal iterated_exp(int height, long double top);

  int height() const noexcept { return height_; }
  long double top() const noexcept { return top_; }
  bool finite() const noexcept { return height_ == 0; }

  /// The plain value, or +inf when height > 0.
  long double value() const noexcept;

  TowerReal log() const;
  TowerReal exp() const;
  /// c * this for c > 0.
  TowerReal scaled(long double c) const;
  /// this^eta for eta > 0; exact identity at eta == 1.
  TowerReal pow(long double eta) const;

  std::string to_string() const;
  static TowerReal parse(const std::string& text);

  friend std::partial_ordering operator<=>(const TowerReal& a, const TowerReal& b);
  friend bool operator==(const TowerReal& a, const TowerReal& b) = default;

 private:
  int height_ = 0;
  long double top_ = 0;
};

/// a / b for positive a, b, saturating to 0 or +inf when the quotient leaves
/// long double range.
long double ratio(const TowerReal& a, const TowerReal& b);

}  // namespace gapkit
