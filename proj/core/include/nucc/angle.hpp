// Copyright 2026 The nucc Authors
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
#include <cstdint>
#include <string>
#include <string_view>

namespace nucc {

/// Exact angle num/den * pi, normalized into (-pi, pi] with den > 0 and
/// gcd(num, den) = 1. Used for every angle that reaches a file or a gate.
class PiFraction {
 public:
  constexpr PiFraction() = default;
  PiFraction(std::int64_t num, std::int64_t den);

  static PiFraction zero() { return {}; }
  static PiFraction pi() { return {1, 1}; }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double radians() const;
  bool is_zero() const { return num_ == 0; }

  PiFraction operator-() const { return {-num_, den_}; }
  PiFraction operator+(const PiFraction& o) const;
  PiFraction operator-(const PiFraction& o) const { return *this + (-o); }
  PiFraction operator*(std::int64_t m) const { return {num_ * m, den_}; }
  bool operator==(const PiFraction&) const = default;
  std::strong_ordering operator<=>(const PiFraction& o) const;

  /// "0", "pi", "-pi/2", "3*pi/4". parse() also accepts "3pi/4" and "pi*3/4".
  std::string str() const;
  static PiFraction parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace nucc
