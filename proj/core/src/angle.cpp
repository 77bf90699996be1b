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

#include "nucc/angle.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <numeric>

#include "nucc/error.hpp"

namespace nucc {

PiFraction::PiFraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ParseError("angle with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  // Reduce modulo 2 (i.e. 2*pi), then into (-1, 1].
  const std::int64_t period = 2 * den;
  num %= period;
  if (num <= -den) num += period;
  if (num > den) num -= period;
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
  if (num_ == 0) den_ = 1;
}

double PiFraction::radians() const {
  return static_cast<double>(num_) * std::numbers::pi / static_cast<double>(den_);
}

PiFraction PiFraction::operator+(const PiFraction& o) const {
  const std::int64_t l = std::lcm(den_, o.den_);
  return {num_ * (l / den_) + o.num_ * (l / o.den_), l};
}

std::strong_ordering PiFraction::operator<=>(const PiFraction& o) const {
  return num_ * o.den_ <=> o.num_ * den_;
}

std::string PiFraction::str() const {
  if (num_ == 0) return "0";
  std::string s;
  if (num_ < 0) s.push_back('-');
  const std::int64_t a = num_ < 0 ? -num_ : num_;
  if (a != 1) s += std::to_string(a) + "*";
  s += "pi";
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed angle '" + std::string(whole) +
                     "' (expected a rational multiple of pi such as pi/4)");
  }
  return v;
}

}  // namespace

PiFraction PiFraction::parse(std::string_view text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw ParseError("empty angle");
  if (t == "0") return {};
  std::int64_t sign = 1;
  std::string_view v = t;
  if (v.front() == '-' || v.front() == '+') {
    if (v.front() == '-') sign = -1;
    v.remove_prefix(1);
  }
  const auto pi_at = v.find("pi");
  if (pi_at == std::string_view::npos) {
    throw ParseError("angle '" + std::string(text) + "' must be written as a multiple of pi");
  }
  std::int64_t num = 1;
  std::int64_t den = 1;
  std::string_view before = v.substr(0, pi_at);
  std::string_view after = v.substr(pi_at + 2);
  if (!before.empty()) {
    if (before.back() == '*') before.remove_suffix(1);
    num = parse_int(before, text);
  }
  if (!after.empty()) {
    if (after.front() == '*') {
      after.remove_prefix(1);
      const auto slash = after.find('/');
      num *= parse_int(after.substr(0, slash), text);
      after = slash == std::string_view::npos ? std::string_view{} : after.substr(slash);
    }
    if (!after.empty()) {
      if (after.front() != '/') throw ParseError("malformed angle '" + std::string(text) + "'");
      den = parse_int(after.substr(1), text);
    }
  }
  return {sign * num, den};
}

}  // namespace nucc
