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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nucc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of mismatched qubit count (or syndrome length).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A gate kind the requested operation cannot handle.
class UnsupportedGateError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive enumeration would exceed a hard size limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input (Pauli strings, catalogs, circuits, layouts).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Gadget construction refused; the message carries the diagnosis.
class SynthesisError : public Error {
 public:
  using Error::Error;
};

/// A construction invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// A search was refused because its estimated size exceeds the budget.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::uint64_t estimate)
      : Error(what), estimate_(estimate) {}
  std::uint64_t estimate() const { return estimate_; }

 private:
  std::uint64_t estimate_;
};

}  // namespace nucc
