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
#include <memory>
#include <vector>

#include "nucc/stabilizer_code.hpp"

namespace nucc {

/// Full syndrome table of minimum-weight corrections. Ties are broken by
/// canonical_compare (weight, then X bits, then Z bits in support order).
/// Restricted to codes with n <= kMaxEnumerableQubits so that a block fits
/// in one machine word; the word-level entry points are the hot path of the
/// fault analyzer.
class LookupDecoder {
 public:
  explicit LookupDecoder(CodePtr code);

  const StabilizerCode& code() const { return *code_; }
  const CodePtr& code_ptr() const { return code_; }
  std::size_t table_size() const { return table_x_.size(); }

  PauliOperator decode(const BitVector& syndrome) const;

  std::uint64_t syndrome_word(std::uint64_t x, std::uint64_t z) const;
  /// Correction for a syndrome given as a word, as (x, z) words.
  std::uint64_t correction_x(std::uint64_t s) const { return table_x_[s]; }
  std::uint64_t correction_z(std::uint64_t s) const { return table_z_[s]; }
  /// Logical class left after correcting the block error (x, z).
  Letter residual_word(std::uint64_t x, std::uint64_t z) const;
  /// Logical class of an operator with zero syndrome.
  Letter class_word(std::uint64_t x, std::uint64_t z) const;

  /// Replaces one table entry. Intended for mutation tests only; the entry
  /// is not checked against its syndrome.
  void override_entry(std::uint64_t s, const PauliOperator& correction);

 private:
  CodePtr code_;
  std::vector<std::uint64_t> gen_x_, gen_z_;
  std::uint64_t lx_x_ = 0, lx_z_ = 0, lz_x_ = 0, lz_z_ = 0;
  std::vector<std::uint64_t> table_x_, table_z_;
};

using DecoderPtr = std::shared_ptr<const LookupDecoder>;

DecoderPtr build_decoder(CodePtr code);

/// Process-wide cache keyed by code identity (name + generators).
DecoderPtr cached_decoder(const CodePtr& code);

/// Classifies correction * error: I for a stabilizer, otherwise the logical
/// class. Throws InternalError if the product has a nonzero syndrome.
Letter residual_logical_action(const StabilizerCode& code, const PauliOperator& error,
                               const LookupDecoder& decoder);

}  // namespace nucc
