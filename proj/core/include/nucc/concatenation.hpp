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

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nucc/catalog.hpp"
#include "nucc/decoder.hpp"
#include "nucc/stabilizer_code.hpp"

namespace nucc {

/// Outer qubits coupled by non-transversal gadgets (b1) and the rest (b2).
struct Partition {
  std::vector<std::size_t> b1;
  std::vector<std::size_t> b2;

  bool operator==(const Partition&) const = default;
};

/// b1 = union of the supports, b2 = complement. Throws on an empty union or
/// out-of-range index.
Partition partition_from_gadget(const StabilizerCode& outer,
                                std::span<const std::vector<std::size_t>> supports);
Partition partition_from_gadget(const StabilizerCode& outer, std::span<const std::size_t> support);

/// Support of diagonalizable_logical_z(outer): the qubits a single-operand
/// staircase gadget couples.
Partition staircase_partition(const StabilizerCode& outer);

/// Replacement decoders keyed by code name.
using DecoderOverrides = std::map<std::string, DecoderPtr>;

/// Two-level layout: an outer code whose qubits are either bare or encoded in
/// an inner code. Physical blocks are laid out in outer-qubit order.
class ConcatenationLayout {
 public:
  /// `assignment[q]` is the inner code of outer qubit q, or null for bare.
  ConcatenationLayout(CodePtr outer, std::vector<CodePtr> assignment,
                      const DecoderOverrides& overrides = {});

  const StabilizerCode& outer() const { return *outer_; }
  const CodePtr& outer_ptr() const { return outer_; }
  std::size_t outer_n() const { return assignment_.size(); }
  const CodePtr& inner(std::size_t q) const { return assignment_.at(q); }
  bool is_bare(std::size_t q) const { return !assignment_.at(q); }
  std::size_t offset(std::size_t q) const { return offsets_.at(q); }
  std::size_t block_size(std::size_t q) const { return is_bare(q) ? 1 : assignment_[q]->n(); }
  std::size_t total_n() const { return total_n_; }
  /// Outer qubit owning physical qubit p.
  std::size_t block_of(std::size_t p) const { return owner_.at(p); }

  bool is_uniform() const;
  bool all_bare() const;
  /// "uniform", "non-uniform" or "bare".
  std::string kind() const;
  /// Canonical descriptor, e.g. "steane[rm15,rm15,bare,bare,bare,bare,rm15]".
  std::string descriptor() const;
  std::string fingerprint() const;
  /// Encoded outer qubits (b1) and bare ones (b2).
  Partition encoded_partition() const;

  const DecoderPtr& inner_decoder(std::size_t q) const { return inner_decoders_.at(q); }
  const LookupDecoder& outer_decoder() const { return *outer_decoder_; }
  ConcatenationLayout with_decoders(const DecoderOverrides& overrides) const;

  /// Physical image of an outer-level Pauli: inner logical representatives on
  /// encoded qubits, the Pauli itself on bare ones, phase carried over.
  PauliOperator lift(const PauliOperator& outer_op) const;
  /// Physical image of a single-qubit Pauli on outer qubit q.
  PauliOperator lift_letter(std::size_t q, Letter l) const;

  /// Outer residual logical class of a physical error after decoding every
  /// inner block and then the outer code.
  Letter hierarchical_decode(const PauliOperator& error) const;
  Letter hierarchical_decode(const BitVector& x, const BitVector& z) const;
  /// Outer-level Pauli (letters only) left after inner decoding.
  PauliOperator inner_residuals(const BitVector& x, const BitVector& z) const;

 private:
  CodePtr outer_;
  std::vector<CodePtr> assignment_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> owner_;
  std::size_t total_n_ = 0;
  std::vector<DecoderPtr> inner_decoders_;
  DecoderPtr outer_decoder_;
};

enum class LayoutRule { Uniform, NonUniform, B2Encoded };

/// uniform: every outer qubit encoded in `inner`. non_uniform: b1 encoded in
/// `inner`, b2 bare. b2_encoded: b1 in `inner`, b2 in `b2_inner`.
ConcatenationLayout make_layout(CodePtr outer, LayoutRule rule, CodePtr inner,
                                const std::optional<Partition>& partition = std::nullopt,
                                CodePtr b2_inner = nullptr, const DecoderOverrides& overrides = {});
ConcatenationLayout bare_layout(CodePtr outer, const DecoderOverrides& overrides = {});

/// Accepts "steane[rm15,bare,...]", "uniform(steane,rm15)",
/// "nonuniform(steane,rm15)", "b2encoded(steane,rm15,steane)", "bare(steane)",
/// or a document with lines "layout v1", "outer <code>",
/// "assign <code|bare> ...". Non-uniform forms use staircase_partition.
ConcatenationLayout parse_layout(std::string_view text, const Catalog& catalog,
                                 const DecoderOverrides& overrides = {});
/// Document form of the layout; parse_layout(dump_layout(l)) == l.
std::string dump_layout(const ConcatenationLayout& layout);

/// Every generator of the flattened code: inner generators at their offsets,
/// then lifted outer generators.
std::vector<PauliOperator> flatten_stabilizers(const ConcatenationLayout& layout);
/// Flattened code with lifted outer logical representatives.
StabilizerCode flattened_code(const ConcatenationLayout& layout);

struct DistanceResult {
  std::size_t distance = 0;
  /// Minimum-weight flattened logical, verified against the flattened code.
  PauliOperator witness;
  /// Outer coset element it is built from.
  PauliOperator outer_logical;
  Letter logical_class = Letter::I;
  /// Per logical class (X, Y, Z) minimum weights.
  std::array<std::size_t, 3> class_minimum{};
};

/// Exact minimum weight over the flattened logical operators: scan of the
/// outer cosets with per-qubit cost equal to the inner-coset minimum.
DistanceResult concatenated_distance(const ConcatenationLayout& layout);

/// The six codes of the comparison table, by physical qubit count: 105
/// (uniform steane/rm15), 49 (non-uniform steane/rm15), 75 (uniform
/// five_prime/rm15), 47 (non-uniform five_prime/rm15), 73 and 55 (b1 in rm15,
/// b2 in the outer code).
ConcatenationLayout named_layout(std::size_t qubits, const DecoderOverrides& overrides = {});
std::vector<std::size_t> named_layout_sizes();

}  // namespace nucc
