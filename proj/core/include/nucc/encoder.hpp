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

#include "nucc/circuit.hpp"
#include "nucc/stabilizer_code.hpp"

namespace nucc {

/// Unitary encoder for a CSS code with positive-sign generators and pure
/// X / pure Z logical representatives. Maps |psi> on `data_qubit` (all other
/// qubits |0>) to the encoded state; built from H and CNOT only.
struct CssEncoder {
  Circuit circuit;
  std::size_t data_qubit = 0;
};

/// Throws UnsupportedGateError for codes that do not meet the requirements.
CssEncoder css_encoder(const StabilizerCode& code);

/// invert(E) . G@data . E: applies the single-qubit gate `g` (on qubit 0) to
/// the encoded qubit by decoding, acting on the data qubit, and re-encoding.
Circuit unencode_apply_reencode(const StabilizerCode& code, const Gate& g);

}  // namespace nucc
