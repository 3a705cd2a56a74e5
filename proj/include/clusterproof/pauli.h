// Copyright 2026 The clusterproof Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CLUSTERPROOF_PAULI_H
#define CLUSTERPROOF_PAULI_H

#include <string>
#include <vector>

#include "clusterproof/bits.h"
#include "clusterproof/statevec.h"

namespace clusterproof {

/// A Pauli product i^phase X^x Z^z over n qubits (X part applied last).
///
/// Used for exact stabilizer algebra where X and Z may sit on the same
/// qubit, e.g. products of stabilizer generators and Y-carrying generators.
struct PauliString {
    BitString x;
    BitString z;
    /// Power of i, kept in 0..3.
    int phase = 0;

    PauliString() = default;
    explicit PauliString(size_t n) : x(n), z(n) {}
    PauliString(BitString x, BitString z, int phase = 0);

    size_t size() const { return x.size(); }

    /// Parses a sign-prefixed string over {I, X, Y, Z}, e.g. "-XYZ" or "+IZ".
    /// Character j acts on qubit j.
    static PauliString from_string(const std::string &text);

    /// The symbol ('I', 'X', 'Y', 'Z') on qubit q.
    char symbol(size_t q) const;
    /// Overall sign in the symbolic (X, Y, Z) form, as a power of i.
    int symbolic_phase() const;
    /// "+XYZ" style text; a phase of +-i is printed as "+i"/"-i".
    std::string str() const;

    PauliString operator*(const PauliString &other) const;
    bool operator==(const PauliString &other) const = default;

    bool commutes_with(const PauliString &other) const;
    bool is_hermitian() const { return symbolic_phase() % 2 == 0; }

    /// Replaces the symbol on qubit q via `map` (indexed by I, X, Y, Z),
    /// keeping the symbolic sign.
    PauliString relabeled(size_t q, const char map[4]) const;
};

/// Applies the operator to a state in place.
void apply_pauli(StateVector &s, const PauliString &p);

/// <s|P|s> for a Hermitian Pauli product.
double expectation(const StateVector &s, const PauliString &p);

/// Rank over GF(2) of the symplectic rows (x | z).
int symplectic_rank(const std::vector<PauliString> &paulis);

}  // namespace clusterproof

#endif
