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

#include "clusterproof/pauli.h"

#include <bit>

#include "clusterproof/errors.h"

namespace clusterproof {

namespace {

int count_y(const PauliString &p) { return static_cast<int>((p.x & p.z).popcount()); }

Complex i_power(int k) {
    switch (((k % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace

PauliString::PauliString(BitString x_bits, BitString z_bits, int phase_value)
    : x(std::move(x_bits)), z(std::move(z_bits)), phase(((phase_value % 4) + 4) % 4) {
    if (x.size() != z.size()) {
        throw InvalidArgument("Pauli string X and Z parts differ in length");
    }
}

PauliString PauliString::from_string(const std::string &text) {
    size_t start = 0;
    int sign_phase = 0;
    if (!text.empty() && (text[0] == '+' || text[0] == '-')) {
        sign_phase = text[0] == '-' ? 2 : 0;
        start = 1;
    }
    PauliString p(text.size() - start);
    for (size_t k = start; k < text.size(); k++) {
        size_t q = k - start;
        switch (text[k]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.x.set(q);
                break;
            case 'Z':
                p.z.set(q);
                break;
            case 'Y':
                p.x.set(q);
                p.z.set(q);
                break;
            default:
                throw InvalidArgument("bad Pauli character in '" + text + "'");
        }
    }
    p.phase = (sign_phase + count_y(p)) % 4;
    return p;
}

char PauliString::symbol(size_t q) const {
    bool a = x.get(q);
    bool b = z.get(q);
    return a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
}

int PauliString::symbolic_phase() const { return (phase + 3 * count_y(*this)) % 4; }

std::string PauliString::str() const {
    static const char *prefixes[4] = {"+", "+i", "-", "-i"};
    std::string out = prefixes[symbolic_phase()];
    for (size_t q = 0; q < size(); q++) {
        out.push_back(symbol(q));
    }
    return out;
}

PauliString PauliString::operator*(const PauliString &other) const {
    // X^a Z^b X^c Z^d = (-1)^(b.c) X^(a+c) Z^(b+d).
    int swaps = dot(z, other.x, DotMode::Parity);
    return PauliString(x ^ other.x, z ^ other.z, phase + other.phase + 2 * swaps);
}

bool PauliString::commutes_with(const PauliString &other) const {
    return (dot(x, other.z, DotMode::Parity) ^ dot(z, other.x, DotMode::Parity)) == 0;
}

PauliString PauliString::relabeled(size_t q, const char map[4]) const {
    auto index_of = [](char c) {
        switch (c) {
            case 'X':
                return 1;
            case 'Y':
                return 2;
            case 'Z':
                return 3;
            default:
                return 0;
        }
    };
    int sym = symbolic_phase();
    PauliString out = *this;
    char to = map[index_of(symbol(q))];
    out.x.set(q, to == 'X' || to == 'Y');
    out.z.set(q, to == 'Z' || to == 'Y');
    out.phase = (sym + count_y(out)) % 4;
    return out;
}

void apply_pauli(StateVector &s, const PauliString &p) {
    if (p.size() != static_cast<size_t>(s.num_qubits())) {
        throw InvalidArgument("Pauli string length does not match register");
    }
    uint64_t xm = p.x.to_mask();
    uint64_t zm = p.z.to_mask();
    auto amps = s.amplitudes();
    for (size_t i = 0; i < amps.size(); i++) {
        if (std::popcount(i & zm) & 1) {
            amps[i] = -amps[i];
        }
    }
    if (xm) {
        for (size_t i = 0; i < amps.size(); i++) {
            size_t j = i ^ xm;
            if (i < j) {
                std::swap(amps[i], amps[j]);
            }
        }
    }
    if (p.phase) {
        Complex f = i_power(p.phase);
        for (auto &a : amps) {
            a *= f;
        }
    }
}

double expectation(const StateVector &s, const PauliString &p) {
    if (!p.is_hermitian()) {
        throw InvalidArgument("expectation of a non-Hermitian Pauli product");
    }
    StateVector applied = s;
    apply_pauli(applied, p);
    Complex v = s.inner(applied);
    if (std::abs(v.imag()) >= tolerance::kImaginary) {
        throw ImaginaryResidue("Pauli expectation has imaginary part");
    }
    return v.real();
}

int symplectic_rank(const std::vector<PauliString> &paulis) {
    if (paulis.empty()) {
        return 0;
    }
    size_t n = paulis[0].size();
    std::vector<BitString> rows;
    for (const auto &p : paulis) {
        if (p.size() != n) {
            throw InvalidArgument("symplectic_rank: mixed lengths");
        }
        BitString r(2 * n);
        for (int i : p.x.indices()) {
            r.set(static_cast<size_t>(i));
        }
        for (int i : p.z.indices()) {
            r.set(n + static_cast<size_t>(i));
        }
        rows.push_back(r);
    }
    int rank = 0;
    for (size_t col = 0; col < 2 * n && rank < static_cast<int>(rows.size()); col++) {
        size_t pivot = rows.size();
        for (size_t r = static_cast<size_t>(rank); r < rows.size(); r++) {
            if (rows[r].get(col)) {
                pivot = r;
                break;
            }
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[pivot], rows[static_cast<size_t>(rank)]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != static_cast<size_t>(rank) && rows[r].get(col)) {
                rows[r] ^= rows[static_cast<size_t>(rank)];
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace clusterproof
