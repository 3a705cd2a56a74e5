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

#include "clusterproof/errors.h"
#include "gtest/gtest.h"
#include "test_util.h"

using namespace clusterproof;
using namespace clusterproof::testing;

namespace {

Dense dense_of(const PauliString &p) {
    std::vector<Dense> singles;
    for (size_t q = 0; q < p.size(); q++) {
        switch (p.symbol(q)) {
            case 'X':
                singles.push_back(dense_x());
                break;
            case 'Y':
                singles.push_back(dense_y());
                break;
            case 'Z':
                singles.push_back(dense_z());
                break;
            default:
                singles.push_back(dense_identity(2));
        }
    }
    static const std::complex<double> powers[] = {1, {0, 1}, -1, {0, -1}};
    return dense_product(static_cast<int>(p.size()), singles).scaled(powers[p.symbolic_phase()]);
}

PauliString random_pauli(size_t n, Rng &rng) {
    std::string text = rng.bernoulli(0.5) ? "+" : "-";
    for (size_t q = 0; q < n; q++) {
        text += "IXYZ"[rng.below(4)];
    }
    return PauliString::from_string(text);
}

}  // namespace

TEST(Pauli, ParseAndPrint) {
    for (const char *t : {"+XYZ", "-IZI", "+IIII", "-YY"}) {
        EXPECT_EQ(PauliString::from_string(t).str(), t);
    }
    EXPECT_THROW(PauliString::from_string("+XQ"), InvalidArgument);
}

TEST(Pauli, SingleQubitProducts) {
    EXPECT_EQ((PauliString::from_string("+X") * PauliString::from_string("+Z")).str(), "-iY");
    EXPECT_EQ((PauliString::from_string("+X") * PauliString::from_string("+Y")).str(), "+iZ");
    EXPECT_EQ(PauliString::from_string("+Y") * PauliString::from_string("+Y"), PauliString::from_string("+I"));
}

TEST(Pauli, ProductsMatchDenseMatrices) {
    Rng rng(11);
    for (int rep = 0; rep < 200; rep++) {
        size_t n = 1 + rng.below(4);
        PauliString a = random_pauli(n, rng);
        PauliString b = random_pauli(n, rng);
        Dense prod = dense_of(a) * dense_of(b);
        ASSERT_LT(max_abs_diff(dense_of(a * b).a, prod.a), 1e-14) << a.str() << " " << b.str();
        Dense ab = dense_of(a) * dense_of(b);
        Dense ba = dense_of(b) * dense_of(a);
        bool commute = max_abs_diff(ab.a, ba.a) < 1e-12;
        ASSERT_EQ(a.commutes_with(b), commute);
    }
}

TEST(Pauli, ExpectationAndApplyMatchDense) {
    Rng rng(12);
    for (int rep = 0; rep < 50; rep++) {
        size_t n = 1 + rng.below(5);
        PauliString p = random_pauli(n, rng);
        StateVector s = random_state(static_cast<int>(n), rng);
        auto amps = amplitudes_of(s);
        EXPECT_NEAR(expectation(s, p), dense_expectation(dense_of(p), amps).real(), 1e-12);
        apply_pauli(s, p);
        EXPECT_LT(max_abs_diff(amplitudes_of(s), dense_apply(dense_of(p), amps)), 1e-12);
    }
}

TEST(Pauli, SymplecticRank) {
    std::vector<PauliString> ps = {PauliString::from_string("+XZI"), PauliString::from_string("+ZXZ"),
                                   PauliString::from_string("+YYZ")};
    EXPECT_EQ(symplectic_rank(ps), 2);
    ps.push_back(PauliString::from_string("+IZX"));
    EXPECT_EQ(symplectic_rank(ps), 3);
    EXPECT_EQ(symplectic_rank({}), 0);
}

TEST(Pauli, RelabelKeepsOtherQubits) {
    static const char swap_xz[4] = {'I', 'Z', 'Y', 'X'};
    PauliString p = PauliString::from_string("-XYZ");
    EXPECT_EQ(p.relabeled(0, swap_xz).str(), "-ZYZ");
    EXPECT_EQ(p.relabeled(2, swap_xz).str(), "-XYX");
}
