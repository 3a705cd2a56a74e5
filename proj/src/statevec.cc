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

#include "clusterproof/statevec.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

#include "clusterproof/errors.h"

namespace clusterproof {

int qubit_cap() {
    if (const char *env = std::getenv("CLUSTERPROOF_MAX_QUBITS")) {
        int v = std::atoi(env);
        if (v > 0 && v <= 34) {
            return v;
        }
    }
    return kDefaultQubitCap;
}

static void check_cap(int n) {
    if (n < 0) {
        throw InvalidArgument("negative qubit count");
    }
    if (n > qubit_cap()) {
        throw CapacityExceeded("register of " + std::to_string(n) + " qubits exceeds cap " + std::to_string(qubit_cap()));
    }
}

// ---- Matrix ----

Matrix::Matrix(size_t dim, std::vector<Complex> data) : dim_(dim), data_(std::move(data)) {
    if (data_.size() != dim * dim) {
        throw InvalidArgument("matrix data has wrong size");
    }
}

Matrix Matrix::identity(size_t dim) {
    Matrix m(dim);
    for (size_t i = 0; i < dim; i++) {
        m(i, i) = 1;
    }
    return m;
}

Matrix Matrix::pauli_x() { return Matrix(2, {0, 1, 1, 0}); }
Matrix Matrix::pauli_y() { return Matrix(2, {0, Complex(0, -1), Complex(0, 1), 0}); }
Matrix Matrix::pauli_z() { return Matrix(2, {1, 0, 0, -1}); }

Matrix Matrix::hadamard() {
    double h = 1 / std::sqrt(2.0);
    return Matrix(2, {h, h, h, -h});
}

Matrix Matrix::xz_plane(double angle) {
    double c = std::cos(angle);
    double s = std::sin(angle);
    return Matrix(2, {s, c, c, -s});
}

Matrix Matrix::bloch_xz_rotation(double angle) {
    double c = std::cos(angle / 2);
    double s = std::sin(angle / 2);
    return Matrix(2, {c, -s, s, c});
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    Matrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t k = 0; k < dim_; k++) {
            Complex a = (*this)(i, k);
            if (a == Complex(0)) {
                continue;
            }
            for (size_t j = 0; j < dim_; j++) {
                out(i, j) += a * other(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    Matrix out = *this;
    for (size_t i = 0; i < data_.size(); i++) {
        out.data_[i] += other.data_[i];
    }
    return out;
}

Matrix Matrix::operator-(const Matrix &other) const { return *this + other * Complex(-1); }

Matrix Matrix::operator*(Complex scale) const {
    Matrix out = *this;
    for (auto &v : out.data_) {
        v *= scale;
    }
    return out;
}

Matrix Matrix::adjoint() const {
    Matrix out(dim_);
    for (size_t i = 0; i < dim_; i++) {
        for (size_t j = 0; j < dim_; j++) {
            out(j, i) = std::conj((*this)(i, j));
        }
    }
    return out;
}

Matrix Matrix::kron(const Matrix &other) const {
    size_t d = dim_ * other.dim_;
    Matrix out(d);
    for (size_t a = 0; a < dim_; a++) {
        for (size_t b = 0; b < dim_; b++) {
            for (size_t c = 0; c < other.dim_; c++) {
                for (size_t e = 0; e < other.dim_; e++) {
                    out(a * other.dim_ + c, b * other.dim_ + e) = (*this)(a, b) * other(c, e);
                }
            }
        }
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (dim_ != other.dim_) {
        throw InvalidArgument("matrix dimension mismatch");
    }
    double best = 0;
    for (size_t i = 0; i < data_.size(); i++) {
        best = std::max(best, std::abs(data_[i] - other.data_[i]));
    }
    return best;
}

bool Matrix::is_hermitian(double tol) const { return max_abs_diff(adjoint()) <= tol; }

bool Matrix::is_involution(double tol) const {
    return is_hermitian(tol) && ((*this) * (*this)).max_abs_diff(identity(dim_)) <= tol;
}

bool Matrix::is_real(double tol) const {
    return std::all_of(data_.begin(), data_.end(), [tol](Complex v) { return std::abs(v.imag()) <= tol; });
}

// ---- observables ----

Matrix SingleQubitObservable::matrix() const {
    switch (kind) {
        case Kind::PauliX:
            return Matrix::pauli_x();
        case Kind::PauliZ:
            return Matrix::pauli_z();
        case Kind::Rotation:
            return Matrix::xz_plane(theta);
        case Kind::Identity:
            break;
    }
    return Matrix::identity(2);
}

ProductObservable &ProductObservable::set(int qubit, SingleQubitObservable o) {
    if (terms.count(qubit)) {
        throw InvalidArgument("product observable already has a term on qubit " + std::to_string(qubit));
    }
    terms[qubit] = o;
    return *this;
}

// ---- StateVector ----

StateVector::StateVector(int n) : n_(n) {
    check_cap(n);
    amps_.assign(size_t{1} << n, Complex(0));
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes) {
    size_t len = amplitudes.size();
    if (len == 0 || (len & (len - 1)) != 0) {
        throw InvalidArgument("amplitude count must be a power of two");
    }
    int n = 0;
    while ((size_t{1} << n) < len) {
        n++;
    }
    check_cap(n);
    StateVector s;
    s.n_ = n;
    s.amps_ = std::move(amplitudes);
    return s;
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::normalize() {
    double nrm = norm();
    if (nrm < tolerance::kProjectionNorm) {
        throw NormUnderflow("cannot normalize a zero state");
    }
    for (auto &a : amps_) {
        a /= nrm;
    }
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1) <= tol; }

Complex StateVector::inner(const StateVector &other) const {
    if (other.amps_.size() != amps_.size()) {
        throw InvalidArgument("inner product of states with different sizes");
    }
    Complex total = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        total += std::conj(amps_[i]) * other.amps_[i];
    }
    return total;
}

double StateVector::distance(const StateVector &other) const {
    if (other.amps_.size() != amps_.size()) {
        throw InvalidArgument("distance between states with different sizes");
    }
    double total = 0;
    for (size_t i = 0; i < amps_.size(); i++) {
        total += std::norm(amps_[i] - other.amps_[i]);
    }
    return std::sqrt(total);
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= n_) {
        throw InvalidArgument("qubit " + std::to_string(q) + " out of range for " + std::to_string(n_) + " qubits");
    }
}

namespace {

// Offsets of the 2^k local basis states, and the mask of target bits.
struct Stencil {
    std::vector<size_t> offsets;
    size_t mask = 0;
};

Stencil make_stencil(std::span<const int> qubits) {
    Stencil st;
    size_t k = qubits.size();
    st.offsets.assign(size_t{1} << k, 0);
    for (size_t local = 0; local < st.offsets.size(); local++) {
        size_t off = 0;
        for (size_t b = 0; b < k; b++) {
            if ((local >> b) & 1) {
                off |= size_t{1} << qubits[b];
            }
        }
        st.offsets[local] = off;
    }
    for (int q : qubits) {
        st.mask |= size_t{1} << q;
    }
    return st;
}

}  // namespace

void StateVector::apply(const Matrix &m, std::span<const int> qubits) {
    for (size_t i = 0; i < qubits.size(); i++) {
        check_qubit(qubits[i]);
        for (size_t j = 0; j < i; j++) {
            if (qubits[i] == qubits[j]) {
                throw InvalidArgument("repeated target qubit");
            }
        }
    }
    if (m.dim() != (size_t{1} << qubits.size())) {
        throw InvalidArgument("matrix dimension does not match target count");
    }
    if (qubits.size() == 1) {
        size_t stride = size_t{1} << qubits[0];
        Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (size_t base = 0; base < amps_.size(); base += 2 * stride) {
            for (size_t i = base; i < base + stride; i++) {
                Complex a0 = amps_[i];
                Complex a1 = amps_[i + stride];
                amps_[i] = m00 * a0 + m01 * a1;
                amps_[i + stride] = m10 * a0 + m11 * a1;
            }
        }
        return;
    }
    if (qubits.size() == 2) {
        size_t b0 = size_t{1} << qubits[0];
        size_t b1 = size_t{1} << qubits[1];
        size_t mask = b0 | b1;
        Complex c[4][4];
        for (size_t r = 0; r < 4; r++) {
            for (size_t k = 0; k < 4; k++) {
                c[r][k] = m(r, k);
            }
        }
        for (size_t i = 0; i < amps_.size(); i++) {
            if (i & mask) {
                continue;
            }
            Complex a0 = amps_[i], a1 = amps_[i | b0], a2 = amps_[i | b1], a3 = amps_[i | mask];
            amps_[i] = c[0][0] * a0 + c[0][1] * a1 + c[0][2] * a2 + c[0][3] * a3;
            amps_[i | b0] = c[1][0] * a0 + c[1][1] * a1 + c[1][2] * a2 + c[1][3] * a3;
            amps_[i | b1] = c[2][0] * a0 + c[2][1] * a1 + c[2][2] * a2 + c[2][3] * a3;
            amps_[i | mask] = c[3][0] * a0 + c[3][1] * a1 + c[3][2] * a2 + c[3][3] * a3;
        }
        return;
    }
    Stencil st = make_stencil(qubits);
    size_t d = st.offsets.size();
    std::vector<Complex> in(d), out(d);
    for (size_t i = 0; i < amps_.size(); i++) {
        if (i & st.mask) {
            continue;
        }
        for (size_t a = 0; a < d; a++) {
            in[a] = amps_[i | st.offsets[a]];
        }
        for (size_t r = 0; r < d; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < d; c++) {
                acc += m(r, c) * in[c];
            }
            out[r] = acc;
        }
        for (size_t a = 0; a < d; a++) {
            amps_[i | st.offsets[a]] = out[a];
        }
    }
}

void StateVector::apply(const Matrix &m, int qubit) {
    int q[1] = {qubit};
    apply(m, std::span<const int>(q, 1));
}

void StateVector::apply_controlled(const Matrix &m, int control, std::span<const int> targets) {
    check_qubit(control);
    for (int t : targets) {
        check_qubit(t);
        if (t == control) {
            throw InvalidArgument("control qubit is also a target");
        }
    }
    if (m.dim() != (size_t{1} << targets.size())) {
        throw InvalidArgument("matrix dimension does not match target count");
    }
    size_t cbit = size_t{1} << control;
    if (targets.size() == 1) {
        size_t tbit = size_t{1} << targets[0];
        Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
        for (size_t i = 0; i < amps_.size(); i++) {
            if ((i & tbit) || !(i & cbit)) {
                continue;
            }
            Complex a0 = amps_[i];
            Complex a1 = amps_[i | tbit];
            amps_[i] = m00 * a0 + m01 * a1;
            amps_[i | tbit] = m10 * a0 + m11 * a1;
        }
        return;
    }
    Stencil st = make_stencil(targets);
    size_t d = st.offsets.size();
    std::vector<Complex> in(d);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & st.mask) || !(i & cbit)) {
            continue;
        }
        for (size_t a = 0; a < d; a++) {
            in[a] = amps_[i | st.offsets[a]];
        }
        for (size_t r = 0; r < d; r++) {
            Complex acc = 0;
            for (size_t c = 0; c < d; c++) {
                acc += m(r, c) * in[c];
            }
            amps_[i | st.offsets[r]] = acc;
        }
    }
}

void StateVector::apply_cz(int u, int v) {
    check_qubit(u);
    check_qubit(v);
    if (u == v) {
        throw InvalidArgument("CZ needs two distinct qubits");
    }
    size_t both = (size_t{1} << u) | (size_t{1} << v);
    for (size_t i = 0; i < amps_.size(); i++) {
        if ((i & both) == both) {
            amps_[i] = -amps_[i];
        }
    }
}

void StateVector::apply_h(int q) { apply(Matrix::hadamard(), q); }

void StateVector::apply(const ProductObservable &o) {
    for (const auto &[q, term] : o.terms) {
        check_qubit(q);
        switch (term.kind) {
            case SingleQubitObservable::Kind::Identity:
                break;
            case SingleQubitObservable::Kind::PauliZ: {
                size_t bit = size_t{1} << q;
                for (size_t i = 0; i < amps_.size(); i++) {
                    if (i & bit) {
                        amps_[i] = -amps_[i];
                    }
                }
                break;
            }
            case SingleQubitObservable::Kind::PauliX: {
                size_t bit = size_t{1} << q;
                for (size_t i = 0; i < amps_.size(); i++) {
                    if (!(i & bit)) {
                        std::swap(amps_[i], amps_[i | bit]);
                    }
                }
                break;
            }
            case SingleQubitObservable::Kind::Rotation:
                apply(term.matrix(), q);
                break;
        }
    }
    if (o.sign < 0) {
        for (auto &a : amps_) {
            a = -a;
        }
    }
}

StateVector StateVector::tensor(const StateVector &high) const {
    check_cap(n_ + high.n_);
    StateVector out;
    out.n_ = n_ + high.n_;
    out.amps_.resize(amps_.size() * high.amps_.size());
    for (size_t h = 0; h < high.amps_.size(); h++) {
        for (size_t l = 0; l < amps_.size(); l++) {
            out.amps_[h * amps_.size() + l] = high.amps_[h] * amps_[l];
        }
    }
    return out;
}

StateVector plus_state(int n) {
    if (n < 1) {
        throw InvalidArgument("plus_state needs at least one qubit");
    }
    StateVector s(n);
    double a = std::pow(2.0, -0.5 * n);
    for (auto &amp : s.amplitudes()) {
        amp = a;
    }
    return s;
}

StateVector apply_cz(StateVector s, int u, int v) {
    s.apply_cz(u, v);
    return s;
}

static double real_or_throw(Complex value) {
    if (std::abs(value.imag()) >= tolerance::kImaginary) {
        throw ImaginaryResidue("expectation has imaginary part " + std::to_string(value.imag()));
    }
    return value.real();
}

double expectation(const StateVector &s, const ProductObservable &o) {
    StateVector applied = s;
    applied.apply(o);
    return real_or_throw(s.inner(applied));
}

double expectation(const StateVector &s, const Matrix &m, std::span<const int> qubits) {
    StateVector applied = s;
    applied.apply(m, qubits);
    return real_or_throw(s.inner(applied));
}

static Matrix eigenprojector(const Matrix &observable, int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw InvalidArgument("measurement outcome must be +1 or -1");
    }
    Matrix id = Matrix::identity(observable.dim());
    return (id + observable * Complex(outcome)) * Complex(0.5);
}

double outcome_probability(const StateVector &s, const Matrix &observable, std::span<const int> qubits, int outcome) {
    double e = expectation(s, observable, qubits);
    return std::clamp(0.5 * (1 + outcome * e), 0.0, 1.0);
}

double project(StateVector &s, const Matrix &observable, std::span<const int> qubits, int outcome) {
    s.apply(eigenprojector(observable, outcome), qubits);
    double nrm = s.norm();
    if (nrm < tolerance::kProjectionNorm) {
        throw NormUnderflow("projection onto an impossible measurement branch");
    }
    for (auto &a : s.amplitudes()) {
        a /= nrm;
    }
    return nrm * nrm;
}

int measure_in_place(StateVector &s, const Matrix &observable, std::span<const int> qubits, Rng &rng) {
    double p_plus = outcome_probability(s, observable, qubits, +1);
    int outcome = rng.uniform() < p_plus ? +1 : -1;
    project(s, observable, qubits, outcome);
    return outcome;
}

MeasurementResult measure(const StateVector &s, const SingleQubitObservable &o, int v, Rng &rng) {
    if (o.kind == SingleQubitObservable::Kind::Identity) {
        throw InvalidArgument("cannot measure the identity");
    }
    MeasurementResult result;
    result.collapsed = s;
    int q[1] = {v};
    result.outcome = measure_in_place(result.collapsed, o.matrix(), std::span<const int>(q, 1), rng);
    return result;
}

}  // namespace clusterproof
