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

#ifndef CLUSTERPROOF_STATEVEC_H
#define CLUSTERPROOF_STATEVEC_H

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "clusterproof/rng.h"

namespace clusterproof {

using Complex = std::complex<double>;

namespace tolerance {
inline constexpr double kStateNorm = 1e-10;
inline constexpr double kHermiticity = 1e-12;
inline constexpr double kImaginary = 1e-10;
inline constexpr double kProjectionNorm = 1e-12;
}  // namespace tolerance

inline constexpr int kDefaultQubitCap = 24;

/// Simulator qubit cap. Reads CLUSTERPROOF_MAX_QUBITS, defaulting to 24.
int qubit_cap();

/// Small dense square matrix, row-major. Used for 2x2 observables and for
/// the block operators of provers that own more than one qubit.
class Matrix {
   public:
    Matrix() = default;
    explicit Matrix(size_t dim) : dim_(dim), data_(dim * dim) {}
    Matrix(size_t dim, std::vector<Complex> data);

    static Matrix identity(size_t dim);
    static Matrix pauli_x();
    static Matrix pauli_y();
    static Matrix pauli_z();
    static Matrix hadamard();
    /// cos(a) X + sin(a) Z.
    static Matrix xz_plane(double angle);
    /// Real rotation by `angle` in the X-Z plane of the Bloch sphere,
    /// i.e. exp(-i angle Y / 2).
    static Matrix bloch_xz_rotation(double angle);

    size_t dim() const { return dim_; }
    Complex &operator()(size_t r, size_t c) { return data_[r * dim_ + c]; }
    const Complex &operator()(size_t r, size_t c) const { return data_[r * dim_ + c]; }
    const std::vector<Complex> &data() const { return data_; }

    Matrix operator*(const Matrix &other) const;
    Matrix operator+(const Matrix &other) const;
    Matrix operator-(const Matrix &other) const;
    Matrix operator*(Complex scale) const;
    Matrix adjoint() const;
    /// this (x) other, with `other` on the low-order index.
    Matrix kron(const Matrix &other) const;

    double max_abs_diff(const Matrix &other) const;
    bool is_hermitian(double tol = tolerance::kHermiticity) const;
    /// Hermitian and squares to the identity.
    bool is_involution(double tol = tolerance::kHermiticity) const;
    bool is_real(double tol = tolerance::kHermiticity) const;

   private:
    size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// One of X, Z, R(theta) = cos(theta) X + sin(theta) Z, or the identity.
struct SingleQubitObservable {
    enum class Kind { PauliX, PauliZ, Rotation, Identity };
    Kind kind = Kind::Identity;
    double theta = 0;

    static SingleQubitObservable x() { return {Kind::PauliX, 0}; }
    static SingleQubitObservable z() { return {Kind::PauliZ, 0}; }
    static SingleQubitObservable rotation(double theta) { return {Kind::Rotation, theta}; }
    static SingleQubitObservable identity() { return {Kind::Identity, 0}; }

    Matrix matrix() const;
};

/// sign * (tensor product over qubits of the assigned single-qubit terms);
/// qubits without a term carry the identity.
struct ProductObservable {
    std::map<int, SingleQubitObservable> terms;
    int sign = 1;

    ProductObservable &set(int qubit, SingleQubitObservable o);
};

/// Dense amplitude vector, little-endian: qubit q is bit q of the index.
class StateVector {
   public:
    StateVector() = default;
    /// |0...0> on n qubits.
    explicit StateVector(int n);
    static StateVector from_amplitudes(std::vector<Complex> amplitudes);

    int num_qubits() const { return n_; }
    size_t size() const { return amps_.size(); }
    std::span<Complex> amplitudes() { return amps_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    Complex &operator[](size_t i) { return amps_[i]; }
    const Complex &operator[](size_t i) const { return amps_[i]; }

    double norm() const;
    void normalize();
    bool is_normalized(double tol = tolerance::kStateNorm) const;
    /// <this|other>.
    Complex inner(const StateVector &other) const;
    double distance(const StateVector &other) const;

    /// Applies a 2^k x 2^k matrix to the listed qubits; qubits[0] is the
    /// least significant bit of the matrix index.
    void apply(const Matrix &m, std::span<const int> qubits);
    void apply(const Matrix &m, int qubit);
    /// Applies m to `targets` on the branch where `control` is 1.
    void apply_controlled(const Matrix &m, int control, std::span<const int> targets);
    void apply_cz(int u, int v);
    void apply_h(int q);
    /// Applies the operator (sign included) in place.
    void apply(const ProductObservable &o);

    /// this (x) high: the qubits of `high` are appended above this state's.
    StateVector tensor(const StateVector &high) const;

   private:
    void check_qubit(int q) const;

    int n_ = 0;
    std::vector<Complex> amps_;
};

StateVector plus_state(int n);
StateVector apply_cz(StateVector s, int u, int v);

/// <s|o|s>. Throws ImaginaryResidue when |Im| >= 1e-10.
double expectation(const StateVector &s, const ProductObservable &o);
/// <s|m on qubits|s> for a Hermitian block operator.
double expectation(const StateVector &s, const Matrix &m, std::span<const int> qubits);

struct MeasurementResult {
    int outcome = 1;
    StateVector collapsed;
};

/// Projective measurement of an observable on qubit v (outcome +1 or -1).
MeasurementResult measure(const StateVector &s, const SingleQubitObservable &o, int v, Rng &rng);

/// Probability of outcome `outcome` (+-1) for an involution on a qubit block.
double outcome_probability(const StateVector &s, const Matrix &observable, std::span<const int> qubits, int outcome);
/// Projects onto the `outcome` eigenspace and renormalizes; returns the
/// probability of that branch. Throws NormUnderflow for an impossible branch.
double project(StateVector &s, const Matrix &observable, std::span<const int> qubits, int outcome);
/// Samples and applies a projective measurement in place; returns +-1.
int measure_in_place(StateVector &s, const Matrix &observable, std::span<const int> qubits, Rng &rng);

}  // namespace clusterproof

#endif
