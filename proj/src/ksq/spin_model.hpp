// Copyright 2026 The ksqrng Authors
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

#pragma once

#include <array>
#include <complex>
#include <utility>

namespace ksq {

using Complex = std::complex<double>;

// Tolerance for all exactness checks on 3x3 algebra.
inline constexpr double kExactTol = 1e-12;

//---------------------------------------------------------------------------//
/*!
 * Normalized pure state of a qutrit over the energy basis (|0>, |1>, |2>).
 *
 * The spin-1 correspondence is |z,0> -> |0>, |z,+1> -> |1>, |z,-1> -> |2>.
 */
class QutritState {
  public:
    using Amplitudes = std::array<Complex, 3>;

    // Ground state |0>.
    QutritState() noexcept : amps_{Complex{1.0}, Complex{}, Complex{}} {}

    // Throws ValidationError if any component is non-finite or the norm
    // deviates from 1 by more than kExactTol.
    explicit QutritState(const Amplitudes& amps);
    QutritState(Complex a0, Complex a1, Complex a2) : QutritState(Amplitudes{a0, a1, a2}) {}

    // Computational basis vector |level>.
    static QutritState basis(int level);

    const Complex& operator[](int k) const { return amps_[k]; }
    const Amplitudes& amplitudes() const noexcept { return amps_; }
    double norm() const noexcept;

  private:
    struct Unchecked {};
    QutritState(const Amplitudes& amps, Unchecked) noexcept : amps_(amps) {}
    friend class Unitary3;

    Amplitudes amps_;
};

// Dense 3x3 complex matrix, row-major.
struct Matrix3 {
    std::array<Complex, 9> m{};

    Complex& operator()(int r, int c) { return m[3 * r + c]; }
    const Complex& operator()(int r, int c) const { return m[3 * r + c]; }

    static Matrix3 identity();
    Matrix3 adjoint() const;
    Complex determinant() const;
    std::array<Complex, 3> apply(const std::array<Complex, 3>& v) const;
    friend Matrix3 operator*(const Matrix3& a, const Matrix3& b);
};

// Largest entrywise modulus of a - b.
double max_abs_diff(const Matrix3& a, const Matrix3& b);

enum class Subspace { k01, k12 };

//---------------------------------------------------------------------------//
/*!
 * 3x3 unitary. Construction from arbitrary entries checks U^dagger U = I and
 * |det U| = 1; the gate factories below are unitary by construction.
 */
class Unitary3 {
  public:
    explicit Unitary3(const Matrix3& m);

    static Unitary3 identity();

    const Matrix3& matrix() const noexcept { return m_; }
    const Complex& operator()(int r, int c) const { return m_(r, c); }

    QutritState apply(const QutritState& s) const;
    Unitary3 adjoint() const;
    friend Unitary3 operator*(const Unitary3& a, const Unitary3& b);

  private:
    struct Unchecked {};
    Unitary3(const Matrix3& m, Unchecked) noexcept : m_(m) {}
    friend Unitary3 rotation(Subspace subspace, double theta);

    Matrix3 m_;
};

// Real rotation by theta about y within the {|i>, |i+1>} subspace:
// [[cos t/2, sin t/2], [-sin t/2, cos t/2]] embedded in the identity.
Unitary3 rotation(Subspace subspace, double theta);

QutritState apply_unitary(const Unitary3& u, const QutritState& s);

using Basis3 = std::array<QutritState, 3>;

//---------------------------------------------------------------------------//
/*!
 * Hermitian spin-1 observable with its eigen-decomposition. Eigenvalues are
 * ordered (-1, 0, +1) and eigenbasis[k] belongs to eigenvalues[k].
 */
struct SpinObservable {
    Matrix3 matrix;
    std::array<double, 3> eigenvalues;
    Basis3 eigenbasis;
};

// (Sz, Sx) in the qutrit energy basis.
std::pair<SpinObservable, SpinObservable> spin_operators();

// (|x,-1>, |x,0>, |x,+1>).
Basis3 sx_eigenbasis();

// Computational basis (|0>, |1>, |2>).
Basis3 computational_basis();

Complex inner_product(const QutritState& bra, const QutritState& ket) noexcept;

// |<psi|phi>|, clamped to [0, 1].
double overlap(const QutritState& psi, const QutritState& phi) noexcept;

// p_k = |<basis_k|s>|^2. Throws ValidationError for a non-orthonormal basis.
std::array<double, 3> born_probabilities(const QutritState& s, const Basis3& basis);

// M^dagger = R01(pi/2) * R12(pi/2); maps |x,+1> -> |0>, |x,-1> -> |1>,
// |x,0> -> |2>.
Unitary3 measurement_unitary();

} // namespace ksq
