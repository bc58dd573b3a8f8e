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

#include "ksq/spin_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ksq/error.hpp"

namespace ksq {

QutritState::QutritState(const Amplitudes& amps) : amps_(amps)
{
    for (const auto& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("qutrit amplitude is not finite");
        }
    }
    const double n = norm();
    if (std::abs(n * n - 1.0) > kExactTol) {
        std::ostringstream os;
        os.precision(17);
        os << "qutrit state not normalized: squared norm " << n * n;
        throw ValidationError(os.str());
    }
}

QutritState QutritState::basis(int level)
{
    if (level < 0 || level > 2) {
        throw ValidationError("qutrit level must be 0, 1 or 2");
    }
    Amplitudes a{};
    a[level] = 1.0;
    return QutritState(a, Unchecked{});
}

double QutritState::norm() const noexcept
{
    return std::sqrt(std::norm(amps_[0]) + std::norm(amps_[1]) + std::norm(amps_[2]));
}

Matrix3 Matrix3::identity()
{
    Matrix3 id;
    id(0, 0) = id(1, 1) = id(2, 2) = 1.0;
    return id;
}

Matrix3 Matrix3::adjoint() const
{
    Matrix3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = std::conj((*this)(j, i));
        }
    }
    return r;
}

Complex Matrix3::determinant() const
{
    const Matrix3& a = *this;
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1))
           - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
           + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

std::array<Complex, 3> Matrix3::apply(const std::array<Complex, 3>& v) const
{
    std::array<Complex, 3> r{};
    for (int i = 0; i < 3; ++i) {
        r[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
    }
    return r;
}

Matrix3 operator*(const Matrix3& a, const Matrix3& b)
{
    Matrix3 r;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            r(i, j) = a(i, 0) * b(0, j) + a(i, 1) * b(1, j) + a(i, 2) * b(2, j);
        }
    }
    return r;
}

double max_abs_diff(const Matrix3& a, const Matrix3& b)
{
    double worst = 0.0;
    for (std::size_t k = 0; k < 9; ++k) {
        worst = std::max(worst, std::abs(a.m[k] - b.m[k]));
    }
    return worst;
}

Unitary3::Unitary3(const Matrix3& m) : m_(m)
{
    for (const auto& z : m_.m) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw ValidationError("unitary entry is not finite");
        }
    }
    if (max_abs_diff(m_.adjoint() * m_, Matrix3::identity()) > kExactTol) {
        throw ValidationError("matrix is not unitary");
    }
    if (std::abs(std::abs(m_.determinant()) - 1.0) > kExactTol) {
        throw ValidationError("unitary determinant modulus differs from 1");
    }
}

Unitary3 Unitary3::identity()
{
    return Unitary3(Matrix3::identity(), Unchecked{});
}

QutritState Unitary3::apply(const QutritState& s) const
{
    return QutritState(m_.apply(s.amplitudes()), QutritState::Unchecked{});
}

Unitary3 Unitary3::adjoint() const
{
    return Unitary3(m_.adjoint(), Unchecked{});
}

Unitary3 operator*(const Unitary3& a, const Unitary3& b)
{
    return Unitary3(a.m_ * b.m_, Unitary3::Unchecked{});
}

Unitary3 rotation(Subspace subspace, double theta)
{
    if (!std::isfinite(theta)) {
        throw ValidationError("rotation angle is not finite");
    }
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    const int lo = subspace == Subspace::k01 ? 0 : 1;
    Matrix3 m = Matrix3::identity();
    m(lo, lo) = c;
    m(lo, lo + 1) = s;
    m(lo + 1, lo) = -s;
    m(lo + 1, lo + 1) = c;
    return Unitary3(m, Unitary3::Unchecked{});
}

QutritState apply_unitary(const Unitary3& u, const QutritState& s)
{
    return u.apply(s);
}

Basis3 sx_eigenbasis()
{
    const double r2 = std::numbers::sqrt2;
    return {QutritState(-r2 / 2, 0.5, 0.5),
            QutritState(0.0, -1 / r2, 1 / r2),
            QutritState(r2 / 2, 0.5, 0.5)};
}

Basis3 computational_basis()
{
    return {QutritState::basis(0), QutritState::basis(1), QutritState::basis(2)};
}

std::pair<SpinObservable, SpinObservable> spin_operators()
{
    SpinObservable sz;
    sz.matrix(1, 1) = 1.0;
    sz.matrix(2, 2) = -1.0;
    sz.eigenvalues = {-1.0, 0.0, 1.0};
    sz.eigenbasis = {QutritState::basis(2), QutritState::basis(0), QutritState::basis(1)};

    SpinObservable sx;
    const double h = 1 / std::numbers::sqrt2;
    sx.matrix(0, 1) = sx.matrix(0, 2) = h;
    sx.matrix(1, 0) = sx.matrix(2, 0) = h;
    sx.eigenvalues = {-1.0, 0.0, 1.0};
    sx.eigenbasis = sx_eigenbasis();
    return {sz, sx};
}

Complex inner_product(const QutritState& bra, const QutritState& ket) noexcept
{
    return std::conj(bra[0]) * ket[0] + std::conj(bra[1]) * ket[1] + std::conj(bra[2]) * ket[2];
}

double overlap(const QutritState& psi, const QutritState& phi) noexcept
{
    return std::min(1.0, std::abs(inner_product(psi, phi)));
}

std::array<double, 3> born_probabilities(const QutritState& s, const Basis3& basis)
{
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            const Complex g = inner_product(basis[i], basis[j]);
            if (std::abs(g - (i == j ? 1.0 : 0.0)) > kExactTol) {
                throw ValidationError("measurement basis is not orthonormal");
            }
        }
    }
    std::array<double, 3> p{};
    for (int k = 0; k < 3; ++k) {
        p[k] = std::norm(inner_product(basis[k], s));
    }
    return p;
}

Unitary3 measurement_unitary()
{
    return rotation(Subspace::k01, std::numbers::pi / 2)
           * rotation(Subspace::k12, std::numbers::pi / 2);
}

} // namespace ksq
