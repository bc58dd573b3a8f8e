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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ksq/error.hpp"
#include "ksq/random.hpp"
#include "ksq/spin_model.hpp"

namespace ksq {
namespace {

constexpr double kTol = 1e-12;
const double kR2 = std::numbers::sqrt2;

void expect_state(const QutritState& s, Complex a0, Complex a1, Complex a2)
{
    EXPECT_LT(std::abs(s[0] - a0), kTol) << s[0];
    EXPECT_LT(std::abs(s[1] - a1), kTol) << s[1];
    EXPECT_LT(std::abs(s[2] - a2), kTol) << s[2];
}

// Haar-ish random unitary: Gram-Schmidt on a complex Gaussian matrix.
Unitary3 random_unitary(RandomSource& rng)
{
    std::array<std::array<Complex, 3>, 3> cols;
    for (auto& c : cols) {
        for (auto& z : c) {
            const auto [re, im] = rng.normal_pair();
            z = {re, im};
        }
    }
    for (int k = 0; k < 3; ++k) {
        for (int j = 0; j < k; ++j) {
            Complex proj = 0;
            for (int i = 0; i < 3; ++i) {
                proj += std::conj(cols[j][i]) * cols[k][i];
            }
            for (int i = 0; i < 3; ++i) {
                cols[k][i] -= proj * cols[j][i];
            }
        }
        double n = 0;
        for (auto& z : cols[k]) {
            n += std::norm(z);
        }
        for (auto& z : cols[k]) {
            z /= std::sqrt(n);
        }
    }
    Matrix3 m;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            m(i, j) = cols[j][i];
        }
    }
    return Unitary3(m);
}

QutritState random_state(RandomSource& rng)
{
    std::array<Complex, 3> a;
    double n = 0;
    for (auto& z : a) {
        const auto [re, im] = rng.normal_pair();
        z = {re, im};
        n += std::norm(z);
    }
    for (auto& z : a) {
        z /= std::sqrt(n);
    }
    return QutritState(a);
}

// Expansion coefficients of s in a basis by Cramer's rule on B c = s, with
// the basis vectors as the columns of B.
std::array<Complex, 3> solve_coefficients(const Basis3& basis, const QutritState& s)
{
    Matrix3 b;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            b(i, j) = basis[j][i];
        }
    }
    const Complex det = b.determinant();
    std::array<Complex, 3> c;
    for (int k = 0; k < 3; ++k) {
        Matrix3 bk = b;
        for (int i = 0; i < 3; ++i) {
            bk(i, k) = s[i];
        }
        c[k] = bk.determinant() / det;
    }
    return c;
}

TEST(Rotation, ZeroAngleIsIdentity)
{
    EXPECT_LT(max_abs_diff(rotation(Subspace::k01, 0).matrix(), Matrix3::identity()), kTol);
    EXPECT_LT(max_abs_diff(rotation(Subspace::k12, 0).matrix(), Matrix3::identity()), kTol);
}

TEST(Rotation, MatrixEntriesAreRealAndPlaced)
{
    const double t = 0.7;
    const auto r = rotation(Subspace::k12, t);
    EXPECT_DOUBLE_EQ(r(0, 0).real(), 1.0);
    EXPECT_DOUBLE_EQ(r(1, 1).real(), std::cos(t / 2));
    EXPECT_DOUBLE_EQ(r(1, 2).real(), std::sin(t / 2));
    EXPECT_DOUBLE_EQ(r(2, 1).real(), -std::sin(t / 2));
    for (const auto& z : r.matrix().m) {
        EXPECT_EQ(z.imag(), 0.0);
    }
}

TEST(Rotation, WorkedExamples)
{
    expect_state(apply_unitary(rotation(Subspace::k01, std::numbers::pi / 2), QutritState::basis(0)),
                 kR2 / 2, -kR2 / 2, 0);
    expect_state(apply_unitary(rotation(Subspace::k12, std::numbers::pi), QutritState::basis(1)),
                 0, 0, -1);
}

TEST(Rotation, RejectsNonFiniteAngle)
{
    EXPECT_THROW(rotation(Subspace::k01, std::nan("")), ValidationError);
}

TEST(Unitary3, ValidatesConstruction)
{
    Matrix3 m = Matrix3::identity();
    m(0, 0) = 2.0;
    EXPECT_THROW(Unitary3{m}, ValidationError);
    Matrix3 phase = Matrix3::identity();
    phase(1, 1) = std::polar(1.0, 0.3);
    EXPECT_NO_THROW(Unitary3{phase});
}

TEST(QutritState, RejectsUnnormalizedAndNonFinite)
{
    EXPECT_THROW(QutritState(1.0, 1.0, 0.0), ValidationError);
    EXPECT_THROW(QutritState(std::nan(""), 0.0, 0.0), ValidationError);
    EXPECT_THROW(QutritState::basis(3), ValidationError);
}

TEST(ApplyUnitary, IdentityAndNormPreservation)
{
    RandomSource rng(11);
    const auto s = random_state(rng);
    const auto same = apply_unitary(Unitary3::identity(), s);
    expect_state(same, s[0], s[1], s[2]);
    for (int i = 0; i < 100; ++i) {
        const auto u = random_unitary(rng);
        const auto v = random_state(rng);
        EXPECT_NEAR(apply_unitary(u, v).norm(), 1.0, kTol);
        EXPECT_LT(max_abs_diff(u.adjoint().matrix() * u.matrix(), Matrix3::identity()), kTol);
    }
}

TEST(SpinOperators, EigenRelations)
{
    const auto [sz, sx] = spin_operators();
    for (const auto* op : {&sz, &sx}) {
        EXPECT_LT(max_abs_diff(op->matrix, op->matrix.adjoint()), kTol);
        for (int k = 0; k < 3; ++k) {
            const auto& v = op->eigenbasis[k];
            const auto mv = op->matrix.apply(v.amplitudes());
            for (int i = 0; i < 3; ++i) {
                EXPECT_LT(std::abs(mv[i] - op->eigenvalues[k] * v[i]), kTol);
            }
            for (int j = 0; j < 3; ++j) {
                EXPECT_LT(std::abs(inner_product(op->eigenbasis[j], v) - (j == k ? 1.0 : 0.0)), kTol);
            }
        }
    }
    // Sz |1> = +1 |1>.
    const auto sz1 = sz.matrix.apply(QutritState::basis(1).amplitudes());
    EXPECT_EQ(sz1[1], Complex(1.0));
    // Sx |x,0> = 0.
    const auto sx0 = sx.matrix.apply(sx_eigenbasis()[1].amplitudes());
    for (const auto& z : sx0) {
        EXPECT_LT(std::abs(z), kTol);
    }
}

TEST(SxEigenbasis, ComponentsOrthogonalityCompleteness)
{
    const auto b = sx_eigenbasis();
    expect_state(b[2], kR2 / 2, 0.5, 0.5);
    expect_state(b[0], -kR2 / 2, 0.5, 0.5);
    expect_state(b[1], 0, -1 / kR2, 1 / kR2);
    EXPECT_LT(std::abs(inner_product(b[0], b[2])), kTol);
    Matrix3 sum;
    for (const auto& v : b) {
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                sum(i, j) += v[i] * std::conj(v[j]);
            }
        }
    }
    EXPECT_LT(max_abs_diff(sum, Matrix3::identity()), kTol);
}

TEST(BornProbabilities, WorkedExamples)
{
    const auto p = born_probabilities(QutritState::basis(0), sx_eigenbasis());
    EXPECT_NEAR(p[0], 0.5, kTol);
    EXPECT_NEAR(p[1], 0.0, kTol);
    EXPECT_NEAR(p[2], 0.5, kTol);
    const auto q = born_probabilities(sx_eigenbasis()[2], sx_eigenbasis());
    EXPECT_NEAR(q[2], 1.0, kTol);
    const auto r = born_probabilities(QutritState::basis(1), computational_basis());
    EXPECT_EQ(r, (std::array<double, 3>{0, 1, 0}));
}

TEST(BornProbabilities, RejectsNonOrthonormalBasis)
{
    const Basis3 bad{QutritState::basis(0), QutritState::basis(0), QutritState::basis(2)};
    EXPECT_THROW(born_probabilities(QutritState::basis(0), bad), ValidationError);
}

TEST(BornProbabilities, AgreesWithLinearSolveOracle)
{
    RandomSource rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        const auto u = random_unitary(rng);
        Basis3 basis;
        for (int k = 0; k < 3; ++k) {
            basis[k] = u.apply(QutritState::basis(k));
        }
        const auto s = random_state(rng);
        const auto p = born_probabilities(s, basis);
        const auto c = solve_coefficients(basis, s);
        double total = 0;
        for (int k = 0; k < 3; ++k) {
            EXPECT_NEAR(p[k], std::norm(c[k]), kTol);
            EXPECT_GE(p[k], 0.0);
            EXPECT_LE(p[k], 1.0);
            total += p[k];
        }
        EXPECT_NEAR(total, 1.0, kTol);
    }
}

TEST(Overlap, WorkedExamples)
{
    RandomSource rng(13);
    const auto s = random_state(rng);
    EXPECT_NEAR(overlap(s, s), 1.0, kTol);
    const auto b = sx_eigenbasis();
    EXPECT_NEAR(overlap(b[2], QutritState::basis(0)), kR2 / 2, kTol);
    EXPECT_NEAR(overlap(b[1], QutritState::basis(0)), 0.0, kTol);
}

TEST(MeasurementUnitary, MapsSxBasisOntoComputationalBasis)
{
    const auto m = measurement_unitary();
    const auto b = sx_eigenbasis();
    expect_state(m.apply(b[0]), 0, 1, 0); // |x,-1> -> |1>
    expect_state(m.apply(b[1]), 0, 0, 1); // |x,0>  -> |2>
    expect_state(m.apply(b[2]), 1, 0, 0); // |x,+1> -> |0>
    EXPECT_NEAR(std::abs(m.matrix().determinant()), 1.0, kTol);
}

TEST(MeasurementUnitary, IsTheProductOfTheTwoPulses)
{
    const auto expected = rotation(Subspace::k01, std::numbers::pi / 2).matrix()
                          * rotation(Subspace::k12, std::numbers::pi / 2).matrix();
    EXPECT_LT(max_abs_diff(measurement_unitary().matrix(), expected), kTol);
}

} // namespace
} // namespace ksq
