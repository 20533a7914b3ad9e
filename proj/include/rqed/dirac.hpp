#pragma once

#include <array>

#include "rqed/clifford.hpp"
#include "rqed/constants.hpp"
#include "rqed/types.hpp"

namespace rqed {

/// Pauli matrices sigma_1..3.
const std::array<Eigen::Matrix2cd, 3>& pauli();

/// Gamma matrices in the standard representation, upper indices, metric (+,-,-,-).
struct GammaSet {
    std::array<Mat4c, 4> g;  // g[0] = gamma^0, g[1..3] = gamma^alpha

    GammaSet();

    /// gamma^mu k_mu with k_mu = (k0, -k).
    Mat4c slash(double k0, const Vec3& k) const;
};

const GammaSet& gamma_set();

/// Dirac adjoint row vector u^dag gamma^0.
Eigen::RowVector4cd bar(const Vec4c& u, const GammaSet& gamma);

/// Spinor quadruple at one wave vector: u^(1), u^(2) with slash(k) u = kappa u
/// and v^(3), v^(4) with slash(k) v = -kappa v, normalized u^dag u = 1, and
/// v fixed from u through the charge-conjugation identities.
struct SpinorSet {
    Vec4c u1, u2, v3, v4;

    const Vec4c& u(int s) const { return s == 1 ? u1 : u2; }
    const Vec4c& v(int t) const { return t == 3 ? v3 : v4; }
};

/// Closed-form boosted spinors; requires kappa > 0 (massless fermions unsupported).
SpinorSet solve_spinors(const WaveVector& k, const PhysicalConstants& pc);

/// Charge conjugation: the 4x4 matrix C = i gamma^2 gamma^0 and the 16-dim
/// operator C_c with C_c^{-1} = C_c^dag = -C_c.
struct ChargeConjugation {
    Mat4c c;
    MatXc c16;
};

/// Builds C exactly and C_c by a least-squares solve of the similarity
/// constraints over sampled Dirac field operators, then verifies the result.
ChargeConjugation construct_charge_conjugation(const PhysicalConstants& pc);

/// Residual of the Larmor evolution identity
/// e^{iHt/hbar} sigma_1 e^{-iHt/hbar} = sigma_1 cos(wt) + sigma_2 sin(wt),
/// with H = -(hbar w / 2) sigma_3 and the left side evaluated through a matrix
/// exponential.
double larmor_residual(double omega, double t, double hbar = 1.0);

/// Scalar-fermion field operator parts phi^(+), phi^(-) (2x2) at (x, k).
struct ScalarFermionOps {
    Eigen::Matrix2cd plus;
    Eigen::Matrix2cd minus;
};

ScalarFermionOps scalar_fermion_ops(const SpacetimePoint& x, const WaveVector& k,
                                    const PhysicalConstants& pc);

}
