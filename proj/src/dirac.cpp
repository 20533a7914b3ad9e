#include "rqed/dirac.hpp"

#include <cmath>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "rqed/dirac_current.hpp"
#include "rqed/errors.hpp"

namespace rqed {

const std::array<Eigen::Matrix2cd, 3>& pauli() {
    static const std::array<Eigen::Matrix2cd, 3> s = [] {
        std::array<Eigen::Matrix2cd, 3> m;
        m[0] << 0.0, 1.0, 1.0, 0.0;
        m[1] << 0.0, -I, I, 0.0;
        m[2] << 1.0, 0.0, 0.0, -1.0;
        return m;
    }();
    return s;
}

GammaSet::GammaSet() {
    const auto& s = pauli();
    g[0].setZero();
    g[0].block<2, 2>(0, 0) = Eigen::Matrix2cd::Identity();
    g[0].block<2, 2>(2, 2) = -Eigen::Matrix2cd::Identity();
    for (int alpha = 0; alpha < 3; ++alpha) {
        g[alpha + 1].setZero();
        g[alpha + 1].block<2, 2>(0, 2) = s[alpha];
        g[alpha + 1].block<2, 2>(2, 0) = -s[alpha];
    }
}

Mat4c GammaSet::slash(double k0, const Vec3& k) const {
    Mat4c m = k0 * g[0];
    for (int alpha = 0; alpha < 3; ++alpha) m -= k[alpha] * g[alpha + 1];
    return m;
}

const GammaSet& gamma_set() {
    static const GammaSet instance;
    return instance;
}

Eigen::RowVector4cd bar(const Vec4c& u, const GammaSet& gamma) {
    return u.adjoint() * gamma.g[0];
}

SpinorSet solve_spinors(const WaveVector& k, const PhysicalConstants& pc) {
    if (!(pc.kappa > 0.0)) throw domain_error("solve_spinors: massless fermions unsupported");
    const auto& s = pauli();
    const double k0 = pc.omega(k.norm()) / pc.c;
    const double denom = k0 + pc.kappa;
    const double n = std::sqrt(denom / (2.0 * k0));

    const Eigen::Matrix2cd sk = k.x() * s[0] + k.y() * s[1] + k.z() * s[2];

    auto boosted = [&](const Eigen::Vector2cd& chi, const Eigen::Matrix2cd& lower_map) {
        Vec4c u;
        u.head<2>() = n * chi;
        u.tail<2>() = n * (lower_map * chi);
        return u;
    };
    const Eigen::Matrix2cd lower = sk / denom;
    const Eigen::Vector2cd chi1(1.0, 0.0), chi2(0.0, 1.0);

    SpinorSet set;
    set.u1 = boosted(chi1, lower);
    set.u2 = boosted(chi2, lower);

    // v^(4)(k) = C conj(u^(1)(-k)), v^(3)(k) = C conj(u^(2)(-k)).
    const Eigen::Matrix2cd lower_neg = -lower;
    const Vec4c u1_neg = boosted(chi1, lower_neg);
    const Vec4c u2_neg = boosted(chi2, lower_neg);
    const GammaSet& gamma = gamma_set();
    const Mat4c c = I * gamma.g[2] * gamma.g[0];
    set.v4 = c * u1_neg.conjugate();
    set.v3 = c * u2_neg.conjugate();
    return set;
}

double larmor_residual(double omega, double t, double hbar) {
    const auto& s = pauli();
    const Eigen::Matrix2cd h = -0.5 * hbar * omega * s[2];
    const Eigen::Matrix2cd u = (I * t / hbar * h).exp();
    const Eigen::Matrix2cd evolved = u * s[0] * u.adjoint();
    const Eigen::Matrix2cd predicted = std::cos(omega * t) * s[0] + std::sin(omega * t) * s[1];
    return (evolved - predicted).norm();
}

ScalarFermionOps scalar_fermion_ops(const SpacetimePoint& x, const WaveVector& k,
                                    const PhysicalConstants& pc) {
    const auto& s = pauli();
    const Eigen::Matrix2cd sp = 0.5 * (s[0] + I * s[1]);
    const Eigen::Matrix2cd sm = 0.5 * (s[0] - I * s[1]);
    const double k0 = pc.omega(k.norm()) / pc.c;
    const double phase = minkowski_phase(k0, k, x);
    const double nm = pc.nm(k.norm());
    return ScalarFermionOps{std::exp(-I * phase) / nm * sp, std::exp(I * phase) / nm * sm};
}

ChargeConjugation construct_charge_conjugation(const PhysicalConstants& pc) {
    const GammaSet& gamma = gamma_set();
    ChargeConjugation cc;
    cc.c = I * gamma.g[2] * gamma.g[0];

    // Accumulate the similarity constraints X psi - D X = 0 over sampled field
    // operators, vectorized as (psi^T kron I - I kron D) vec(X), and take the
    // smallest eigenvector of the normal matrix.
    const Clifford16& cl = clifford_generators();
    constexpr int d = Clifford16::dim;
    MatXc normal = MatXc::Zero(d * d, d * d);
    const MatXc id = MatXc::Identity(d, d);

    auto add_constraint = [&](const MatXc& psi, const MatXc& dmat) {
        MatXc row = MatXc::Zero(d * d, d * d);
        // vec(X psi - D X) with column-major vec: (psi^T kron I) - (I kron D).
        for (int a = 0; a < d; ++a)
            for (int b = 0; b < d; ++b) {
                if (psi(a, b) != cplx(0.0, 0.0))
                    row.block(b * d, a * d, d, d) += psi(a, b) * id;
            }
        for (int a = 0; a < d; ++a) row.block(a * d, a * d, d, d) -= dmat;
        normal += row.adjoint() * row;
    };

    std::vector<std::pair<SpacetimePoint, WaveVector>> samples = {
        {{0.0, Vec3(0.0, 0.0, 0.0)}, Vec3(0.3, -0.2, 0.5)},
        {{0.4, Vec3(0.1, 0.7, -0.3)}, Vec3(-0.6, 0.1, 0.2)},
        {{-0.2, Vec3(0.5, 0.0, 0.9)}, Vec3(0.0, 0.0, 0.8)},
    };
    for (const auto& [x, k] : samples) {
        const DiracFieldOps ops = dirac_field_ops(x, k, pc);
        for (int r = 0; r < 4; ++r) {
            MatXc d1 = MatXc::Zero(d, d);
            MatXc d2 = MatXc::Zero(d, d);
            for (int rp = 0; rp < 4; ++rp) {
                d1 -= cc.c(r, rp) * ops.psi_bar[rp];
                d2 += cc.c(r, rp) * ops.psi[rp];
            }
            add_constraint(ops.psi[r], d1);
            add_constraint(ops.psi_bar[r], d2);
        }
    }

    Eigen::SelfAdjointEigenSolver<MatXc> es(normal);
    if (es.info() != Eigen::Success)
        throw construction_error("charge conjugation: eigensolver failed");
    const double scale = es.eigenvalues()(d * d - 1);
    if (es.eigenvalues()(0) > 1e-12 * scale || es.eigenvalues()(1) < 1e-6 * scale)
        throw construction_error("charge conjugation: constraint system has no isolated solution");

    const VecXc vec = es.eigenvectors().col(0);
    MatXc x = Eigen::Map<const MatXc>(vec.data(), d, d);

    // Scale to a unitary and rotate the free phase so that X^dag = -X.
    x *= std::sqrt(static_cast<double>(d)) / x.norm();
    const MatXc xd = x.adjoint();
    cplx beta = 0.0;
    double best = 0.0;
    for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b)
            if (std::abs(x(a, b)) > best) {
                best = std::abs(x(a, b));
                beta = xd(a, b) / x(a, b);
            }
    // X^dag = beta X with |beta| = 1; alpha with alpha^2 = -conj(beta) makes
    // (alpha X)^dag = -(alpha X).
    const cplx alpha = std::sqrt(-std::conj(beta));
    x *= alpha;
    // C_c fixes the vacuum up to the phase +-i; pick +i for the leftover sign.
    if (x(0, 0).imag() < 0.0) x = -x;

    if ((x.adjoint() + x).norm() > 1e-8 ||
        (x * x.adjoint() - MatXc::Identity(d, d)).norm() > 1e-8)
        throw construction_error("charge conjugation: solution is not anti-hermitian unitary");

    cc.c16 = x;
    return cc;
}

}
