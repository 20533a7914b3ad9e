#include "rqed/dirac_current.hpp"

#include <cmath>
#include <numbers>

#include "rqed/errors.hpp"

namespace rqed {

namespace {

double inv_sqrt_2pi3() { return 1.0 / std::sqrt(8.0 * std::pow(std::numbers::pi, 3)); }

}  // namespace

DiracFieldOps dirac_field_ops(const SpacetimePoint& x, const WaveVector& k,
                              const PhysicalConstants& pc) {
    const Clifford16& cl = clifford_generators();
    const GammaSet& gamma = gamma_set();
    const SpinorSet sp = solve_spinors(k, pc);
    const double k0 = pc.omega(k.norm()) / pc.c;
    const cplx em = std::exp(-I * minkowski_phase(k0, k, x));
    const cplx ep = std::exp(I * minkowski_phase(k0, k, x));
    const double c0 = inv_sqrt_2pi3();

    const Eigen::RowVector4cd u1b = bar(sp.u1, gamma), u2b = bar(sp.u2, gamma);
    const Eigen::RowVector4cd v3b = bar(sp.v3, gamma), v4b = bar(sp.v4, gamma);

    DiracFieldOps ops;
    for (int r = 0; r < 4; ++r) {
        ops.psi[r] = c0 * (sp.u1(r) * em * cl.sigma_plus[0] + sp.u2(r) * em * cl.sigma_plus[1] +
                           sp.v3(r) * ep * cl.sigma_minus[2] + sp.v4(r) * ep * cl.sigma_minus[3]);
        ops.psi_bar[r] =
            c0 * (u1b(r) * ep * cl.sigma_minus[0] + u2b(r) * ep * cl.sigma_minus[1] +
                  v3b(r) * em * cl.sigma_plus[2] + v4b(r) * em * cl.sigma_plus[3]);
    }
    return ops;
}

std::array<MatXc, 4> dirac_field_dmu(const SpacetimePoint& x, const WaveVector& k, int mu,
                                     const PhysicalConstants& pc) {
    const Clifford16& cl = clifford_generators();
    const SpinorSet sp = solve_spinors(k, pc);
    const double k0 = pc.omega(k.norm()) / pc.c;
    const cplx em = std::exp(-I * minkowski_phase(k0, k, x));
    const cplx ep = std::exp(I * minkowski_phase(k0, k, x));
    const double c0 = inv_sqrt_2pi3();
    // d_mu e^{-+ i k_nu x^nu} = -+ i k_mu with lower index k_mu = (k0, -k).
    const double k_mu_lower = (mu == 0) ? k0 : -k[mu - 1];
    const cplx du = -I * k_mu_lower;

    std::array<MatXc, 4> d;
    for (int r = 0; r < 4; ++r)
        d[r] = c0 * (du * (sp.u1(r) * em * cl.sigma_plus[0] + sp.u2(r) * em * cl.sigma_plus[1]) -
                     du * (sp.v3(r) * ep * cl.sigma_minus[2] + sp.v4(r) * ep * cl.sigma_minus[3]));
    return d;
}

double dirac_equation_residual(const SpacetimePoint& x, const WaveVector& k,
                               const PhysicalConstants& pc) {
    const GammaSet& gamma = gamma_set();
    const DiracFieldOps ops = dirac_field_ops(x, k, pc);
    std::array<std::array<MatXc, 4>, 4> d;
    for (int mu = 0; mu < 4; ++mu) d[mu] = dirac_field_dmu(x, k, mu, pc);

    double worst = 0.0;
    for (int r = 0; r < 4; ++r) {
        MatXc lhs = MatXc::Zero(Clifford16::dim, Clifford16::dim);
        for (int mu = 0; mu < 4; ++mu)
            for (int rp = 0; rp < 4; ++rp) lhs += I * gamma.g[mu](r, rp) * d[mu][rp];
        worst = std::max(worst, (lhs - pc.kappa * ops.psi[r]).norm());
    }
    return worst;
}

double heisenberg_residual(const SpacetimePoint& x, const WaveVector& k,
                           const PhysicalConstants& pc) {
    const Clifford16& cl = clifford_generators();
    const DiracFieldOps ops = dirac_field_ops(x, k, pc);
    const auto d0 = dirac_field_dmu(x, k, 0, pc);
    const MatXc h = cl.hamiltonian(pc.hbar * pc.omega(k.norm()));
    double worst = 0.0;
    for (int r = 0; r < 4; ++r) {
        const MatXc lhs = I * pc.hbar * pc.c * d0[r];
        const MatXc rhs = ops.psi[r] * h - h * ops.psi[r];
        worst = std::max(worst, (lhs - rhs).norm());
    }
    return worst;
}

CurrentKernel current_kernel(const WaveVector& k, const WaveVector& kp,
                             const PhysicalConstants& pc) {
    const Clifford16& cl = clifford_generators();
    const GammaSet& gamma = gamma_set();
    const SpinorSet a = solve_spinors(k, pc);
    const SpinorSet b = solve_spinors(kp, pc);
    const double pref = 0.5 * pc.q_el * pc.c / (8.0 * std::pow(std::numbers::pi, 3));

    CurrentKernel kernel;
    kernel.k = k;
    kernel.kp = kp;
    kernel.k0 = pc.omega(k.norm()) / pc.c;
    kernel.kp0 = pc.omega(kp.norm()) / pc.c;

    auto sandwich = [&](const Vec4c& left, int mu, const Vec4c& right) {
        return (bar(left, gamma) * gamma.g[mu] * right)(0);
    };

    const Eigen::Index d = Clifford16::dim;
    auto sector = [&](int s1, int s2) {
        CurrentSector sec;
        sec.s1 = s1;
        sec.s2 = s2;
        for (int mu = 0; mu < 4; ++mu) sec.m[mu] = MatXc::Zero(d, d);
        return sec;
    };

    // (+1,-1): uu-bar pairing from both orderings.
    CurrentSector s_pm = sector(+1, -1);
    for (int mu = 0; mu < 4; ++mu) {
        for (int s = 1; s <= 2; ++s)
            for (int sp = 1; sp <= 2; ++sp)
                s_pm.m[mu] += pref * sandwich(a.u(s), mu, b.u(sp)) *
                              (cl.sigma_minus[s - 1] * cl.sigma_plus[sp - 1]);
        for (int t = 3; t <= 4; ++t)
            for (int tp = 3; tp <= 4; ++tp)
                s_pm.m[mu] -= pref * sandwich(b.v(tp), mu, a.v(t)) *
                              (cl.sigma_minus[t - 1] * cl.sigma_plus[tp - 1]);
    }

    // (+1,+1): pair creation.
    CurrentSector s_pp = sector(+1, +1);
    for (int mu = 0; mu < 4; ++mu) {
        for (int s = 1; s <= 2; ++s)
            for (int tp = 3; tp <= 4; ++tp)
                s_pp.m[mu] += pref * sandwich(a.u(s), mu, b.v(tp)) *
                              (cl.sigma_minus[s - 1] * cl.sigma_minus[tp - 1]);
        for (int t = 3; t <= 4; ++t)
            for (int sp = 1; sp <= 2; ++sp)
                s_pp.m[mu] -= pref * sandwich(b.u(sp), mu, a.v(t)) *
                              (cl.sigma_minus[t - 1] * cl.sigma_minus[sp - 1]);
    }

    // (-1,-1): pair annihilation.
    CurrentSector s_mm = sector(-1, -1);
    for (int mu = 0; mu < 4; ++mu) {
        for (int t = 3; t <= 4; ++t)
            for (int sp = 1; sp <= 2; ++sp)
                s_mm.m[mu] += pref * sandwich(a.v(t), mu, b.u(sp)) *
                              (cl.sigma_plus[t - 1] * cl.sigma_plus[sp - 1]);
        for (int s = 1; s <= 2; ++s)
            for (int tp = 3; tp <= 4; ++tp)
                s_mm.m[mu] -= pref * sandwich(b.v(tp), mu, a.u(s)) *
                              (cl.sigma_plus[s - 1] * cl.sigma_plus[tp - 1]);
    }

    // (-1,+1): vv-bar pairing.
    CurrentSector s_mp = sector(-1, +1);
    for (int mu = 0; mu < 4; ++mu) {
        for (int t = 3; t <= 4; ++t)
            for (int tp = 3; tp <= 4; ++tp)
                s_mp.m[mu] += pref * sandwich(a.v(t), mu, b.v(tp)) *
                              (cl.sigma_plus[t - 1] * cl.sigma_minus[tp - 1]);
        for (int s = 1; s <= 2; ++s)
            for (int sp = 1; sp <= 2; ++sp)
                s_mp.m[mu] -= pref * sandwich(b.u(sp), mu, a.u(s)) *
                              (cl.sigma_plus[s - 1] * cl.sigma_minus[sp - 1]);
    }

    kernel.sectors = {s_pm, s_pp, s_mm, s_mp};
    return kernel;
}

std::array<MatXc, 4> CurrentKernel::evaluate(const SpacetimePoint& x) const {
    std::array<MatXc, 4> j;
    for (int mu = 0; mu < 4; ++mu) j[mu] = MatXc::Zero(Clifford16::dim, Clifford16::dim);
    for (const CurrentSector& sec : sectors) {
        const double arg = sec.s1 * minkowski_phase(k0, k, x) +
                           sec.s2 * minkowski_phase(kp0, kp, x);
        const cplx phase = std::exp(I * arg);
        for (int mu = 0; mu < 4; ++mu) j[mu] += phase * sec.m[mu];
    }
    return j;
}

MatXc total_charge_matrix(const WaveVector& k, const PhysicalConstants& pc) {
    const CurrentKernel kernel = current_kernel(k, k, pc);
    MatXc q = MatXc::Zero(Clifford16::dim, Clifford16::dim);
    for (const CurrentSector& sec : kernel.sectors) {
        const Vec3 total = sec.s1 * kernel.k + sec.s2 * kernel.kp;
        if (total.norm() < 1e-12) q += sec.m[0];
    }
    // The x-integration supplies (2 pi)^3 against the 1/(2 pi)^3 of the two
    // field operators; the remaining delta(k - k') is dropped symbolically.
    return 8.0 * std::pow(std::numbers::pi, 3) / pc.c * q;
}

std::array<cplx, 4> two_point_current(const KField& field, const SpacetimePoint& x,
                                      const PhysicalConstants& pc, Exec exec) {
    const auto& grid = *field.grid;
    const GammaSet& gamma = gamma_set();
    const std::size_t n = field.size();

    struct Accum {
        std::array<VecXc, 4> a;  // sum_k w (psi_bar_r)^dag zeta_k
        std::array<VecXc, 4> b;  // sum_k w psi_r zeta_k
    };
    std::vector<Accum> terms(n);
    parallel_for(
        n,
        [&](std::size_t i) {
            const DiracFieldOps ops = dirac_field_ops(x, grid.nodes[i], pc);
            for (int r = 0; r < 4; ++r) {
                terms[i].a[r] = grid.weights[i] * (ops.psi_bar[r].adjoint() * field.values[i]);
                terms[i].b[r] = grid.weights[i] * (ops.psi[r] * field.values[i]);
            }
        },
        exec);

    std::array<VecXc, 4> a, b;
    for (int r = 0; r < 4; ++r) {
        std::vector<VecXc> col(n);
        for (std::size_t i = 0; i < n; ++i) col[i] = terms[i].a[r];
        a[r] = pairwise_sum(col);
        for (std::size_t i = 0; i < n; ++i) col[i] = terms[i].b[r];
        b[r] = pairwise_sum(col);
    }

    const double l3 = std::pow(pc.ell, 3);
    Mat4c g;
    for (int r = 0; r < 4; ++r)
        for (int rp = 0; rp < 4; ++rp) g(rp, r) = l3 * a[r].dot(b[rp]);

    std::array<cplx, 4> r_mu;
    for (int mu = 0; mu < 4; ++mu) r_mu[mu] = (gamma.g[mu] * g).trace();
    return r_mu;
}

double continuity_residual_fd(const KField& field, const SpacetimePoint& x, double h,
                              const PhysicalConstants& pc) {
    auto r_at = [&](const SpacetimePoint& p) { return two_point_current(field, p, pc); };
    cplx div = 0.0;
    {
        SpacetimePoint xp = x, xm = x;
        xp.x0 += h;
        xm.x0 -= h;
        div += (r_at(xp)[0] - r_at(xm)[0]) / (2.0 * h);
    }
    for (int alpha = 0; alpha < 3; ++alpha) {
        SpacetimePoint xp = x, xm = x;
        xp.x[alpha] += h;
        xm.x[alpha] -= h;
        div += (r_at(xp)[alpha + 1] - r_at(xm)[alpha + 1]) / (2.0 * h);
    }
    return std::abs(div);
}

namespace ref {

std::array<cplx, 4> two_point_current_dense(const KField& field, const SpacetimePoint& x,
                                            const PhysicalConstants& pc) {
    const auto& grid = *field.grid;
    const GammaSet& gamma = gamma_set();
    const std::size_t n = field.size();
    std::vector<DiracFieldOps> ops(n);
    for (std::size_t i = 0; i < n; ++i) ops[i] = dirac_field_ops(x, grid.nodes[i], pc);

    const double l3 = std::pow(pc.ell, 3);
    Mat4c g = Mat4c::Zero();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int r = 0; r < 4; ++r)
                for (int rp = 0; rp < 4; ++rp)
                    g(rp, r) += l3 * grid.weights[i] * grid.weights[j] *
                                field.values[i].dot(ops[i].psi_bar[r] *
                                                    (ops[j].psi[rp] * field.values[j]));

    std::array<cplx, 4> r_mu;
    for (int mu = 0; mu < 4; ++mu) r_mu[mu] = (gamma.g[mu] * g).trace();
    return r_mu;
}

}  // namespace ref

}  // namespace rqed
