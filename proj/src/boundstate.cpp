#include "rqed/boundstate.hpp"

#include <cmath>

#include "rqed/dirac.hpp"
#include "rqed/errors.hpp"
#include "rqed/photon.hpp"

namespace rqed {

namespace {

double coupling_prefactor(const WaveVector& k_ph, const PhysicalConstants& pc) {
    return pc.lambda * pc.q_el * pc.c /
           (4.0 * pc.n0(k_ph.norm()) * pc.hbar * k_ph.norm());
}

double frequency_ratio(const WaveVector& k_ph, const WaveVector& k,
                       const PhysicalConstants& pc) {
    const double w = pc.omega(k.norm());
    const double wp = pc.omega((k + k_ph).norm());
    const double ck = pc.c * pc.kappa;
    return (w + wp + 2.0 * ck) / (std::sqrt(wp * (wp + ck)) * std::sqrt(w * (w + ck)));
}

}  // namespace

CouplingFunctions coupling(const WaveVector& k_ph, const WaveVector& k,
                           const PhysicalConstants& pc) {
    if (!(k_ph.norm() > 0.0)) throw domain_error("coupling: zero photon wave vector");
    const PolarizationBasis basis = polarization_basis(k_ph);
    const double common = -coupling_prefactor(k_ph, pc) * frequency_ratio(k_ph, k, pc);
    return CouplingFunctions{cplx(common * basis.eps_h.dot(k), 0.0),
                             cplx(common * basis.eps_v.dot(k), 0.0)};
}

double u2_perp_closed_form(const WaveVector& k_ph, const WaveVector& k,
                           const PhysicalConstants& pc) {
    const double transverse =
        k.squaredNorm() - std::pow(k.dot(k_ph), 2) / k_ph.squaredNorm();
    const double pref = coupling_prefactor(k_ph, pc);
    const double ratio = frequency_ratio(k_ph, k, pc);
    return pref * pref * transverse * ratio * ratio;
}

double u2_perp_lower_bound(const WaveVector& k_ph, const WaveVector& k,
                           const PhysicalConstants& pc) {
    const double transverse =
        k.squaredNorm() - std::pow(k.dot(k_ph), 2) / k_ph.squaredNorm();
    const double pref = coupling_prefactor(k_ph, pc);
    const double w = pc.omega(k.norm());
    const double wp = pc.omega((k + k_ph).norm());
    return pref * pref * transverse * 4.0 / (w * wp);
}

double u2_perp_longwave(const WaveVector& k_ph, const WaveVector& k,
                        const PhysicalConstants& pc) {
    const double transverse =
        k.squaredNorm() - std::pow(k.dot(k_ph), 2) / k_ph.squaredNorm();
    const double pref = coupling_prefactor(k_ph, pc);
    const double w = pc.omega(k.norm());
    const double correction = 1.0 - k.dot(k_ph) / (pc.kappa * pc.kappa + k.squaredNorm());
    return pref * pref * transverse * 4.0 / (w * w) * correction;
}

CouplingFunctions coupling_matrix_element(const WaveVector& k_ph, const WaveVector& k,
                                          const PhysicalConstants& pc) {
    if (!(k_ph.norm() > 0.0)) throw domain_error("coupling: zero photon wave vector");
    const PolarizationBasis basis = polarization_basis(k_ph);
    const GammaSet& gamma = gamma_set();
    const SpinorSet a = solve_spinors(k, pc);
    const SpinorSet b = solve_spinors(k + k_ph, pc);
    const Eigen::RowVector4cd ub = bar(a.u1, gamma);
    cplx m_h = 0.0, m_v = 0.0;
    for (int alpha = 0; alpha < 3; ++alpha) {
        const cplx s = (ub * gamma.g[alpha + 1] * b.u1)(0);
        m_h += basis.eps_h[alpha] * s;
        m_v += basis.eps_v[alpha] * s;
    }
    const double pref = pc.lambda * pc.q_el /
                        (4.0 * pc.n0(k_ph.norm()) * pc.hbar * k_ph.norm());
    return CouplingFunctions{pref * m_h, pref * m_v};
}

AmplitudeRule gaussian_ansatz(double amplitude, double sigma_k, double sigma_ph, double k0) {
    return [=](const WaveVector& k_ph, const WaveVector& k) {
        const double q3 = std::pow(k_ph.norm(), 3);
        const double reg = q3 / (q3 + k0 * k0 * k0);
        return cplx(amplitude * reg * std::exp(-k.squaredNorm() / (2.0 * sigma_k * sigma_k)) *
                        std::exp(-k_ph.squaredNorm() / (2.0 * sigma_ph * sigma_ph)),
                    0.0);
    };
}

cplx TrialState::a10(const WaveVector& k_ph, const WaveVector& k) const {
    return -coupling_matrix_element(k_ph, k, pc).u_h * a00(k_ph, k + k_ph);
}

cplx TrialState::a01(const WaveVector& k_ph, const WaveVector& k) const {
    return -coupling_matrix_element(k_ph, k, pc).u_v * a00(k_ph, k + k_ph);
}

double TrialState::rho_vac(const WaveVector& k_ph, const WaveVector& k) const {
    const double u2 = coupling_matrix_element(k_ph, k, pc).u2_perp();
    return 1.0 - std::norm(a00(k_ph, k)) - u2 * std::norm(a00(k_ph, k + k_ph));
}

double longwave_decay_exponent(const AmplitudeRule& a00,
                               const std::vector<WaveVector>& k_samples) {
    const std::vector<Vec3> dirs = {Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1),
                                    Vec3(1, 1, 1).normalized()};
    // Least-squares slope of log sup|a00| against log q.
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (int i = 0; i < 9; ++i) {
        const double q = 1e-4 * std::pow(100.0, i / 8.0);
        double sup = 0.0;
        for (const Vec3& d : dirs)
            for (const WaveVector& k : k_samples)
                sup = std::max(sup, std::abs(a00(q * d, k)));
        if (sup <= 0.0) continue;
        const double x = std::log(q), y = std::log(sup);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    if (count < 2) return std::numeric_limits<double>::infinity();  // identically zero decays fine
    return (count * sxy - sx * sy) / (count * sxx - sx * sx);
}

TrialState variational_optimum(AmplitudeRule a00, GridPtr grid_ph, GridPtr grid_el,
                               const PhysicalConstants& pc, bool enforce_decay) {
    TrialState state{std::move(a00), std::move(grid_ph), std::move(grid_el), pc};

    if (enforce_decay) {
        std::vector<WaveVector> samples = {Vec3(0.1, 0.0, 0.0), Vec3(0.0, 0.4, 0.3),
                                           Vec3(0.5, 0.5, 0.0)};
        const double p = longwave_decay_exponent(state.a00, samples);
        if (p < 3.0 - 0.1)
            throw feasibility_error("variational_optimum: a00 decays slower than |k_ph|^3", 0, p);
    }

    double worst = 1.0;
    std::size_t worst_pair = 0;
    std::size_t index = 0;
    for (const auto& kph : state.grid_ph->nodes) {
        for (const auto& k : state.grid_el->nodes) {
            const double rv = state.rho_vac(kph, k);
            if (rv < worst) {
                worst = rv;
                worst_pair = index;
            }
            ++index;
        }
    }
    if (worst < 0.0)
        throw feasibility_error("variational_optimum: rho_vac negative at a node pair",
                                worst_pair, worst);
    return state;
}

namespace {

struct PairTerms {
    double e_ph;
    double e_el;
    double e_int;
};

PairTerms pair_terms(const TrialState& st, const WaveVector& kph, const WaveVector& k) {
    const PhysicalConstants& pc = st.pc;
    const cplx a00_here = st.a00(kph, k);
    const cplx a00_shift = st.a00(kph, k + kph);
    const CouplingFunctions u = coupling_matrix_element(kph, k, pc);
    const cplx a10 = -u.u_h * a00_shift;
    const cplx a01 = -u.u_v * a00_shift;

    PairTerms t;
    t.e_ph = pc.hbar * pc.c * kph.norm() * (std::norm(a10) + std::norm(a01));
    t.e_el = pc.hbar * pc.omega(k.norm()) *
             (std::norm(a00_here) + std::norm(a10) + std::norm(a01));

    // Interaction cross terms, assembled from the gamma-matrix sandwiches
    // rather than from U itself.
    const PolarizationBasis basis = polarization_basis(kph);
    const GammaSet& gamma = gamma_set();
    const SpinorSet sa = solve_spinors(k, pc);
    const SpinorSet sb = solve_spinors(k + kph, pc);
    const Eigen::RowVector4cd ub = bar(sa.u1, gamma);
    cplx m_h = 0.0, m_v = 0.0;
    for (int alpha = 0; alpha < 3; ++alpha) {
        const cplx s = (ub * gamma.g[alpha + 1] * sb.u1)(0);
        m_h += basis.eps_h[alpha] * s;
        m_v += basis.eps_v[alpha] * s;
    }
    const double pref = pc.lambda * pc.q_el * pc.c / (4.0 * pc.n0(kph.norm()));
    t.e_int = 2.0 * pref *
              (std::conj(a10) * a00_shift * m_h + std::conj(a01) * a00_shift * m_v).real();
    return t;
}

Energies accumulate(const TrialState& st, Exec exec) {
    const auto& gph = *st.grid_ph;
    const auto& gel = *st.grid_el;
    const std::size_t np = gph.size(), nk = gel.size();
    const double l6 = std::pow(st.pc.ell, 6);

    std::vector<double> tph(np * nk), tel(np * nk), tint(np * nk);
    parallel_for(
        np * nk,
        [&](std::size_t idx) {
            const std::size_t p = idx / nk, i = idx % nk;
            const PairTerms t = pair_terms(st, gph.nodes[p], gel.nodes[i]);
            const double w = gph.weights[p] * gel.weights[i];
            tph[idx] = w * t.e_ph;
            tel[idx] = w * t.e_el;
            tint[idx] = w * t.e_int;
        },
        exec);

    Energies e;
    e.e_ph = l6 * pairwise_sum(tph);
    e.e_el = l6 * pairwise_sum(tel);
    e.e_int = l6 * pairwise_sum(tint);
    e.e_total = e.e_ph + e.e_el + e.e_int;
    if (!std::isfinite(e.e_total)) throw divergence_error("energies: non-finite quadrature");
    return e;
}

}  // namespace

Energies energies(const TrialState& state, Exec exec) { return accumulate(state, exec); }

namespace ref {

Energies energies_serial(const TrialState& state) {
    const auto& gph = *state.grid_ph;
    const auto& gel = *state.grid_el;
    const double l6 = std::pow(state.pc.ell, 6);
    Energies e;
    for (std::size_t p = 0; p < gph.size(); ++p)
        for (std::size_t i = 0; i < gel.size(); ++i) {
            const PairTerms t = pair_terms(state, gph.nodes[p], gel.nodes[i]);
            const double w = gph.weights[p] * gel.weights[i];
            e.e_ph += w * t.e_ph;
            e.e_el += w * t.e_el;
            e.e_int += w * t.e_int;
        }
    e.e_ph *= l6;
    e.e_el *= l6;
    e.e_int *= l6;
    e.e_total = e.e_ph + e.e_el + e.e_int;
    return e;
}

}  // namespace ref

LongWaveScan long_wavelength_scan(const WaveVector& k, const Vec3& direction, double q_min,
                                  double q_max, int n_points, const PhysicalConstants& pc) {
    if (n_points < 2) throw config_error("long_wavelength_scan: need at least two points");
    LongWaveScan scan;
    scan.direction = direction.normalized();
    scan.samples.resize(n_points);
    for (int i = 0; i < n_points; ++i) {
        const double q = q_min * std::pow(q_max / q_min, static_cast<double>(i) / (n_points - 1));
        scan.samples[i].kph_mag = q;
        scan.samples[i].u2 = u2_perp_closed_form(q * scan.direction, k, pc);
    }
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    int count = 0;
    for (const auto& s : scan.samples) {
        if (s.u2 <= 0.0) continue;
        const double x = std::log(s.kph_mag), y = std::log(s.u2);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    scan.slope = (count >= 2) ? (count * sxy - sx * sy) / (count * sxx - sx * sx) : 0.0;
    return scan;
}

}
