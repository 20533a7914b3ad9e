#pragma once

#include <functional>
#include <vector>

#include "rqed/constants.hpp"
#include "rqed/grid.hpp"
#include "rqed/reduce.hpp"

namespace rqed {

/// Photon-emission coupling for an electron with spin up, evaluated from the
/// analytic closed form: U^(H/V) is proportional to the transverse projection
/// of k with the (omega + omega' + 2 c kappa) frequency ratio.
struct CouplingFunctions {
    cplx u_h{0.0, 0.0};
    cplx u_v{0.0, 0.0};

    double u2_perp() const { return std::norm(u_h) + std::norm(u_v); }
};

/// Closed-form coupling; requires |k_ph| > 0.
CouplingFunctions coupling(const WaveVector& k_ph, const WaveVector& k,
                           const PhysicalConstants& pc);

/// The same quantity assembled without polarization vectors, through the
/// transverse projection |k|^2 - (k.k_ph)^2/|k_ph|^2.
double u2_perp_closed_form(const WaveVector& k_ph, const WaveVector& k,
                           const PhysicalConstants& pc);

/// Lower bound with the 4/(omega omega') frequency factor.
double u2_perp_lower_bound(const WaveVector& k_ph, const WaveVector& k,
                           const PhysicalConstants& pc);

/// Long-wavelength expansion: leading |k_ph|^-3 behaviour times the
/// first-order (1 - k.k_ph/(kappa^2+|k|^2)) correction.
double u2_perp_longwave(const WaveVector& k_ph, const WaveVector& k,
                        const PhysicalConstants& pc);

/// Exact matrix-element coupling U^(pol) built from the boosted spinors,
/// U = (lambda q / (4 N0 hbar |k_ph|)) sum_alpha eps_alpha <u1(k)|g0 g^a u1(k+k_ph)>.
/// This is the coupling the variational machinery uses.
CouplingFunctions coupling_matrix_element(const WaveVector& k_ph, const WaveVector& k,
                                          const PhysicalConstants& pc);

/// Complex amplitude profile a00(k_ph, k) of the electron-only component.
using AmplitudeRule = std::function<cplx(const WaveVector& k_ph, const WaveVector& k)>;

/// Separable default ansatz: Gaussians in |k| and |k_ph| times the
/// |k_ph|^3/(|k_ph|^3 + k0^3) regularizer that enforces the long-wavelength decay.
AmplitudeRule gaussian_ansatz(double amplitude, double sigma_k, double sigma_ph, double k0);

/// Variationally optimal trial state: a10 = -U^(H) a00(k+k_ph),
/// a01 = -U^(V) a00(k+k_ph), rho_vac fixed by normalization.
struct TrialState {
    AmplitudeRule a00;
    GridPtr grid_ph;
    GridPtr grid_el;
    PhysicalConstants pc;

    cplx a10(const WaveVector& k_ph, const WaveVector& k) const;
    cplx a01(const WaveVector& k_ph, const WaveVector& k) const;
    double rho_vac(const WaveVector& k_ph, const WaveVector& k) const;
};

/// Fitted log-log slope of sup_k |a00(q d, k)| against q on [1e-4, 1e-2];
/// feasible profiles must decay at least as |k_ph|^3.
double longwave_decay_exponent(const AmplitudeRule& a00, const std::vector<WaveVector>& k_samples);

/// Builds the optimal trial state and verifies feasibility (rho_vac >= 0 at
/// every node pair) and the long-wavelength decay of the supplied profile.
TrialState variational_optimum(AmplitudeRule a00, GridPtr grid_ph, GridPtr grid_el,
                               const PhysicalConstants& pc, bool enforce_decay = true);

struct Energies {
    double e_ph = 0.0;
    double e_el = 0.0;
    double e_int = 0.0;
    double e_total = 0.0;

    double identity_defect() const {
        return e_ph == 0.0 ? 0.0 : std::abs(e_int + 2.0 * e_ph) / e_ph;
    }
};

/// Double quadrature of the photon, electron and interaction energies; at the
/// variational optimum E_int = -2 E_ph holds pointwise in the integrand.
Energies energies(const TrialState& state, Exec exec = Exec::parallel);

namespace ref {

/// Serial running-sum evaluation of the same quadratures.
Energies energies_serial(const TrialState& state);

}  // namespace ref

struct LongWaveSample {
    double kph_mag = 0.0;
    double u2 = 0.0;
};

struct LongWaveScan {
    Vec3 direction;
    std::vector<LongWaveSample> samples;
    double slope = 0.0;  // fitted log-log exponent
};

/// Sweeps |k_ph| geometrically over [q_min, q_max] for a fixed electron wave
/// vector; non-parallel directions diverge as |k_ph|^-3.
LongWaveScan long_wavelength_scan(const WaveVector& k, const Vec3& direction, double q_min,
                                  double q_max, int n_points, const PhysicalConstants& pc);

}
