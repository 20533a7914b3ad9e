#pragma once

#include <array>
#include <functional>
#include <memory>

#include "rqed/constants.hpp"
#include "rqed/kfield.hpp"
#include "rqed/oscillator.hpp"

namespace rqed {

/// Orthonormal polarization frame for a photon wave vector: Xi rotates k into
/// the positive z-direction; the H and V polarization vectors are its first
/// two rows.
struct PolarizationBasis {
    Mat3 xi;
    Vec3 eps_h;
    Vec3 eps_v;
};

/// Minimal rotation taking k/|k| to e3; for k antiparallel to e3 the branch
/// rule is a rotation by pi about e1.
PolarizationBasis polarization_basis(const WaveVector& k_ph);

/// Vector potential component operators A_alpha(x) at one photon wave vector.
std::array<MatXc, 3> vector_potential_op(const SpacetimePoint& x, const WaveVector& k_ph,
                                         const TwoModeOscSpace& space,
                                         const PhysicalConstants& pc);

struct EBOperators {
    std::array<MatXc, 3> e;
    std::array<MatXc, 3> b;
};

/// Electric and magnetic field operators, derivatives taken analytically on
/// the phase factors.
EBOperators e_b_operators(const SpacetimePoint& x, const WaveVector& k_ph,
                          const TwoModeOscSpace& space, const PhysicalConstants& pc);

/// Divergence of the electric field operator, analytic derivative per component.
MatXc divergence_e(const SpacetimePoint& x, const WaveVector& k_ph,
                   const TwoModeOscSpace& space, const PhysicalConstants& pc);

/// d/dx^0 of A_alpha, for Heisenberg equation checks.
std::array<MatXc, 3> vector_potential_dt(const SpacetimePoint& x, const WaveVector& k_ph,
                                         const TwoModeOscSpace& space,
                                         const PhysicalConstants& pc);

/// H_kph = hbar c |k_ph| (a_H^dag a_H + a_V^dag a_V).
DiagonalOperator em_hamiltonian(std::shared_ptr<const TwoModeOscSpace> space,
                                const PhysicalConstants& pc);

enum class Polarization { horizontal, vertical, circular_plus, circular_minus };

/// Single-photon superposition profile: occupation rho(k) in [0,1], phase
/// phi(k), and the polarization of the one-photon component.
struct SinglePhotonProfile {
    std::function<double(const WaveVector&)> rho;
    std::function<double(const WaveVector&)> phi;
    Polarization polarization = Polarization::horizontal;

    static SinglePhotonProfile gaussian(double rho_max, double sigma,
                                        Polarization pol = Polarization::horizontal);
};

/// zeta_k = sqrt(rho) e^{i phi} |one photon> + sqrt(1-rho) |0,0>.
KField single_photon_field(const SinglePhotonProfile& profile, GridPtr grid,
                           std::shared_ptr<const TwoModeOscSpace> space);

/// Spin operator i(a_V^dag a_H - a_H^dag a_V), in units of hbar.
MatXc spin_operator(const TwoModeOscSpace& space);

/// S2 = +- ell^3 integral of rho for circularly polarized single-photon fields.
double photon_spin(const KField& field, const TwoModeOscSpace& space,
                   const PhysicalConstants& pc);

/// [A_alpha(x), A_beta(y)] minus the predicted
/// -i lambda^2 sin(k_mu (x-y)^mu) / ((2pi)^3 4 |k| ell) (eps^H_a eps^H_b + eps^V_a eps^V_b).
MatXc a_commutator_residual(const SpacetimePoint& x, const SpacetimePoint& y,
                            const WaveVector& k_ph, int alpha, int beta,
                            const TwoModeOscSpace& space, const PhysicalConstants& pc);

}
