#pragma once

#include <functional>
#include <memory>

#include "rqed/constants.hpp"
#include "rqed/kfield.hpp"
#include "rqed/oscillator.hpp"

namespace rqed {

/// Dimensionless coherent amplitude profile F(k); the physical profile is
/// f(k) = ell^{3/2} F(k).
struct CoherentProfile {
    std::function<cplx(const WaveVector&)> F;

    cplx f(const WaveVector& k, const PhysicalConstants& pc) const {
        return std::pow(pc.ell, 1.5) * F(k);
    }

    static CoherentProfile zero();
    static CoherentProfile gaussian(double amplitude, double sigma);
    /// Radial shell exp(-(|k|-k0)^2 / (2 width^2)).
    static CoherentProfile shell(double amplitude, double k0, double width);
};

/// Node-wise coherent field |F(k)>^c; properly normalized by construction.
KField coherent_field(const CoherentProfile& profile, GridPtr grid,
                      std::shared_ptr<const OscillatorSpace> space);

/// H_k = hbar c |k| a^dag a (no ground-state energy term).
DiagonalOperator free_hamiltonian(std::shared_ptr<const OscillatorSpace> space,
                                  const PhysicalConstants& pc);

/// phi_k(x) = (1/N0(k)) (e^{-ikx} a + e^{ikx} a^dag), with k0 = |k|.
MatXc field_operator(const SpacetimePoint& x, const WaveVector& k, const OscillatorSpace& space,
                     const PhysicalConstants& pc);

/// [phi_k(x), phi_k(y)] minus the predicted i sin(k_mu (y-x)^mu) / ((2pi)^3 ell |k|) identity.
MatXc commutator_residual(const SpacetimePoint& x, const SpacetimePoint& y, const WaveVector& k,
                          const OscillatorSpace& space, const PhysicalConstants& pc);

/// Classical wave phi(x) = 2 Re quadrature of (ell^{3/2}/N0) f(k) e^{-ikx}.
double classical_field(const CoherentProfile& profile, const SpacetimePoint& x,
                       const QuadratureGrid& grid, const PhysicalConstants& pc);

}
