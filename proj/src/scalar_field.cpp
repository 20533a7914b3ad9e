#include "rqed/scalar_field.hpp"

#include <cmath>
#include <numbers>

#include "rqed/errors.hpp"

namespace rqed {

CoherentProfile CoherentProfile::zero() {
    return CoherentProfile{[](const WaveVector&) { return cplx{0.0, 0.0}; }};
}

CoherentProfile CoherentProfile::gaussian(double amplitude, double sigma) {
    return CoherentProfile{[amplitude, sigma](const WaveVector& k) {
        return cplx{amplitude * std::exp(-k.squaredNorm() / (2.0 * sigma * sigma)), 0.0};
    }};
}

CoherentProfile CoherentProfile::shell(double amplitude, double k0, double width) {
    return CoherentProfile{[amplitude, k0, width](const WaveVector& k) {
        const double d = k.norm() - k0;
        return cplx{amplitude * std::exp(-d * d / (2.0 * width * width)), 0.0};
    }};
}

KField coherent_field(const CoherentProfile& profile, GridPtr grid,
                      std::shared_ptr<const OscillatorSpace> space) {
    return make_field(std::move(grid), [&profile, space](const WaveVector& k) {
        return coherent_state(profile.F(k), *space);
    });
}

DiagonalOperator free_hamiltonian(std::shared_ptr<const OscillatorSpace> space,
                                  const PhysicalConstants& pc) {
    const MatXc number = space->number();
    const double hc = pc.hbar * pc.c;
    return DiagonalOperator{space->dim(), [number, hc](const WaveVector& k) {
                                return MatXc(hc * k.norm() * number);
                            }};
}

MatXc field_operator(const SpacetimePoint& x, const WaveVector& k, const OscillatorSpace& space,
                     const PhysicalConstants& pc) {
    const double phase = minkowski_phase(k.norm(), k, x);
    return (std::exp(-I * phase) * space.a + std::exp(I * phase) * space.adag) / pc.n0(k.norm());
}

MatXc commutator_residual(const SpacetimePoint& x, const SpacetimePoint& y, const WaveVector& k,
                          const OscillatorSpace& space, const PhysicalConstants& pc) {
    const MatXc px = field_operator(x, k, space, pc);
    const MatXc py = field_operator(y, k, space, pc);
    const double arg = minkowski_phase(k.norm(), k, y) - minkowski_phase(k.norm(), k, x);
    const cplx predicted =
        I * std::sin(arg) / (8.0 * std::pow(std::numbers::pi, 3) * pc.ell * k.norm());
    return px * py - py * px - predicted * MatXc::Identity(space.dim(), space.dim());
}

double classical_field(const CoherentProfile& profile, const SpacetimePoint& x,
                       const QuadratureGrid& grid, const PhysicalConstants& pc) {
    const cplx integral = grid.integrate_complex([&](const WaveVector& k) {
        const double phase = minkowski_phase(k.norm(), k, x);
        return std::pow(pc.ell, 1.5) / pc.n0(k.norm()) * profile.f(k, pc) * std::exp(-I * phase);
    });
    return 2.0 * integral.real();
}

}
