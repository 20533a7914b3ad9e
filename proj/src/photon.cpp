#include "rqed/photon.hpp"

#include <cmath>
#include <numbers>

#include "rqed/errors.hpp"

namespace rqed {

PolarizationBasis polarization_basis(const WaveVector& k_ph) {
    const double norm = k_ph.norm();
    if (!(norm > 0.0)) throw domain_error("polarization_basis: zero wave vector");
    const Vec3 khat = k_ph / norm;
    const Vec3 e3(0.0, 0.0, 1.0);
    const double c = khat.dot(e3);

    Mat3 xi;
    if (1.0 + c < 1e-14) {
        // Antipodal branch: rotate by pi about e1.
        xi << 1.0, 0.0, 0.0, 0.0, -1.0, 0.0, 0.0, 0.0, -1.0;
    } else {
        const Vec3 v = khat.cross(e3);
        Mat3 vx;
        vx << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
        xi = Mat3::Identity() + vx + vx * vx / (1.0 + c);
    }
    return PolarizationBasis{xi, xi.row(0), xi.row(1)};
}

namespace {

struct ModePhases {
    cplx minus;  // e^{-i k_mu x^mu}
    cplx plus;   // e^{+i k_mu x^mu}
};

ModePhases phases_at(const SpacetimePoint& x, const WaveVector& k_ph) {
    const double phase = minkowski_phase(k_ph.norm(), k_ph, x);
    return {std::exp(-I * phase), std::exp(I * phase)};
}

}  // namespace

std::array<MatXc, 3> vector_potential_op(const SpacetimePoint& x, const WaveVector& k_ph,
                                         const TwoModeOscSpace& space,
                                         const PhysicalConstants& pc) {
    const PolarizationBasis basis = polarization_basis(k_ph);
    const ModePhases ph = phases_at(x, k_ph);
    const double pref = pc.lambda / (2.0 * pc.n0(k_ph.norm()));
    const MatXc mh = ph.minus * space.a_h + ph.plus * space.ad_h;
    const MatXc mv = ph.minus * space.a_v + ph.plus * space.ad_v;
    std::array<MatXc, 3> a;
    for (int alpha = 0; alpha < 3; ++alpha)
        a[alpha] = pref * (basis.eps_h[alpha] * mh + basis.eps_v[alpha] * mv);
    return a;
}

std::array<MatXc, 3> vector_potential_dt(const SpacetimePoint& x, const WaveVector& k_ph,
                                         const TwoModeOscSpace& space,
                                         const PhysicalConstants& pc) {
    const PolarizationBasis basis = polarization_basis(k_ph);
    const ModePhases ph = phases_at(x, k_ph);
    const double k = k_ph.norm();
    const double pref = pc.lambda / (2.0 * pc.n0(k));
    const MatXc mh = -I * k * ph.minus * space.a_h + I * k * ph.plus * space.ad_h;
    const MatXc mv = -I * k * ph.minus * space.a_v + I * k * ph.plus * space.ad_v;
    std::array<MatXc, 3> dt;
    for (int alpha = 0; alpha < 3; ++alpha)
        dt[alpha] = pref * (basis.eps_h[alpha] * mh + basis.eps_v[alpha] * mv);
    return dt;
}

EBOperators e_b_operators(const SpacetimePoint& x, const WaveVector& k_ph,
                          const TwoModeOscSpace& space, const PhysicalConstants& pc) {
    const PolarizationBasis basis = polarization_basis(k_ph);
    const ModePhases ph = phases_at(x, k_ph);
    const double k = k_ph.norm();
    const double pref = pc.lambda / (2.0 * pc.n0(k));

    // E_alpha = -c d0 A_alpha.
    const MatXc eh = I * pc.c * k * pref * (ph.minus * space.a_h - ph.plus * space.ad_h);
    const MatXc ev = I * pc.c * k * pref * (ph.minus * space.a_v - ph.plus * space.ad_v);
    // B = curl A; spatial derivative brings +i k_beta on e^{-ikx}.
    const Vec3 bh_dir = k_ph.cross(basis.eps_h);
    const Vec3 bv_dir = k_ph.cross(basis.eps_v);
    const MatXc mh = I * pref * (ph.minus * space.a_h - ph.plus * space.ad_h);
    const MatXc mv = I * pref * (ph.minus * space.a_v - ph.plus * space.ad_v);

    EBOperators out;
    for (int alpha = 0; alpha < 3; ++alpha) {
        out.e[alpha] = basis.eps_h[alpha] * eh + basis.eps_v[alpha] * ev;
        out.b[alpha] = bh_dir[alpha] * mh + bv_dir[alpha] * mv;
    }
    return out;
}

MatXc divergence_e(const SpacetimePoint& x, const WaveVector& k_ph,
                   const TwoModeOscSpace& space, const PhysicalConstants& pc) {
    const PolarizationBasis basis = polarization_basis(k_ph);
    const ModePhases ph = phases_at(x, k_ph);
    const double k = k_ph.norm();
    const double pref = pc.lambda / (2.0 * pc.n0(k));
    // Divergence of E contracts k with the polarization vectors.
    const MatXc sum_h = ph.minus * space.a_h + ph.plus * space.ad_h;
    const MatXc sum_v = ph.minus * space.a_v + ph.plus * space.ad_v;
    return -pc.c * k * pref *
           (k_ph.dot(basis.eps_h) * sum_h + k_ph.dot(basis.eps_v) * sum_v);
}

DiagonalOperator em_hamiltonian(std::shared_ptr<const TwoModeOscSpace> space,
                                const PhysicalConstants& pc) {
    const MatXc number = space->ad_h * space->a_h + space->ad_v * space->a_v;
    const double hc = pc.hbar * pc.c;
    return DiagonalOperator{space->dim(), [number, hc](const WaveVector& k) {
                                return MatXc(hc * k.norm() * number);
                            }};
}

SinglePhotonProfile SinglePhotonProfile::gaussian(double rho_max, double sigma,
                                                  Polarization pol) {
    SinglePhotonProfile p;
    p.rho = [rho_max, sigma](const WaveVector& k) {
        return rho_max * std::exp(-k.squaredNorm() / (2.0 * sigma * sigma));
    };
    p.phi = [](const WaveVector&) { return 0.0; };
    p.polarization = pol;
    return p;
}

KField single_photon_field(const SinglePhotonProfile& profile, GridPtr grid,
                           std::shared_ptr<const TwoModeOscSpace> space) {
    const VecXc vac = space->basis_state(0, 0);
    VecXc one;
    switch (profile.polarization) {
        case Polarization::horizontal: one = space->basis_state(1, 0); break;
        case Polarization::vertical: one = space->basis_state(0, 1); break;
        case Polarization::circular_plus:
            one = (space->basis_state(1, 0) + I * space->basis_state(0, 1)) / std::sqrt(2.0);
            break;
        case Polarization::circular_minus:
            one = (space->basis_state(1, 0) - I * space->basis_state(0, 1)) / std::sqrt(2.0);
            break;
    }
    return make_field(std::move(grid), [&profile, one, vac](const WaveVector& k) {
        const double rho = profile.rho(k);
        if (rho < 0.0 || rho > 1.0)
            throw domain_error("single_photon_field: rho outside [0, 1]");
        return VecXc(std::sqrt(rho) * std::exp(I * profile.phi(k)) * one +
                     std::sqrt(1.0 - rho) * vac);
    });
}

MatXc spin_operator(const TwoModeOscSpace& space) {
    return I * (space.ad_v * space.a_h - space.ad_h * space.a_v);
}

double photon_spin(const KField& field, const TwoModeOscSpace& space,
                   const PhysicalConstants& pc) {
    const DiagonalOperator op = DiagonalOperator::constant(spin_operator(space));
    return expectation(op, field, pc).real();
}

MatXc a_commutator_residual(const SpacetimePoint& x, const SpacetimePoint& y,
                            const WaveVector& k_ph, int alpha, int beta,
                            const TwoModeOscSpace& space, const PhysicalConstants& pc) {
    const PolarizationBasis basis = polarization_basis(k_ph);
    const auto ax = vector_potential_op(x, k_ph, space, pc);
    const auto ay = vector_potential_op(y, k_ph, space, pc);
    const double arg = minkowski_phase(k_ph.norm(), k_ph, x) - minkowski_phase(k_ph.norm(), k_ph, y);
    const cplx predicted = -I * pc.lambda * pc.lambda * std::sin(arg) /
                           (8.0 * std::pow(std::numbers::pi, 3) * 4.0 * k_ph.norm() * pc.ell) *
                           (basis.eps_h[alpha] * basis.eps_h[beta] +
                            basis.eps_v[alpha] * basis.eps_v[beta]);
    return ax[alpha] * ay[beta] - ay[beta] * ax[alpha] -
           predicted * MatXc::Identity(space.dim(), space.dim());
}

}
