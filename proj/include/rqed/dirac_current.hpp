#pragma once

#include <array>
#include <vector>

#include "rqed/clifford.hpp"
#include "rqed/constants.hpp"
#include "rqed/dirac.hpp"
#include "rqed/kfield.hpp"

namespace rqed {

/// Dirac field operators psi_r(x) and their adjoints psi_bar_r = sum psi_rr'^dag gamma^0
/// as 16x16 matrices at one wave vector.
struct DiracFieldOps {
    std::array<MatXc, 4> psi;
    std::array<MatXc, 4> psi_bar;
};

DiracFieldOps dirac_field_ops(const SpacetimePoint& x, const WaveVector& k,
                              const PhysicalConstants& pc);

/// Analytic derivative d psi_r / d x^mu (mu = 0..3).
std::array<MatXc, 4> dirac_field_dmu(const SpacetimePoint& x, const WaveVector& k, int mu,
                                     const PhysicalConstants& pc);

/// max_r of || i gamma^mu d_mu psi_r - kappa psi_r || with analytic derivatives.
double dirac_equation_residual(const SpacetimePoint& x, const WaveVector& k,
                               const PhysicalConstants& pc);

/// max_r of || i hbar c d0 psi_r - [psi_r, H^el] ||.
double heisenberg_residual(const SpacetimePoint& x, const WaveVector& k,
                           const PhysicalConstants& pc);

/// One phase sector of the current kernel: carries e^{i(s1 k + s2 k')_mu x^mu}
/// and a 16x16 operator coefficient per Lorentz index.
struct CurrentSector {
    int s1 = 0;
    int s2 = 0;
    std::array<MatXc, 4> m;
};

/// Symmetric Dirac current kernel J^mu_{k,k'}(x), decomposed into the four
/// phase sectors; x-dependence stays symbolic until evaluate().
struct CurrentKernel {
    WaveVector k, kp;
    double k0 = 0.0, kp0 = 0.0;
    std::vector<CurrentSector> sectors;

    /// Numeric J^mu at a spacetime point.
    std::array<MatXc, 4> evaluate(const SpacetimePoint& x) const;
};

CurrentKernel current_kernel(const WaveVector& k, const WaveVector& kp,
                             const PhysicalConstants& pc);

/// Symbolic (1/c) integral over space of J^0_{k,k}: keeps only the sectors with
/// vanishing total momentum and drops the delta normalization. Equals
/// q_el (N1 + N2 - N3 - N4).
MatXc total_charge_matrix(const WaveVector& k, const PhysicalConstants& pc);

/// r^mu(x) = Tr gamma^mu G(x,x) for a properly normalized 16-dim field,
/// with G the double-quadrature two-point function. Factorized O(n) evaluation.
std::array<cplx, 4> two_point_current(const KField& field, const SpacetimePoint& x,
                                      const PhysicalConstants& pc, Exec exec = Exec::parallel);

/// Central finite-difference continuity residual d_mu r^mu at step h.
double continuity_residual_fd(const KField& field, const SpacetimePoint& x, double h,
                              const PhysicalConstants& pc);

namespace ref {

/// Direct O(n^2) double-loop evaluation of the two-point function.
std::array<cplx, 4> two_point_current_dense(const KField& field, const SpacetimePoint& x,
                                            const PhysicalConstants& pc);

}  // namespace ref

}  // namespace rqed
