#pragma once

#include <functional>
#include <vector>

#include "rqed/constants.hpp"
#include "rqed/grid.hpp"
#include "rqed/reduce.hpp"
#include "rqed/types.hpp"

namespace rqed {

/// A field of Hilbert-space vectors: one value of fixed dimension d per grid node.
struct KField {
    GridPtr grid;
    std::vector<VecXc> values;

    KField() = default;
    KField(GridPtr g, Eigen::Index dim)
        : grid(std::move(g)), values(grid->size(), VecXc::Zero(dim)) {}

    std::size_t size() const { return values.size(); }
    Eigen::Index dim() const { return values.empty() ? 0 : values.front().size(); }
};

/// Build a field from a rule k -> vector.
KField make_field(GridPtr grid, const std::function<VecXc(const WaveVector&)>& rule);

/// Operator acting node-wise, k -> A_k zeta_k.
struct DiagonalOperator {
    Eigen::Index dim = 0;
    std::function<MatXc(const WaveVector&)> at;

    static DiagonalOperator constant(const MatXc& m);
};

/// Operator mixing wave vectors through a matrix kernel J(k, k').
struct IntegralKernel {
    Eigen::Index dim = 0;
    std::function<MatXc(const WaveVector&, const WaveVector&)> at;
};

/// max over nodes of | ||zeta_k|| - 1 |.
double normalization_defect(const KField& field);

bool is_properly_normalized(const KField& field, double tol = 1e-9);

KField apply_diagonal(const DiagonalOperator& op, const KField& field,
                      Exec exec = Exec::parallel);

/// Quadrature-weighted kernel application, [J zeta]_k = sum_j w_j J(k, k_j) zeta_j.
KField apply_integral(const IntegralKernel& kernel, const KField& field,
                      Exec exec = Exec::parallel);

/// Kernel of the operator product, (J*L)(k, k'') = quadrature over k' of J(k,k')L(k',k'').
IntegralKernel compose_kernels(const IntegralKernel& j, const IntegralKernel& l, GridPtr grid);

/// Quantum expectation ell^3 * quadrature of <zeta_k | (A zeta)_k>. The field
/// must be properly normalized within norm_tol.
cplx expectation(const DiagonalOperator& op, const KField& field, const PhysicalConstants& pc,
                 Exec exec = Exec::parallel, double norm_tol = 1e-9);
cplx expectation(const IntegralKernel& op, const KField& field, const PhysicalConstants& pc,
                 Exec exec = Exec::parallel, double norm_tol = 1e-9);

/// True iff op conserves every node norm within tol.
bool check_isometry(const DiagonalOperator& op, const KField& field, double tol);

namespace ref {

/// Dense mat-vec oracle for apply_integral: assembles the full (n*d) x (n*d)
/// block matrix. Intended for small grids in tests.
KField apply_integral_dense(const IntegralKernel& kernel, const KField& field);

/// Plain running-sum expectation, an independent accumulation order.
cplx expectation_serial(const DiagonalOperator& op, const KField& field,
                        const PhysicalConstants& pc);

}  // namespace ref

}  // namespace rqed
