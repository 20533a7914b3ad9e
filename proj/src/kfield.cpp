#include "rqed/kfield.hpp"

#include <cmath>

#include "rqed/errors.hpp"

namespace rqed {

KField make_field(GridPtr grid, const std::function<VecXc(const WaveVector&)>& rule) {
    KField field;
    field.grid = std::move(grid);
    field.values.resize(field.grid->size());
    parallel_for(field.grid->size(),
                 [&](std::size_t i) { field.values[i] = rule(field.grid->nodes[i]); });
    for (std::size_t i = 1; i < field.values.size(); ++i)
        if (field.values[i].size() != field.values[0].size())
            throw domain_error("make_field: value dimension varies across nodes");
    return field;
}

DiagonalOperator DiagonalOperator::constant(const MatXc& m) {
    return DiagonalOperator{m.rows(), [m](const WaveVector&) { return m; }};
}

double normalization_defect(const KField& field) {
    if (field.size() == 0) throw domain_error("normalization_defect: empty field");
    double worst = 0.0;
    for (const auto& v : field.values) worst = std::max(worst, std::abs(v.norm() - 1.0));
    return worst;
}

bool is_properly_normalized(const KField& field, double tol) {
    return normalization_defect(field) <= tol;
}

KField apply_diagonal(const DiagonalOperator& op, const KField& field, Exec exec) {
    if (op.dim != field.dim()) throw domain_error("apply_diagonal: dimension mismatch");
    KField out;
    out.grid = field.grid;
    out.values.resize(field.size());
    parallel_for(
        field.size(),
        [&](std::size_t i) { out.values[i] = op.at(field.grid->nodes[i]) * field.values[i]; },
        exec);
    return out;
}

KField apply_integral(const IntegralKernel& kernel, const KField& field, Exec exec) {
    if (kernel.dim != field.dim()) throw domain_error("apply_integral: dimension mismatch");
    const auto& grid = *field.grid;
    KField out;
    out.grid = field.grid;
    out.values.resize(field.size());
    parallel_for(
        field.size(),
        [&](std::size_t i) {
            std::vector<VecXc> terms(field.size());
            for (std::size_t j = 0; j < field.size(); ++j)
                terms[j] = grid.weights[j] * (kernel.at(grid.nodes[i], grid.nodes[j]) *
                                              field.values[j]);
            out.values[i] = pairwise_sum(terms);
            if (!out.values[i].allFinite())
                throw divergence_error("apply_integral: non-finite kernel application");
        },
        exec);
    return out;
}

IntegralKernel compose_kernels(const IntegralKernel& j, const IntegralKernel& l, GridPtr grid) {
    if (j.dim != l.dim) throw domain_error("compose_kernels: dimension mismatch");
    const Eigen::Index d = j.dim;
    auto g = std::move(grid);
    auto rule = [j, l, g, d](const WaveVector& k, const WaveVector& kpp) {
        std::vector<MatXc> terms(g->size());
        for (std::size_t m = 0; m < g->size(); ++m)
            terms[m] = g->weights[m] * (j.at(k, g->nodes[m]) * l.at(g->nodes[m], kpp));
        MatXc sum = MatXc::Zero(d, d);
        for (const auto& t : terms) sum += t;
        return sum;
    };
    return IntegralKernel{d, rule};
}

namespace {

cplx expectation_of(const KField& field, const KField& image, const PhysicalConstants& pc,
                    Exec exec) {
    const auto& grid = *field.grid;
    const cplx sum = map_sum<cplx>(
        field.size(),
        [&](std::size_t i) {
            return grid.weights[i] * field.values[i].dot(image.values[i]);
        },
        exec);
    const cplx result = std::pow(pc.ell, 3) * sum;
    if (!std::isfinite(result.real()) || !std::isfinite(result.imag()))
        throw divergence_error("expectation: quadrature sum is not finite");
    return result;
}

void require_normalized(const KField& field, double tol) {
    if (!is_properly_normalized(field, tol))
        throw contract_error("expectation: field is not properly normalized");
}

}  // namespace

cplx expectation(const DiagonalOperator& op, const KField& field, const PhysicalConstants& pc,
                 Exec exec, double norm_tol) {
    require_normalized(field, norm_tol);
    return expectation_of(field, apply_diagonal(op, field, exec), pc, exec);
}

cplx expectation(const IntegralKernel& op, const KField& field, const PhysicalConstants& pc,
                 Exec exec, double norm_tol) {
    require_normalized(field, norm_tol);
    return expectation_of(field, apply_integral(op, field, exec), pc, exec);
}

bool check_isometry(const DiagonalOperator& op, const KField& field, double tol) {
    const KField image = apply_diagonal(op, field);
    for (std::size_t i = 0; i < field.size(); ++i)
        if (std::abs(image.values[i].norm() - field.values[i].norm()) > tol) return false;
    return true;
}

namespace ref {

KField apply_integral_dense(const IntegralKernel& kernel, const KField& field) {
    const auto& grid = *field.grid;
    const Eigen::Index d = kernel.dim;
    const Eigen::Index n = static_cast<Eigen::Index>(grid.size());
    MatXc dense(n * d, n * d);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            dense.block(i * d, j * d, d, d) =
                grid.weights[static_cast<std::size_t>(j)] *
                kernel.at(grid.nodes[static_cast<std::size_t>(i)],
                          grid.nodes[static_cast<std::size_t>(j)]);
    VecXc stacked(n * d);
    for (Eigen::Index i = 0; i < n; ++i)
        stacked.segment(i * d, d) = field.values[static_cast<std::size_t>(i)];
    const VecXc mapped = dense * stacked;
    KField out;
    out.grid = field.grid;
    out.values.resize(grid.size());
    for (Eigen::Index i = 0; i < n; ++i)
        out.values[static_cast<std::size_t>(i)] = mapped.segment(i * d, d);
    return out;
}

cplx expectation_serial(const DiagonalOperator& op, const KField& field,
                        const PhysicalConstants& pc) {
    cplx sum = 0.0;
    for (std::size_t i = 0; i < field.size(); ++i) {
        const VecXc image = op.at(field.grid->nodes[i]) * field.values[i];
        sum += field.grid->weights[i] * field.values[i].dot(image);
    }
    return std::pow(pc.ell, 3) * sum;
}

}  // namespace ref

}  // namespace rqed
