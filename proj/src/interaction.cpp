#include "rqed/interaction.hpp"

#include <cmath>
#include <numbers>

#include "rqed/dirac_current.hpp"
#include "rqed/errors.hpp"
#include "rqed/reduce.hpp"

namespace rqed {

LatticeGrid::LatticeGrid(double spacing, int half_extent) : h(spacing), n(half_extent) {
    if (!(h > 0.0) || n < 1) throw config_error("LatticeGrid: need positive spacing and extent");
    const int side = 2 * n + 1;
    nodes.reserve(static_cast<std::size_t>(side) * side * side);
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
            for (int l = -n; l <= n; ++l) nodes.emplace_back(i * h, j * h, l * h);
}

std::optional<std::size_t> LatticeGrid::match(const WaveVector& target,
                                              double* snap_error) const {
    const int side = 2 * n + 1;
    const long i = std::lround(target.x() / h);
    const long j = std::lround(target.y() / h);
    const long l = std::lround(target.z() / h);
    if (std::abs(i) > n || std::abs(j) > n || std::abs(l) > n) return std::nullopt;
    const std::size_t idx = static_cast<std::size_t>((i + n) * side * side + (j + n) * side +
                                                     (l + n));
    if (snap_error) *snap_error = (target - nodes[idx]).norm();
    return idx;
}

ProductGridsPtr make_product_grids(double spacing, int half_extent,
                                   const std::vector<WaveVector>& kph_nodes) {
    auto grids = std::make_shared<ProductGrids>(ProductGrids{
        kph_nodes, std::vector<double>(kph_nodes.size(), spacing * spacing * spacing),
        LatticeGrid(spacing, half_extent)});
    for (const auto& kph : grids->kph_nodes)
        if (!(kph.norm() > 0.0))
            throw domain_error("make_product_grids: photon wave vector must not vanish");
    return grids;
}

double ProductState::norm() const {
    double sum = 0.0;
    for (std::size_t p = 0; p < values.size(); ++p)
        for (std::size_t i = 0; i < values[p].size(); ++i)
            sum += grids->kph_weights[p] * grids->k.weight() * values[p][i].squaredNorm();
    return std::sqrt(sum);
}

double ProductState::normalization_defect() const {
    double worst = 0.0;
    for (const auto& row : values)
        for (const auto& v : row) worst = std::max(worst, std::abs(v.norm() - 1.0));
    return worst;
}

ProductState make_product_state(
    ProductGridsPtr grids,
    const std::function<VecXc(const WaveVector&, const WaveVector&)>& rule) {
    ProductState state;
    state.grids = std::move(grids);
    state.photon_space = std::make_shared<TwoModeOscSpace>(1, 1);
    state.values.resize(state.grids->kph_nodes.size());
    for (std::size_t p = 0; p < state.values.size(); ++p) {
        state.values[p].resize(state.grids->k.size());
        const WaveVector kph = state.grids->kph_nodes[p];
        parallel_for(state.grids->k.size(), [&](std::size_t i) {
            VecXc v = rule(kph, state.grids->k.nodes[i]);
            if (v.size() != ProductState::pair_dim)
                throw domain_error("make_product_state: pair vector must have dimension 64");
            state.values[p][i] = std::move(v);
        });
    }
    return state;
}

ProductState free_vacuum(ProductGridsPtr grids) {
    return make_product_state(std::move(grids), [](const WaveVector&, const WaveVector&) {
        VecXc v = VecXc::Zero(ProductState::pair_dim);
        v(0) = 1.0;
        return v;
    });
}

cplx inner(const ProductState& a, const ProductState& b) {
    const std::size_t np = a.values.size();
    std::vector<cplx> terms;
    terms.reserve(np * a.grids->k.size());
    for (std::size_t p = 0; p < np; ++p)
        for (std::size_t i = 0; i < a.values[p].size(); ++i)
            terms.push_back(a.grids->kph_weights[p] * a.grids->k.weight() *
                            a.values[p][i].dot(b.values[p][i]));
    return pairwise_sum(terms);
}

namespace {

// Reshape helpers between the 64-vector and the 4x16 (photon x fermion) matrix.
Eigen::Matrix<cplx, 4, 16> as_pair_matrix(const VecXc& v) {
    Eigen::Matrix<cplx, 4, 16> m;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 16; ++b) m(a, b) = v(a * 16 + b);
    return m;
}

VecXc as_pair_vector(const Eigen::Matrix<cplx, 4, 16>& m) {
    VecXc v(ProductState::pair_dim);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 16; ++b) v(a * 16 + b) = m(a, b);
    return v;
}

struct PhotonPiece {
    int pol = 0;     // 0 = H, 1 = V
    int sign = 0;    // +1 for annihilation (e^{-i kph x}), -1 for creation
    Eigen::Matrix4cd op;
};

}  // namespace

HamiltonianAction apply_interaction(const ProductState& state, const PhysicalConstants& pc,
                                    double snap_tol) {
    const auto& grids = *state.grids;
    const auto& space = *state.photon_space;
    HamiltonianAction out;
    out.result.grids = state.grids;
    out.result.photon_space = state.photon_space;
    out.result.values.assign(state.values.size(),
                             std::vector<VecXc>(grids.k.size(),
                                                VecXc::Zero(ProductState::pair_dim)));

    const std::array<PhotonPiece, 4> pieces = {
        PhotonPiece{0, +1, Eigen::Matrix4cd(space.a_h)},
        PhotonPiece{0, -1, Eigen::Matrix4cd(space.ad_h)},
        PhotonPiece{1, +1, Eigen::Matrix4cd(space.a_v)},
        PhotonPiece{1, -1, Eigen::Matrix4cd(space.ad_v)},
    };

    std::vector<ActionDiagnostics> diag(grids.kph_nodes.size());
    for (std::size_t p = 0; p < grids.kph_nodes.size(); ++p) {
        const WaveVector kph = grids.kph_nodes[p];
        const PolarizationBasis basis = polarization_basis(kph);
        const std::array<Vec3, 2> eps = {basis.eps_h, basis.eps_v};
        // (2 pi)^3 from the x-integration against the spatial deltas.
        const double pref = 8.0 * std::pow(std::numbers::pi, 3) * pc.lambda /
                            (2.0 * pc.n0(kph.norm()));
        ActionDiagnostics& d = diag[p];

        parallel_for(grids.k.size(), [&](std::size_t ik) {
            const WaveVector k = grids.k.nodes[ik];
            Eigen::Matrix<cplx, 4, 16> acc = Eigen::Matrix<cplx, 4, 16>::Zero();
            for (const PhotonPiece& piece : pieces) {
                for (const int s1 : {+1, -1})
                    for (const int s2 : {+1, -1}) {
                        const WaveVector target =
                            -static_cast<double>(s2) * (piece.sign * kph + s1 * k);
                        double snap = 0.0;
                        const auto idx = grids.k.match(target, &snap);
                        if (!idx || snap > snap_tol) {
#pragma omp critical(rqed_interaction_diag)
                            {
                                d.dropped += 1;
                                if (idx) d.max_snap_error = std::max(d.max_snap_error, snap);
                            }
                            continue;
                        }
#pragma omp critical(rqed_interaction_diag)
                        {
                            d.matched += 1;
                            d.max_snap_error = std::max(d.max_snap_error, snap);
                        }
                        const WaveVector kprime = grids.k.nodes[*idx];
                        const CurrentKernel kernel = current_kernel(k, kprime, pc);
                        MatXc m = MatXc::Zero(Clifford16::dim, Clifford16::dim);
                        bool found = false;
                        for (const CurrentSector& sec : kernel.sectors)
                            if (sec.s1 == s1 && sec.s2 == s2) {
                                for (int alpha = 0; alpha < 3; ++alpha)
                                    m += eps[piece.pol][alpha] * sec.m[alpha + 1];
                                found = true;
                            }
                        if (!found) continue;
                        const Eigen::Matrix<cplx, 4, 16> v =
                            as_pair_matrix(state.values[p][*idx]);
                        acc += pref * (piece.op * v * m.transpose());
                    }
            }
            out.result.values[p][ik] = as_pair_vector(acc);
        });
    }

    for (const auto& d : diag) {
        out.diagnostics.matched += d.matched;
        out.diagnostics.dropped += d.dropped;
        out.diagnostics.max_snap_error = std::max(out.diagnostics.max_snap_error,
                                                  d.max_snap_error);
    }
    return out;
}

ProductState apply_free(const ProductState& state, const PhysicalConstants& pc) {
    const auto& grids = *state.grids;
    const auto& space = *state.photon_space;
    const Clifford16& cl = clifford_generators();
    const Eigen::Matrix4cd photon_number = (space.ad_h * space.a_h + space.ad_v * space.a_v);

    ProductState out;
    out.grids = state.grids;
    out.photon_space = state.photon_space;
    out.values.assign(state.values.size(), std::vector<VecXc>(grids.k.size()));
    for (std::size_t p = 0; p < grids.kph_nodes.size(); ++p) {
        const double eph = pc.hbar * pc.c * grids.kph_nodes[p].norm();
        parallel_for(grids.k.size(), [&](std::size_t ik) {
            const double eel = pc.hbar * pc.omega(grids.k.nodes[ik].norm());
            const Eigen::Matrix<cplx, 4, 16> v = as_pair_matrix(state.values[p][ik]);
            Eigen::Matrix<cplx, 4, 16> acc = eph * (photon_number * v);
            acc += eel * (v * cl.hamiltonian(1.0).transpose());
            out.values[p][ik] = as_pair_vector(acc);
        });
    }
    return out;
}

HamiltonianAction apply_hamiltonian(const ProductState& state, const PhysicalConstants& pc,
                                    double snap_tol) {
    HamiltonianAction action = apply_interaction(state, pc, snap_tol);
    const ProductState free_part = apply_free(state, pc);
    for (std::size_t p = 0; p < action.result.values.size(); ++p)
        for (std::size_t i = 0; i < action.result.values[p].size(); ++i)
            action.result.values[p][i] += free_part.values[p][i];
    return action;
}

ProductState gauge_transform(const GaugeFunction& lambda, const ProductState& state,
                             const PhysicalConstants& pc) {
    const auto& grids = *state.grids;
    ProductState out;
    out.grids = state.grids;
    out.photon_space = state.photon_space;
    out.values.assign(state.values.size(), std::vector<VecXc>(grids.k.size()));
    for (std::size_t p = 0; p < grids.kph_nodes.size(); ++p) {
        const WaveVector kph = grids.kph_nodes[p];
        parallel_for(grids.k.size(), [&](std::size_t ik) {
            const double l = lambda(kph, grids.k.nodes[ik]);
            Eigen::Matrix<cplx, 16, 1> phases;
            for (int mask = 0; mask < 16; ++mask)
                phases(mask) = std::exp(I * l * pc.q_el *
                                        static_cast<double>(Clifford16::charge_of(
                                            static_cast<std::uint8_t>(mask))));
            VecXc v = state.values[p][ik];
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 16; ++b) v(a * 16 + b) *= phases(b);
            out.values[p][ik] = std::move(v);
        });
    }
    return out;
}

namespace {

double distance(const ProductState& a, const ProductState& b) {
    double sum = 0.0;
    for (std::size_t p = 0; p < a.values.size(); ++p)
        for (std::size_t i = 0; i < a.values[p].size(); ++i)
            sum += a.grids->kph_weights[p] * a.grids->k.weight() *
                   (a.values[p][i] - b.values[p][i]).squaredNorm();
    return std::sqrt(sum);
}

}  // namespace

double gauge_commutator_defect(const GaugeFunction& lambda, const ProductState& state,
                               const PhysicalConstants& pc) {
    const ProductState hz = apply_interaction(state, pc).result;
    const ProductState uz = gauge_transform(lambda, state, pc);
    const ProductState hu = apply_interaction(uz, pc).result;
    auto neg = [&](const WaveVector& kph, const WaveVector& k) { return -lambda(kph, k); };
    const ProductState uhu = gauge_transform(neg, hu, pc);
    const double scale = hz.norm();
    if (scale == 0.0) return 0.0;
    return distance(uhu, hz) / scale;
}

double charge_conservation_check(const ProductState& state, const PhysicalConstants& pc) {
    const Clifford16& cl = clifford_generators();
    const MatXc q = cl.charge_operator(pc.q_el);
    auto apply_q = [&](const ProductState& s) {
        ProductState out;
        out.grids = s.grids;
        out.photon_space = s.photon_space;
        out.values.assign(s.values.size(), std::vector<VecXc>(s.grids->k.size()));
        for (std::size_t p = 0; p < s.values.size(); ++p)
            parallel_for(s.grids->k.size(), [&](std::size_t i) {
                const Eigen::Matrix<cplx, 4, 16> v = as_pair_matrix(s.values[p][i]);
                out.values[p][i] = as_pair_vector(v * q.transpose());
            });
        return out;
    };
    const ProductState hz = apply_hamiltonian(state, pc).result;
    const ProductState qhz = apply_q(hz);
    const ProductState hqz = apply_hamiltonian(apply_q(state), pc).result;
    const double scale = hz.norm();
    if (scale == 0.0) return 0.0;
    return distance(qhz, hqz) / scale;
}

GaugeFunction transverse_gauge(const std::function<double(const WaveVector&, double)>& f) {
    return [f](const WaveVector& kph, const WaveVector& k) {
        const Vec3 khat = kph / kph.norm();
        const Vec3 perp = k - k.dot(khat) * khat;
        return f(kph, perp.norm());
    };
}

GaugeFunction longitudinal_gauge(double scale) {
    return [scale](const WaveVector& kph, const WaveVector& k) {
        return scale * k.dot(kph / kph.norm());
    };
}

}
