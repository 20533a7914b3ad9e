#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rqed/clifford.hpp"
#include "rqed/constants.hpp"
#include "rqed/oscillator.hpp"
#include "rqed/photon.hpp"

namespace rqed {

/// Cubic wave-vector lattice { (i,j,l) h : |i|,|j|,|l| <= n } with uniform
/// weight h^3. Lattice alignment makes the momentum deltas of the interaction
/// exactly resolvable: k +- k_ph lands on a node or is reported as leakage.
struct LatticeGrid {
    double h = 0.0;
    int n = 0;
    std::vector<WaveVector> nodes;

    LatticeGrid(double spacing, int half_extent);

    std::size_t size() const { return nodes.size(); }
    double weight() const { return h * h * h; }

    /// Nearest-node lookup; returns the flat index and the snap distance, or
    /// nothing when the target lies outside the box.
    std::optional<std::size_t> match(const WaveVector& target, double* snap_error = nullptr) const;
};

/// Paired wave-vector grids of the interacting system.
struct ProductGrids {
    std::vector<WaveVector> kph_nodes;
    std::vector<double> kph_weights;
    LatticeGrid k;

    std::size_t pairs() const { return kph_nodes.size() * k.size(); }
};

using ProductGridsPtr = std::shared_ptr<const ProductGrids>;

/// Photon wave vectors for scenarios: lattice-aligned, excluding the origin.
ProductGridsPtr make_product_grids(double spacing, int half_extent,
                                   const std::vector<WaveVector>& kph_nodes);

/// Field over pairs (k_ph, k) with values in H_em x H_16; at most one photon
/// per polarization, so the photon factor is 4-dimensional.
struct ProductState {
    ProductGridsPtr grids;
    std::shared_ptr<const TwoModeOscSpace> photon_space;  // cutoff 1 per mode
    std::vector<std::vector<VecXc>> values;               // [i_ph][i_k], dim 64

    static constexpr Eigen::Index photon_dim = 4;
    static constexpr Eigen::Index pair_dim = photon_dim * Clifford16::dim;

    double norm() const;
    double normalization_defect() const;
};

ProductState make_product_state(
    ProductGridsPtr grids,
    const std::function<VecXc(const WaveVector& k_ph, const WaveVector& k)>& rule);

/// Free vacuum |0,0,empty> at every pair.
ProductState free_vacuum(ProductGridsPtr grids);

/// Quadrature inner product sum over pairs of w_ph w_k <a|b> (without the ell^6 factor).
cplx inner(const ProductState& a, const ProductState& b);

struct ActionDiagnostics {
    std::size_t matched = 0;
    std::size_t dropped = 0;
    double max_snap_error = 0.0;
};

struct HamiltonianAction {
    ProductState result;
    ActionDiagnostics diagnostics;
};

/// H^I zeta: photon emission/absorption with momentum matching on the k-lattice.
HamiltonianAction apply_interaction(const ProductState& state, const PhysicalConstants& pc,
                                    double snap_tol = 1e-9);

/// Free part (H^ph + H^el) zeta.
ProductState apply_free(const ProductState& state, const PhysicalConstants& pc);

/// Full H zeta = (H^ph + H^el + H^I) zeta.
HamiltonianAction apply_hamiltonian(const ProductState& state, const PhysicalConstants& pc,
                                    double snap_tol = 1e-9);

using GaugeFunction = std::function<double(const WaveVector& k_ph, const WaveVector& k)>;

/// [U_Lambda zeta]_{kph,k} = e^{i Lambda(kph,k) Q} zeta_{kph,k}.
ProductState gauge_transform(const GaugeFunction& lambda, const ProductState& state,
                             const PhysicalConstants& pc);

/// Relative commutator defect || U^-1 H^I U zeta - H^I zeta || / || H^I zeta ||.
double gauge_commutator_defect(const GaugeFunction& lambda, const ProductState& state,
                               const PhysicalConstants& pc);

/// Relative defect || [Q, H] zeta || / || H zeta ||.
double charge_conservation_check(const ProductState& state, const PhysicalConstants& pc);

/// Admissible gauge preset: any function of kph and |k_perp| commutes with H.
GaugeFunction transverse_gauge(const std::function<double(const WaveVector&, double)>& f);

/// Longitudinal counterexample Lambda = scale * (k . kph_hat).
GaugeFunction longitudinal_gauge(double scale);

}
