#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rqed/types.hpp"

namespace rqed {

/// Nodes and weights of a Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule of order n (Newton iteration on Legendre polynomials).
GaussRule gauss_legendre(int n);

/// Descriptor of the spherical product scheme behind a grid.
struct GridScheme {
    double k_max = 0.0;
    int n_radial = 0;
    int n_polar = 0;
    int n_azimuthal = 0;
};

/// Quadrature grid over the truncated ball 0 < |k| <= K_max. Weights carry the
/// full volume element; no node sits at the origin.
struct QuadratureGrid {
    std::vector<WaveVector> nodes;
    std::vector<double> weights;
    GridScheme scheme;

    std::size_t size() const { return nodes.size(); }

    /// Quadrature of a scalar function of k over the grid, deterministic order.
    double integrate(const std::function<double(const WaveVector&)>& f) const;
    cplx integrate_complex(const std::function<cplx(const WaveVector&)>& f) const;
};

using GridPtr = std::shared_ptr<const QuadratureGrid>;

/// Product quadrature in spherical coordinates: Gauss-Legendre radially and in
/// cos(theta), uniform in the periodic azimuthal angle. Weights include the
/// r^2 sin(theta) Jacobian.
GridPtr make_grid(double k_max, int n_radial, int n_polar, int n_azimuthal);

/// Write the grid as CSV rows k_x,k_y,k_z,weight.
void write_grid_csv(const QuadratureGrid& grid, const std::string& path);

}
