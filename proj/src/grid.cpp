#include "rqed/grid.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>

#include "rqed/errors.hpp"
#include "rqed/reduce.hpp"

namespace rqed {

GaussRule gauss_legendre(int n) {
    if (n <= 0) throw config_error("gauss_legendre: order must be positive");
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            const double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

GridPtr make_grid(double k_max, int n_radial, int n_polar, int n_azimuthal) {
    if (!(k_max > 0.0)) throw config_error("make_grid: K_max must be positive");
    if (n_radial <= 0 || n_polar <= 0 || n_azimuthal <= 0)
        throw config_error("make_grid: node counts must be positive");

    const GaussRule radial = gauss_legendre(n_radial);
    const GaussRule polar = gauss_legendre(n_polar);

    auto grid = std::make_shared<QuadratureGrid>();
    grid->scheme = GridScheme{k_max, n_radial, n_polar, n_azimuthal};
    grid->nodes.reserve(static_cast<std::size_t>(n_radial) * n_polar * n_azimuthal);
    grid->weights.reserve(grid->nodes.capacity());

    const double dphi = 2.0 * std::numbers::pi / n_azimuthal;
    for (int ir = 0; ir < n_radial; ++ir) {
        const double r = 0.5 * k_max * (radial.nodes[ir] + 1.0);
        const double wr = 0.5 * k_max * radial.weights[ir] * r * r;
        for (int ip = 0; ip < n_polar; ++ip) {
            const double ct = polar.nodes[ip];
            const double st = std::sqrt(1.0 - ct * ct);
            const double wp = polar.weights[ip];
            for (int ia = 0; ia < n_azimuthal; ++ia) {
                const double phi = dphi * (ia + 0.5);
                grid->nodes.emplace_back(r * st * std::cos(phi), r * st * std::sin(phi), r * ct);
                grid->weights.push_back(wr * wp * dphi);
            }
        }
    }
    return grid;
}

double QuadratureGrid::integrate(const std::function<double(const WaveVector&)>& f) const {
    return map_sum<double>(size(), [&](std::size_t i) { return weights[i] * f(nodes[i]); });
}

cplx QuadratureGrid::integrate_complex(const std::function<cplx(const WaveVector&)>& f) const {
    return map_sum<cplx>(size(), [&](std::size_t i) { return weights[i] * f(nodes[i]); });
}

void write_grid_csv(const QuadratureGrid& grid, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw config_error("write_grid_csv: cannot open " + path);
    std::fprintf(fp, "k_x,k_y,k_z,weight\n");
    for (std::size_t i = 0; i < grid.size(); ++i)
        std::fprintf(fp, "%.17g,%.17g,%.17g,%.17g\n", grid.nodes[i].x(), grid.nodes[i].y(),
                     grid.nodes[i].z(), grid.weights[i]);
    std::fclose(fp);
}

}
