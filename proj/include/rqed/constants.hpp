#pragma once

#include <cmath>
#include <numbers>

#include "rqed/errors.hpp"

namespace rqed {

/// Physical scales of the model. Defaults are natural units hbar = c = ell = 1;
/// the coupling length lambda, inverse Compton length kappa and unit charge q_el
/// stay free parameters.
struct PhysicalConstants {
    double hbar = 1.0;
    double c = 1.0;
    double ell = 1.0;
    double lambda = 1.0;
    double kappa = 1.0;
    double q_el = 1.0;

    void validate() const {
        if (!(hbar > 0 && c > 0 && ell > 0 && lambda > 0 && kappa > 0 && q_el > 0))
            throw config_error("physical constants must all be strictly positive");
    }

    /// Massless normalization factor N0(k) = sqrt((2 pi)^3 2 |k| ell).
    double n0(double k_abs) const {
        return std::sqrt(8.0 * std::pow(std::numbers::pi, 3) * 2.0 * k_abs * ell);
    }

    /// Massive dispersion omega(k) = c sqrt(kappa^2 + |k|^2).
    double omega(double k_abs) const { return c * std::sqrt(kappa * kappa + k_abs * k_abs); }

    /// Massive normalization factor N_m(k) = sqrt((2 pi)^3 2 ell omega/c).
    double nm(double k_abs) const {
        return std::sqrt(8.0 * std::pow(std::numbers::pi, 3) * 2.0 * ell * omega(k_abs) / c);
    }
};

}
