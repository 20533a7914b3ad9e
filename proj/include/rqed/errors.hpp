#pragma once

#include <stdexcept>
#include <string>

namespace rqed {

/// Bad scenario/grid configuration (unknown key, non-positive count, ...).
struct config_error : std::runtime_error {
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Input outside the mathematical domain of an operation (zero wave vector, empty field, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// Amplitude too large for the configured Fock-space cutoff.
struct truncation_error : std::runtime_error {
    explicit truncation_error(const std::string& what) : std::runtime_error(what) {}
};

/// A quadrature sum came out non-finite.
struct divergence_error : std::runtime_error {
    explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Contract violation detected at run time (e.g. field not properly normalized).
struct contract_error : std::runtime_error {
    explicit contract_error(const std::string& what) : std::runtime_error(what) {}
};

/// Trial-state normalization cannot be satisfied; carries the worst node pair.
struct feasibility_error : std::runtime_error {
    feasibility_error(const std::string& what, std::size_t pair_index, double rho_vac)
        : std::runtime_error(what), pair_index(pair_index), rho_vac(rho_vac) {}
    std::size_t pair_index;
    double rho_vac;
};

/// Linear construction (e.g. of the 16-dim charge conjugation) found no consistent solution.
struct construction_error : std::runtime_error {
    explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

}
