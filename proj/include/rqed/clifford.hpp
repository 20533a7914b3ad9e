#pragma once

#include <array>
#include <cstdint>

#include "rqed/types.hpp"

namespace rqed {

/// Jordan-Wigner representation of four fermionic modes on the 16-dimensional
/// space. Mode s = 1..4 (electron up/down, positron down/up); sigma_minus[s]
/// creates, sigma_plus[s] annihilates, and all entries are integers.
struct Clifford16 {
    std::array<MatXc, 4> sigma_plus;
    std::array<MatXc, 4> sigma_minus;
    std::array<MatXc, 4> number;

    Clifford16();

    static constexpr Eigen::Index dim = 16;

    /// Basis vector |Lambda> built by the ordered product
    /// [s4^-]^{4 in L} [s3^-]^{3 in L} [s2^-]^{2 in L} [s1^-]^{1 in L} |empty>;
    /// bit s-1 of mask flags s in Lambda.
    VecXc basis_state(std::uint8_t mask) const;

    /// Net charge of the occupation subset: +1 per electron mode, -1 per positron mode.
    static int charge_of(std::uint8_t mask) {
        return static_cast<int>((mask & 1u) != 0) + static_cast<int>((mask & 2u) != 0) -
               static_cast<int>((mask & 4u) != 0) - static_cast<int>((mask & 8u) != 0);
    }

    /// Q = q_el (N1 + N2 - N3 - N4).
    MatXc charge_operator(double q_el) const;

    /// H = hbar omega (N1 + N2 + N3 + N4).
    MatXc hamiltonian(double hbar_omega) const;
};

const Clifford16& clifford_generators();

}
