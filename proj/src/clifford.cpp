#include "rqed/clifford.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace rqed {

namespace {

MatXc kron4(const MatXc& m1, const MatXc& m2, const MatXc& m3, const MatXc& m4) {
    return Eigen::kroneckerProduct(Eigen::kroneckerProduct(m1, m2).eval(),
                                   Eigen::kroneckerProduct(m3, m4).eval());
}

}  // namespace

Clifford16::Clifford16() {
    MatXc id = MatXc::Identity(2, 2);
    MatXc z(2, 2), plus(2, 2);
    z << 1.0, 0.0, 0.0, -1.0;
    plus << 0.0, 1.0, 0.0, 0.0;  // annihilates the occupied state (0,1)^T

    for (int s = 0; s < 4; ++s) {
        std::array<MatXc, 4> factors{id, id, id, id};
        for (int t = 0; t < s; ++t) factors[t] = z;
        factors[s] = plus;
        sigma_plus[s] = kron4(factors[0], factors[1], factors[2], factors[3]);
        sigma_minus[s] = sigma_plus[s].adjoint();
        number[s] = sigma_minus[s] * sigma_plus[s];
    }
}

VecXc Clifford16::basis_state(std::uint8_t mask) const {
    VecXc v = VecXc::Zero(dim);
    v(0) = 1.0;  // |empty> = e1 x e1 x e1 x e1
    for (int s = 0; s < 4; ++s)
        if (mask & (1u << s)) v = sigma_minus[s] * v;
    return v;
}

MatXc Clifford16::charge_operator(double q_el) const {
    return q_el * (number[0] + number[1] - number[2] - number[3]);
}

MatXc Clifford16::hamiltonian(double hbar_omega) const {
    return hbar_omega * (number[0] + number[1] + number[2] + number[3]);
}

const Clifford16& clifford_generators() {
    static const Clifford16 instance;
    return instance;
}

}
