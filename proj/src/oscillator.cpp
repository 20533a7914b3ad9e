#include "rqed/oscillator.hpp"

#include <cmath>
#include <unsupported/Eigen/KroneckerProduct>

#include "rqed/errors.hpp"

namespace rqed {

OscillatorSpace::OscillatorSpace(int n_max) : n_max(n_max) {
    if (n_max < 1) throw config_error("OscillatorSpace: cutoff must be at least 1");
    a = MatXc::Zero(dim(), dim());
    for (int n = 1; n <= n_max; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    adag = a.adjoint();
}

TwoModeOscSpace::TwoModeOscSpace(int n_max_h, int n_max_v)
    : n_max_h(n_max_h), n_max_v(n_max_v) {
    const OscillatorSpace h(n_max_h);
    const OscillatorSpace v(n_max_v);
    const MatXc ih = MatXc::Identity(h.dim(), h.dim());
    const MatXc iv = MatXc::Identity(v.dim(), v.dim());
    a_h = Eigen::kroneckerProduct(h.a, iv);
    ad_h = Eigen::kroneckerProduct(h.adag, iv);
    a_v = Eigen::kroneckerProduct(ih, v.a);
    ad_v = Eigen::kroneckerProduct(ih, v.adag);
}

VecXc TwoModeOscSpace::basis_state(int m, int n) const {
    VecXc e = VecXc::Zero(dim());
    e(index(m, n)) = 1.0;
    return e;
}

VecXc coherent_state(cplx z, const OscillatorSpace& space) {
    const double z2 = std::norm(z);
    if (z2 > space.n_max / 4.0)
        throw truncation_error("coherent_state: |z|^2 exceeds n_max/4 truncation guard");
    VecXc v(space.dim());
    cplx term = 1.0;  // z^n / sqrt(n!)
    v(0) = term;
    for (int n = 1; n <= space.n_max; ++n) {
        term *= z / std::sqrt(static_cast<double>(n));
        v(n) = term;
    }
    v /= v.norm();
    return v;
}

VecXc coherent_state(cplx z, cplx w, const TwoModeOscSpace& space) {
    const OscillatorSpace h(space.n_max_h), v(space.n_max_v);
    const VecXc zh = coherent_state(z, h);
    const VecXc wv = coherent_state(w, v);
    VecXc out(space.dim());
    for (int m = 0; m <= space.n_max_h; ++m)
        for (int n = 0; n <= space.n_max_v; ++n) out(space.index(m, n)) = zh(m) * wv(n);
    return out;
}

}
