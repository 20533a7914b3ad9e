#pragma once

#include "rqed/types.hpp"

namespace rqed {

/// Truncated single-mode boson Fock space with ladder matrices on levels 0..n_max.
struct OscillatorSpace {
    int n_max = 0;
    MatXc a;
    MatXc adag;

    explicit OscillatorSpace(int n_max);

    Eigen::Index dim() const { return n_max + 1; }
    MatXc number() const { return adag * a; }
};

/// Two boson modes (H and V polarization) on the tensor product space,
/// basis |m,n> with index m*(n_max_v+1)+n.
struct TwoModeOscSpace {
    int n_max_h = 0;
    int n_max_v = 0;
    MatXc a_h, ad_h, a_v, ad_v;

    TwoModeOscSpace(int n_max_h, int n_max_v);

    Eigen::Index dim() const { return (n_max_h + 1) * (n_max_v + 1); }
    Eigen::Index index(int m, int n) const { return m * (n_max_v + 1) + n; }
    VecXc basis_state(int m, int n) const;
};

/// Normalized truncation of the coherent state exp(-|z|^2/2) sum z^n/sqrt(n!) |n>.
/// Throws truncation_error when |z|^2 > n_max/4.
VecXc coherent_state(cplx z, const OscillatorSpace& space);

/// Two-mode coherent state |z,w>.
VecXc coherent_state(cplx z, cplx w, const TwoModeOscSpace& space);

}
