#pragma once

#include <Eigen/Dense>
#include <complex>

namespace rqed {

using cplx = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using VecXc = Eigen::VectorXcd;
using MatXc = Eigen::MatrixXcd;
using Mat4c = Eigen::Matrix4cd;
using Vec4c = Eigen::Vector4cd;

/// Wave vector labelling one irreducible component of the field.
using WaveVector = Vec3;

inline constexpr cplx I{0.0, 1.0};

/// Point (x^0, x) in Minkowski space, metric (+,-,-,-).
struct SpacetimePoint {
    double x0 = 0.0;
    Vec3 x = Vec3::Zero();
};

/// k_mu x^mu for on-shell k with time component k0.
inline double minkowski_phase(double k0, const Vec3& k, const SpacetimePoint& p) {
    return k0 * p.x0 - k.dot(p.x);
}

}
