#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <utility>

namespace fence {

using Eigen::Matrix3d;
using Eigen::Vector3d;

/// Completes a unit vector to a right-handed orthonormal basis (u, v, w).
/// Deterministic: depends only on the direction of w.
Matrix3d orthonormal_frame(const Vector3d& w);

struct CoreCircle {
    Vector3d center;
    Vector3d normal;
    double radius;

    CoreCircle(Vector3d c, Vector3d n, double r);

    Vector3d point_at(double theta) const;
    Vector3d tangent_at(double theta) const; // unit, d(point)/d(theta) / radius

private:
    Matrix3d frame_; // columns u, v, normal
public:
    const Matrix3d& frame() const { return frame_; }
};

/// Solid torus of revolution: a disk of radius `minor` revolved about the
/// axis line at distance `major` from the disk center.
struct SolidTorus {
    Vector3d center;
    Vector3d axis;
    double major;
    double minor;

    SolidTorus(Vector3d c, Vector3d a, double R, double r);

    CoreCircle core() const { return CoreCircle(center, axis, major); }
    bool contains(const Vector3d& p) const;
};

/// Distance from p to the core circle of t: sqrt((sqrt(x^2+y^2) - R)^2 + z^2)
/// in the torus frame. Well-defined on the axis, where it is sqrt(R^2 + z^2).
double core_distance(const SolidTorus& t, const Vector3d& p);

/// Diameter of the solid torus as a subset of R^3: 2 (R + r).
double diameter(const SolidTorus& t);

/// 2-fold ramification: two coaxial subtori from two disjoint subdisks of the
/// meridian disk, displaced +-beta*r along the axis with minor gamma*r.
/// Requires 0 < gamma < beta and beta + gamma < 1.
std::pair<SolidTorus, SolidTorus> ramify2(const SolidTorus& t, double beta, double gamma);

/// Exact separation margins of the ramification pair.
inline double ramify2_disjoint_margin(const SolidTorus& t, double beta, double gamma) {
    return 2 * t.minor * (beta - gamma);
}
inline double ramify2_containment_margin(const SolidTorus& t, double beta, double gamma) {
    return t.minor * (1 - beta - gamma);
}

} // namespace fence
