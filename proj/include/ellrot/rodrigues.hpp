// rodrigues.hpp
// Rotations as exponentials of B-skew matrices: the closed forms in two and
// three dimensions, the defining power series, and recovery of axis and
// angle from a rotation matrix.

#pragma once

#include <cmath>

#include "ellrot/bmatrix.hpp"
#include "ellrot/error.hpp"
#include "ellrot/mat.hpp"
#include "ellrot/space.hpp"

namespace ellrot {

/// Rotation of the ellipse a1 x^2 + a2 y^2 = 1 by angle theta.
[[nodiscard]] inline Mat rotate2d(const EllipticSpace& s, double theta)
{
    if (s.dim() != 2)
        throw Error(ErrorCode::DimensionMismatch, "rotate2d needs a two dimensional space");
    const double c = std::cos(theta);
    const double n = std::sin(theta);
    const double ratio = std::sqrt(s.coeff(1)) / std::sqrt(s.coeff(0));
    Mat r(2);
    r(0, 0) = c;
    r(0, 1) = -ratio * n;
    r(1, 0) = n / ratio;
    r(1, 1) = c;
    return r;
}

/// Rotation about the B-unit axis u by angle theta, as the closed form of
/// e^{theta T_u}.  The axis must be unit to within 1e-6; it is used as given.
[[nodiscard]] inline Mat rodrigues3d(const EllipticSpace& s, const Vec& u, double theta)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch, "rodrigues3d needs a three dimensional space");
    detail::require_dim(s, u, "axis");
    if (std::abs(norm(s, u) - 1.0) > kAxisUnitTol)
        throw Error(ErrorCode::AxisNotUnit, "rotation axis must have B-norm 1");

    const double a1 = s.coeff(0), a2 = s.coeff(1), a3 = s.coeff(2);
    const double d = s.delta();
    const double C = std::cos(theta);
    const double S = std::sin(theta);
    const double K = C - 1.0;
    Mat r(3);
    r(0, 0) = a1 * u[0] * u[0] + (1.0 - a1 * u[0] * u[0]) * C;
    r(0, 1) = -d * u[2] * S / a1 - a2 * u[0] * u[1] * K;
    r(0, 2) = d * u[1] * S / a1 - a3 * u[0] * u[2] * K;
    r(1, 0) = d * u[2] * S / a2 - a1 * u[0] * u[1] * K;
    r(1, 1) = a2 * u[1] * u[1] + (1.0 - a2 * u[1] * u[1]) * C;
    r(1, 2) = -d * u[0] * S / a2 - a3 * u[1] * u[2] * K;
    r(2, 0) = -d * u[1] * S / a3 - a1 * u[0] * u[2] * K;
    r(2, 1) = d * u[0] * S / a3 - a2 * u[1] * u[2] * K;
    r(2, 2) = a3 * u[2] * u[2] + (1.0 - a3 * u[2] * u[2]) * C;
    return r;
}

/// Truncated power series of e^{theta T} for a B-skew T.  Serves as an
/// independent cross-check of the closed forms; `terms` counts the powers of
/// T beyond the identity, so the highest summand is (theta T)^terms / terms!.
/// The default keeps the tail below 2e-13 for |theta| <= pi.
[[nodiscard]] inline Mat exp_series(const EllipticSpace& s, const Mat& t, double theta,
                                    int terms = 24)
{
    detail::require_dim(s, t, "matrix");
    if (!is_b_skew(s, t))
        throw Error(ErrorCode::NotSkew, "exp_series needs a B-skew matrix");
    Mat sum = Mat::identity(s.dim());
    Mat power = Mat::identity(s.dim());
    for (int k = 1; k <= terms; ++k) {
        power = power * t;
        power *= theta / k;
        sum += power;
    }
    return sum;
}

struct AxisAngle {
    Vec axis;
    double angle = 0.0;
    bool degenerate = false;  // angle ~ 0: every axis fixes R, none is returned
};

/// Recover axis and angle from a three dimensional elliptical rotation.
/// The angle lands in [0, pi] with the axis sign chosen so that
/// rodrigues3d(axis, angle) reproduces R; at angle pi, where both axis signs
/// work, the first nonzero coordinate is made positive.
[[nodiscard]] inline AxisAngle axis_angle_of(const EllipticSpace& s, const Mat& r,
                                             double tol = kDefaultTol)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch, "axis_angle_of needs a three dimensional space");
    if (classify(s, r, tol) != MatrixClass::Rotation)
        throw Error(ErrorCode::NotARotation, "matrix is not an elliptical rotation");

    // The closed form gives a3 r21 - a2 r12 = 2 delta u1 sin(theta) and its
    // cyclic images, so v below equals sin(theta) u.  Recovering the angle as
    // atan2(|v|_B, cos) stays accurate where acos of the trace loses half the
    // digits, namely near theta = 0 and theta = pi.
    const double a1 = s.coeff(0), a2 = s.coeff(1), a3 = s.coeff(2);
    const double two_delta = 2.0 * s.delta();
    const Vec v{(a3 * r(2, 1) - a2 * r(1, 2)) / two_delta,
                (a1 * r(0, 2) - a3 * r(2, 0)) / two_delta,
                (a2 * r(1, 0) - a1 * r(0, 1)) / two_delta};
    const double c = (r.trace() - 1.0) / 2.0;
    const double angle = std::atan2(norm(s, v), c);
    if (angle < 1e-7) return {Vec(3), 0.0, true};

    // The axis spans the null space of R - I; the Euclidean cross product of
    // its two most independent rows recovers it.
    const Mat m = r - Mat::identity(3);
    Vec best(3);
    double best_norm2 = -1.0;
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    for (const auto& p : pairs) {
        const std::size_t i = p[0], j = p[1];
        Vec cr{m(i, 1) * m(j, 2) - m(i, 2) * m(j, 1),
               m(i, 2) * m(j, 0) - m(i, 0) * m(j, 2),
               m(i, 0) * m(j, 1) - m(i, 1) * m(j, 0)};
        const double n2 = cr[0] * cr[0] + cr[1] * cr[1] + cr[2] * cr[2];
        if (n2 > best_norm2) {
            best_norm2 = n2;
            best = cr;
        }
    }
    Vec axis = best * (1.0 / norm(s, best));

    const double plus = max_abs_diff(rodrigues3d(s, axis, angle), r);
    const double minus = max_abs_diff(rodrigues3d(s, -axis, angle), r);
    if (minus < plus) axis = -axis;
    if (std::abs(angle - 3.141592653589793) < 1e-12) {
        for (std::size_t i = 0; i < 3; ++i) {
            if (axis[i] == 0.0) continue;
            if (axis[i] < 0.0) axis = -axis;
            break;
        }
    }
    return {axis, angle, false};
}

}  // namespace ellrot
