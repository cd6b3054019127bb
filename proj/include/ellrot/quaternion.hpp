// quaternion.hpp
// Elliptic quaternions: the four dimensional algebra with i^2 = -a1,
// j^2 = -a2, k^2 = -a3 attached to a three dimensional elliptic space.
// Unit elements encode elliptical rotations through twice their polar angle.

#pragma once

#include <cmath>

#include "ellrot/error.hpp"
#include "ellrot/mat.hpp"
#include "ellrot/space.hpp"

namespace ellrot {

class EllipticQuaternion {
public:
    EllipticQuaternion(EllipticSpace space, double scalar, Vec vector)
        : space_(std::move(space)), s_(scalar), v_(std::move(vector))
    {
        if (space_.dim() != 3)
            throw Error(ErrorCode::DimensionMismatch,
                        "elliptic quaternions need a three dimensional space");
        if (v_.size() != 3)
            throw Error(ErrorCode::DimensionMismatch, "vector part must have three components");
    }

    EllipticQuaternion(EllipticSpace space, double q0, double q1, double q2, double q3)
        : EllipticQuaternion(std::move(space), q0, Vec{q1, q2, q3})
    {
    }

    [[nodiscard]] const EllipticSpace& space() const noexcept { return space_; }
    [[nodiscard]] double scalar() const noexcept { return s_; }
    [[nodiscard]] const Vec& vector() const noexcept { return v_; }

    /// Components as (q0, q1, q2, q3).
    [[nodiscard]] double operator[](std::size_t i) const { return i == 0 ? s_ : v_[i - 1]; }

private:
    EllipticSpace space_;
    double s_;
    Vec v_;
};

namespace detail {

inline void require_same_space(const EllipticQuaternion& p, const EllipticQuaternion& q)
{
    if (!(p.space() == q.space()))
        throw Error(ErrorCode::SpaceMismatch, "operands live in different quaternion algebras");
}

}  // namespace detail

/// Product from the scalar/vector split: scalar p0 q0 - B(Vp, Vq), vector
/// p0 Vq + q0 Vp + V(Vp x Vq).
[[nodiscard]] inline EllipticQuaternion qmul(const EllipticQuaternion& p,
                                             const EllipticQuaternion& q)
{
    detail::require_same_space(p, q);
    const EllipticSpace& s = p.space();
    const double scalar = p.scalar() * q.scalar() - inner(s, p.vector(), q.vector());
    const Vec vector =
        p.scalar() * q.vector() + q.scalar() * p.vector() + cross3(s, p.vector(), q.vector());
    return {s, scalar, vector};
}

[[nodiscard]] inline EllipticQuaternion operator*(const EllipticQuaternion& p,
                                                  const EllipticQuaternion& q)
{
    return qmul(p, q);
}

[[nodiscard]] inline EllipticQuaternion qconj(const EllipticQuaternion& q)
{
    return {q.space(), q.scalar(), -q.vector()};
}

/// N_q = sqrt(q0^2 + a1 q1^2 + a2 q2^2 + a3 q3^2).
[[nodiscard]] inline double qnorm(const EllipticQuaternion& q)
{
    return std::sqrt(q.scalar() * q.scalar() + inner(q.space(), q.vector(), q.vector()));
}

/// conj(q) / N_q^2, so that q * qinv(q) = 1.
[[nodiscard]] inline EllipticQuaternion qinv(const EllipticQuaternion& q)
{
    const double n = qnorm(q);
    if (n == 0.0) throw Error(ErrorCode::ZeroQuaternion, "zero quaternion has no inverse");
    const double f = 1.0 / (n * n);
    return {q.space(), q.scalar() * f, -f * q.vector()};
}

struct PolarForm {
    double magnitude = 0.0;
    double angle = 0.0;   // in [0, pi]
    Vec axis;             // B-unit, zero when pure_scalar
    bool pure_scalar = false;
};

/// q = N_q (cos theta + axis sin theta) with a B-unit axis.
[[nodiscard]] inline PolarForm polar(const EllipticQuaternion& q)
{
    const double n = qnorm(q);
    if (n == 0.0) throw Error(ErrorCode::ZeroQuaternion, "zero quaternion has no polar form");
    const double vn = norm(q.space(), q.vector());
    if (vn == 0.0) return {n, q.scalar() > 0.0 ? 0.0 : 3.141592653589793, Vec(3), true};
    return {n, std::atan2(vn, q.scalar()), q.vector() * (1.0 / vn), false};
}

/// Unit quaternion cos(theta/2) + u sin(theta/2) whose rotation has the
/// given axis and angle.
[[nodiscard]] inline EllipticQuaternion from_axis_angle(const EllipticSpace& s, const Vec& axis,
                                                        double theta)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch,
                    "elliptic quaternions need a three dimensional space");
    detail::require_dim(s, axis, "axis");
    if (std::abs(norm(s, axis) - 1.0) > kAxisUnitTol)
        throw Error(ErrorCode::AxisNotUnit, "rotation axis must have B-norm 1");
    return {s, std::cos(theta / 2.0), std::sin(theta / 2.0) * axis};
}

/// Rotation matrix of the unit quaternion q; q and -q give the same matrix.
[[nodiscard]] inline Mat to_rotation_matrix(const EllipticQuaternion& q, double tol = kDefaultTol)
{
    if (std::abs(qnorm(q) - 1.0) > tol)
        throw Error(ErrorCode::NotUnit, "only unit quaternions represent rotations");
    const EllipticSpace& s = q.space();
    const double a1 = s.coeff(0), a2 = s.coeff(1), a3 = s.coeff(2);
    const double d = s.delta();
    const double q0 = q.scalar();
    const double q1 = q.vector()[0], q2 = q.vector()[1], q3 = q.vector()[2];
    Mat r(3);
    r(0, 0) = q0 * q0 + a1 * q1 * q1 - a2 * q2 * q2 - a3 * q3 * q3;
    r(0, 1) = 2.0 * a2 * q1 * q2 - 2.0 * q0 * q3 * d / a1;
    r(0, 2) = 2.0 * a3 * q1 * q3 + 2.0 * q0 * q2 * d / a1;
    r(1, 0) = 2.0 * a1 * q1 * q2 + 2.0 * q0 * q3 * d / a2;
    r(1, 1) = q0 * q0 - a1 * q1 * q1 + a2 * q2 * q2 - a3 * q3 * q3;
    r(1, 2) = 2.0 * a3 * q2 * q3 - 2.0 * q0 * q1 * d / a2;
    r(2, 0) = 2.0 * a1 * q1 * q3 - 2.0 * q0 * q2 * d / a3;
    r(2, 1) = 2.0 * a2 * q2 * q3 + 2.0 * q0 * q1 * d / a3;
    r(2, 2) = q0 * q0 - a1 * q1 * q1 - a2 * q2 * q2 + a3 * q3 * q3;
    return r;
}

/// Vector part of q (0, v) q^{-1} for unit q: v rotated by the rotation
/// of q.
[[nodiscard]] inline Vec rotate_vector(const EllipticQuaternion& q, const Vec& v,
                                       double tol = kDefaultTol)
{
    if (std::abs(qnorm(q) - 1.0) > tol)
        throw Error(ErrorCode::NotUnit, "only unit quaternions represent rotations");
    const EllipticQuaternion pure{q.space(), 0.0, v};
    return qmul(qmul(q, pure), qinv(q)).vector();
}

}  // namespace ellrot
