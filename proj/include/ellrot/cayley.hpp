// cayley.hpp
// The Cayley transform between B-skew matrices and elliptical rotations:
// trigonometry-free construction, its closed form in three dimensions, and
// the inverse map.

#pragma once

#include <cmath>

#include "ellrot/bmatrix.hpp"
#include "ellrot/error.hpp"
#include "ellrot/mat.hpp"
#include "ellrot/space.hpp"

namespace ellrot {

/// (I + T)(I - T)^{-1} for a B-skew T.  Always well defined for positive
/// coefficients: the eigenvalues of T are purely imaginary.
[[nodiscard]] inline Mat cayley_map(const EllipticSpace& s, const Mat& t)
{
    detail::require_dim(s, t, "matrix");
    if (!is_b_skew(s, t))
        throw Error(ErrorCode::NotSkew, "cayley_map needs a B-skew matrix");
    const Mat eye = Mat::identity(s.dim());
    try {
        return (eye + t) * inverse(eye - t);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::SingularMatrix)
            throw Error(ErrorCode::SingularResolvent, "I - T is singular");
        throw;
    }
}

/// Closed form of cayley_map(skew_from_axis(u)) in three dimensions.  The
/// parameter vector u need not be unit; its length encodes the angle.
[[nodiscard]] inline Mat cayley_closed_form(const EllipticSpace& s, const Vec& u)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch,
                    "cayley_closed_form needs a three dimensional space");
    detail::require_dim(s, u, "u");
    const double a1 = s.coeff(0), a2 = s.coeff(1), a3 = s.coeff(2);
    const double d = s.delta();
    const double n2 = inner(s, u, u);
    const double f = 1.0 / (1.0 + n2);
    Mat r(3);
    r(0, 0) = f * (a1 * u[0] * u[0] - a2 * u[1] * u[1] - a3 * u[2] * u[2] + 1.0);
    r(0, 1) = f * (2.0 * a2 * u[0] * u[1] - 2.0 * d * u[2] / a1);
    r(0, 2) = f * (2.0 * a3 * u[0] * u[2] + 2.0 * d * u[1] / a1);
    r(1, 0) = f * (2.0 * a1 * u[0] * u[1] + 2.0 * d * u[2] / a2);
    r(1, 1) = f * (a2 * u[1] * u[1] - a1 * u[0] * u[0] - a3 * u[2] * u[2] + 1.0);
    r(1, 2) = f * (2.0 * a3 * u[1] * u[2] - 2.0 * d * u[0] / a2);
    r(2, 0) = f * (2.0 * a1 * u[0] * u[2] - 2.0 * d * u[1] / a3);
    r(2, 1) = f * (2.0 * a2 * u[1] * u[2] + 2.0 * d * u[0] / a3);
    r(2, 2) = f * (a3 * u[2] * u[2] - a1 * u[0] * u[0] - a2 * u[1] * u[1] + 1.0);
    return r;
}

/// Angle read off tan(theta) = 2|u| / (1 - |u|^2) on the principal branch,
/// so the result lies in (-pi/2, pi/2] with |u| = 1 mapping to pi/2.  The
/// full turning angle of cayley_closed_form(u) is 2 atan(|u|).
[[nodiscard]] inline double cayley_angle(const EllipticSpace& s, const Vec& u)
{
    detail::require_dim(s, u, "u");
    const double n2 = inner(s, u, u);
    if (n2 == 0.0) return 0.0;
    const double denom = 1.0 - n2;
    if (denom == 0.0) return 1.5707963267948966;
    return std::atan(2.0 * std::sqrt(n2) / denom);
}

/// Inverse of the Cayley map: (R - I)(R + I)^{-1}.  Rotations by pi have
/// eigenvalue -1 and no Cayley preimage.
[[nodiscard]] inline Mat inverse_cayley(const EllipticSpace& s, const Mat& r,
                                        double tol = kDefaultTol)
{
    detail::require_dim(s, r, "matrix");
    if (classify(s, r, tol) != MatrixClass::Rotation)
        throw Error(ErrorCode::NotARotation, "matrix is not an elliptical rotation");
    const Mat eye = Mat::identity(s.dim());
    const Mat m = r + eye;
    if (std::abs(det(m)) <= 1e-9)
        throw Error(ErrorCode::HalfTurn, "rotation by pi has no Cayley parameter");
    return (r - eye) * inverse(m);
}

}  // namespace ellrot
