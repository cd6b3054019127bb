// pipeline.hpp
// End-to-end solver: given two equal-norm points of an ellipsoid, build the
// rotation taking one to the other by every available construction, check
// the constructions against each other, and report the residuals.

#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>

#include "ellrot/bmatrix.hpp"
#include "ellrot/cayley.hpp"
#include "ellrot/error.hpp"
#include "ellrot/householder.hpp"
#include "ellrot/mat.hpp"
#include "ellrot/quaternion.hpp"
#include "ellrot/rodrigues.hpp"
#include "ellrot/space.hpp"

namespace ellrot {

/// A B-unit vector B-orthogonal to x: the most orthogonal standard basis
/// vector, corrected by one Gram-Schmidt step.
[[nodiscard]] inline Vec orthogonal_complement_unit(const EllipticSpace& s, const Vec& x)
{
    detail::require_dim(s, x, "x");
    const double nx2 = inner(s, x, x);
    if (nx2 == 0.0)
        throw Error(ErrorCode::ZeroVector, "zero vector has no orthogonal complement direction");
    std::size_t k = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < s.dim(); ++i) {
        const double c = s.coeff(i) * x[i] * x[i];  // B(x, e_i)^2 / a_i
        if (c < best) {
            best = c;
            k = i;
        }
    }
    Vec z(s.dim());
    z[k] = 1.0;
    z -= (inner(s, x, z) / nx2) * x;
    return z * (1.0 / norm(s, z));
}

struct SolveResiduals {
    double rodrigues = 0.0;
    double householder = 0.0;
    double quaternion = 0.0;
    std::optional<double> cayley;
    double max_pairwise = 0.0;  // widest disagreement between method matrices
};

struct RotationSolution {
    EllipticSpace space;
    Vec axis;
    double cos_angle = 1.0;
    double sin_angle = 0.0;
    Mat r_rodrigues;
    Mat r_householder;
    Mat r_quaternion;
    std::optional<Mat> r_cayley;  // absent for half turns
    SolveResiduals residuals;
    bool degenerate_axis = false;  // x = y: nothing to rotate, axis arbitrary
};

struct VerifyReport {
    MatrixClass matrix_class = MatrixClass::NotBOrthogonal;
    double orthogonality_residual = 0.0;
    double det = 0.0;
    double det_residual = 0.0;  // |det - 1|
    double trace = 0.0;
    std::optional<AxisAngle> axis_angle;  // three dimensional rotations only
};

/// Residual report for one matrix: B-orthogonality defect, determinant,
/// classification, and (for 3d rotations) the recovered axis and angle.
[[nodiscard]] inline VerifyReport verify(const EllipticSpace& s, const Mat& r,
                                         double tol = kDefaultTol)
{
    detail::require_dim(s, r, "matrix");
    VerifyReport report;
    report.matrix_class = classify(s, r, tol);
    report.orthogonality_residual = b_orthogonality_residual(s, r);
    report.det = det(r);
    report.det_residual = std::abs(report.det - 1.0);
    report.trace = r.trace();
    if (s.dim() == 3 && report.matrix_class == MatrixClass::Rotation)
        report.axis_angle = axis_angle_of(s, r, tol);
    return report;
}

namespace detail {

inline double map_residual(const EllipticSpace& s, const Mat& r, const Vec& x, const Vec& y)
{
    return norm(s, r * x - y);
}

inline void finish_residuals(const EllipticSpace& s, RotationSolution& sol, const Vec& x,
                             const Vec& y)
{
    sol.residuals.rodrigues = map_residual(s, sol.r_rodrigues, x, y);
    sol.residuals.householder = map_residual(s, sol.r_householder, x, y);
    sol.residuals.quaternion = map_residual(s, sol.r_quaternion, x, y);
    double pair = std::max(max_abs_diff(sol.r_rodrigues, sol.r_householder),
                           max_abs_diff(sol.r_rodrigues, sol.r_quaternion));
    pair = std::max(pair, max_abs_diff(sol.r_householder, sol.r_quaternion));
    if (sol.r_cayley) {
        sol.residuals.cayley = map_residual(s, *sol.r_cayley, x, y);
        pair = std::max({pair, max_abs_diff(*sol.r_cayley, sol.r_rodrigues),
                         max_abs_diff(*sol.r_cayley, sol.r_householder),
                         max_abs_diff(*sol.r_cayley, sol.r_quaternion)});
    }
    sol.residuals.max_pairwise = pair;
}

}  // namespace detail

/// Rotation taking x to y on the ellipsoid of their common B-norm, built
/// four ways.  x = y yields the identity with a degenerate axis; y = -x is
/// resolved as two quarter-turn hops through a point B-orthogonal to x, a
/// case with no Cayley parameter.
[[nodiscard]] inline RotationSolution solve(const EllipticSpace& s, const Vec& x, const Vec& y,
                                            double tol = kDefaultTol)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch, "solve needs a three dimensional space");
    detail::require_dim(s, x, "x");
    detail::require_dim(s, y, "y");
    const double nx = norm(s, x);
    const double ny = norm(s, y);
    if (nx == 0.0 || ny == 0.0)
        throw Error(ErrorCode::ZeroVector, "cannot rotate the zero vector");
    if (std::abs(nx - ny) > tol * std::max(nx, ny))
        throw Error(ErrorCode::NormMismatch, "x and y lie on different ellipsoids");

    RotationSolution sol{.space = s,
                         .axis = Vec(3),
                         .cos_angle = 1.0,
                         .sin_angle = 0.0,
                         .r_rodrigues = Mat::identity(3),
                         .r_householder = Mat::identity(3),
                         .r_quaternion = Mat::identity(3),
                         .r_cayley = std::nullopt,
                         .residuals = {},
                         .degenerate_axis = false};

    if (norm(s, x - y) <= tol * nx) {
        sol.r_cayley = Mat::identity(3);
        sol.degenerate_axis = true;
        detail::finish_residuals(s, sol, x, y);
        return sol;
    }

    if (norm(s, x + y) <= tol * nx) {
        // Half turn: route through z with B(x, z) = 0, |z| = |x|.
        const Vec z = orthogonal_complement_unit(s, x) * nx;
        sol.axis = cross3(s, x, z);
        sol.axis *= 1.0 / norm(s, sol.axis);
        sol.cos_angle = -1.0;
        sol.sin_angle = 0.0;
        sol.r_rodrigues = rodrigues3d(s, sol.axis, 3.141592653589793);
        sol.r_householder = rotation_between(s, z, y, tol) * rotation_between(s, x, z, tol);
        sol.r_quaternion = to_rotation_matrix(EllipticQuaternion{s, 0.0, sol.axis});
        detail::finish_residuals(s, sol, x, y);
        return sol;
    }

    Vec axis = cross3(s, x, y);
    axis *= 1.0 / norm(s, axis);
    const double c = std::clamp(inner(s, x, y) / (nx * ny), -1.0, 1.0);
    const double sn = std::sqrt(1.0 - c * c);
    const double theta = std::atan2(sn, c);

    sol.axis = axis;
    sol.cos_angle = c;
    sol.sin_angle = sn;
    sol.r_rodrigues = rodrigues3d(s, axis, theta);
    sol.r_householder = rotation_between(s, x, y, tol);
    const double half_c = std::sqrt((c + 1.0) / 2.0);
    const double half_s = std::sqrt(1.0 - half_c * half_c);
    sol.r_quaternion = to_rotation_matrix(EllipticQuaternion{s, half_c, half_s * axis});
    if (1.0 + c > kTightTol)
        sol.r_cayley = cayley_closed_form(s, std::tan(theta / 2.0) * axis);
    detail::finish_residuals(s, sol, x, y);
    return sol;
}

[[nodiscard]] inline RotationSolution solve(const std::vector<double>& coefficients, const Vec& x,
                                            const Vec& y, double tol = kDefaultTol)
{
    return solve(EllipticSpace(coefficients), x, y, tol);
}

}  // namespace ellrot
