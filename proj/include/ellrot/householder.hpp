// householder.hpp
// Elliptical reflections H_v = I - 2 v v^t Omega / B(v,v) in any dimension,
// and rotations assembled from reflection pairs.

#pragma once

#include <cmath>

#include "ellrot/bmatrix.hpp"
#include "ellrot/error.hpp"
#include "ellrot/mat.hpp"
#include "ellrot/space.hpp"

namespace ellrot {

/// Reflection about the hyperplane through the origin B-orthogonal to v.
/// B-symmetric, B-orthogonal, determinant -1, involutive.
[[nodiscard]] inline Mat householder_matrix(const EllipticSpace& s, const Vec& v)
{
    detail::require_dim(s, v, "v");
    const double n2 = inner(s, v, v);
    if (n2 == 0.0)
        throw Error(ErrorCode::ZeroVector, "mirror vector must be nonzero");
    const std::size_t n = s.dim();
    Mat h(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h(i, j) = (i == j ? 1.0 : 0.0) - 2.0 * s.coeff(j) * v[i] * v[j] / n2;
    return h;
}

/// H_v applied to x without forming the matrix.
[[nodiscard]] inline Vec reflect(const EllipticSpace& s, const Vec& v, const Vec& x)
{
    detail::require_dim(s, v, "v");
    detail::require_dim(s, x, "x");
    const double n2 = inner(s, v, v);
    if (n2 == 0.0)
        throw Error(ErrorCode::ZeroVector, "mirror vector must be nonzero");
    return x - (2.0 * inner(s, v, x) / n2) * v;
}

/// Rotation taking x to y as the reflection pair H_y H_{x+y}.  The inputs
/// must have equal B-norms; antipodal inputs leave the mirror H_{x+y}
/// undefined and are rejected.
[[nodiscard]] inline Mat rotation_between(const EllipticSpace& s, const Vec& x, const Vec& y,
                                          double tol = kDefaultTol)
{
    detail::require_dim(s, x, "x");
    detail::require_dim(s, y, "y");
    const double nx = norm(s, x);
    const double ny = norm(s, y);
    if (nx == 0.0 || ny == 0.0)
        throw Error(ErrorCode::ZeroVector, "cannot rotate the zero vector");
    if (std::abs(nx - ny) > tol * std::max(nx, ny))
        throw Error(ErrorCode::NormMismatch, "x and y must have equal B-norms");
    if (norm(s, x + y) <= tol * nx)
        throw Error(ErrorCode::AntipodalInput, "x and -x admit no unique rotation plane");
    return householder_matrix(s, y) * householder_matrix(s, x + y);
}

}  // namespace ellrot
