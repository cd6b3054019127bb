// bmatrix.hpp
// Matrices with structure relative to B: self-adjoint and skew-adjoint
// canonical forms, classification of B-orthogonal maps, and conjugation to
// the classical Euclidean picture.

#pragma once

#include <cmath>

#include "ellrot/error.hpp"
#include "ellrot/mat.hpp"
#include "ellrot/space.hpp"

namespace ellrot {

enum class MatrixClass { Rotation, Reflection, NotBOrthogonal };

[[nodiscard]] inline const char* to_string(MatrixClass c) noexcept
{
    switch (c) {
        case MatrixClass::Rotation:       return "Rotation";
        case MatrixClass::Reflection:     return "Reflection";
        case MatrixClass::NotBOrthogonal: return "NotBOrthogonal";
    }
    return "NotBOrthogonal";
}

/// |M^T Omega M - Omega|_inf, the defect of B-orthogonality.
[[nodiscard]] inline double b_orthogonality_residual(const EllipticSpace& s, const Mat& m)
{
    detail::require_dim(s, m, "matrix");
    const std::size_t n = s.dim();
    double r = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < n; ++k) acc += m(k, i) * s.coeff(k) * m(k, j);
            const double target = i == j ? s.coeff(i) : 0.0;
            r = std::max(r, std::abs(acc - target));
        }
    return r;
}

/// |M^T Omega - Omega M|_inf: zero exactly for B-self-adjoint maps.
[[nodiscard]] inline double b_symmetry_residual(const EllipticSpace& s, const Mat& m)
{
    detail::require_dim(s, m, "matrix");
    double r = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            r = std::max(r, std::abs(m(j, i) * s.coeff(j) - s.coeff(i) * m(i, j)));
    return r;
}

/// |M^T Omega + Omega M|_inf: zero exactly for B-skew-adjoint maps.
[[nodiscard]] inline double b_skewness_residual(const EllipticSpace& s, const Mat& m)
{
    detail::require_dim(s, m, "matrix");
    double r = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i)
        for (std::size_t j = 0; j < s.dim(); ++j)
            r = std::max(r, std::abs(m(j, i) * s.coeff(j) + s.coeff(i) * m(i, j)));
    return r;
}

[[nodiscard]] inline bool is_b_skew(const EllipticSpace& s, const Mat& m, double tol = kDefaultTol)
{
    return b_skewness_residual(s, m) <= tol * std::max(1.0, max_abs(m));
}

/// Canonical B-self-adjoint matrix from upper-triangle parameters:
/// entry (i,j) is delta * p_ij / a_i with p_ji = p_ij.
[[nodiscard]] inline Mat sym_from_params(const EllipticSpace& s, const Mat& params)
{
    detail::require_dim(s, params, "params");
    const std::size_t n = s.dim();
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const double p = i <= j ? params(i, j) : params(j, i);
            m(i, j) = s.delta() * p / s.coeff(i);
        }
    return m;
}

/// Canonical B-skew-adjoint matrix from strict-lower-triangle parameters:
/// entry (i,j) is delta * p_ij / a_i below the diagonal, -delta * p_ji / a_i
/// above it, zero on it.
[[nodiscard]] inline Mat skew_from_params(const EllipticSpace& s, const Mat& params)
{
    detail::require_dim(s, params, "params");
    const std::size_t n = s.dim();
    Mat m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double p = i > j ? params(i, j) : -params(j, i);
            m(i, j) = s.delta() * p / s.coeff(i);
        }
    return m;
}

/// The 3x3 B-skew matrix T_u with T_u v = cross3(u, v).
[[nodiscard]] inline Mat skew_from_axis(const EllipticSpace& s, const Vec& u)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch, "skew_from_axis needs a three dimensional space");
    detail::require_dim(s, u, "u");
    const double d = s.delta();
    Mat t(3);
    t(0, 1) = -d * u[2] / s.coeff(0);
    t(0, 2) = d * u[1] / s.coeff(0);
    t(1, 0) = d * u[2] / s.coeff(1);
    t(1, 2) = -d * u[0] / s.coeff(1);
    t(2, 0) = -d * u[1] / s.coeff(2);
    t(2, 1) = d * u[0] / s.coeff(2);
    return t;
}

/// Rotation for B-orthogonal maps with det +1, Reflection for det -1,
/// NotBOrthogonal otherwise.  The residual is compared against
/// tol * max(1, |M|_inf).
[[nodiscard]] inline MatrixClass classify(const EllipticSpace& s, const Mat& m,
                                          double tol = kDefaultTol)
{
    detail::require_dim(s, m, "matrix");
    const double scale = std::max(1.0, max_abs(m));
    if (b_orthogonality_residual(s, m) > tol * scale) return MatrixClass::NotBOrthogonal;
    const double d = det(m);
    if (std::abs(d - 1.0) <= tol * scale) return MatrixClass::Rotation;
    if (std::abs(d + 1.0) <= tol * scale) return MatrixClass::Reflection;
    return MatrixClass::NotBOrthogonal;
}

/// D M D^{-1} with D = diag(sqrt a_i).  Takes B-orthogonal matrices to
/// classically orthogonal ones and B-skew to Euclidean skew.
[[nodiscard]] inline Mat euclidean_conjugate(const EllipticSpace& s, const Mat& m)
{
    detail::require_dim(s, m, "matrix");
    const std::size_t n = s.dim();
    Mat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            r(i, j) = std::sqrt(s.coeff(i)) * m(i, j) / std::sqrt(s.coeff(j));
    return r;
}

}  // namespace ellrot
