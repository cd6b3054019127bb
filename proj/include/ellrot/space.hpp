// space.hpp
// Elliptic scalar product spaces: R^n equipped with B(u,w) = sum a_i u_i w_i
// for positive weights a_i, together with the induced norm, angle, vector
// product, and points of the unit ellipsoid.

#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "ellrot/error.hpp"
#include "ellrot/mat.hpp"

namespace ellrot {

/// Weighted scalar product space.  Immutable after construction; the
/// constant delta = sqrt(a_1 * ... * a_n) is cached because nearly every
/// formula in the library uses it.
class EllipticSpace {
public:
    explicit EllipticSpace(std::vector<double> coefficients)
        : a_(std::move(coefficients))
    {
        if (a_.size() < 2)
            throw Error(ErrorCode::DimensionTooSmall, "need at least two coefficients");
        double product = 1.0;
        for (double ai : a_) {
            if (!(ai > 0.0))
                throw Error(ErrorCode::NonPositiveCoefficient,
                            "every coefficient must be positive");
            product *= ai;
        }
        delta_ = std::sqrt(product);
    }

    [[nodiscard]] std::size_t dim() const noexcept { return a_.size(); }
    [[nodiscard]] double coeff(std::size_t i) const { return a_[i]; }
    [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return a_; }
    [[nodiscard]] double delta() const noexcept { return delta_; }

    /// Diagonal matrix of the coefficients.
    [[nodiscard]] Mat omega() const
    {
        Mat m(dim());
        for (std::size_t i = 0; i < dim(); ++i) m(i, i) = a_[i];
        return m;
    }

    bool operator==(const EllipticSpace& o) const { return a_ == o.a_; }

private:
    std::vector<double> a_;
    double delta_ = 1.0;
};

[[nodiscard]] inline EllipticSpace make_space(std::vector<double> coefficients)
{
    return EllipticSpace(std::move(coefficients));
}

namespace detail {

inline void require_dim(const EllipticSpace& s, const Vec& v, const char* what)
{
    if (v.size() != s.dim())
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong dimension");
}

inline void require_dim(const EllipticSpace& s, const Mat& m, const char* what)
{
    if (m.dim() != s.dim())
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has wrong dimension");
}

}  // namespace detail

/// B(u,w) = sum a_i u_i w_i.
[[nodiscard]] inline double inner(const EllipticSpace& s, const Vec& u, const Vec& w)
{
    detail::require_dim(s, u, "u");
    detail::require_dim(s, w, "w");
    double acc = 0.0;
    for (std::size_t i = 0; i < s.dim(); ++i) acc += s.coeff(i) * u[i] * w[i];
    return acc;
}

[[nodiscard]] inline double norm(const EllipticSpace& s, const Vec& u)
{
    return std::sqrt(inner(s, u, u));
}

/// cos of the B-angle, clamped to [-1, 1].  Throws ZeroVector for a zero
/// argument, where the angle is undefined.
[[nodiscard]] inline double cos_angle(const EllipticSpace& s, const Vec& u, const Vec& w)
{
    const double nu = norm(s, u);
    const double nw = norm(s, w);
    if (nu == 0.0 || nw == 0.0)
        throw Error(ErrorCode::ZeroVector, "angle with the zero vector is undefined");
    const double c = inner(s, u, w) / (nu * nw);
    return std::clamp(c, -1.0, 1.0);
}

/// Elliptical vector product in dimension 3.
[[nodiscard]] inline Vec cross3(const EllipticSpace& s, const Vec& u, const Vec& w)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch, "cross3 needs a three dimensional space");
    detail::require_dim(s, u, "u");
    detail::require_dim(s, w, "w");
    const double d = s.delta();
    return Vec{d * (u[1] * w[2] - u[2] * w[1]) / s.coeff(0),
               d * (u[2] * w[0] - u[0] * w[2]) / s.coeff(1),
               d * (u[0] * w[1] - u[1] * w[0]) / s.coeff(2)};
}

/// n-dimensional vector product of n-1 vectors: cofactor expansion along the
/// first row of the formal determinant whose first row is delta * e_j / a_j
/// and whose remaining rows are the given vectors.
[[nodiscard]] inline Vec cross_n(const EllipticSpace& s, std::span<const Vec> vs)
{
    const std::size_t n = s.dim();
    if (vs.size() != n - 1)
        throw Error(ErrorCode::WrongVectorCount, "vector product needs n-1 vectors");
    for (const Vec& v : vs) detail::require_dim(s, v, "argument");

    Vec result(n);
    Mat minor(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t r = 0; r < n - 1; ++r) {
            std::size_t cc = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(r, cc++) = vs[r][c];
            }
        }
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        result[j] = sign * s.delta() * det(minor) / s.coeff(j);
    }
    return result;
}

/// Point of the unit ellipsoid at spherical parameters (theta, beta):
/// (cos t cos b / sqrt a1, cos t sin b / sqrt a2, sin t / sqrt a3).
[[nodiscard]] inline Vec ellipsoid_point(const EllipticSpace& s, double theta, double beta)
{
    if (s.dim() != 3)
        throw Error(ErrorCode::DimensionMismatch, "ellipsoid_point needs a three dimensional space");
    const double ct = std::cos(theta);
    return Vec{ct * std::cos(beta) / std::sqrt(s.coeff(0)),
               ct * std::sin(beta) / std::sqrt(s.coeff(1)),
               std::sin(theta) / std::sqrt(s.coeff(2))};
}

}  // namespace ellrot
