// mat.hpp
// Minimal dense vector / square-matrix arithmetic used by the library.
// Dimensions here are tiny (2..6 in practice), so determinants use closed
// forms up to 3x3 and partial-pivot LU beyond that.

#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ellrot/error.hpp"

namespace ellrot {

class Vec {
public:
    Vec() = default;
    explicit Vec(std::size_t n) : c_(n, 0.0) {}
    Vec(std::initializer_list<double> xs) : c_(xs) {}
    explicit Vec(std::vector<double> xs) : c_(std::move(xs)) {}

    [[nodiscard]] std::size_t size() const noexcept { return c_.size(); }
    [[nodiscard]] double& operator[](std::size_t i) { return c_[i]; }
    [[nodiscard]] double operator[](std::size_t i) const { return c_[i]; }
    [[nodiscard]] const std::vector<double>& data() const noexcept { return c_; }

    Vec& operator+=(const Vec& o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o[i];
        return *this;
    }
    Vec& operator-=(const Vec& o)
    {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o[i];
        return *this;
    }
    Vec& operator*=(double t)
    {
        for (double& x : c_) x *= t;
        return *this;
    }

    bool operator==(const Vec&) const = default;

private:
    std::vector<double> c_;
};

[[nodiscard]] inline Vec operator+(Vec a, const Vec& b) { return a += b; }
[[nodiscard]] inline Vec operator-(Vec a, const Vec& b) { return a -= b; }
[[nodiscard]] inline Vec operator*(double t, Vec a) { return a *= t; }
[[nodiscard]] inline Vec operator*(Vec a, double t) { return a *= t; }
[[nodiscard]] inline Vec operator-(Vec a)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = -a[i];
    return a;
}

[[nodiscard]] inline double max_abs(const Vec& v)
{
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i]));
    return m;
}

class Mat {
public:
    Mat() = default;
    explicit Mat(std::size_t n) : n_(n), e_(n * n, 0.0) {}
    Mat(std::size_t n, std::initializer_list<double> xs) : n_(n), e_(xs)
    {
        if (e_.size() != n * n)
            throw Error(ErrorCode::DimensionMismatch, "matrix initializer has wrong length");
    }

    [[nodiscard]] static Mat identity(std::size_t n)
    {
        Mat m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return n_; }
    [[nodiscard]] double& operator()(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    Mat& operator+=(const Mat& o)
    {
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o)
    {
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }
    Mat& operator*=(double t)
    {
        for (double& x : e_) x *= t;
        return *this;
    }

    [[nodiscard]] Mat transpose() const
    {
        Mat r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    [[nodiscard]] double trace() const
    {
        double t = 0.0;
        for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }

    bool operator==(const Mat&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<double> e_;
};

[[nodiscard]] inline Mat operator+(Mat a, const Mat& b) { return a += b; }
[[nodiscard]] inline Mat operator-(Mat a, const Mat& b) { return a -= b; }
[[nodiscard]] inline Mat operator*(double t, Mat a) { return a *= t; }
[[nodiscard]] inline Mat operator*(Mat a, double t) { return a *= t; }

[[nodiscard]] inline Mat operator*(const Mat& a, const Mat& b)
{
    const std::size_t n = a.dim();
    Mat r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

[[nodiscard]] inline Vec operator*(const Mat& m, const Vec& v)
{
    const std::size_t n = m.dim();
    Vec r(n);
    for (std::size_t i = 0; i < n; ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

[[nodiscard]] inline double max_abs(const Mat& m)
{
    double r = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

[[nodiscard]] inline double max_abs_diff(const Mat& a, const Mat& b)
{
    return max_abs(a - b);
}

[[nodiscard]] inline double max_abs_diff(const Vec& a, const Vec& b)
{
    return max_abs(a - b);
}

namespace detail {

// Doolittle LU with partial pivoting, factoring in place.  Returns the
// permutation sign, or 0 if the matrix is numerically singular.
inline int lu_factor(Mat& m, std::vector<std::size_t>& perm)
{
    const std::size_t n = m.dim();
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(m(col, col));
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(m(r, col)) > best) {
                best = std::abs(m(r, col));
                pivot = r;
            }
        if (best == 0.0) return 0;
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
            std::swap(perm[col], perm[pivot]);
            sign = -sign;
        }
        for (std::size_t r = col + 1; r < n; ++r) {
            const double f = m(r, col) / m(col, col);
            m(r, col) = f;
            for (std::size_t j = col + 1; j < n; ++j) m(r, j) -= f * m(col, j);
        }
    }
    return sign;
}

}  // namespace detail

[[nodiscard]] inline double det(const Mat& m)
{
    const std::size_t n = m.dim();
    if (n == 0) return 1.0;
    if (n == 1) return m(0, 0);
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    if (n == 3)
        return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
             - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
             + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    Mat lu = m;
    std::vector<std::size_t> perm;
    const int sign = detail::lu_factor(lu, perm);
    if (sign == 0) return 0.0;
    double d = sign;
    for (std::size_t i = 0; i < n; ++i) d *= lu(i, i);
    return d;
}

// Inverse through the cofactor formula for 3x3 and LU elsewhere.
[[nodiscard]] inline Mat inverse(const Mat& m)
{
    const std::size_t n = m.dim();
    if (n == 3) {
        const double d = det(m);
        if (d == 0.0) throw Error(ErrorCode::SingularMatrix, "3x3 matrix is singular");
        Mat r(3);
        r(0, 0) = (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) / d;
        r(0, 1) = (m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2)) / d;
        r(0, 2) = (m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1)) / d;
        r(1, 0) = (m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2)) / d;
        r(1, 1) = (m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0)) / d;
        r(1, 2) = (m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2)) / d;
        r(2, 0) = (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0)) / d;
        r(2, 1) = (m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1)) / d;
        r(2, 2) = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)) / d;
        return r;
    }
    Mat lu = m;
    std::vector<std::size_t> perm;
    if (detail::lu_factor(lu, perm) == 0)
        throw Error(ErrorCode::SingularMatrix, "matrix is singular");
    Mat r(n);
    std::vector<double> x(n);
    for (std::size_t col = 0; col < n; ++col) {
        for (std::size_t i = 0; i < n; ++i) x[i] = perm[i] == col ? 1.0 : 0.0;
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
        for (std::size_t i = n; i-- > 0;) {
            for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
            x[i] /= lu(i, i);
        }
        for (std::size_t i = 0; i < n; ++i) r(i, col) = x[i];
    }
    return r;
}

}  // namespace ellrot
