#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace shockprof {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }
    constexpr bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
};

constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

// Eigenvalues of a real 2x2 matrix. When the pair is real, first <= second.
struct Eigenvalues2 {
    std::complex<double> first;
    std::complex<double> second;
    bool real = true;
};

// Dense row-major 2x2 matrix.
struct Mat2 {
    double a00 = 0.0, a01 = 0.0;
    double a10 = 0.0, a11 = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static constexpr Mat2 diag(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }

    constexpr double det() const { return a00 * a11 - a01 * a10; }
    constexpr double trace() const { return a00 + a11; }
    constexpr Mat2 adjugate() const { return {a11, -a01, -a10, a00}; }
    constexpr Mat2 transpose() const { return {a00, a10, a01, a11}; }

    // Throws SingularLinearization when det is exactly zero.
    Mat2 inverse() const;

    double frobenius() const;
    bool is_symmetric(double tol = 0.0) const { return std::abs(a01 - a10) <= tol; }

    constexpr Mat2 operator+(const Mat2& o) const {
        return {a00 + o.a00, a01 + o.a01, a10 + o.a10, a11 + o.a11};
    }
    constexpr Mat2 operator-(const Mat2& o) const {
        return {a00 - o.a00, a01 - o.a01, a10 - o.a10, a11 - o.a11};
    }
    constexpr Mat2 operator*(double s) const { return {a00 * s, a01 * s, a10 * s, a11 * s}; }
    constexpr Mat2 operator*(const Mat2& o) const {
        return {a00 * o.a00 + a01 * o.a10, a00 * o.a01 + a01 * o.a11,
                a10 * o.a00 + a11 * o.a10, a10 * o.a01 + a11 * o.a11};
    }
    constexpr Vec2 operator*(const Vec2& v) const {
        return {a00 * v.x + a01 * v.y, a10 * v.x + a11 * v.y};
    }
    constexpr bool operator==(const Mat2&) const = default;

    Eigenvalues2 eigenvalues() const;

    // Unit eigenvector for a real eigenvalue. Sign normalised so the
    // largest-magnitude component is positive.
    Vec2 eigenvector(double lambda) const;
};

constexpr Mat2 operator*(double s, const Mat2& m) { return m * s; }

}  // namespace shockprof
