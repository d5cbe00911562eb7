#include "shockprof/mat2.hpp"

#include "shockprof/errors.hpp"

namespace shockprof {

Mat2 Mat2::inverse() const {
    const double d = det();
    if (d == 0.0 || !std::isfinite(d)) {
        throw SingularLinearization("Mat2::inverse: matrix is singular");
    }
    return adjugate() * (1.0 / d);
}

double Mat2::frobenius() const {
    return std::sqrt(a00 * a00 + a01 * a01 + a10 * a10 + a11 * a11);
}

Eigenvalues2 Mat2::eigenvalues() const {
    // lambda^2 - tr lambda + det = 0, written around the half-trace so the
    // discriminant is (a00 - a11)^2 / 4 + a01 a10 without cancellation.
    const double half_tr = 0.5 * trace();
    const double half_diff = 0.5 * (a00 - a11);
    const double disc = half_diff * half_diff + a01 * a10;

    Eigenvalues2 out;
    if (disc >= 0.0) {
        const double s = std::sqrt(disc);
        // Larger-magnitude root first, the other from the product.
        const double big = half_tr >= 0.0 ? half_tr + s : half_tr - s;
        const double small = big != 0.0 ? det() / big : 0.0;
        const double lo = std::min(big, small);
        const double hi = std::max(big, small);
        out.first = lo;
        out.second = hi;
        out.real = true;
    } else {
        const double s = std::sqrt(-disc);
        out.first = {half_tr, -s};
        out.second = {half_tr, s};
        out.real = false;
    }
    return out;
}

Vec2 Mat2::eigenvector(double lambda) const {
    // Rows of (M - lambda I) are orthogonal to the eigenvector; take the
    // better-conditioned one.
    const Vec2 from_row0{a01, lambda - a00};
    const Vec2 from_row1{lambda - a11, a10};
    Vec2 v = from_row0.norm() >= from_row1.norm() ? from_row0 : from_row1;
    double n = v.norm();
    if (n == 0.0) {
        // M = lambda I: every direction is an eigenvector.
        return {1.0, 0.0};
    }
    v = v * (1.0 / n);
    const double lead = std::abs(v.x) >= std::abs(v.y) ? v.x : v.y;
    return lead < 0.0 ? -v : v;
}

}  // namespace shockprof
