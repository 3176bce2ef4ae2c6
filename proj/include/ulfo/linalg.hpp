#pragma once

#include <array>
#include <cmath>
#include <complex>

// Minimal fixed-size 4x4 real linear algebra. The whole toolkit works on a
// single 4-state model, so there is no reason to pull in a general matrix
// library.

namespace ulfo {

using Complex = std::complex<double>;
using Vec4 = std::array<double, 4>;

struct Mat4 {
    // row-major
    std::array<double, 16> m{};

    double& operator()(int i, int j) { return m[static_cast<size_t>(i) * 4 + j]; }
    double operator()(int i, int j) const { return m[static_cast<size_t>(i) * 4 + j]; }

    static Mat4 identity() {
        Mat4 r;
        for (int i = 0; i < 4; ++i) r(i, i) = 1.0;
        return r;
    }
    static Mat4 zero() { return Mat4{}; }
};

inline Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 4; ++i)
        for (int k = 0; k < 4; ++k) {
            const double aik = a(i, k);
            for (int j = 0; j < 4; ++j) r(i, j) += aik * b(k, j);
        }
    return r;
}

inline Vec4 operator*(const Mat4& a, const Vec4& x) {
    Vec4 r{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r[i] += a(i, j) * x[j];
    return r;
}

inline Mat4 operator+(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = a.m[i] + b.m[i];
    return r;
}

inline Mat4 operator-(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = a.m[i] - b.m[i];
    return r;
}

inline Mat4 operator*(double s, const Mat4& a) {
    Mat4 r;
    for (int i = 0; i < 16; ++i) r.m[i] = s * a.m[i];
    return r;
}

inline double trace(const Mat4& a) { return a(0, 0) + a(1, 1) + a(2, 2) + a(3, 3); }

inline double max_abs(const Mat4& a) {
    double r = 0.0;
    for (double v : a.m) r = std::max(r, std::abs(v));
    return r;
}

inline double max_abs_diff(const Mat4& a, const Mat4& b) { return max_abs(a - b); }

inline bool all_finite(const Mat4& a) {
    for (double v : a.m)
        if (!std::isfinite(v)) return false;
    return true;
}

// Gauss-Jordan with partial pivoting. Throws std::runtime_error on a
// (numerically) singular matrix.
Mat4 inverse(const Mat4& a);

}  // namespace ulfo
