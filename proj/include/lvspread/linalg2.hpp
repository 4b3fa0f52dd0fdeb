#pragma once

#include <algorithm>
#include <cmath>

namespace lvspread {

/// Two-component vector indexed by morph: `e` establisher, `d` disperser.
struct Vec2 {
    double e = 0.0;
    double d = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.e + b.e, a.d + b.d}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.e - b.e, a.d - b.d}; }
    friend constexpr Vec2 operator*(double s, Vec2 a) { return {s * a.e, s * a.d}; }
    friend constexpr bool operator==(Vec2, Vec2) = default;

    double norm() const { return std::hypot(e, d); }
    double norm_inf() const { return std::max(std::abs(e), std::abs(d)); }
};

/// Row-major 2x2 matrix.
struct Mat2 {
    double a11 = 0.0, a12 = 0.0;
    double a21 = 0.0, a22 = 0.0;

    static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

    constexpr double trace() const { return a11 + a22; }
    constexpr double det() const { return a11 * a22 - a12 * a21; }
    double norm_inf() const {
        return std::max(std::abs(a11) + std::abs(a12), std::abs(a21) + std::abs(a22));
    }

    friend constexpr Vec2 operator*(const Mat2& m, Vec2 v) {
        return {m.a11 * v.e + m.a12 * v.d, m.a21 * v.e + m.a22 * v.d};
    }
    friend constexpr Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend constexpr Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend constexpr Mat2 operator*(double s, const Mat2& a) {
        return {s * a.a11, s * a.a12, s * a.a21, s * a.a22};
    }
    friend constexpr bool operator==(const Mat2&, const Mat2&) = default;
};

/// Solves m x = rhs by Cramer's rule. Caller guarantees det(m) != 0.
constexpr Vec2 solve(const Mat2& m, Vec2 rhs) {
    const double det = m.det();
    return {(rhs.e * m.a22 - m.a12 * rhs.d) / det, (m.a11 * rhs.d - m.a21 * rhs.e) / det};
}

} // namespace lvspread
