#pragma once

#include <cmath>

namespace mahjb {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::sqrt(a.x * a.x + a.y * a.y); }

/// 2x2 matrix, row-major.
struct Mat2 {
    double a00 = 0.0, a01 = 0.0;
    double a10 = 0.0, a11 = 0.0;

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 diag(double d0, double d1) { return {d0, 0.0, 0.0, d1}; }
};

inline Mat2 operator+(const Mat2& a, const Mat2& b)
{
    return {a.a00 + b.a00, a.a01 + b.a01, a.a10 + b.a10, a.a11 + b.a11};
}
inline Mat2 operator-(const Mat2& a, const Mat2& b)
{
    return {a.a00 - b.a00, a.a01 - b.a01, a.a10 - b.a10, a.a11 - b.a11};
}
inline Mat2 operator*(double s, const Mat2& a)
{
    return {s * a.a00, s * a.a01, s * a.a10, s * a.a11};
}

inline double trace(const Mat2& m) { return m.a00 + m.a11; }
inline double det(const Mat2& m) { return m.a00 * m.a11 - m.a01 * m.a10; }
inline double ddot(const Mat2& a, const Mat2& b)
{
    return a.a00 * b.a00 + a.a01 * b.a01 + a.a10 * b.a10 + a.a11 * b.a11;
}
inline double frobenius(const Mat2& m) { return std::sqrt(ddot(m, m)); }
inline Mat2 sym(const Mat2& m)
{
    const double off = 0.5 * (m.a01 + m.a10);
    return {m.a00, off, off, m.a11};
}
/// u v^T
inline Mat2 outer(Vec2 u, Vec2 v)
{
    return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
}

/// Divergence of a vector field with Jacobian m (row i = gradient of component i).
inline double div_of(const Mat2& m) { return m.a00 + m.a11; }
/// Scalar curl in 2D: d1 w2 - d2 w1.
inline double rot_of(const Mat2& m) { return m.a10 - m.a01; }

}  // namespace mahjb
