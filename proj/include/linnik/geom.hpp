#pragma once

#include <array>

#include "linnik/arith.hpp"

namespace linnik {

struct Vec3 {
    i64 x = 0, y = 0, z = 0;
    friend bool operator==(const Vec3&, const Vec3&) = default;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(i64 s, const Vec3& a) { return {s * a.x, s * a.y, s * a.z}; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }

inline i64 dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

// determinant of the matrix with columns c1, c2, c3
inline i64 det3(const Vec3& c1, const Vec3& c2, const Vec3& c3) { return dot(c1, cross(c2, c3)); }

// integer 3x3 matrix, row major
struct Mat3i {
    std::array<std::array<i64, 3>, 3> m{};

    Vec3 row(int i) const { return {m[i][0], m[i][1], m[i][2]}; }
    Vec3 col(int j) const { return {m[0][j], m[1][j], m[2][j]}; }
    i64 det() const { return det3(col(0), col(1), col(2)); }

    static Mat3i identity()
    {
        Mat3i r;
        r.m = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
        return r;
    }
    static Mat3i from_columns(const Vec3& a, const Vec3& b, const Vec3& c)
    {
        Mat3i r;
        r.m = {{{a.x, b.x, c.x}, {a.y, b.y, c.y}, {a.z, b.z, c.z}}};
        return r;
    }
    // adjugate; equals the inverse when det == 1
    Mat3i adjugate() const;
    friend Mat3i operator*(const Mat3i& a, const Mat3i& b);
    friend bool operator==(const Mat3i&, const Mat3i&) = default;
};

using Mat3d = std::array<std::array<double, 3>, 3>;

Mat3d to_double(const Mat3i& a);
Mat3d matmul(const Mat3d& a, const Mat3d& b);

} // namespace linnik
