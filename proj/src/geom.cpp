#include "linnik/geom.hpp"

namespace linnik {

Mat3i Mat3i::adjugate() const
{
    Mat3i a;
    auto& s = m;
    a.m[0][0] = s[1][1] * s[2][2] - s[1][2] * s[2][1];
    a.m[0][1] = s[0][2] * s[2][1] - s[0][1] * s[2][2];
    a.m[0][2] = s[0][1] * s[1][2] - s[0][2] * s[1][1];
    a.m[1][0] = s[1][2] * s[2][0] - s[1][0] * s[2][2];
    a.m[1][1] = s[0][0] * s[2][2] - s[0][2] * s[2][0];
    a.m[1][2] = s[0][2] * s[1][0] - s[0][0] * s[1][2];
    a.m[2][0] = s[1][0] * s[2][1] - s[1][1] * s[2][0];
    a.m[2][1] = s[0][1] * s[2][0] - s[0][0] * s[2][1];
    a.m[2][2] = s[0][0] * s[1][1] - s[0][1] * s[1][0];
    return a;
}

Mat3i operator*(const Mat3i& a, const Mat3i& b)
{
    Mat3i r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            i64 s = 0;
            for (int k = 0; k < 3; ++k) s += a.m[i][k] * b.m[k][j];
            r.m[i][j] = s;
        }
    return r;
}

Mat3d to_double(const Mat3i& a)
{
    Mat3d r;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) r[i][j] = static_cast<double>(a.m[i][j]);
    return r;
}

Mat3d matmul(const Mat3d& a, const Mat3d& b)
{
    Mat3d r{};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double s = 0;
            for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
            r[i][j] = s;
        }
    return r;
}

} // namespace linnik
