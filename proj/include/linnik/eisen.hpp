#pragma once

#include <string>
#include <vector>

#include "linnik/weyl.hpp"

namespace linnik {

// Unimodular completion of v: an integer matrix with determinant +1
// whose third row is v (rows 0,1 complete it to a basis of Z^3).
Mat3i complete_to_unimodular(const PrimVec3& v);

// g = L k with L upper triangular (positive diagonal) and k in SO(3),
// by bottom-up Gram-Schmidt on the rows of g. Requires det g = 1.
struct IwasawaParts {
    double l11 = 1, l12 = 0, l13 = 0;
    double l22 = 1, l23 = 0;
    double l33 = 1;
    Mat3d k{};

    double a_scalar() const { return l33; }
    // point of X_2 carried by the upper 2x2 block: m . i
    HPoint m_point() const { return {l12 / l22, l11 / l22, false}; }
    Mat3d reconstruct() const;
};

IwasawaParts iwasawa(const Mat3d& g);

// n-th coefficient functional: sum over primitive |v|^2 = n of
// omega(bottom row of k_g) phi(reduced m-point), g the unimodular
// completion of v.
double coefficient_a_n(u64 n, const SphHarmonic& omega, const SurfaceTestFn& phi);

struct CoefficientRow {
    u64 n = 0;
    std::string omega_id;
    std::string phi_id;
    double weyl_value = 0;  // sphere-side sum
    double coeff_value = 0; // Iwasawa-side sum
    double gap = 0;
};

// Battery comparison of the two evaluations of the same coefficient.
std::vector<CoefficientRow> coefficient_check(u64 n);

// Shape oracle: the reduced form of the exact D-scaled projection Gram
// equals the reduced raw Gram form of the orthogonal lattice.
bool projection_shape_ok(const PrimVec3& v);

struct ScanResult {
    u64 X = 0;
    std::string omega_id;
    std::string phi_id;
    std::vector<std::pair<u64, double>> partial; // (X_i, sum_{n <= X_i} a_n)
    double exponent = 0;   // least squares slope of log|T| vs log X
    double constant = 0;   // exp(intercept)
    u64 fit_points = 0;    // points entering the fit (|T| floor applied)
    double final_sum = 0;  // T(X)
    u64 point_count = 0;   // primitive vectors visited
};

// Cumulative coefficient sums up to X on a log-spaced grid, enumerated
// by canonical triples 0 <= x <= y <= z with one exact form reduction
// per orbit. threads = 0 picks LINNIK_THREADS or the hardware count.
ScanResult partial_sum_scan(u64 X, const SphHarmonic& omega, const SurfaceTestFn& phi,
                            int threads = 0);

} // namespace linnik
