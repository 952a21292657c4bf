#pragma once

#include <string>
#include <vector>

#include "linnik/modsurf.hpp"

namespace linnik {

// real spherical harmonic, orthonormal against the *normalized* sphere
// measure: Y_{0,0} = 1, and the average of Y^2 over the sphere is 1
struct SphHarmonic {
    int l = 0;
    int m = 0;

    bool trivial() const { return l == 0; }
    std::string id() const { return "Y" + std::to_string(l) + "," + std::to_string(m); }
    double sup() const; // crude uniform bound used for report invariants
};

// degree <= 16; rejects |m| > l
double sph_harm(const SphHarmonic& h, double ux, double uy, double uz);

// hyperbolic rectangle inside the closure of the standard fundamental
// domain; y2 may be +inf (cusp strip, then the x range spans the full
// width). measure is normalized: hyperbolic area / (pi/3)
struct HypBox {
    double x1, x2, y1, y2;
    double measure;
    std::string id;

    // tolerant membership: reduced points computed by different exact
    // paths can land a few ulps on either side of the domain boundary
    // x = +-1/2, so x is folded and all edges carry a 1e-9 band
    bool contains(const HPoint& z) const;
    static HypBox make(double x1, double x2, double y1, double y2, std::string id);
    static HypBox cusp_strip(double T);
};

// test function on X_2, evaluated at reduced points
class SurfaceTestFn {
public:
    enum class Kind { constant_one, centered_box, centered_bump, sampled_grid };

    static SurfaceTestFn one();
    // indicator of the box minus its normalized hyperbolic measure
    static SurfaceTestFn centered_box(const HypBox& box);
    // smooth product bump on the box, centered to exact-zero hyperbolic mean
    static SurfaceTestFn centered_bump(double x1, double x2, double y1, double y2,
                                       std::string id);
    // bilinear samples on an nx x ny node grid over the box, zero outside
    static SurfaceTestFn sampled_grid(double x1, double x2, double y1, double y2,
                                      int nx, int ny, std::vector<double> values,
                                      std::string id);

    double operator()(const HPoint& z) const;

    Kind kind() const { return kind_; }
    double mean_value() const { return mean_; }
    const std::string& id() const { return id_; }
    double sup() const { return sup_; }

private:
    Kind kind_ = Kind::constant_one;
    double x1_ = 0, x2_ = 0, y1_ = 0, y2_ = 0;
    double mean_ = 0;
    double sup_ = 1;
    int nx_ = 0, ny_ = 0;
    std::vector<double> values_;
    std::string id_ = "one";

    double raw(double x, double y) const; // before centering
};

struct WeylReport {
    u64 index = 0; // D or n
    std::string omega_id;
    std::string phi_id;
    double sum = 0;
    u64 count = 0;
    double normalized = 0; // sum / count, 0 when empty
};

// reduced Heegner point of v, by exact reduction of the raw Gram form
HPoint heegner_point(const PrimVec3& v);

// S(D, omega, phi) = sum over S^2(D) of omega(v/||v||) phi(z_v)
WeylReport weyl_sum(u64 D, const SphHarmonic& omega, const SurfaceTestFn& phi);

struct Cap {
    double ax, ay, az; // unit axis
    double cos_theta;
    double measure; // (1 - cos theta) / 2
    std::string id;
};

std::vector<Cap> standard_caps();      // 26 caps, fixed family
std::vector<HypBox> standard_boxes();  // 3 cusp strips + 6 interior rectangles

struct DiscrepancyStats {
    u64 D = 0;
    u64 count = 0;
    double max_cap_dev = 0;   // max |nu(A) - m(A)|
    double max_box_dev = 0;   // max |nu(B) - m(B)|
    double max_joint_dev = 0; // max |nu(AxB) - m(A) m(B)|
};

DiscrepancyStats discrepancy(u64 D, const std::vector<Cap>& caps,
                             const std::vector<HypBox>& boxes);

// the fixed (omega, phi) battery: l <= 4 with three centered boxes
std::vector<std::pair<SphHarmonic, SurfaceTestFn>> standard_battery();

} // namespace linnik
