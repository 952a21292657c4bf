#include "linnik/weyl.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace linnik {

namespace {

constexpr int kMaxDegree = 16;

// associated Legendre P_l^m without the Condon-Shortley phase
double assoc_legendre(int l, int m, double x)
{
    double pmm = 1.0;
    if (m > 0) {
        double s = std::sqrt(std::max(0.0, 1.0 - x * x));
        double fact = 1.0;
        for (int i = 0; i < m; ++i) {
            pmm *= fact * s;
            fact += 2.0;
        }
    }
    if (l == m) return pmm;
    double pm1 = x * (2 * m + 1) * pmm;
    if (l == m + 1) return pm1;
    double p = 0;
    for (int ll = m + 2; ll <= l; ++ll) {
        p = ((2 * ll - 1) * x * pm1 - (ll + m - 1) * pmm) / (ll - m);
        pmm = pm1;
        pm1 = p;
    }
    return p;
}

} // namespace

namespace {

// shared by HypBox and the centered box test function so the two weyl
// evaluation paths classify boundary points identically
bool box_contains(double x1, double x2, double y1, double y2, double x, double y)
{
    const double eps = 1e-9;
    if (x >= 0.5 - eps) x -= 1.0; // fold the identified vertical edges
    return x >= x1 - eps && x < x2 - eps && y >= y1 - eps && y < y2 - eps;
}

} // namespace

double SphHarmonic::sup() const
{
    // addition theorem: sum_m Y_{l,m}^2 = 2l + 1 pointwise
    return std::sqrt(2.0 * l + 1.0);
}

double sph_harm(const SphHarmonic& h, double ux, double uy, double uz)
{
    if (h.l < 0 || h.l > kMaxDegree)
        throw std::invalid_argument("sph_harm: degree out of range");
    const int am = h.m < 0 ? -h.m : h.m;
    if (am > h.l) throw std::invalid_argument("sph_harm: |m| > l");

    double norm = 2.0 * h.l + 1.0;
    for (int k = h.l - am + 1; k <= h.l + am; ++k) norm /= k;
    double y = std::sqrt(norm) * assoc_legendre(h.l, am, uz);
    if (h.m == 0) return y;
    double phi = std::atan2(uy, ux);
    double ang = h.m > 0 ? std::cos(am * phi) : std::sin(am * phi);
    return std::numbers::sqrt2 * ang * y;
}

bool HypBox::contains(const HPoint& z) const
{
    return box_contains(x1, x2, y1, y2, z.x, z.y);
}

HypBox HypBox::make(double x1, double x2, double y1, double y2, std::string id)
{
    if (!(x1 < x2) || !(0 < y1) || !(y1 < y2))
        throw std::invalid_argument("HypBox: degenerate box");
    double inv_y2 = std::isinf(y2) ? 0.0 : 1.0 / y2;
    double area = (x2 - x1) * (1.0 / y1 - inv_y2);
    return {x1, x2, y1, y2, area * 3.0 / std::numbers::pi, std::move(id)};
}

HypBox HypBox::cusp_strip(double T)
{
    if (!(T > 1)) throw std::invalid_argument("cusp_strip: need T > 1");
    char id[32];
    std::snprintf(id, sizeof id, "strip%g", T);
    return make(-0.5, 0.5, T, std::numeric_limits<double>::infinity(), id);
}

double SurfaceTestFn::raw(double x, double y) const
{
    switch (kind_) {
    case Kind::constant_one:
        return 1.0;
    case Kind::centered_box:
        return box_contains(x1_, x2_, y1_, y2_, x, y) ? 1.0 : 0.0;
    case Kind::centered_bump: {
        double tx = (2 * x - x1_ - x2_) / (x2_ - x1_);
        double ty = (2 * y - y1_ - y2_) / (y2_ - y1_);
        if (std::abs(tx) >= 1 || std::abs(ty) >= 1) return 0.0;
        return std::exp(-1.0 / (1.0 - tx * tx) - 1.0 / (1.0 - ty * ty));
    }
    case Kind::sampled_grid: {
        if (x < x1_ || x > x2_ || y < y1_ || y > y2_) return 0.0;
        double fx = (x - x1_) / (x2_ - x1_) * (nx_ - 1);
        double fy = (y - y1_) / (y2_ - y1_) * (ny_ - 1);
        int ix = std::min(static_cast<int>(fx), nx_ - 2);
        int iy = std::min(static_cast<int>(fy), ny_ - 2);
        double ax = fx - ix, ay = fy - iy;
        auto at = [&](int i, int j) { return values_[static_cast<std::size_t>(j) * nx_ + i]; };
        return (1 - ax) * (1 - ay) * at(ix, iy) + ax * (1 - ay) * at(ix + 1, iy) +
               (1 - ax) * ay * at(ix, iy + 1) + ax * ay * at(ix + 1, iy + 1);
    }
    }
    return 0.0;
}

double SurfaceTestFn::operator()(const HPoint& z) const
{
    if (kind_ == Kind::constant_one) return 1.0;
    return raw(z.x, z.y) - mean_;
}

SurfaceTestFn SurfaceTestFn::one()
{
    SurfaceTestFn f;
    f.kind_ = Kind::constant_one;
    f.mean_ = 1.0;
    f.sup_ = 1.0;
    f.id_ = "one";
    return f;
}

SurfaceTestFn SurfaceTestFn::centered_box(const HypBox& box)
{
    SurfaceTestFn f;
    f.kind_ = Kind::centered_box;
    f.x1_ = box.x1;
    f.x2_ = box.x2;
    f.y1_ = box.y1;
    f.y2_ = box.y2;
    f.mean_ = box.measure;
    f.sup_ = std::max(1.0 - f.mean_, f.mean_);
    f.id_ = "box:" + box.id;
    return f;
}

namespace {

// normalized hyperbolic mean (3/pi) int f / y^2, midpoint rule
double hyp_mean(const SurfaceTestFn& f, double x1, double x2, double y1, double y2,
                double (SurfaceTestFn::*eval)(double, double) const)
{
    const int n = 256;
    double hx = (x2 - x1) / n, hy = (y2 - y1) / n;
    double s = 0;
    for (int i = 0; i < n; ++i) {
        double x = x1 + (i + 0.5) * hx;
        for (int j = 0; j < n; ++j) {
            double y = y1 + (j + 0.5) * hy;
            s += (f.*eval)(x, y) / (y * y);
        }
    }
    return s * hx * hy * 3.0 / std::numbers::pi;
}

} // namespace

SurfaceTestFn SurfaceTestFn::centered_bump(double x1, double x2, double y1, double y2,
                                           std::string id)
{
    if (!(x1 < x2) || !(0 < y1) || !(y1 < y2) || std::isinf(y2))
        throw std::invalid_argument("centered_bump: degenerate box");
    SurfaceTestFn f;
    f.kind_ = Kind::centered_bump;
    f.x1_ = x1;
    f.x2_ = x2;
    f.y1_ = y1;
    f.y2_ = y2;
    f.mean_ = hyp_mean(f, x1, x2, y1, y2, &SurfaceTestFn::raw);
    double peak = std::exp(-2.0);
    f.sup_ = std::max(peak - f.mean_, f.mean_);
    f.id_ = "bump:" + std::move(id);
    return f;
}

SurfaceTestFn SurfaceTestFn::sampled_grid(double x1, double x2, double y1, double y2,
                                          int nx, int ny, std::vector<double> values,
                                          std::string id)
{
    if (nx < 2 || ny < 2 || values.size() != static_cast<std::size_t>(nx) * ny)
        throw std::invalid_argument("sampled_grid: bad node grid");
    if (!(x1 < x2) || !(0 < y1) || !(y1 < y2) || std::isinf(y2))
        throw std::invalid_argument("sampled_grid: degenerate box");
    SurfaceTestFn f;
    f.kind_ = Kind::sampled_grid;
    f.x1_ = x1;
    f.x2_ = x2;
    f.y1_ = y1;
    f.y2_ = y2;
    f.nx_ = nx;
    f.ny_ = ny;
    f.values_ = std::move(values);
    f.mean_ = hyp_mean(f, x1, x2, y1, y2, &SurfaceTestFn::raw);
    double m = 0;
    for (double v : f.values_) m = std::max({m, v - f.mean_, f.mean_ - v});
    f.sup_ = std::max(m, std::abs(f.mean_));
    f.id_ = "grid:" + std::move(id);
    return f;
}

HPoint heegner_point(const PrimVec3& v)
{
    HPoint z = form_root(reduce_form(raw_gram(v)).first);
    z.reduced = true;
    return z;
}

WeylReport weyl_sum(u64 D, const SphHarmonic& omega, const SurfaceTestFn& phi)
{
    WeylReport rep;
    rep.index = D;
    rep.omega_id = omega.id();
    rep.phi_id = phi.id();
    const double inv_norm = 1.0 / std::sqrt(static_cast<double>(D));
    for (const PrimVec3& v : enumerate_sphere(D)) {
        double w = sph_harm(omega, v.x * inv_norm, v.y * inv_norm, v.z * inv_norm);
        rep.sum += w * phi(heegner_point(v));
        ++rep.count;
    }
    rep.normalized = rep.count ? rep.sum / static_cast<double>(rep.count) : 0.0;
    return rep;
}

std::vector<Cap> standard_caps()
{
    const double thetas[3] = {std::numbers::pi / 6, std::numbers::pi / 3,
                              std::numbers::pi / 2};
    std::vector<Cap> caps;
    int k = 0;
    for (int x = -1; x <= 1; ++x)
        for (int y = -1; y <= 1; ++y)
            for (int z = -1; z <= 1; ++z) {
                if (x == 0 && y == 0 && z == 0) continue;
                double n = std::sqrt(static_cast<double>(x * x + y * y + z * z));
                double ct = std::cos(thetas[k % 3]);
                caps.push_back({x / n, y / n, z / n, ct, (1.0 - ct) / 2.0,
                                "cap" + std::to_string(k)});
                ++k;
            }
    return caps;
}

std::vector<HypBox> standard_boxes()
{
    std::vector<HypBox> boxes;
    boxes.push_back(HypBox::cusp_strip(1.5));
    boxes.push_back(HypBox::cusp_strip(2.0));
    boxes.push_back(HypBox::cusp_strip(3.0));
    boxes.push_back(HypBox::make(-0.25, 0.0, 1.1, 1.4, "r1"));
    boxes.push_back(HypBox::make(0.0, 0.25, 1.1, 1.4, "r2"));
    boxes.push_back(HypBox::make(-0.4, -0.15, 1.5, 2.0, "r3"));
    boxes.push_back(HypBox::make(0.15, 0.4, 1.5, 2.0, "r4"));
    boxes.push_back(HypBox::make(-0.125, 0.125, 2.0, 3.0, "r5"));
    boxes.push_back(HypBox::make(-0.5, 0.5, 3.0, 5.0, "r6"));
    return boxes;
}

DiscrepancyStats discrepancy(u64 D, const std::vector<Cap>& caps,
                             const std::vector<HypBox>& boxes)
{
    DiscrepancyStats st;
    st.D = D;
    const std::size_t nc = caps.size(), nb = boxes.size();
    std::vector<u64> cap_hits(nc, 0), box_hits(nb, 0), joint_hits(nc * nb, 0);
    std::vector<char> in_cap(nc), in_box(nb);
    const double inv_norm = 1.0 / std::sqrt(static_cast<double>(D));
    for (const PrimVec3& v : enumerate_sphere(D)) {
        double ux = v.x * inv_norm, uy = v.y * inv_norm, uz = v.z * inv_norm;
        HPoint z = heegner_point(v);
        for (std::size_t i = 0; i < nc; ++i) {
            in_cap[i] = ux * caps[i].ax + uy * caps[i].ay + uz * caps[i].az >=
                        caps[i].cos_theta;
            cap_hits[i] += in_cap[i];
        }
        for (std::size_t j = 0; j < nb; ++j) {
            in_box[j] = boxes[j].contains(z);
            box_hits[j] += in_box[j];
        }
        for (std::size_t i = 0; i < nc; ++i)
            if (in_cap[i])
                for (std::size_t j = 0; j < nb; ++j) joint_hits[i * nb + j] += in_box[j];
        ++st.count;
    }
    if (st.count == 0) return st;
    const double n = static_cast<double>(st.count);
    for (std::size_t i = 0; i < nc; ++i)
        st.max_cap_dev = std::max(st.max_cap_dev, std::abs(cap_hits[i] / n - caps[i].measure));
    for (std::size_t j = 0; j < nb; ++j)
        st.max_box_dev = std::max(st.max_box_dev, std::abs(box_hits[j] / n - boxes[j].measure));
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            st.max_joint_dev = std::max(
                st.max_joint_dev,
                std::abs(joint_hits[i * nb + j] / n - caps[i].measure * boxes[j].measure));
    return st;
}

std::vector<std::pair<SphHarmonic, SurfaceTestFn>> standard_battery()
{
    SurfaceTestFn b1 = SurfaceTestFn::centered_box(HypBox::cusp_strip(2.0));
    SurfaceTestFn b2 = SurfaceTestFn::centered_box(HypBox::make(-0.25, 0.0, 1.1, 1.4, "r1"));
    SurfaceTestFn b3 = SurfaceTestFn::centered_box(HypBox::make(0.15, 0.4, 1.5, 2.0, "r4"));
    return {
        {{0, 0}, b1}, {{1, 0}, b2}, {{2, 0}, b1},
        {{2, 2}, b3}, {{3, 1}, b2}, {{4, 0}, b3},
    };
}

} // namespace linnik
