#include "helm/mesh_grade.hpp"

#include <algorithm>
#include <cmath>

namespace helm::geom {

double RegionTargets::of(Region r) const {
    switch (r) {
        case Region::K: return h_k;
        case Region::V: return h_v;
        case Region::I: return h_i;
        case Region::P: return h_p;
        default: return h_i;
    }
}

void RegionTargets::validate() const {
    if (!(h_k > 0 && h_v > 0 && h_i > 0 && h_p > 0))
        throw std::invalid_argument("RegionTargets: all targets must be positive");
}

namespace {

// 1D spacing by equidistributing the density 1/need(x) over ceil(integral)
// intervals. For a size field with Lipschitz constant g the adjacent
// interval ratio is at most e^g, so g = ln(max ratio). The requirement is
// first dilated by one target length so elements that merely touch a region
// still satisfy its target.
std::vector<double> graded_axis(double lo, double hi, const std::vector<double>& need,
                                double g) {
    const std::size_t nf = need.size();
    const double delta = (hi - lo) / static_cast<double>(nf);
    std::vector<double> sm = need;
    for (std::size_t i = 0; i < nf; ++i) {
        const std::size_t reach = static_cast<std::size_t>(std::ceil(need[i] / delta)) + 1;
        const std::size_t a = i > reach ? i - reach : 0;
        const std::size_t b = std::min(nf - 1, i + reach);
        for (std::size_t j = a; j <= b; ++j) sm[j] = std::min(sm[j], need[i]);
    }
    for (std::size_t i = 1; i < nf; ++i) sm[i] = std::min(sm[i], sm[i - 1] + g * delta);
    for (std::size_t i = nf - 1; i-- > 0;) sm[i] = std::min(sm[i], sm[i + 1] + g * delta);
    // cumulative density
    std::vector<double> cum(nf + 1, 0.0);
    for (std::size_t i = 0; i < nf; ++i) cum[i + 1] = cum[i] + delta / sm[i];
    const double total = cum[nf];
    const std::size_t n = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(total - 1e-9)));
    std::vector<double> xs(n + 1);
    xs[0] = lo;
    xs[n] = hi;
    std::size_t cell = 0;
    for (std::size_t j = 1; j < n; ++j) {
        const double target = total * static_cast<double>(j) / static_cast<double>(n);
        while (cell + 1 < nf && cum[cell + 1] < target) ++cell;
        const double frac = (target - cum[cell]) / (cum[cell + 1] - cum[cell]);
        xs[j] = lo + delta * (static_cast<double>(cell) + frac);
    }
    return xs;
}

}  // namespace

Mesh2D grade_mesh_by_region(const Box& domain, const RegionTargets& targets,
                            const RegionFn& region_fn, const GradeOptions& opt) {
    targets.validate();
    if (!region_fn) throw std::invalid_argument("grade_mesh_by_region: region_fn required");
    const double tmin = std::min({targets.h_k, targets.h_v, targets.h_i, targets.h_p});
    const double tmax = std::max({targets.h_k, targets.h_v, targets.h_i, targets.h_p});
    if (tmax / tmin > opt.max_anisotropy + 1e-12)
        throw std::invalid_argument(
            "grade_mesh_by_region: target ratio " + std::to_string(tmax / tmin) +
            " exceeds the configured grading limit " + std::to_string(opt.max_anisotropy));

    const double margin = std::sqrt(2.0);  // cell edge = diameter / sqrt(2)
    const double fine = tmin / (2.0 * margin);
    const std::size_t nfx =
        std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(domain.width() / fine)));
    const std::size_t nfy =
        std::max<std::size_t>(4, static_cast<std::size_t>(std::ceil(domain.height() / fine)));

    // Projected requirement per axis: a column (row) must satisfy the
    // strictest region it crosses.
    std::vector<double> needx(nfx, tmax / margin), needy(nfy, tmax / margin);
    for (std::size_t i = 0; i < nfx; ++i) {
        double x = domain.x0 + (static_cast<double>(i) + 0.5) * domain.width() / nfx;
        for (std::size_t j = 0; j < nfy; ++j) {
            double y = domain.y0 + (static_cast<double>(j) + 0.5) * domain.height() / nfy;
            double t = targets.of(region_fn({x, y})) / margin;
            needx[i] = std::min(needx[i], t);
            needy[j] = std::min(needy[j], t);
        }
    }

    if (opt.max_grading_ratio <= 1.0)
        throw std::invalid_argument("grade_mesh_by_region: max_grading_ratio must exceed 1");
    const double g = std::log(opt.max_grading_ratio);
    std::vector<double> xs = graded_axis(domain.x0, domain.x1, needx, g);
    std::vector<double> ys = graded_axis(domain.y0, domain.y1, needy, g);

    Mesh2D mesh;
    const std::size_t nx = xs.size() - 1, ny = ys.size() - 1;
    for (std::size_t j = 0; j <= ny; ++j)
        for (std::size_t i = 0; i <= nx; ++i) mesh.vertices.push_back({xs[i], ys[j]});
    auto vid = [&](std::size_t i, std::size_t j) {
        return static_cast<std::int32_t>(j * (nx + 1) + i);
    };
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
            mesh.triangles.push_back({vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)});
        }
    for (std::size_t i = 0; i < nx; ++i) {
        mesh.boundary_edges.push_back({vid(i, 0), vid(i + 1, 0), BoundaryTag::Truncation});
        mesh.boundary_edges.push_back({vid(i, ny), vid(i + 1, ny), BoundaryTag::Truncation});
    }
    for (std::size_t j = 0; j < ny; ++j) {
        mesh.boundary_edges.push_back({vid(0, j), vid(0, j + 1), BoundaryTag::Truncation});
        mesh.boundary_edges.push_back({vid(nx, j), vid(nx, j + 1), BoundaryTag::Truncation});
    }
    mesh.element_h.resize(mesh.n_triangles());
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        mesh.element_h[t] = triangle_diameter(mesh.vertices[tri[0]], mesh.vertices[tri[1]],
                                              mesh.vertices[tri[2]]);
    }
    mesh.region.resize(mesh.n_triangles());
    classify_mesh(mesh, region_fn);
    return mesh;
}

RegionFn classify_regions_two_rect(const Box& a, const Box& b, double pml_inner_radius,
                                   double margin) {
    const bool overlap_x = a.x0 < b.x1 && b.x0 < a.x1;
    const bool overlap_y = a.y0 < b.y1 && b.y0 < a.y1;
    if (overlap_x && overlap_y)
        throw std::invalid_argument("classify_regions_two_rect: boxes not disjoint");

    // Normalize to the x-separated configuration (left box, right box). If
    // the separation is in y, swap coordinates.
    bool swapped = false;
    Box lo = a, hi = b;
    if (overlap_y && !overlap_x) {
        // separated in x
    } else if (overlap_x && !overlap_y) {
        swapped = true;
        lo = {a.y0, a.x0, a.y1, a.x1};
        hi = {b.y0, b.x0, b.y1, b.x1};
    } else {
        throw std::invalid_argument(
            "classify_regions_two_rect: boxes must face each other along one axis");
    }
    if (lo.x0 > hi.x0) std::swap(lo, hi);
    const double gap_x0 = lo.x1, gap_x1 = hi.x0;
    const double trans_y0 = std::max(lo.y0, hi.y0), trans_y1 = std::min(lo.y1, hi.y1);

    const double m = margin;
    const double r_pml = pml_inner_radius;
    const bool sw = swapped;
    return [=](Vec2 p) -> Region {
        if (std::hypot(p.x, p.y) >= r_pml) return Region::P;
        double x = sw ? p.y : p.x;
        double y = sw ? p.x : p.y;
        const bool in_gap_x = x >= gap_x0 - m && x <= gap_x1 + m;
        const bool in_trans_y = y >= trans_y0 - m && y <= trans_y1 + m;
        if (in_gap_x && in_trans_y) return Region::K;
        if (in_gap_x) return Region::V;
        return Region::I;
    };
}

}  // namespace helm::geom
