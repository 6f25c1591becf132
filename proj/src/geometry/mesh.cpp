#include "helm/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace helm::geom {

const char* to_string(BoundaryTag t) {
    switch (t) {
        case BoundaryTag::Obstacle: return "Obstacle";
        case BoundaryTag::Truncation: return "Truncation";
        default: return "None";
    }
}

const char* to_string(Region r) {
    switch (r) {
        case Region::K: return "K";
        case Region::V: return "V";
        case Region::I: return "I";
        case Region::P: return "P";
        default: return "Unlabeled";
    }
}

Vec2 Mesh2D::centroid(std::size_t t) const {
    const auto& tri = triangles[t];
    Vec2 a = vertices[tri[0]], b = vertices[tri[1]], c = vertices[tri[2]];
    return {(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
}

double Mesh2D::triangle_area(std::size_t t) const {
    const auto& tri = triangles[t];
    return signed_area(vertices[tri[0]], vertices[tri[1]], vertices[tri[2]]);
}

double Mesh2D::max_element_h() const {
    double m = 0.0;
    for (double h : element_h) m = std::max(m, h);
    return m;
}

double signed_area(Vec2 a, Vec2 b, Vec2 c) { return 0.5 * cross(b - a, c - a); }

double triangle_diameter(Vec2 a, Vec2 b, Vec2 c) {
    return std::max({norm(b - a), norm(c - b), norm(a - c)});
}

double triangle_inradius(Vec2 a, Vec2 b, Vec2 c) {
    double la = norm(b - a), lb = norm(c - b), lc = norm(a - c);
    double s = 0.5 * (la + lb + lc);
    return std::abs(signed_area(a, b, c)) / s;
}

namespace {

void finish_mesh(Mesh2D& mesh) {
    mesh.element_h.resize(mesh.n_triangles());
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        mesh.element_h[t] = triangle_diameter(mesh.vertices[tri[0]], mesh.vertices[tri[1]],
                                              mesh.vertices[tri[2]]);
    }
    mesh.region.assign(mesh.n_triangles(), Region::Unlabeled);
}

}  // namespace

Mesh2D build_rect_mesh(const Box& box, double h_target) {
    const double L1 = box.width(), L2 = box.height();
    if (L1 <= 0 || L2 <= 0) throw std::invalid_argument("build_rect_mesh: degenerate box");
    if (h_target <= 0 || h_target > std::min(L1, L2))
        throw std::invalid_argument("build_rect_mesh: h_target larger than shorter box side");
    const std::size_t nx = static_cast<std::size_t>(std::ceil(L1 / h_target - 1e-12));
    const std::size_t ny = static_cast<std::size_t>(std::ceil(L2 / h_target - 1e-12));

    Mesh2D mesh;
    mesh.vertices.reserve((nx + 1) * (ny + 1));
    for (std::size_t j = 0; j <= ny; ++j)
        for (std::size_t i = 0; i <= nx; ++i)
            mesh.vertices.push_back({box.x0 + L1 * static_cast<double>(i) / nx,
                                     box.y0 + L2 * static_cast<double>(j) / ny});
    auto vid = [&](std::size_t i, std::size_t j) {
        return static_cast<std::int32_t>(j * (nx + 1) + i);
    };
    for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i = 0; i < nx; ++i) {
            std::int32_t v00 = vid(i, j), v10 = vid(i + 1, j);
            std::int32_t v01 = vid(i, j + 1), v11 = vid(i + 1, j + 1);
            mesh.triangles.push_back({v00, v10, v11});
            mesh.triangles.push_back({v00, v11, v01});
        }
    for (std::size_t i = 0; i < nx; ++i) {
        mesh.boundary_edges.push_back({vid(i, 0), vid(i + 1, 0), BoundaryTag::Truncation});
        mesh.boundary_edges.push_back({vid(i, ny), vid(i + 1, ny), BoundaryTag::Truncation});
    }
    for (std::size_t j = 0; j < ny; ++j) {
        mesh.boundary_edges.push_back({vid(0, j), vid(0, j + 1), BoundaryTag::Truncation});
        mesh.boundary_edges.push_back({vid(nx, j), vid(nx, j + 1), BoundaryTag::Truncation});
    }
    finish_mesh(mesh);
    return mesh;
}

std::size_t annulus_n_theta(double r_tr, double h_target) {
    // chord of the outer polygon <= h_target
    return std::max<std::size_t>(8, static_cast<std::size_t>(
                                        std::ceil(2.0 * pi * r_tr / h_target - 1e-12)));
}

std::size_t annulus_n_r(double r_obs, double r_tr, double h_target) {
    return std::max<std::size_t>(2, static_cast<std::size_t>(
                                        std::ceil((r_tr - r_obs) / h_target - 1e-12)));
}

Mesh2D build_disk_annulus_mesh(double r_obs, double r_tr, double h_target) {
    if (!(0 < r_obs && r_obs < r_tr))
        throw std::invalid_argument("build_disk_annulus_mesh: need 0 < r_obs < r_tr");
    if (h_target <= 0 || h_target >= 0.5 * (r_tr - r_obs))
        throw std::invalid_argument("build_disk_annulus_mesh: h_target >= (r_tr - r_obs)/2");
    const std::size_t nt = annulus_n_theta(r_tr, h_target);
    const std::size_t nr = annulus_n_r(r_obs, r_tr, h_target);

    Mesh2D mesh;
    mesh.vertices.reserve((nr + 1) * nt);
    for (std::size_t i = 0; i <= nr; ++i) {
        double r = r_obs + (r_tr - r_obs) * static_cast<double>(i) / nr;
        for (std::size_t j = 0; j < nt; ++j) {
            double th = 2.0 * pi * static_cast<double>(j) / nt;
            mesh.vertices.push_back({r * std::cos(th), r * std::sin(th)});
        }
    }
    auto vid = [&](std::size_t i, std::size_t j) {
        return static_cast<std::int32_t>(i * nt + (j % nt));
    };
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nt; ++j) {
            std::int32_t a = vid(i, j), b = vid(i + 1, j);
            std::int32_t c = vid(i + 1, j + 1), d = vid(i, j + 1);
            mesh.triangles.push_back({a, b, c});
            mesh.triangles.push_back({a, c, d});
        }
    for (std::size_t j = 0; j < nt; ++j) {
        mesh.boundary_edges.push_back({vid(0, j), vid(0, j + 1), BoundaryTag::Obstacle});
        mesh.boundary_edges.push_back({vid(nr, j), vid(nr, j + 1), BoundaryTag::Truncation});
    }
    finish_mesh(mesh);
    return mesh;
}

double inscribed_annulus_area(double r_obs, double r_tr, std::size_t n_theta, std::size_t n_r) {
    // Each polar quad between chords has shoelace area
    // 0.5*(r1^2 - r0^2)*sin(2*pi/n_theta); the ring sum telescopes, so only
    // n_theta matters.
    (void)n_r;
    return 0.5 * static_cast<double>(n_theta) * std::sin(2.0 * pi / static_cast<double>(n_theta)) *
           (r_tr * r_tr - r_obs * r_obs);
}

MeshChecks validate_mesh(const Mesh2D& mesh) {
    MeshChecks checks;
    checks.positive_areas = true;
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
        double a = mesh.triangle_area(t);
        checks.total_area += a;
        if (a <= 0) checks.positive_areas = false;
        const auto& tri = mesh.triangles[t];
        double d = triangle_diameter(mesh.vertices[tri[0]], mesh.vertices[tri[1]],
                                     mesh.vertices[tri[2]]);
        double rho = triangle_inradius(mesh.vertices[tri[0]], mesh.vertices[tri[1]],
                                       mesh.vertices[tri[2]]);
        checks.shape_regularity = std::max(checks.shape_regularity, d / rho);
    }
    std::map<std::pair<std::int32_t, std::int32_t>, int> edge_count;
    auto key = [](std::int32_t a, std::int32_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (const auto& tri : mesh.triangles)
        for (int e = 0; e < 3; ++e) ++edge_count[key(tri[e], tri[(e + 1) % 3])];
    std::map<std::pair<std::int32_t, std::int32_t>, int> boundary;
    for (const auto& be : mesh.boundary_edges) ++boundary[key(be.a, be.b)];
    checks.conforming = true;
    for (const auto& [k, cnt] : edge_count) {
        auto it = boundary.find(k);
        bool tagged = it != boundary.end() && it->second == 1;
        if (!((cnt == 2 && !tagged) || (cnt == 1 && tagged))) checks.conforming = false;
    }
    for (const auto& [k, cnt] : boundary)
        if (edge_count.find(k) == edge_count.end()) checks.conforming = false;
    return checks;
}

void classify_mesh(Mesh2D& mesh, const RegionFn& region_fn) {
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) mesh.region[t] = region_fn(mesh.centroid(t));
}

}  // namespace helm::geom
