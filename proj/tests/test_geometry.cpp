#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "helm/mesh.hpp"
#include "helm/mesh_grade.hpp"
#include "helm/mesh_io.hpp"

using namespace helm;
using namespace helm::geom;

namespace {

// Billiard oracle: shoot a ray from p in direction d, reflecting off the two
// boxes; returns true if it stays inside the escape radius for the whole
// time budget (trapped or returning).
bool ray_stays_bounded(Vec2 p, Vec2 d, const Box& a, const Box& b, double r_escape,
                       double t_max) {
    double t = 0.0;
    const double dt = 1e-3;
    Vec2 x = p;
    Vec2 v = d;
    while (t < t_max) {
        Vec2 nx = {x.x + v.x * dt, x.y + v.y * dt};
        for (const Box* box : {&a, &b}) {
            if (nx.x >= box->x0 && nx.x <= box->x1 && nx.y >= box->y0 && nx.y <= box->y1) {
                // reflect off the face we crossed
                if (x.x < box->x0 || x.x > box->x1)
                    v.x = -v.x;
                else
                    v.y = -v.y;
                nx = {x.x + v.x * dt, x.y + v.y * dt};
            }
        }
        x = nx;
        t += dt;
        if (std::hypot(x.x, x.y) > r_escape) return false;
    }
    return true;
}

bool any_ray_trapped(Vec2 p, const Box& a, const Box& b) {
    for (int i = 0; i < 64; ++i) {
        double ang = 2.0 * pi * i / 64.0;
        Vec2 d{std::cos(ang), std::sin(ang)};
        if (ray_stays_bounded(p, d, a, b, 10.0, 40.0)) return true;
        if (ray_stays_bounded(p, {-d.x, -d.y}, a, b, 10.0, 40.0)) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("rect mesh: unit square at h=1/2 gives the 2x2 split") {
    auto mesh = build_rect_mesh({0, 0, 1, 1}, 0.5);
    CHECK(mesh.n_vertices() == 9);
    CHECK(mesh.n_triangles() == 8);
    auto checks = validate_mesh(mesh);
    CHECK(checks.conforming);
    CHECK(checks.positive_areas);
    CHECK(std::abs(checks.total_area - 1.0) < 1e-12);
}

TEST_CASE("rect mesh: areas cover the box exactly for several h") {
    for (double h : {0.5, 0.3, 0.17, 0.083}) {
        auto mesh = build_rect_mesh({0, 0, 1, 1}, h);
        auto checks = validate_mesh(mesh);
        CHECK(std::abs(checks.total_area - 1.0) < 1e-12);
        CHECK(checks.conforming);
        CHECK(checks.shape_regularity <= 10.0);
        CHECK(mesh.max_element_h() <= std::sqrt(2.0) * h + 1e-12);
        for (const auto& be : mesh.boundary_edges) CHECK(be.tag == BoundaryTag::Truncation);
    }
}

TEST_CASE("rect mesh: (0,2)x(0,1) at h=1/2 has 8 cells = 16 triangles") {
    auto mesh = build_rect_mesh({0, 0, 2, 1}, 0.5);
    CHECK(mesh.n_triangles() == 16);
}

TEST_CASE("rect mesh: oversized h rejected") {
    CHECK_THROWS_AS(build_rect_mesh({0, 0, 2, 1}, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(build_rect_mesh({0, 0, 1, 1}, -0.1), std::invalid_argument);
}

TEST_CASE("annulus mesh: obstacle ring lies on the circle") {
    auto mesh = build_disk_annulus_mesh(1.0, 3.0, 0.2);
    int obstacle_edges = 0;
    for (const auto& be : mesh.boundary_edges) {
        if (be.tag != BoundaryTag::Obstacle) continue;
        ++obstacle_edges;
        for (std::int32_t v : {be.a, be.b})
            CHECK(std::abs(std::hypot(mesh.vertices[v].x, mesh.vertices[v].y) - 1.0) < 1e-12);
    }
    CHECK(obstacle_edges > 0);
    for (const Vec2& v : mesh.vertices) {
        double r = std::hypot(v.x, v.y);
        CHECK(r >= 1.0 - 1e-12);
        CHECK(r <= 3.0 + 1e-12);
    }
}

TEST_CASE("annulus mesh: area matches the inscribed-polygon value and O(h^2) of the annulus") {
    const double r0 = 1.0, r1 = 3.0, h = 0.2;
    auto mesh = build_disk_annulus_mesh(r0, r1, h);
    auto checks = validate_mesh(mesh);
    CHECK(checks.conforming);
    CHECK(checks.positive_areas);
    CHECK(checks.shape_regularity <= 10.0);
    const double exact_polygon =
        inscribed_annulus_area(r0, r1, annulus_n_theta(r1, h), annulus_n_r(r0, r1, h));
    CHECK(std::abs(checks.total_area - exact_polygon) < 1e-10 * exact_polygon);
    const double annulus = pi * (r1 * r1 - r0 * r0);
    CHECK(std::abs(checks.total_area - annulus) < 2.0 * h * h);
}

TEST_CASE("annulus mesh: halving h at least halves max element width within 1.5x") {
    auto coarse = build_disk_annulus_mesh(1.0, 3.0, 0.2);
    auto fine = build_disk_annulus_mesh(1.0, 3.0, 0.1);
    CHECK(fine.max_element_h() <= coarse.max_element_h() / 2.0 * 1.5);
}

TEST_CASE("annulus mesh: h too large rejected") {
    CHECK_THROWS_AS(build_disk_annulus_mesh(1.0, 3.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(build_disk_annulus_mesh(3.0, 1.0, 0.1), std::invalid_argument);
}

TEST_CASE("two-rectangle classification") {
    // aligned boxes facing each other across a gap in x
    Box a{-1.6, -1.0, -0.5, 1.0};
    Box b{0.5, -1.0, 1.6, 1.0};
    auto region = classify_regions_two_rect(a, b, 2.2);

    CHECK(region({0.0, 0.0}) == Region::K);  // midpoint of the trapped bounce
    CHECK(region({0.0, 1.8}) == Region::V);  // transverse beam above the gap
    CHECK(region({2.0, 1.5}) == Region::P);  // |x| = 2.5 > 2.2
    CHECK(region({-2.0, 0.0}) == Region::I); // laterally displaced, |x| = 2.0 < 2.2

    // ray-shooting confirms the I point sees no trapped/returning ray
    CHECK_FALSE(any_ray_trapped({-2.0, 0.0}, a, b));
    // and the K point does (the horizontal bounce)
    CHECK(any_ray_trapped({0.0, 0.0}, a, b));
}

TEST_CASE("two-rectangle classification rejects bad geometry") {
    CHECK_THROWS_AS(classify_regions_two_rect({0, 0, 2, 2}, {1, 1, 3, 3}, 5.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(classify_regions_two_rect({0, 0, 1, 1}, {2, 2, 3, 3}, 5.0),
                    std::invalid_argument);
}

TEST_CASE("graded mesh: uniform targets reduce to the structured mesh") {
    RegionTargets t{0.2, 0.2, 0.2, 0.2};
    auto graded = grade_mesh_by_region({0, 0, 1, 1}, t, [](Vec2) { return Region::I; });
    auto rect = build_rect_mesh({0, 0, 1, 1}, 0.2 / std::sqrt(2.0));
    CHECK(graded.n_triangles() == rect.n_triangles());
    CHECK(validate_mesh(graded).conforming);
}

TEST_CASE("graded mesh: cavity region is refined to its target") {
    Box a{-1.6, -1.0, -0.5, 1.0};
    Box b{0.5, -1.0, 1.6, 1.0};
    auto region = classify_regions_two_rect(a, b, 2.9);
    const double h = 0.4;
    RegionTargets t{h / 4.0, h / 2.0, h, h};
    auto mesh = grade_mesh_by_region({-3, -3, 3, 3}, t, region);
    auto checks = validate_mesh(mesh);
    CHECK(checks.conforming);
    CHECK(checks.positive_areas);
    CHECK(checks.shape_regularity <= 10.0);
    int n_k = 0;
    for (std::size_t i = 0; i < mesh.n_triangles(); ++i) {
        if (mesh.region[i] != Region::K) continue;
        ++n_k;
        CHECK(mesh.element_h[i] <= h / 4.0 + 1e-12);
        // K triangles lie inside the declared cavity box (gap x common y)
        Vec2 c = mesh.centroid(i);
        CHECK(c.x >= a.x1 - 1e-9);
        CHECK(c.x <= b.x0 + 1e-9);
        CHECK(c.y >= -1.0 - 1e-9);
        CHECK(c.y <= 1.0 + 1e-9);
    }
    CHECK(n_k > 0);
    // no Unlabeled triangles after classification
    for (auto r : mesh.region) CHECK(r != Region::Unlabeled);
}

TEST_CASE("graded mesh: adjacent 1D interval ratio stays within the grading bound") {
    Box a{-1.6, -1.0, -0.5, 1.0};
    Box b{0.5, -1.0, 1.6, 1.0};
    auto region = classify_regions_two_rect(a, b, 2.9);
    RegionTargets t{0.1, 0.2, 0.4, 0.4};
    auto mesh = grade_mesh_by_region({-3, -3, 3, 3}, t, region);
    // recover the x-coordinates of the tensor grid
    std::vector<double> xs;
    for (const Vec2& v : mesh.vertices)
        if (std::abs(v.y - (-3.0)) < 1e-12) xs.push_back(v.x);
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 2; i < xs.size(); ++i) {
        double d0 = xs[i - 1] - xs[i - 2], d1 = xs[i] - xs[i - 1];
        double ratio = std::max(d0, d1) / std::min(d0, d1);
        CHECK(ratio <= 2.0 + 1e-9);
    }
}

TEST_CASE("graded mesh: infeasible target spread reported") {
    RegionTargets t{0.01, 0.4, 0.4, 0.4};
    CHECK_THROWS_AS(
        grade_mesh_by_region({0, 0, 1, 1}, t, [](Vec2 p) { return p.x < 0.5 ? Region::K : Region::I; }),
        std::invalid_argument);
}

TEST_CASE("mesh io round-trip") {
    auto mesh = build_disk_annulus_mesh(1.0, 2.0, 0.3);
    classify_mesh(mesh, [](Vec2 p) { return std::hypot(p.x, p.y) > 1.5 ? Region::P : Region::I; });
    std::stringstream ss;
    write_mesh(ss, mesh);
    auto back = read_mesh(ss);
    REQUIRE(back.n_vertices() == mesh.n_vertices());
    REQUIRE(back.n_triangles() == mesh.n_triangles());
    REQUIRE(back.boundary_edges.size() == mesh.boundary_edges.size());
    for (std::size_t i = 0; i < mesh.n_vertices(); ++i) {
        CHECK(back.vertices[i].x == mesh.vertices[i].x);
        CHECK(back.vertices[i].y == mesh.vertices[i].y);
    }
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
        CHECK(back.triangles[t] == mesh.triangles[t]);
        CHECK(back.region[t] == mesh.region[t]);
    }
}

TEST_CASE("mesh io rejects malformed input") {
    std::stringstream bad_header("x");
    CHECK_THROWS_AS(read_mesh(bad_header), std::runtime_error);
    std::stringstream bad_index("3 1 0\n0 0\n1 0\n0 1\n0 1 7 K\n");
    CHECK_THROWS_AS(read_mesh(bad_index), std::runtime_error);
    // non-conforming: a dangling triangle edge without boundary tag
    std::stringstream non_conf("3 1 2\n0 0\n1 0\n0 1\n0 1 2 K\n0 1 Truncation\n1 2 Truncation\n");
    CHECK_THROWS_AS(read_mesh(non_conf), std::runtime_error);
}

TEST_CASE("conformity and orientation hold on random graded meshes") {
    std::mt19937 rng(314);
    std::uniform_real_distribution<double> d(0.15, 0.5);
    for (int trial = 0; trial < 5; ++trial) {
        double t1 = d(rng), ratio = 1.0 + 2.0 * (trial % 4) / 3.0;
        RegionTargets t{t1, std::min(4.0 * t1, t1 * ratio), std::min(4.0 * t1, t1 * ratio),
                        std::min(4.0 * t1, t1 * ratio)};
        auto mesh = grade_mesh_by_region(
            {0, 0, 2, 1.3}, t,
            [](Vec2 p) { return p.x < 0.7 ? Region::K : Region::I; });
        auto checks = validate_mesh(mesh);
        CHECK(checks.conforming);
        CHECK(checks.positive_areas);
        CHECK(checks.shape_regularity <= 10.0);
        CHECK(std::abs(checks.total_area - 2.6) < 1e-10);
    }
}
