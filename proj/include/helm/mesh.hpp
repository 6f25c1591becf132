#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "helm/common.hpp"

namespace helm::geom {

enum class BoundaryTag : std::uint8_t { Obstacle, Truncation, None };
enum class Region : std::uint8_t { K, V, I, P, Unlabeled };

const char* to_string(BoundaryTag t);
const char* to_string(Region r);

struct BoundaryEdge {
    std::int32_t a, b;
    BoundaryTag tag;
};

struct Box {
    double x0, y0, x1, y1;
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(Vec2 p) const { return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1; }
};

// Conforming triangulation with counterclockwise triangles, per-triangle
// diameters and region labels, and tagged boundary edges.
struct Mesh2D {
    std::vector<Vec2> vertices;
    std::vector<std::array<std::int32_t, 3>> triangles;
    std::vector<BoundaryEdge> boundary_edges;
    std::vector<double> element_h;
    std::vector<Region> region;

    std::size_t n_vertices() const { return vertices.size(); }
    std::size_t n_triangles() const { return triangles.size(); }
    Vec2 centroid(std::size_t t) const;
    double triangle_area(std::size_t t) const;
    double max_element_h() const;
};

double triangle_diameter(Vec2 a, Vec2 b, Vec2 c);
double triangle_inradius(Vec2 a, Vec2 b, Vec2 c);
double signed_area(Vec2 a, Vec2 b, Vec2 c);

// Structured rectangle mesh: ceil(L1/h) x ceil(L2/h) cells, each split into
// two triangles; boundary edges tagged Truncation.
Mesh2D build_rect_mesh(const Box& box, double h_target);

// Polar-structured annulus mesh between inscribed polygons of the circles
// |x| = r_obs and |x| = r_tr; inner boundary tagged Obstacle, outer
// Truncation.
Mesh2D build_disk_annulus_mesh(double r_obs, double r_tr, double h_target);

struct MeshChecks {
    bool conforming = false;          // every edge: 2 triangles or 1 + boundary tag
    bool positive_areas = false;      // all signed areas > 0
    double shape_regularity = 0.0;    // max diameter / inradius
    double total_area = 0.0;
};

MeshChecks validate_mesh(const Mesh2D& mesh);

// Exact area of the polygonally-inscribed annulus produced by
// build_disk_annulus_mesh (reference value for area checks).
double inscribed_annulus_area(double r_obs, double r_tr, std::size_t n_theta, std::size_t n_r);
// Angular subdivision the annulus builder picks for a given target width.
std::size_t annulus_n_theta(double r_tr, double h_target);
std::size_t annulus_n_r(double r_obs, double r_tr, double h_target);

using RegionFn = std::function<Region(Vec2)>;

// Labels every triangle by region_fn at its centroid.
void classify_mesh(Mesh2D& mesh, const RegionFn& region_fn);

}  // namespace helm::geom
