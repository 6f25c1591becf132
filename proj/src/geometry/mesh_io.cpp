#include "helm/mesh_io.hpp"

#include <cstring>
#include <fstream>
#include <sstream>

namespace helm::geom {

namespace {

BoundaryTag parse_tag(const std::string& s) {
    if (s == "Obstacle") return BoundaryTag::Obstacle;
    if (s == "Truncation") return BoundaryTag::Truncation;
    if (s == "None") return BoundaryTag::None;
    throw std::runtime_error("mesh: unknown boundary tag '" + s + "'");
}

Region parse_region(const std::string& s) {
    if (s == "K") return Region::K;
    if (s == "V") return Region::V;
    if (s == "I") return Region::I;
    if (s == "P") return Region::P;
    if (s == "Unlabeled") return Region::Unlabeled;
    throw std::runtime_error("mesh: unknown region label '" + s + "'");
}

}  // namespace

void write_mesh(std::ostream& os, const Mesh2D& mesh) {
    os << mesh.n_vertices() << ' ' << mesh.n_triangles() << ' ' << mesh.boundary_edges.size()
       << '\n';
    os.precision(17);
    for (const Vec2& v : mesh.vertices) os << v.x << ' ' << v.y << '\n';
    for (std::size_t t = 0; t < mesh.n_triangles(); ++t) {
        const auto& tri = mesh.triangles[t];
        os << tri[0] << ' ' << tri[1] << ' ' << tri[2] << ' ' << to_string(mesh.region[t]) << '\n';
    }
    for (const BoundaryEdge& be : mesh.boundary_edges)
        os << be.a << ' ' << be.b << ' ' << to_string(be.tag) << '\n';
}

void write_mesh_file(const std::string& path, const Mesh2D& mesh) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("write_mesh_file: cannot open " + path);
    write_mesh(f, mesh);
}

Mesh2D read_mesh(std::istream& is) {
    std::size_t nv = 0, nt = 0, nb = 0;
    if (!(is >> nv >> nt >> nb)) throw std::runtime_error("mesh: bad header");
    Mesh2D mesh;
    mesh.vertices.resize(nv);
    for (std::size_t i = 0; i < nv; ++i)
        if (!(is >> mesh.vertices[i].x >> mesh.vertices[i].y))
            throw std::runtime_error("mesh: bad vertex line " + std::to_string(i));
    mesh.triangles.resize(nt);
    mesh.region.resize(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        std::string reg;
        auto& tri = mesh.triangles[t];
        if (!(is >> tri[0] >> tri[1] >> tri[2] >> reg))
            throw std::runtime_error("mesh: bad triangle line " + std::to_string(t));
        for (int e = 0; e < 3; ++e)
            if (tri[e] < 0 || static_cast<std::size_t>(tri[e]) >= nv)
                throw std::runtime_error("mesh: triangle vertex index out of range");
        mesh.region[t] = parse_region(reg);
    }
    mesh.boundary_edges.resize(nb);
    for (std::size_t e = 0; e < nb; ++e) {
        std::string tag;
        auto& be = mesh.boundary_edges[e];
        if (!(is >> be.a >> be.b >> tag))
            throw std::runtime_error("mesh: bad boundary line " + std::to_string(e));
        if (be.a < 0 || static_cast<std::size_t>(be.a) >= nv || be.b < 0 ||
            static_cast<std::size_t>(be.b) >= nv)
            throw std::runtime_error("mesh: boundary vertex index out of range");
        be.tag = parse_tag(tag);
    }
    mesh.element_h.resize(nt);
    for (std::size_t t = 0; t < nt; ++t) {
        const auto& tri = mesh.triangles[t];
        mesh.element_h[t] = triangle_diameter(mesh.vertices[tri[0]], mesh.vertices[tri[1]],
                                              mesh.vertices[tri[2]]);
    }
    MeshChecks checks = validate_mesh(mesh);
    if (!checks.positive_areas) throw std::runtime_error("mesh: non-positive triangle area");
    if (!checks.conforming) throw std::runtime_error("mesh: non-conforming triangulation");
    return mesh;
}

Mesh2D read_mesh_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("read_mesh_file: cannot open " + path);
    return read_mesh(f);
}

}  // namespace helm::geom
