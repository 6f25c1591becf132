#pragma once

#include <iosfwd>
#include <string>

#include "helm/mesh.hpp"

namespace helm::geom {

// Line-oriented text format:
//   nv nt nb
//   x y                 (nv lines)
//   i j k region        (nt lines)
//   i j tag             (nb lines)
void write_mesh(std::ostream& os, const Mesh2D& mesh);
void write_mesh_file(const std::string& path, const Mesh2D& mesh);

// Parses and validates (index bounds, orientation, conformity); throws
// std::runtime_error on malformed input.
Mesh2D read_mesh(std::istream& is);
Mesh2D read_mesh_file(const std::string& path);

}  // namespace helm::geom
