#pragma once

#include "helm/mesh.hpp"

namespace helm::geom {

// Target element diameters per region label.
struct RegionTargets {
    double h_k, h_v, h_i, h_p;

    double of(Region r) const;
    void validate() const;
};

struct GradeOptions {
    double max_grading_ratio = 2.0;  // adjacent 1D interval ratio per band
    double max_anisotropy = 4.0;     // cell aspect ratio cap (keeps shape regularity <= 10)
};

// Tensor-product graded rectangle mesh: per-axis 1D spacing is equidistributed
// against the projected region targets (diameter convention: cell edges are
// h_star / sqrt(2)), smoothed so adjacent intervals differ by at most the
// grading ratio. Throws if the target spread exceeds what the anisotropy cap
// admits.
Mesh2D grade_mesh_by_region(const Box& domain, const RegionTargets& targets,
                            const RegionFn& region_fn, const GradeOptions& opt = {});

// Analytic cavity/visible/invisible/PML classification for two aligned
// axis-aligned boxes: K is the slab between the facing sides, V the
// transverse beams continuing the gap, P the set |x| >= pml_inner_radius,
// I the rest. `margin` inflates K and V into open neighbourhoods.
RegionFn classify_regions_two_rect(const Box& a, const Box& b, double pml_inner_radius,
                                   double margin = 0.0);

}  // namespace helm::geom
