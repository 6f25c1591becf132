#pragma once

#include <vector>

#include "helm/common.hpp"

namespace helm::fem {

struct QuadPoint {
    Vec2 xhat;
    double w;
};

// Gauss-Legendre nodes/weights on [0,1].
std::vector<QuadPoint> gauss_legendre_01(std::size_t q);

// Quadrature on the reference triangle {x,y >= 0, x+y <= 1}, exact for
// polynomials of total degree <= degree (Duffy-collapsed tensor Gauss).
std::vector<QuadPoint> triangle_rule(int degree);

}  // namespace helm::fem
