#pragma once

#include <functional>

#include "helm/common.hpp"
#include "helm/mesh.hpp"

namespace helm::medium {

enum class PmlVariant { Multiplied, Unmultiplied };

// Radial complex scaling g_theta(r) = tan(theta) * (r - r_pml)^q / w^(q-1)
// for r > r_pml, zero otherwise (w = r_tr - r_pml). The cubic default is
// C^{2,1}, enough for p <= 2; raise the exponent for higher degree.
struct PmlRadialSpec {
    double r_scat;
    double r_pml;
    double r_tr;
    double theta = pi / 4.0;
    PmlVariant variant = PmlVariant::Multiplied;
    int exponent = 3;

    void validate() const;
    double width() const { return r_tr - r_pml; }
};

// Cartesian per-direction scaling for Schwarz subproblems: the profile is a
// C^{1,1} quadratic ramp blending into a linear tail,
// f_s'(d) = sigma * min(d / kappa_lin, 1).
struct PmlCartesianSpec {
    geom::Box interior;  // scaling anchors (a_1,b_1) x (a_2,b_2)
    double width_left, width_right, width_bottom, width_top;
    double kappa_lin;
    double sigma = 1.0;

    void validate() const;
};

// Physical coefficient n(x): n >= n_min > 0, identically 1 outside the
// support box.
struct CoefficientField {
    std::function<double(Vec2)> n;
    geom::Box support{0, 0, 0, 0};
    double n_min = 1.0;

    double operator()(Vec2 p) const { return n ? n(p) : 1.0; }
};

CoefficientField unit_coefficient();

struct Mat2c {
    cplx m[2][2];
};

// Pointwise coefficients of the PML sesquilinear form.
struct PmlCoeffs {
    Mat2c a;      // A_theta
    cplx n;       // n_theta
    cplx b[2];    // drift (zero in the multiplied variant)
};

// (g_theta, g_theta', g_theta'') at radius r.
struct RadialScaling {
    double g, gp, gpp;
};
RadialScaling radial_scaling_g(const PmlRadialSpec& spec, double r);

// Assembles A_theta, n_theta, b_theta from alpha, beta and their r-derivatives
// at polar angle phi. Exposed so tests can drive it with exact complex values.
PmlCoeffs pml_coeffs_from_scaling(PmlVariant variant, cplx alpha, cplx beta, cplx alpha_prime,
                                  cplx beta_prime, double phi);

PmlCoeffs eval_pml_radial(const PmlRadialSpec& spec, Vec2 x,
                          const CoefficientField& n_field = unit_coefficient());

// Per-direction complex stretch factors (1 + i g_l'(x_l)).
struct CartesianFactors {
    cplx g1, g2;
};
CartesianFactors eval_pml_cartesian(const PmlCartesianSpec& spec, Vec2 x);

// min over the sample grid and unit directions xi of
// Re(e^{i omega} A_theta(x) xi . xi) / |xi|^2. Use omega = 0 for the
// multiplied variant; suggest_omega gives a rotation making the unmultiplied
// variant positive.
double garding_min(const PmlRadialSpec& spec, std::size_t n_r, std::size_t n_phi,
                   std::size_t n_xi, double omega,
                   const CoefficientField& n_field = unit_coefficient());
double suggest_omega(const PmlRadialSpec& spec);

}  // namespace helm::medium
