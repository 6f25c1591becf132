#include "helm/pml.hpp"

#include <cmath>

namespace helm::medium {

void PmlRadialSpec::validate() const {
    if (!(0 < r_scat && r_scat < r_pml && r_pml < r_tr))
        throw std::invalid_argument("PmlRadialSpec: need 0 < r_scat < r_pml < r_tr");
    const double eps = 1e-3;
    if (!(theta > eps && theta < pi / 2.0 - eps))
        throw std::invalid_argument("PmlRadialSpec: theta must be in (0, pi/2) away from ends");
    if (exponent < 2) throw std::invalid_argument("PmlRadialSpec: exponent must be >= 2");
}

void PmlCartesianSpec::validate() const {
    const double wmin = std::min({width_left, width_right, width_bottom, width_top});
    if (!(kappa_lin > 0 && kappa_lin < wmin))
        throw std::invalid_argument("PmlCartesianSpec: need 0 < kappa_lin < min width");
    if (!(sigma > 0)) throw std::invalid_argument("PmlCartesianSpec: sigma must be positive");
}

CoefficientField unit_coefficient() { return CoefficientField{}; }

RadialScaling radial_scaling_g(const PmlRadialSpec& spec, double r) {
    if (r < 0) throw std::invalid_argument("radial_scaling_g: r must be nonnegative");
    const double s = r - spec.r_pml;
    if (s <= 0) return {0.0, 0.0, 0.0};
    const double w = spec.width();
    const double t = std::tan(spec.theta);
    const int q = spec.exponent;
    const double scale = t / std::pow(w, q - 1);
    return {scale * std::pow(s, q), scale * q * std::pow(s, q - 1),
            scale * q * (q - 1) * std::pow(s, q - 2)};
}

PmlCoeffs pml_coeffs_from_scaling(PmlVariant variant, cplx alpha, cplx beta, cplx alpha_prime,
                                  cplx beta_prime, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    cplx d0, d1;
    PmlCoeffs out;
    if (variant == PmlVariant::Multiplied) {
        d0 = beta / alpha;
        d1 = alpha / beta;
        out.n = alpha * beta;
        out.b[0] = out.b[1] = 0.0;
    } else {
        d0 = 1.0 / (alpha * alpha);
        d1 = 1.0 / (beta * beta);
        out.n = 1.0;
        // b = H (alpha^-2 (log(alpha beta))', 0)^T
        cplx radial = (alpha_prime / alpha + beta_prime / beta) / (alpha * alpha);
        out.b[0] = c * radial;
        out.b[1] = s * radial;
    }
    // H diag(d0, d1) H^T with H the rotation by phi
    out.a.m[0][0] = d0 * c * c + d1 * s * s;
    out.a.m[0][1] = (d0 - d1) * c * s;
    out.a.m[1][0] = out.a.m[0][1];
    out.a.m[1][1] = d0 * s * s + d1 * c * c;
    return out;
}

PmlCoeffs eval_pml_radial(const PmlRadialSpec& spec, Vec2 x, const CoefficientField& n_field) {
    const double r = norm(x);
    if (r <= spec.r_pml) {
        PmlCoeffs out;
        out.a.m[0][0] = out.a.m[1][1] = 1.0;
        out.a.m[0][1] = out.a.m[1][0] = 0.0;
        out.n = n_field(x);
        out.b[0] = out.b[1] = 0.0;
        return out;
    }
    const RadialScaling g = radial_scaling_g(spec, r);
    const cplx i{0.0, 1.0};
    const cplx alpha = 1.0 + i * g.gp;
    const cplx beta = 1.0 + i * g.g / r;
    const cplx alpha_prime = i * g.gpp;
    const cplx beta_prime = i * (g.gp - g.g / r) / r;
    return pml_coeffs_from_scaling(spec.variant, alpha, beta, alpha_prime, beta_prime,
                                   std::atan2(x.y, x.x));
}

CartesianFactors eval_pml_cartesian(const PmlCartesianSpec& spec, Vec2 x) {
    auto fs_prime = [&](double d) {
        if (d <= 0) return 0.0;
        return spec.sigma * std::min(d / spec.kappa_lin, 1.0);
    };
    const double d1 = std::max(spec.interior.x0 - x.x, x.x - spec.interior.x1);
    const double d2 = std::max(spec.interior.y0 - x.y, x.y - spec.interior.y1);
    const cplx i{0.0, 1.0};
    return {1.0 + i * fs_prime(d1), 1.0 + i * fs_prime(d2)};
}

double garding_min(const PmlRadialSpec& spec, std::size_t n_r, std::size_t n_phi,
                   std::size_t n_xi, double omega, const CoefficientField& n_field) {
    const cplx rot = std::exp(cplx{0.0, omega});
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t ir = 0; ir < n_r; ++ir) {
        double r = spec.r_tr * (static_cast<double>(ir) + 0.5) / static_cast<double>(n_r);
        for (std::size_t ip = 0; ip < n_phi; ++ip) {
            double phi = 2.0 * pi * static_cast<double>(ip) / static_cast<double>(n_phi);
            PmlCoeffs c = eval_pml_radial(spec, {r * std::cos(phi), r * std::sin(phi)}, n_field);
            for (std::size_t ix = 0; ix < n_xi; ++ix) {
                double a = pi * static_cast<double>(ix) / static_cast<double>(n_xi);
                cplx xi0 = std::cos(a), xi1 = std::sin(a);
                cplx q = rot * (c.a.m[0][0] * xi0 * std::conj(xi0) +
                                c.a.m[0][1] * xi1 * std::conj(xi0) +
                                c.a.m[1][0] * xi0 * std::conj(xi1) +
                                c.a.m[1][1] * xi1 * std::conj(xi1));
                worst = std::min(worst, q.real());
            }
        }
    }
    return worst;
}

double suggest_omega(const PmlRadialSpec& spec) {
    // Eigenvalue arguments of A_theta lie in [-2*max(arg alpha, arg beta), 0];
    // rotating by the midpoint keeps all of them in the right half plane.
    double amax = 0.0;
    const std::size_t n = 256;
    for (std::size_t i = 0; i <= n; ++i) {
        double r = spec.r_pml + spec.width() * static_cast<double>(i) / static_cast<double>(n);
        RadialScaling g = radial_scaling_g(spec, r);
        amax = std::max({amax, std::atan(g.gp), std::atan(g.g / r)});
    }
    return spec.variant == PmlVariant::Multiplied ? 0.0 : amax;
}

}  // namespace helm::medium
