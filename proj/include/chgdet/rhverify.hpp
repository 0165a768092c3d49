#ifndef CHGDET_RHVERIFY_HPP
#define CHGDET_RHVERIFY_HPP

#include "chgdet/kernels.hpp"
#include "chgdet/orthopoly.hpp"

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

// Explicit Riemann-Hilbert parametrices (global algebraic, Bessel,
// orthogonal-polynomial) and numerical verification of their defining
// properties: jump conditions, analyticity of prefactors, matching decay.
// Boundary values are always taken as two-sided limits a small distance
// off the contour with Richardson extrapolation, never on the cut.

namespace chgdet {

using Mat2 = Eigen::Matrix2cd;

// diag(e^c, e^{-c}) = exp(c sigma_3)
Mat2 sigma3_exp(cplx c);

// Configuration of the steepest-descent analysis: chi = k + mu with
// mu in [-1/2, 1/2), t = -4 i s, disc radius delta.  nu defaults to the
// region boundary 2s - (chi + alpha) ln(4s); pass nu = +inf for gamma = 1.
struct RHConfig {
    KernelParams params;
    double s = 8.0;
    double chi = 0.0;
    int k = 0;       // integer part of chi
    double mu = 0.0; // chi - k in [-1/2, 1/2)
    double delta = 1.0 / 3.0;
    double nu = 0.0;
    double gamma = 0.0;

    RHConfig(KernelParams p, double s, double chi,
             std::optional<double> nu_override = std::nullopt,
             double delta = 1.0 / 3.0);

    cplx t() const { return {0.0, -4.0 * s}; }
    double abs_t() const { return 4.0 * s; }
};

// D(z) = z / (1 + i sqrt(z^2-1)), principal branch of sqrt(z-1)sqrt(z+1);
// analytic off [-1,1].
cplx d_func(cplx z);

// g(z) = (1/4) sqrt(z^2-1) - (chi/t) ln D(z)
cplx g_func(cplx z, const RHConfig& cfg);

// global parametrix P^infty, analytic off Sigma_4 u Sigma_6 u Sigma_7
Mat2 p_infinity(cplx z, const RHConfig& cfg);

enum class Disc { M1, P1, Zero }; // neighborhoods of -1, +1, 0

// conformal maps f^(-1), f^(1), f^(0) on their discs
cplx conformal_map(Disc which, cplx z, const RHConfig& cfg);

// bare Bessel matrix Phi_B (only jump: across (-inf,0]) and the
// sector-corrected parametrix Phi^B solving the three-ray RH problem
Mat2 bessel_phi_bare(cplx zeta);
Mat2 bessel_parametrix(cplx zeta);

// orthogonal-polynomial parametrix H(zeta), zeta off R; row two carries
// the normalization constant -2 pi i / h_{k-1} (= 1/gamma_{k-1})
Mat2 op_parametrix_h(cplx zeta, const KernelParams& p, const OrthoData& ortho,
                     int k);

// analytic prefactors E^(-1), E^(1), E^(0)
Mat2 e_prefactor(Disc which, cplx z, const RHConfig& cfg);

// local parametrices P^(-1), P^(1), P^(0)
Mat2 local_parametrix(Disc which, cplx z, const RHConfig& cfg,
                      const OrthoData& ortho);

// constant jump matrices J_1..J_7 of the model RH problem
Mat2 model_jump_J(int i, const RHConfig& cfg);
// J_A variant: g-dressed jumps (i = 1,2,3,5); i = 4 equals J_4
Mat2 jump_JA_ray(int i, cplx z, const RHConfig& cfg);
// J_A on Sigma_6 / Sigma_7 at a point x on the open interval, boundary
// g-values taken by eps-limits
Mat2 jump_JA_interval(int i, double x, const RHConfig& cfg, double eps = 1e-5);

struct JumpReport {
    std::string contour;
    int samples = 0;
    double max_residual = 0.0;
    bool falls_with_eps = true; // residual at eps/10 not worse than at eps
};

// P^infty checks
JumpReport check_pinf_jump(int sigma, const RHConfig& cfg, int nsamples = 20);
double max_abs_det_deviation_pinf(const RHConfig& cfg, int nsamples = 50);
// || P(z) z^{beta sigma3} - I || at |z| = r (decays like 1/r)
double pinf_infinity_deviation(const RHConfig& cfg, double r, int nsamples = 8);

// D-function property residuals (product on (-1,1), z->0, z->infinity)
double d_product_residual(double x, double eps = 1e-8);

// Bessel parametrix checks
JumpReport check_bessel_jump(int ray, int nsamples = 20);
double bessel_ode_residual(cplx zeta);
// || normalized remainder - I - (8 sqrt(zeta))^{-1} [[-1,-2i],[-2i,1]] ||
double bessel_remainder_deviation(cplx zeta);

// H(zeta) expansion entries by Richardson in 1/R at zeta = iR:
// first = lim zeta^{k+1} C_k (the (1,2) entry of H_1),
// second = lim of the (2,1) entry (-> -2 pi i / h_{k-1}); k >= 1 for second.
std::pair<cplx, cplx> h1_offdiag_entries(const KernelParams& p,
                                         const OrthoData& ortho, int k,
                                         double r0 = 16.0, int levels = 5);

// E-prefactor analyticity across the real cut inside each disc
JumpReport check_e_analyticity(Disc which, const RHConfig& cfg, int npts = 10);

// P^(-1) jump against J_A across Sigma_7 and the deformed rays
JumpReport check_local_jump_m1(int contour /*2,3,7*/, const RHConfig& cfg,
                               const OrthoData& ortho, int npts = 10);

// max over |z+1| = delta of || P^(-1) (P^infty)^{-1} - I ||
double matching_norm_m1(const RHConfig& cfg, const OrthoData& ortho,
                        int nsamples = 12);

} // namespace chgdet

#endif
