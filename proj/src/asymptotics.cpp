#include "chgdet/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace chgdet {

double AsyBreakdown::resum() const
{
    double t = quadratic + linear + log_term + constant;
    for (const cplx& pt : product_terms) t += pt.real();
    return t;
}

double nu_from_gamma(double gamma)
{
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::domain_error("nu_from_gamma: gamma must lie in [0,1]");
    return gamma == 1.0 ? std::numeric_limits<double>::infinity()
                        : -std::log1p(-gamma);
}

double gamma_from_nu(double nu)
{
    if (!(nu >= 0.0)) throw std::domain_error("gamma_from_nu: nu must lie in [0,inf]");
    return std::isinf(nu) ? 1.0 : -std::expm1(-nu);
}

int p_of_chi(double chi)
{
    if (chi < 0.5) return 1;
    return static_cast<int>(std::floor(chi + 1.5));
}

bool region_check(double s, double nu, double chi, double alpha)
{
    if (!(s > 0.0)) throw std::domain_error("region_check: s must be positive");
    if (std::isinf(nu)) return true;
    return nu >= 2.0 * s - (chi + alpha) * std::log(4.0 * s);
}

double barnes_constant(const KernelParams& p)
{
    const double a = p.alpha;
    // G(1+a+b) G(1+a-b) = |G(1+a+ib)|^2 for b in iR: take 2 Re ln G.
    cplx lgsum = barnes_g_log(cplx(1.0 + a, p.beta_im)) +
                 barnes_g_log(cplx(1.0 + a, -p.beta_im));
    return 0.5 * std::log(PI) + 2.0 * barnes_g_log(cplx(0.5)).real() +
           barnes_g_log(cplx(1.0 + 2.0 * a)).real() -
           2.0 * a * a * std::log(2.0) - lgsum.real();
}

namespace {

// complex log1p accurate for tiny c with tiny imaginary part
cplx clog1p(cplx c)
{
    double re;
    if (std::abs(c.real()) < 0.5 && std::abs(c.imag()) < 0.1) {
        // log|1+c| = 1/2 log1p(2 Re c + |c|^2)
        re = 0.5 * std::log1p(2.0 * c.real() + std::norm(c));
    } else {
        re = std::log(std::abs(1.0 + c));
    }
    return {re, std::atan2(c.imag(), 1.0 + c.real())};
}

AsyBreakdown gamma1_core(const GapInstance& inst)
{
    const KernelParams& p = inst.kind.params;
    const double s = inst.s;
    AsyBreakdown b;
    b.quadratic = -0.5 * s * s;
    b.linear = 2.0 * p.alpha * s;
    // beta^2 = -beta_im^2, exact in real arithmetic
    b.log_term = (-0.25 - p.alpha * p.alpha - p.beta_im * p.beta_im) * std::log(s);
    b.constant = barnes_constant(p);
    b.total_log = b.resum();
    b.region = AsyRegion::Gamma1;
    return b;
}

} // namespace

AsyBreakdown asy_gamma1(const GapInstance& inst) { return gamma1_core(inst); }

AsyBreakdown asy_theorem(const GapInstance& inst, double chi, const OrthoData& ortho)
{
    const KernelParams& p = inst.kind.params;
    const double s = inst.s, nu = inst.def.nu;
    if (!region_check(s, nu, chi, p.alpha))
        throw std::domain_error("asy_theorem: (s, nu) outside the super-exponential region");
    const int np = p_of_chi(chi);
    if (np - 1 > ortho.k_max)
        throw std::invalid_argument("asy_theorem: ortho data lacks h_k up to k = p-1");

    AsyBreakdown b = gamma1_core(inst);
    b.region = AsyRegion::SuperExp;
    const double l4s = std::log(4.0 * s);
    // e^{pi i beta} = e^{-pi beta_im}, real for beta in iR
    const double epib = std::exp(-PI * p.beta_im);
    for (int k = 0; k < np; ++k) {
        cplx c = 0.0;
        if (!std::isinf(nu)) {
            double expo = (-0.5 - k - p.alpha) * l4s + (2.0 * s - nu);
            c = ortho.h[k] * (epib / (2.0 * PI)) * std::exp(expo);
        }
        b.product_terms.push_back(clog1p(c));
    }
    b.total_log = b.resum();
    return b;
}

AsyBreakdown asy_exp_region(const GapInstance& inst)
{
    const KernelParams& p = inst.kind.params;
    const double s = inst.s, nu = inst.def.nu;
    if (std::isinf(nu))
        throw std::domain_error("asy_exp_region: requires gamma < 1");
    AsyBreakdown b;
    b.region = AsyRegion::ExpRegion;
    if (nu == 0.0) return b; // gamma = 0: every factor is exactly 1
    b.quadratic = 0.0;
    b.linear = -2.0 * nu * s / PI + p.alpha * nu;
    b.log_term = nu * nu / (2.0 * PI * PI) * std::log(4.0 * s);
    double u = nu / (2.0 * PI);
    b.constant = 2.0 * barnes_g_log(cplx(1.0, u)).real() +
                 2.0 * barnes_g_log(cplx(1.0, -u)).real();
    b.total_log = b.resum();
    return b;
}

double asy_sine_gamma1(double s)
{
    if (!(s > 0.0)) throw std::domain_error("asy_sine_gamma1: s must be positive");
    return -0.5 * s * s - 0.25 * std::log(s) + std::log(2.0) / 12.0 +
           3.0 * constants().zeta_prime_minus1;
}

double eig_asy(int k, const GapInstance& inst, const OrthoData& ortho)
{
    if (k > ortho.k_max) throw std::invalid_argument("eig_asy: h_k missing");
    const KernelParams& p = inst.kind.params;
    const double s = inst.s;
    double lnhk = std::log(std::abs(ortho.h[k])) - PI * p.beta_im; // ln(h_k e^{pi i beta})
    double ex = std::log(2.0 * PI) - lnhk +
                (0.5 + k + p.alpha) * std::log(4.0 * s) - 2.0 * s;
    return std::exp(ex);
}

double eig_asy_sine(int k, double s)
{
    double lf = std::lgamma(k + 1.0);
    double ex = 0.5 * std::log(PI) + (3.0 * k + 2.0) * std::log(2.0) - lf +
                (0.5 + k) * std::log(s) - 2.0 * s;
    return std::exp(ex);
}

} // namespace chgdet
