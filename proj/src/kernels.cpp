#include "chgdet/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace chgdet {

KernelParams::KernelParams(double a, double b_im) : alpha(a), beta_im(b_im)
{
    if (!(a > -0.5))
        throw std::domain_error("KernelParams: alpha must be > -1/2");
    if (!std::isfinite(b_im))
        throw std::domain_error("KernelParams: beta_im must be finite");
}

KernelKind KernelKind::sine() { return {KernelFamily::Sine, KernelParams(0, 0)}; }
KernelKind KernelKind::bessel1(double alpha)
{
    return {KernelFamily::BesselTypeI, KernelParams(alpha, 0)};
}
KernelKind KernelKind::chg(KernelParams p) { return {KernelFamily::CHG, p}; }

double sine_kernel(double x, double y)
{
    double d = x - y;
    if (std::abs(d) < 1e-7) {
        // sin(d)/d = 1 - d^2/6 + d^4/120
        double d2 = d * d;
        return (1.0 - d2 / 6.0 + d2 * d2 / 120.0) / PI;
    }
    return std::sin(d) / (PI * d);
}

cplx chg_kernel_A(const KernelParams& p, double x)
{
    if (x == 0.0) throw std::domain_error("chg_kernel_A: x = 0 excluded");
    // chi_beta(x)^{1/2} = e^{-pi i beta/2} for x>0, e^{+pi i beta/2} for x<0;
    // real-valued for beta in iR.
    cplx half_chi = std::exp(cplx(0.0, (x > 0 ? -0.5 : 0.5) * PI) * p.beta());
    double mod = std::pow(std::abs(2.0 * x), p.alpha);
    cplx osc = std::exp(cplx(0.0, -x));
    cplx phi = kummer_m(1.0 + p.alpha + p.beta(), cplx(1.0 + 2.0 * p.alpha),
                        cplx(0.0, 2.0 * x));
    return half_chi * mod * osc * phi;
}

namespace {

cplx chg_kernel_A_deriv(const KernelParams& p, double x)
{
    // A'(x) = A(x) (alpha/x - i) + chi^{1/2} |2x|^alpha e^{-ix} 2i phi'(2ix)
    cplx a = chg_kernel_A(p, x);
    cplx half_chi = std::exp(cplx(0.0, (x > 0 ? -0.5 : 0.5) * PI) * p.beta());
    double mod = std::pow(std::abs(2.0 * x), p.alpha);
    cplx osc = std::exp(cplx(0.0, -x));
    cplx dphi = kummer_m_deriv(1.0 + p.alpha + p.beta(), cplx(1.0 + 2.0 * p.alpha),
                               cplx(0.0, 2.0 * x));
    return a * (p.alpha / x - cplx(0.0, 1.0)) +
           half_chi * mod * osc * cplx(0.0, 2.0) * dphi;
}

double chg_prefactor(const KernelParams& p)
{
    // Gamma(1+alpha+beta) Gamma(1+alpha-beta) / Gamma(1+2alpha)^2, real > 0
    // for beta in iR.
    cplx lg = log_gamma(1.0 + p.alpha + p.beta()) +
              log_gamma(1.0 + p.alpha - p.beta()) -
              2.0 * log_gamma(cplx(1.0 + 2.0 * p.alpha));
    return std::exp(lg).real();
}

} // namespace

double chg_kernel(const KernelParams& p, double x, double y)
{
    if (x == y) throw std::domain_error("chg_kernel: x = y (use chg_kernel_diag)");
    if (x == 0.0 || y == 0.0)
        throw std::domain_error("chg_kernel: the Fisher-Hartwig point x*y = 0 is excluded");
    // K = pref * Im(A(x) conj A(y)) / (pi (x-y)); the 1/(2 pi i) and the
    // conjugate pair combine into the imaginary part.
    cplx ax = chg_kernel_A(p, x), ay = chg_kernel_A(p, y);
    double im = ax.imag() * ay.real() - ax.real() * ay.imag();
    return chg_prefactor(p) * im / (PI * (x - y));
}

double chg_kernel_diag(const KernelParams& p, double x)
{
    if (x == 0.0) throw std::domain_error("chg_kernel_diag: x = 0 excluded");
    // L'Hopital: K(x,x) = pref * Im(A'(x) conj A(x)) / pi
    cplx ax = chg_kernel_A(p, x);
    cplx dax = chg_kernel_A_deriv(p, x);
    double im = dax.imag() * ax.real() - dax.real() * ax.imag();
    return chg_prefactor(p) * im / PI;
}

namespace {

// real building blocks: f(x) = sgn(x) sqrt|x| J_{a+1/2}(|x|),
//                       g(x) =        sqrt|x| J_{a-1/2}(|x|)
// chosen so K(x,y) = (f(x)g(y) - g(x)f(y)) / (2(x-y)) reproduces the
// phase factors |x|^a |y|^a / (x^a y^a) sqrt(xy) on every sign pattern.
double b1_f(double alpha, double x)
{
    double ax = std::abs(x);
    return (x > 0 ? 1.0 : -1.0) * std::sqrt(ax) * bessel_j(alpha + 0.5, ax);
}
double b1_g(double alpha, double x)
{
    double ax = std::abs(x);
    return std::sqrt(ax) * bessel_j(alpha - 0.5, ax);
}
double b1_f_deriv(double alpha, double x)
{
    double ax = std::abs(x);
    // d/dx [sgn(x) sqrt|x| J(|x|)] = d/du [sqrt(u) J(u)] at u=|x|
    return 0.5 / std::sqrt(ax) * bessel_j(alpha + 0.5, ax) +
           std::sqrt(ax) * bessel_j_deriv(alpha + 0.5, ax);
}
double b1_g_deriv(double alpha, double x)
{
    double ax = std::abs(x);
    double du = 0.5 / std::sqrt(ax) * bessel_j(alpha - 0.5, ax) +
                std::sqrt(ax) * bessel_j_deriv(alpha - 0.5, ax);
    return (x > 0 ? 1.0 : -1.0) * du;
}

} // namespace

double bessel1_kernel(double alpha, double x, double y)
{
    if (x == y) throw std::domain_error("bessel1_kernel: x = y (use the diagonal)");
    if (x == 0.0 || y == 0.0)
        throw std::domain_error("bessel1_kernel: x*y = 0 excluded");
    return (b1_f(alpha, x) * b1_g(alpha, y) - b1_g(alpha, x) * b1_f(alpha, y)) /
           (2.0 * (x - y));
}

double bessel1_kernel_diag(double alpha, double x)
{
    if (x == 0.0) throw std::domain_error("bessel1_kernel_diag: x = 0 excluded");
    return (b1_f_deriv(alpha, x) * b1_g(alpha, x) -
            b1_g_deriv(alpha, x) * b1_f(alpha, x)) / 2.0;
}

double kernel_eval(const KernelKind& k, double x, double y)
{
    switch (k.family) {
    case KernelFamily::Sine: return sine_kernel(x, y);
    case KernelFamily::BesselTypeI: return bessel1_kernel(k.params.alpha, x, y);
    case KernelFamily::CHG: return chg_kernel(k.params, x, y);
    }
    throw std::logic_error("kernel_eval: bad family");
}

double kernel_eval_diag(const KernelKind& k, double x)
{
    switch (k.family) {
    case KernelFamily::Sine: return 1.0 / PI;
    case KernelFamily::BesselTypeI: return bessel1_kernel_diag(k.params.alpha, x);
    case KernelFamily::CHG: return chg_kernel_diag(k.params, x);
    }
    throw std::logic_error("kernel_eval_diag: bad family");
}

} // namespace chgdet
