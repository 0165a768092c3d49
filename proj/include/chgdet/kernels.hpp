#ifndef CHGDET_KERNELS_HPP
#define CHGDET_KERNELS_HPP

#include "chgdet/specfun.hpp"

namespace chgdet {

// Parameters of the confluent hypergeometric kernel: alpha > -1/2 and
// beta = i * beta_im purely imaginary.
struct KernelParams {
    double alpha = 0.0;
    double beta_im = 0.0;

    KernelParams() = default;
    KernelParams(double a, double b_im);

    cplx beta() const { return {0.0, beta_im}; }
};

enum class KernelFamily { Sine, BesselTypeI, CHG };

// Kernel selector.  BesselTypeI is CHG with beta_im = 0, Sine is CHG with
// alpha = beta_im = 0; the families keep their own evaluation routes so
// the reductions are genuine cross-checks.
struct KernelKind {
    KernelFamily family = KernelFamily::Sine;
    KernelParams params; // (0,0) for Sine, (alpha,0) for BesselTypeI

    static KernelKind sine();
    static KernelKind bessel1(double alpha);
    static KernelKind chg(KernelParams p);
};

// sin(x-y)/(pi (x-y)), value 1/pi on the diagonal.
double sine_kernel(double x, double y);

// Confluent hypergeometric kernel K^{(alpha,beta)}(x,y); requires x != y
// and x,y != 0.
double chg_kernel(const KernelParams& p, double x, double y);

// Diagonal limit lim_{y->x} K^{(alpha,beta)}(x,y); requires x != 0.
double chg_kernel_diag(const KernelParams& p, double x);

// A(x) = chi_beta(x)^{1/2} |2x|^alpha e^{-ix} phi(1+alpha+beta, 1+2alpha, 2ix),
// the kernel's building block (exposed for tests).
cplx chg_kernel_A(const KernelParams& p, double x);

// Type-I Bessel kernel (the beta = 0 degeneration), evaluated through
// Bessel J of orders alpha +- 1/2; requires x != y, x,y != 0.
double bessel1_kernel(double alpha, double x, double y);
double bessel1_kernel_diag(double alpha, double x);

// dispatch on the family (diagonal handled separately)
double kernel_eval(const KernelKind& k, double x, double y);
double kernel_eval_diag(const KernelKind& k, double x);

} // namespace chgdet

#endif
