#ifndef CHGDET_SPECFUN_HPP
#define CHGDET_SPECFUN_HPP

#include <complex>

// Complex special functions needed by the kernel, asymptotic and
// Riemann-Hilbert modules: log Gamma, log Barnes-G, Kummer's M, modified
// Bessel functions and a couple of frozen constants.  Everything is pure
// and reentrant.

namespace chgdet {

using cplx = std::complex<double>;

inline constexpr double PI = 3.14159265358979323846264338327950288;

// Principal-branch log Gamma (the analytic continuation that is real on
// (0,inf)).  Throws std::domain_error at the poles z = 0, -1, -2, ...
cplx log_gamma(cplx z);

// log of the Barnes G-function, analytic on C minus (-inf,0], normalized
// by G(1) = 1.  Satisfies G(z+1) = Gamma(z) G(z).  Throws at the zeros
// z = 0, -1, -2, ... where the log diverges.
cplx barnes_g_log(cplx z);

// Kummer's confluent hypergeometric function M(a,b,z) = phi(a,b,z) by its
// Taylor series, accumulated in extended precision.  Preconditions:
// b not a non-positive integer, |z| <= kummer_series_cutoff().
cplx kummer_m(cplx a, cplx b, cplx z);

// d/dz M(a,b,z) = (a/b) M(a+1,b+1,z).
cplx kummer_m_deriv(cplx a, cplx b, cplx z);

// |z| beyond which kummer_m refuses to sum its series (default 80; the
// kernels evaluate it at |z| = 2|x| <= 2*s only).
double kummer_series_cutoff();

enum class BesselKind { I0, K0, I0prime, K0prime };

// Modified Bessel functions I0, K0 and their derivatives for complex
// argument off the branch cut (-inf,0].  Series below |z|=18 (extended
// precision accumulation), large-z asymptotic expansions above.
cplx bessel_modified(BesselKind kind, cplx z);

// Bessel J_nu(x) for real x > 0 and nu > -1, by the ascending series.
// Used by the type-I Bessel kernel (orders alpha +- 1/2).
double bessel_j(double nu, double x);
double bessel_j_deriv(double nu, double x);

struct Constants {
    double zeta_prime_minus1; // zeta'(-1) = 1/12 - ln A (Glaisher)
    double sqrt_pi;
};
Constants constants();

} // namespace chgdet

#endif
