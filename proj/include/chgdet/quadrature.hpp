#ifndef CHGDET_QUADRATURE_HPP
#define CHGDET_QUADRATURE_HPP

#include <vector>

namespace chgdet {

enum class QuadMode { SplitLegendre, SplitJacobi };

// Quadrature rule on an interval; for the split rules the nodes live in
// (-s,0) u (0,s), never at 0, symmetric about 0 in Legendre mode.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    QuadMode mode = QuadMode::SplitLegendre;
    double jacobi_exponent = 0.0; // x^e absorbed into weights in Jacobi mode
};

// n-point Gauss-Legendre on (a,b), exact for polynomials of degree <= 2n-1.
// Newton iteration on P_n.
QuadratureRule gauss_legendre(int n, double a, double b);

// n-point Gauss rule on (0,s) for the weight x^exponent (exponent > -1),
// weight absorbed: sum w_i f(x_i) ~ int_0^s x^e f(x) dx.  Golub-Welsch on
// the Jacobi recurrence.
QuadratureRule gauss_jacobi_half(int n, double s, double exponent);

// n-point generalized Gauss-Laguerre: int_0^inf u^c e^{-u} f(u) du.
QuadratureRule gauss_laguerre(int n, double c);

// split rules on (-s,s) with a break at 0; n is the total node count
// (rounded up to even).
QuadratureRule split_legendre(int n, double s);
QuadratureRule split_jacobi(int n, double s, double exponent);

} // namespace chgdet

#endif
