#ifndef CHGDET_FREDHOLM_HPP
#define CHGDET_FREDHOLM_HPP

#include "chgdet/kernels.hpp"
#include "chgdet/quadrature.hpp"

#include <Eigen/Dense>
#include <limits>
#include <vector>

namespace chgdet {

// Thinning parameter, carried both ways through nu = -ln(1-gamma);
// gamma = 1 maps to nu = +inf.
struct Deformation {
    double gamma = 1.0;
    double nu = std::numeric_limits<double>::infinity();

    static Deformation from_gamma(double gamma);
    static Deformation from_nu(double nu);
};

// One determinant problem det(I - gamma K_s) on L^2(-s,s).
struct GapInstance {
    KernelKind kind;
    double s = 1.0;
    Deformation def;

    GapInstance(KernelKind k, double s_, Deformation d);
    cplx t() const { return {0.0, -4.0 * s}; } // t = -4 i s
};

// Symmetrized Nystrom matrix of the kernel on a split rule.
struct DiscreteOperator {
    Eigen::MatrixXd matrix; // real symmetric
    QuadratureRule rule;
    GapInstance instance;
};

struct SpectrumResult {
    std::vector<double> lambda;           // descending
    std::vector<double> one_minus_lambda; // from the spectrum of I - M, paired
};

// Nystrom discretization with n total nodes.  Legendre mode:
// M_ij = sqrt(w_i w_j) K(x_i, x_j).  Jacobi mode: the |2x|^alpha factors
// move into the quadrature weight and M_ij = sqrt(W_i W_j) G(x_i, x_j)
// with G = K / (|2x|^a |2y|^a); same nonzero spectrum by similarity.
DiscreteOperator discretize(const GapInstance& inst, int n,
                            QuadMode mode = QuadMode::SplitLegendre);

// Top-k_max eigenvalues (descending) and the matching 1-lambda values.
SpectrumResult spectrum(const DiscreteOperator& op, int k_max);

// log det(I - gamma K) = sum_k ln((1-lambda_k) + e^{-nu} lambda_k), the
// stable split near gamma -> 1.  Throws (reporting the offending index)
// if some 1 - gamma lambda_k <= 0.
double log_det(const DiscreteOperator& op, const Deformation& def);

} // namespace chgdet

#endif
