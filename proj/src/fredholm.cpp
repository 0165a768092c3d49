#include "chgdet/fredholm.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chgdet {

Deformation Deformation::from_gamma(double gamma)
{
    if (!(gamma >= 0.0 && gamma <= 1.0))
        throw std::domain_error("Deformation: gamma must lie in [0,1]");
    Deformation d;
    d.gamma = gamma;
    d.nu = (gamma == 1.0) ? std::numeric_limits<double>::infinity()
                          : -std::log1p(-gamma);
    return d;
}

Deformation Deformation::from_nu(double nu)
{
    if (!(nu >= 0.0)) // +inf allowed
        throw std::domain_error("Deformation: nu must lie in [0,+inf]");
    Deformation d;
    d.nu = nu;
    d.gamma = std::isinf(nu) ? 1.0 : -std::expm1(-nu);
    return d;
}

GapInstance::GapInstance(KernelKind k, double s_, Deformation d)
    : kind(k), s(s_), def(d)
{
    if (!(s_ > 0.0)) throw std::domain_error("GapInstance: s must be positive");
}

DiscreteOperator discretize(const GapInstance& inst, int n, QuadMode mode)
{
    if (n < 2) throw std::invalid_argument("discretize: n >= 2 required");
    const double alpha = inst.kind.params.alpha;

    QuadratureRule rule = (mode == QuadMode::SplitLegendre)
                              ? split_legendre(n, inst.s)
                              : split_jacobi(n, inst.s, 2.0 * alpha);
    const int m = static_cast<int>(rule.nodes.size());
    Eigen::MatrixXd M(m, m);

    const bool jac = (mode == QuadMode::SplitJacobi);
    // Jacobi mode absorbs |2y|^{2a} = 2^{2a} |y|^{2a} into the weights and
    // discretizes G(x,y) = K(x,y) / (|2x|^a |2y|^a); the Fisher-Hartwig
    // factor then no longer limits the quadrature order.
    const double two2a = std::pow(2.0, 2.0 * alpha);
    std::vector<double> sw(m);
    for (int i = 0; i < m; ++i)
        sw[i] = std::sqrt(rule.weights[i] * (jac ? two2a : 1.0));

    std::vector<double> fh(m, 1.0); // |2x_i|^alpha divisors in Jacobi mode
    if (jac)
        for (int i = 0; i < m; ++i)
            fh[i] = std::pow(std::abs(2.0 * rule.nodes[i]), alpha);

    for (int i = 0; i < m; ++i) {
        const double xi = rule.nodes[i];
        for (int j = 0; j <= i; ++j) {
            const double xj = rule.nodes[j];
            double k = (i == j) ? kernel_eval_diag(inst.kind, xi)
                                : kernel_eval(inst.kind, xi, xj);
            if (jac) k /= fh[i] * fh[j];
            double v = sw[i] * sw[j] * k;
            M(i, j) = v;
            M(j, i) = v;
        }
    }
    return DiscreteOperator{std::move(M), std::move(rule), inst};
}

namespace {

// full spectra of M and I - M, paired so lambda descending matches
// one_minus ascending
SpectrumResult full_spectrum(const DiscreteOperator& op)
{
    const int m = static_cast<int>(op.matrix.rows());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(op.matrix,
                                                      Eigen::EigenvaluesOnly);
    Eigen::MatrixXd imm = Eigen::MatrixXd::Identity(m, m) - op.matrix;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es1(imm, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success || es1.info() != Eigen::Success)
        throw std::runtime_error("spectrum: eigensolver did not converge");

    SpectrumResult r;
    r.lambda.resize(m);
    r.one_minus_lambda.resize(m);
    for (int i = 0; i < m; ++i) {
        r.lambda[i] = es.eigenvalues()(m - 1 - i);   // descending
        r.one_minus_lambda[i] = es1.eigenvalues()(i); // ascending
    }
    return r;
}

} // namespace

SpectrumResult spectrum(const DiscreteOperator& op, int k_max)
{
    const int m = static_cast<int>(op.matrix.rows());
    if (k_max > m)
        throw std::invalid_argument("spectrum: k_max exceeds the matrix size");
    SpectrumResult full = full_spectrum(op);
    full.lambda.resize(k_max);
    full.one_minus_lambda.resize(k_max);
    return full;
}

double log_det(const DiscreteOperator& op, const Deformation& def)
{
    if (def.gamma == 0.0) return 0.0;
    SpectrumResult sp = full_spectrum(op);
    const double enu = std::isinf(def.nu) ? 0.0 : std::exp(-def.nu);
    double sum = 0.0;
    for (std::size_t k = 0; k < sp.lambda.size(); ++k) {
        double lam = sp.lambda[k];
        double term;
        if (lam < 0.5) {
            term = std::log1p(-def.gamma * lam);
        } else {
            double arg = sp.one_minus_lambda[k] + enu * lam;
            if (!(arg > 0.0))
                throw std::runtime_error(
                    "log_det: 1 - gamma*lambda <= 0 at eigenvalue index " +
                    std::to_string(k));
            term = std::log(arg);
        }
        sum += term;
    }
    return sum;
}

} // namespace chgdet
