#include "chgdet/quadrature.hpp"
#include "chgdet/specfun.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace chgdet {

namespace {

// nodes/weights from a monic three-term recurrence
//   p_{k+1} = (x - a_k) p_k - b_k p_{k-1},   mu0 = int w
// via the symmetric tridiagonal Jacobi matrix.
QuadratureRule golub_welsch(const std::vector<double>& a,
                            const std::vector<double>& b, double mu0)
{
    const int n = static_cast<int>(a.size());
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        J(i, i) = a[i];
        if (i > 0) {
            double off = std::sqrt(b[i]);
            J(i, i - 1) = off;
            J(i - 1, i) = off;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

} // namespace

QuadratureRule gauss_legendre(int n, double a, double b)
{
    if (n < 1) throw std::invalid_argument("gauss_legendre: n >= 1 required");
    if (!(a < b)) throw std::invalid_argument("gauss_legendre: need a < b");

    QuadratureRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one last polish step
                p0 = 1.0; p1 = 0.0;
                for (int j = 0; j < n; ++j) {
                    double p2 = p1; p1 = p0;
                    p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
                }
                pp = n * (x * p0 - p1) / (x * x - 1.0);
                x -= p0 / pp;
                break;
            }
        }
        double xm = 0.5 * (b + a), xl = 0.5 * (b - a);
        r.nodes[i] = xm - xl * x;
        r.nodes[n - 1 - i] = xm + xl * x;
        double w = 2.0 * xl / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[n - 1 - i] = w;
    }
    return r;
}

QuadratureRule gauss_jacobi_half(int n, double s, double exponent)
{
    if (n < 1) throw std::invalid_argument("gauss_jacobi_half: n >= 1 required");
    if (!(exponent > -1.0))
        throw std::invalid_argument("gauss_jacobi_half: exponent must be > -1");

    // Jacobi weight (1-x)^0 (1+x)^e on (-1,1), Gautschi's recurrence
    const double ja = 0.0, jb = exponent;
    std::vector<double> al(n), be(n);
    double apb = ja + jb;
    al[0] = (jb - ja) / (apb + 2.0);
    be[0] = 0.0; // unused
    for (int k = 1; k < n; ++k) {
        double t = 2.0 * k + apb;
        al[k] = (jb * jb - ja * ja) / (t * (t + 2.0));
        if (k == 1)
            be[k] = 4.0 * (ja + 1.0) * (jb + 1.0) /
                    ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
        else
            be[k] = 4.0 * k * (k + ja) * (k + jb) * (k + apb) /
                    (t * t * (t * t - 1.0));
    }
    double mu0 = std::pow(2.0, apb + 1.0) * std::tgamma(ja + 1.0) *
                 std::tgamma(jb + 1.0) / std::tgamma(apb + 2.0);
    QuadratureRule r = golub_welsch(al, be, mu0);
    // map (-1,1) -> (0,s): t = s(x+1)/2, weight gains (s/2)^{e+1}
    double scale = std::pow(0.5 * s, exponent + 1.0);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = 0.5 * s * (r.nodes[i] + 1.0);
        r.weights[i] *= scale;
    }
    r.jacobi_exponent = exponent;
    r.mode = QuadMode::SplitJacobi;
    return r;
}

QuadratureRule gauss_laguerre(int n, double c)
{
    if (n < 1) throw std::invalid_argument("gauss_laguerre: n >= 1 required");
    if (!(c > -1.0)) throw std::invalid_argument("gauss_laguerre: c must be > -1");
    std::vector<double> al(n), be(n);
    for (int k = 0; k < n; ++k) {
        al[k] = 2.0 * k + c + 1.0;
        be[k] = k * (k + c);
    }
    return golub_welsch(al, be, std::tgamma(c + 1.0));
}

namespace {

QuadratureRule mirror_to_full(const QuadratureRule& half, QuadMode mode, double expo)
{
    const int m = static_cast<int>(half.nodes.size());
    QuadratureRule r;
    r.mode = mode;
    r.jacobi_exponent = expo;
    r.nodes.resize(2 * m);
    r.weights.resize(2 * m);
    for (int i = 0; i < m; ++i) {
        r.nodes[i] = -half.nodes[m - 1 - i];
        r.weights[i] = half.weights[m - 1 - i];
        r.nodes[m + i] = half.nodes[i];
        r.weights[m + i] = half.weights[i];
    }
    return r;
}

} // namespace

QuadratureRule split_legendre(int n, double s)
{
    if (n < 2) throw std::invalid_argument("split_legendre: n >= 2 required");
    int m = (n + 1) / 2;
    return mirror_to_full(gauss_legendre(m, 0.0, s), QuadMode::SplitLegendre, 0.0);
}

QuadratureRule split_jacobi(int n, double s, double exponent)
{
    if (n < 2) throw std::invalid_argument("split_jacobi: n >= 2 required");
    int m = (n + 1) / 2;
    return mirror_to_full(gauss_jacobi_half(m, s, exponent), QuadMode::SplitJacobi,
                          exponent);
}

} // namespace chgdet
