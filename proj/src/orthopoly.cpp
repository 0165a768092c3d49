#include "chgdet/orthopoly.hpp"
#include "chgdet/quadrature.hpp"
#include "qcomplex.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

namespace chgdet {

cplx MonicPoly::eval(cplx x) const
{
    cplx v = 0.0;
    for (int j = degree; j >= 0; --j) v = v * x + coeffs[j];
    return v;
}

MonicPoly MonicPoly::reflected() const
{
    MonicPoly q = *this;
    for (int j = 1; j <= degree; j += 2) q.coeffs[j] = -q.coeffs[j];
    return q;
}

cplx moment(int j, const KernelParams& p)
{
    if (j < 0) throw std::invalid_argument("moment: j >= 0 required");
    double g = std::tgamma(0.5 * (j + 2.0 * p.alpha + 1.0));
    // e^{-2 pi i beta} = e^{2 pi beta_im}, real for beta in iR
    double piece = ((j % 2) ? -1.0 : 1.0) + std::exp(2.0 * PI * p.beta_im);
    return cplx(0.5 * g * piece, 0.0);
}

cplx fh_weight(const KernelParams& p, double x)
{
    if (x == 0.0) throw std::domain_error("fh_weight: x = 0 excluded");
    double base = std::pow(std::abs(x), 2.0 * p.alpha) * std::exp(-x * x);
    if (x < 0.0) return {base, 0.0};
    return base * std::exp(cplx(0.0, -2.0 * PI) * p.beta()); // real for beta in iR
}

OrthoData hankel_dets(const KernelParams& p, int k_max)
{
    if (k_max < 0 || k_max > 12)
        throw std::invalid_argument("hankel_dets: k_max must lie in [0,12]");
    OrthoData d;
    d.params = p;
    d.k_max = k_max;
    const int n_mom = 2 * k_max + 3;
    d.moments.resize(n_mom);
    for (int j = 0; j < n_mom; ++j) d.moments[j] = moment(j, p);

    double scale = std::abs(d.moments[0]);
    cplx prev = 1.0; // D_0
    for (int k = 1; k <= k_max + 1; ++k) {
        Eigen::MatrixXcd H(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) H(i, j) = d.moments[i + j];
        cplx det = Eigen::PartialPivLU<Eigen::MatrixXcd>(H).determinant();
        if (!(std::abs(det) > 1e-250 * std::pow(scale, k)))
            throw std::runtime_error(
                "hankel_dets: near-singular Hankel determinant D_" +
                std::to_string(k) + " (degenerate weight), |D| = " +
                std::to_string(std::abs(det)));
        d.hankel.push_back(det);
        d.h.push_back(det / prev);
        d.gamma_k.push_back(-d.h.back() / (2.0 * PI * cplx(0.0, 1.0)));
        prev = det;
    }
    return d;
}

std::vector<MonicPoly> monic_polys(const KernelParams& p, int k_max)
{
    std::vector<cplx> mom(2 * k_max + 1);
    for (int j = 0; j <= 2 * k_max; ++j) mom[j] = moment(j, p);

    std::vector<MonicPoly> out;
    for (int k = 0; k <= k_max; ++k) {
        MonicPoly pk;
        pk.degree = k;
        pk.coeffs.assign(k + 1, cplx(0.0));
        pk.coeffs[k] = 1.0;
        if (k > 0) {
            Eigen::MatrixXcd H(k, k);
            Eigen::VectorXcd rhs(k);
            for (int i = 0; i < k; ++i) {
                for (int j = 0; j < k; ++j) H(i, j) = mom[i + j];
                rhs(i) = -mom[i + k];
            }
            Eigen::PartialPivLU<Eigen::MatrixXcd> lu(H);
            Eigen::VectorXcd c = lu.solve(rhs);
            if (!c.allFinite())
                throw std::runtime_error("monic_polys: singular Hankel system");
            for (int j = 0; j < k; ++j) pk.coeffs[j] = c(j);
        }
        out.push_back(std::move(pk));
    }
    return out;
}

namespace {

const cplx IMAG(0.0, 1.0);

// E1(z) = int_z^inf e^{-t}/t dt (principal branch, cut along (-inf,0]),
// by the ascending series in extended precision; |z| <= ~36 here.
cplx expint_e1(cplx z)
{
    using detail::qcplx;
    using detail::qreal;
    qcplx qz(z), term(1.0), sum(0.0);
    for (int k = 1; k <= 200; ++k) {
        term = term * (qcplx(0.0) - qz) / qreal(k);
        sum = sum + term / qreal(k);
        if (qreal(k) > detail::qmag(qz) &&
            detail::qmag(term) < 1e-36 * (detail::qmag(sum) + qreal(1e-30)))
            break;
    }
    const double eg = 0.57721566490153286060651209008240243;
    return -eg - std::log(z) - sum.to_cplx();
}

// Stieltjes transform of the Gamma weight,
//   S_c(w) = int_0^inf u^c e^{-u} / (u - w) du,  w off [0, inf),
// via S_c = Gamma(c) + w S_{c-1} down to a base index in (-1, 0]:
//   S_0(w) = e^{-w} E1(-w),
//   S_c(w) = (-w)^c Gamma(c+1) U(c+1, c+1, -w) otherwise.
cplx stieltjes_gamma(double c, cplx w)
{
    int m = (c > 0.0) ? static_cast<int>(std::ceil(c - 1e-12)) : 0;
    double cb = c - m;
    cplx s = -w;
    cplx base;
    if (std::abs(cb) < 1e-12) {
        base = std::exp(s) * expint_e1(s);
    } else {
        // U(a,a,s) = Gamma(1-a) e^s + s^{1-a} M(1,2-a,s)/(a-1), a = cb+1
        double a = cb + 1.0;
        cplx u = std::exp(log_gamma(cplx(1.0 - a))) * std::exp(s) +
                 std::pow(s, cplx(1.0 - a)) * kummer_m(1.0, cplx(2.0 - a), s) /
                     (a - 1.0);
        base = std::pow(s, cplx(cb)) * std::tgamma(cb + 1.0) * u;
    }
    for (int j = 1; j <= m; ++j) base = std::tgamma(cb + j) + w * base;
    return base;
}

// synthetic division: returns Q with P(u) = Q(u)(u - w) + P(w)
std::vector<cplx> deflate(const std::vector<cplx>& pc, cplx w)
{
    int n = static_cast<int>(pc.size()) - 1;
    std::vector<cplx> q(std::max(n, 0));
    cplx carry = n >= 0 ? pc[n] : cplx(0.0);
    for (int j = n - 1; j >= 0; --j) {
        q[j] = carry;
        carry = pc[j] + w * carry;
    }
    return q;
}

cplx eval_poly(const std::vector<cplx>& c, cplx u)
{
    cplx v = 0.0;
    for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) v = v * u + c[j];
    return v;
}

// int_0^inf u^c e^{-u} P(u)/(u - w) du: Laguerre when the pole is far,
// pole subtraction + exact moments when it approaches [0, inf)
cplx gamma_weight_cauchy(double c, const std::vector<cplx>& pc, cplx w, int n)
{
    double dist = (w.real() >= 0.0) ? std::abs(w.imag()) : std::abs(w);
    if (dist < 2.0 && std::abs(w) < 36.0) {
        std::vector<cplx> q = deflate(pc, w);
        cplx acc = eval_poly(pc, w) * stieltjes_gamma(c, w);
        for (std::size_t j = 0; j < q.size(); ++j)
            acc += q[j] * std::tgamma(c + 1.0 + j);
        return acc;
    }
    QuadratureRule r = gauss_laguerre(n, c);
    cplx acc = 0.0;
    for (int i = 0; i < n; ++i)
        acc += r.weights[i] * eval_poly(pc, r.nodes[i]) / (r.nodes[i] - w);
    return acc;
}

// half-line piece J(q, xi) = int_0^inf x^{2a} e^{-x^2} q(x)/(x - xi) dx
// via u = x^2 and the even/odd split of q:
//   J = 1/2 Gam_{a}[(E + xi O)/(u - xi^2)] + 1/2 Gam_{a-1/2}[(u O + xi E)/(u - xi^2)]
cplx half_line_cauchy(const KernelParams& p, const MonicPoly& q, cplx xi, int n)
{
    std::vector<cplx> ec, oc; // q(x) = E(x^2) + x O(x^2)
    for (int j = 0; j <= q.degree; ++j) {
        if (j % 2 == 0) ec.push_back(q.coeffs[j]);
        else oc.push_back(q.coeffs[j]);
    }
    cplx xi2 = xi * xi;
    std::vector<cplx> p1(std::max(ec.size(), oc.size()) + 1, cplx(0.0));
    std::vector<cplx> p2(std::max(ec.size(), oc.size() + 1) + 1, cplx(0.0));
    for (std::size_t j = 0; j < ec.size(); ++j) p1[j] += ec[j];
    for (std::size_t j = 0; j < oc.size(); ++j) p1[j] += xi * oc[j];
    for (std::size_t j = 0; j < oc.size(); ++j) p2[j + 1] += oc[j];
    for (std::size_t j = 0; j < ec.size(); ++j) p2[j] += xi * ec[j];
    return 0.5 * gamma_weight_cauchy(p.alpha, p1, xi2, n) +
           0.5 * gamma_weight_cauchy(p.alpha - 0.5, p2, xi2, n);
}

} // namespace

cplx cauchy_transform(const KernelParams& p, const MonicPoly& pk, cplx zeta,
                      int n_nodes)
{
    if (zeta.imag() == 0.0)
        throw std::domain_error("cauchy_transform: zeta must lie off the real axis");
    int n = n_nodes;
    if (n <= 0) {
        double dist = std::abs(zeta.imag());
        n = 140;
        if (dist < 1.0) n = 200;
        if (dist < 0.25) n = 300;
    }
    // int_R = e^{-2 pi i beta} J(pi_k, zeta) - J(pi_k(-.), -zeta)
    cplx pos = std::exp(cplx(0.0, -2.0 * PI) * p.beta()) *
               half_line_cauchy(p, pk, zeta, n);
    cplx neg = -half_line_cauchy(p, pk.reflected(), -zeta, n);
    return (pos + neg) / (2.0 * PI * cplx(0.0, 1.0));
}

cplx cauchy_transform(int k, const KernelParams& p, cplx zeta, int n_nodes)
{
    auto polys = monic_polys(p, k);
    return cauchy_transform(p, polys[k], zeta, n_nodes);
}

} // namespace chgdet
