#ifndef CHGDET_ORTHOPOLY_HPP
#define CHGDET_ORTHOPOLY_HPP

#include "chgdet/kernels.hpp"

#include <vector>

namespace chgdet {

// Monic orthogonal polynomial pi_k for the Fisher-Hartwig weight
// w(x; alpha, beta) = |x|^{2 alpha} e^{-x^2} * (e^{-2 pi i beta} on x > 0).
struct MonicPoly {
    int degree = 0;
    std::vector<cplx> coeffs; // c[0] + c[1] x + ... + x^degree, c.back() == 1

    cplx eval(cplx x) const;
    MonicPoly reflected() const; // pi(-x) up to sign: returns q with q(x) = pi(-x)
};

// Moments, Hankel determinants and the orthogonality norms h_k with
// gamma_k = -h_k / (2 pi i).
struct OrthoData {
    KernelParams params;
    int k_max = 0;
    std::vector<cplx> moments; // m_0 .. m_{2 k_max + 2}
    std::vector<cplx> hankel;  // D_1 .. D_{k_max + 1}
    std::vector<cplx> h;       // h_0 .. h_{k_max}
    std::vector<cplx> gamma_k; // gamma_0 .. gamma_{k_max}
};

// m_j = int x^j w(x) dx = (1/2) Gamma((j + 2 alpha + 1)/2) ((-1)^j + e^{-2 pi i beta})
cplx moment(int j, const KernelParams& p);

// weight itself (for oracles and the H-parametrix jump): real for beta in iR
cplx fh_weight(const KernelParams& p, double x);

// Hankel determinants D_k = det[m_{i+j}], h_k = D_{k+1}/D_k (k_max <= 12).
OrthoData hankel_dets(const KernelParams& p, int k_max);

// Monic orthogonal polynomials pi_0 .. pi_{k_max} from the Hankel systems.
std::vector<MonicPoly> monic_polys(const KernelParams& p, int k_max);

// Cauchy transform (1/2 pi i) int pi_k(z) w(z) / (z - zeta) dz, zeta off R.
// Gauss-Laguerre after the even/odd split; n_nodes = 0 picks a default
// scaled to zeta's distance from the real axis.
cplx cauchy_transform(const KernelParams& p, const MonicPoly& pk, cplx zeta,
                      int n_nodes = 0);
cplx cauchy_transform(int k, const KernelParams& p, cplx zeta, int n_nodes = 0);

} // namespace chgdet

#endif
