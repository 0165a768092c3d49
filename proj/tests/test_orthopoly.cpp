#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chgdet/orthopoly.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace chgdet;

TEST_CASE("moment: trivial values")
{
    KernelParams p00(0.0, 0.0);
    CHECK(moment(0, p00).real() == doctest::Approx(std::sqrt(PI)).epsilon(1e-15));
    CHECK(std::abs(moment(1, p00)) < 1e-15);
    CHECK(moment(0, KernelParams(0.5, 0.0)).real() ==
          doctest::Approx(1.0).epsilon(1e-14)); // Gamma(1)
}

TEST_CASE("moment: quadrature oracle on the defining integral")
{
    for (KernelParams p : {KernelParams(0.5, 0.0), KernelParams(0.3, 0.4),
                           KernelParams(-0.3, -0.5)}) {
        const long double L = 10.0L;
        for (int j : {0, 1, 2, 5}) {
            auto f = [&](long double sgn) {
                return std::function<oracle::lcplx(long double)>(
                    [&, sgn](long double x) -> oracle::lcplx {
                        long double ax = std::abs(x);
                        if (ax == 0.0L) return 0.0L;
                        long double w =
                            std::pow(ax, 2.0L * (long double)p.alpha) *
                            std::exp(-x * x);
                        if (sgn > 0)
                            w *= std::exp(2.0L * (long double)PI *
                                          (long double)p.beta_im);
                        return std::pow(x, (long double)j) * w;
                    });
            };
            oracle::lcplx ref =
                oracle::tanh_sinh(f(-1.0L), -L, 0.0L) +
                oracle::tanh_sinh(f(+1.0L), 0.0L, L);
            cplx got = moment(j, p);
            CHECK(std::abs(got - cplx((double)ref.real(), (double)ref.imag())) <=
                  1e-12 * (1.0 + std::abs(got)));
        }
    }
}

TEST_CASE("hankel_dets: Hermite reduction h_k = sqrt(pi) k! 2^{-k}")
{
    OrthoData d = hankel_dets(KernelParams(0.0, 0.0), 8);
    for (int k = 0; k <= 8; ++k) {
        double ref = std::sqrt(PI) * std::tgamma(k + 1.0) * std::pow(2.0, -k);
        CHECK(std::abs(d.h[k] - ref) <= 1e-10 * ref);
    }
    CHECK(d.h[0] == d.moments[0]); // h_0 = m_0 exactly (D_1/D_0)
}

TEST_CASE("hankel_dets: gamma_k identity and reality of h_k e^{i pi beta}")
{
    for (KernelParams p : {KernelParams(0.3, 0.4), KernelParams(0.0, 0.5),
                           KernelParams(-0.3, 0.0)}) {
        OrthoData d = hankel_dets(p, 6);
        double epib = std::exp(-PI * p.beta_im);
        for (int k = 0; k <= 6; ++k) {
            CHECK(d.gamma_k[k] == -d.h[k] / (2.0 * PI * cplx(0.0, 1.0)));
            cplx he = d.h[k] * epib;
            CHECK(std::abs(he.imag()) <= 1e-10 * std::abs(d.h[k]));
            CHECK(he.real() > 0.0);
        }
    }
}

TEST_CASE("hankel_dets: Hankel route vs quadrature oracle")
{
    for (double alpha : {-0.3, 0.0, 0.5})
        for (double beta_im : {0.0, 0.5}) {
            KernelParams p(alpha, beta_im);
            OrthoData d = hankel_dets(p, 6);
            auto polys = monic_polys(p, 6);
            for (int k = 0; k <= 6; ++k) {
                cplx ref = oracle::h_norm_quadrature(p, polys, k);
                CHECK(std::abs(d.h[k] - ref) <= 1e-8 * std::abs(ref));
            }
        }
}

TEST_CASE("monic_polys: Hermite recurrence values and orthogonality residuals")
{
    auto polys = monic_polys(KernelParams(0.0, 0.0), 4);
    CHECK(polys[0].degree == 0);
    CHECK(polys[0].coeffs[0] == cplx(1.0));
    // pi_1 = x, pi_2 = x^2 - 1/2 (monic Hermite for e^{-x^2})
    CHECK(std::abs(polys[1].coeffs[0]) < 1e-14);
    CHECK(std::abs(polys[2].coeffs[0] + 0.5) < 1e-13);
    CHECK(std::abs(polys[2].coeffs[1]) < 1e-14);

    // beta = 0.5i, alpha = 0: pi_1(x) = x - m_1/m_0
    KernelParams pb(0.0, 0.5);
    auto pB = monic_polys(pb, 1);
    cplx ref = -moment(1, pb) / moment(0, pb);
    CHECK(std::abs(pB[1].coeffs[0] - ref) < 1e-13);

    // orthogonality residual against the lower-degree polys by quadrature
    KernelParams pc(0.3, 0.4);
    auto pcs = monic_polys(pc, 5);
    OrthoData d = hankel_dets(pc, 5);
    for (int k = 2; k <= 5; ++k)
        for (int j = 0; j < k; ++j) {
            // int pi_k pi_j w via moments (exact linear algebra route)
            cplx acc = 0.0;
            for (int a = 0; a <= k; ++a)
                for (int b = 0; b <= j; ++b)
                    acc += pcs[k].coeffs[a] * pcs[j].coeffs[b] * moment(a + b, pc);
            CHECK(std::abs(acc) <= 1e-9 * std::abs(d.h[k]));
        }
}

TEST_CASE("cauchy_transform: oracle value, decay, conjugation")
{
    KernelParams p00(0.0, 0.0);
    auto polys = monic_polys(p00, 3);
    cplx zeta(0.0, 2.0);
    cplx got = cauchy_transform(p00, polys[0], zeta);
    cplx ref = oracle::cauchy_quadrature(p00, polys[0], zeta);
    CHECK(std::abs(got - ref) <= 1e-11 * std::abs(ref));
    CHECK_THROWS_AS(cauchy_transform(p00, polys[0], cplx(1.0, 0.0)),
                    std::domain_error);

    // conjugation symmetry for the real weight (beta = 0): the plain
    // integral conjugates, so with the 1/(2 pi i) factor C(conj z) = -conj C(z)
    cplx up = cauchy_transform(p00, polys[1], cplx(0.3, 2.0));
    cplx dn = cauchy_transform(p00, polys[1], cplx(0.3, -2.0));
    CHECK(std::abs(up + std::conj(dn)) < 1e-12);

    // decay: zeta^{k+1} C_k -> gamma_k = -h_k/(2 pi i)
    for (KernelParams p : {p00, KernelParams(0.3, 0.4)}) {
        OrthoData d = hankel_dets(p, 3);
        auto ps = monic_polys(p, 3);
        for (int k : {0, 1, 2}) {
            cplx at_r = [&](double r) {
                cplx zz(0.0, r);
                return std::pow(zz, cplx(double(k + 1))) *
                       cauchy_transform(p, ps[k], zz);
            }(600.0);
            CHECK(std::abs(at_r - d.gamma_k[k]) <=
                  2e-2 * std::abs(d.gamma_k[k]));
        }
    }
}

TEST_CASE("hankel_dets: argument validation")
{
    CHECK_THROWS_AS(hankel_dets(KernelParams(0.0, 0.0), 13), std::invalid_argument);
    CHECK_THROWS_AS(moment(-1, KernelParams(0.0, 0.0)), std::invalid_argument);
}
