#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chgdet/rhverify.hpp"

#include <cmath>

using namespace chgdet;

namespace {
const cplx I1(0.0, 1.0);
double mnorm(const Mat2& m)
{
    double r = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}
} // namespace

TEST_CASE("d_func: boundary product, small-z and large-z expansions")
{
    for (int i = 0; i < 20; ++i) {
        double x = -0.95 + 1.9 * (i + 0.5) / 20.0;
        CHECK(d_product_residual(x) < 1e-12);
    }

    // two-sided z -> 0 expansions (upper 2/z - z/2 + O(z^3), lower z/2 + O(z^3))
    cplx zu = 1e-6 * std::exp(I1 * 0.5 * PI);
    CHECK(std::abs(d_func(zu) - 2.0 / zu) <= 1e-12 * std::abs(2.0 / zu));
    cplx zm = 1e-3 * std::exp(I1 * 0.4 * PI); // O(z^3) visible above roundoff
    CHECK(std::abs(d_func(zm) - (2.0 / zm - zm / 2.0)) < 3e-9);
    cplx zl = 1e-3 * std::exp(-I1 * 0.5 * PI);
    CHECK(std::abs(d_func(zl) - zl / 2.0) < 3e-10);

    // z -> infinity: D = -i + 1/z + O(1/z^2)
    for (cplx z : {cplx(1e4, 3e3), cplx(-2e4, 1e4), cplx(1e4, -1e4)})
        CHECK(std::abs(d_func(z) - (-I1 + 1.0 / z)) < 2.0 / std::norm(z));

    CHECK_THROWS_AS(d_func(cplx(0.3, 0.0)), std::domain_error);
}

TEST_CASE("g_func: chi = 0 reduction and normalization at infinity")
{
    RHConfig c0(KernelParams(0.3, 0.4), 8.0, 0.0);
    for (cplx z : {cplx(0.7, 1.3), cplx(-2.0, -0.4), cplx(3.0, 0.1)}) {
        cplx ref = 0.25 * std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
        CHECK(std::abs(g_func(z, c0) - ref) < 1e-14);
    }
    // g(z) - z/4 approaches a finite limit
    RHConfig c1(KernelParams(0.3, 0.4), 8.0, 1.3);
    cplx lim1 = g_func(cplx(0.0, 1e5), c1) - cplx(0.0, 1e5) / 4.0;
    cplx lim2 = g_func(cplx(0.0, 1e6), c1) - cplx(0.0, 1e6) / 4.0;
    CHECK(std::abs(lim1 - lim2) < 1e-4);
    // branch symmetry z -> -conj(z) at chi = 0: g(-conj z) = -conj(g(z)),
    // so Re g is odd across the imaginary axis and Im g is even
    cplx za(0.8, 0.9);
    CHECK(std::abs(g_func(-std::conj(za), c0) + std::conj(g_func(za, c0))) <
          1e-14);
}

TEST_CASE("p_infinity: unit determinant, jumps, decay at infinity")
{
    for (RHConfig cfg : {RHConfig(KernelParams(0.3, 0.4), 8.0, 0.7),
                         RHConfig(KernelParams(0.0, 0.0), 6.0, 0.0),
                         RHConfig(KernelParams(0.5, -0.6), 10.0, 1.6)}) {
        CHECK(max_abs_det_deviation_pinf(cfg, 50) < 1e-10);
        for (int sigma : {4, 6, 7}) {
            JumpReport r = check_pinf_jump(sigma, cfg);
            CAPTURE(r.contour);
            CHECK(r.max_residual < 1e-10);
            CHECK(r.falls_with_eps);
        }
        double d3 = pinf_infinity_deviation(cfg, 1e3);
        double d4 = pinf_infinity_deviation(cfg, 1e4);
        CHECK(d3 < 5e-2); // C/|z|, C grows with mu and beta
        CHECK(d3 / d4 > 7.0);
        CHECK(d3 / d4 < 14.0);
    }
}

TEST_CASE("conformal maps: local expansions")
{
    RHConfig c0(KernelParams(0.3, 0.4), 8.0, 0.0);
    RHConfig c2(KernelParams(0.3, 0.4), 8.0, 2.0); // k = 2
    cplx h = 1e-6 * std::exp(I1 * 0.6);

    CHECK(std::abs(conformal_map(Disc::Zero, cplx(1e-4, 1e-5), c0) /
                       cplx(1e-4, 1e-5) -
                   0.5) < 1e-7);
    CHECK(std::abs(conformal_map(Disc::M1, -1.0 + h, c0) / h) * 8.0 ==
          doctest::Approx(1.0).epsilon(1e-5));
    CHECK(std::abs(conformal_map(Disc::P1, 1.0 + h, c0) / h) * 8.0 ==
          doctest::Approx(1.0).epsilon(1e-5));
    // k > 0 rescales the linear coefficient by (1 - 4k/|t|)^2
    double scale = std::pow(1.0 - 4.0 * 2.0 / 32.0, 2.0) / 8.0;
    CHECK(std::abs(conformal_map(Disc::M1, -1.0 + h, c2) / h) ==
          doctest::Approx(scale).epsilon(1e-5));
    // rotation by pi at +1: f^(1) maps (1, 1+d) to the negative axis
    CHECK(conformal_map(Disc::P1, cplx(1.2, 1e-9), c0).real() < 0.0);
    CHECK(conformal_map(Disc::M1, cplx(-0.8, 1e-9), c0).real() > 0.0);
    CHECK_THROWS_AS(conformal_map(Disc::Zero, cplx(0.9, 0.0), c0),
                    std::domain_error);
}

TEST_CASE("bessel parametrix: ray jumps, ODE identity, asymptotic remainder")
{
    for (int ray : {1, 2, 3}) {
        JumpReport r = check_bessel_jump(ray);
        CAPTURE(r.contour);
        CHECK(r.max_residual < 1e-10);
        CHECK(r.falls_with_eps);
    }
    for (double th : {-1.9, -0.8, 0.0, 0.8, 1.9})
        CHECK(bessel_ode_residual(3.0 * std::exp(I1 * th)) < 1e-8);

    for (double th : {-1.9, 0.0, 1.2}) {
        double r2 = bessel_remainder_deviation(100.0 * std::exp(I1 * th));
        double r3 = bessel_remainder_deviation(1000.0 * std::exp(I1 * th));
        CHECK(r2 / r3 > 7.0);
        CHECK(r2 / r3 < 14.0);
    }
}

TEST_CASE("H parametrix: determinant 1 and the H_1 expansion entries")
{
    KernelParams p(0.3, 0.4);
    OrthoData od = hankel_dets(p, 5);
    for (int k : {0, 1, 2}) {
        for (cplx zeta : {cplx(0.9, 0.8), cplx(-1.1, 1.4), cplx(0.4, -1.0)}) {
            Mat2 h = op_parametrix_h(zeta, p, od, k);
            CHECK(std::abs(h.determinant() - 1.0) < 1e-8);
        }
    }
    CHECK_THROWS_AS(op_parametrix_h(cplx(1.0, 0.0), p, od, 1), std::domain_error);

    for (int k : {0, 1, 2, 3}) {
        auto [e12, e21] = h1_offdiag_entries(p, od, k);
        CHECK(std::abs(e12 - od.gamma_k[k]) <= 1e-6 * std::abs(od.gamma_k[k]));
        if (k >= 1) {
            cplx expect = 1.0 / od.gamma_k[k - 1];
            CHECK(std::abs(e21 - expect) <= 1e-6 * std::abs(expect));
        }
    }
}

TEST_CASE("H parametrix: jump across the real axis (Plemelj)")
{
    // H_+ = H_- [[1, w e^{zeta^2}],[0,1]].  The quadrature behind the
    // Cauchy transforms caps how close to the axis H can be evaluated;
    // Richardson from moderate offsets reaches the percent level, and the
    // raw residual must shrink as the offset halves.
    KernelParams p(0.3, 0.4);
    OrthoData od = hankel_dets(p, 3);
    int k = 1;
    for (double x : {0.6, -0.8}) {
        auto at = [&](double e) {
            Mat2 hm = op_parametrix_h(cplx(x, -e), p, od, k);
            Mat2 hp = op_parametrix_h(cplx(x, e), p, od, k);
            return Mat2(hm.inverse() * hp);
        };
        cplx w = fh_weight(p, x) * std::exp(cplx(x * x));
        Mat2 jexp;
        jexp << 1.0, w, 0.0, 1.0;
        double r_raw4 = mnorm(Mat2(at(1e-4) - jexp));
        double r_raw5 = mnorm(Mat2(at(1e-5) - jexp));
        CHECK(r_raw5 < 0.2 * r_raw4); // linear in eps
        Mat2 j = (10.0 * at(1e-5) - at(1e-4)) / 9.0;
        CHECK(mnorm(Mat2(j - jexp)) < 1e-5 * std::abs(w));
    }
}

TEST_CASE("model jumps: unit determinant and the displayed entries")
{
    RHConfig cfg(KernelParams(0.3, 0.4), 8.0, 0.7);
    for (int i = 1; i <= 7; ++i)
        CHECK(std::abs(model_jump_J(i, cfg).determinant() - 1.0) < 1e-14);
    // J4 = e^{2 pi i beta sigma3}
    Mat2 j4 = model_jump_J(4, cfg);
    CHECK(std::abs(j4(0, 0) - std::exp(2.0 * PI * I1 * cfg.params.beta())) < 1e-15);
    CHECK(std::abs(j4(0, 1)) + std::abs(j4(1, 0)) == 0.0);
    // J6 at gamma = 1
    RHConfig g1(KernelParams(0.3, 0.4), 8.0, 0.0,
                std::numeric_limits<double>::infinity());
    Mat2 j6 = model_jump_J(6, g1);
    cplx ep = std::exp(PI * I1 * (0.3 - g1.params.beta()));
    CHECK(std::abs(j6(0, 1) + ep) < 1e-15);
    CHECK(std::abs(j6(1, 1)) == 0.0);
    // J_A rays carry the e^{-+2tg} dressing
    cplx z(0.9, 1.1);
    Mat2 ja1 = jump_JA_ray(1, z, cfg);
    cplx dress = std::exp(-2.0 * cfg.t() * g_func(z, cfg));
    CHECK(std::abs(ja1(1, 0) - model_jump_J(1, cfg)(1, 0) * dress) < 1e-12);
}

TEST_CASE("E prefactors: analyticity across the cut in each disc")
{
    for (RHConfig cfg : {RHConfig(KernelParams(0.3, 0.4), 8.0, 0.7),
                         RHConfig(KernelParams(0.3, 0.4), 8.0, 0.3),
                         RHConfig(KernelParams(0.0, 0.0), 8.0, 0.0)}) {
        for (Disc d : {Disc::M1, Disc::P1, Disc::Zero}) {
            JumpReport r = check_e_analyticity(d, cfg);
            CAPTURE(r.contour);
            CHECK(r.max_residual < 1e-9);
        }
    }
}

TEST_CASE("P^(-1): jumps against J_A inside the disc")
{
    KernelParams p(0.3, 0.4);
    OrthoData od = hankel_dets(p, 4);
    for (double chi : {0.0, 0.7}) {
        RHConfig cfg(p, 8.0, chi);
        for (int contour : {2, 3, 7}) {
            JumpReport r = check_local_jump_m1(contour, cfg, od);
            CAPTURE(r.contour);
            CHECK(r.max_residual < 1e-9);
            CHECK(r.falls_with_eps);
        }
    }
}

TEST_CASE("P^(0): jump against J_A across (0, delta)")
{
    // on (0,1) the boundary values of D are positive, so J_A holds as
    // displayed (no branch twist, unlike Sigma_7)
    KernelParams p(0.3, 0.4);
    OrthoData od = hankel_dets(p, 4);
    RHConfig cfg(p, 8.0, 0.3);
    double x = 0.18;
    auto at = [&](double e) {
        Mat2 lm = local_parametrix(Disc::Zero, cplx(x, -e), cfg, od);
        Mat2 lp = local_parametrix(Disc::Zero, cplx(x, e), cfg, od);
        return Mat2(lm.inverse() * lp);
    };
    Mat2 jexp = jump_JA_interval(6, x, cfg);
    Mat2 j = (10.0 * at(1e-5) - at(1e-4)) / 9.0;
    CHECK(mnorm(Mat2(j - jexp)) < 1e-6);
}

TEST_CASE("P^(-1) matching: norm on |z+1| = delta halves as s doubles")
{
    KernelParams p(0.3, 0.4);
    OrthoData od = hankel_dets(p, 4);
    RHConfig c6(p, 6.0, 0.0, std::numeric_limits<double>::infinity());
    RHConfig c12(p, 12.0, 0.0, std::numeric_limits<double>::infinity());
    double m6 = matching_norm_m1(c6, od);
    double m12 = matching_norm_m1(c12, od);
    CHECK(m6 / m12 > 1.6);
    CHECK(m6 / m12 < 2.4);
}
