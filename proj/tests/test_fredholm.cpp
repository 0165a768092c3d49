#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chgdet/fredholm.hpp"
#include "oracles.hpp"

#include <cmath>

using namespace chgdet;

TEST_CASE("deformation: gamma <-> nu bijection")
{
    CHECK(Deformation::from_gamma(0.0).nu == 0.0);
    CHECK(std::abs(Deformation::from_gamma(1.0 - std::exp(-3.0)).nu - 3.0) < 1e-13);
    CHECK(std::isinf(Deformation::from_gamma(1.0).nu));
    CHECK(Deformation::from_nu(std::numeric_limits<double>::infinity()).gamma == 1.0);
    CHECK(std::abs(Deformation::from_nu(2.0).gamma - (1.0 - std::exp(-2.0))) < 1e-15);
    CHECK_THROWS_AS(Deformation::from_gamma(1.5), std::domain_error);
    CHECK_THROWS_AS(Deformation::from_nu(-1.0), std::domain_error);
}

TEST_CASE("discretize: symmetry, gamma-independence, trace oracle")
{
    GapInstance inst(KernelKind::sine(), 0.01, Deformation::from_gamma(1.0));
    DiscreteOperator op = discretize(inst, 2);
    REQUIRE(op.matrix.rows() == 2);
    CHECK(op.matrix(0, 1) == op.matrix(1, 0)); // exact by construction
    // trace of the Nystrom matrix approximates int K(x,x) dx = 2s/pi
    CHECK(op.matrix.trace() ==
          doctest::Approx(2.0 * 0.01 / PI).epsilon(1e-10));

    GapInstance i0(KernelKind::sine(), 0.01, Deformation::from_gamma(0.0));
    DiscreteOperator op0 = discretize(i0, 2);
    CHECK((op.matrix - op0.matrix).norm() == 0.0); // deformation only in log_det

    GapInstance ic(KernelKind::chg(KernelParams(0.3, 0.4)), 2.0,
                   Deformation::from_gamma(0.5));
    DiscreteOperator oc = discretize(ic, 60);
    CHECK((oc.matrix - oc.matrix.transpose()).norm() == 0.0);
}

TEST_CASE("log_det: gamma = 0 and Neumann-series oracle at small s")
{
    GapInstance inst(KernelKind::sine(), 0.1, Deformation::from_gamma(1.0));
    DiscreteOperator op = discretize(inst, 60);
    CHECK(log_det(op, Deformation::from_gamma(0.0)) == 0.0);

    double ld = log_det(op, inst.def);
    CHECK(ld == doctest::Approx(-0.0657).epsilon(2e-3)); // spec display value
    double neu = oracle::neumann_logdet(inst.kind, 0.1, 1.0);
    CHECK(std::abs(ld - neu) < 5e-7); // truncated tail ~ tr K^5/5

    double neu2 = oracle::neumann_logdet(inst.kind, 0.1, 0.6);
    CHECK(std::abs(log_det(op, Deformation::from_gamma(0.6)) - neu2) < 5e-7);
}

TEST_CASE("log_det: matches the gamma=1 sine asymptotic at s=8 within 0.1")
{
    GapInstance inst(KernelKind::sine(), 8.0, Deformation::from_gamma(1.0));
    DiscreteOperator op = discretize(inst, 400);
    double ld = log_det(op, inst.def);
    double asy = -0.5 * 64.0 - 0.25 * std::log(8.0) + std::log(2.0) / 12.0 +
                 3.0 * constants().zeta_prime_minus1;
    CHECK(std::abs(ld - asy) < 0.1);
}

TEST_CASE("spectrum: range, rank-one limit, stability identity")
{
    GapInstance inst(KernelKind::sine(), 5.0, Deformation::from_gamma(1.0));
    DiscreteOperator op = discretize(inst, 200);
    SpectrumResult sp = spectrum(op, 200);
    for (int k = 0; k < 200; ++k) {
        CHECK(sp.lambda[k] > -1e-10);
        CHECK(sp.lambda[k] < 1.0 + 1e-10);
        if (sp.one_minus_lambda[k] >= 1e-6)
            CHECK(std::abs(sp.one_minus_lambda[k] + sp.lambda[k] - 1.0) < 1e-12);
    }
    CHECK_THROWS_AS(spectrum(op, 500), std::invalid_argument);

    // s -> 0: lambda_0 ~ 2s/pi (rank-one)
    GapInstance tiny(KernelKind::sine(), 1e-3, Deformation::from_gamma(1.0));
    SpectrumResult sp0 = spectrum(discretize(tiny, 40), 1);
    CHECK(sp0.lambda[0] == doctest::Approx(2e-3 / PI).epsilon(1e-5));
}

TEST_CASE("log_det: spectrum consistency and monotonicity in gamma")
{
    GapInstance inst(KernelKind::chg(KernelParams(0.3, 0.4)), 3.0,
                     Deformation::from_gamma(0.9));
    DiscreteOperator op = discretize(inst, 120, QuadMode::SplitJacobi);
    SpectrumResult sp = spectrum(op, 120);
    double prev = 1.0;
    for (double g : {0.0, 0.2, 0.4, 0.6, 0.8, 0.95, 1.0}) {
        double ld = log_det(op, Deformation::from_gamma(g));
        double direct = 0.0;
        for (int k = 0; k < 120; ++k) direct += std::log1p(-g * sp.lambda[k]);
        CHECK(std::abs(ld - direct) < 1e-12 * std::max(1.0, std::abs(ld)));
        CHECK(ld <= prev + 1e-14); // det nonincreasing in gamma
        prev = ld;
    }
}

TEST_CASE("discretize: legendre and jacobi modes agree on the spectrum")
{
    GapInstance inst(KernelKind::chg(KernelParams(0.4, 0.3)), 2.0,
                     Deformation::from_gamma(1.0));
    SpectrumResult a = spectrum(discretize(inst, 240, QuadMode::SplitLegendre), 4);
    SpectrumResult b = spectrum(discretize(inst, 120, QuadMode::SplitJacobi), 4);
    for (int k = 0; k < 4; ++k)
        CHECK(a.lambda[k] == doctest::Approx(b.lambda[k]).epsilon(5e-7));
}

TEST_CASE("log_det: node-doubling convergence (quadrature invariant)")
{
    // gamma away from 1 at s = 10 (at gamma = 1 the value itself sits on
    // the kappa * eps conditioning floor of double precision)
    GapInstance i10(KernelKind::sine(), 10.0, Deformation::from_gamma(0.9));
    double a = log_det(discretize(i10, 300), i10.def);
    double b = log_det(discretize(i10, 600), i10.def);
    CHECK(std::abs(a - b) <= 1e-8);

    GapInstance i6(KernelKind::sine(), 6.0, Deformation::from_gamma(1.0));
    double c = log_det(discretize(i6, 300), i6.def);
    double d = log_det(discretize(i6, 600), i6.def);
    CHECK(std::abs(c - d) <= 1e-8);
}

TEST_CASE("log_det: error reports the offending index")
{
    // gamma * lambda >= 1 cannot happen for these kernels; exercise the
    // guard through a synthetic operator
    GapInstance inst(KernelKind::sine(), 1.0, Deformation::from_gamma(1.0));
    DiscreteOperator op = discretize(inst, 10);
    op.matrix(0, 0) += 2.0; // push an eigenvalue above 1
    CHECK_THROWS_WITH_AS(log_det(op, inst.def),
                         doctest::Contains("index 0"), std::runtime_error);
}
