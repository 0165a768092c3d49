#include "chgdet/rhverify.hpp"

#include <cmath>
#include <stdexcept>

namespace chgdet {

namespace {

const cplx I1(0.0, 1.0);

// principal sqrt(z-1) sqrt(z+1): branch cut exactly [-1,1]
cplx sqrt_zsq_m1(cplx z) { return std::sqrt(z - 1.0) * std::sqrt(z + 1.0); }

// log with arg in (lo, lo + 2pi]
cplx log_window(cplx w, double lo)
{
    double a = std::arg(w); // (-pi, pi]
    while (a <= lo) a += 2.0 * PI;
    while (a > lo + 2.0 * PI) a -= 2.0 * PI;
    return {std::log(std::abs(w)), a};
}

cplx pow_window(cplx w, cplx e, double lo)
{
    return std::exp(e * log_window(w, lo));
}

Mat2 mat2(cplx a, cplx b, cplx c, cplx d)
{
    Mat2 m;
    m << a, b, c, d;
    return m;
}

const Mat2 SIGMA3 = (Mat2() << 1, 0, 0, -1).finished();

bool on_real_segment(cplx z, double a, double b)
{
    return z.imag() == 0.0 && z.real() >= a && z.real() <= b;
}

} // namespace

Mat2 sigma3_exp(cplx c)
{
    return mat2(std::exp(c), 0.0, 0.0, std::exp(-c));
}

RHConfig::RHConfig(KernelParams p, double s_, double chi_,
                   std::optional<double> nu_override, double delta_)
    : params(p), s(s_), chi(chi_), delta(delta_)
{
    if (!(s_ > 0.0)) throw std::domain_error("RHConfig: s must be positive");
    if (!(chi_ >= 0.0)) throw std::domain_error("RHConfig: chi must be >= 0");
    // chi = k + mu, mu in [-1/2, 1/2)
    k = static_cast<int>(std::floor(chi_ + 0.5));
    mu = chi_ - k;
    nu = nu_override ? *nu_override
                     : 2.0 * s - (chi + p.alpha) * std::log(4.0 * s);
    if (!(nu >= 0.0))
        throw std::domain_error("RHConfig: boundary nu is negative; raise s");
    gamma = std::isinf(nu) ? 1.0 : -std::expm1(-nu);
}

cplx d_func(cplx z)
{
    if (on_real_segment(z, -1.0, 1.0))
        throw std::domain_error("d_func: z on the branch cut [-1,1]");
    cplx sq = sqrt_zsq_m1(z);
    // (1 + i sqrt)(1 - i sqrt) = z^2: pick the form whose denominator does
    // not vanish as z -> 0 (upper: 1 + i sqrt ~ z^2/2, lower: 1 - i sqrt)
    if (z.imag() > 0.0) return (1.0 - I1 * sq) / z;
    return z / (1.0 + I1 * sq);
}

cplx g_func(cplx z, const RHConfig& cfg)
{
    return 0.25 * sqrt_zsq_m1(z) - (cfg.chi / cfg.t()) * std::log(d_func(z));
}

Mat2 p_infinity(cplx z, const RHConfig& cfg)
{
    if (on_real_segment(z, -1.0, 1.0) || (z.real() == 0.0 && z.imag() <= 0.0))
        throw std::domain_error("p_infinity: z on Sigma_4 u Sigma_6 u Sigma_7");

    const cplx beta = cfg.params.beta();
    const double alpha = cfg.params.alpha;
    const cplx sq = sqrt_zsq_m1(z);

    // ((z-1)/(z+1))^{1/4}, principal logs of each factor
    cplx r = std::exp(0.25 * (std::log(z - 1.0) - std::log(z + 1.0)));
    // (z + sqrt(z^2-1))^{-beta}: cut along the negative imaginary axis so
    // the factor is continuous across (-inf,-1) and matches z^{-beta}
    cplx wb = pow_window(z + sq, -beta, -0.5 * PI);
    cplx rat = std::pow((-I1 + sq) / z, cplx(alpha));
    cplx dmu = std::pow(d_func(z), cplx(cfg.mu));

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Mat2 m1 = inv_sqrt2 * mat2(1.0, -I1, -I1, 1.0);
    Mat2 m2 = inv_sqrt2 * mat2(1.0, I1, I1, 1.0);

    Mat2 front = sigma3_exp(beta * std::log(2.0)) *
                 sigma3_exp(0.5 * PI * I1 * (cfg.mu - beta));
    Mat2 tail = mat2(wb, 0.0, 0.0, 1.0 / wb) * sigma3_exp(0.5 * PI * I1 * beta) *
                mat2(rat, 0.0, 0.0, 1.0 / rat) * mat2(dmu, 0.0, 0.0, 1.0 / dmu);
    return front * m1 * mat2(r, 0.0, 0.0, 1.0 / r) * m2 * tail;
}

cplx conformal_map(Disc which, cplx z, const RHConfig& cfg)
{
    const cplx t = cfg.t();
    const double kk = cfg.k;
    switch (which) {
    case Disc::M1: {
        if (std::abs(z + 1.0) > cfg.delta * (1.0 + 1e-9))
            throw std::domain_error("conformal_map: z outside U(-1,delta)");
        cplx w = 0.25 * sqrt_zsq_m1(z) - (kk / t) * (std::log(d_func(z)) + PI * I1);
        return -w * w;
    }
    case Disc::P1: {
        if (std::abs(z - 1.0) > cfg.delta * (1.0 + 1e-9))
            throw std::domain_error("conformal_map: z outside U(1,delta)");
        cplx w = 0.25 * sqrt_zsq_m1(z) - (kk / t) * std::log(d_func(z));
        return -w * w;
    }
    case Disc::Zero: {
        if (std::abs(z) > cfg.delta * (1.0 + 1e-9))
            throw std::domain_error("conformal_map: z outside U(0,delta)");
        cplx sq = sqrt_zsq_m1(z);
        cplx w = (z.imag() > 0.0 ? 0.5 * I1 * sq : -0.5 * I1 * sq) + 0.5;
        cplx f = std::sqrt(w);
        // pick the root with f ~ z/2 (the map preserves the argument)
        if ((f / z).real() < 0.0) f = -f;
        return f;
    }
    }
    throw std::logic_error("conformal_map: bad disc");
}

Mat2 bessel_phi_bare(cplx zeta)
{
    cplx sq = std::sqrt(zeta);
    cplx i0 = bessel_modified(BesselKind::I0, sq);
    cplx k0 = bessel_modified(BesselKind::K0, sq);
    cplx i0p = bessel_modified(BesselKind::I0prime, sq);
    cplx k0p = bessel_modified(BesselKind::K0prime, sq);
    double sp = std::sqrt(PI);
    return mat2(sp * i0, sp * (I1 / PI) * k0,
                PI * I1 * sq * i0p / sp, -sq * k0p / sp);
}

Mat2 bessel_parametrix(cplx zeta)
{
    double a = std::arg(zeta);
    Mat2 c = Mat2::Identity();
    if (a > 2.0 * PI / 3.0) c = mat2(1.0, 0.0, -1.0, 1.0);
    else if (a < -2.0 * PI / 3.0) c = mat2(1.0, 0.0, 1.0, 1.0);
    return bessel_phi_bare(zeta) * c;
}

Mat2 op_parametrix_h(cplx zeta, const KernelParams& p, const OrthoData& ortho,
                     int k)
{
    if (zeta.imag() == 0.0)
        throw std::domain_error("op_parametrix_h: zeta must lie off the real axis");
    if (k > ortho.k_max + 1 || (k > 0 && k - 1 > ortho.k_max))
        throw std::invalid_argument("op_parametrix_h: ortho data too short");

    auto polys = monic_polys(p, k);
    cplx pik = polys[k].eval(zeta);
    cplx ck = cauchy_transform(p, polys[k], zeta);
    Mat2 core;
    if (k == 0) {
        core = mat2(pik, ck, 0.0, 1.0);
    } else {
        cplx cprime = 1.0 / ortho.gamma_k[k - 1]; // -2 pi i / h_{k-1}
        cplx pikm1 = polys[k - 1].eval(zeta);
        cplx ckm1 = cauchy_transform(p, polys[k - 1], zeta);
        core = mat2(pik, ck, cprime * pikm1, cprime * ckm1);
    }
    return core * sigma3_exp(-0.5 * zeta * zeta);
}

Mat2 e_prefactor(Disc which, cplx z, const RHConfig& cfg)
{
    const cplx beta = cfg.params.beta();
    const double alpha = cfg.params.alpha;
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const cplx amb = alpha - beta;

    if (which == Disc::M1 || which == Disc::P1) {
        cplx f = conformal_map(which, z, cfg);
        cplx f4 = std::pow(f, cplx(0.25));
        cplx dmu = std::pow(d_func(z), cplx(-cfg.mu));
        Mat2 u;
        if (which == Disc::M1)
            u = (z.imag() > 0.0) ? inv_sqrt2 * mat2(1.0, -I1, -I1, 1.0)
                                 : inv_sqrt2 * mat2(I1, -1.0, 1.0, -I1);
        else
            u = (z.imag() > 0.0) ? inv_sqrt2 * mat2(1.0, I1, I1, 1.0)
                                 : inv_sqrt2 * mat2(-I1, -1.0, 1.0, I1);
        cplx phase = (which == Disc::M1) ? -0.5 * PI * I1 * amb : 0.5 * PI * I1 * amb;
        Mat2 e = p_infinity(z, cfg) * sigma3_exp(phase) *
                 mat2(dmu, 0.0, 0.0, 1.0 / dmu);
        if (which == Disc::M1) e = e * sigma3_exp(PI * I1 * double(cfg.k));
        return e * u * sigma3_exp(cplx(0.5 * std::log(cfg.abs_t()))) *
               mat2(f4, 0.0, 0.0, 1.0 / f4);
    }

    // Disc::Zero: sectors in arg z; the (.)^{k+alpha} powers of f^(0) carry
    // their cut along (0,+inf), D^chi is principal.
    cplx f = conformal_map(Disc::Zero, z, cfg);
    cplx fp = pow_window(f, cplx(-(cfg.k + alpha)), 0.0);
    cplx d = d_func(z);
    double a = std::arg(z);
    Mat2 rot = mat2(0.0, -1.0, 1.0, 0.0);
    Mat2 tailm;
    if (a > 0.0) {
        cplx dc = std::pow(d, cplx(-cfg.chi));
        tailm = mat2(fp, 0.0, 0.0, 1.0 / fp) * mat2(dc, 0.0, 0.0, 1.0 / dc) *
                sigma3_exp(0.5 * PI * I1 * (alpha + beta));
    } else if (a < -0.5 * PI) {
        cplx dc = std::pow(d, cplx(cfg.chi));
        tailm = rot * mat2(fp, 0.0, 0.0, 1.0 / fp) *
                mat2(dc, 0.0, 0.0, 1.0 / dc) *
                sigma3_exp(0.5 * PI * I1 * (3.0 * alpha - beta));
    } else {
        cplx dc = std::pow(d, cplx(cfg.chi));
        tailm = rot * mat2(fp, 0.0, 0.0, 1.0 / fp) *
                mat2(dc, 0.0, 0.0, 1.0 / dc) *
                sigma3_exp(1.5 * PI * I1 * (alpha + beta));
    }
    return p_infinity(z, cfg) * tailm;
}

namespace {

Mat2 k_factor_m1(cplx z, const RHConfig& cfg)
{
    double phi = std::arg(z + 1.0);
    Mat2 c;
    if (phi > 0.0 && phi <= 2.0 * PI / 3.0) c = Mat2::Identity();
    else if (phi > 2.0 * PI / 3.0) c = mat2(1.0, 0.0, -1.0, 1.0);
    else if (phi <= -2.0 * PI / 3.0) c = mat2(0.0, 1.0, -1.0, 1.0);
    else c = mat2(0.0, 1.0, -1.0, 0.0);
    cplx amb = cfg.params.alpha - cfg.params.beta();
    return c * sigma3_exp(0.5 * PI * I1 * amb) * sigma3_exp(-cfg.t() * g_func(z, cfg));
}

Mat2 k_factor_p1(cplx z, const RHConfig& cfg)
{
    double phi = std::arg(z - 1.0);
    Mat2 c;
    if (phi > 0.0 && phi <= PI / 3.0) c = mat2(1.0, 0.0, -1.0, 1.0);
    else if (phi > PI / 3.0) c = Mat2::Identity();
    else if (phi <= -PI / 3.0) c = mat2(0.0, 1.0, -1.0, 0.0);
    else c = mat2(0.0, 1.0, -1.0, 1.0);
    cplx amb = cfg.params.alpha - cfg.params.beta();
    return c * sigma3_exp(-0.5 * PI * I1 * amb) * sigma3_exp(-cfg.t() * g_func(z, cfg));
}

Mat2 k_factor_0(cplx z, const RHConfig& cfg)
{
    double a = std::arg(z);
    cplx al = cfg.params.alpha, be = cfg.params.beta();
    Mat2 rot = mat2(0.0, 1.0, -1.0, 0.0);
    Mat2 egs = sigma3_exp(-cfg.t() * g_func(z, cfg));
    if (a > 0.0) return sigma3_exp(-0.5 * PI * I1 * (al + be)) * egs;
    if (a < -0.5 * PI)
        return sigma3_exp(-0.5 * PI * I1 * (3.0 * al - be)) * rot * egs;
    return sigma3_exp(-1.5 * PI * I1 * (al + be)) * rot * egs;
}

} // namespace

Mat2 local_parametrix(Disc which, cplx z, const RHConfig& cfg,
                      const OrthoData& ortho)
{
    const double t2 = cfg.abs_t() * cfg.abs_t();
    switch (which) {
    case Disc::M1: {
        cplx zeta = t2 * conformal_map(Disc::M1, z, cfg);
        // ln(z+1) with arg in (0, 2pi): cut along (-1, +inf)
        cplx ins = (cfg.gamma - 1.0) / (2.0 * PI * I1) * log_window(z + 1.0, 0.0);
        return e_prefactor(Disc::M1, z, cfg) * bessel_phi_bare(zeta) *
               mat2(1.0, ins, 0.0, 1.0) * k_factor_m1(z, cfg);
    }
    case Disc::P1: {
        cplx zeta = t2 * conformal_map(Disc::P1, z, cfg);
        cplx ins = (cfg.gamma - 1.0) / (2.0 * PI * I1) * std::log(z - 1.0);
        return e_prefactor(Disc::P1, z, cfg) * SIGMA3 * bessel_phi_bare(zeta) *
               mat2(1.0, ins, 0.0, 1.0) * SIGMA3 * k_factor_p1(z, cfg);
    }
    case Disc::Zero: {
        if (cfg.gamma >= 1.0)
            throw std::domain_error("local_parametrix: P^(0) needs gamma < 1");
        cplx zeta = std::sqrt(cfg.abs_t()) * conformal_map(Disc::Zero, z, cfg);
        Mat2 h = op_parametrix_h(zeta, cfg.params, ortho, cfg.k);
        cplx fa = pow_window(conformal_map(Disc::Zero, z, cfg),
                             cplx(cfg.params.alpha), 0.0);
        Mat2 mid = sigma3_exp(cplx(0.5 * cfg.mu * std::log(cfg.abs_t()))) * h *
                   sigma3_exp(cplx(0.5 * cfg.nu)) * // (1-gamma)^{-sigma3/2}
                   mat2(fa, 0.0, 0.0, 1.0 / fa) *
                   sigma3_exp(cplx(0.5 * cfg.params.alpha * std::log(cfg.abs_t())));
        return e_prefactor(Disc::Zero, z, cfg) * mid * k_factor_0(z, cfg);
    }
    }
    throw std::logic_error("local_parametrix: bad disc");
}

Mat2 model_jump_J(int i, const RHConfig& cfg)
{
    cplx em = std::exp(-PI * I1 * (cfg.params.alpha - cfg.params.beta()));
    cplx ep = 1.0 / em;
    cplx e2b = std::exp(2.0 * PI * I1 * cfg.params.beta());
    switch (i) {
    case 1: return mat2(1.0, 0.0, em, 1.0);
    case 2: return mat2(1.0, 0.0, ep, 1.0);
    case 3: return mat2(1.0, -em, 0.0, 1.0);
    case 4: return mat2(e2b, 0.0, 0.0, 1.0 / e2b);
    case 5: return mat2(1.0, -ep, 0.0, 1.0);
    case 6: return mat2(0.0, -ep, em, 1.0 - cfg.gamma);
    case 7: return mat2(0.0, -em, ep, 1.0 - cfg.gamma);
    }
    throw std::invalid_argument("model_jump_J: i must lie in 1..7");
}

Mat2 jump_JA_ray(int i, cplx z, const RHConfig& cfg)
{
    cplx em = std::exp(-PI * I1 * (cfg.params.alpha - cfg.params.beta()));
    cplx ep = 1.0 / em;
    cplx e2tg = std::exp(2.0 * cfg.t() * g_func(z, cfg));
    switch (i) {
    case 1: return mat2(1.0, 0.0, em / e2tg, 1.0);
    case 2: return mat2(1.0, 0.0, ep / e2tg, 1.0);
    case 3: return mat2(1.0, -em * e2tg, 0.0, 1.0);
    case 4: return model_jump_J(4, cfg);
    case 5: return mat2(1.0, -ep * e2tg, 0.0, 1.0);
    }
    throw std::invalid_argument("jump_JA_ray: i must lie in {1,2,3,5} (4 constant)");
}

Mat2 jump_JA_interval(int i, double x, const RHConfig& cfg, double eps)
{
    if (i != 6 && i != 7)
        throw std::invalid_argument("jump_JA_interval: i must be 6 or 7");
    cplx em = std::exp(-PI * I1 * (cfg.params.alpha - cfg.params.beta()));
    cplx ep = 1.0 / em;
    auto gdiff = [&](double e) {
        return cfg.t() * (g_func(cplx(x, e), cfg) - g_func(cplx(x, -e), cfg));
    };
    cplx d = (10.0 * gdiff(eps / 10.0) - gdiff(eps)) / 9.0;
    cplx e22 = (1.0 - cfg.gamma) * std::exp(d);
    if (i == 6) return mat2(0.0, -ep, em, e22);
    return mat2(0.0, -em, ep, e22);
}

// ---------------------------------------------------------------------
// verification sweeps
// ---------------------------------------------------------------------

namespace {

double mat_norm(const Mat2& m)
{
    double r = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r = std::max(r, std::abs(m(i, j)));
    return r;
}

// two-sided Richardson boundary values of F at z0 along +-nhat
template <typename F>
Mat2 boundary_limit(F&& f, cplx z0, cplx nhat, double eps)
{
    Mat2 a = f(z0 + eps * nhat);
    Mat2 b = f(z0 + 0.1 * eps * nhat);
    return (10.0 * b - a) / 9.0;
}

template <typename F>
double jump_residual(F&& f, cplx z0, cplx nplus, const Mat2& jexp, double eps)
{
    Mat2 lp = boundary_limit(f, z0, nplus, eps);
    Mat2 lm = boundary_limit(f, z0, -nplus, eps);
    return mat_norm(Mat2(lm.inverse() * lp - jexp));
}

} // namespace

JumpReport check_pinf_jump(int sigma, const RHConfig& cfg, int nsamples)
{
    auto f = [&](cplx z) { return p_infinity(z, cfg); };
    const cplx em = std::exp(-PI * I1 * (cfg.params.alpha - cfg.params.beta()));
    const cplx ep = 1.0 / em;
    JumpReport rep;
    rep.samples = nsamples;
    double worst_hi = 0.0, worst_lo = 0.0;
    for (int i = 0; i < nsamples; ++i) {
        double u = (i + 0.5) / nsamples;
        cplx z0, nplus;
        Mat2 jexp;
        if (sigma == 6) { // (0,1) oriented rightward, + side above
            z0 = cplx(0.05 + 0.9 * u, 0.0);
            nplus = I1;
            jexp = mat2(0.0, -ep, em, 0.0);
            rep.contour = "Sigma6";
        } else if (sigma == 7) {
            // (-1,0): the analytic branch of D^mu makes the constant
            // off-diagonal entries carry e^{+-2 pi i mu}
            z0 = cplx(-0.05 - 0.9 * u, 0.0);
            nplus = I1;
            cplx tw = std::exp(2.0 * PI * I1 * cfg.mu);
            jexp = mat2(0.0, -em * tw, ep / tw, 0.0);
            rep.contour = "Sigma7";
        } else if (sigma == 4) { // 0 -> -i inf, + side Re z > 0
            z0 = cplx(0.0, -(0.1 + 2.4 * u));
            nplus = 1.0;
            jexp = model_jump_J(4, cfg);
            rep.contour = "Sigma4";
        } else {
            throw std::invalid_argument("check_pinf_jump: sigma must be 4, 6 or 7");
        }
        double rh = jump_residual(f, z0, nplus, jexp, 1e-5);
        double rl = jump_residual(f, z0, nplus, jexp, 1e-6);
        worst_hi = std::max(worst_hi, rh);
        worst_lo = std::max(worst_lo, rl);
    }
    rep.max_residual = std::max(worst_hi, worst_lo);
    rep.falls_with_eps = worst_lo <= 2.0 * worst_hi + 1e-14;
    return rep;
}

double max_abs_det_deviation_pinf(const RHConfig& cfg, int nsamples)
{
    double worst = 0.0;
    for (int i = 0; i < nsamples; ++i) {
        double th = 2.0 * PI * (i + 0.31) / nsamples;
        double r = 0.3 + 2.5 * ((i * 7) % nsamples) / double(nsamples);
        cplx z = r * std::exp(I1 * th);
        if (std::abs(z.imag()) < 0.05) z += cplx(0.0, 0.1); // keep off the cuts
        worst = std::max(worst, std::abs(p_infinity(z, cfg).determinant() - 1.0));
    }
    return worst;
}

double pinf_infinity_deviation(const RHConfig& cfg, double r, int nsamples)
{
    double worst = 0.0;
    for (int i = 0; i < nsamples; ++i) {
        double th = -0.4 * PI + (1.7 * PI) * (i + 0.5) / nsamples; // window of z^beta
        cplx z = r * std::exp(I1 * th);
        cplx zb = pow_window(z, cfg.params.beta(), -0.5 * PI);
        Mat2 dev = p_infinity(z, cfg) * mat2(zb, 0.0, 0.0, 1.0 / zb) - Mat2::Identity();
        worst = std::max(worst, mat_norm(dev));
    }
    return worst;
}

double d_product_residual(double x, double eps)
{
    auto prod = [&](double e) {
        return d_func(cplx(x, e)) * d_func(cplx(x, -e));
    };
    cplx p = (10.0 * prod(eps / 10.0) - prod(eps)) / 9.0;
    return std::abs(p - 1.0);
}

JumpReport check_bessel_jump(int ray, int nsamples)
{
    auto f = [](cplx zeta) { return bessel_parametrix(zeta); };
    JumpReport rep;
    rep.samples = nsamples;
    double worst_hi = 0.0, worst_lo = 0.0;
    for (int i = 0; i < nsamples; ++i) {
        double r = 0.4 * std::pow(60.0, (i + 0.5) / nsamples); // 0.4 .. 24ish
        cplx z0, nplus;
        Mat2 jexp;
        if (ray == 1) { // e^{2 pi i/3} R+, oriented toward 0: + side arg < 2pi/3
            z0 = r * std::exp(I1 * (2.0 * PI / 3.0));
            nplus = std::exp(I1 * (2.0 * PI / 3.0 - 0.5 * PI));
            jexp = mat2(1.0, 0.0, 1.0, 1.0);
            rep.contour = "GammaB1";
        } else if (ray == 2) { // (-inf,0] toward 0: + side above
            z0 = cplx(-r, 0.0);
            nplus = I1;
            jexp = mat2(0.0, 1.0, -1.0, 0.0);
            rep.contour = "GammaB2";
        } else if (ray == 3) { // e^{-2 pi i/3} R+ toward 0: + side arg < -2pi/3
            z0 = r * std::exp(-I1 * (2.0 * PI / 3.0));
            nplus = std::exp(I1 * (-2.0 * PI / 3.0 - 0.5 * PI));
            jexp = mat2(1.0, 0.0, 1.0, 1.0);
            rep.contour = "GammaB3";
        } else {
            throw std::invalid_argument("check_bessel_jump: ray must be 1, 2 or 3");
        }
        double rh = jump_residual(f, z0, nplus, jexp, 1e-5 * r);
        double rl = jump_residual(f, z0, nplus, jexp, 1e-6 * r);
        worst_hi = std::max(worst_hi, rh);
        worst_lo = std::max(worst_lo, rl);
    }
    rep.max_residual = std::max(worst_hi, worst_lo);
    rep.falls_with_eps = worst_lo <= 2.0 * worst_hi + 1e-14;
    return rep;
}

double bessel_ode_residual(cplx zeta)
{
    // d Phi^B/d zeta (Phi^B)^{-1} = [[0, -i/(2 zeta)], [i/2, 0]]
    double h = 1e-5 * std::abs(zeta);
    auto deriv = [&](double hh) {
        Mat2 d = (bessel_parametrix(zeta + hh) - bessel_parametrix(zeta - hh)) /
                 (2.0 * hh);
        return Mat2(d * bessel_parametrix(zeta).inverse());
    };
    Mat2 d = (4.0 * deriv(h / 2.0) - deriv(h)) / 3.0; // Richardson O(h^4)
    Mat2 expect = mat2(0.0, -0.5 * I1 / zeta, 0.5 * I1, 0.0);
    return mat_norm(Mat2(d - expect));
}

double bessel_remainder_deviation(cplx zeta)
{
    cplx sq = std::sqrt(zeta);
    cplx z4 = std::pow(zeta, cplx(0.25));
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    Mat2 pre = mat2(1.0 / z4, 0.0, 0.0, z4) * (inv_sqrt2 * mat2(1.0, I1, I1, 1.0));
    Mat2 rem = pre.inverse() * bessel_parametrix(zeta) * sigma3_exp(-sq);
    Mat2 corr = (1.0 / (8.0 * sq)) * mat2(-1.0, -2.0 * I1, -2.0 * I1, 1.0);
    return mat_norm(Mat2(rem - Mat2::Identity() - corr));
}

std::pair<cplx, cplx> h1_offdiag_entries(const KernelParams& p,
                                         const OrthoData& ortho, int k,
                                         double r0, int levels)
{
    auto polys = monic_polys(p, std::max(k, 1));
    // orthogonality kills the moments below k, so
    //   zeta^{k+1} C_k(zeta) = zeta * (1/2pi i) int pi_k(z) z^k w(z)/(z-zeta) dz
    // exactly; the right side has no large-zeta cancellation.
    MonicPoly shifted;
    shifted.degree = 2 * k;
    shifted.coeffs.assign(2 * k + 1, cplx(0.0));
    for (int j = 0; j <= k; ++j) shifted.coeffs[j + k] = polys[k].coeffs[j];
    std::vector<cplx> e12(levels), e21(levels);
    for (int l = 0; l < levels; ++l) {
        double r = r0 * std::pow(2.0, l);
        cplx zeta(0.0, r);
        e12[l] = zeta * cauchy_transform(p, shifted, zeta);
        if (k >= 1) {
            cplx cprime = 1.0 / ortho.gamma_k[k - 1];
            e21[l] = cprime * polys[k - 1].eval(zeta) *
                     std::pow(zeta, cplx(1.0 - double(k)));
        } else {
            e21[l] = 0.0;
        }
    }
    // Richardson in 1/r (factor-2 ladder)
    for (int m = 1; m < levels; ++m)
        for (int l = levels - 1; l >= m; --l) {
            double w = std::pow(2.0, m);
            e12[l] = (w * e12[l] - e12[l - 1]) / (w - 1.0);
            e21[l] = (w * e21[l] - e21[l - 1]) / (w - 1.0);
        }
    return {e12[levels - 1], e21[levels - 1]};
}

JumpReport check_e_analyticity(Disc which, const RHConfig& cfg, int npts)
{
    auto f = [&](cplx z) { return e_prefactor(which, z, cfg); };
    JumpReport rep;
    rep.contour = which == Disc::M1 ? "E(-1) cut" : which == Disc::P1 ? "E(1) cut"
                                                                      : "E(0) cuts";
    double worst = 0.0;
    int total = 0;
    const double d = cfg.delta;
    auto run_segment = [&](double a, double b, bool vertical) {
        for (int i = 0; i < npts; ++i) {
            double x = a + (b - a) * (i + 0.5) / npts;
            cplx z0 = vertical ? cplx(0.0, -x) : cplx(x, 0.0);
            cplx nplus = vertical ? cplx(1.0, 0.0) : I1;
            double r = jump_residual(f, z0, nplus, Mat2::Identity(), 1e-6);
            worst = std::max(worst, r);
            ++total;
        }
    };
    if (which == Disc::M1) {
        run_segment(-1.0 - d + 0.03, -1.03, false);
        run_segment(-0.97, -1.0 + d - 0.03, false);
    } else if (which == Disc::P1) {
        run_segment(1.0 - d + 0.03, 0.97, false);
        run_segment(1.03, 1.0 + d - 0.03, false);
    } else {
        run_segment(-d + 0.02, -0.02, false);
        run_segment(0.02, d - 0.02, false);
        run_segment(0.02, d - 0.02, true); // Sigma_4 piece
    }
    rep.samples = total;
    rep.max_residual = worst;
    return rep;
}

JumpReport check_local_jump_m1(int contour, const RHConfig& cfg,
                               const OrthoData& ortho, int npts)
{
    auto f = [&](cplx z) { return local_parametrix(Disc::M1, z, cfg, ortho); };
    JumpReport rep;
    rep.samples = npts;
    double worst_hi = 0.0, worst_lo = 0.0;
    const double d = cfg.delta;
    for (int i = 0; i < npts; ++i) {
        double u = (i + 0.5) / npts;
        cplx z0, nplus;
        Mat2 jexp;
        if (contour == 7) {
            double x = -1.0 + 0.05 + (d - 0.1) * u;
            z0 = cplx(x, 0.0);
            nplus = I1;
            jexp = jump_JA_interval(7, x, cfg, 1e-5);
            // analytic-branch twist of the constant entries, cf. Sigma7
            cplx tw = std::exp(2.0 * PI * I1 * cfg.mu);
            jexp(0, 1) *= tw;
            jexp(1, 0) /= tw;
            rep.contour = "P(-1) on Sigma7";
        } else if (contour == 2) {
            // deformed ray arg(z+1) = 2pi/3, oriented toward -1: + side below
            double r = 0.05 + (d - 0.1) * u;
            z0 = -1.0 + r * std::exp(I1 * 2.0 * PI / 3.0);
            nplus = std::exp(I1 * (2.0 * PI / 3.0 - 0.5 * PI));
            jexp = jump_JA_ray(2, z0, cfg);
            rep.contour = "P(-1) on deformed Sigma2";
        } else if (contour == 3) {
            double r = 0.05 + (d - 0.1) * u;
            z0 = -1.0 + r * std::exp(-I1 * 2.0 * PI / 3.0);
            nplus = std::exp(I1 * (-2.0 * PI / 3.0 - 0.5 * PI));
            jexp = jump_JA_ray(3, z0, cfg);
            rep.contour = "P(-1) on deformed Sigma3";
        } else {
            throw std::invalid_argument("check_local_jump_m1: contour must be 2, 3 or 7");
        }
        // the Bessel argument |t|^2 f(z) steepens z-derivatives, so the
        // ray checks need smaller offsets than the interval check
        double e_hi = (contour == 7) ? 1e-5 : 3e-6;
        double e_lo = (contour == 7) ? 1e-6 : 1e-6;
        double rh = jump_residual(f, z0, nplus, jexp, e_hi);
        double rl = jump_residual(f, z0, nplus, jexp, e_lo);
        worst_hi = std::max(worst_hi, rh);
        worst_lo = std::max(worst_lo, rl);
    }
    rep.max_residual = std::max(worst_hi, worst_lo);
    rep.falls_with_eps = worst_lo <= 2.0 * worst_hi + 1e-14;
    return rep;
}

double matching_norm_m1(const RHConfig& cfg, const OrthoData& ortho, int nsamples)
{
    double worst = 0.0;
    for (int i = 0; i < nsamples; ++i) {
        double th = -PI + 2.0 * PI * (i + 0.5) / nsamples;
        // keep away from the local jump rays {0, +-2pi/3, pi}
        for (double bad : {0.0, 2.0 * PI / 3.0, -2.0 * PI / 3.0, PI, -PI})
            if (std::abs(th - bad) < 0.12) th += 0.17;
        cplx z = -1.0 + cfg.delta * std::exp(I1 * th);
        Mat2 dev = local_parametrix(Disc::M1, z, cfg, ortho) *
                       p_infinity(z, cfg).inverse() -
                   Mat2::Identity();
        worst = std::max(worst, mat_norm(dev));
    }
    return worst;
}

} // namespace chgdet
