#include "chgdet/specfun.hpp"
#include "qcomplex.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace chgdet {

using detail::qcplx;
using detail::qreal;

namespace {

constexpr double LOG_2PI = 1.83787706640934548356065947281123527;

bool near_nonpositive_integer(cplx z, double tol = 1e-13)
{
    if (z.imag() != 0.0 && std::abs(z.imag()) > tol) return false;
    double r = z.real();
    if (r > 0.5) return false;
    return std::abs(r - std::round(r)) <= tol;
}

// Lanczos approximation, g = 607/128, 15 coefficients (Godfrey's set);
// ~1e-15 relative for Re z >= 1/2.
constexpr double LANCZOS_G = 4.7421875;
constexpr double LANCZOS_C[15] = {
    0.99999999999999709182,
    57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,     -0.49191381609762019978,
    0.33994649984811888699e-4, 0.46523628927048575665e-4,
    -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,
    -0.16431810653676389022e-3, 0.84418223983852743293e-4,
    -0.26190838401581408670e-4, 0.36899182659531622704e-5,
};

// log(sin(pi z)) without overflow for large |Im z|; branch chosen so the
// reflection formula stays on the analytic log-Gamma branch for
// |Re z| < 1 (all reflection uses in this project live there).
cplx log_sin_pi(cplx z)
{
    const cplx ipi(0.0, PI);
    if (z.imag() > 1.0) {
        // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})
        cplx w = std::exp(cplx(0.0, 2.0 * PI) * z);
        return -ipi * z + cplx(-std::log(2.0), 0.5 * PI) + std::log(1.0 - w);
    }
    if (z.imag() < -1.0) {
        // sin(pi z) = -(i/2) e^{i pi z} (1 - e^{-2 i pi z})
        cplx w = std::exp(cplx(0.0, -2.0 * PI) * z);
        return ipi * z + cplx(-std::log(2.0), -0.5 * PI) + std::log(1.0 - w);
    }
    return std::log(std::sin(PI * z));
}

} // namespace

cplx log_gamma(cplx z)
{
    if (near_nonpositive_integer(z))
        throw std::domain_error("log_gamma: pole at non-positive integer z = " +
                                std::to_string(z.real()));
    if (z.real() < 0.5) {
        // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return std::log(PI) - log_sin_pi(z) - log_gamma(1.0 - z);
    }
    cplx zm1 = z - 1.0;
    cplx s = LANCZOS_C[0];
    for (int k = 1; k < 15; ++k) s += LANCZOS_C[k] / (zm1 + double(k));
    cplx base = zm1 + LANCZOS_G + 0.5;
    return 0.5 * LOG_2PI + (zm1 + 0.5) * std::log(base) - base + std::log(s);
}

cplx barnes_g_log(cplx z)
{
    if (near_nonpositive_integer(z))
        throw std::domain_error("barnes_g_log: G vanishes at non-positive integers");

    // lift into the asymptotic regime: ln G(z) = ln G(z+m) - sum ln Gamma(z+j)
    cplx shift = 0.0;
    int m = 0;
    while (z.real() + m < 30.0) {
        shift += log_gamma(z + double(m));
        ++m;
    }
    cplx w = z + double(m) - 1.0; // ln G(1+w)

    // ln G(1+w) = w^2/2 ln w - 3w^2/4 + w/2 ln 2pi - (1/12) ln w + zeta'(-1)
    //             + sum_k B_{2k+2} / (2k (2k+2) w^{2k})
    static const double B2K2[9] = {
        -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
        7.0 / 6,   -3617.0 / 510, 43867.0 / 798, -174611.0 / 330};
    cplx lw = std::log(w);
    cplx g = 0.5 * w * w * lw - 0.75 * w * w + 0.5 * w * LOG_2PI -
             lw / 12.0 + constants().zeta_prime_minus1;
    cplx w2 = w * w, p = w2;
    for (int k = 1; k <= 9; ++k) {
        g += B2K2[k - 1] / (2.0 * k * (2.0 * k + 2.0)) / p;
        p *= w2;
    }
    return g - shift;
}

double kummer_series_cutoff() { return 80.0; }

cplx kummer_m(cplx a, cplx b, cplx z)
{
    if (near_nonpositive_integer(b))
        throw std::domain_error("kummer_m: b must not be a non-positive integer");
    if (std::abs(z) > kummer_series_cutoff())
        throw std::domain_error("kummer_m: |z| exceeds the series cutoff");

    const int budget = 2000;
    qcplx qa(a), qb(b), qz(z);
    qcplx term(1.0), sum(1.0);
    qreal zmag = detail::qmag(qz);
    for (int k = 0; k < budget; ++k) {
        term = term * ((qa + qreal(k)) / (qb + qreal(k))) * qz / qreal(k + 1);
        sum = sum + term;
        if (qreal(k + 1) > zmag && detail::qmag(term) <= 1e-36 * detail::qmag(sum))
            return sum.to_cplx();
    }
    throw std::runtime_error("kummer_m: series did not converge within term budget");
}

cplx kummer_m_deriv(cplx a, cplx b, cplx z)
{
    return (a / b) * kummer_m(a + 1.0, b + 1.0, z);
}

namespace {

struct I0K0 {
    qcplx i0, i1, k0, k1; // K0' = -K1, I0' = I1
};

// ascending series, quad accumulation; |z| <= ~18
I0K0 bessel_series(cplx zc)
{
    qcplx z(zc);
    qcplx q = z * z / qreal(4.0);

    qcplx i0(1.0);   // sum (z^2/4)^k / k!^2
    qcplx i1s(1.0);  // sum (z^2/4)^k / (k! (k+1)!)
    qcplx s0(0.0);   // sum H_k (z^2/4)^k / k!^2
    qcplx s1(1.0);   // sum (H_k + H_{k+1}) (z^2/4)^k / (k!(k+1)!), k=0 term = 1
    qreal hk = 0.0;
    qcplx tk(1.0);
    for (int k = 1; k <= 120; ++k) {
        tk = tk * q / qreal(k * k);
        hk += qreal(1.0) / qreal(k);
        i0 = i0 + tk;
        s0 = s0 + hk * tk;
        qcplx tk1 = tk / qreal(k + 1);
        i1s = i1s + tk1;
        s1 = s1 + (hk + hk + qreal(1.0) / qreal(k + 1)) * tk1;
        if (qreal(k) > detail::qmag(z) &&
            detail::qmag(tk) < 1e-36 * (detail::qmag(i0) + qreal(1e-30)))
            break;
    }
    // I0 = i0;  I1 = (z/2) i1s
    // K0 = -(ln(z/2)+gamma) I0 + s0
    // K1 = 1/z + (ln(z/2)+gamma) I1 - (z/4)(s1 + 1/(0+1)... )
    // Use: K1(z) = 1/z + (ln(z/2)+gamma) I1(z) - (z/4) sum_{k>=0} (H_k + H_{k+1}) q^k/(k!(k+1)!)
    qcplx lf = detail::qclog(z / qreal(2.0)) + qcplx(detail::QEULER_GAMMA);
    I0K0 r;
    r.i0 = i0;
    r.i1 = (z / qreal(2.0)) * i1s;
    r.k0 = qcplx(0.0) - lf * i0 + s0;
    r.k1 = qcplx(1.0) / z + lf * r.i1 - (z / qreal(4.0)) * s1;
    return r;
}

// large-|z| asymptotics; coefficient recurrence c_k = c_{k-1}(mu-(2k-1)^2)/(8k z)
cplx asym_sum(cplx z, double mu, bool alternate)
{
    cplx sum = 1.0, term = 1.0;
    double prev = 1e300;
    for (int k = 1; k <= 40; ++k) {
        double num = mu - (2.0 * k - 1.0) * (2.0 * k - 1.0);
        term *= num / (8.0 * k) / z;
        if (alternate) term = -term;
        double m = std::abs(term);
        if (m > prev) break; // divergent tail reached
        sum += term;
        prev = m;
        if (m < 1e-18) break;
    }
    return sum;
}

I0K0 bessel_asymptotic(cplx z)
{
    // K_nu(z) ~ sqrt(pi/2z) e^{-z} sum c_k(mu)/z^k,        mu = 4 nu^2
    // I_nu(z) ~ e^z/sqrt(2 pi z) sum (-1)^k c_k/z^k
    //           + e^{+-(nu+1/2) pi i} e^{-z}/sqrt(2 pi z) sum c_k/z^k
    cplx sq = std::sqrt(z);
    cplx ez = std::exp(z), emz = std::exp(-z);
    cplx kpre = std::sqrt(PI / 2.0) / sq * emz;
    cplx ipre = ez / (std::sqrt(2.0 * PI) * sq);
    cplx irec = emz / (std::sqrt(2.0 * PI) * sq);
    cplx u0 = (z.imag() >= 0.0) ? cplx(0.0, 1.0) : cplx(0.0, -1.0);  // e^{+-pi i/2}
    cplx u1 = (z.imag() >= 0.0) ? cplx(0.0, -1.0) : cplx(0.0, 1.0);  // e^{+-3pi i/2}

    I0K0 r;
    r.k0 = qcplx(kpre * asym_sum(z, 0.0, false));
    r.k1 = qcplx(kpre * asym_sum(z, 4.0, false));
    r.i0 = qcplx(ipre * asym_sum(z, 0.0, true) + u0 * irec * asym_sum(z, 0.0, false));
    r.i1 = qcplx(ipre * asym_sum(z, 4.0, true) + u1 * irec * asym_sum(z, 4.0, false));
    return r;
}

I0K0 bessel_all(cplx z)
{
    if (z.imag() == 0.0 && z.real() <= 0.0)
        throw std::domain_error("bessel_modified: argument on the branch cut (-inf,0]");
    return std::abs(z) <= 18.0 ? bessel_series(z) : bessel_asymptotic(z);
}

} // namespace

cplx bessel_modified(BesselKind kind, cplx z)
{
    I0K0 r = bessel_all(z);
    switch (kind) {
    case BesselKind::I0: return r.i0.to_cplx();
    case BesselKind::K0: return r.k0.to_cplx();
    case BesselKind::I0prime: return r.i1.to_cplx();
    case BesselKind::K0prime: return (qcplx(0.0) - r.k1).to_cplx();
    }
    throw std::logic_error("bessel_modified: bad kind");
}

double bessel_j(double nu, double x)
{
    if (!(x > 0.0)) throw std::domain_error("bessel_j: requires x > 0");
    if (!(nu > -1.0)) throw std::domain_error("bessel_j: requires nu > -1");
    // J_nu(x) = (x/2)^nu / Gamma(nu+1) * sum_m (-1)^m (x^2/4)^m / (m! (nu+1)_m)
    qreal q = qreal(x) * qreal(x) / qreal(4.0);
    qreal term = 1.0, sum = 1.0;
    for (int m = 1; m <= 200; ++m) {
        term = -term * q / (qreal(m) * (qreal(nu) + qreal(m)));
        sum += term;
        if (qreal(m) > qreal(x) && detail::qabs(term) <= 1e-36 * (detail::qabs(sum) + qreal(1e-30)))
            break;
    }
    double pre = std::exp(nu * std::log(0.5 * x) - std::lgamma(nu + 1.0));
    return pre * static_cast<double>(sum);
}

double bessel_j_deriv(double nu, double x)
{
    // J_nu' = J_{nu-1} - (nu/x) J_nu, with J_{nu-1} = 2nu/x J_nu - J_{nu+1}
    // valid for nu-1 > -1; otherwise use the second form directly.
    if (nu - 1.0 > -1.0)
        return bessel_j(nu - 1.0, x) - (nu / x) * bessel_j(nu, x);
    return (nu / x) * bessel_j(nu, x) - bessel_j(nu + 1.0, x);
}

Constants constants()
{
    // zeta'(-1) = 1/12 - ln A;  12 ln A = gamma + ln 2pi - 6 zeta'(2)/pi^2
    return {-0.16542114370045092921, 1.77245385090551602730};
}

} // namespace chgdet
