#ifndef CHGDET_QCOMPLEX_HPP
#define CHGDET_QCOMPLEX_HPP

// Minimal quad-precision complex arithmetic for series accumulation.
// Alternating hypergeometric/Bessel series lose up to ~10 digits to
// cancellation at the largest arguments the kernels need; summing in
// __float128 keeps the double-precision result fully accurate.

#include <complex>

#if defined(__SIZEOF_FLOAT128__) && !defined(CHGDET_NO_FLOAT128)
#include <quadmath.h>
namespace chgdet::detail {
using qreal = __float128;
inline qreal qabs(qreal x) { return x < 0 ? -x : x; }
inline qreal qlog(qreal x) { return logq(x); }
inline qreal qatan2(qreal y, qreal x) { return atan2q(y, x); }
inline qreal qsqrt(qreal x) { return sqrtq(x); }
constexpr qreal QEULER_GAMMA = 0.57721566490153286060651209008240243104Q;
}
#else
#include <cmath>
namespace chgdet::detail {
using qreal = long double;
inline qreal qabs(qreal x) { return x < 0 ? -x : x; }
inline qreal qlog(qreal x) { return std::log(x); }
inline qreal qatan2(qreal y, qreal x) { return std::atan2(y, x); }
inline qreal qsqrt(qreal x) { return std::sqrt(x); }
constexpr qreal QEULER_GAMMA = 0.577215664901532860606512090082402431L;
}
#endif

namespace chgdet::detail {

struct qcplx {
    qreal re = 0, im = 0;

    qcplx() = default;
    qcplx(qreal r) : re(r) {}
    qcplx(qreal r, qreal i) : re(r), im(i) {}
    qcplx(std::complex<double> z) : re(z.real()), im(z.imag()) {}

    std::complex<double> to_cplx() const
    {
        return {static_cast<double>(re), static_cast<double>(im)};
    }
};

inline qcplx operator+(qcplx a, qcplx b) { return {a.re + b.re, a.im + b.im}; }
inline qcplx operator-(qcplx a, qcplx b) { return {a.re - b.re, a.im - b.im}; }
inline qcplx operator*(qcplx a, qcplx b)
{
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline qcplx operator*(qreal s, qcplx a) { return {s * a.re, s * a.im}; }
inline qcplx operator/(qcplx a, qcplx b)
{
    qreal d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline qcplx operator/(qcplx a, qreal s) { return {a.re / s, a.im / s}; }

// cheap magnitude proxy, good enough for convergence tests
inline qreal qmag(qcplx a) { return qabs(a.re) + qabs(a.im); }

// principal log, needed by the K0 series where the log factor must carry
// quad precision through the I0-S cancellation
inline qcplx qclog(qcplx z)
{
    qreal m2 = z.re * z.re + z.im * z.im;
    return {qreal(0.5) * qlog(m2), qatan2(z.im, z.re)};
}

} // namespace chgdet::detail

#endif
