// Python bindings for the main operations: kernel evaluation, Nystrom
// determinants and spectra, Fisher-Hartwig constants, the closed-form
// asymptotics, and the Riemann-Hilbert residual checks.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "chgdet/asymptotics.hpp"
#include "chgdet/fredholm.hpp"
#include "chgdet/rhverify.hpp"

namespace py = pybind11;
using namespace chgdet;

namespace {

KernelKind kind_of(const std::string& name, double alpha, double beta_im)
{
    if (name == "sine") return KernelKind::sine();
    if (name == "bessel1") return KernelKind::bessel1(alpha);
    if (name == "chg") return KernelKind::chg(KernelParams(alpha, beta_im));
    throw std::invalid_argument("kernel must be sine|bessel1|chg");
}

QuadMode mode_of(const std::string& name)
{
    if (name == "legendre") return QuadMode::SplitLegendre;
    if (name == "jacobi") return QuadMode::SplitJacobi;
    throw std::invalid_argument("mode must be legendre|jacobi");
}

GapInstance instance_of(const std::string& kernel, double alpha, double beta_im,
                        double s, double gamma)
{
    return GapInstance(kind_of(kernel, alpha, beta_im), s,
                       Deformation::from_gamma(gamma));
}

py::dict breakdown_dict(const AsyBreakdown& b)
{
    py::list terms;
    for (const cplx& t : b.product_terms) terms.append(t);
    py::dict d;
    d["quadratic"] = b.quadratic;
    d["linear"] = b.linear;
    d["log_term"] = b.log_term;
    d["constant"] = b.constant;
    d["product_terms"] = terms;
    d["total_log"] = b.total_log;
    return d;
}

} // namespace

PYBIND11_MODULE(_chgdet, m)
{
    m.doc() = "deformed Fredholm determinants of the confluent hypergeometric "
              "kernel family";

    m.def("sine_kernel", &sine_kernel, py::arg("x"), py::arg("y"));
    m.def(
        "chg_kernel",
        [](double alpha, double beta_im, double x, double y) {
            return chg_kernel(KernelParams(alpha, beta_im), x, y);
        },
        py::arg("alpha"), py::arg("beta_im"), py::arg("x"), py::arg("y"));
    m.def(
        "chg_kernel_diag",
        [](double alpha, double beta_im, double x) {
            return chg_kernel_diag(KernelParams(alpha, beta_im), x);
        },
        py::arg("alpha"), py::arg("beta_im"), py::arg("x"));
    m.def("bessel1_kernel", &bessel1_kernel, py::arg("alpha"), py::arg("x"),
          py::arg("y"));

    m.def(
        "log_det",
        [](const std::string& kernel, double alpha, double beta_im, double s,
           double gamma, int n, const std::string& mode) {
            GapInstance inst = instance_of(kernel, alpha, beta_im, s, gamma);
            return log_det(discretize(inst, n, mode_of(mode)), inst.def);
        },
        py::arg("kernel"), py::arg("alpha"), py::arg("beta_im"), py::arg("s"),
        py::arg("gamma"), py::arg("n") = 400, py::arg("mode") = "legendre");

    m.def(
        "spectrum",
        [](const std::string& kernel, double alpha, double beta_im, double s,
           int k_max, int n, const std::string& mode) {
            GapInstance inst = instance_of(kernel, alpha, beta_im, s, 1.0);
            SpectrumResult sp =
                spectrum(discretize(inst, n, mode_of(mode)), k_max);
            return py::make_tuple(sp.lambda, sp.one_minus_lambda);
        },
        py::arg("kernel"), py::arg("alpha"), py::arg("beta_im"), py::arg("s"),
        py::arg("k_max"), py::arg("n") = 400, py::arg("mode") = "legendre");

    m.def(
        "h_constants",
        [](double alpha, double beta_im, int k_max) {
            OrthoData d = hankel_dets(KernelParams(alpha, beta_im), k_max);
            return py::make_tuple(d.h, d.gamma_k);
        },
        py::arg("alpha"), py::arg("beta_im"), py::arg("k_max"));
    m.def(
        "moment",
        [](int j, double alpha, double beta_im) {
            return moment(j, KernelParams(alpha, beta_im));
        },
        py::arg("j"), py::arg("alpha"), py::arg("beta_im"));

    m.def("nu_from_gamma", &nu_from_gamma, py::arg("gamma"));
    m.def("gamma_from_nu", &gamma_from_nu, py::arg("nu"));
    m.def("p_of_chi", &p_of_chi, py::arg("chi"));
    m.def("region_check", &region_check, py::arg("s"), py::arg("nu"),
          py::arg("chi"), py::arg("alpha"));
    m.def("asy_sine_gamma1", &asy_sine_gamma1, py::arg("s"));
    m.def(
        "asy_gamma1",
        [](const std::string& kernel, double alpha, double beta_im, double s) {
            return breakdown_dict(
                asy_gamma1(instance_of(kernel, alpha, beta_im, s, 1.0)));
        },
        py::arg("kernel"), py::arg("alpha"), py::arg("beta_im"), py::arg("s"));
    m.def(
        "asy_exp_region",
        [](const std::string& kernel, double alpha, double beta_im, double s,
           double gamma) {
            return breakdown_dict(
                asy_exp_region(instance_of(kernel, alpha, beta_im, s, gamma)));
        },
        py::arg("kernel"), py::arg("alpha"), py::arg("beta_im"), py::arg("s"),
        py::arg("gamma"));
    m.def(
        "asy_theorem",
        [](const std::string& kernel, double alpha, double beta_im, double s,
           double nu, double chi) {
            GapInstance inst(kind_of(kernel, alpha, beta_im), s,
                             Deformation::from_nu(nu));
            OrthoData od =
                hankel_dets(KernelParams(alpha, beta_im), p_of_chi(chi));
            return breakdown_dict(asy_theorem(inst, chi, od));
        },
        py::arg("kernel"), py::arg("alpha"), py::arg("beta_im"), py::arg("s"),
        py::arg("nu"), py::arg("chi"));
    m.def(
        "eig_asy",
        [](const std::string& kernel, double alpha, double beta_im, double s,
           int k) {
            GapInstance inst = instance_of(kernel, alpha, beta_im, s, 1.0);
            OrthoData od = hankel_dets(KernelParams(alpha, beta_im), k);
            return eig_asy(k, inst, od);
        },
        py::arg("kernel"), py::arg("alpha"), py::arg("beta_im"), py::arg("s"),
        py::arg("k"));
    m.def("eig_asy_sine", &eig_asy_sine, py::arg("k"), py::arg("s"));

    m.def(
        "rh_pinf_jump_residual",
        [](double alpha, double beta_im, double s, double chi, int sigma) {
            RHConfig cfg(KernelParams(alpha, beta_im), s, chi);
            return check_pinf_jump(sigma, cfg).max_residual;
        },
        py::arg("alpha"), py::arg("beta_im"), py::arg("s"), py::arg("chi"),
        py::arg("sigma"));
    m.def(
        "rh_bessel_jump_residual",
        [](int ray) { return check_bessel_jump(ray).max_residual; },
        py::arg("ray"));
}
