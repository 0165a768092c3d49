#ifndef CHGDET_ASYMPTOTICS_HPP
#define CHGDET_ASYMPTOTICS_HPP

#include "chgdet/fredholm.hpp"
#include "chgdet/orthopoly.hpp"

#include <vector>

namespace chgdet {

enum class AsyRegion { SuperExp, ExpRegion, Gamma1 };

// A closed-form asymptotic prediction split into its terms; total_log is
// the sum of everything (log of the predicted determinant).
struct AsyBreakdown {
    double quadratic = 0.0; // -s^2/2
    double linear = 0.0;    // 2 alpha s  (or the exp-region linear terms)
    double log_term = 0.0;  // coefficient * ln s terms
    double constant = 0.0;  // Barnes-G constant
    std::vector<cplx> product_terms; // ln(1 + c_k), k = 0..p-1
    double total_log = 0.0;
    AsyRegion region = AsyRegion::Gamma1;

    double resum() const; // recompute total from the fields
};

// nu = -ln(1-gamma) and back; gamma = 1 <-> nu = +inf.
double nu_from_gamma(double gamma);
double gamma_from_nu(double nu);

// p(chi): 1 for chi < 1/2, floor(chi + 3/2) for chi >= 1/2.
int p_of_chi(double chi);

// super-exponential region test: nu >= 2s - (chi + alpha) ln(4s).
bool region_check(double s, double nu, double chi, double alpha);

// Main asymptotics with the finite Fisher-Hartwig product,
//   ln det = -s^2/2 + 2 a s + (-1/4 - a^2 + b^2) ln s + ln C(a,b)
//            + sum_{k<p} ln(1 + h_k e^{pi i b} / (2 pi) (4s)^{-1/2-k-a} e^{2s-nu}).
// Requires region_check to hold and h_0..h_{p-1} in ortho.
AsyBreakdown asy_theorem(const GapInstance& inst, double chi, const OrthoData& ortho);

// gamma = 1 limit (empty product).
AsyBreakdown asy_gamma1(const GapInstance& inst);

// fixed gamma in [0,1): exponential region,
//   -2 nu s/pi + nu^2/(2 pi^2) ln 4s + a nu + 2 Re ln G(1 + i nu/2pi) + 2 Re ln G(1 - i nu/2pi).
AsyBreakdown asy_exp_region(const GapInstance& inst);

// sine specialization of the gamma = 1 formula:
//   -s^2/2 - (1/4) ln s + (1/12) ln 2 + 3 zeta'(-1).
double asy_sine_gamma1(double s);

// eigenvalue prediction 1 - lambda_k = 2 pi / (h_k e^{pi i beta}) (4s)^{1/2+k+a} e^{-2s}
double eig_asy(int k, const GapInstance& inst, const OrthoData& ortho);
// sine closed form sqrt(pi) 2^{3k+2} / k! s^{1/2+k} e^{-2s}
double eig_asy_sine(int k, double s);

// the Barnes constant ln[ sqrt(pi) G^2(1/2) G(1+2a) / (2^{2a^2} G(1+a+b) G(1+a-b)) ]
double barnes_constant(const KernelParams& p);

} // namespace chgdet

#endif
