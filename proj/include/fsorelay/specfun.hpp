#ifndef FSORELAY_SPECFUN_HPP
#define FSORELAY_SPECFUN_HPP

#include "fsorelay/errors.hpp"

namespace fso::specfun {

/// Gamma function for real x, x not a non-positive integer.
/// Lanczos approximation with reflection; >= 12 significant digits on
/// x in [1e-3, 170]. Throws DomainError at poles, OverflowError past ~171.6.
double gamma(double x);

/// ln|Gamma(x)| with the sign of Gamma(x) returned through `sign` (+1/-1).
/// Valid for any real x that is not a non-positive integer.
double lgamma_signed(double x, int& sign);

/// Error function; odd, monotone, |erf| <= 1.
double erf(double x);

/// Modified Bessel function of the second kind K_nu(x), x > 0, real order.
/// Evaluated from the integral over the real line of exp(-x cosh t) cosh(nu t)
/// by step-halved trapezoid sums (spectrally accurate for this integrand).
double bessel_k(double nu, double x);

/// Argument set of G^{3,0}_{1,3}[x | zeta2; zeta2-1, alpha-1, beta-1],
/// the kernel of the continuous part of the total-gain PDF.
struct MeijerPdfArgs {
    double x;      ///< scaled gain, x >= 0
    double alpha;  ///< large-scale turbulence parameter, > 0
    double beta;   ///< small-scale turbulence parameter, > 0
    double zeta2;  ///< squared equivalent-beam-width to displacement ratio, > 0
};

/// Argument set of G^{3,1}_{2,4}[x | 1, zeta2+1; zeta2, alpha, beta, 0],
/// the kernel of the gain CDF.
struct MeijerCdfArgs {
    double x;
    double alpha;
    double beta;
    double zeta2;
};

/// True when the parameter triple sits within 1e-6 of a pole collision of the
/// residue series: zeta2-alpha near a non-negative integer, zeta2-beta near a
/// non-negative integer, or alpha-beta near any integer. Such inputs are
/// evaluated by averaging +/-1e-5 perturbations of the colliding parameter.
bool in_perturbation_band(double alpha, double beta, double zeta2);

/// G^{3,0}_{1,3}[x | zeta2; zeta2-1, alpha-1, beta-1] by residue-series
/// summation over the right poles of the Mellin-Barnes integrand.
/// Non-negative for x > 0. Throws EvaluationError if the series fails to
/// converge within the term cap, OverflowError if the value exceeds double range.
double meijer_g_pdf(const MeijerPdfArgs& args);

/// G^{3,1}_{2,4}[x | 1, zeta2+1; zeta2, alpha, beta, 0]; the composition
/// zeta2/(Gamma(alpha) Gamma(beta)) * G is a CDF value in [0, 1],
/// nondecreasing in x.
double meijer_g_cdf(const MeijerCdfArgs& args);

/// Scaled variants: return mantissa m with the true value m * exp(ln_scale).
/// Used by callers that compose the G value with Gamma-function prefactors
/// whose linear-space magnitudes can overflow.
double meijer_g_pdf_scaled(const MeijerPdfArgs& args, double& ln_scale);
double meijer_g_cdf_scaled(const MeijerCdfArgs& args, double& ln_scale);

}  // namespace fso::specfun

#endif
