#ifndef FSORELAY_NUMERICS_HPP
#define FSORELAY_NUMERICS_HPP

#include <cmath>
#include <functional>
#include <limits>

#include "fsorelay/errors.hpp"

namespace fso::num {

/// Brent root refinement on a bracketing interval [a, b] with f(a)*f(b) <= 0.
/// Returns the abscissa; |f| at the result is limited by the bracket width
/// tolerance xtol plus floating-point noise of f itself.
double brent_root(const std::function<double(double)>& f, double a, double b,
                  double xtol = 1e-14, int max_iter = 200);

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol = 1e-9, int max_depth = 50);

/// Golden-section minimization of a unimodal f on [a, b].
double golden_minimize(const std::function<double(double)>& f, double a, double b,
                       double xtol = 1e-10);

inline bool nearly_equal(double a, double b, double rel, double abs = 0.0) {
    return std::fabs(a - b) <= abs + rel * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace fso::num

#endif
