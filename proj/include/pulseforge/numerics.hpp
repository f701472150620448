#pragma once

#include <functional>

namespace pulseforge::num {

// Adaptive composite Simpson with Richardson error control.
// Absolute tolerance; degenerate intervals integrate to zero.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double abs_tol, int max_depth = 40);

// Bracketed Brent root finder. Requires f(lo) and f(hi) of opposite sign
// (either may be zero). Converges to |dx| < xtol.
double brent_root(const std::function<double(double)>& f, double lo, double hi,
                  double xtol, int max_iter = 200);

// Location of the minimum of f on [lo, hi] by golden-section search.
double golden_min(const std::function<double(double)>& f, double lo, double hi,
                  double xtol);

}  // namespace pulseforge::num
