#pragma once

#include <cstdint>
#include <functional>

namespace fringestat {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::uint64_t evaluations = 0;
    bool converged = true;
};

// Adaptive Simpson with Richardson extrapolation: a panel is accepted when
// |S_fine - S_coarse| <= 15 * local tolerance, and the accepted value gets
// the (S_fine - S_coarse)/15 correction, so the reported error estimate is
// conservative. Iterative with an explicit stack; panels that reach the
// depth limit are accepted with their defect added to the estimate and the
// result marked non-converged.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol,
                                  int max_depth = 60);

}  // namespace fringestat
