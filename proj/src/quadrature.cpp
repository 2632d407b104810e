#include "fringestat/quadrature.hpp"

#include <cmath>
#include <vector>

namespace fringestat {

namespace {

struct Panel {
    double a, b;
    double fa, fm, fb;
    double coarse;
    double tol;
    int depth;
};

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<double(double)>& f,
                                  double a, double b, double abs_tol, int max_depth) {
    QuadratureResult res;
    const double m0 = 0.5 * (a + b);
    const double fa = f(a), fm = f(m0), fb = f(b);
    res.evaluations = 3;

    std::vector<Panel> stack;
    stack.push_back({a, b, fa, fm, fb, simpson(a, b, fa, fm, fb), abs_tol, 0});
    while (!stack.empty()) {
        Panel p = stack.back();
        stack.pop_back();
        const double m = 0.5 * (p.a + p.b);
        const double lm = 0.5 * (p.a + m);
        const double rm = 0.5 * (m + p.b);
        const double flm = f(lm), frm = f(rm);
        res.evaluations += 2;
        const double sl = simpson(p.a, m, p.fa, flm, p.fm);
        const double sr = simpson(m, p.b, p.fm, frm, p.fb);
        const double diff = sl + sr - p.coarse;
        if (std::fabs(diff) <= 15.0 * p.tol || p.depth >= max_depth) {
            // One Richardson step: the fine estimate plus diff/15 is the
            // extrapolated value, and |diff|/15 bounds its defect.
            res.value += sl + sr + diff / 15.0;
            res.abs_error_estimate += std::fabs(diff) / 15.0;
            if (p.depth >= max_depth && std::fabs(diff) > 15.0 * p.tol) res.converged = false;
        } else {
            stack.push_back({p.a, m, p.fa, flm, p.fm, sl, 0.5 * p.tol, p.depth + 1});
            stack.push_back({m, p.b, p.fm, frm, p.fb, sr, 0.5 * p.tol, p.depth + 1});
        }
    }
    return res;
}

}  // namespace fringestat
