#include "csurf/elliptic.hpp"

#include <cmath>
#include <functional>

#include "csurf/rational.hpp"

namespace csurf::elliptic {

namespace {

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    double flm = f(lm), frm = f(rm);
    double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

DemoResult elliptic_demo(int digits) {
    if (digits < 1 || digits > 12) throw DomainError("digits-out-of-range", "expected 1..12");
    double tol = std::pow(10.0, -(digits + 2));
    // x = 1 + u^2 turns the integrand into 2 / sqrt(u^4 + 3u^2 + 3) on [0, 1];
    // the tail x >= 2 becomes, with u = 1/s, 2 / sqrt(3s^4 + 3s^2 + 1) on [0, 1].
    auto head = [](double u) { return 2.0 / std::sqrt(((u * u + 3.0) * u * u) + 3.0); };
    auto tail = [](double s) { return 2.0 / std::sqrt(((3.0 * s * s + 3.0) * s * s) + 1.0); };
    DemoResult r;
    r.quadrature = integrate(head, 0.0, 1.0, tol / 2.0) + integrate(tail, 0.0, 1.0, tol / 2.0);
    double g = std::tgamma(1.0 / 3.0);
    r.gamma_product = g * g * g / (std::pow(2.0, 4.0 / 3.0) * 4.0 * std::atan(1.0));
    r.difference = std::fabs(r.quadrature - r.gamma_product);
    return r;
}

}  // namespace csurf::elliptic
