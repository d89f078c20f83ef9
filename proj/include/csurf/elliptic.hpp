#pragma once

#include <string>

namespace csurf::elliptic {

// Two independent evaluations of lambda_2 = integral_1^inf dx / sqrt(x^3 - 1):
// substitution-regularized adaptive quadrature on one side, the Gamma-function
// product Gamma(1/3)^3 / (2^(4/3) pi) on the other.
struct DemoResult {
    double quadrature = 0.0;
    double gamma_product = 0.0;
    double difference = 0.0;  // |quadrature - gamma_product|
};

// digits in [1, 12]; the quadrature tolerance is 10^-(digits+2).
DemoResult elliptic_demo(int digits);

}  // namespace csurf::elliptic
