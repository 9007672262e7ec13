#include "conint/model_integral.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "conint/special_fn.hpp"

namespace conint {

namespace {
constexpr double kPi = std::numbers::pi;

void check_lambda(double lambda) {
    if (!(lambda > 0.0 && lambda <= 1.0))
        throw std::domain_error("model integral: lambda must lie in (0, 1]");
}
}

IntegralResult model_lhs(const ModelParams& p) {
    check_lambda(p.lambda);
    const double A = p.A;
    const double lam = p.lambda;
    auto f = [A, lam](double psi) {
        // asinh(lam sinh psi); past |psi| ~ 300 sinh would overflow while the
        // exact value is |psi| + ln(lam) to far below double resolution
        double t;
        if (std::fabs(psi) > 300.0)
            t = std::copysign(std::fabs(psi) + std::log(lam), psi);
        else
            t = std::asinh(lam * std::sinh(psi));
        return std::exp(Complex(0.0, A * t));
    };
    return damped_oscillatory(f, OscillatoryDomain::RealLine, p.spec);
}

Complex model_rhs(const ModelParams& p) {
    check_lambda(p.lambda);
    const double A = p.A;
    const double x = 1.0 - p.lambda * p.lambda;

    double t = kPi * A / 2.0;
    double sink = std::fabs(t) < 1e-8 ? 1.0 / (1.0 + t * t / 6.0) : t / std::sinh(t);

    if (x == 0.0) return 0.0;  // lambda = 1
    Complex F = hyp2f1(Complex(1.0, A / 2), Complex(1.0, -A / 2), 2.0, x);
    return x * sink * F;
}

Complex model_asymptotic(const ModelParams& p) {
    check_lambda(p.lambda);
    const double aA = std::fabs(p.A);
    const double lam = p.lambda;
    return std::sqrt(2.0 * kPi) * std::pow(1.0 - lam * lam, 0.25) / std::sqrt(lam * aA) *
           std::exp(-aA * std::asin(lam));
}

}  // namespace conint
