#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "conint/model_integral.hpp"

using namespace conint;

namespace {
double dev(Complex a, Complex b) { return std::abs(a - b); }

QuadratureSpec fine_schedule() {
    QuadratureSpec s;
    s.damping_schedule = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
    s.max_subdivisions = 200000;
    return s;
}
}

TEST_CASE("closed form: prefactor limits and symmetry") {
    ModelParams p;

    p.A = 3.0;
    p.lambda = 1.0;
    CHECK(model_rhs(p) == Complex(0.0));

    // A -> 0 limit at lambda = 0.6 is -ln(0.36)
    p.A = 1e-8;
    p.lambda = 0.6;
    CHECK(dev(model_rhs(p), -std::log(0.36)) < 1e-8);

    // conjugate-pair parameters make the value manifestly real (and positive here)
    p.A = 2.0;
    p.lambda = 0.6;
    Complex v = model_rhs(p);
    CHECK(std::abs(v.imag()) < 1e-13 * std::abs(v));
    CHECK(v.real() > 0.0);

    for (double A : {0.5, 2.0, 7.3}) {
        p.lambda = 0.45;
        p.A = A;
        Complex plus = model_rhs(p);
        p.A = -A;
        Complex minus = model_rhs(p);
        CHECK(dev(plus, minus) < 1e-12 * std::abs(plus));
    }

    p.lambda = 1.5;
    CHECK_THROWS_AS(model_rhs(p), std::domain_error);
    p.lambda = 0.0;
    CHECK_THROWS_AS(model_rhs(p), std::domain_error);
}

TEST_CASE("oscillatory boost integral matches the closed form") {
    ModelParams p;
    p.A = 2.0;
    p.lambda = 0.6;
    auto lhs = model_lhs(p);
    CHECK(lhs.converged());
    Complex rhs = model_rhs(p);
    CHECK(dev(lhs.value, rhs) < 1e-5 * std::abs(rhs));

    // harder corner needs the finer damping schedule
    p.A = 4.0;
    p.lambda = 0.9;
    p.spec = fine_schedule();
    auto lhs2 = model_lhs(p);
    CHECK(lhs2.converged());
    Complex rhs2 = model_rhs(p);
    CHECK(dev(lhs2.value, rhs2) < 1e-5 * std::abs(rhs2));
}

TEST_CASE("pure boost kernel: delta at zero frequency only") {
    ModelParams p;

    // A = 0: the damped values blow up ~ 1/eps and must be reported, not summed
    p.A = 0.0;
    p.lambda = 0.5;
    auto r = model_lhs(p);
    CHECK(r.status == IntegralResult::Status::Diverged);
    CHECK(!r.note.empty());

    // lambda = 1 turns the phase into A psi: away from A = 0 the limit vanishes
    p.A = 3.0;
    p.lambda = 1.0;
    auto z = model_lhs(p);
    CHECK(z.converged());
    CHECK(std::abs(z.value) < 1e-5);
}

TEST_CASE("large-area asymptotic law") {
    ModelParams p;
    p.lambda = 0.5;

    p.A = 15.0;
    double e15 = std::abs(model_rhs(p) / model_asymptotic(p) - 1.0);
    p.A = 30.0;
    double e30 = std::abs(model_rhs(p) / model_asymptotic(p) - 1.0);
    CHECK(e30 < 0.1);
    CHECK(e30 < e15);

    // exponential structure: doubling A multiplies by e^{-A arcsin lambda}/sqrt(2)
    p.A = 10.0;
    Complex a1 = model_asymptotic(p);
    p.A = 20.0;
    Complex a2 = model_asymptotic(p);
    double expect = std::exp(-10.0 * std::asin(0.5)) / std::sqrt(2.0);
    CHECK(std::fabs(std::abs(a2 / a1) - expect) < 1e-12);

    // decay rate tends to pi/2 per unit area as lambda -> 1; the sqrt(A)
    // power-law part is divided out before reading off the rate
    p.lambda = 0.99999999;
    p.A = 1.0;
    Complex b1 = model_asymptotic(p);
    p.A = 2.0;
    Complex b2 = model_asymptotic(p);
    double rate = -std::log(std::abs(b2 / b1)) - 0.5 * std::log(2.0);
    CHECK(std::fabs(rate - std::asin(1.0)) < 2e-3);
}
