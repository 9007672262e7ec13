#pragma once

#include <complex>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "conint/vec3.hpp"

namespace conint {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_subdivisions = 20000;
    // epsilon values for the oscillatory-damping limit, largest first
    std::vector<double> damping_schedule{0.2, 0.1, 0.05, 0.025, 0.0125};
    int extrapolation_order = 3;
};

struct IntegralResult {
    enum class Status { Converged, MaxSubdivisions, Diverged };

    Complex value{};
    double error_estimate = 0.0;
    long evaluations = 0;
    Status status = Status::Converged;
    std::string note;

    bool converged() const { return status == Status::Converged; }
};

using Integrand1D = std::function<Complex(double)>;
using Integrand3D = std::function<Complex(const Vec3&)>;

// Adaptive Gauss-Kronrod over [a, b].  Breakpoints inside (a, b) seed panel
// boundaries so declared kinks/jumps never sit in a panel interior.
IntegralResult integrate_1d(const Integrand1D& f, double a, double b,
                            const QuadratureSpec& spec,
                            std::span<const double> breakpoints = {});

// Integral over the closed unit ball |r| <= 1 by a spherical product rule:
// adaptive radial quadrature in t with r = sin(t) (clusters nodes at r = 1 and
// absorbs integrable 1/sqrt(1-r^2) endpoint behaviour), tensor Gauss-Legendre x
// uniform-phi angular rule.  radial_breakpoints are radii in (0, 1).
IntegralResult integrate_ball(const Integrand3D& f, const QuadratureSpec& spec,
                              std::span<const double> radial_breakpoints = {});

enum class OscillatoryDomain { HalfLine, RealLine };

// lim_{eps->0+} of the exponentially damped integral of f over [0, inf) or
// (-inf, inf): each I(eps) is integrated with the damping factor e^{-eps|x|},
// then the schedule is extrapolated polynomially to eps = 0.  A divergent
// tableau is reported as Status::Diverged (the limit exists only
// distributionally, e.g. a delta contribution at zero frequency).
IntegralResult damped_oscillatory(const Integrand1D& f, OscillatoryDomain domain,
                                  const QuadratureSpec& spec);

// nodes and weights of the n-point Gauss-Legendre rule on [-1, 1]
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w);

}  // namespace conint
