#pragma once

#include <functional>
#include <string>
#include <vector>

#include "conint/basic_integrals.hpp"
#include "conint/jet.hpp"
#include "conint/quadrature.hpp"
#include "conint/special_fn.hpp"

namespace conint {

// map h -> z entering the generating profile.  Linear is z = h; Holst is
// z = sin(h / (1 + i/gamma)), the reparametrization that carries the
// Barbero-like coupling into the argument.
struct HKernel {
    enum class Kind { Linear, Holst };
    Kind kind = Kind::Linear;
    double gamma = 1.0;

    // truncated series of z(h) at h = 0, order >= 1
    Jet z_jet(int order) const;
};

struct MomentSpec {
    int l = 0;
    int m = 0;
    MultiIndex alpha;      // derivative indices, selfdual sector
    MultiIndex beta;       // derivative indices, antiselfdual sector
    MultiIndex gamma_idx;  // radius-component indices paired with alpha
    MultiIndex delta_idx;  // radius-component indices paired with beta
    HKernel kernel;
};

// one brace of the factorized moment: (2i)^{j+2n} d_alpha (lap)^n
// [r_{gamma} * rho~(r)] at r = 0, with rho~ the even measure series.  Exact:
// only one series term survives the evaluation at the origin.
Complex measure_brace(int n, const MultiIndex& alpha, const MultiIndex& gamma_idx);

// moment of the joint measure, factorized form: 8 pi^2 times the product of
// the two braces at orders (n, p).  Kernel-independent by construction.
Complex moment_via_measure(int n, int p, const MomentSpec& spec);

// selfdual jet factor (2i d/dh)^{order} [z'(h) profile(z(h))] at h = 0
Complex jet_factor(int order, const HKernel& kernel,
                   const std::function<Jet(const Jet&)>& profile);

// rank-0 generating profile 2 pi log((1 + sqrt(1 - z^2)) / 2); its Taylor
// coefficients resum the measure series term by term
Jet scalar_generating_profile(const Jet& z);

// scalar-sector moment through the jet route: F+ F- / 8 with derivative
// orders 2l+2 and 2m+2.  Index lists must be empty; tensor sectors go through
// moment_via_measure.  The quadrature spec is reserved for a profile that
// needs numerical input; the closed-form profile ignores it.
Complex moment_via_jets(const MomentSpec& spec, const QuadratureSpec& quad);

// radial moment of the rank-j scalar factor: 4 pi int_0^{60 gamma} N_j(v)
// v^{2l+2} dv.  The cutoff sits far beyond the sinh suppression scale.
Complex physical_moment(int l, int j, const CouplingConfig& cfg,
                        const QuadratureSpec& spec);

struct SupportNode {
    long n_tilde = 0;
    Complex value;  // 4 n~^2 (1 + i/gamma)^{-2}
};

struct SupportSet {
    std::vector<SupportNode> nodes;
};

// candidate pole locations in v^2 for derivative order n:
// n~ = n+1, n-1, ..., down to (n mod 2) + 1
SupportSet support_points(int n, double gamma);

struct NodeFitResult {
    // two entries per node, interleaved: value weight, slope weight
    std::vector<Complex> weights;
    double residual_norm = 0.0;
    double relative_residual = 0.0;
    double condition = 0.0;
    std::string note;
};

// least-squares fit of full_moments[l] - physical_moments[l] against the
// confluent basis {s^l, l s^{l-1}} over the support nodes s.  Needs more
// moment rows than unknowns (2 per node).
NodeFitResult residual_node_fit(const std::vector<Complex>& full_moments,
                                const std::vector<Complex>& physical_moments,
                                const SupportSet& nodes);

struct FactorizationCheck {
    Complex lhs;       // joint moment series, exact rational coefficients
    Complex rhs;       // product of independently integrated chart factors
    double deviation;  // |lhs - rhs| relative to the larger magnitude
};

// compares the resummed factorized series for the joint value against the
// product of two ball quadratures.  Sectors are (alpha, gamma_idx) at z and
// (beta, delta_idx) at zstar; 0 <= z, zstar < 1.
FactorizationCheck factorization_check(double z, double zstar,
                                       const MomentSpec& spec,
                                       const QuadratureSpec& quad);

// evaluator for the subtracted parity exponential at argument v z; records
// the kernel the profile variable came from.  O(z^{j+2}) near z = 0 and
// bounded for real arguments.
struct SubtractedGenerating {
    int j = 0;
    double z = 0.0;
    HKernel kernel;

    Complex operator()(double v) const;
};

SubtractedGenerating subtracted_generating(double z, int j, const HKernel& kernel);

}  // namespace conint
