#pragma once

#include "conint/quadrature.hpp"

namespace conint {

// Boost-integral toy model: one spacelike-area parameter A and an opening
// parameter lambda in (0, 1].
struct ModelParams {
    double A = 1.0;
    double lambda = 0.5;
    QuadratureSpec spec{};
};

// Damped-oscillatory value of the phase integral over the whole real line,
// integrated in the boost variable directly (no change of variable), so the
// comparison against model_rhs is an independent route.  A = 0 is reported as
// divergent: the limit is purely distributional there.
IntegralResult model_lhs(const ModelParams& p);

// Closed form (delta term excluded): (1 - lambda^2) (pi A/2)/sinh(pi A/2) *
// F(1 + iA/2, 1 - iA/2; 2; 1 - lambda^2).  Even in A; finite limit at A -> 0.
Complex model_rhs(const ModelParams& p);

// Leading large-|A| behaviour sqrt(2 pi) (1-lambda^2)^{1/4} / sqrt(lambda |A|)
// * exp(-|A| arcsin lambda).
Complex model_asymptotic(const ModelParams& p);

}  // namespace conint
