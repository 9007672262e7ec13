#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "conint/quadrature.hpp"
#include "conint/rational.hpp"

namespace conint {

// Selects the complex coupling combination that enters every sinh factor:
// (1/gamma - i) for the Lorentzian branch, (1/gamma + 1) for the Euclidean one.
struct CouplingConfig {
    double gamma = 1.0;
    bool euclidean = false;

    Complex coupling() const {
        if (gamma == 0.0) throw std::domain_error("CouplingConfig: gamma must be nonzero");
        return euclidean ? Complex(1.0 / gamma + 1.0, 0.0) : Complex(1.0 / gamma, -1.0);
    }
};

// principal-branch log of Gamma, accurate to ~1e-13 relative for moderate |z|
Complex log_gamma(Complex z);

Complex digamma(Complex z);

// Gauss hypergeometric for real x in [0, 1).  Direct series for x <= 1/2; the
// single x -> 1-x connection for x > 1/2, including the logarithmic degenerate
// case c - a - b = 0.  Nonzero-integer c - a - b falls back to the direct
// series (convergent, slower), keeping exactly one transformation in play.
Complex hyp2f1(Complex a, Complex b, Complex c, double x);

// Q / sinh(pi Q), Q = coupling * v / 2.  Flushes to exact 0 past the exponent
// range; the factor only ever appears multiplicatively.
Complex suppression_factor(Complex v, const CouplingConfig& cfg);

struct HarmonicTerm {
    long frequency;        // j + 1 - 2k
    Rational coefficient;  // 2^-j (-1)^k C(j+1, k) (j+1-2k)^(j+1)
};

// cosine decomposition of (d/dh)^(j+1) sin^(j+1) h, exact
std::vector<HarmonicTerm> harmonic_coeffs(int j);

// sum_{k=0}^{floor(j/2)} (-1)^k (j+1-2k)^m C(j+1, k), exact
Rational binomial_sum(int j, int m);

struct TableIntegralPair {
    Complex lhs;  // quadrature of sh(hx) / ((x^2+n^2) sh(pi x)) over [0, inf)
    Complex rhs;  // closed form: finite sum + log term + (n-1)-th derivative term
    IntegralResult detail;
};

// requires |h| < pi (integrability) and n >= 1; ln(1+y) on the unit circle is
// taken on the principal branch, which |h| < pi keeps away from the cut
TableIntegralPair table_integral(double h, int n, const QuadratureSpec& spec);

}  // namespace conint
