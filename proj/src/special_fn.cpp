#include "conint/special_fn.hpp"

#include <cmath>
#include <numbers>

#include "conint/jet.hpp"

namespace conint {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

using LComplex = std::complex<long double>;

bool near_nonpositive_integer(Complex z) {
    if (std::abs(z.imag()) > 1e-12) return false;
    double r = std::round(z.real());
    return r <= 0.0 && std::abs(z.real() - r) < 1e-12;
}

// Lanczos approximation, g = 7, 9 coefficients
Complex lanczos_log_gamma(Complex z) {
    static const double kC[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    // series in z with the z -> z-1 shift folded in
    Complex sum = kC[0];
    for (int i = 1; i < 9; ++i) sum += kC[i] / (z - 1.0 + Complex(i));
    Complex t = z + 6.5;  // z - 1 + g + 0.5
    return 0.5 * std::log(2.0 * kPi) + (z - 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

Complex log_gamma(Complex z) {
    if (near_nonpositive_integer(z)) throw std::domain_error("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) return lanczos_log_gamma(z);
    // reflection; keeps the Lanczos argument in the well-conditioned half plane
    return std::log(kPi / std::sin(kPi * z)) - lanczos_log_gamma(1.0 - z);
}

Complex digamma(Complex z) {
    if (near_nonpositive_integer(z)) throw std::domain_error("digamma: pole at nonpositive integer");
    if (z.real() < 0.5) {
        // psi(z) = psi(1-z) - pi cot(pi z)
        return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    }
    Complex shift = 0.0;
    while (z.real() < 9.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    // asymptotic series with Bernoulli-number coefficients
    static const double kB[7] = {1.0 / 12, -1.0 / 120,     1.0 / 252, -1.0 / 240,
                                 1.0 / 132, -691.0 / 32760, 1.0 / 12};
    const Complex inv2 = 1.0 / (z * z);
    Complex corr = 0.0, p = inv2;
    for (int i = 0; i < 7; ++i) {
        corr += kB[i] * p;
        p *= inv2;
    }
    return shift + std::log(z) - 0.5 / z - corr;
}

namespace {

// plain Gauss series at argument x in [0, 1); long-double accumulation
Complex gauss_series(Complex a, Complex b, Complex c, double x, int max_terms) {
    LComplex sum = 1.0L, term = 1.0L;
    const LComplex la(a.real(), a.imag()), lb(b.real(), b.imag()), lc(c.real(), c.imag());
    for (int k = 0; k < max_terms; ++k) {
        term *= (la + (long double)k) * (lb + (long double)k) * (long double)x /
                ((lc + (long double)k) * (long double)(k + 1));
        sum += term;
        if (std::abs(term) < 1e-18L * std::abs(sum) && k > 4)
            return Complex((double)sum.real(), (double)sum.imag());
    }
    throw std::runtime_error("hyp2f1: series did not converge within term cap");
}

// F(a, b; a+b; 1-w) through the logarithmic connection at w = 1-x
Complex log_case_series(Complex a, Complex b, double w) {
    const Complex pref = std::exp(log_gamma(a + b) - log_gamma(a) - log_gamma(b));
    LComplex psa(digamma(a).real(), digamma(a).imag());
    LComplex psb(digamma(b).real(), digamma(b).imag());
    long double psk = -kEulerGamma;  // psi(1)
    const long double lnw = std::log((long double)w);
    const LComplex la(a.real(), a.imag()), lb(b.real(), b.imag());

    LComplex sum = 0.0L, p = 1.0L;  // p = (a)_k (b)_k w^k / (k!)^2
    int settled = 0;
    for (int k = 0; k < 4000; ++k) {
        LComplex bracket = 2.0L * psk - psa - psb - lnw;
        LComplex term = p * bracket;
        sum += term;
        if (std::abs(term) < 1e-18L * std::abs(sum))
            ++settled;
        else
            settled = 0;
        if (settled >= 3) break;
        p *= (la + (long double)k) * (lb + (long double)k) * (long double)w /
             ((long double)(k + 1) * (long double)(k + 1));
        psk += 1.0L / (k + 1);
        psa += 1.0L / (la + (long double)k);
        psb += 1.0L / (lb + (long double)k);
    }
    Complex s((double)sum.real(), (double)sum.imag());
    return pref * s;
}

}  // namespace

Complex hyp2f1(Complex a, Complex b, Complex c, double x) {
    if (!(x >= 0.0 && x < 1.0)) throw std::domain_error("hyp2f1: x must lie in [0, 1)");
    if (near_nonpositive_integer(c)) throw std::domain_error("hyp2f1: c is a nonpositive integer");

    if (x <= 0.5) return gauss_series(a, b, c, x, 600);

    const double w = 1.0 - x;
    const Complex m = c - a - b;
    if (std::abs(m) < 1e-10) return log_case_series(a, b, w);

    const double mr = std::round(m.real());
    if (std::abs(m.imag()) < 1e-8 && std::abs(m.real() - mr) < 1e-8) {
        // nonzero integer balance: stay on the direct series (convergent for x < 1)
        return gauss_series(a, b, c, x, 20000);
    }

    // two-term connection x -> 1-x
    const Complex t1 = std::exp(log_gamma(c) + log_gamma(m) - log_gamma(c - a) - log_gamma(c - b));
    const Complex t2 = std::exp(log_gamma(c) + log_gamma(-m) - log_gamma(a) - log_gamma(b));
    const Complex wm = std::exp(m * std::log(Complex(w)));
    return t1 * gauss_series(a, b, 1.0 - m, w, 2000) +
           t2 * wm * gauss_series(c - a, c - b, 1.0 + m, w, 2000);
}

Complex suppression_factor(Complex v, const CouplingConfig& cfg) {
    const Complex q = cfg.coupling() * v * 0.5;
    const Complex piq = kPi * q;
    if (std::abs(piq.real()) > 700.0) return 0.0;
    if (std::abs(piq) < 1e-4) {
        // q / sinh(pi q) = (1/pi) / (1 + (pi q)^2/6 + (pi q)^4/120 + ...)
        const Complex u = piq * piq;
        return (1.0 / kPi) / (1.0 + u / 6.0 + u * u / 120.0);
    }
    return q / std::sinh(piq);
}

std::vector<HarmonicTerm> harmonic_coeffs(int j) {
    if (j < 0) throw std::domain_error("harmonic_coeffs: j must be nonnegative");
    std::vector<HarmonicTerm> out;
    const BigInt den = ipow(BigInt(2), j);
    for (long k = 0; k <= j / 2; ++k) {
        const long freq = j + 1 - 2 * k;
        BigInt num = binomial(j + 1, k) * ipow(BigInt(freq), j + 1);
        if (k % 2) num = -num;
        out.push_back({freq, Rational(num, den)});
    }
    return out;
}

Rational binomial_sum(int j, int m) {
    if (j < 0 || m < 0) throw std::domain_error("binomial_sum: negative argument");
    BigInt s = 0;
    for (long k = 0; k <= j / 2; ++k) {
        BigInt t = binomial(j + 1, k) * ipow(BigInt(j + 1 - 2 * k), m);
        s += (k % 2) ? -t : t;
    }
    return Rational(s);
}

TableIntegralPair table_integral(double h, int n, const QuadratureSpec& spec) {
    if (!(std::fabs(h) < kPi)) throw std::domain_error("table_integral: requires |h| < pi");
    if (n < 1) throw std::domain_error("table_integral: n must be >= 1");

    const double n2 = double(n) * n;
    const double ah = std::fabs(h);
    const double sgn_h = h < 0 ? -1.0 : 1.0;
    const double cutoff = 42.0 / (kPi - ah);
    // sh(hx)/sh(pi x) written through expm1 so large x never meets inf/inf
    auto integrand = [ah, sgn_h, n2](double x) {
        double ratio = sgn_h * std::exp((ah - kPi) * x) * std::expm1(-2.0 * ah * x) /
                       std::expm1(-2.0 * kPi * x);
        return Complex(ratio / (x * x + n2));
    };
    IntegralResult lhs = integrate_1d(integrand, 0.0, cutoff, spec);

    const Complex I(0.0, 1.0);
    const Complex eih = std::exp(I * h);

    Complex rhs = 0.0;
    for (int k = 1; k <= n - 1; ++k) {
        double sgn = (k % 2) ? -1.0 : 1.0;
        rhs += I / (2.0 * n) * sgn / double(n - k) * std::exp(I * (h * k));
    }
    double sgn_n = (n % 2) ? -1.0 : 1.0;
    rhs += I * sgn_n * std::exp(I * (h * n)) / (2.0 * n) * std::log(1.0 + std::exp(-I * h));

    // derivative term via a jet around y0 = e^{ih}:
    // (i / (2 n!)) d^{n-1}/dy^{n-1} [ (1+y)^{n-1} ln(1+y) / y ]
    {
        const int ord = n - 1;
        Jet t = ord >= 1 ? Jet::variable(ord) : Jet(0);
        Jet y = t + eih;
        Jet one_plus = t + (1.0 + eih);
        Jet pw = Jet::constant(1.0, ord);
        for (int p = 0; p < n - 1; ++p) pw = pw * one_plus;
        Jet g = pw * log(one_plus) * reciprocal(y);
        double nfact = 1.0;
        for (int p = 2; p <= n; ++p) nfact *= p;
        rhs += I / (2.0 * nfact) * g.derivative_at_zero(n - 1);
    }

    return {lhs.value, rhs, lhs};
}

}  // namespace conint
