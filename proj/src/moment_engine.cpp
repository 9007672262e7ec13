#include "conint/moment_engine.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "conint/rational.hpp"
#include "conint/series.hpp"

namespace conint {

namespace {

constexpr double kPi = std::numbers::pi;

// polynomials in the three chart components with exact coefficients
using Mono = std::array<int, 3>;
using Poly = std::map<Mono, Rational>;

void add_term(Poly& p, const Mono& m, const Rational& c) {
    if (c.numerator() == 0) return;
    auto it = p.find(m);
    if (it == p.end()) {
        p.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.numerator() == 0) p.erase(it);
    }
}

// (x^2 + y^2 + z^2)^m
Poly radial_power(int m) {
    Poly p{{{0, 0, 0}, Rational(1)}};
    for (int k = 0; k < m; ++k) {
        Poly q;
        for (const auto& [mono, c] : p)
            for (int a = 0; a < 3; ++a) {
                Mono up = mono;
                up[a] += 2;
                add_term(q, up, c);
            }
        p = std::move(q);
    }
    return p;
}

Poly multiply_component(const Poly& p, int c) {
    Poly q;
    for (const auto& [mono, coeff] : p) {
        Mono up = mono;
        up[c] += 1;
        add_term(q, up, coeff);
    }
    return q;
}

Poly laplacian(const Poly& p) {
    Poly q;
    for (const auto& [mono, coeff] : p)
        for (int a = 0; a < 3; ++a) {
            if (mono[a] < 2) continue;
            Mono down = mono;
            down[a] -= 2;
            add_term(q, down, coeff * Rational(mono[a] * (mono[a] - 1)));
        }
    return q;
}

Poly partial(const Poly& p, int a) {
    Poly q;
    for (const auto& [mono, coeff] : p) {
        if (mono[a] < 1) continue;
        Mono down = mono;
        down[a] -= 1;
        add_term(q, down, coeff * Rational(mono[a]));
    }
    return q;
}

Rational constant_term(const Poly& p) {
    auto it = p.find({0, 0, 0});
    return it == p.end() ? Rational(0) : it->second;
}

void check_indices(const MultiIndex& idx, const char* what) {
    for (int a : idx)
        if (a < 0 || a > 2)
            throw std::domain_error(std::string(what) + ": component labels must lie in {0, 1, 2}");
}

// d_alpha (lap)^n [r_gamma * rho~] at the origin, without the (2i) phase.
// Only the series term of matching degree contributes.
Rational brace_core(int n, const MultiIndex& alpha, const MultiIndex& gamma_idx) {
    const int j = static_cast<int>(alpha.size());
    const int lam = static_cast<int>(gamma_idx.size());
    const int twice_m = 2 * n + j - lam;
    if (twice_m < 0 || twice_m % 2 != 0) return Rational(0);
    const int m = twice_m / 2;

    Poly p = radial_power(m);
    for (int c : gamma_idx) p = multiply_component(p, c);
    for (int k = 0; k < n; ++k) p = laplacian(p);
    for (int a : alpha) p = partial(p, a);

    return measure_series(m)[m] * constant_term(p);
}

}  // namespace

Jet HKernel::z_jet(int order) const {
    Jet h = Jet::variable(order);
    if (kind == Kind::Linear) return h;
    if (gamma == 0.0) throw std::domain_error("HKernel: gamma must be nonzero");
    const Complex cpl(1.0, 1.0 / gamma);
    return sin(h * (1.0 / cpl));
}

Complex measure_brace(int n, const MultiIndex& alpha, const MultiIndex& gamma_idx) {
    if (n < 0) throw std::domain_error("measure_brace: n must be >= 0");
    check_indices(alpha, "measure_brace");
    check_indices(gamma_idx, "measure_brace");
    const int j = static_cast<int>(alpha.size());
    const Rational core = brace_core(n, alpha, gamma_idx);
    return unit_phase(j + 2 * n) * std::ldexp(to_double(core), j + 2 * n);
}

Complex moment_via_measure(int n, int p, const MomentSpec& spec) {
    const Complex plus = measure_brace(n, spec.alpha, spec.gamma_idx);
    const Complex minus = measure_brace(p, spec.beta, spec.delta_idx);
    return 8.0 * kPi * kPi * plus * minus;
}

Complex jet_factor(int order, const HKernel& kernel,
                   const std::function<Jet(const Jet&)>& profile) {
    if (order < 1) throw std::domain_error("jet_factor: order must be >= 1");
    const Jet z = kernel.z_jet(order + 1);
    const Jet g = derivative(z) * profile(z);
    return unit_phase(order) * std::ldexp(1.0, order) * g.derivative_at_zero(order);
}

Jet scalar_generating_profile(const Jet& z) {
    const Jet w = sqrt(Complex(1.0) - z * z);
    return log((w + Complex(1.0)) * Complex(0.5)) * Complex(2.0 * kPi);
}

Complex moment_via_jets(const MomentSpec& spec, const QuadratureSpec& quad) {
    (void)quad;  // the closed-form profile needs no numerical input
    if (!spec.alpha.empty() || !spec.beta.empty() || !spec.gamma_idx.empty() ||
        !spec.delta_idx.empty())
        throw std::domain_error(
            "moment_via_jets: scalar sector only; tensor sectors go through "
            "moment_via_measure");
    if (spec.l < 0 || spec.m < 0)
        throw std::domain_error("moment_via_jets: orders must be >= 0");
    const auto profile = [](const Jet& u) { return scalar_generating_profile(u); };
    const Complex fp = jet_factor(2 * spec.l + 2, spec.kernel, profile);
    const Complex fm = jet_factor(2 * spec.m + 2, spec.kernel, profile);
    return fp * fm / 8.0;
}

Complex physical_moment(int l, int j, const CouplingConfig& cfg,
                        const QuadratureSpec& spec) {
    if (l < 0) throw std::domain_error("physical_moment: l must be >= 0");
    const double vmax = 60.0 * std::abs(cfg.gamma);
    const int power = 2 * l + 2;
    const auto f = [&](double v) -> Complex {
        return n_scalar(Complex(v), j, cfg) * std::pow(v, power);
    };
    IntegralResult res = integrate_1d(f, 0.0, vmax, spec);
    if (!res.converged())
        throw std::runtime_error("physical_moment: quadrature failed: " + res.note);
    return 4.0 * kPi * res.value;
}

SupportSet support_points(int n, double gamma) {
    if (n < 0) throw std::domain_error("support_points: n must be >= 0");
    if (gamma == 0.0) throw std::domain_error("support_points: gamma must be nonzero");
    const Complex cpl(1.0, 1.0 / gamma);
    const Complex base = 4.0 / (cpl * cpl);
    SupportSet out;
    for (long nt = n + 1; nt >= n % 2 + 1; nt -= 2)
        out.nodes.push_back({nt, base * static_cast<double>(nt * nt)});
    return out;
}

NodeFitResult residual_node_fit(const std::vector<Complex>& full_moments,
                                const std::vector<Complex>& physical_moments,
                                const SupportSet& nodes) {
    if (full_moments.size() != physical_moments.size())
        throw std::invalid_argument("residual_node_fit: moment lists differ in length");
    const long rows = static_cast<long>(full_moments.size());
    const long unknowns = 2 * static_cast<long>(nodes.nodes.size());
    if (unknowns == 0) throw std::invalid_argument("residual_node_fit: empty node set");
    if (rows <= unknowns)
        throw std::invalid_argument(
            "residual_node_fit: need more moment rows than unknowns");

    Eigen::MatrixXcd A(rows, unknowns);
    Eigen::VectorXcd b(rows);
    for (long l = 0; l < rows; ++l) {
        b(l) = full_moments[l] - physical_moments[l];
        for (long k = 0; k < static_cast<long>(nodes.nodes.size()); ++k) {
            const Complex s = nodes.nodes[k].value;
            // value column s^l and its confluent partner l s^{l-1}: a simple
            // pole and a double pole share each support point
            A(l, 2 * k) = std::pow(s, static_cast<double>(l));
            A(l, 2 * k + 1) =
                l == 0 ? Complex(0.0)
                       : static_cast<double>(l) * std::pow(s, static_cast<double>(l - 1));
        }
    }

    Eigen::VectorXd scale(unknowns);
    Eigen::MatrixXcd As = A;
    for (long c = 0; c < unknowns; ++c) {
        double s = As.col(c).norm();
        scale(c) = s > 0.0 ? s : 1.0;
        As.col(c) /= scale(c);
    }

    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(As);
    Eigen::VectorXcd y = qr.solve(b);
    Eigen::VectorXcd w(unknowns);
    for (long c = 0; c < unknowns; ++c) w(c) = y(c) / scale(c);

    NodeFitResult out;
    out.weights.assign(w.data(), w.data() + unknowns);
    out.residual_norm = (A * w - b).norm();
    const double bn = b.norm();
    out.relative_residual = bn > 0.0 ? out.residual_norm / bn : 0.0;

    const auto& R = qr.matrixR();
    const long rank_dim = std::min<long>(rows, unknowns);
    const double rmax = std::abs(R(0, 0));
    const double rmin = std::abs(R(rank_dim - 1, rank_dim - 1));
    out.condition = rmin > 0.0 ? rmax / rmin : std::numeric_limits<double>::infinity();
    if (!(out.condition < 1e12)) out.note = "ill-conditioned node basis";
    return out;
}

namespace {

// resummed sector factor: sum over n of (2i)^{-2} f_n x^{j+2+2n} / (j+2+2n)!
// with f_n the brace core.  The per-term ratio is closed for the scalar and
// vector sectors; rank >= 2 is outside the implemented series.
Complex sector_series(double x, const MultiIndex& alpha, const MultiIndex& gamma_idx) {
    const int j = static_cast<int>(alpha.size());
    const int lam = static_cast<int>(gamma_idx.size());
    if (j != lam)
        throw std::domain_error("factorization_check: paired index lists must match in length");
    if (j > 1)
        throw std::domain_error(
            "factorization_check: series factor implemented for ranks 0 and 1");
    if (x == 0.0) return Complex(0.0);

    // rank 1 carries delta_{alpha gamma}; off-diagonal components vanish
    if (j == 1 && alpha[0] != gamma_idx[0]) return Complex(0.0);

    // term ratios: rank 0 gives c_n/(2n+2), rank 1 gives c_n/(3(2n+2)), with
    // c_n the measure series advanced by c_{n+1}/c_n = (2n+3)/(2n+4)
    double cn = 0.5;
    double xp = j == 0 ? x * x : x * x * x;
    const double x2 = x * x;
    double sum = 0.0;
    for (int n = 0; n < 4000; ++n) {
        double term = cn / (2.0 * n + 2.0) * xp;
        if (j == 1) term /= 3.0;
        sum += term;
        // the (2i)^{-2} phase makes the resummed factor -sum/4; the
        // chart-side normalization of the factor is 8 pi times that
        if (std::abs(term) < 1e-16 * (std::abs(sum) + 1e-300)) return -2.0 * kPi * sum;
        cn *= (2.0 * n + 3.0) / (2.0 * n + 4.0);
        xp *= x2;
    }
    throw std::runtime_error("factorization_check: series did not converge");
}

Complex sector_quadrature(double x, const MultiIndex& alpha, const MultiIndex& gamma_idx,
                          const QuadratureSpec& quad) {
    if (x == 0.0) return Complex(0.0);
    return tilde_i(x, alpha, gamma_idx, quad);
}

}  // namespace

FactorizationCheck factorization_check(double z, double zstar, const MomentSpec& spec,
                                       const QuadratureSpec& quad) {
    if (z < 0.0 || z >= 1.0 || zstar < 0.0 || zstar >= 1.0)
        throw std::domain_error("factorization_check: arguments must lie in [0, 1)");

    FactorizationCheck out;
    out.lhs = sector_series(z, spec.alpha, spec.gamma_idx) *
              sector_series(zstar, spec.beta, spec.delta_idx);
    out.rhs = sector_quadrature(z, spec.alpha, spec.gamma_idx, quad) *
              sector_quadrature(zstar, spec.beta, spec.delta_idx, quad);
    const double denom = std::max(std::abs(out.lhs), std::abs(out.rhs));
    out.deviation = denom > 0.0 ? std::abs(out.lhs - out.rhs) / denom : 0.0;
    return out;
}

Complex SubtractedGenerating::operator()(double v) const {
    return subtracted_bracket(j, v * z);
}

SubtractedGenerating subtracted_generating(double z, int j, const HKernel& kernel) {
    if (j < 0) throw std::domain_error("subtracted_generating: j must be >= 0");
    return SubtractedGenerating{j, z, kernel};
}

}  // namespace conint
