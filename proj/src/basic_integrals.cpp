#include "conint/basic_integrals.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>

#include "conint/haar_so3.hpp"
#include "conint/rational.hpp"

namespace conint {

namespace {

constexpr double kPi = std::numbers::pi;

Complex cpow_int(Complex base, int e) {
    // integer powers by repeated multiplication: single-valued, no log branch
    if (e < 0) return 1.0 / cpow_int(base, -e);
    Complex out = 1.0;
    while (e-- > 0) out *= base;
    return out;
}

// One summand of a derivative expansion around a radial profile:
//   coeff * x_0^{c0} x_1^{c1} x_2^{c2} * |x|^{-inv_pow} * (z - |x|)^{gap_pow}
struct RadialTerm {
    Rational coeff;
    std::array<int, 3> counts{};
    int inv_pow = 0;
    int gap_pow = 0;
};

using TermKey = std::array<int, 5>;

TermKey key_of(const RadialTerm& t) {
    return {t.counts[0], t.counts[1], t.counts[2], t.inv_pow, t.gap_pow};
}

void merge(std::vector<RadialTerm>& terms) {
    std::map<TermKey, Rational> acc;
    for (const auto& t : terms) acc[key_of(t)] += t.coeff;
    terms.clear();
    for (const auto& [k, c] : acc) {
        if (c == Rational(0)) continue;
        terms.push_back({c, {k[0], k[1], k[2]}, k[3], k[4]});
    }
}

// exact d/dx_a by the product rule over the three radius-bearing factors;
// the delta-function term from (z-|x|)^{gap_pow} carries a vanishing
// (z-|x|)^{gap_pow} prefactor on its support whenever gap_pow >= 1, so only
// polynomial-type terms survive
void differentiate(std::vector<RadialTerm>& terms, int a) {
    std::vector<RadialTerm> out;
    out.reserve(terms.size() * 3);
    for (const auto& t : terms) {
        if (t.counts[a] > 0) {
            RadialTerm n = t;
            n.coeff *= t.counts[a];
            n.counts[a] -= 1;
            out.push_back(n);
        }
        if (t.inv_pow != 0) {
            RadialTerm n = t;
            n.coeff *= -t.inv_pow;
            n.counts[a] += 1;
            n.inv_pow += 2;
            out.push_back(n);
        }
        if (t.gap_pow != 0) {
            RadialTerm n = t;
            n.coeff *= -t.gap_pow;
            n.counts[a] += 1;
            n.gap_pow -= 1;
            n.inv_pow += 1;
            out.push_back(n);
        }
    }
    merge(out);
    terms = std::move(out);
}

std::vector<RadialTerm> derivative_terms(const MultiIndex& idx, int gap_pow) {
    std::vector<RadialTerm> terms{{Rational(1), {0, 0, 0}, 1, gap_pow}};
    for (int a : idx) {
        if (a < 0 || a > 2)
            throw std::domain_error("MultiIndex entries must lie in {0, 1, 2}");
        differentiate(terms, a);
    }
    return terms;
}

}  // namespace

// sum over m >= j+2, m = j (mod 2), of u^m/m! with u = -i w / 2; equals
// (e^u + (-1)^j e^{-u})/2 minus its low-order part
Complex subtracted_bracket(int j, Complex w) {
    const Complex u = Complex(0.0, -0.5) * w;
    if (std::abs(w) <= 4.0) {
        Complex term = cpow_int(u, j + 2);
        for (int m = 2; m <= j + 2; ++m) term /= static_cast<double>(m);
        Complex sum = term;
        const Complex u2 = u * u;
        for (int m = j + 2;; m += 2) {
            term *= u2 / static_cast<double>((m + 1) * (m + 2));
            sum += term;
            if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300)) break;
        }
        return sum;
    }
    const Complex full =
        0.5 * (std::exp(u) + (j % 2 == 0 ? 1.0 : -1.0) * std::exp(-u));
    // subtract u^m/m! for m = j%2, j%2+2, ..., j (m! = 1 at the start value)
    Complex sub = 0.0;
    Complex t = cpow_int(u, j % 2);
    for (int m = j % 2; m <= j; m += 2) {
        sub += t;
        t *= u * u / static_cast<double>((m + 1) * (m + 2));
    }
    return full - sub;
}

Complex tensor_structure(const ComplexVec3& v, const MultiIndex& idx) {
    const Complex v2 = v.dot(v);
    double scale = 0.0;
    for (int a = 0; a < 3; ++a) scale += std::norm(v[a]);
    if (!idx.empty() && std::abs(v2) <= 1e-14 * scale)
        throw std::domain_error("tensor_structure: null vector, v^2 = 0");

    const auto terms = derivative_terms(idx, 0);
    Complex total = 0.0;
    for (const auto& t : terms) {
        Complex prod = to_double(t.coeff);
        for (int a = 0; a < 3; ++a) prod *= cpow_int(v[a], t.counts[a]);
        // trailing radius factor: v * v^{-inv_pow} with inv_pow odd, so the
        // combined power of v^2 is the integer (1 - inv_pow)/2
        total += prod * cpow_int(v2, (1 - t.inv_pow) / 2);
    }
    return total;
}

double angular_constant(int j) {
    if (j < 0) throw std::domain_error("angular_constant: j must be >= 0");
    // exact rational unit vector (1, 2, 2)/3
    const std::array<Rational, 3> n{Rational(1, 3), Rational(2, 3), Rational(2, 3)};
    Rational total(0);
    for (int k0 = 0; k0 <= j; ++k0)
        for (int k1 = 0; k1 + k0 <= j; ++k1) {
            const int k2 = j - k0 - k1;
            MultiIndex idx;
            idx.insert(idx.end(), k0, 0);
            idx.insert(idx.end(), k1, 1);
            idx.insert(idx.end(), k2, 2);
            const auto terms = derivative_terms(idx, 0);
            Rational val(0);
            for (const auto& t : terms) {
                Rational p = t.coeff;
                for (int a = 0; a < 3; ++a) p *= rpow(n[a], t.counts[a]);
                val += p;  // radius factors are exactly 1 on the unit sphere
            }
            const Rational weight(binomial(j, k0) * binomial(j - k0, k1));
            total += weight * rpow(n[0], k0) * rpow(n[1], k1) * rpow(n[2], k2) * val;
        }
    return to_double(total);
}

Complex tilde_j(double r, double z, int j) {
    if (r <= 0.0) throw std::domain_error("tilde_j: r must be positive");
    if (j < 0) throw std::domain_error("tilde_j: j must be >= 0");
    if (z <= r) return 0.0;
    const double mag =
        -4.0 * kPi * kPi / r * std::pow(z - r, j) /
        (to_double(Rational(factorial(j))) * std::ldexp(1.0, j));
    return mag * unit_phase(-j);
}

IntegralResult tilde_j_oracle(double r, double z, int j, const QuadratureSpec& spec) {
    if (!(r > 0.0 && r < 1.0) || !(z > 0.0))
        throw std::domain_error("tilde_j_oracle: need 0 < r < 1 and z > 0");
    QuadratureSpec s = spec;
    const double gap = std::abs(z - r);
    const double eps0 = std::min(0.05, (gap > 0.0 ? gap : 0.2) / 4.0);
    s.damping_schedule = {eps0, eps0 / 2, eps0 / 4, eps0 / 8, eps0 / 16};
    s.max_subdivisions = std::max(spec.max_subdivisions, 200000);
    const double pref = 8.0 * kPi / r;
    auto f = [=](double v) -> Complex {
        return pref * std::sin(0.5 * v * r) * subtracted_bracket(j, v * z) *
               std::pow(v, -(j + 1));
    };
    return damped_oscillatory(f, OscillatoryDomain::HalfLine, s);
}

Complex tilde_i(double z, const MultiIndex& alpha, const MultiIndex& gamma_idx,
                const QuadratureSpec& spec) {
    if (!(z > 0.0 && z <= 1.0))
        throw std::domain_error("tilde_i: need 0 < z <= 1");
    if (alpha.size() != gamma_idx.size())
        throw std::domain_error("tilde_i: derivative and radius index lists must pair up");
    const int j = static_cast<int>(alpha.size());

    auto terms = derivative_terms(alpha, j);
    for (int c : gamma_idx) {
        if (c < 0 || c > 2)
            throw std::domain_error("MultiIndex entries must lie in {0, 1, 2}");
        for (auto& t : terms) t.counts[c] += 1;
    }
    std::vector<std::pair<std::array<int, 5>, double>> flat;
    flat.reserve(terms.size());
    for (const auto& t : terms)
        flat.push_back({key_of(t), to_double(t.coeff)});

    auto f = [&](const Vec3& x) -> Complex {
        const double rad = x.norm();
        if (rad >= z) return 0.0;
        const double rho = haar_density(x);
        double sum = 0.0;
        for (const auto& [k, c] : flat) {
            double p = c;
            for (int a = 0; a < 3; ++a)
                for (int e = 0; e < k[a]; ++e) p *= x[a];
            p *= std::pow(rad, -static_cast<double>(k[3]));
            p *= std::pow(z - rad, static_cast<double>(k[4]));
            sum += p;
        }
        return Complex(rho * sum, 0.0);
    };

    std::vector<double> bps;
    if (z < 1.0) bps.push_back(z);
    const auto res = integrate_ball(f, spec, bps);
    if (!res.converged())
        throw std::runtime_error("tilde_i: ball quadrature failed: " + res.note);
    const double sign = (j % 2 == 0) ? -1.0 : 1.0;  // (-1)^{j+1}
    return 4.0 * kPi * kPi * sign / to_double(Rational(factorial(j))) * res.value;
}

Complex n_scalar(Complex v, int j, const CouplingConfig& cfg) {
    if (j < 0) throw std::domain_error("n_scalar: j must be >= 0");
    const Complex c = cfg.coupling();
    const Complex q = 0.5 * c * v;
    const Complex q2 = q * q;
    const int half = j / 2;
    Complex denom = 1.0;
    for (int k = 0; k <= half; ++k) {
        const double m = static_cast<double>(j + 1 - 2 * k);
        if (std::abs(q - Complex(0.0, m)) < 1e-6 || std::abs(q + Complex(0.0, m)) < 1e-6)
            throw std::domain_error("n_scalar: v inside the exclusion disk of a pole");
        denom *= q2 + m * m;
    }
    const Complex pref = cfg.euclidean ? Complex(0.5, 0.0) : Complex(0.0, -0.5);
    return pref * cpow_int(2.0 / c, j) * suppression_factor(v, cfg) *
           cpow_int(q2, half) / denom;
}

Complex BasicIntegralValue::at(const MultiIndex& idx) const {
    if (static_cast<int>(idx.size()) != rank)
        throw std::domain_error("BasicIntegralValue::at: index length != rank");
    std::size_t flat = 0;
    for (int a : idx) {
        if (a < 0 || a > 2)
            throw std::domain_error("MultiIndex entries must lie in {0, 1, 2}");
        flat = flat * 3 + static_cast<std::size_t>(a);
    }
    return tensor[flat];
}

BasicIntegralValue basic_integral(const ComplexVec3& v, const MultiIndex& alpha,
                                  const CouplingConfig& cfg) {
    const int j = static_cast<int>(alpha.size());
    BasicIntegralValue out;
    out.rank = j;
    out.scalar = n_scalar(norm_v(v), j, cfg);

    std::size_t count = 1;
    for (int k = 0; k < j; ++k) count *= 3;
    out.tensor.resize(count);
    MultiIndex idx(j, 0);
    for (std::size_t flat = 0; flat < count; ++flat) {
        std::size_t rem = flat;
        for (int k = j - 1; k >= 0; --k) {
            idx[static_cast<std::size_t>(k)] = static_cast<int>(rem % 3);
            rem /= 3;
        }
        out.tensor[flat] = tensor_structure(v, idx);
    }
    out.value = out.scalar * out.at(alpha);
    return out;
}

double series_term_bound(int j, double v, const CouplingConfig& cfg) {
    if (j < 0 || v < 0.0)
        throw std::domain_error("series_term_bound: need j >= 0 and v >= 0");
    const Complex w = Complex(0.0, 1.0) * cfg.coupling() * v / 4.0;
    const Complex a(0.5 * (j + 3), 0.0);
    return std::exp(-std::real(log_gamma(a + w) + log_gamma(a - w)));
}

}  // namespace conint
