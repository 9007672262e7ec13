#include "conint/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <stdexcept>

#include "conint/basic_integrals.hpp"
#include "conint/haar_so3.hpp"
#include "conint/model_integral.hpp"
#include "conint/moment_engine.hpp"
#include "conint/rational.hpp"
#include "conint/simplicial.hpp"
#include "conint/special_fn.hpp"

namespace conint {
namespace {

constexpr double kPi = std::numbers::pi;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// 1: damped oscillatory integral against the hypergeometric closed form on
// the full parameter grid, with a wall-clock budget
CheckRecord check_model_grid() {
    const auto t0 = std::chrono::steady_clock::now();
    QuadratureSpec fine;
    fine.damping_schedule = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
    double worst = 0.0;
    bool converged = true;
    for (double a : {0.5, 1.0, 2.0, 4.0})
        for (double lam : {0.3, 0.6, 0.9}) {
            ModelParams p;
            p.A = a;
            p.lambda = lam;
            p.spec = fine;
            const IntegralResult lhs = model_lhs(p);
            converged = converged && lhs.converged();
            const Complex rhs = model_rhs(p);
            worst = std::max(worst, std::abs(lhs.value - rhs) / std::abs(rhs));
        }
    CheckRecord r = abs_check("model-identity-grid", "damped-quadrature-vs-series",
                              0.0, worst, 1e-4);
    r.note = "worst relative deviation over A in {0.5,1,2,4} x lambda in {0.3,0.6,0.9}";
    if (!converged) {
        r.pass = false;
        r.note += "; quadrature did not converge";
    }
    if (seconds_since(t0) > 30.0) {
        r.pass = false;
        r.note += "; over the 30 s budget";
    }
    return r;
}

// 2: the closed form approaches its large-argument asymptotic, and the gap
// shrinks between A = 15 and A = 30
CheckRecord check_model_asymptotic() {
    ModelParams p;
    p.lambda = 0.5;
    p.A = 15.0;
    const double d15 = std::abs(model_rhs(p) / model_asymptotic(p) - 1.0);
    p.A = 30.0;
    const double d30 = std::abs(model_rhs(p) / model_asymptotic(p) - 1.0);
    CheckRecord r = abs_check("model-asymptotic-law", "large-argument-asymptotic",
                              0.0, d30, 0.1);
    r.note = "|rhs/asymptotic - 1| at A=30; at A=15 it is " + fmt(d15);
    if (!(d30 < d15)) {
        r.pass = false;
        r.note += "; not decreasing";
    }
    return r;
}

// 3: exact-rational identity family: the alternating sums vanish below the
// top power and hit 2^j (j+1)! at the top, for all j <= 20
CheckRecord check_binomial_identities() {
    const auto t0 = std::chrono::steady_clock::now();
    long failures = 0;
    for (int j = 0; j <= 20; ++j) {
        for (int m = (j % 2) + 1; m <= j - 1; m += 2)
            failures += binomial_sum(j, m) == Rational(0) ? 0 : 1;
        const Rational top(ipow(BigInt(2), j) * factorial(j + 1));
        failures += binomial_sum(j, j + 1) == top ? 0 : 1;
    }
    CheckRecord r = abs_check("binomial-identities", "exact-rational",
                              0.0, static_cast<double>(failures), 0.0);
    r.note = "zero family and top identity, j <= 20";
    if (seconds_since(t0) > 1.0) {
        r.pass = false;
        r.note += "; over the 1 s budget";
    }
    return r;
}

// 4: quadrature of the parity kernel over [0, inf) against the finite-sum
// closed form
CheckRecord check_table_integral() {
    QuadratureSpec spec;
    double worst = 0.0;
    for (int n = 1; n <= 4; ++n)
        for (double h : {-0.4, 0.4, 0.7}) {
            const TableIntegralPair pr = table_integral(h, n, spec);
            worst = std::max(worst, std::abs(pr.lhs - pr.rhs));
        }
    CheckRecord r = abs_check("table-integral", "closed-form-vs-quadrature",
                              0.0, worst, 1e-8);
    r.note = "n = 1..4, h in {-0.4, 0.4, 0.7}";
    return r;
}

// 5: closed-form radial transform against the subtracted oscillatory
// integral on both sides of the z = r edge
CheckRecord check_radial_transform() {
    QuadratureSpec spec;
    double worst = 0.0;
    for (double radius : {0.3, 0.5, 0.7})
        for (double dz : {-0.2, 0.2, 0.38})
            for (int j = 0; j <= 2; ++j) {
                const double z = radius + dz;
                const Complex closed = tilde_j(radius, z, j);
                const IntegralResult oracle = tilde_j_oracle(radius, z, j, spec);
                // relative on support; below the edge the closed form is an
                // exact zero, so the oracle's own noise floor applies
                worst = std::max(worst, std::abs(oracle.value - closed) /
                                            std::max(std::abs(closed), 1.0));
            }
    CheckRecord r = abs_check("radial-transform-oracle",
                              "subtracted-radial-quadrature", 0.0, worst, 1e-3);
    r.note = "j <= 2 on a 3x3 (r, z) grid straddling the edge";
    return r;
}

// 6: the rank-j structure is symmetric under index permutations and traceless
// on any contracted pair, at random complex arguments
CheckRecord check_tensor_structure() {
    std::mt19937_64 rng(871236);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::uniform_int_distribution<int> comp(0, 2);
    double worst = 0.0;
    int done = 0;
    while (done < 20) {
        const ComplexVec3 v{Complex(uni(rng), uni(rng)), Complex(uni(rng), uni(rng)),
                            Complex(uni(rng), uni(rng))};
        if (std::abs(v.dot(v)) < 0.1) continue;
        ++done;
        for (int j = 2; j <= 4; ++j) {
            MultiIndex idx(j);
            for (auto& a : idx) a = comp(rng);

            MultiIndex perm = idx;
            std::shuffle(perm.begin(), perm.end(), rng);
            const Complex t1 = tensor_structure(v, idx);
            worst = std::max(worst, std::abs(t1 - tensor_structure(v, perm)) /
                                        (1.0 + std::abs(t1)));

            MultiIndex rest(idx.begin() + 2, idx.end());
            Complex trace = 0.0;
            double scale = 0.0;
            for (int a = 0; a < 3; ++a) {
                MultiIndex full{a, a};
                full.insert(full.end(), rest.begin(), rest.end());
                const Complex val = tensor_structure(v, full);
                trace += val;
                scale += std::abs(val);
            }
            worst = std::max(worst, std::abs(trace) / (1.0 + scale));
        }
    }
    CheckRecord r = abs_check("tensor-structure", "permutation-contraction",
                              0.0, worst, 1e-12);
    r.note = "j = 2..4 at 20 random complex arguments, fixed seed";
    return r;
}

// 7: the same moment through the exact measure-series route and through the
// jet route with the linear kernel
CheckRecord check_moment_cross_path() {
    QuadratureSpec quad;
    double worst = 0.0;
    for (int n = 0; n <= 2; ++n)
        for (int p = 0; p <= 2; ++p) {
            MomentSpec spec;
            spec.l = n;
            spec.m = p;
            spec.kernel.kind = HKernel::Kind::Linear;
            const Complex jets = moment_via_jets(spec, quad);
            const Complex meas = moment_via_measure(n, p, spec);
            worst = std::max(worst,
                             std::abs(jets - meas) / std::max(std::abs(meas), 1.0));
        }
    CheckRecord r = abs_check("moment-cross-path", "taylor-measure-vs-jets",
                              0.0, worst, 1e-10);
    r.note = "scalar sector, orders (n, p) <= (2, 2)";
    return r;
}

// 8: the full-vs-physical moment discrepancy over orders l = 0..5 is carried
// by the two lowest complex support nodes
CheckRecord check_support_node_fit() {
    QuadratureSpec quad;
    double worst = 0.0;
    bool nodes_complex = true;
    for (double gamma : {1.0, 3.0}) {
        CouplingConfig cfg;
        cfg.gamma = gamma;
        HKernel kernel{HKernel::Kind::Holst, gamma};
        const auto profile = [](const Jet& u) { return scalar_generating_profile(u); };

        std::vector<Complex> full(6), phys(6);
        for (int l = 0; l < 6; ++l) {
            full[l] = jet_factor(2 * l + 2, kernel, profile);
            phys[l] = physical_moment(l, 0, cfg, quad);
        }

        SupportSet nodes = support_points(0, gamma);
        SupportSet extra = support_points(1, gamma);
        nodes.nodes.insert(nodes.nodes.end(), extra.nodes.begin(), extra.nodes.end());
        for (const SupportNode& nd : nodes.nodes)
            nodes_complex = nodes_complex && std::abs(nd.value.imag()) > 0.0;

        const NodeFitResult fit = residual_node_fit(full, phys, nodes);
        worst = std::max(worst, fit.relative_residual);
    }
    CheckRecord r = abs_check("support-node-fit", "least-squares-node-basis",
                              0.0, worst, 1e-5);
    r.note = "j = 0, gamma in {1, 3}, orders l = 0..5, nodes 4n^2(1+i/gamma)^-2";
    if (!nodes_complex) {
        r.pass = false;
        r.note += "; a node lost its imaginary part";
    }
    return r;
}

// 9: exponential suppression of the scalar factor: monotone decay with
// log-slope -pi/2 at gamma = 1, plus the small-area limit -i/(2 pi)
CheckRecord check_suppression() {
    CouplingConfig cfg;
    cfg.gamma = 1.0;
    double prev = std::numeric_limits<double>::infinity();
    bool monotone = true;
    double sv = 0.0, sy = 0.0, svv = 0.0, svy = 0.0;
    int count = 0;
    for (double v = 5.0; v <= 40.0 + 1e-9; v += 0.5) {
        const double mag = std::abs(n_scalar(Complex(v, 0.0), 0, cfg));
        monotone = monotone && mag < prev;
        prev = mag;
        const double y = std::log(mag);
        sv += v;
        sy += y;
        svv += v * v;
        svy += v * y;
        ++count;
    }
    const double slope = (count * svy - sv * sy) / (count * svv - sv * sv);
    CheckRecord r = rel_check("suppression-decay", "log-slope-fit",
                              -kPi / 2.0, slope, 0.05);
    r.note = "fitted d ln|N_0|/dv over v in [5, 40] at gamma = 1";

    const Complex small = n_scalar(Complex(1e-8, 0.0), 0, cfg);
    const double small_dev = std::abs(small - Complex(0.0, -1.0 / (2.0 * kPi)));
    r.note += "; small-v limit vs -i/(2 pi): abs dev " + fmt(small_dev);
    if (small_dev >= 1e-12) r.pass = false;
    if (!monotone) {
        r.pass = false;
        r.note += "; not monotone";
    }
    return r;
}

// 10: total mass of the rotation-vector chart density over the unit ball
CheckRecord check_chart_mass() {
    QuadratureSpec spec;
    spec.rel_tol = 1e-11;
    const IntegralResult res =
        integrate_ball([](const Vec3& r) { return Complex(haar_density(r), 0.0); }, spec);
    CheckRecord r = abs_check("chart-mass", "ball-quadrature",
                              (kPi - 2.0) / (4.0 * kPi), res.value, 1e-8);
    if (!res.converged()) {
        r.pass = false;
        r.note = "quadrature did not converge";
    }
    return r;
}

// 11: the action vanishes on flat curvature and stays real on conjugate-
// paired random physical data, within a wall-clock budget
CheckRecord check_action_sanity() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937_64 rng(90210347);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    const LeafComplex3 leaf{{0, 1, 2, 3}, {{{0, 1, 2, 3}}}};
    const SimplicialComplex4 cx = build_prism_complex(leaf, 2);
    CouplingConfig cfg;

    const auto random_axis = [&] {
        for (;;) {
            const Vec3 n{uni(rng), uni(rng), uni(rng)};
            const double len = std::sqrt(n.x * n.x + n.y * n.y + n.z * n.z);
            if (len > 0.1) return Vec3{n.x / len, n.y / len, n.z / len};
        }
    };
    const auto random_area = [&] {
        for (;;) {
            FourVector l1, l2;
            for (int i = 0; i < 4; ++i) {
                l1(i) = uni(rng);
                l2(i) = uni(rng);
            }
            const AreaBivector bv = bivector_split(l1, l2);
            const double scale = std::norm(bv.plus_v.x) + std::norm(bv.plus_v.y) +
                                 std::norm(bv.plus_v.z);
            if (scale > 0.05 && std::abs(bv.plus_v.dot(bv.plus_v)) > 1e-3 * scale)
                return bv;
        }
    };

    std::map<int, AreaBivector> areas;
    std::map<int, So3cMatrix> curv;
    for (int t : {0, 1, 2}) {
        areas[t] = random_area();
        curv[t] = So3cMatrix::Identity();
    }
    const bool flat_zero = std::abs(action(cx, areas, curv, cfg)) == 0.0;

    double worst = 0.0;
    for (int rep = 0; rep < 50; ++rep) {
        areas.clear();
        curv.clear();
        const int nt = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < nt; ++t) {
            areas[t] = random_area();
            const LorentzMatrix g = lorentz_rotation(random_axis(), 3.0 * uni(rng)) *
                                    lorentz_boost(random_axis(), std::abs(uni(rng))) *
                                    lorentz_rotation(random_axis(), 3.0 * uni(rng));
            curv[t] = lorentz_selfdual_split(g).plus_R;
        }
        worst = std::max(worst, std::abs(action(cx, areas, curv, cfg).imag()));
    }
    CheckRecord r = abs_check("action-sanity", "conjugation-reality", 0.0, worst, 1e-10);
    r.note = "worst |Im S| over 50 random physical configurations, fixed seed";
    if (!flat_zero) {
        r.pass = false;
        r.note += "; flat connection gave nonzero action";
    }
    if (seconds_since(t0) > 5.0) {
        r.pass = false;
        r.note += "; over the 5 s budget";
    }
    return r;
}

using CheckFn = CheckRecord (*)();

struct SuiteEntry {
    const char* suite;
    CheckFn fn;
};

// acceptance order is fixed; suites pick subsets of it
constexpr SuiteEntry kChecks[] = {
    {"integrals", check_model_grid},
    {"integrals", check_model_asymptotic},
    {"identities", check_binomial_identities},
    {"integrals", check_table_integral},
    {"integrals", check_radial_transform},
    {"identities", check_tensor_structure},
    {"moments", check_moment_cross_path},
    {"moments", check_support_node_fit},
    {"integrals", check_suppression},
    {"integrals", check_chart_mass},
    {"action", check_action_sanity},
};

}  // namespace

std::vector<std::string> verify_suites() {
    return {"all", "identities", "integrals", "moments", "action"};
}

std::vector<CheckRecord> run_acceptance(const std::string& suite) {
    const auto names = verify_suites();
    if (std::find(names.begin(), names.end(), suite) == names.end())
        throw std::invalid_argument("run_acceptance: unknown suite '" + suite + "'");
    std::vector<CheckRecord> out;
    for (const SuiteEntry& entry : kChecks)
        if (suite == "all" || suite == entry.suite) out.push_back(entry.fn());
    return out;
}

}  // namespace conint
