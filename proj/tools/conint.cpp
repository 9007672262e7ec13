#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "conint/basic_integrals.hpp"
#include "conint/haar_so3.hpp"
#include "conint/model_integral.hpp"
#include "conint/moment_engine.hpp"
#include "conint/report.hpp"
#include "conint/simplicial.hpp"
#include "conint/verify.hpp"

using namespace conint;

namespace {

// "re" or "re:im" per component, comma separated
ComplexVec3 parse_cvec(const std::string& text) {
    std::vector<Complex> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) {
            parts.emplace_back(std::stod(item), 0.0);
        } else {
            parts.emplace_back(std::stod(item.substr(0, colon)),
                               std::stod(item.substr(colon + 1)));
        }
    }
    if (parts.size() != 3)
        throw std::invalid_argument("expected three comma-separated components");
    return {parts[0], parts[1], parts[2]};
}

MultiIndex parse_indices(const std::string& text) {
    MultiIndex out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    for (int a : out)
        if (a < 0 || a > 2)
            throw std::invalid_argument("tensor indices must lie in {0, 1, 2}");
    return out;
}

// connection and per-triangle data for the action evaluator.  Lines:
//   tetra <index> <wx_re> <wx_im> <wy_re> <wy_im> <wz_re> <wz_im>
//   triangle <index> <k> <t_1> ... <t_k> <l1: 4 floats> <l2: 4 floats>
// The tetra rotation vector w exponentiates to its connection; a triangle's
// curvature is the holonomy along its k >= 2 listed tetrahedra.
struct ActionData {
    ConnectionAssignment assign;
    struct Tri {
        std::vector<int> chain;
        FourVector l1, l2;
    };
    std::map<int, Tri> triangles;
};

ActionData read_action_data(std::istream& in) {
    ActionData data;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kind;
        if (!(ls >> kind)) continue;
        const auto fail = [&](const std::string& what) {
            throw std::invalid_argument("data line " + std::to_string(lineno) + ": " + what);
        };
        if (kind == "tetra") {
            int idx;
            double w[6];
            if (!(ls >> idx >> w[0] >> w[1] >> w[2] >> w[3] >> w[4] >> w[5]))
                fail("expected: tetra <index> <6 floats>");
            const ComplexVec3 axis{Complex(w[0], w[1]), Complex(w[2], w[3]),
                                   Complex(w[4], w[5])};
            if (!data.assign.omega.emplace(idx, so3c_exp(axis)).second)
                fail("duplicate tetra index");
        } else if (kind == "triangle") {
            int idx, k;
            if (!(ls >> idx >> k) || k < 2)
                fail("expected: triangle <index> <k >= 2> <k tetra> <8 floats>");
            ActionData::Tri tri;
            tri.chain.resize(k);
            for (int& t : tri.chain)
                if (!(ls >> t)) fail("short tetra chain");
            for (int i = 0; i < 4; ++i)
                if (!(ls >> tri.l1(i))) fail("short first edge vector");
            for (int i = 0; i < 4; ++i)
                if (!(ls >> tri.l2(i))) fail("short second edge vector");
            if (!data.triangles.emplace(idx, tri).second) fail("duplicate triangle index");
        } else {
            fail("unknown keyword '" + kind + "'");
        }
        std::string extra;
        if (ls >> extra) fail("trailing content '" + extra + "'");
    }
    if (data.triangles.empty()) throw std::invalid_argument("data file lists no triangles");
    return data;
}

int emit(RunReport& report, std::chrono::steady_clock::time_point t0, bool timing,
         const std::string& report_path) {
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const std::string text = render(report, timing);
    std::cout << text;
    std::string path = report_path;
    if (path.empty())
        if (const char* env = std::getenv("CONINT_REPORT")) path = env;
    if (!path.empty()) {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cannot open report path " + path);
        out << text;
    }
    return all_pass(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connection-integral toolkit: verification suites and single evaluations"};
    app.require_subcommand(1);
    // keep -h free: the table-integral frequency flag is named --h
    app.set_help_flag("--help", "print help");

    std::string report_path;
    bool timing = false;
    app.add_option("--report", report_path,
                   "also write the report to this file (or set CONINT_REPORT)");
    app.add_flag("--timing", timing, "append wall time (breaks byte determinism)");

    std::string suite = "all";
    auto* sub_verify = app.add_subcommand("verify", "run the acceptance checks");
    sub_verify->add_option("--suite", suite, "check group")
        ->check(CLI::IsMember(verify_suites()));

    double gamma = 1.0;
    bool euclidean = false;
    int rank_j = 0;
    std::string v_text = "0,0,0", alpha_text;
    auto* sub_basic = app.add_subcommand("basic-integral",
                                         "closed form of the basic connection integral");
    sub_basic->add_option("--j", rank_j, "tensor rank")->check(CLI::NonNegativeNumber);
    sub_basic->add_option("--gamma", gamma, "coupling parameter (default 1)");
    sub_basic->add_option("--v", v_text, "area vector, re[:im] triple (default 0,0,0)");
    sub_basic->add_option("--alpha", alpha_text, "component indices, e.g. 0,1 (default none)");
    sub_basic->add_flag("--euclidean", euclidean, "euclidean coupling");

    ModelParams model;
    auto* sub_model = app.add_subcommand("model-integral",
                                         "oscillatory model integral vs closed form");
    sub_model->add_option("--A", model.A, "area parameter (default 1)");
    sub_model->add_option("--lambda", model.lambda, "frequency ratio (default 0.5)");

    int mom_n = 0, mom_p = 0;
    auto* sub_moments = app.add_subcommand("moments",
                                           "scalar moment through both routes");
    sub_moments->add_option("--n", mom_n, "selfdual order")->check(CLI::NonNegativeNumber);
    sub_moments->add_option("--p", mom_p, "antiselfdual order")->check(CLI::NonNegativeNumber);

    int table_n = 1;
    double table_h = 0.7;
    auto* sub_table = app.add_subcommand("table-integral",
                                         "parity kernel integral vs closed form");
    sub_table->set_help_flag("--help", "print help");
    sub_table->add_option("--n", table_n, "pole order, n >= 1 (default 1)");
    sub_table->add_option("--h", table_h, "frequency, |h| < pi (default 0.7)");

    std::string complex_path, data_path;
    int leaves = 2;
    auto* sub_action = app.add_subcommand("action", "evaluate the action on a prism complex");
    sub_action->add_option("--complex", complex_path, "leaf complex file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_action->add_option("--data", data_path, "per-triangle and per-tetrahedron data file")
        ->required()
        ->check(CLI::ExistingFile);
    sub_action->add_option("--gamma", gamma, "coupling parameter (default 1)");
    sub_action->add_option("--leaves", leaves, "number of stacked leaves (default 2)");
    sub_action->add_flag("--euclidean", euclidean, "euclidean coupling");

    // let --report / --timing appear after the subcommand too
    for (CLI::App* s : {sub_verify, sub_basic, sub_model, sub_moments, sub_table, sub_action})
        s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const auto t0 = std::chrono::steady_clock::now();
    RunReport report;
    try {
        if (sub_verify->parsed()) {
            report.command = "verify";
            report.inputs.emplace_back("suite", suite);
            report.checks = run_acceptance(suite);
        } else if (sub_basic->parsed()) {
            report.command = "basic-integral";
            CouplingConfig cfg;
            cfg.gamma = gamma;
            cfg.euclidean = euclidean;
            const ComplexVec3 v = parse_cvec(v_text);
            const MultiIndex alpha = parse_indices(alpha_text);
            if (static_cast<int>(alpha.size()) != rank_j)
                throw std::invalid_argument("--alpha must list exactly j indices");
            const BasicIntegralValue val = basic_integral(v, alpha, cfg);
            report.inputs.emplace_back("j", std::to_string(rank_j));
            report.inputs.emplace_back("gamma", fmt(gamma));
            report.inputs.emplace_back("v", v_text);
            report.values.emplace_back("scalar", fmt(val.scalar));
            report.values.emplace_back("value", fmt(val.value));
        } else if (sub_model->parsed()) {
            report.command = "model-integral";
            model.spec.damping_schedule = {0.2, 0.1, 0.05, 0.025, 0.0125, 0.00625, 0.003125};
            const IntegralResult lhs = model_lhs(model);
            const Complex rhs = model_rhs(model);
            report.inputs.emplace_back("A", fmt(model.A));
            report.inputs.emplace_back("lambda", fmt(model.lambda));
            report.values.emplace_back("lhs", fmt(lhs.value));
            report.values.emplace_back("rhs", fmt(rhs));
            CheckRecord rec = rel_check("model-identity", "damped-quadrature-vs-series",
                                        rhs, lhs.value, 1e-4);
            if (!lhs.converged()) {
                rec.pass = false;
                rec.note = "quadrature did not converge";
            }
            report.checks.push_back(rec);
        } else if (sub_moments->parsed()) {
            report.command = "moments";
            QuadratureSpec quad;
            MomentSpec spec;
            spec.l = mom_n;
            spec.m = mom_p;
            const Complex meas = moment_via_measure(mom_n, mom_p, spec);
            const Complex jets = moment_via_jets(spec, quad);
            report.inputs.emplace_back("n", std::to_string(mom_n));
            report.inputs.emplace_back("p", std::to_string(mom_p));
            report.values.emplace_back("measure", fmt(meas));
            report.values.emplace_back("jets", fmt(jets));
            report.checks.push_back(
                rel_check("moment-cross-path", "taylor-measure-vs-jets", meas, jets, 1e-10));
        } else if (sub_table->parsed()) {
            report.command = "table-integral";
            QuadratureSpec quad;
            const TableIntegralPair pr = table_integral(table_h, table_n, quad);
            report.inputs.emplace_back("n", std::to_string(table_n));
            report.inputs.emplace_back("h", fmt(table_h));
            report.values.emplace_back("lhs", fmt(pr.lhs));
            report.values.emplace_back("rhs", fmt(pr.rhs));
            CheckRecord rec = abs_check("table-integral", "closed-form-vs-quadrature",
                                        pr.rhs, pr.lhs, 1e-8);
            if (!pr.detail.converged()) {
                rec.pass = false;
                rec.note = "quadrature did not converge";
            }
            report.checks.push_back(rec);
        } else if (sub_action->parsed()) {
            report.command = "action";
            CouplingConfig cfg;
            cfg.gamma = gamma;
            cfg.euclidean = euclidean;

            std::ifstream leaf_in(complex_path);
            const LeafComplex3 leaf = read_leaf(leaf_in);
            const SimplicialComplex4 cx = build_prism_complex(leaf, leaves);

            std::ifstream data_in(data_path);
            const ActionData data = read_action_data(data_in);
            validate_assignment(cx, data.assign);

            std::map<int, AreaBivector> areas;
            std::map<int, So3cMatrix> curvatures;
            for (const auto& [t, tri] : data.triangles) {
                areas[t] = bivector_split(tri.l1, tri.l2);
                curvatures[t] = holonomy(cx, data.assign, tri.chain);
            }
            const Complex s = action(cx, areas, curvatures, cfg);
            report.inputs.emplace_back("complex", complex_path);
            report.inputs.emplace_back("data", data_path);
            report.inputs.emplace_back("gamma", fmt(gamma));
            report.inputs.emplace_back("leaves", std::to_string(leaves));
            report.values.emplace_back("triangles", std::to_string(data.triangles.size()));
            report.values.emplace_back("f_set_size", std::to_string(f_set(cx).size()));
            report.values.emplace_back("action", fmt(s));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return emit(report, t0, timing, report_path);
}
