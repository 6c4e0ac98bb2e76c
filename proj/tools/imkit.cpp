// imkit: classify quantum operations as imaginarity-free, compute imaginarity
// measures, and reproduce the built-in qubit-gate reference values.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "imkit/gates.hpp"
#include "imkit/imaginarity.hpp"
#include "imkit/json_io.hpp"
#include "imkit/measures.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInputError = 2;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

int cmd_check(const std::string& path) {
    nlohmann::json j = imkit::load_json_file(path);
    if (j.is_object() && j.contains("elements")) {
        imkit::Povm povm = imkit::povm_from_json(j);
        bool free = imkit::is_free_povm(povm);
        std::cout << "type: povm\nfree: " << (free ? "true" : "false") << "\n";
        return free ? kExitOk : kExitNegative;
    }
    imkit::KrausOperation op = imkit::operation_from_json(j);
    imkit::FreenessReport report = imkit::classify_freeness(op);
    std::cout << "type: operation\n"
              << "free: " << (report.isFree ? "true" : "false") << "\n"
              << "rko: " << (report.isRko ? "true" : "false") << "\n"
              << "max imag coefficient: " << fmt("%.12g", report.maxImagCoefficient)
              << "\n";
    if (report.witnessIndex) {
        auto w = *report.witnessIndex;
        std::cout << "witness index (i,j,k,l): (" << w.i << "," << w.j << "," << w.k
                  << "," << w.l << ")\n";
    }
    return report.isFree ? kExitOk : kExitNegative;
}

int cmd_measure(const std::string& path, const std::string& which, double p,
                const imkit::OptimizerConfig& cfg) {
    imkit::KrausOperation op =
        imkit::operation_from_json(imkit::load_json_file(path));
    imkit::MeasureReport report;
    if (which == "mdc")
        report = imkit::m_dc(op, p, cfg);
    else if (which == "mc-upper")
        report = imkit::m_c_upper(op, p, cfg);
    else if (which == "md-upper")
        report = imkit::m_d_upper(op, p, cfg);
    else
        throw CLI::ValidationError("--measure must be mdc, mc-upper, or md-upper");
    std::cout << "measure: " << which << "\n"
              << "p: " << fmt("%.12g", p) << "\n"
              << "method: " << imkit::method_name(report.method) << "\n"
              << "value: " << fmt("%.9f", report.value) << "\n";
    if (report.achieverState) {
        std::cout << "achiever state:";
        for (int i = 0; i < report.achieverState->dim(); ++i) {
            auto a = report.achieverState->amplitudes()[i];
            std::cout << " " << fmt("%.9f", a.real()) << (a.imag() < 0 ? "-" : "+")
                      << fmt("%.9f", std::abs(a.imag())) << "i";
        }
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_weight(const std::string& path, bool emitDecomposition,
               const std::string& outPath) {
    imkit::KrausOperation op =
        imkit::operation_from_json(imkit::load_json_file(path));
    if (!op.is_channel()) {
        std::cerr << "error: weight requires a trace-preserving channel; "
                     "sum K†K differs from the identity for this input\n";
        return kExitNegative;
    }
    auto [s, decomposition] = imkit::weight_of_imaginarity(op);
    std::cout << "weight: " << fmt("%.6f", s) << "\n";
    if (emitDecomposition) {
        std::string sidecar = outPath.empty() ? path + ".decomposition.json" : outPath;
        nlohmann::json out = {
            {"s", decomposition.s},
            {"free_part", imkit::choi_to_json(decomposition.freePart)},
            {"residual_part", imkit::choi_to_json(decomposition.residualPart)},
        };
        std::ofstream f(sidecar);
        if (!f) {
            std::cerr << "error: cannot write " << sidecar << "\n";
            return kExitInputError;
        }
        f << out.dump(2) << "\n";
        std::cout << "decomposition: " << sidecar << "\n";
    }
    return kExitOk;
}

struct TableRow {
    std::string gate;
    double theta, phi;
    double expectedValue;
};

int cmd_verify_table(const imkit::OptimizerConfig& cfg) {
    const double pi = M_PI;
    std::vector<TableRow> rows = {
        {"sigma_y", pi, pi / 2, 0.0},
        {"sigma_z", 0.0, pi / 2, 0.0},
        {"S", 0.0, 0.0, 1.0},
        {"T", 0.0, -pi / 4, std::sqrt(2.0) / 2.0},
    };
    for (double alpha : {pi / 6, pi / 4, pi / 3, pi / 2}) {
        rows.push_back({"Rx(" + fmt("%.6f", alpha) + ")", alpha, -pi / 2,
                        std::abs(std::sin(alpha))});
        rows.push_back({"Rz(" + fmt("%.6f", alpha) + "-pi/2)", 0.0, alpha - pi / 2,
                        std::abs(std::sin(alpha))});
    }

    std::vector<std::string> lines(rows.size());
    std::vector<bool> ok(rows.size());
    imkit::parallel_for(int(rows.size()), [&](int n) {
        const TableRow& row = rows[n];
        imkit::QubitUnitaryParams params{row.theta, row.phi, pi / 2};
        double analytic = imkit::m_dc_qubit_unitary_analytic(params);
        double numeric =
            imkit::m_dc(imkit::conjugation(params.matrix()), 1.0, cfg).value;
        double dAnalytic = std::abs(analytic - row.expectedValue);
        double dNumeric = std::abs(numeric - row.expectedValue);
        ok[n] = dAnalytic <= 1e-12 && dNumeric <= 1e-5;
        lines[n] = row.gate + ": expected " + fmt("%.12f", row.expectedValue) +
                   " analytic " + fmt("%.12f", analytic) + " numeric " +
                   fmt("%.12f", numeric) + " |d_analytic| " + fmt("%.3g", dAnalytic) +
                   " |d_numeric| " + fmt("%.3g", dNumeric) +
                   (ok[n] ? " PASS" : " FAIL");
    });
    bool all = true;
    for (std::size_t n = 0; n < rows.size(); ++n) {
        std::cout << lines[n] << "\n";
        all = all && ok[n];
    }
    std::cout << (all ? "verify-table: PASS" : "verify-table: FAIL") << "\n";
    return all ? kExitOk : kExitNegative;
}

int cmd_sweep(int thetaSteps, int phiSteps, double lambda, const std::string& out) {
    if (thetaSteps < 2 || phiSteps < 2) {
        std::cerr << "error: sweep needs at least 2 steps per axis\n";
        return kExitInputError;
    }
    std::ofstream f(out, std::ios::binary);  // LF line endings on every platform
    if (!f) {
        std::cerr << "error: cannot write " << out << "\n";
        return kExitInputError;
    }
    const double twoPi = 2.0 * M_PI;
    const bool halfPi = std::abs(lambda - M_PI / 2) <= 1e-15;
    f << "theta,phi,mdc_analytic\n";
    for (int ti = 0; ti < thetaSteps; ++ti) {
        double theta = twoPi * ti / (thetaSteps - 1);
        for (int pj = 0; pj < phiSteps; ++pj) {
            double phi = twoPi * pj / (phiSteps - 1);
            double value = halfPi
                               ? imkit::m_dc_qubit_unitary_lambda_half_pi(theta, phi)
                               : imkit::m_dc_qubit_unitary_analytic({theta, phi, lambda});
            f << fmt("%.12g", theta) << "," << fmt("%.12g", phi) << ","
              << fmt("%.12g", value) << "\n";
        }
    }
    std::cout << "wrote " << thetaSteps * phiSteps << " rows to " << out << "\n";
    return kExitOk;
}

int cmd_fixtures(const std::string& exportDir) {
    bool all = true;
    auto record = [&](const std::string& name, bool pass, const std::string& detail) {
        all = all && pass;
        std::cout << name << ": " << detail << (pass ? " PASS" : " FAIL") << "\n";
    };

    auto [witness, minEig] = imkit::deimaginarity_noncp_witness();
    record("deimaginarity non-CP witness", minEig < 0.0,
           "min eigenvalue " + fmt("%.6f", minEig) + " < 0:");

    imkit::KrausOperation tilde = imkit::fixtures::free_with_complex_kraus();
    imkit::FreenessReport report = imkit::classify_freeness(tilde);
    record("free operation with complex Kraus list", report.isFree && !report.isRko,
           std::string("free ") + (report.isFree ? "true" : "false") + ", rko " +
               (report.isRko ? "true" : "false") + ":");

    std::vector<imkit::KrausOperation> ops = {
        imkit::conjugation(imkit::gates::s_gate()),
        imkit::conjugation(imkit::gates::t_gate()),
        imkit::conjugation(imkit::gates::sigma_y()),
    };
    std::vector<imkit::KrausOperation> freeOps = {
        imkit::conjugation(imkit::gates::identity2()),
        imkit::conjugation(imkit::gates::sigma_x()),
    };
    imkit::AxiomSuiteReport axioms = imkit::measure_axiom_suite(ops, freeOps);
    record("measure axioms (faithfulness/monotonicity/convexity)", axioms.all_pass(),
           "worst slack " +
               fmt("%.3g", std::max({axioms.monotonicityMdc.worstSlack,
                                     axioms.convexityMdc.worstSlack,
                                     axioms.monotonicityWeight.worstSlack,
                                     axioms.convexityWeight.worstSlack})) +
               ":");

    std::vector<std::pair<imkit::KrausOperation, imkit::KrausOperation>> pairs = {
        {ops[0], freeOps[1]},
        {imkit::mix({freeOps[0], ops[0]}, {0.7, 0.3}),
         imkit::mix({freeOps[0], ops[0]}, {0.7, 0.3})},
    };
    imkit::InequalityReport ineq = imkit::weight_inequality_suite(pairs);
    record("weight composition/tensor inequalities", ineq.pass,
           "worst slack " + fmt("%.3g", ineq.worstSlack) + ":");

    if (!exportDir.empty()) {
        auto dump = [&](const std::string& name, const nlohmann::json& j) {
            std::string p = exportDir + "/" + name;
            std::ofstream f(p);
            if (!f)
                throw std::runtime_error("cannot write " + p);
            f << j.dump(2) << "\n";
        };
        dump("free_with_complex_kraus.json", imkit::operation_to_json(tilde));
        dump("s_gate.json",
             imkit::operation_to_json(imkit::conjugation(imkit::gates::s_gate())));
        dump("t_gate.json",
             imkit::operation_to_json(imkit::conjugation(imkit::gates::t_gate())));
        dump("sigma_y.json",
             imkit::operation_to_json(imkit::conjugation(imkit::gates::sigma_y())));
        dump("mixture_0p3.json",
             imkit::operation_to_json(imkit::mix(
                 {imkit::conjugation(imkit::gates::identity2()),
                  imkit::conjugation(imkit::gates::s_gate())},
                 {0.7, 0.3})));
        dump("noncp_witness.json",
             nlohmann::json{{"dim", 4}, {"matrix", imkit::matrix_to_json(witness)}});
        std::cout << "exported fixtures to " << exportDir << "\n";
    }
    return all ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"imaginarity of quantum operations: freeness checks and measures"};
    app.require_subcommand(1);

    imkit::OptimizerConfig cfg;
    double p = 1.0;
    std::string inputPath, measureName = "mdc", outPath, exportDir;
    bool emitDecomposition = false;
    int thetaSteps = 20, phiSteps = 20;
    double lambda = M_PI / 2;

    auto* check = app.add_subcommand("check", "classify an operation or POVM as free");
    check->add_option("input", inputPath, "operation or POVM JSON file")->required();

    auto* measure = app.add_subcommand("measure", "compute an imaginarity measure");
    measure->add_option("input", inputPath, "operation JSON file")->required();
    measure->add_option("--measure", measureName, "mdc | mc-upper | md-upper");
    measure->add_option("--p", p, "Schatten exponent (>= 1)");
    measure->add_option("--seed", cfg.seed, "optimizer seed");
    measure->add_option("--restarts", cfg.restarts, "optimizer restarts");

    auto* weight = app.add_subcommand("weight", "weight of imaginarity of a channel");
    weight->add_option("input", inputPath, "channel JSON file")->required();
    weight->add_flag("--emit-decomposition", emitDecomposition,
                     "write the free/residual Choi parts to a sidecar JSON");
    weight->add_option("--out", outPath, "sidecar path (default <input>.decomposition.json)");

    auto* verify = app.add_subcommand("verify-table",
                                      "check the built-in gate table analytically and numerically");
    verify->add_option("--seed", cfg.seed, "optimizer seed");
    verify->add_option("--restarts", cfg.restarts, "optimizer restarts");

    auto* sweep = app.add_subcommand("sweep", "emit the qubit-unitary measure surface as CSV");
    sweep->add_option("--theta-steps", thetaSteps, "grid points along theta (>= 2)");
    sweep->add_option("--phi-steps", phiSteps, "grid points along phi (>= 2)");
    sweep->add_option("--lambda", lambda, "fixed lambda angle (default pi/2)");
    sweep->add_option("--out", outPath, "output CSV path")->required();

    auto* fixtures = app.add_subcommand("fixtures", "run the built-in fixture checks");
    fixtures->add_option("--export", exportDir, "directory to export fixture JSON files");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed())
            return cmd_check(inputPath);
        if (measure->parsed())
            return cmd_measure(inputPath, measureName, p, cfg);
        if (weight->parsed())
            return cmd_weight(inputPath, emitDecomposition, outPath);
        if (verify->parsed())
            return cmd_verify_table(cfg);
        if (sweep->parsed())
            return cmd_sweep(thetaSteps, phiSteps, lambda, outPath);
        if (fixtures->parsed())
            return cmd_fixtures(exportDir);
    } catch (const CLI::ValidationError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
