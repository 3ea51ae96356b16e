// Command-line front end: evaluate Hankel polynomials, test the strong and
// necessary PSD conditions, search for PSD counterexamples, compute
// Vandermonde decompositions and power moments, run the completion solver,
// and write the bundled fixture corpus.
//
// Exit codes: 0 success / PASS verdict, 1 FAIL verdict, 2 usage or input error.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel/completion.hpp"
#include "hankel/errors.hpp"
#include "hankel/fixtures.hpp"
#include "hankel/hankel_core.hpp"
#include "hankel/json_io.hpp"
#include "hankel/psd_toolkit.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << std::endl; }

std::vector<double> parse_point(const std::string& text) {
    std::vector<double> point;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t used = 0;
        point.push_back(std::stod(item, &used));
        if (used != item.size()) throw hankel::InvalidInput("bad coordinate: " + item);
    }
    if (point.empty()) throw hankel::InvalidInput("empty point");
    return point;
}

double default_gv_tol(const hankel::GeneratingVector& gv) {
    double scale = 0.0;
    for (double x : gv.v) scale = std::max(scale, std::fabs(x));
    return 1e-9 * (1.0 + scale);
}

hankel::GeneratingVector load_gv(const std::string& path) {
    return hankel::gv_from_json(hankel::load_json_file(path));
}

hankel::SymmetricTensor load_tensor(const std::string& path) {
    double asymmetry = 0.0;
    hankel::SymmetricTensor t =
        hankel::tensor_from_json(hankel::load_json_file(path), &asymmetry);
    if (asymmetry > 1e-6)
        std::cerr << "warning: input entries disagree across index orbits by " << asymmetry
                  << "; orbit averages were used\n";
    return t;
}

struct CompleteOptions {
    std::string input;
    hankel::CompletionConfig config;
    int iterations = 0;  // > 0 selects a fixed budget
    std::string fit = "tensor";
};

int run_complete(const CompleteOptions& opt) {
    hankel::CompletionConfig config = opt.config;
    if (opt.fit == "matrix") {
        config.fit = hankel::FitObjective::hankelized_matrix;
    } else if (opt.fit != "tensor") {
        throw hankel::InvalidInput("--fit must be 'tensor' or 'matrix'");
    }
    if (opt.iterations > 0) config.fixed_iterations = opt.iterations;

    const hankel::SymmetricTensor x = load_tensor(opt.input);
    try {
        const hankel::CompletionResult result = hankel::solve_tcp(x, config);
        emit(hankel::completion_result_to_json(result));
        return kExitPass;
    } catch (const hankel::NonConvergence& e) {
        emit(hankel::completion_result_to_json(e.result));
        std::cerr << e.what() << '\n';
        return kExitFail;
    }
}

int run_fixtures(const std::string& out_dir) {
    using nlohmann::json;
    const auto path = [&](const std::string& name) { return out_dir + "/" + name; };

    json manifest = json::array();
    const auto write = [&](const std::string& name, const json& j) {
        hankel::save_json_file(path(name), j);
        manifest.push_back(name);
    };

    write("example1.json", hankel::tensor_to_json(hankel::fixtures::rank1_demo_tensor()));
    write("example2.json", hankel::tensor_to_json(hankel::fixtures::rank2_demo_tensor()));
    for (int k = 2; k <= 6; ++k)
        write("sos_k" + std::to_string(k) + ".json",
              hankel::gv_to_json(hankel::sos_family_n2(k)));
    const double alpha_crit = 480.0 * std::sqrt(15.0) + 10.0;
    write("sextic_alpha0.json", hankel::gv_to_json(hankel::sextic_family_n3(0.0)));
    write("sextic_alpha10.json", hankel::gv_to_json(hankel::sextic_family_n3(10.0)));
    write("sextic_alpha_crit.json", hankel::gv_to_json(hankel::sextic_family_n3(alpha_crit)));

    emit(json{{"directory", out_dir}, {"files", manifest}});
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hankel tensor toolkit"};
    app.require_subcommand(1);

    // eval
    std::string eval_gv_path, eval_point;
    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate the Hankel polynomial at a point");
    eval_cmd->add_option("--gv", eval_gv_path, "generating-vector JSON file")->required();
    eval_cmd->add_option("--point", eval_point, "comma-separated coordinates")->required();

    // check-strong
    std::string strong_gv_path;
    double strong_tol = -1.0;
    std::optional<double> strong_tail;
    CLI::App* strong_cmd =
        app.add_subcommand("check-strong", "test the associated Hankel matrix for PSD");
    strong_cmd->add_option("--gv", strong_gv_path)->required();
    strong_cmd->add_option("--tol", strong_tol, "eigenvalue tolerance (default scale-aware)");
    strong_cmd->add_option("--tail", strong_tail,
                           "fix the free tail entry instead of optimizing it");

    // check-necessary
    std::string nec_gv_path;
    double nec_tol = -1.0;
    CLI::App* nec_cmd =
        app.add_subcommand("check-necessary", "univariate necessary condition for PSD");
    nec_cmd->add_option("--gv", nec_gv_path)->required();
    nec_cmd->add_option("--tol", nec_tol);

    // falsify
    std::string falsify_gv_path;
    int falsify_samples = 1000;
    std::uint64_t falsify_seed = 0;
    double falsify_tol = -1.0;
    CLI::App* falsify_cmd = app.add_subcommand("falsify", "search for a PSD counterexample");
    falsify_cmd->add_option("--gv", falsify_gv_path)->required();
    falsify_cmd->add_option("--samples", falsify_samples);
    falsify_cmd->add_option("--seed", falsify_seed);
    falsify_cmd->add_option("--tol", falsify_tol);

    // vandermonde
    std::string vand_gv_path, vand_nodes = "chebyshev";
    CLI::App* vand_cmd = app.add_subcommand("vandermonde", "decompose into Vandermonde powers");
    vand_cmd->add_option("--gv", vand_gv_path)->required();
    vand_cmd->add_option("--nodes", vand_nodes, "chebyshev | file:<path with JSON array>");

    // moments
    std::string moments_input;
    int moments_order = 0, moments_dim = 0;
    CLI::App* moments_cmd =
        app.add_subcommand("moments", "power moments of a sampled generating function");
    moments_cmd->add_option("--input", moments_input, "sampled-function JSON file")->required();
    moments_cmd->add_option("--order", moments_order)->required();
    moments_cmd->add_option("--dim", moments_dim)->required();

    // complete
    CompleteOptions complete_opt;
    double complete_tol = -1.0;
    CLI::App* complete_cmd = app.add_subcommand("complete", "PSD Hankel tensor completion");
    complete_cmd->add_option("--input", complete_opt.input, "tensor JSON file")->required();
    complete_cmd->add_option("--mu", complete_opt.config.mu);
    complete_cmd->add_option("--rho", complete_opt.config.rho);
    complete_cmd->add_option("--tol", complete_tol, "primal and dual stopping tolerance");
    complete_cmd->add_option("--max-iter", complete_opt.config.max_iter);
    complete_cmd->add_option("--rank-threshold", complete_opt.config.rank_threshold);
    complete_cmd->add_option("--fit", complete_opt.fit, "tensor (default) | matrix");
    complete_cmd->add_option("--iterations", complete_opt.iterations,
                             "run exactly this many iterations instead of testing residuals");

    // fixtures
    std::string fixtures_dir = ".";
    CLI::App* fixtures_cmd = app.add_subcommand("fixtures", "write the bundled example corpus");
    fixtures_cmd->add_option("--out-dir", fixtures_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval_cmd) {
            const hankel::GeneratingVector gv = load_gv(eval_gv_path);
            const std::vector<double> x = parse_point(eval_point);
            emit({{"value", hankel::hankel_eval(gv, x)}});
            return kExitPass;
        }
        if (*strong_cmd) {
            const hankel::GeneratingVector gv = load_gv(strong_gv_path);
            const double tol = strong_tol >= 0.0 ? strong_tol : default_gv_tol(gv);
            hankel::StrongHankelReport report{};
            if (strong_tail) {
                const auto matrix = hankel::associated_hankel_matrix(gv, strong_tail);
                const double lam = hankel::sym_eig(matrix.to_sym_matrix()).eigenvalues.front();
                report = {lam >= -tol, lam, strong_tail};
            } else {
                report = hankel::is_strong_hankel(gv, tol);
            }
            emit(hankel::strong_report_to_json(report));
            return report.verdict ? kExitPass : kExitFail;
        }
        if (*nec_cmd) {
            const hankel::GeneratingVector gv = load_gv(nec_gv_path);
            const hankel::PsdVerdict verdict = nec_tol >= 0.0
                                                   ? hankel::necessary_condition(gv, nec_tol)
                                                   : hankel::necessary_condition(gv);
            emit(hankel::verdict_to_json(verdict));
            return verdict.status == hankel::PsdStatus::pass ? kExitPass : kExitFail;
        }
        if (*falsify_cmd) {
            const hankel::GeneratingVector gv = load_gv(falsify_gv_path);
            const hankel::PsdVerdict verdict =
                falsify_tol >= 0.0
                    ? hankel::falsify_psd(gv, falsify_samples, falsify_seed, falsify_tol)
                    : hankel::falsify_psd(gv, falsify_samples, falsify_seed);
            emit(hankel::verdict_to_json(verdict));
            return verdict.status == hankel::PsdStatus::pass ? kExitPass : kExitFail;
        }
        if (*vand_cmd) {
            const hankel::GeneratingVector gv = load_gv(vand_gv_path);
            std::optional<std::vector<double>> nodes;
            if (vand_nodes.rfind("file:", 0) == 0) {
                nodes = hankel::load_json_file(vand_nodes.substr(5)).get<std::vector<double>>();
            } else if (vand_nodes != "chebyshev") {
                throw hankel::InvalidInput("--nodes must be 'chebyshev' or 'file:<path>'");
            }
            emit(hankel::decomposition_to_json(hankel::vandermonde_decompose(gv, nodes)));
            return kExitPass;
        }
        if (*moments_cmd) {
            const auto h = hankel::sampled_from_json(hankel::load_json_file(moments_input));
            emit(hankel::gv_to_json(hankel::moments_from_samples(h, moments_order, moments_dim)));
            return kExitPass;
        }
        if (*complete_cmd) {
            if (complete_tol >= 0.0) {
                complete_opt.config.tol_primal = complete_tol;
                complete_opt.config.tol_dual = complete_tol;
            }
            return run_complete(complete_opt);
        }
        if (*fixtures_cmd) return run_fixtures(fixtures_dir);
    } catch (const hankel::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
