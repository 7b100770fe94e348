#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mproots/bench.hpp"

using namespace mproots;

namespace {

std::string json_scalar_to_string(const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

RunSpec spec_from_config(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw std::runtime_error("cannot open config file: " + path);
    nlohmann::json j = nlohmann::json::parse(in);

    RunSpec spec;
    if (j.contains("methods")) spec.methods = j["methods"].get<std::vector<std::string>>();
    if (j.contains("problems")) spec.problems = j["problems"].get<std::vector<std::string>>();
    if (j.contains("budget")) spec.budget = j["budget"].get<long>();
    if (j.contains("digits")) spec.digits = j["digits"].get<long>();
    if (j.contains("kappa")) spec.kappa = json_scalar_to_string(j["kappa"]);
    if (j.contains("beta")) spec.beta = json_scalar_to_string(j["beta"]);
    if (j.contains("omega")) spec.omega = json_scalar_to_string(j["omega"]);
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arbitrary-precision derivative-free root-finding benchmarks"};

    std::vector<std::string> methods, problems;
    long budget = 0, digits = 0;
    std::string kappa, beta, omega, format = "md", out_path, config_path;

    app.add_option("--method", methods,
                   "Method id, repeatable: L1..L8, KT, M1..M3, P1, P2, Steffensen, Newton");
    app.add_option("--problem", problems, "Problem id f1..f13, repeatable, or \"all\"");
    app.add_option("--budget", budget, "Function-evaluation budget per cell (default 12)");
    app.add_option("--digits", digits, "Working precision in decimal digits (default 2048)");
    app.add_option("--kappa", kappa, "Probe scale of the family and Steffensen (default 0.01)");
    app.add_option("--beta", beta, "Probe scale of the comparator methods (default 0.01)");
    app.add_option("--omega", omega, "Family weight parameter override");
    app.add_option("--format", format, "Output format: md, csv or json")
        ->check(CLI::IsMember({"md", "csv", "json"}));
    app.add_option("--out", out_path, "Write the report to this path instead of stdout");
    app.add_option("--config", config_path, "JSON config file; flags override its values");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunSpec spec;
        if (!config_path.empty()) spec = spec_from_config(config_path);
        if (!methods.empty()) spec.methods = methods;
        if (!problems.empty()) spec.problems = problems;
        if (app.count("--budget")) spec.budget = budget;
        if (app.count("--digits")) spec.digits = digits;
        if (app.count("--kappa")) spec.kappa = kappa;
        if (app.count("--beta")) spec.beta = beta;
        if (app.count("--omega")) spec.omega = omega;

        BenchmarkReport report = run_benchmark(spec);
        std::string text = render_report(report, *parse_format(format));

        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(out_path);
            if (!out.good()) throw std::runtime_error("cannot write: " + out_path);
            out << text;
        }

        for (const BenchCell& c : report.cells)
            if (c.status == TraceStatus::Degenerate) return 2;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
