#include "mproots/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <map>
#include <sstream>

#include <json.hpp>

namespace mproots {

namespace {

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_error(const Real& e) { return e.is_zero() ? "0" : e.to_sci(3); }

std::string format_coc(const std::optional<Real>& c) {
    if (!c) return "";
    // truncated, not rounded: an order of 7.99998 reads 7.9999
    double v = std::trunc(c->to_double() * 1e4) / 1e4;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

}  // namespace

std::string to_string(TraceStatus s) {
    switch (s) {
        case TraceStatus::Completed:
            return "Completed";
        case TraceStatus::ConvergedExactly:
            return "ConvergedExactly";
        case TraceStatus::Degenerate:
            return "Degenerate";
    }
    return "?";
}

const std::vector<std::string>& method_ids() {
    static const std::vector<std::string> ids = {"L1", "L2", "L3", "L4", "L5", "L6", "L7", "L8",
                                                 "KT", "M1", "M2", "M3", "P1", "P2",
                                                 "Steffensen", "Newton"};
    return ids;
}

MethodConfig config_for_method(std::string_view name, const RunSpec& spec,
                               const PrecisionContext& ctx) {
    if (name.size() == 2 && name[0] == 'L') {
        MethodConfig cfg = make_named_config(name, ctx);
        cfg.kappa = parse_real(spec.kappa, ctx);
        if (spec.omega) cfg.omega = parse_real(*spec.omega, ctx);
        return cfg;
    }

    MethodConfig cfg;
    cfg.kappa = parse_real(spec.kappa, ctx);
    cfg.beta = parse_real(spec.beta, ctx);
    cfg.omega = parse_real(spec.omega ? *spec.omega : "0.01", ctx);

    if (name == "KT") cfg.scheme = Scheme::KungTraub;
    else if (name == "M1") cfg.scheme = Scheme::ThukralM1;
    else if (name == "M2") cfg.scheme = Scheme::ThukralM2;
    else if (name == "M3") cfg.scheme = Scheme::ThukralM3;
    else if (name == "P1") cfg.scheme = Scheme::Petkovic1;
    else if (name == "P2") cfg.scheme = Scheme::Petkovic2;
    else if (name == "Steffensen") cfg.scheme = Scheme::Steffensen;
    else if (name == "Newton") cfg.scheme = Scheme::Newton;
    else throw UnknownMethod("unknown method id: \"" + std::string(name) + "\"");
    return cfg;
}

BenchmarkReport run_benchmark(const RunSpec& spec) {
    if (spec.methods.empty()) throw std::invalid_argument("run spec names no methods");
    if (spec.problems.empty()) throw std::invalid_argument("run spec names no problems");
    if (spec.budget < 4) throw std::invalid_argument("budget must be at least 4 evaluations");
    PrecisionContext ctx(spec.digits);  // rejects digits < 50

    // Expand "all" and keep one cell per pair: first occurrence wins.
    std::vector<std::string> methods;
    for (const std::string& m : spec.methods)
        if (std::find(methods.begin(), methods.end(), m) == methods.end()) methods.push_back(m);
    std::vector<std::string> problems;
    auto add_problem = [&](const std::string& id) {
        if (std::find(problems.begin(), problems.end(), id) == problems.end())
            problems.push_back(id);
    };
    for (const std::string& p : spec.problems) {
        if (p == "all") {
            for (const std::string& id : problem_ids()) add_problem(id);
        } else {
            add_problem(p);
        }
    }

    // Reject unknown ids and bad parameters before any computation.
    for (const std::string& m : methods) (void)config_for_method(m, spec, PrecisionContext(50));
    for (const std::string& p : problems) (void)get_problem(p);
    Real kappa = parse_real(spec.kappa, ctx);
    if (kappa.is_zero()) throw std::invalid_argument("kappa must be nonzero");
    Real beta = parse_real(spec.beta, ctx);
    if (!(beta > Real::from_long(0, ctx))) throw std::invalid_argument("beta must be positive");
    if (spec.omega) (void)parse_real(*spec.omega, ctx);

    // Refine each requested root once, shared across methods.
    std::map<std::string, Problem> prepped;
    for (const std::string& id : problems) {
        if (prepped.count(id)) continue;
        Problem p = get_problem(id);
        p.alpha_refined = refine_root(p, ctx);
        prepped.emplace(id, std::move(p));
    }

    BenchmarkReport report;
    report.digits = spec.digits;
    report.budget = spec.budget;
    report.kappa = spec.kappa;
    report.beta = spec.beta;
    report.omega = spec.omega ? *spec.omega : "";
    report.timestamp = iso_timestamp();

    for (const std::string& m : methods) {
        MethodConfig cfg = config_for_method(m, spec, ctx);
        for (const std::string& pid : problems) {
            const Problem& p = prepped.at(pid);
            IterationTrace trace = run_budgeted(cfg, p, spec.budget, ctx);
            BenchCell cell;
            cell.method = m;
            cell.problem = pid;
            cell.final_error = trace.errors.back();
            cell.status = trace.status;
            try {
                cell.coc = coc(trace, *p.alpha_refined);
            } catch (const InsufficientTrace&) {
            } catch (const ZeroError&) {
            }
            report.cells.push_back(std::move(cell));
        }
    }
    return report;
}

namespace {

std::string render_csv(const BenchmarkReport& report) {
    std::ostringstream out;
    out << "method,problem,error,coc,status\n";
    for (const BenchCell& c : report.cells)
        out << c.method << ',' << c.problem << ',' << format_error(c.final_error) << ','
            << format_coc(c.coc) << ',' << to_string(c.status) << '\n';
    return out.str();
}

std::string render_markdown(const BenchmarkReport& report) {
    // Preserve first-seen order for both axes.
    std::vector<std::string> methods, problems;
    for (const BenchCell& c : report.cells) {
        if (std::find(methods.begin(), methods.end(), c.method) == methods.end())
            methods.push_back(c.method);
        if (std::find(problems.begin(), problems.end(), c.problem) == problems.end())
            problems.push_back(c.problem);
    }
    std::map<std::pair<std::string, std::string>, const BenchCell*> at;
    for (const BenchCell& c : report.cells) at[{c.method, c.problem}] = &c;

    std::ostringstream out;
    out << "digits=" << report.digits << " budget=" << report.budget << " kappa=" << report.kappa
        << " beta=" << report.beta;
    if (!report.omega.empty()) out << " omega=" << report.omega;
    out << "\n\n## Absolute errors\n\n| problem |";
    for (const auto& m : methods) out << ' ' << m << " |";
    out << "\n|---|";
    for (size_t i = 0; i < methods.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& pid : problems) {
        out << "| " << pid << ", " << get_problem(pid).x0 << " |";
        for (const auto& m : methods) {
            auto it = at.find({m, pid});
            if (it == at.end()) {
                out << " |";
                continue;
            }
            out << ' ' << format_error(it->second->final_error);
            if (it->second->status == TraceStatus::Degenerate) out << " (degenerate)";
            out << " |";
        }
        out << '\n';
    }
    out << "\n## Computational order of convergence\n\n| problem |";
    for (const auto& m : methods) out << ' ' << m << " |";
    out << "\n|---|";
    for (size_t i = 0; i < methods.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& pid : problems) {
        out << "| " << pid << " |";
        for (const auto& m : methods) {
            auto it = at.find({m, pid});
            std::string v = it == at.end() ? "" : format_coc(it->second->coc);
            out << ' ' << (v.empty() ? "-" : v) << " |";
        }
        out << '\n';
    }
    return out.str();
}

std::string render_json(const BenchmarkReport& report) {
    nlohmann::json j;
    j["meta"] = {{"digits", report.digits}, {"budget", report.budget},
                 {"kappa", report.kappa},   {"beta", report.beta},
                 {"omega", report.omega},   {"timestamp", report.timestamp}};
    j["cells"] = nlohmann::json::array();
    for (const BenchCell& c : report.cells) {
        nlohmann::json jc = {{"method", c.method},
                             {"problem", c.problem},
                             {"error", format_error(c.final_error)},
                             {"status", to_string(c.status)}};
        if (c.coc) jc["coc"] = format_coc(c.coc);
        else jc["coc"] = nullptr;
        j["cells"].push_back(std::move(jc));
    }
    return j.dump(2) + "\n";
}

}  // namespace

std::string render_report(const BenchmarkReport& report, ReportFormat format) {
    if (report.cells.empty()) throw std::invalid_argument("cannot render an empty report");
    switch (format) {
        case ReportFormat::Markdown:
            return render_markdown(report);
        case ReportFormat::Csv:
            return render_csv(report);
        case ReportFormat::Json:
            return render_json(report);
    }
    throw std::invalid_argument("unhandled report format");
}

std::optional<ReportFormat> parse_format(std::string_view name) {
    if (name == "md" || name == "markdown") return ReportFormat::Markdown;
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    return std::nullopt;
}

}  // namespace mproots
