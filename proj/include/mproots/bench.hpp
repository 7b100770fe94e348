#ifndef MPROOTS_BENCH_HPP
#define MPROOTS_BENCH_HPP

#include <optional>
#include <string>
#include <vector>

#include "mproots/analysis.hpp"

namespace mproots {

/// What to run: the (method x problem) grid, the evaluation budget per
/// cell, the working precision and the scheme parameters. A problems
/// entry of "all" expands to f1..f13.
struct RunSpec {
    std::vector<std::string> methods;
    std::vector<std::string> problems;
    long budget = 12;
    long digits = PrecisionContext::kDefaultDigits;
    std::string kappa = "0.01";
    std::string beta = "0.01";
    std::optional<std::string> omega;  // overrides the named configs' omega
};

struct BenchCell {
    std::string method;
    std::string problem;
    Real final_error;
    std::optional<Real> coc;
    TraceStatus status = TraceStatus::Completed;
};

struct BenchmarkReport {
    std::vector<BenchCell> cells;  // method-major, then problem, in request order
    long digits = 0;
    long budget = 0;
    std::string kappa, beta, omega;
    std::string timestamp;  // rendered in json meta only
};

enum class ReportFormat { Markdown, Csv, Json };

/// All method identifiers accepted by run specs, in canonical order:
/// L1..L8, KT, M1..M3, P1, P2, Steffensen, Newton.
const std::vector<std::string>& method_ids();

/// Resolve a method identifier against a run spec's parameters.
/// Throws UnknownMethod for identifiers outside the registry.
MethodConfig config_for_method(std::string_view name, const RunSpec& spec,
                               const PrecisionContext& ctx);

/// Validate the spec, refine each requested root once, then evaluate every
/// (method, problem) cell with run_budgeted + coc. Deterministic for a
/// fixed spec. Throws std::invalid_argument before any computation when
/// the spec is malformed.
BenchmarkReport run_benchmark(const RunSpec& spec);

/// Render the report: markdown mirrors the benchmark table layout (an
/// errors block and a COC block), csv is one line per cell
/// (method,problem,error,coc,status), json carries cells plus meta.
std::string render_report(const BenchmarkReport& report, ReportFormat format);

std::optional<ReportFormat> parse_format(std::string_view name);  // "md", "csv", "json"

std::string to_string(TraceStatus s);

}  // namespace mproots

#endif
