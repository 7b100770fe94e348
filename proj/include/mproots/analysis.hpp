#ifndef MPROOTS_ANALYSIS_HPP
#define MPROOTS_ANALYSIS_HPP

#include <vector>

#include "mproots/corpus.hpp"
#include "mproots/schemes.hpp"

namespace mproots {

struct InsufficientTrace : std::runtime_error {
    explicit InsufficientTrace(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroError : std::runtime_error {
    explicit ZeroError(const std::string& what) : std::runtime_error(what) {}
};

enum class TraceStatus { Completed, ConvergedExactly, Degenerate };

/// A budgeted run: the iterate sequence starting at x0, per-iterate
/// absolute errors against the refined root, and the evaluation total.
///
/// Error entries smaller than the trust floor 10^(-(digits-40)) cannot be
/// distinguished from refinement/rounding noise; they are clamped to
/// 10^(-digits) (exact zeros stay zero) and flagged so order estimates
/// skip them.
struct IterationTrace {
    std::vector<Real> iterates;
    std::vector<Real> errors;
    std::vector<bool> clamped;
    long total_evals = 0;
    TraceStatus status = TraceStatus::Completed;
};

/// Run the configured scheme from the problem's x0 while the remaining
/// evaluation budget covers a full step. Stops early on an exact root or
/// a degenerate step; the status records which.
IterationTrace run_budgeted(const MethodConfig& cfg, const Problem& p, long budget,
                            const PrecisionContext& ctx);

/// Three-point computational order of convergence over the last three
/// trusted iterates: ln|e_{n+1}/e_n| / ln|e_n/e_{n-1}|.
Real coc(const IterationTrace& trace, const Real& alpha);

/// Least-squares slope of ln e_{n+1} against ln e_n over all consecutive
/// trusted pairs; equals p exactly for an ideal order-p sequence.
Real fit_order(const IterationTrace& trace, const Real& alpha);

}  // namespace mproots

#endif
