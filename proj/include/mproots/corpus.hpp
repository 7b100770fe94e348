#ifndef MPROOTS_CORPUS_HPP
#define MPROOTS_CORPUS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mproots/real.hpp"

namespace mproots {

struct UnknownProblem : std::runtime_error {
    explicit UnknownProblem(const std::string& what) : std::runtime_error(what) {}
};

struct NoConvergence : std::runtime_error {
    explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};

/// A benchmark problem: a scalar test function with a known simple root
/// and a canonical starting point.
///
/// `evaluate` and `derivative` follow the precision of their argument, so
/// one Problem serves every working precision. `alpha_hint` is a decimal
/// prefix of the root; when `alpha_exact` is set the hint is the root and
/// refinement is a no-op.
struct Problem {
    std::string id;
    RealFn evaluate;
    RealFn derivative;       // analytic f', used by the Newton baseline
    std::string alpha_hint;  // decimal prefix (or exact value) of the root
    std::string x0;          // canonical starting point
    bool alpha_exact = false;
    std::optional<Real> alpha_refined;

    Real x0_at(const PrecisionContext& ctx) const { return parse_real(x0, ctx); }
    Real alpha_hint_at(const PrecisionContext& ctx) const { return parse_real(alpha_hint, ctx); }
};

/// Look up one of the thirteen compiled-in problems f1..f13.
Problem get_problem(std::string_view id);

/// All problem ids in canonical order.
const std::vector<std::string>& problem_ids();

/// Polish the root to working precision: Newton seeded at alpha_hint with
/// a central divided-difference derivative (step 10^(-digits/2)).
/// Guarantees |f(alpha)| <= 10^(-(digits-20)); throws NoConvergence if 200
/// iterations do not get there.
Real refine_root(const Problem& p, const PrecisionContext& ctx);

}  // namespace mproots

#endif
