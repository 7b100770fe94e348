#include "mproots/corpus.hpp"

#include <array>

namespace mproots {

namespace {

// The thirteen test problems. Expressions are kept in the exact
// composition order of the benchmark table; error trajectories are
// sensitive to it.
const std::array<Problem, 13>& table() {
    static const std::array<Problem, 13> problems = {{
        {"f1",
         [](const Real& x) { return exp(x) * sin(x) + ln(1 + x * x); },
         [](const Real& x) { return exp(x) * (sin(x) + cos(x)) + 2 * x / (1 + x * x); },
         "0", "0.25", true, {}},
        {"f2",
         [](const Real& x) { return pow_int(x, 15) + pow_int(x, 4) + 4 * (x * x) - 15; },
         [](const Real& x) { return 15 * pow_int(x, 14) + 4 * pow_int(x, 3) + 8 * x; },
         "1.148538", "1.1", false, {}},
        {"f3",
         [](const Real& x) { return (x - 2) * (pow_int(x, 10) + x + 1) * exp(-x - 1); },
         [](const Real& x) {
             Real q = pow_int(x, 10) + x + 1;
             return exp(-x - 1) * (q + (x - 2) * (10 * pow_int(x, 9) + 1) - (x - 2) * q);
         },
         "2", "2.1", true, {}},
        {"f4",
         [](const Real& x) { return exp(-(x * x) + x + 2) - cos(x + 1) + pow_int(x, 3) + 1; },
         [](const Real& x) {
             return (1 - 2 * x) * exp(-(x * x) + x + 2) + sin(x + 1) + 3 * (x * x);
         },
         "-1", "-0.5", true, {}},
        {"f5",
         [](const Real& x) { return (x + 1) * exp(sin(x)) - x * x * exp(cos(x)) - 1; },
         [](const Real& x) {
             return exp(sin(x)) * (1 + (x + 1) * cos(x)) - exp(cos(x)) * (2 * x - x * x * sin(x));
         },
         "0", "0.25", true, {}},
        {"f6",
         [](const Real& x) { return sin(x) * sin(x) - x * x + 1; },
         [](const Real& x) { return sin(2 * x) - 2 * x; },
         "1.40449165", "1.2", false, {}},
        {"f7",
         [](const Real& x) { return 10 * exp(-(x * x)) - 1; },
         [](const Real& x) { return -20 * x * exp(-(x * x)); },
         "1.517427", "2", false, {}},
        {"f8",
         [](const Real& x) { return 1 / (x * x - 1) - 1; },
         [](const Real& x) { return -2 * x / pow_int(x * x - 1, 2); },
         "1.414214", "1.7", false, {}},
        {"f9",
         [](const Real& x) { return ln(x * x + x + 2) - x + 1; },
         [](const Real& x) { return (2 * x + 1) / (x * x + x + 2) - 1; },
         "4.15259074", "4.4", false, {}},
        {"f10",
         [](const Real& x) { return cos(x) * cos(x) - x / 5; },
         [](const Real& x) { return ((-5) * sin(2 * x) - 1) / 5; },
         "1.08598268", "1.5", false, {}},
        {"f11",
         [](const Real& x) { return sin(x) - x / 2; },
         [](const Real& x) { return (2 * cos(x) - 1) / 2; },
         "0", "0.25", true, {}},
        {"f12",
         [](const Real& x) { return pow_int(x, 10) - 2 * pow_int(x, 3) - x + 1; },
         [](const Real& x) { return 10 * pow_int(x, 9) - 6 * (x * x) - 1; },
         "0.591448093", "0.25", false, {}},
        {"f13",
         [](const Real& x) { return exp(sin(x)) - x + 1; },
         [](const Real& x) { return cos(x) * exp(sin(x)) - 1; },
         "2.63066415", "2.0", false, {}},
    }};
    return problems;
}

}  // namespace

Problem get_problem(std::string_view id) {
    for (const Problem& p : table())
        if (p.id == id) return p;
    throw UnknownProblem("unknown problem id: \"" + std::string(id) + "\"");
}

const std::vector<std::string>& problem_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const Problem& p : table()) v.push_back(p.id);
        return v;
    }();
    return ids;
}

Real refine_root(const Problem& p, const PrecisionContext& ctx) {
    if (p.alpha_exact) return p.alpha_hint_at(ctx);

    Real x = p.alpha_hint_at(ctx);
    const Real h = pow10(-(ctx.digits / 2), ctx);
    const Real residual_bound = pow10(-(ctx.digits - 20), ctx);

    bool met = false;
    for (int iter = 0; iter < 200; ++iter) {
        Real fx = p.evaluate(x);
        if (abs(fx) <= residual_bound) {
            if (met) return x;
            met = true;  // one polishing step past the bound
        }
        Real d = (p.evaluate(x + h) - p.evaluate(x - h)) / (2 * h);
        if (d.is_zero() || !d.is_finite())
            throw NoConvergence("derivative estimate vanished while refining " + p.id);
        Real next = x - fx / d;
        if (!next.is_finite())
            throw NoConvergence("refinement diverged for " + p.id);
        if (next == x) {
            if (abs(p.evaluate(x)) <= residual_bound) return x;
            throw NoConvergence("refinement stalled for " + p.id);
        }
        x = next;
    }
    if (abs(p.evaluate(x)) <= residual_bound) return x;
    throw NoConvergence("root refinement did not reach the residual bound for " + p.id);
}

}  // namespace mproots
