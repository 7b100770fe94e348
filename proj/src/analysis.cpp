#include "mproots/analysis.hpp"

namespace mproots {

namespace {

StepResult apply_scheme(const MethodConfig& cfg, const Problem& p, const Real& x) {
    switch (cfg.scheme) {
        case Scheme::Family:
            return family_iterate(p.evaluate, x, cfg);
        case Scheme::Steffensen:
            return steffensen_iterate(p.evaluate, x, cfg.kappa);
        case Scheme::Newton:
            if (!p.derivative)
                throw std::invalid_argument("Newton needs a derivative closure on " + p.id);
            return newton_iterate(p.evaluate, p.derivative, x);
        case Scheme::KungTraub:
            return kung_traub_iterate(p.evaluate, x, cfg.beta);
        case Scheme::ThukralM1:
            return thukral_iterate(p.evaluate, x, cfg.beta, 1);
        case Scheme::ThukralM2:
            return thukral_iterate(p.evaluate, x, cfg.beta, 2);
        case Scheme::ThukralM3:
            return thukral_iterate(p.evaluate, x, cfg.beta, 3);
        case Scheme::Petkovic1:
            return petkovic_iterate(p.evaluate, x, cfg.beta, 1);
        case Scheme::Petkovic2:
            return petkovic_iterate(p.evaluate, x, cfg.beta, 2);
    }
    throw std::invalid_argument("unhandled scheme");
}

struct ErrorSeq {
    std::vector<Real> values;   // trusted entries only, in order
};

ErrorSeq trusted_errors(const std::vector<Real>& iterates, const Real& alpha) {
    long digits = iterates.empty() ? alpha.digits() : iterates.front().digits();
    PrecisionContext ctx(digits);
    const Real floor = pow10(-(digits - 40), ctx);
    ErrorSeq seq;
    for (const Real& xi : iterates) {
        Real e = abs(xi - alpha);
        if (!e.is_zero() && e >= floor) seq.values.push_back(e);
    }
    return seq;
}

}  // namespace

IterationTrace run_budgeted(const MethodConfig& cfg, const Problem& p, long budget,
                            const PrecisionContext& ctx) {
    const int cost = step_cost(cfg.scheme);
    if (budget < cost)
        throw std::invalid_argument("budget smaller than one step of the scheme");

    Real alpha = p.alpha_refined ? *p.alpha_refined : refine_root(p, ctx);

    IterationTrace trace;
    Real x = p.x0_at(ctx);
    trace.iterates.push_back(x);

    long left = budget;
    while (left >= cost) {
        StepResult r = apply_scheme(cfg, p, x);
        trace.total_evals += r.evals_used;
        left -= r.evals_used;
        if (r.status == StepStatus::Advanced) {
            x = r.next_x;
            trace.iterates.push_back(x);
        } else if (r.status == StepStatus::ConvergedExactly) {
            if (r.next_x != x) trace.iterates.push_back(r.next_x);
            trace.status = TraceStatus::ConvergedExactly;
            break;
        } else {
            trace.status = TraceStatus::Degenerate;
            break;
        }
    }

    const Real floor = pow10(-(ctx.digits - 40), ctx);
    const Real clamp_value = pow10(-ctx.digits, ctx);
    for (const Real& xi : trace.iterates) {
        Real e = abs(xi - alpha);
        if (e.is_zero()) {
            trace.errors.push_back(e);
            trace.clamped.push_back(true);
        } else if (e < floor) {
            trace.errors.push_back(clamp_value);
            trace.clamped.push_back(true);
        } else {
            trace.errors.push_back(e);
            trace.clamped.push_back(false);
        }
    }
    return trace;
}

Real coc(const IterationTrace& trace, const Real& alpha) {
    if (trace.iterates.size() < 3)
        throw InsufficientTrace("order estimate needs at least three iterates");
    ErrorSeq seq = trusted_errors(trace.iterates, alpha);
    if (seq.values.size() < 3) {
        // distinguish "too short" from "hit the root exactly"
        for (const Real& xi : trace.iterates)
            if (xi == alpha) throw ZeroError("an iterate equals the root exactly");
        throw InsufficientTrace("fewer than three trusted errors in trace");
    }
    const Real& e0 = seq.values[seq.values.size() - 3];
    const Real& e1 = seq.values[seq.values.size() - 2];
    const Real& e2 = seq.values[seq.values.size() - 1];
    if (e0.is_zero() || e1.is_zero() || e2.is_zero())
        throw ZeroError("order estimate over an exactly-zero error");
    Real den = ln(e1 / e0);
    if (den.is_zero()) throw InsufficientTrace("stalled error sequence has no defined order");
    return ln(e2 / e1) / den;
}

Real fit_order(const IterationTrace& trace, const Real& alpha) {
    ErrorSeq seq = trusted_errors(trace.iterates, alpha);
    if (seq.values.size() < 3)
        throw InsufficientTrace("order fit needs at least three trusted errors");

    long digits = seq.values.front().digits();
    PrecisionContext ctx(digits);
    std::vector<Real> xs, ys;
    for (size_t i = 0; i + 1 < seq.values.size(); ++i) {
        xs.push_back(ln(seq.values[i]));
        ys.push_back(ln(seq.values[i + 1]));
    }
    const long n = static_cast<long>(xs.size());
    Real sx = Real::from_long(0, ctx), sy = sx;
    for (long i = 0; i < n; ++i) {
        sx = sx + xs[i];
        sy = sy + ys[i];
    }
    Real mx = sx / n, my = sy / n;
    Real num = Real::from_long(0, ctx), den = num;
    for (long i = 0; i < n; ++i) {
        num = num + (xs[i] - mx) * (ys[i] - my);
        den = den + (xs[i] - mx) * (xs[i] - mx);
    }
    if (den.is_zero()) throw InsufficientTrace("order fit needs distinct error magnitudes");
    return num / den;
}

}  // namespace mproots
