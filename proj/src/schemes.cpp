#include "mproots/schemes.hpp"

namespace mproots {

namespace {

bool usable_div(const Real& den) { return den.is_finite() && !den.is_zero(); }

StepResult advanced(Real next, int evals) {
    if (!next.is_finite()) return {std::move(next), evals, StepStatus::Degenerate};
    return {std::move(next), evals, StepStatus::Advanced};
}

StepResult degenerate(const Real& x, int nominal_evals) {
    return {x, nominal_evals, StepStatus::Degenerate};
}

StepResult converged(const Real& at, int evals_spent) {
    return {at, evals_spent, StepStatus::ConvergedExactly};
}

bool distinct(const Real& a, const Real& b) { return a != b; }

}  // namespace

int step_cost(Scheme s) {
    switch (s) {
        case Scheme::Newton:
        case Scheme::Steffensen:
            return 2;
        default:
            return 4;
    }
}

Real divided_difference(const RealFn& f, const Real& p, const Real& q) {
    if (p == q) throw DegenerateNodes("divided difference at coincident nodes");
    return (f(p) - f(q)) / (p - q);
}

InterpSystem make_interp_system(const IterateFrame& fr) {
    if (!distinct(fr.x, fr.w) || !distinct(fr.x, fr.y) || !distinct(fr.x, fr.z) ||
        !distinct(fr.w, fr.y) || !distinct(fr.w, fr.z) || !distinct(fr.y, fr.z))
        throw DegenerateNodes("interpolation nodes coincide at working precision");

    InterpSystem s;
    s.a = fr.x - fr.y;
    s.b = fr.z - fr.y;
    s.c = fr.w - fr.y;
    s.v1 = fr.fx - fr.fy;
    s.v2 = fr.fz - fr.fy;
    s.v3 = fr.fw - fr.fy;

    // Divide each row by its node: u(t) = r1 + r2 t + r3 t^2 through
    // (a, v1/a), (b, v2/b), (c, v3/c); then Newton divided differences.
    Real u1 = s.v1 / s.a, u2 = s.v2 / s.b, u3 = s.v3 / s.c;
    Real d12 = (u1 - u2) / (s.a - s.b);
    Real d23 = (u2 - u3) / (s.b - s.c);
    s.r3 = (d12 - d23) / (s.a - s.c);
    s.r2 = d12 - s.r3 * (s.a + s.b);
    s.r1 = u1 - s.r2 * s.a - s.r3 * (s.a * s.a);
    return s;
}

Real psi_derivative_estimate(const IterateFrame& fr) {
    if (!distinct(fr.x, fr.w) || !distinct(fr.x, fr.y) || !distinct(fr.x, fr.z) ||
        !distinct(fr.w, fr.y) || !distinct(fr.w, fr.z) || !distinct(fr.y, fr.z))
        throw DegenerateNodes("interpolation nodes coincide at working precision");

    Real a = fr.x - fr.y;
    Real b = fr.z - fr.y;
    Real c = fr.w - fr.y;
    Real v1 = fr.fx - fr.fy;
    Real v2 = fr.fz - fr.fy;
    Real v3 = fr.fw - fr.fy;

    Real ab = a - b, ac = a - c, bc = b - c;
    return (b * bc / (ab * ac)) * (v1 / a) +
           (((-3) * (b * b) + 2 * (b * c) + 2 * (a * b) - a * c) / (ab * bc)) * (v2 / b) +
           (b * (b - a) / (ac * bc)) * (v3 / c);
}

Real eval_weight_G(GKind kind, const Real& omega, const Real& t1, const Real& t2) {
    switch (kind) {
        case GKind::G1: {
            Real u = t1 + t2;
            Real den = 1 - u + omega * (u * u);
            if (den.is_zero()) throw WeightSingular("G1 denominator vanished");
            return 1 / den;
        }
        case GKind::G2: {
            PrecisionContext ctx(t1.digits() > t2.digits() ? t1.digits() : t2.digits());
            Real c19 = Real::from_long(19, ctx) / 10;
            Real c44 = Real::from_long(44, ctx) / 10;
            return 1 + t1 + t2 + t1 * t1 + c19 * (t2 * t2) + c44 * (t1 * t2);
        }
    }
    throw UnknownMethod("unhandled G kind");
}

Real eval_weight_H(HKind kind, const Real& s1, const Real& s2) {
    switch (kind) {
        case HKind::H1: {
            PrecisionContext ctx(s1.digits() > s2.digits() ? s1.digits() : s2.digits());
            return Real::from_long(1, ctx);
        }
        case HKind::H2: {
            Real den = 1 + s1 * s2 + s1 * s1 + s2 * s2;
            if (den.is_zero()) throw WeightSingular("H2 denominator vanished");
            return 1 / den;
        }
        case HKind::H3:
            return 1 + pow_int(s2, 4) + pow_int(s2, 6);
        case HKind::H4:
            return 1 + s1 * s1 + s2 * s2 + 2 * (s1 * s2);
        case HKind::H5: {
            Real den = 1 - 20 * (s1 * s2);
            if (den.is_zero()) throw WeightSingular("H5 denominator vanished");
            return 1 / den;
        }
    }
    throw UnknownMethod("unhandled H kind");
}

WeightConditionReport check_weight_conditions(GKind g_kind, const Real& omega, HKind h_kind,
                                              const PrecisionContext& ctx) {
    const Real zero = Real::from_long(0, ctx);
    const Real one = Real::from_long(1, ctx);
    const Real h = pow10(-(ctx.digits / 3), ctx);
    const Real tol = pow10(-(ctx.digits / 4), ctx);
    const Real bound = pow10(10, ctx);

    auto G = [&](const Real& t1, const Real& t2) { return eval_weight_G(g_kind, omega, t1, t2); };
    auto H = [&](const Real& s1, const Real& s2) { return eval_weight_H(h_kind, s1, s2); };

    WeightConditionReport rep;

    Real g00 = G(zero, zero);
    rep.g_value_residual = abs(g00 - 1);
    rep.g_dt1_residual = abs((G(h, zero) - G(-h, zero)) / (2 * h) - 1);
    rep.g_dt2_residual = abs((G(zero, h) - G(zero, -h)) / (2 * h) - 1);

    Real h00 = H(zero, zero);
    rep.h_value_residual = abs(h00 - 1);
    rep.h_ds1_residual = abs((H(h, zero) - H(-h, zero)) / (2 * h));
    rep.h_ds2_residual = abs((H(zero, h) - H(zero, -h)) / (2 * h));

    rep.g_value_ok = rep.g_value_residual <= tol;
    rep.g_dt1_ok = rep.g_dt1_residual <= tol;
    rep.g_dt2_ok = rep.g_dt2_residual <= tol;
    rep.h_value_ok = rep.h_value_residual <= tol;
    rep.h_ds1_ok = rep.h_ds1_residual <= tol;
    rep.h_ds2_ok = rep.h_ds2_residual <= tol;

    auto second = [&](auto&& fn, const Real& f00) {
        Real d11 = abs((fn(h, zero) - 2 * f00 + fn(-h, zero)) / (h * h));
        Real d22 = abs((fn(zero, h) - 2 * f00 + fn(zero, -h)) / (h * h));
        Real d12 = abs((fn(h, h) - fn(h, -h) - fn(-h, h) + fn(-h, -h)) / (4 * (h * h)));
        Real m = d11;
        if (d22 > m) m = d22;
        if (d12 > m) m = d12;
        return m;
    };

    Real mg = second(G, g00);
    Real mh = second(H, h00);
    rep.max_second_partial = mg > mh ? mg : mh;
    rep.second_partials_bounded =
        rep.max_second_partial.is_finite() && rep.max_second_partial <= bound;
    return rep;
}

StepResult family_iterate(const RealFn& f, const Real& x, const MethodConfig& cfg) {
    if (cfg.scheme != Scheme::Family)
        throw std::invalid_argument("family_iterate requires scheme == Family");
    if (cfg.kappa.is_zero() || !cfg.kappa.is_finite())
        throw std::invalid_argument("family_iterate requires kappa != 0");
    constexpr int kEvals = 4;

    Real fx = f(x);
    if (fx.is_zero()) return converged(x, 1);

    Real w = x - cfg.kappa * fx;
    if (w == x) return degenerate(x, kEvals);  // probe collapsed: |kappa f(x)| below 1 ulp
    Real fw = f(w);
    if (fw.is_zero()) return converged(w, 2);

    Real den = fx - fw;
    if (!usable_div(den)) return degenerate(x, kEvals);

    Real y = x - cfg.kappa * (fx * fx) / den;
    Real fy = f(y);
    if (fy.is_zero()) return converged(y, 3);

    Real t1 = fy / fx, t2 = fy / fw;
    Real z;
    try {
        z = y - cfg.kappa * (fy * fx) / den * eval_weight_G(cfg.g_kind, cfg.omega, t1, t2);
    } catch (const WeightSingular&) {
        return degenerate(x, kEvals);
    }
    Real fz = f(z);
    if (fz.is_zero()) return converged(z, 4);

    Real psi;
    try {
        psi = psi_derivative_estimate({x, w, y, z, fx, fw, fy, fz});
    } catch (const DegenerateNodes&) {
        return degenerate(x, kEvals);
    }
    if (!usable_div(psi)) return degenerate(x, kEvals);

    Real s1 = fz / fx, s2 = fz / fw;
    try {
        return advanced(z - fz / psi * eval_weight_H(cfg.h_kind, s1, s2), kEvals);
    } catch (const WeightSingular&) {
        return degenerate(x, kEvals);
    }
}

StepResult steffensen_iterate(const RealFn& f, const Real& x, const Real& kappa) {
    if (kappa.is_zero() || !kappa.is_finite())
        throw std::invalid_argument("steffensen_iterate requires kappa != 0");
    constexpr int kEvals = 2;

    Real fx = f(x);
    if (fx.is_zero()) return converged(x, 1);
    Real w = x - kappa * fx;
    if (w == x) return degenerate(x, kEvals);
    Real fw = f(w);
    if (fw.is_zero()) return converged(w, 2);
    Real den = fx - fw;
    if (!usable_div(den)) return degenerate(x, kEvals);
    return advanced(x - kappa * (fx * fx) / den, kEvals);
}

StepResult newton_iterate(const RealFn& f, const RealFn& df, const Real& x) {
    constexpr int kEvals = 2;
    Real fx = f(x);
    if (fx.is_zero()) return converged(x, 1);
    Real d = df(x);
    if (!usable_div(d)) return degenerate(x, kEvals);
    return advanced(x - fx / d, kEvals);
}

StepResult kung_traub_iterate(const RealFn& f, const Real& x, const Real& beta) {
    if (!beta.is_finite() || !(beta > Real::from_long(0, PrecisionContext(beta.digits()))))
        throw std::invalid_argument("kung_traub_iterate requires beta > 0");
    constexpr int kEvals = 4;

    Real fx = f(x);
    if (fx.is_zero()) return converged(x, 1);
    Real w = x + beta * fx;
    if (w == x) return degenerate(x, kEvals);
    Real fw = f(w);
    if (fw.is_zero()) return converged(w, 2);

    Real d1 = fw - fx;
    if (!usable_div(d1)) return degenerate(x, kEvals);
    Real y = x - beta * (fx * fx) / d1;
    Real fy = f(y);
    if (fy.is_zero()) return converged(y, 3);
    if (y == x || y == w) return degenerate(x, kEvals);

    Real fwy = (fw - fy) / (w - y);
    Real fwx = d1 / (w - x);
    Real dyx = fy - fx;
    if (!usable_div(fwy) || !usable_div(fwx) || !usable_div(dyx)) return degenerate(x, kEvals);

    // Inverse quadratic interpolation through (x, w, y) evaluated at f = 0.
    Real z = y + (fx * fw / dyx) * (1 / fwy - 1 / fwx);
    Real fz = f(z);
    if (fz.is_zero()) return converged(z, 4);
    if (z == x || z == w || z == y) return degenerate(x, kEvals);

    Real fyz = (fy - fz) / (y - z);
    Real dzw = fz - fw;
    Real dzx = fz - fx;
    if (!usable_div(fyz) || !usable_div(dzw) || !usable_div(dzx)) return degenerate(x, kEvals);

    // Inverse cubic interpolation through (x, w, y, z) evaluated at f = 0.
    Real bracket = (1 / dzw) * (1 / fyz - 1 / fwy) - (1 / dyx) * (1 / fwy - 1 / fwx);
    return advanced(z - (fw * fx * fy / dzx) * bracket, kEvals);
}

StepResult thukral_iterate(const RealFn& f, const Real& x, const Real& beta, int variant) {
    if (!beta.is_finite() || !(beta > Real::from_long(0, PrecisionContext(beta.digits()))))
        throw std::invalid_argument("thukral_iterate requires beta > 0");
    if (variant < 1 || variant > 3)
        throw std::invalid_argument("thukral_iterate variant must be 1, 2 or 3");
    constexpr int kEvals = 4;

    Real fx = f(x);
    if (fx.is_zero()) return converged(x, 1);
    Real w = x + beta * fx;
    if (w == x) return degenerate(x, kEvals);
    Real fw = f(w);
    if (fw.is_zero()) return converged(w, 2);

    Real d1 = fw - fx;
    if (!usable_div(d1)) return degenerate(x, kEvals);
    Real y = x - beta * (fx * fx) / d1;
    Real fy = f(y);
    if (fy.is_zero()) return converged(y, 3);
    if (y == x || y == w) return degenerate(x, kEvals);

    Real r = fy / fw;
    Real phi;
    switch (variant) {
        case 1: {
            Real den = 1 - r;
            if (!usable_div(den)) return degenerate(x, kEvals);
            phi = 1 / den;
            break;
        }
        case 2:
            phi = 1 + r + r * r;
            break;
        default: {
            Real fxw = (fx - fw) / (x - w);
            Real fwy = (fw - fy) / (w - y);
            if (!usable_div(fwy)) return degenerate(x, kEvals);
            phi = fxw / fwy;
            break;
        }
    }

    Real fxy = (fx - fy) / (x - y);
    if (!usable_div(fxy)) return degenerate(x, kEvals);
    Real z = y - phi * fy / fxy;
    Real fz = f(z);
    if (fz.is_zero()) return converged(z, 4);
    if (z == x || z == w || z == y) return degenerate(x, kEvals);

    Real fyz = (fy - fz) / (y - z);
    Real fxz = (fx - fz) / (x - z);
    Real lead_den = 1 - fz / fw;
    if (!usable_div(fyz) || !usable_div(fxz) || !usable_div(lead_den))
        return degenerate(x, kEvals);

    Real corr = 1 - pow_int(fy, 3) / (fw * fw * fx);
    return advanced(z - (1 / lead_den) * corr * (fxy * fz / (fyz * fxz)), kEvals);
}

StepResult petkovic_iterate(const RealFn& f, const Real& x, const Real& beta, int variant) {
    if (!beta.is_finite() || !(beta > Real::from_long(0, PrecisionContext(beta.digits()))))
        throw std::invalid_argument("petkovic_iterate requires beta > 0");
    if (variant < 1 || variant > 2)
        throw std::invalid_argument("petkovic_iterate variant must be 1 or 2");
    constexpr int kEvals = 4;

    Real fx = f(x);
    if (fx.is_zero()) return converged(x, 1);
    Real w = x + beta * fx;
    if (w == x) return degenerate(x, kEvals);
    Real fw = f(w);
    if (fw.is_zero()) return converged(w, 2);

    Real d1 = fw - fx;
    if (!usable_div(d1)) return degenerate(x, kEvals);
    Real y = x - beta * (fx * fx) / d1;
    Real fy = f(y);
    if (fy.is_zero()) return converged(y, 3);
    if (y == x || y == w) return degenerate(x, kEvals);

    Real base = (w - x) * fy / d1;
    Real z;
    if (variant == 1) {
        z = y - (1 + fy / fw + fy / fx) * base;
    } else {
        Real den = 1 - fy / fw;
        if (!usable_div(den)) return degenerate(x, kEvals);
        z = y - ((1 + fy / fx) / den) * base;
    }
    Real fz = f(z);
    if (fz.is_zero()) return converged(z, 4);
    if (z == x || z == w || z == y) return degenerate(x, kEvals);

    Real fxy = (fx - fy) / (x - y);
    Real fyz = (fy - fz) / (y - z);
    Real fxz = (fx - fz) / (x - z);
    Real lead_den = 1 - fz / fw;
    if (!usable_div(fxy) || !usable_div(fyz) || !usable_div(fxz) || !usable_div(lead_den))
        return degenerate(x, kEvals);

    Real fy3 = pow_int(fy, 3);
    Real corr;
    if (variant == 1) {
        corr = 1 - 2 * fy3 / (fw * fw * fx) - fy3 / (fw * (fx * fx)) - pow_int(fy / fw, 3);
    } else {
        // Unit coefficient on the first term; a doubled coefficient loses
        // the eighth order (the t u^2 error term survives).
        corr = 1 - fy3 / (fw * fw * fx) - fy3 / (fw * (fx * fx));
    }
    return advanced(z - (1 / lead_den) * corr * (fxy * fz / (fyz * fxz)), kEvals);
}

MethodConfig make_named_config(std::string_view name, const PrecisionContext& ctx) {
    MethodConfig cfg;
    cfg.scheme = Scheme::Family;
    cfg.kappa = parse_real("0.01", ctx);
    cfg.beta = parse_real("0.01", ctx);

    auto with = [&](GKind g, HKind h, const char* omega) {
        cfg.g_kind = g;
        cfg.h_kind = h;
        cfg.omega = parse_real(omega, ctx);
        return cfg;
    };

    if (name == "L1") return with(GKind::G1, HKind::H1, "0.01");
    if (name == "L2") return with(GKind::G1, HKind::H1, "-0.022");
    if (name == "L3") return with(GKind::G1, HKind::H1, "-0.001");
    if (name == "L4") return with(GKind::G2, HKind::H1, "0.01");
    if (name == "L5") return with(GKind::G1, HKind::H3, "-0.01");
    if (name == "L6") return with(GKind::G1, HKind::H2, "0.01");
    if (name == "L7") return with(GKind::G1, HKind::H4, "0.01");
    if (name == "L8") return with(GKind::G1, HKind::H5, "0.01");
    throw UnknownMethod("unknown named config: \"" + std::string(name) + "\"");
}

}  // namespace mproots
