#ifndef MPROOTS_SCHEMES_HPP
#define MPROOTS_SCHEMES_HPP

#include <string>
#include <string_view>

#include "mproots/real.hpp"

namespace mproots {

struct DegenerateNodes : std::runtime_error {
    explicit DegenerateNodes(const std::string& what) : std::runtime_error(what) {}
};

struct WeightSingular : std::runtime_error {
    explicit WeightSingular(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownMethod : std::runtime_error {
    explicit UnknownMethod(const std::string& what) : std::runtime_error(what) {}
};

enum class Scheme {
    Newton,
    Steffensen,
    Family,
    KungTraub,
    ThukralM1,
    ThukralM2,
    ThukralM3,
    Petkovic1,
    Petkovic2,
};

enum class GKind { G1, G2 };
enum class HKind { H1, H2, H3, H4, H5 };

/// Scheme selection plus its free parameters. kappa drives the Family and
/// Steffensen probe step (must be nonzero); beta drives the comparator
/// probe step (must be positive); omega and the weight kinds are consulted
/// only when scheme == Family.
struct MethodConfig {
    Scheme scheme = Scheme::Family;
    Real kappa;
    Real beta;
    Real omega;
    GKind g_kind = GKind::G1;
    HKind h_kind = HKind::H1;
};

/// The four nodes of one multipoint step and their function values.
struct IterateFrame {
    Real x, w, y, z;
    Real fx, fw, fy, fz;
};

/// Offsets from y, value offsets from f(y), and the coefficients of the
/// cubic q(t) = f(y) + r1 t + r2 t^2 + r3 t^3 through the frame.
struct InterpSystem {
    Real a, b, c;     // x - y, z - y, w - y
    Real v1, v2, v3;  // f(x) - f(y), f(z) - f(y), f(w) - f(y)
    Real r1, r2, r3;
};

enum class StepStatus { Advanced, ConvergedExactly, Degenerate };

/// Outcome of one iteration step. evals_used is the scheme's nominal
/// function-evaluation cost except on an exact-root early exit, where it
/// counts only the evaluations actually spent.
struct StepResult {
    Real next_x;
    int evals_used = 0;
    StepStatus status = StepStatus::Advanced;
};

/// Secant slope (f(p) - f(q)) / (p - q); symmetric under swapping p and q.
Real divided_difference(const RealFn& f, const Real& p, const Real& q);

/// Solve for the cubic through the frame's four (node, value) pairs.
/// Throws DegenerateNodes when nodes coincide at working precision.
InterpSystem make_interp_system(const IterateFrame& frame);

/// Derivative at z of the unique cubic through the frame, in closed form.
/// Throws DegenerateNodes when nodes coincide at working precision.
Real psi_derivative_estimate(const IterateFrame& frame);

/// Third-step weight G(t1, t2).
///   G1 = 1 / (1 - (t1+t2) + omega (t1+t2)^2)
///   G2 = 1 + t1 + t2 + t1^2 + 1.9 t2^2 + 4.4 t1 t2
Real eval_weight_G(GKind kind, const Real& omega, const Real& t1, const Real& t2);

/// Fourth-step weight H(s1, s2).
///   H1 = 1
///   H2 = 1 / (1 + s1 s2 + s1^2 + s2^2)
///   H3 = 1 + s2^4 + s2^6
///   H4 = 1 + s1^2 + s2^2 + 2 s1 s2
///   H5 = 1 / (1 - 20 s1 s2)
Real eval_weight_H(HKind kind, const Real& s1, const Real& s2);

/// Finite-difference verification of the eighth-order weight hypotheses:
/// G(0,0) = 1, dG/dt1 = dG/dt2 = 1, H(0,0) = 1, dH/ds1 = dH/ds2 = 0,
/// with all second partials bounded at the origin.
struct WeightConditionReport {
    bool g_value_ok = false, g_dt1_ok = false, g_dt2_ok = false;
    bool h_value_ok = false, h_ds1_ok = false, h_ds2_ok = false;
    Real g_value_residual, g_dt1_residual, g_dt2_residual;
    Real h_value_residual, h_ds1_residual, h_ds2_residual;
    bool second_partials_bounded = false;
    Real max_second_partial;

    bool all_ok() const {
        return g_value_ok && g_dt1_ok && g_dt2_ok && h_value_ok && h_ds1_ok && h_ds2_ok &&
               second_partials_bounded;
    }
};

/// Evaluate the six origin conditions with central differences of step
/// 10^(-digits/3); a condition passes when its residual is at most
/// 10^(-digits/4). Second partials count as bounded below 10^10.
WeightConditionReport check_weight_conditions(GKind g_kind, const Real& omega, HKind h_kind,
                                              const PrecisionContext& ctx);

/// One step of the eighth-order derivative-free family:
///   w = x - kappa f(x)
///   y = x - kappa f(x)^2 / (f(x) - f(w))
///   z = y - kappa f(y) f(x) / (f(x) - f(w)) * G(f(y)/f(x), f(y)/f(w))
///   x+ = z - f(z) / psi * H(f(z)/f(x), f(z)/f(w))
/// Four evaluations per step.
StepResult family_iterate(const RealFn& f, const Real& x, const MethodConfig& cfg);

/// One Steffensen step: w = x - kappa f(x); x+ = x - kappa f(x)^2 / (f(x) - f(w)).
StepResult steffensen_iterate(const RealFn& f, const Real& x, const Real& kappa);

/// One Newton step with a caller-supplied derivative closure.
StepResult newton_iterate(const RealFn& f, const RealFn& df, const Real& x);

/// One step of the Kung-Traub eighth-order derivative-free method, i.e.
/// successive inverse interpolation through (x, w), (x, w, y), (x, w, y, z)
/// with w = x + beta f(x). Commonly printed transcriptions carry a typo
/// that collapses the third step's bracket to zero; the form used here is
/// derived directly from inverse quadratic interpolation.
StepResult kung_traub_iterate(const RealFn& f, const Real& x, const Real& beta);

/// One step of the Thukral eighth-order three-point method, variants 1-3
/// differing in the third-step weight phi.
StepResult thukral_iterate(const RealFn& f, const Real& x, const Real& beta, int variant);

/// One step of the Petkovic-type eighth-order methods, variants 1-2.
/// Variant 2's fourth-step correction takes a unit coefficient on the
/// f(y)^3/(f(w)^2 f(x)) term; the doubled coefficient seen in some printed
/// transcriptions caps the order at seven.
StepResult petkovic_iterate(const RealFn& f, const Real& x, const Real& beta, int variant);

/// Named family configurations:
///   L1 (G1, H1, omega=+0.01)   L2 (G1, H1, omega=-0.022)
///   L3 (G1, H1, omega=-0.001)  L4 (G2, H1, omega=+0.01)
///   L5 (G1, H3, omega=-0.01)   L6 (G1, H2, omega=+0.01)
///   L7 (G1, H4, omega=+0.01)   L8 (G1, H5, omega=+0.01)
/// all with kappa = 0.01. Throws UnknownMethod for anything else.
MethodConfig make_named_config(std::string_view name,
                               const PrecisionContext& ctx = PrecisionContext());

/// Nominal function evaluations of one step of the scheme.
int step_cost(Scheme s);

}  // namespace mproots

#endif
