#include "mproots/real.hpp"

#include <cctype>
#include <cmath>
#include <utility>

namespace mproots {

mpfr_prec_t PrecisionContext::bits() const {
    // ceil(digits * log2(10)) plus a small guard so that decimal-digit
    // accuracy claims hold at the stated digit count.
    const double log2_10 = 3.321928094887362;
    return static_cast<mpfr_prec_t>(std::ceil(static_cast<double>(digits) * log2_10)) + 16;
}

Real::Real(long digits) : digits_(digits) {
    mpfr_init2(v_, PrecisionContext(digits).bits());
}

Real::Real() : digits_(PrecisionContext::kMinDigits) {
    mpfr_init2(v_, PrecisionContext(digits_).bits());
    mpfr_set_nan(v_);
}

Real::Real(const Real& other) : digits_(other.digits_) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept : digits_(other.digits_) {
    v_[0] = other.v_[0];
    mpfr_init2(other.v_, MPFR_PREC_MIN);
    mpfr_set_nan(other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
        digits_ = other.digits_;
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(v_, other.v_);
        std::swap(digits_, other.digits_);
    }
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_long(long v, const PrecisionContext& ctx) {
    Real r(ctx.digits);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from_double(double v, const PrecisionContext& ctx) {
    Real r(ctx.digits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

namespace {

bool valid_decimal_literal(std::string_view s, bool& nonzero_mantissa) {
    size_t i = 0;
    nonzero_mantissa = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    size_t mantissa_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        nonzero_mantissa |= s[i] != '0';
        ++i;
        ++mantissa_digits;
    }
    if (i < s.size() && s[i] == '.') {
        ++i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            nonzero_mantissa |= s[i] != '0';
            ++i;
            ++mantissa_digits;
        }
    }
    if (mantissa_digits == 0) return false;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
        size_t exp_digits = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) { ++i; ++exp_digits; }
        if (exp_digits == 0) return false;
    }
    return i == s.size();
}

}  // namespace

Real Real::from_string(std::string_view text, const PrecisionContext& ctx) {
    bool nonzero_mantissa = false;
    if (!valid_decimal_literal(text, nonzero_mantissa))
        throw MalformedLiteral("not a decimal literal: \"" + std::string(text) + "\"");
    Real r(ctx.digits);
    std::string owned(text);
    mpfr_clear_flags();
    if (mpfr_set_str(r.v_, owned.c_str(), 10, MPFR_RNDN) != 0)
        throw MalformedLiteral("not a decimal literal: \"" + owned + "\"");
    // A saturated exponent must fail loudly, never round to 0 or inf.
    if (mpfr_overflow_p() || mpfr_underflow_p() || mpfr_erangeflag_p() || !r.is_finite() ||
        (r.is_zero() && nonzero_mantissa))
        throw MalformedLiteral("exponent out of representable range: \"" + owned + "\"");
    return r;
}

std::string Real::to_string() const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, 0, v_, MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);

    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);
    while (s.size() > 1 && s.back() == '0') s.pop_back();

    std::string out = neg ? "-" : "";
    out += s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    long exp10 = static_cast<long>(e) - 1;
    if (exp10 != 0) {
        out += "e";
        if (exp10 > 0) out += "+";
        out += std::to_string(exp10);
    }
    return out;
}

std::string Real::to_sci(int sig_digits) const {
    if (sig_digits < 1) sig_digits = 1;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (mpfr_zero_p(v_)) return "0";

    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(sig_digits), v_, MPFR_RNDN);
    std::string s(raw);
    mpfr_free_str(raw);

    bool neg = !s.empty() && s[0] == '-';
    if (neg) s.erase(0, 1);

    std::string out = neg ? "-" : "";
    out += s.substr(0, 1);
    if (s.size() > 1) out += "." + s.substr(1);
    long exp10 = static_cast<long>(e) - 1;
    out += "e";
    out += (exp10 < 0) ? "-" : "+";
    out += std::to_string(exp10 < 0 ? -exp10 : exp10);
    return out;
}

double Real::log10_abs() const {
    if (!is_finite() || is_zero())
        throw std::domain_error("log10_abs requires a nonzero finite value");
    mpfr_t t;
    mpfr_init2(t, 64);
    mpfr_abs(t, v_, MPFR_RNDN);
    mpfr_log10(t, t, MPFR_RNDN);
    double r = mpfr_get_d(t, MPFR_RNDN);
    mpfr_clear(t);
    return r;
}

Real Real::round_to(long digits) const {
    Real r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

namespace {
inline long result_digits(const Real& a, const Real& b) {
    return a.digits() > b.digits() ? a.digits() : b.digits();
}
}  // namespace

#define MPROOTS_BINOP(op, fn)                                  \
    Real operator op(const Real& a, const Real& b) {           \
        Real r(result_digits(a, b));                           \
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);                       \
        return r;                                              \
    }

MPROOTS_BINOP(+, mpfr_add)
MPROOTS_BINOP(-, mpfr_sub)
MPROOTS_BINOP(*, mpfr_mul)
MPROOTS_BINOP(/, mpfr_div)
#undef MPROOTS_BINOP

Real operator-(const Real& a) {
    Real r(a.digits());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
}

#define MPROOTS_BINOP_SI(op, fn)                  \
    Real operator op(const Real& a, long b) {     \
        Real r(a.digits());                       \
        fn(r.v_, a.v_, b, MPFR_RNDN);             \
        return r;                                 \
    }

MPROOTS_BINOP_SI(+, mpfr_add_si)
MPROOTS_BINOP_SI(-, mpfr_sub_si)
MPROOTS_BINOP_SI(*, mpfr_mul_si)
MPROOTS_BINOP_SI(/, mpfr_div_si)
#undef MPROOTS_BINOP_SI

Real operator+(long a, const Real& b) { return b + a; }
Real operator*(long a, const Real& b) { return b * a; }

Real operator-(long a, const Real& b) {
    Real r(b.digits());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

Real operator/(long a, const Real& b) {
    Real r(b.digits());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
}

#define MPROOTS_UNFN(name, fn)         \
    Real name(const Real& x) {         \
        Real r(x.digits());            \
        fn(r.v_, x.v_, MPFR_RNDN);     \
        return r;                      \
    }

MPROOTS_UNFN(abs, mpfr_abs)
MPROOTS_UNFN(sqrt, mpfr_sqrt)
MPROOTS_UNFN(exp, mpfr_exp)
MPROOTS_UNFN(ln, mpfr_log)
MPROOTS_UNFN(sin, mpfr_sin)
MPROOTS_UNFN(cos, mpfr_cos)
#undef MPROOTS_UNFN

Real pow_int(const Real& x, long e) {
    Real r(x.digits());
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(result_digits(x, y));
    mpfr_pow(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real parse_real(std::string_view text, const PrecisionContext& ctx) {
    return Real::from_string(text, ctx);
}

bool approx_eq(const Real& a, const Real& b, long tol_digits) {
    long d = a.digits() > b.digits() ? a.digits() : b.digits();
    PrecisionContext ctx(d);
    Real scale = Real::from_long(1, ctx);
    Real aa = abs(a), ab = abs(b);
    if (aa > scale) scale = aa;
    if (ab > scale) scale = ab;
    return abs(a - b) <= pow10(-tol_digits, ctx) * scale;
}

Real pow10(long e, const PrecisionContext& ctx) {
    return pow_int(Real::from_long(10, ctx), e);
}

}  // namespace mproots
