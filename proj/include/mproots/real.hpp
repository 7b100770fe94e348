#ifndef MPROOTS_REAL_HPP
#define MPROOTS_REAL_HPP

#include <mpfr.h>

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mproots {

/// Thrown when a decimal literal cannot be parsed, or when its exponent
/// cannot be represented without silent truncation.
struct MalformedLiteral : std::runtime_error {
    explicit MalformedLiteral(const std::string& what) : std::runtime_error(what) {}
};

/// Working precision, expressed in decimal digits.
///
/// Digits are the user-facing unit; they are converted to a binary
/// mantissa size internally. A floor of 50 digits is enforced: below it
/// the eighth-order iterations burn through the entire mantissa in a
/// single step and every downstream quantity is noise.
struct PrecisionContext {
    static constexpr long kMinDigits = 50;
    static constexpr long kDefaultDigits = 2048;

    long digits;

    PrecisionContext() : digits(kDefaultDigits) {}
    explicit PrecisionContext(long d) : digits(d) {
        if (d < kMinDigits)
            throw std::invalid_argument("precision must be at least 50 decimal digits");
    }

    mpfr_prec_t bits() const;
};

/// Immutable arbitrary-precision real number.
///
/// Every value carries its own decimal-digit precision. Binary operations
/// produce results at the larger operand precision, correctly rounded
/// (round to nearest). Values are safe to share across threads once
/// constructed.
class Real {
public:
    Real();
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_string(std::string_view text, const PrecisionContext& ctx);
    static Real from_long(long v, const PrecisionContext& ctx);
    static Real from_double(double v, const PrecisionContext& ctx);

    long digits() const { return digits_; }

    /// Minimal decimal form that re-parses to the identical value at the
    /// same precision.
    std::string to_string() const;
    /// Fixed significant-digit scientific form, e.g. to_sci(3) -> "6.38e-247".
    std::string to_sci(int sig_digits) const;

    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// log10(|x|) as a double; requires a nonzero finite value.
    double log10_abs() const;

    Real round_to(long digits) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    friend Real operator-(const Real& a);

    friend Real operator+(const Real& a, long b);
    friend Real operator+(long a, const Real& b);
    friend Real operator-(const Real& a, long b);
    friend Real operator-(long a, const Real& b);
    friend Real operator*(const Real& a, long b);
    friend Real operator*(long a, const Real& b);
    friend Real operator/(const Real& a, long b);
    friend Real operator/(long a, const Real& b);

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

    friend Real abs(const Real& x);
    friend Real sqrt(const Real& x);
    friend Real exp(const Real& x);
    friend Real ln(const Real& x);
    friend Real sin(const Real& x);
    friend Real cos(const Real& x);
    friend Real pow_int(const Real& x, long e);
    friend Real pow(const Real& x, const Real& y);

private:
    explicit Real(long digits);  // uninitialized storage at given precision

    mpfr_t v_;
    long digits_;
};

/// f: Real -> Real closure, the universal shape of a test function.
using RealFn = std::function<Real(const Real&)>;

/// Parse a signed decimal literal (optional fraction and e-exponent) at
/// the context precision. Throws MalformedLiteral on anything else,
/// including exponents too large to represent.
Real parse_real(std::string_view text, const PrecisionContext& ctx);

/// True iff |a - b| <= 10^(-tol_digits) * max(1, |a|, |b|).
bool approx_eq(const Real& a, const Real& b, long tol_digits);

/// 10^e at the context precision.
Real pow10(long e, const PrecisionContext& ctx);

}  // namespace mproots

#endif
