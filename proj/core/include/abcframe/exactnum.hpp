#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace abcframe {

using Rational = mpq_class;
using Integer = mpz_class;

enum class ContextKind { Rational, Surd, Pi };

class NumberContext;
using ContextPtr = std::shared_ptr<const NumberContext>;

// The field Q + Q*tau that every value of one computation lives in.
class NumberContext {
public:
    static constexpr unsigned kDefaultPrecisionCap = 4096;

    static ContextPtr rational();
    // sqrt(d) for square-free d >= 2; throws if d is not square-free.
    static ContextPtr surd(long d);
    static ContextPtr pi(unsigned precision_cap = kDefaultPrecisionCap);

    ContextKind kind() const noexcept { return kind_; }
    long radicand() const noexcept { return radicand_; }
    unsigned precision_cap() const noexcept { return cap_; }

    // "pi", "sqrt(3)" or "" for the rational context.
    std::string basis_name() const;
    std::string describe() const;

    bool same_field(const NumberContext& other) const noexcept {
        return kind_ == other.kind_ && radicand_ == other.radicand_;
    }

    // Rational bounds lo < tau < hi, accurate to roughly `bits` bits.
    // Cached and safe to call from several threads.
    std::pair<Rational, Rational> enclosure(unsigned bits) const;

    NumberContext(ContextKind kind, long radicand, unsigned cap);

private:
    ContextKind kind_;
    long radicand_;
    unsigned cap_;
    mutable std::mutex mutex_;
    mutable std::vector<std::pair<unsigned, std::pair<Rational, Rational>>> cache_;
};

// Square-free decomposition n = s^2 * m with m square-free.
std::pair<Integer, long> square_free_split(long n);

class ExactReal {
public:
    ExactReal();  // 0 in the rational context
    ExactReal(Rational rational_part, ContextPtr ctx);
    ExactReal(Rational rational_part, Rational tau_part, ContextPtr ctx);

    const Rational& rational_part() const noexcept { return x0_; }
    const Rational& tau_part() const noexcept { return x1_; }
    const ContextPtr& context() const noexcept { return ctx_; }

    bool is_rational() const noexcept { return sgn(x1_) == 0; }
    std::optional<Rational> as_rational() const;
    bool is_zero() const noexcept { return sgn(x0_) == 0 && sgn(x1_) == 0; }

    ExactReal operator-() const;
    ExactReal& operator+=(const ExactReal& o);
    ExactReal& operator-=(const ExactReal& o);
    ExactReal& operator*=(const Rational& r);
    ExactReal& operator/=(const Rational& r);

    // Same number in the same context, rational coefficients.
    ExactReal with(const Rational& r) const { return ExactReal(r, ctx_); }

    double approx() const;
    // Canonical expression, e.g. "23-11*pi/2", "15*sqrt(3)/2", "13/17".
    std::string to_string() const;

private:
    Rational x0_;
    Rational x1_;
    ContextPtr ctx_;
};

ExactReal operator+(ExactReal x, const ExactReal& y);
ExactReal operator-(ExactReal x, const ExactReal& y);
ExactReal operator*(ExactReal x, const Rational& r);
ExactReal operator*(const Rational& r, ExactReal x);
ExactReal operator*(ExactReal x, long k);
ExactReal operator*(long k, ExactReal x);
ExactReal operator/(ExactReal x, const Rational& r);
// Defined when either factor is rational, or in a surd context.
ExactReal operator*(const ExactReal& x, const ExactReal& y);
// Defined when the divisor is rational or the quotient is rational.
ExactReal operator/(const ExactReal& x, const ExactReal& y);

// x / y when that is rational; y must be nonzero.
std::optional<Rational> rational_ratio(const ExactReal& x, const ExactReal& y);

int sign(const ExactReal& x);
int compare(const ExactReal& x, const ExactReal& y);

inline bool operator==(const ExactReal& x, const ExactReal& y) { return compare(x, y) == 0; }
inline bool operator!=(const ExactReal& x, const ExactReal& y) { return compare(x, y) != 0; }
inline bool operator<(const ExactReal& x, const ExactReal& y) { return compare(x, y) < 0; }
inline bool operator<=(const ExactReal& x, const ExactReal& y) { return compare(x, y) <= 0; }
inline bool operator>(const ExactReal& x, const ExactReal& y) { return compare(x, y) > 0; }
inline bool operator>=(const ExactReal& x, const ExactReal& y) { return compare(x, y) >= 0; }

const ExactReal& min(const ExactReal& x, const ExactReal& y);
const ExactReal& max(const ExactReal& x, const ExactReal& y);
ExactReal abs(const ExactReal& x);

// Largest k with k*a <= t. Throws NonPositiveModulus unless a > 0.
std::int64_t floor_div(const ExactReal& t, const ExactReal& a);
// t - floor_div(t, a)*a, in [0, a).
ExactReal mod(const ExactReal& t, const ExactReal& a);

// x / r when it is an integer.
std::optional<Integer> lattice_index(const ExactReal& x, const ExactReal& r);
bool in_lattice(const ExactReal& x, const ExactReal& r);
// gcd(x/r, y/r) * r for x, y, r > 0 on the lattice rZ.
ExactReal lattice_gcd(const ExactReal& x, const ExactReal& y, const ExactReal& r);

// Throws ContextMismatch unless both live in the same field.
void require_same_context(const ExactReal& x, const ExactReal& y);

std::int64_t to_int64(const Integer& z);
std::ostream& operator<<(std::ostream& os, const ExactReal& x);

}  // namespace abcframe
