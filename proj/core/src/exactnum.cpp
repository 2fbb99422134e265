#include "abcframe/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include <mpfr.h>

#include "abcframe/errors.hpp"

namespace abcframe {

namespace {

constexpr unsigned kStartBits = 64;

Rational mpfr_to_rational(const mpfr_t v) {
    Integer mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), v);
    Rational r(mant);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    r.canonicalize();
    return r;
}

std::pair<Rational, Rational> pi_enclosure(unsigned bits) {
    mpfr_t lo, hi;
    mpfr_init2(lo, bits);
    mpfr_init2(hi, bits);
    mpfr_const_pi(lo, MPFR_RNDD);
    mpfr_const_pi(hi, MPFR_RNDU);
    auto out = std::make_pair(mpfr_to_rational(lo), mpfr_to_rational(hi));
    mpfr_clear(lo);
    mpfr_clear(hi);
    return out;
}

std::pair<Rational, Rational> surd_enclosure(long d, unsigned bits) {
    Integer scaled = Integer(d) << (2 * bits);
    Integer s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Rational lo(s), hi(Integer(s + 1));
    mpq_div_2exp(lo.get_mpq_t(), lo.get_mpq_t(), bits);
    mpq_div_2exp(hi.get_mpq_t(), hi.get_mpq_t(), bits);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

std::string render_rational(const Rational& r) {
    return r.get_str();
}

std::string render_tau_term(const Rational& coef, const std::string& basis, bool leading) {
    std::string out;
    Integer num = abs(coef.get_num());
    const Integer& den = coef.get_den();
    if (sgn(coef) < 0) {
        out += "-";
    } else if (!leading) {
        out += "+";
    }
    if (num != 1) out += num.get_str() + "*";
    out += basis;
    if (den != 1) out += "/" + den.get_str();
    return out;
}

}  // namespace

NumberContext::NumberContext(ContextKind kind, long radicand, unsigned cap)
    : kind_(kind), radicand_(radicand), cap_(cap) {}

ContextPtr NumberContext::rational() {
    static const ContextPtr inst = std::make_shared<NumberContext>(ContextKind::Rational, 0, 0);
    return inst;
}

ContextPtr NumberContext::surd(long d) {
    if (d < 2) throw ContextMismatch("sqrt context needs d >= 2, got " + std::to_string(d));
    auto [s, m] = square_free_split(d);
    if (m == 1) throw ContextMismatch("sqrt(" + std::to_string(d) + ") is rational");
    if (m != d) {
        throw ContextMismatch("sqrt context radicand must be square-free, got " + std::to_string(d));
    }
    return std::make_shared<NumberContext>(ContextKind::Surd, d, kDefaultPrecisionCap);
}

ContextPtr NumberContext::pi(unsigned precision_cap) {
    if (precision_cap == kDefaultPrecisionCap) {
        static const ContextPtr inst =
            std::make_shared<NumberContext>(ContextKind::Pi, 0, kDefaultPrecisionCap);
        return inst;
    }
    return std::make_shared<NumberContext>(ContextKind::Pi, 0, precision_cap);
}

std::string NumberContext::basis_name() const {
    switch (kind_) {
        case ContextKind::Rational: return "";
        case ContextKind::Surd: return "sqrt(" + std::to_string(radicand_) + ")";
        case ContextKind::Pi: return "pi";
    }
    return "";
}

std::string NumberContext::describe() const {
    switch (kind_) {
        case ContextKind::Rational: return "rational";
        case ContextKind::Surd: return "sqrt:" + std::to_string(radicand_);
        case ContextKind::Pi: return "pi";
    }
    return "";
}

std::pair<Rational, Rational> NumberContext::enclosure(unsigned bits) const {
    if (kind_ == ContextKind::Rational) throw ContextMismatch("rational context has no basis constant");
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& [b, enc] : cache_) {
        if (b >= bits) return enc;
    }
    auto enc = kind_ == ContextKind::Pi ? pi_enclosure(bits) : surd_enclosure(radicand_, bits);
    cache_.emplace_back(bits, enc);
    std::sort(cache_.begin(), cache_.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return enc;
}

std::pair<Integer, long> square_free_split(long n) {
    if (n <= 0) throw NonPositiveInput("square_free_split needs n > 0");
    Integer s = 1;
    long m = 1;
    long rest = n;
    for (long f = 2; f * f <= rest; ++f) {
        int e = 0;
        while (rest % f == 0) {
            rest /= f;
            ++e;
        }
        for (int i = 0; i < e / 2; ++i) s *= f;
        if (e % 2) m *= f;
    }
    m *= rest;
    return {s, m};
}

ExactReal::ExactReal() : x0_(0), x1_(0), ctx_(NumberContext::rational()) {}

ExactReal::ExactReal(Rational rational_part, ContextPtr ctx)
    : x0_(std::move(rational_part)), x1_(0), ctx_(std::move(ctx)) {
    x0_.canonicalize();
}

ExactReal::ExactReal(Rational rational_part, Rational tau_part, ContextPtr ctx)
    : x0_(std::move(rational_part)), x1_(std::move(tau_part)), ctx_(std::move(ctx)) {
    x0_.canonicalize();
    x1_.canonicalize();
    if (ctx_->kind() == ContextKind::Rational && sgn(x1_) != 0) {
        throw ContextMismatch("irrational coefficient in a rational context");
    }
}

std::optional<Rational> ExactReal::as_rational() const {
    if (!is_rational()) return std::nullopt;
    return x0_;
}

ExactReal ExactReal::operator-() const {
    return ExactReal(Rational(-x0_), Rational(-x1_), ctx_);
}

ExactReal& ExactReal::operator+=(const ExactReal& o) {
    require_same_context(*this, o);
    if (ctx_->kind() == ContextKind::Rational) ctx_ = o.ctx_;
    x0_ += o.x0_;
    x1_ += o.x1_;
    return *this;
}

ExactReal& ExactReal::operator-=(const ExactReal& o) {
    require_same_context(*this, o);
    if (ctx_->kind() == ContextKind::Rational) ctx_ = o.ctx_;
    x0_ -= o.x0_;
    x1_ -= o.x1_;
    return *this;
}

ExactReal& ExactReal::operator*=(const Rational& r) {
    x0_ *= r;
    x1_ *= r;
    return *this;
}

ExactReal& ExactReal::operator/=(const Rational& r) {
    if (sgn(r) == 0) throw UnsupportedDivision("division by zero");
    x0_ /= r;
    x1_ /= r;
    return *this;
}

double ExactReal::approx() const {
    double tau = 0.0;
    switch (ctx_->kind()) {
        case ContextKind::Rational: return x0_.get_d();
        case ContextKind::Surd: tau = std::sqrt(static_cast<double>(ctx_->radicand())); break;
        case ContextKind::Pi: tau = std::numbers::pi; break;
    }
    return x0_.get_d() + x1_.get_d() * tau;
}

std::string ExactReal::to_string() const {
    if (sgn(x1_) == 0) return render_rational(x0_);
    std::string basis = ctx_->basis_name();
    if (sgn(x0_) == 0) return render_tau_term(x1_, basis, true);
    return render_rational(x0_) + render_tau_term(x1_, basis, false);
}

std::ostream& operator<<(std::ostream& os, const ExactReal& x) {
    return os << x.to_string();
}

void require_same_context(const ExactReal& x, const ExactReal& y) {
    if (x.context() == y.context()) return;
    // plain rationals live in every field
    if (x.context()->kind() == ContextKind::Rational || y.context()->kind() == ContextKind::Rational) return;
    if (!x.context()->same_field(*y.context())) {
        throw ContextMismatch("mixing " + x.context()->describe() + " and " +
                              y.context()->describe() + " values");
    }
}

ExactReal operator+(ExactReal x, const ExactReal& y) { return x += y; }
ExactReal operator-(ExactReal x, const ExactReal& y) { return x -= y; }
ExactReal operator*(ExactReal x, const Rational& r) { return x *= r; }
ExactReal operator*(const Rational& r, ExactReal x) { return x *= r; }
ExactReal operator*(ExactReal x, long k) { return x *= Rational(k); }
ExactReal operator*(long k, ExactReal x) { return x *= Rational(k); }
ExactReal operator/(ExactReal x, const Rational& r) { return x /= r; }

ExactReal operator*(const ExactReal& x, const ExactReal& y) {
    require_same_context(x, y);
    if (y.is_rational()) return x * y.rational_part();
    if (x.is_rational()) return y * x.rational_part();
    if (x.context()->kind() == ContextKind::Surd) {
        Rational d(x.context()->radicand());
        Rational r0 = x.rational_part() * y.rational_part() + x.tau_part() * y.tau_part() * d;
        Rational r1 = x.rational_part() * y.tau_part() + x.tau_part() * y.rational_part();
        return ExactReal(r0, r1, x.context());
    }
    throw NotRepresentable("product of two pi-dependent values leaves Q + Q*pi");
}

ExactReal operator/(const ExactReal& x, const ExactReal& y) {
    require_same_context(x, y);
    if (y.is_zero()) throw UnsupportedDivision("division by zero");
    if (y.is_rational()) return x / y.rational_part();
    if (auto q = rational_ratio(x, y)) return ExactReal(*q, x.context());
    throw UnsupportedDivision("quotient " + x.to_string() + " / " + y.to_string() +
                              " is not rational");
}

std::optional<Rational> rational_ratio(const ExactReal& x, const ExactReal& y) {
    require_same_context(x, y);
    if (y.is_zero()) throw UnsupportedDivision("division by zero");
    if (y.is_rational()) {
        if (!x.is_rational()) return std::nullopt;
        return Rational(x.rational_part() / y.rational_part());
    }
    Rational rho = x.tau_part() / y.tau_part();
    if (x.rational_part() != rho * y.rational_part()) return std::nullopt;
    return rho;
}

int sign(const ExactReal& x) {
    const Rational& x0 = x.rational_part();
    const Rational& x1 = x.tau_part();
    int s0 = sgn(x0);
    int s1 = sgn(x1);
    if (s1 == 0) return s0;
    const NumberContext& ctx = *x.context();
    if (ctx.kind() == ContextKind::Surd) {
        if (s0 == 0 || s0 == s1) return s1;
        Rational lhs = x0 * x0;
        Rational rhs = x1 * x1 * Rational(ctx.radicand());
        return lhs > rhs ? s0 : s1;
    }
    for (unsigned bits = kStartBits; bits <= ctx.precision_cap(); bits *= 2) {
        auto [lo, hi] = ctx.enclosure(bits);
        Rational v_lo = x0 + x1 * lo;
        Rational v_hi = x0 + x1 * hi;
        if (v_lo > v_hi) std::swap(v_lo, v_hi);
        if (sgn(v_lo) > 0) return 1;
        if (sgn(v_hi) < 0) return -1;
    }
    throw PrecisionExhausted("sign of " + x.to_string() + " undecided at " +
                             std::to_string(ctx.precision_cap()) + " bits");
}

int compare(const ExactReal& x, const ExactReal& y) {
    require_same_context(x, y);
    if (x.is_rational() && y.is_rational()) return cmp(x.rational_part(), y.rational_part());
    return sign(x - y);
}

const ExactReal& min(const ExactReal& x, const ExactReal& y) { return y < x ? y : x; }
const ExactReal& max(const ExactReal& x, const ExactReal& y) { return x < y ? y : x; }
ExactReal abs(const ExactReal& x) { return sign(x) < 0 ? -x : x; }

std::int64_t to_int64(const Integer& z) {
    if (!z.fits_slong_p()) throw NotRepresentable("integer " + z.get_str() + " exceeds 64 bits");
    return z.get_si();
}

namespace {

Integer floor_rational(const Rational& r) {
    Integer out;
    mpz_fdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return out;
}

// Midpoint-of-enclosure estimate of x, good enough to seed a candidate.
Rational estimate(const ExactReal& x) {
    if (x.is_rational()) return x.rational_part();
    auto [lo, hi] = x.context()->enclosure(kStartBits);
    return x.rational_part() + x.tau_part() * lo;
}

}  // namespace

std::int64_t floor_div(const ExactReal& t, const ExactReal& a) {
    require_same_context(t, a);
    if (sign(a) <= 0) throw NonPositiveModulus("floor_div modulus must be positive, got " + a.to_string());
    if (auto q = rational_ratio(t, a)) return to_int64(floor_rational(*q));
    Rational est = estimate(t) / estimate(a);
    Integer k = floor_rational(est);
    // certify k*a <= t < (k+1)*a
    while (sign(t - a * Rational(k)) < 0) k -= 1;
    while (sign(t - a * Rational(Integer(k + 1))) >= 0) k += 1;
    return to_int64(k);
}

ExactReal mod(const ExactReal& t, const ExactReal& a) {
    std::int64_t k = floor_div(t, a);
    return t - a * k;
}

std::optional<Integer> lattice_index(const ExactReal& x, const ExactReal& r) {
    auto q = rational_ratio(x, r);
    if (!q || q->get_den() != 1) return std::nullopt;
    return q->get_num();
}

bool in_lattice(const ExactReal& x, const ExactReal& r) {
    return lattice_index(x, r).has_value();
}

ExactReal lattice_gcd(const ExactReal& x, const ExactReal& y, const ExactReal& r) {
    if (sign(x) <= 0 || sign(y) <= 0 || sign(r) <= 0) {
        throw NonPositiveInput("lattice_gcd needs positive arguments");
    }
    auto i = lattice_index(x, r);
    auto j = lattice_index(y, r);
    if (!i) throw NotOnLattice(x.to_string() + " is not a multiple of " + r.to_string());
    if (!j) throw NotOnLattice(y.to_string() + " is not a multiple of " + r.to_string());
    Integer g;
    mpz_gcd(g.get_mpz_t(), i->get_mpz_t(), j->get_mpz_t());
    return r * Rational(g);
}

}  // namespace abcframe
