#include "abcframe_cli/number_expr.hpp"

#include <cctype>
#include <optional>

#include "abcframe/errors.hpp"

namespace abcframe::cli {

namespace {

// One irrational factor seen while scanning: pi, or sqrt(d) for square-free d.
struct Basis {
    bool is_pi = false;
    long radicand = 0;
    bool operator==(const Basis&) const = default;
};

class Parser {
public:
    Parser(std::string_view text, ContextPtr ctx) : text_(text), ctx_(std::move(ctx)) {}

    ExactReal parse() {
        skip();
        if (at_end()) fail("empty expression");
        ExactReal total(Rational(0), ctx_);
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = take() == '-' ? -1 : 1;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            ExactReal t = term();
            total = sign > 0 ? total + t : total - t;
            first = false;
        }
        return total;
    }

private:
    ExactReal term() {
        Rational coeff(1);
        std::optional<ExactReal> irrational;
        std::size_t irr_col = 0;
        auto absorb = [&](bool divide) {
            std::size_t col = pos_;
            auto [r, x] = atom();
            if (x) {
                if (divide) fail_at(col, "division by an irrational value");
                if (irrational) fail_at(col, "product of two irrational values");
                irrational = *x;
                irr_col = col;
            } else if (divide) {
                if (sgn(r) == 0) fail_at(col, "division by zero");
                coeff /= r;
            } else {
                coeff *= r;
            }
        };
        absorb(false);
        while (!at_end() && (peek() == '*' || peek() == '/')) {
            bool divide = take() == '/';
            skip();
            absorb(divide);
        }
        (void)irr_col;
        if (irrational) return *irrational * coeff;
        return ExactReal(coeff, ctx_);
    }

    // A rational atom, or an irrational one already expressed in ctx_.
    std::pair<Rational, std::optional<ExactReal>> atom() {
        if (at_end()) fail("expected a number, 'pi' or 'sqrt('");
        std::size_t col = pos_;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            Integer n = integer();
            return {Rational(n), std::nullopt};
        }
        if (word("pi")) {
            if (ctx_->kind() != ContextKind::Pi) {
                throw ContextMismatch("'pi' at column " + std::to_string(col + 1) + " under context " +
                                      ctx_->describe());
            }
            return {Rational(0), ExactReal(Rational(0), Rational(1), ctx_)};
        }
        if (word("sqrt")) {
            expect('(');
            std::size_t num_col = pos_;
            if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer radicand");
            Integer d = integer();
            expect(')');
            if (sgn(d) <= 0) fail_at(num_col, "radicand must be positive");
            if (!d.fits_slong_p()) fail_at(num_col, "radicand too large");
            auto [root, rest] = square_free_split(d.get_si());
            if (rest == 1) return {Rational(root), std::nullopt};
            if (ctx_->kind() != ContextKind::Surd || ctx_->radicand() != rest) {
                throw ContextMismatch("'sqrt(" + d.get_str() + ")' at column " + std::to_string(col + 1) +
                                      " under context " + ctx_->describe());
            }
            return {Rational(0), ExactReal(Rational(0), Rational(root), ctx_)};
        }
        fail("expected a number, 'pi' or 'sqrt('");
    }

    Integer integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        Integer n(std::string(text_.substr(start, pos_ - start)));
        skip();
        return n;
    }

    bool word(std::string_view w) {
        if (text_.substr(pos_, w.size()) != w) return false;
        std::size_t end = pos_ + w.size();
        if (end < text_.size() && std::isalnum(static_cast<unsigned char>(text_[end]))) return false;
        pos_ = end;
        skip();
        return true;
    }

    void expect(char ch) {
        if (at_end() || peek() != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
        skip();
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }

    [[noreturn]] void fail(const std::string& what) { fail_at(pos_, what); }
    [[noreturn]] void fail_at(std::size_t col, const std::string& what) {
        throw SyntaxError(what, col + 1);
    }

    std::string_view text_;
    ContextPtr ctx_;
    std::size_t pos_ = 0;
};

// Bases mentioned in a text, found by a plain scan (syntax is checked later).
std::vector<Basis> bases_in(std::string_view text) {
    std::vector<Basis> out;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text.substr(i, 2) == "pi") {
            out.push_back({true, 0});
            ++i;
        } else if (text.substr(i, 4) == "sqrt") {
            std::size_t j = i + 4;
            while (j < text.size() && !std::isdigit(static_cast<unsigned char>(text[j])) && text[j] != ')') ++j;
            std::size_t start = j;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            if (j > start && j - start < 18) {
                long d = std::stol(std::string(text.substr(start, j - start)));
                if (d > 0) {
                    auto [root, rest] = square_free_split(d);
                    (void)root;
                    if (rest != 1) out.push_back({false, rest});
                }
            }
            i = j;
        }
    }
    return out;
}

}  // namespace

ExactReal parse_number(std::string_view text, const ContextPtr& ctx) { return Parser(text, ctx).parse(); }

ContextPtr context_from_name(std::string_view name) {
    if (name == "rational") return NumberContext::rational();
    if (name == "pi") return NumberContext::pi();
    if (name.substr(0, 5) == "sqrt:") {
        std::string digits(name.substr(5));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
            throw SyntaxError("bad context '" + std::string(name) + "'", 6);
        }
        return NumberContext::surd(std::stol(digits));
    }
    throw SyntaxError("unknown context '" + std::string(name) + "' (use rational, pi or sqrt:D)", 1);
}

ContextPtr infer_context(const std::vector<std::string>& texts) {
    std::optional<Basis> seen;
    for (const auto& t : texts) {
        for (const auto& b : bases_in(t)) {
            if (seen && !(*seen == b)) {
                throw ContextMismatch("expressions mix two irrational bases");
            }
            seen = b;
        }
    }
    if (!seen) return NumberContext::rational();
    if (seen->is_pi) return NumberContext::pi();
    return NumberContext::surd(seen->radicand);
}

}  // namespace abcframe::cli
