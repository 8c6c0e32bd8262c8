#ifndef HERMSIG_EXPRESSION_HPP
#define HERMSIG_EXPRESSION_HPP

// Text form of polynomials. Grammar (whitespace-insensitive):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary | unary)*      juxtaposition multiplies
//   unary   := ('+' | '-') unary | power
//   power   := primary ('^' exponent)?                 exponent: integer or (integer)
//   primary := integer | 'i' | z1..z9 | ~z1..~z9 | x1..x9
//            | '(' expr ')' | 'sqrt' '(' expr ')' | '|' expr '|'
// |E| must be raised to an even power; |E|^(2k) means (E * conj(E))^k.
// Division is by nonzero constants only.

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "herm_poly.hpp"

namespace hermsig {

class parse_error : public std::invalid_argument {
public:
    parse_error(std::size_t pos, const std::string& what)
        : std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what), pos_(pos)
    {
    }
    [[nodiscard]] std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct ParsedExpression {
    enum class Kind { hermitian, real };
    Kind kind = Kind::hermitian;
    std::optional<HermPoly> herm;
    std::optional<RealPoly> real;

    [[nodiscard]] bool is_hermitian() const { return kind == Kind::hermitian; }
};

namespace expr_detail {

// working arity: z1..z9 at 0..8, ~z1..~z9 at 9..17, x1..x9 at 18..26
inline constexpr unsigned kSlots = 9;
inline constexpr unsigned kArity = 3 * kSlots;

using Work = Poly<ComplexScalar>;

inline Work conj(const Work& p)
{
    Work out(kArity);
    for (const auto& [m, c] : p.terms()) {
        MultiIndex s(kArity);
        for (unsigned j = 0; j < kSlots; ++j) {
            s.set(j, m[kSlots + j]);
            s.set(kSlots + j, m[j]);
            s.set(2 * kSlots + j, m[2 * kSlots + j]);
        }
        out.add_term(s, c.conj());
    }
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    Work parse()
    {
        Work w = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return w;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    unsigned abs_depth_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw parse_error(pos_, what); }

    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek()
    {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool starts_primary()
    {
        const char c = peek();
        if (c == '|') return abs_depth_ == 0;
        return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == '~' || c == 'z' || c == 'x' || c == 'i' || c == 's';
    }

    Work expr()
    {
        Work w = term();
        for (;;) {
            if (accept('+')) w = w + term();
            else if (accept('-')) w = w - term();
            else return w;
        }
    }

    Work term()
    {
        Work w = unary();
        for (;;) {
            if (accept('*')) {
                w = w * unary();
            } else if (peek() == '/') {
                const std::size_t at = pos_++;
                Work d = unary();
                if (!d.is_constant()) throw parse_error(at, "division by a non-constant");
                const ComplexScalar c = d.coefficient(MultiIndex(kArity));
                if (c.is_zero()) throw parse_error(at, "division by zero");
                w = c.inverse() * w;
            } else if (starts_primary()) {
                w = w * unary();
            } else {
                return w;
            }
        }
    }

    Work unary()
    {
        if (accept('-')) return ComplexScalar(-1) * unary();
        if (accept('+')) return unary();
        return power();
    }

    unsigned exponent()
    {
        const bool paren = accept('(');
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a non-negative integer exponent");
        if (pos_ - start > 4) throw parse_error(start, "exponent too large");
        const unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
        if (paren) expect(')');
        return e;
    }

    Work power()
    {
        skip();
        const std::size_t at = pos_;
        if (accept('|')) {
            ++abs_depth_;
            Work inner = expr();
            --abs_depth_;
            expect('|');
            if (!accept('^')) throw parse_error(at, "|...| must be raised to an even power");
            const unsigned e = exponent();
            if (e % 2) throw parse_error(at, "|...| must be raised to an even power");
            return (inner * conj(inner)).pow(e / 2);
        }
        Work base = primary();
        if (accept('^')) return base.pow(exponent());
        return base;
    }

    unsigned index()
    {
        if (pos_ >= s_.size() || s_[pos_] < '1' || s_[pos_] > '9') fail("expected a variable index 1..9");
        const unsigned j = static_cast<unsigned>(s_[pos_++] - '1');
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("variable index above 9");
        return j;
    }

    Work primary()
    {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpq_class q(mpz_class(std::string(s_.substr(start, pos_ - start))));
            return Work::constant(kArity, ComplexScalar(Scalar(q)));
        }
        if (accept('(')) {
            Work w = expr();
            expect(')');
            return w;
        }
        if (s_.substr(pos_, 4) == "sqrt") {
            const std::size_t at = pos_;
            pos_ += 4;
            expect('(');
            Work w = expr();
            expect(')');
            if (!w.is_constant()) throw parse_error(at, "sqrt of a non-constant");
            const ComplexScalar k = w.coefficient(MultiIndex(kArity));
            if (!k.is_real() || k.re().sign() <= 0) throw parse_error(at, "sqrt needs a positive real constant");
            try {
                return Work::constant(kArity, ComplexScalar(sqrt_of(k.re())));
            } catch (const std::exception& e) {
                throw parse_error(at, e.what());
            }
        }
        if (c == 'i') {
            ++pos_;
            return Work::constant(kArity, ComplexScalar::i());
        }
        if (c == '~') {
            ++pos_;
            skip();
            if (pos_ >= s_.size() || s_[pos_] != 'z') fail("expected z after ~");
            ++pos_;
            return Work::variable(kArity, kSlots + index());
        }
        if (c == 'z') {
            ++pos_;
            return Work::variable(kArity, index());
        }
        if (c == 'x') {
            ++pos_;
            return Work::variable(kArity, 2 * kSlots + index());
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

} // namespace expr_detail

/// Parses a (z, ~z) expression into a HermPoly or an x-expression into a
/// RealPoly. `vars` forces the number of z variables (default: highest used).
inline ParsedExpression parse_expression(std::string_view text, std::optional<unsigned> vars = std::nullopt)
{
    using namespace expr_detail;
    Work w = Parser(text).parse();
    unsigned zmax = 0, xmax = 0;
    for (const auto& [m, c] : w.terms())
        for (unsigned j = 0; j < kSlots; ++j) {
            if (m[j] || m[kSlots + j]) zmax = std::max(zmax, j + 1);
            if (m[2 * kSlots + j]) xmax = std::max(xmax, j + 1);
        }
    if (zmax && xmax) throw parse_error(0, "expression mixes z and x variables");
    ParsedExpression out;
    if (xmax) {
        const unsigned n = vars ? *vars : xmax;
        if (n < xmax) throw parse_error(0, "expression uses x" + std::to_string(xmax) + " but only " + std::to_string(n) + " variables were requested");
        out.kind = ParsedExpression::Kind::real;
        RealPoly p(n);
        for (const auto& [m, c] : w.terms()) {
            if (!c.is_real()) throw parse_error(0, "real polynomial with non-real coefficient " + c.to_string());
            p.add_term(m.slice(2 * kSlots, n), c.re());
        }
        out.real = std::move(p);
        return out;
    }
    const unsigned n = vars ? *vars : std::max(zmax, 1u);
    if (n < zmax) throw parse_error(0, "expression uses z" + std::to_string(zmax) + " but only " + std::to_string(n) + " variables were requested");
    ComplexPoly p(2 * n);
    for (const auto& [m, c] : w.terms()) p.add_term(concat(m.slice(0, n), m.slice(kSlots, n)), c);
    try {
        out.herm = HermPoly::from_poly(std::move(p), n);
    } catch (const not_hermitian& e) {
        throw not_hermitian(std::string("not Hermitian symmetric: ") + e.what());
    }
    return out;
}

inline HermPoly parse_hermitian(std::string_view text, std::optional<unsigned> vars = std::nullopt)
{
    ParsedExpression e = parse_expression(text, vars);
    if (!e.is_hermitian()) throw parse_error(0, "expected an expression in z and ~z");
    return *e.herm;
}

inline RealPoly parse_real(std::string_view text, std::optional<unsigned> vars = std::nullopt)
{
    ParsedExpression e = parse_expression(text, vars);
    if (e.is_hermitian()) {
        // a constant parses as Hermitian; accept it as a real constant too
        if (e.herm->poly().total_degree() == 0 && !e.herm->is_zero()) {
            const ComplexScalar c = e.herm->poly().terms().begin()->second;
            return RealPoly::constant(vars ? *vars : 1, c.re());
        }
        if (e.herm->is_zero()) return RealPoly(vars ? *vars : 1);
        throw parse_error(0, "expected an expression in x variables");
    }
    return *e.real;
}

} // namespace hermsig

#endif
