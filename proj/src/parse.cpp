#include "powsem/parse.hpp"

#include "powsem/errors.hpp"

#include <cctype>
#include <optional>

namespace powsem {

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c))
            throw parse_error(std::string("expected '") + c + "'", pos);
    }
    std::optional<std::string> ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return text.substr(start, pos - start);
    }
    std::optional<Int> integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) return std::nullopt;
        return Int(text.substr(start, pos - start));
    }
    Int expect_integer(const char* what) {
        auto v = integer();
        if (!v) throw parse_error(std::string("expected ") + what, pos);
        return *v;
    }
};

struct Parser {
    Lexer lex;
    std::optional<Int> declared_precision;

    explicit Parser(const std::string& text) : lex{text} {}

    Series parse() {
        Series s = sum(true);
        if (!lex.at_end()) throw parse_error("unexpected trailing input", lex.pos);
        if (declared_precision) {
            for (const auto& [e, c] : s.terms())
                if (e > *declared_precision)
                    throw parse_error("term exponent exceeds the declared O(z^N) precision",
                                      lex.pos);
            return Series::truncated_series(s.terms(), *declared_precision);
        }
        return s;
    }

    // `top` permits a trailing + O(z^N)
    Series sum(bool top) {
        bool negate = lex.accept('-');
        if (top && try_big_o()) {
            if (negate) throw parse_error("O(z^N) cannot be negated", lex.pos);
            return Series();
        }
        Series acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (lex.accept('+')) {
                if (top && try_big_o()) {
                    if (!lex.at_end()) throw parse_error("O(z^N) must end the series", lex.pos);
                    return acc;
                }
                acc = acc + term();
            } else if (lex.accept('-')) {
                acc = acc - term();
            } else {
                return acc;
            }
        }
    }

    bool try_big_o() {
        std::size_t save = lex.pos;
        auto id = lex.ident();
        if (id && *id == "O") {
            lex.expect('(');
            auto z = lex.ident();
            if (!z || *z != "z") throw parse_error("expected z inside O(...)", lex.pos);
            lex.expect('^');
            Int n = lex.expect_integer("a precision in O(z^N)");
            lex.expect(')');
            if (n < 1) throw parse_error("O(z^N) needs N >= 1", lex.pos);
            if (declared_precision) throw parse_error("duplicate O(z^N)", lex.pos);
            declared_precision = n;
            return true;
        }
        lex.pos = save;
        return false;
    }

    Series term() {
        Series acc = factor();
        for (;;) {
            if (lex.accept('*')) {
                acc = mul(acc, factor());
            } else if (lex.accept('/')) {
                Series rhs = factor();
                Cyclo divisor = constant_of(rhs, "division is only by constants");
                if (divisor.is_zero()) throw parse_error("division by zero", lex.pos);
                acc = acc.scaled(divisor.inverse());
            } else {
                return acc;
            }
        }
    }

    Series factor() {
        if (lex.accept('-')) return -factor();
        Series base = primary();
        if (lex.accept('^')) {
            if (lex.peek() == '-') throw parse_error("negative exponents are not supported", lex.pos);
            Int e = lex.expect_integer("an integer exponent");
            return pow_series(base, e);
        }
        return base;
    }

    Series primary() {
        if (auto n = lex.integer()) return Series::monomial(Cyclo(*n), Int(0));
        if (lex.peek() == '(') {
            lex.expect('(');
            Series inner = sum(false);
            lex.expect(')');
            return inner;
        }
        auto id = lex.ident();
        if (!id) throw parse_error("expected a term", lex.pos);
        if (*id == "z") return Series::identity();
        if (*id == "zeta") {
            lex.expect('(');
            Int m = lex.expect_integer("a conductor in zeta(m)");
            lex.expect(')');
            if (m < 1 || !m.fits_ulong_p())
                throw parse_error("zeta conductor must be a positive machine integer", lex.pos);
            return Series::monomial(Cyclo::zeta(m.get_ui()), Int(0));
        }
        if (*id == "O") throw parse_error("O(z^N) is only allowed as the final added term", lex.pos);
        throw parse_error("unknown symbol '" + *id + "'", lex.pos);
    }

    Cyclo constant_of(const Series& s, const char* message) {
        if (s.terms().empty()) return Cyclo(0l);
        if (s.terms().size() == 1 && s.terms().begin()->first == 0)
            return s.terms().begin()->second;
        throw parse_error(message, lex.pos);
    }
};

} // namespace

Series parse_series(const std::string& text) {
    Parser p(text);
    return p.parse();
}

Series parse_generator(const std::string& text) {
    Series s = parse_series(text);
    if (!s.terms().empty() && s.terms().begin()->first == 0)
        throw parse_error("semigroup elements must have zero constant term", 0);
    std::optional<Int> ord;
    try {
        ord = s.order();
    } catch (const indeterminate_order&) {
        throw parse_error("series has no visible nonzero coefficient", 0);
    }
    if (!ord) throw parse_error("the zero series is not a semigroup element", 0);
    if (*ord < 2) throw parse_error("semigroup elements here need order >= 2", 0);
    return s;
}

Monomial parse_monomial(const std::string& text) {
    Series s = parse_series(text);
    if (!s.exact() || s.terms().size() != 1)
        throw parse_error("expected a single exact monomial term", 0);
    const auto& [e, c] = *s.terms().begin();
    if (e < 2) throw parse_error("monomial degree must be at least 2", 0);
    return Monomial(c, e);
}

Cyclo parse_cyclo(const std::string& text) {
    Series s = parse_series(text);
    if (!s.exact()) throw parse_error("expected a constant, got a truncated series", 0);
    if (s.terms().empty()) return Cyclo(0l);
    if (s.terms().size() == 1 && s.terms().begin()->first == 0)
        return s.terms().begin()->second;
    throw parse_error("expected a constant expression", 0);
}

std::vector<std::string> literal_lines(const std::string& content) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= content.size()) {
        std::size_t end = content.find('\n', start);
        std::string line = content.substr(start, end == std::string::npos ? std::string::npos
                                                                          : end - start);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a != std::string::npos) {
            std::size_t b = line.find_last_not_of(" \t\r");
            out.push_back(line.substr(a, b - a + 1));
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return out;
}

} // namespace powsem
