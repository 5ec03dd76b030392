#include "egh/parse.hpp"

#include <cctype>

#include "egh/errors.hpp"
#include "egh/fp.hpp"

namespace egh {

namespace {

// Recursive-descent parser:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer | variable | '(' expr ')'
class Parser {
public:
    Parser(std::string_view text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        skip_ws();
        Polynomial p = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'",
                             pos_);
        return p;
    }

private:
    static constexpr int kMaxExponent = 4096;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool peek_is(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

    bool consume(char c) {
        if (peek_is(c)) {
            ++pos_;
            skip_ws();
            return true;
        }
        return false;
    }

    Polynomial parse_expr() {
        bool negate = consume('-');
        Polynomial acc = parse_term();
        if (negate) acc = -acc;
        for (;;) {
            if (consume('+')) {
                acc = acc + parse_term();
            } else if (consume('-')) {
                acc = acc - parse_term();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        while (consume('*')) acc = acc * parse_factor();
        return acc;
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (consume('^')) {
            std::size_t at = pos_;
            long long e = parse_integer("exponent");
            if (e > kMaxExponent) throw ParseError("exponent too large", at);
            return base.pow(int(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::uint32_t v = parse_coefficient();
            return Polynomial::constant(ring_, static_cast<long long>(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos_;
            std::string name = parse_identifier();
            int idx = ring_->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial::variable(ring_, idx);
        }
        if (c == '(') {
            ++pos_;
            skip_ws();
            Polynomial inner = parse_expr();
            if (!consume(')')) throw ParseError("expected ')'", pos_);
            return inner;
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    // Digits reduced mod p on the fly, so arbitrarily long literals stay exact.
    std::uint32_t parse_coefficient() {
        const std::uint32_t p = ring_->characteristic();
        std::uint32_t acc = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            acc = fp_add(fp_mul(acc, 10 % p, p), std::uint32_t(text_[pos_] - '0') % p, p);
            ++pos_;
        }
        skip_ws();
        return acc;
    }

    long long parse_integer(const char* what) {
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw ParseError(std::string("expected ") + what, pos_);
        long long acc = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            acc = acc * 10 + (text_[pos_] - '0');
            if (acc > (1LL << 40)) throw ParseError("integer too large", pos_);
            ++pos_;
        }
        skip_ws();
        return acc;
    }

    std::string parse_identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_')
                ++pos_;
            else
                break;
        }
        std::string name(text_.substr(start, pos_ - start));
        skip_ws();
        return name;
    }

    std::string_view text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

}  // namespace egh
