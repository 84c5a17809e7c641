#include "afx/parse.hpp"

#include <cctype>

namespace afx {

namespace {

class Parser {
  public:
    Parser(const std::string& text, const std::string& varset)
        : text_(text), varset_(normalize_varset(varset)) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

  private:
    const std::string& text_;
    std::string varset_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Poly expr() {
        bool neg = false;
        skip_ws();
        if (eat('-'))
            neg = true;
        else
            eat('+');
        Poly p = term();
        if (neg) p = -p;
        while (true) {
            if (eat('+')) {
                p = p + term();
            } else if (eat('-')) {
                p = p - term();
            } else {
                break;
            }
        }
        return p;
    }

    Poly term() {
        Poly p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Poly factor() {
        Poly p = atom();
        if (eat('^')) {
            skip_ws();
            size_t at = pos_;
            Int n = read_integer();
            if (n < 0) throw ParseError(at, "negative exponent");
            if (n > 4096) throw ParseError(at, "exponent too large");
            p = pow(p, static_cast<int>(n));
        }
        return p;
    }

    Poly atom() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Int num = read_integer();
            if (eat('/')) {
                skip_ws();
                size_t at = pos_;
                Int den = read_integer();
                if (den == 0) throw ParseError(at, "zero denominator");
                return Poly::constant(Rat(num, den), varset_);
            }
            return Poly::constant(Rat(num), varset_);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            if (varset_.find(c) == std::string::npos) fail(std::string("unknown variable '") + c + "'");
            ++pos_;
            return Poly::variable(c).with_vars(varset_);
        }
        fail("expected a number, variable, or '('");
    }

    Int read_integer() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        Int n = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            n = n * 10 + (text_[pos_] - '0');
            ++pos_;
        }
        return n;
    }
};

}  // namespace

Poly parse(const std::string& text, const std::string& varset) {
    return Parser(text, varset).run();
}

}  // namespace afx
