#include "germlab/parser.hpp"

#include <cctype>

namespace germlab {

namespace {

constexpr unsigned long kMaxExponent = 4096; // far above anything a germ needs

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Poly run() {
        Poly p = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InputError("syntax error at position " + std::to_string(pos_) + ": " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
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
        bool negate = false;
        skip_ws();
        if (eat('-'))
            negate = true;
        else
            eat('+');
        Poly acc = term();
        if (negate)
            acc = -acc;
        while (true) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                acc = acc + term();
            } else if (c == '-') {
                ++pos_;
                acc = acc - term();
            } else {
                break;
            }
        }
        return acc;
    }

    Poly term() {
        Poly acc = factor();
        while (eat('*'))
            acc = acc * factor();
        return acc;
    }

    Poly factor() {
        Poly b = base();
        if (eat('^')) {
            unsigned long e = uint_lit();
            b = b.pow(e);
        }
        return b;
    }

    Poly base() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')'))
                fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return Poly::constant(ring_, rational_lit());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_')
            return variable();
        if (c == '\0')
            fail("unexpected end of input");
        fail(std::string("unexpected character '") + c + "'");
    }

    unsigned long uint_lit() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail("expected an integer");
        unsigned long v = 0;
        for (size_t i = start; i < pos_; ++i) {
            v = v * 10 + static_cast<unsigned long>(text_[i] - '0');
            if (v > kMaxExponent)
                fail("exponent too large");
        }
        return v;
    }

    Rat rational_lit() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        size_t num_end = pos_;
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            size_t den_start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == den_start)
                fail("expected denominator after '/'");
        }
        std::string lit = text_.substr(start, pos_ - start);
        // A bare "nnn" with no slash stays an integer literal.
        (void)num_end;
        Rat q = rat_from_string(lit);
        if (q.get_den() == 0)
            fail("zero denominator");
        return q;
    }

    Poly variable() {
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }
        // "2x" and "x y" must not silently multiply.
        if (pos_ < text_.size()) {
            size_t save = pos_;
            skip_ws();
            if (pos_ < text_.size() &&
                (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                 text_[pos_] == '(')) {
                fail("implicit multiplication is not allowed");
            }
            pos_ = save;
        }
        return Poly::variable(ring_, *idx);
    }

    const std::string& text_;
    RingPtr ring_;
    size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace germlab
