#include "qhopf/expr.hpp"

#include <cctype>

namespace qhopf {

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(0, msg + " at position " + std::to_string(pos + 1));
    }

    bool done() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos;
        return true;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool at_number() { return std::isdigit(static_cast<unsigned char>(peek())); }

    bool at_name() {
        char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }

    long long number() {
        skip_ws();
        if (!at_number()) fail("expected a number");
        long long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            if (v > (1ll << 62)) fail("number too large");
            ++pos;
        }
        return v;
    }

    // Identifier, optionally with a trailing '*'.
    std::string name() {
        skip_ws();
        if (!at_name()) fail("expected a name");
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos < s.size() && s[pos] == '*') ++pos;
        return s.substr(start, pos - start);
    }

    // Vertex names may also be bare numbers, and never carry '*'.
    std::string vertex_name() {
        skip_ws();
        if (!at_name() && !at_number()) fail("expected a vertex name");
        std::size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

struct Parser {
    Lexer lx;
    const DoubleQuiver& dq;

    // rational [h-part] or bare h-part; sign handled by the caller.
    HPoly simple_coeff() {
        Rat c = 1;
        bool have_number = false;
        if (lx.at_number()) {
            have_number = true;
            long long num = lx.number();
            long long den = 1;
            if (lx.eat('/')) den = lx.number();
            if (den == 0) lx.fail("zero denominator");
            c = rat(num, den);
        }
        int k = 0;
        std::size_t save = lx.pos;
        if (lx.at_name()) {
            std::string n = lx.name();
            if (n == "h") {
                k = 1;
                if (lx.eat('^')) k = static_cast<int>(lx.number());
            } else {
                lx.pos = save;
                if (!have_number) lx.fail("expected a coefficient");
            }
        } else if (!have_number) {
            lx.fail("expected a coefficient");
        }
        return HPoly(c, k);
    }

    HPoly coeff_sum() {
        HPoly total;
        bool neg = lx.eat('-');
        if (!neg) lx.eat('+');
        while (true) {
            HPoly t = simple_coeff();
            total += neg ? -t : t;
            if (lx.eat('-'))
                neg = true;
            else if (lx.eat('+'))
                neg = false;
            else
                break;
        }
        return total;
    }

    // True when the parenthesized group at the current '(' consists solely
    // of dart names, i.e. is a necklace and not a coefficient sum. A name
    // that is neither a dart nor the reserved "h" is reported right away.
    bool paren_is_word() {
        std::size_t save = lx.pos;
        lx.expect('(');
        bool is_word = true;
        bool any = false;
        while (!lx.eat(')')) {
            if (lx.done() || !lx.at_name()) {
                is_word = false;
                break;
            }
            std::size_t name_at = lx.pos;
            std::string n = lx.name();
            any = true;
            if (dq.dart_id(n) < 0) {
                if (n != "h") {
                    lx.pos = name_at;
                    lx.fail("unknown edge '" + n + "'");
                }
                is_word = false;
                break;
            }
        }
        lx.pos = save;
        return is_word && any;
    }

    Necklace factor() {
        if (lx.eat('@')) {
            std::string v = lx.vertex_name();
            VertexId id = dq.base.vertex_id(v);
            if (id < 0) lx.fail("unknown vertex '" + v + "'");
            return Necklace::idempotent(id);
        }
        lx.expect('(');
        std::vector<DartId> word;
        while (!lx.eat(')')) {
            std::string n = lx.name();
            DartId d = dq.dart_id(n);
            if (d < 0) lx.fail("unknown edge '" + n + "'");
            word.push_back(d);
        }
        if (word.empty()) lx.fail("empty necklace");
        try {
            return Necklace::cyclic(std::move(word), dq);
        } catch (const Error& e) {
            lx.fail(e.what());
        }
    }

    NecklaceMonomial monomial() {
        std::vector<Necklace> factors;
        factors.push_back(factor());
        while (lx.eat('&')) factors.push_back(factor());
        return NecklaceMonomial(std::move(factors));
    }

    // coeff, monomial, or coeff monomial.
    std::pair<HPoly, NecklaceMonomial> term() {
        HPoly c = HPoly::one();
        bool have_coeff = false;
        if (lx.at_number()) {
            c = simple_coeff();
            have_coeff = true;
        } else if (lx.at_name()) {
            // can only be an h-part here
            c = simple_coeff();
            have_coeff = true;
        } else if (lx.peek() == '(' && !paren_is_word()) {
            lx.expect('(');
            c = coeff_sum();
            lx.expect(')');
            have_coeff = true;
        }

        char next = lx.peek();
        if (next == '(' || next == '@') return {c, monomial()};
        if (!have_coeff) lx.fail("expected a term");
        return {c, NecklaceMonomial::unit()};
    }

    SymLElement element() {
        SymLElement out;
        bool neg = lx.eat('-');
        if (!neg) lx.eat('+');
        while (true) {
            auto [c, m] = term();
            out.add(m, neg ? -c : c);
            if (lx.eat('-'))
                neg = true;
            else if (lx.eat('+'))
                neg = false;
            else
                break;
        }
        if (!lx.done()) lx.fail("trailing input");
        return out;
    }
};

}  // namespace

SymLElement parse_element(const std::string& text, const DoubleQuiver& dq) {
    Parser p{Lexer{text}, dq};
    if (p.lx.done()) throw ParseError(0, "empty expression");
    return p.element();
}

}  // namespace qhopf
