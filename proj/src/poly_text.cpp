#include "pend/poly_text.hpp"

#include <algorithm>
#include <cctype>

#include "pend/spoly.hpp"

namespace pend {

namespace {

struct Parser {
    const std::string& s;
    size_t i = 0;
    const std::vector<std::string>& vars;
    const FieldSpec& field;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error("parse error at position " + std::to_string(i) + ": " + msg +
                          " in \"" + s + "\"");
    }

    MultiPoly expr() {
        MultiPoly r = term();
        while (true) {
            if (eat('+')) {
                r = r + term();
            } else if (eat('-')) {
                r = r - term();
            } else {
                return r;
            }
        }
    }

    MultiPoly term() {
        MultiPoly r = factor();
        while (true) {
            char c = peek();
            if (c == '*') {
                ++i;
                r = r * factor();
            } else if (c == '/') {
                ++i;
                MultiPoly d = factor();
                if (!d.is_constant()) fail("division only by constants");
                if (d.constant_value().is_zero()) fail("division by zero");
                r = r * d.constant_value().inverse();
            } else {
                return r;
            }
        }
    }

    MultiPoly factor() {
        skip();
        if (eat('-')) return -factor();
        if (eat('+')) return factor();
        MultiPoly b = atom();
        if (eat('^')) {
            skip();
            if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
                fail("exponent must be a nonnegative integer");
            unsigned long e = 0;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
                e = e * 10 + static_cast<unsigned long>(s[i] - '0');
                if (e > 100000) fail("exponent too large");
                ++i;
            }
            return b.pow(static_cast<unsigned>(e));
        }
        return b;
    }

    MultiPoly atom() {
        skip();
        if (i >= s.size()) fail("unexpected end of input");
        char c = s[i];
        if (c == '(') {
            ++i;
            MultiPoly r = expr();
            if (!eat(')')) fail("expected )");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string num;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) num += s[i++];
            Rat r(num);
            r.canonicalize();
            return MultiPoly::constant(Scalar(r), vars);
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (i < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
                id += s[i++];
            for (const auto& v : vars)
                if (v == id) return MultiPoly::variable(id, vars);
            if (field.kind != FieldKind::Q && field.gen == id) {
                Scalar g = field.kind == FieldKind::RatFn ? Scalar::ratfunc_gen(field.gen)
                                                          : Scalar::nf_gen(field.nf);
                return MultiPoly::constant(g, vars);
            }
            fail("unknown identifier '" + id + "'");
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     const FieldSpec& field) {
    std::vector<std::string> sorted = vars;
    std::sort(sorted.begin(), sorted.end());
    Parser p{text, 0, sorted, field};
    MultiPoly r = p.expr();
    p.skip();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

FieldSpec parse_number_field(const std::string& modulus_text, const std::string& gen) {
    MultiPoly m = parse_poly(modulus_text, {gen});
    SPoly sp = SPoly::from_multipoly(m, gen);
    std::vector<Rat> qc(sp.deg() + 1);
    for (int i = 0; i <= sp.deg(); ++i) qc[i] = sp[i].rational();
    auto nf = std::make_shared<const NumberField>(QPoly(std::move(qc)), gen);
    return FieldSpec::number_field(nf);
}

FieldSpec parse_field_spec(const std::string& tag) {
    if (tag == "Q") return FieldSpec::rationals();
    if (tag.size() >= 4 && tag.substr(0, 2) == "Q(" && tag.back() == ')') {
        std::string gen = tag.substr(2, tag.size() - 3);
        if (gen.empty()) throw parse_error("empty generator in field tag " + tag);
        return FieldSpec::rational_functions(gen);
    }
    throw parse_error("unknown field tag \"" + tag + "\" (expected Q or Q(<var>))");
}

}  // namespace pend
