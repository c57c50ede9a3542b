#include "pend/spoly.hpp"

#include <algorithm>

namespace pend {

SPoly SPoly::operator-() const {
    SPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

SPoly SPoly::operator+(const SPoly& o) const {
    std::vector<Scalar> v(std::max(c_.size(), o.c_.size()), Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return SPoly(std::move(v));
}

SPoly SPoly::operator-(const SPoly& o) const { return *this + (-o); }

SPoly SPoly::operator*(const SPoly& o) const {
    if (is_zero() || o.is_zero()) return SPoly();
    std::vector<Scalar> v(c_.size() + o.c_.size() - 1, Scalar(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return SPoly(std::move(v));
}

SPoly SPoly::operator*(const Scalar& s) const {
    if (s.is_zero()) return SPoly();
    SPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

bool SPoly::operator==(const SPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

std::pair<SPoly, SPoly> SPoly::divrem(const SPoly& d) const {
    if (d.is_zero()) throw degenerate_input_error("SPoly: division by zero");
    SPoly r(*this);
    if (r.deg() < d.deg()) return {SPoly(), r};
    std::vector<Scalar> q(r.deg() - d.deg() + 1, Scalar(0));
    Scalar dinv = d.lc().inverse();
    while (!r.is_zero() && r.deg() >= d.deg()) {
        int k = r.deg() - d.deg();
        Scalar f = r.lc() * dinv;
        q[k] = f;
        std::vector<Scalar> rv = r.c_;
        for (int i = 0; i <= d.deg(); ++i) rv[i + k] -= f * d[i];
        r = SPoly(std::move(rv));
    }
    return {SPoly(std::move(q)), r};
}

std::optional<SPoly> SPoly::divide_exact(const SPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

SPoly SPoly::derivative() const {
    if (c_.size() <= 1) return SPoly();
    std::vector<Scalar> v(c_.size() - 1, Scalar(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return SPoly(std::move(v));
}

Scalar SPoly::eval(const Scalar& x) const {
    Scalar r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

SPoly SPoly::monic() const {
    if (is_zero()) return *this;
    return *this * lc().inverse();
}

SPoly SPoly::pow(unsigned n) const {
    SPoly r(Scalar(1)), b(*this);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

MultiPoly SPoly::to_multipoly(const std::string& var) const {
    MultiPoly r({var});
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        r.add_term(Exp{static_cast<uint32_t>(i)}, c_[i]);
    }
    return r;
}

SPoly SPoly::from_multipoly(const MultiPoly& p, const std::string& var) {
    MultiPoly q = p.pruned();
    for (const auto& v : q.vars())
        if (v != var) throw error("from_multipoly: polynomial is not univariate in " + var);
    std::vector<Scalar> c(static_cast<size_t>(std::max(q.deg(), 0)) + 1, Scalar(0));
    int vi = q.var_index(var);
    for (const auto& [e, s] : q.terms()) c[vi >= 0 ? e[vi] : 0] = s;
    return SPoly(std::move(c));
}

int SPoly::cmp(const SPoly& o) const {
    if (deg() != o.deg()) return deg() < o.deg() ? -1 : 1;
    for (int i = deg(); i >= 0; --i)
        if (int c = (*this)[i].cmp(o[i])) return c;
    return 0;
}

SPoly gcd(const SPoly& a, const SPoly& b) {
    SPoly f = a, g = b;
    while (!g.is_zero()) {
        SPoly r = f.divrem(g).second;
        f = g;
        g = std::move(r);
    }
    return f.monic();
}

std::vector<std::pair<SPoly, int>> squarefree_decomposition(const SPoly& f) {
    std::vector<std::pair<SPoly, int>> out;
    if (f.is_zero()) throw degenerate_input_error("squarefree_decomposition: zero polynomial");
    if (f.is_constant()) return out;
    SPoly g = gcd(f, f.derivative());
    SPoly w = *f.divide_exact(g);
    SPoly y = *f.derivative().divide_exact(g);
    SPoly z = y - w.derivative();
    int i = 1;
    while (!w.is_constant()) {
        SPoly ai = gcd(w, z);
        if (ai.deg() > 0) out.emplace_back(ai, i);
        w = *w.divide_exact(ai);
        y = *z.divide_exact(ai);
        z = y - w.derivative();
        ++i;
    }
    return out;
}

namespace {

// sqrt of a rational function, when it is a perfect square in Q(t)
std::optional<QPoly> qpoly_sqrt(const QPoly& f) {
    if (f.is_zero()) return QPoly();
    if (f.deg() % 2 != 0) return std::nullopt;
    auto parts = [](const QPoly& p) {
        // Yun over Q via SPoly would be circular; direct gcd ladder:
        std::vector<std::pair<QPoly, int>> out;
        QPoly g = gcd(p, p.derivative());
        QPoly w = *p.divide_exact(g);
        QPoly y = *p.derivative().divide_exact(g);
        QPoly z = y - w.derivative();
        int i = 1;
        while (!w.is_constant()) {
            QPoly ai = gcd(w, z);
            if (ai.deg() > 0) out.emplace_back(ai, i);
            w = *w.divide_exact(ai);
            y = *z.divide_exact(ai);
            z = y - w.derivative();
            ++i;
        }
        return out;
    };
    Rat lead = f.lc();
    auto sl = scalar_sqrt(Scalar(lead));
    if (!sl) return std::nullopt;
    QPoly root(sl->rational());
    for (const auto& [part, mult] : parts(f)) {
        if (mult % 2 != 0) return std::nullopt;
        root = root * part.monic().pow(mult / 2);
    }
    if (root * root != f) return std::nullopt;
    return root;
}

// n/d is a square in Q(t) iff n*d is a square in Q[t] (d monic, coprime to n)
std::optional<Scalar> ratfunc_sqrt(const Scalar& s) {
    const RatFunc& f = s.ratfunc();
    auto snd = qpoly_sqrt(f.num * f.den);
    if (!snd) return std::nullopt;
    return Scalar(make_ratfunc(*snd, f.den, f.var));
}

// Roots of a monic squarefree quadratic x^2 + b x + c inside the field.
// nullopt: the square test is not decisive for this field.
std::optional<std::vector<Scalar>> quadratic_field_roots(const Scalar& b, const Scalar& c) {
    Scalar disc = b * b - Scalar(4) * c;
    std::optional<Scalar> sq;
    if (disc.is_rational()) {
        sq = scalar_sqrt(disc);
    } else if (disc.is_nf()) {
        if (disc.nf().field->modulus.deg() > 2) return std::nullopt;
        sq = scalar_sqrt(disc);
    } else {
        sq = ratfunc_sqrt(disc);
    }
    std::vector<Scalar> out;
    if (!sq) return out;  // decisively no roots in the field
    Scalar half = Scalar(Rat(1, 2));
    out.push_back((-b + *sq) * half);
    if (!sq->is_zero()) out.push_back((-b - *sq) * half);
    return out;
}

}  // namespace

std::optional<std::vector<Scalar>> field_roots_of_squarefree(const SPoly& f) {
    std::vector<Scalar> out;
    if (f.deg() <= 0) return out;
    FieldSpec fs(FieldSpec::rationals());
    for (const auto& c : f.coeffs())
        if (!c.is_rational()) {
            fs = c.field();
            break;
        }
    if (fs.kind == FieldKind::Q) {
        std::vector<Rat> qc(f.deg() + 1);
        for (int i = 0; i <= f.deg(); ++i) qc[i] = f[i].rational();
        for (const auto& [r, m] : rational_roots(QPoly(std::move(qc)))) out.emplace_back(r);
        return out;
    }
    if (f.deg() == 1) {
        out.push_back(-(f[0] / f[1]));
        return out;
    }
    if (f.deg() == 2) {
        SPoly m = f.monic();
        return quadratic_field_roots(m[1], m[0]);
    }
    return std::nullopt;  // not decisive beyond quadratics off Q
}

FieldRoots roots_over_field(const SPoly& f) {
    FieldRoots out;
    if (f.is_zero()) throw degenerate_input_error("roots_over_field: zero polynomial");
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        SPoly rest = part.monic();
        auto found = field_roots_of_squarefree(rest);
        bool decisive = found.has_value();
        if (found) {
            for (const Scalar& r : *found) {
                out.exact.emplace_back(r, mult);
                SPoly lin(std::vector<Scalar>{-r, Scalar(1)});
                rest = *rest.divide_exact(lin);
            }
        }
        if (rest.deg() > 0) out.packets.push_back(RootPacket{rest, mult, decisive});
    }
    std::sort(out.exact.begin(), out.exact.end(),
              [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
    std::sort(out.packets.begin(), out.packets.end(),
              [](const auto& a, const auto& b) { return a.minpoly.cmp(b.minpoly) < 0; });
    return out;
}

}  // namespace pend
