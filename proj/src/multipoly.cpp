#include "pend/multipoly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pend {

void MultiPoly::check_vars() const {
    for (size_t i = 0; i + 1 < vars_.size(); ++i)
        if (!(vars_[i] < vars_[i + 1]))
            throw error("variable list must be strictly sorted: " + vars_[i] + " vs " +
                        vars_[i + 1]);
}

MultiPoly MultiPoly::constant(const Scalar& c, std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    MultiPoly p(std::move(vars));
    if (!c.is_zero()) p.terms_[Exp(p.vars_.size(), 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> vars) {
    std::sort(vars.begin(), vars.end());
    MultiPoly p(std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw error("variable " + name + " not in list");
    Exp e(p.vars_.size(), 0);
    e[i] = 1;
    p.terms_[e] = Scalar(1);
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), name);
    if (it == vars_.end() || *it != name) return -1;
    return static_cast<int>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total(terms_.begin()->first) == 0);
}

Scalar MultiPoly::constant_value() const {
    if (terms_.empty()) return Scalar(0);
    if (!is_constant()) throw error("constant_value on nonconstant polynomial");
    return terms_.begin()->second;
}

int MultiPoly::deg_in(const std::string& var) const {
    int i = var_index(var);
    if (i < 0) return 0;
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[i]));
    return d;
}

void MultiPoly::add_term(const Exp& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& more) const {
    std::set<std::string> u(vars_.begin(), vars_.end());
    u.insert(more.begin(), more.end());
    std::vector<std::string> nv(u.begin(), u.end());
    if (nv == vars_) return *this;
    MultiPoly r(nv);
    std::vector<int> pos(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) pos[i] = r.var_index(vars_[i]);
    for (const auto& [e, c] : terms_) {
        Exp ne(nv.size(), 0);
        for (size_t i = 0; i < vars_.size(); ++i) ne[pos[i]] = e[i];
        r.terms_[ne] = c;
    }
    return r;
}

MultiPoly MultiPoly::pruned() const {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < vars_.size(); ++i)
            if (e[i]) used[i] = true;
    std::vector<std::string> nv;
    std::vector<int> keep;
    for (size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) {
            nv.push_back(vars_[i]);
            keep.push_back(static_cast<int>(i));
        }
    if (nv == vars_) return *this;
    MultiPoly r(nv);
    for (const auto& [e, c] : terms_) {
        Exp ne(keep.size());
        for (size_t j = 0; j < keep.size(); ++j) ne[j] = e[keep[j]];
        r.terms_[ne] = c;
    }
    return r;
}

std::pair<MultiPoly, MultiPoly> aligned(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() == b.vars()) return {a, b};
    return {a.with_vars(b.vars()), b.with_vars(a.vars())};
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    auto [a, b] = aligned(*this, o);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    auto [a, b] = aligned(*this, o);
    MultiPoly r(a.vars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            Exp e(ea.size());
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Scalar& s) const {
    if (s.is_zero()) return MultiPoly(vars_);
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

MultiPoly MultiPoly::pow(unsigned n) const {
    MultiPoly r = constant(Scalar(1), vars_);
    MultiPoly b(*this);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    auto [a, b] = aligned(*this, o);
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return false;
        if (ia->second != ib->second) return false;
    }
    return true;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
    int i = var_index(var);
    MultiPoly r(vars_);
    if (i < 0) return r;
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exp ne = e;
        ne[i] -= 1;
        r.add_term(ne, c * Scalar(static_cast<long>(e[i])));
    }
    return r;
}

MultiPoly MultiPoly::substituted(const std::map<std::string, MultiPoly>& sub) const {
    // variable images, defaulting to the variable itself
    std::vector<std::string> image_vars = vars_;
    for (const auto& [v, p] : sub)
        for (const auto& w : p.vars()) image_vars.push_back(w);
    std::sort(image_vars.begin(), image_vars.end());
    image_vars.erase(std::unique(image_vars.begin(), image_vars.end()), image_vars.end());

    std::vector<MultiPoly> img(vars_.size());
    std::vector<std::vector<MultiPoly>> powers(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) {
        auto it = sub.find(vars_[i]);
        img[i] = (it != sub.end()) ? it->second.with_vars(image_vars)
                                   : MultiPoly::variable(vars_[i], image_vars);
        powers[i].push_back(MultiPoly::constant(Scalar(1), image_vars));
    }
    MultiPoly r(image_vars);
    for (const auto& [e, c] : terms_) {
        MultiPoly t = MultiPoly::constant(c, image_vars);
        for (size_t i = 0; i < vars_.size(); ++i) {
            while (powers[i].size() <= e[i]) powers[i].push_back(powers[i].back() * img[i]);
            if (e[i]) t = t * powers[i][e[i]];
        }
        r = r + t;
    }
    return r;
}

MultiPoly MultiPoly::eval_partial(const std::map<std::string, Scalar>& vals) const {
    std::map<std::string, MultiPoly> sub;
    for (const auto& [v, s] : vals) sub.emplace(v, MultiPoly::constant(s));
    return substituted(sub).pruned();
}

Scalar MultiPoly::eval(const std::map<std::string, Scalar>& vals) const {
    MultiPoly r = eval_partial(vals);
    if (!r.is_constant()) throw error("eval: unassigned variables remain");
    return r.constant_value();
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(vars_);
    for (const auto& [e, c] : terms_)
        if (static_cast<int>(exp_total(e)) == d) r.terms_[e] = c;
    return r;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = exp_total(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (exp_total(e) != d) return false;
    return true;
}

MultiPoly MultiPoly::homogenized(const std::string& zvar) const {
    if (var_index(zvar) >= 0) throw error("homogenized: variable already present");
    MultiPoly base = with_vars({zvar});
    int zi = base.var_index(zvar);
    int d = deg();
    MultiPoly r(base.vars_);
    for (const auto& [e, c] : base.terms_) {
        Exp ne = e;
        ne[zi] = d - exp_total(e);
        r.terms_[ne] = c;
    }
    return r;
}

MultiPoly MultiPoly::dehomogenized(const std::string& zvar) const {
    return eval_partial({{zvar, Scalar(1)}});
}

std::vector<MultiPoly> MultiPoly::coefficients_in(const std::string& var) const {
    int i = var_index(var);
    int d = deg_in(var);
    std::vector<MultiPoly> out(static_cast<size_t>(std::max(d, 0)) + 1, MultiPoly(vars_));
    if (i < 0) {
        out[0] = *this;
        return out;
    }
    for (const auto& [e, c] : terms_) {
        Exp ne = e;
        uint32_t k = ne[i];
        ne[i] = 0;
        out[k].add_term(ne, c);
    }
    return out;
}

MultiPoly MultiPoly::from_coefficients(const std::vector<MultiPoly>& c, const std::string& var) {
    if (c.empty()) return MultiPoly();
    MultiPoly base = c[0].with_vars({var});
    MultiPoly r(base.vars());
    MultiPoly v = MultiPoly::variable(var, base.vars());
    for (size_t k = 0; k < c.size(); ++k) r = r + c[k].with_vars(base.vars()) * v.pow(k);
    return r;
}

FieldSpec MultiPoly::field() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_rational()) return c.field();
    return FieldSpec::rationals();
}

MultiPoly MultiPoly::canonical_scale() const {
    if (terms_.empty()) return *this;
    FieldSpec fs = field();
    if (fs.kind == FieldKind::Q) {
        Int den_lcm(1), num_gcd(0);
        for (const auto& [e, c] : terms_) {
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rational().get_den_mpz_t());
        }
        MultiPoly r = *this * Scalar(Rat(den_lcm));
        for (const auto& [e, c] : r.terms_) {
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.rational().get_num_mpz_t());
        }
        if (num_gcd != 0 && num_gcd != 1) r = r * Scalar(Rat(1) / Rat(num_gcd));
        if (r.terms_.begin()->second.rational() < 0) r = -r;
        return r;
    }
    return *this * terms_.begin()->second.inverse();
}

size_t MultiPoly::weight() const {
    size_t w = 1;
    for (const auto& [e, c] : terms_) w += e.size() / 4 + c.weight();
    return w;
}

int MultiPoly::cmp(const MultiPoly& o) const {
    auto [a, b] = aligned(*this, o);
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    GrlexGreater gt;
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return gt(ia->first, ib->first) ? 1 : -1;
        if (int c = ia->second.cmp(ib->second)) return c;
    }
    if (ia != a.terms_.end()) return 1;
    if (ib != b.terms_.end()) return -1;
    return 0;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.to_string();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string mag = neg ? cs.substr(1) : cs;
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        bool has_var = exp_total(e) > 0;
        bool unit = (mag == "1");
        if (!has_var || !unit) os << mag;
        bool printed = !has_var || !unit;
        for (size_t i = 0; i < vars_.size(); ++i) {
            if (!e[i]) continue;
            if (printed) os << "*";
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
    }
    return os.str();
}

}  // namespace pend
