#include "pend/qpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace pend {

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& s) const {
    if (s == 0) return QPoly();
    QPoly r(*this);
    for (auto& x : r.c_) x *= s;
    return r;
}

std::pair<QPoly, QPoly> QPoly::divrem(const QPoly& d) const {
    if (d.is_zero()) throw std::runtime_error("QPoly: division by zero");
    QPoly r(*this);
    if (r.deg() < d.deg()) return {QPoly(), r};
    std::vector<Rat> q(r.deg() - d.deg() + 1, Rat(0));
    while (!r.is_zero() && r.deg() >= d.deg()) {
        int k = r.deg() - d.deg();
        Rat f = r.lc() / d.lc();
        q[k] = f;
        // r -= f * t^k * d
        std::vector<Rat> rv = r.c_;
        for (int i = 0; i <= d.deg(); ++i) rv[i + k] -= f * d[i];
        r = QPoly(std::move(rv));
    }
    return {QPoly(std::move(q)), r};
}

std::optional<QPoly> QPoly::divide_exact(const QPoly& d) const {
    auto [q, r] = divrem(d);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rat> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return QPoly(std::move(v));
}

Rat QPoly::eval(const Rat& x) const {
    Rat r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

QPoly QPoly::compose(const QPoly& g) const {
    QPoly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * g + QPoly(*it);
    return r;
}

QPoly QPoly::pow(unsigned n) const {
    QPoly r(Rat(1));
    QPoly b(*this);
    while (n) {
        if (n & 1) r = r * b;
        b = b * b;
        n >>= 1;
    }
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / lc());
}

QPoly QPoly::primitive() const {
    if (is_zero()) return *this;
    Int den_lcm(1), num_gcd(0);
    for (const auto& x : c_) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den_mpz_t());
    }
    QPoly r = *this * Rat(den_lcm);
    for (const auto& x : r.c_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), x.get_num_mpz_t());
    }
    if (num_gcd != 0) r = r * (Rat(1) / Rat(num_gcd));
    if (r.lc() < 0) r = -r;
    return r;
}

std::string QPoly::to_string(const std::string& name) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        const Rat& a = (*this)[i];
        if (a == 0) continue;
        Rat mag = a < 0 ? Rat(-a) : a;
        if (first) {
            if (a < 0) os << "-";
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        bool unit = (mag == 1);
        if (i == 0 || !unit) os << mag.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << name;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

QPoly gcd(const QPoly& a, const QPoly& b) {
    QPoly f = a, g = b;
    while (!g.is_zero()) {
        QPoly r = f.divrem(g).second;
        f = g;
        g = std::move(r);
    }
    return f.monic();
}

QPoly squarefree_part(const QPoly& f) {
    if (f.is_zero()) throw std::runtime_error("squarefree_part: zero polynomial");
    if (f.is_constant()) return QPoly(Rat(1));
    QPoly g = gcd(f, f.derivative());
    auto q = f.divide_exact(g);
    return q->monic();
}

namespace {

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> ch;
    ch.push_back(f);
    ch.push_back(f.derivative());
    while (!ch.back().is_zero()) {
        QPoly r = ch[ch.size() - 2].divrem(ch.back()).second;
        ch.push_back(-r);
    }
    ch.pop_back();
    return ch;
}

int sign_changes_at(const std::vector<QPoly>& ch, const Rat& x) {
    int changes = 0, last = 0;
    for (const auto& p : ch) {
        Rat v = p.eval(x);
        int s = (v > 0) - (v < 0);
        if (s != 0) {
            if (last != 0 && s != last) ++changes;
            last = s;
        }
    }
    return changes;
}

}  // namespace

int sturm_root_count(const QPoly& f, const Rat& a, const Rat& b) {
    QPoly s = squarefree_part(f);
    if (s.is_constant()) return 0;
    auto ch = sturm_chain(s);
    return sign_changes_at(ch, a) - sign_changes_at(ch, b);
}

std::vector<std::pair<Rat, int>> rational_roots(const QPoly& f) {
    std::vector<std::pair<Rat, int>> out;
    if (f.is_zero()) throw std::runtime_error("rational_roots: zero polynomial");
    if (f.is_constant()) return out;

    QPoly p = f.primitive();
    // Strip t^v so the constant term is nonzero.
    int val = 0;
    while (p[0] == 0) {
        std::vector<Rat> v(p.coeffs().begin() + 1, p.coeffs().end());
        p = QPoly(std::move(v));
        ++val;
    }
    if (val > 0) out.emplace_back(Rat(0), val);
    if (p.is_constant()) return out;

    // Rational roots of p correspond to integer roots of the monic integer
    // polynomial G(s) = lc^(n-1) * p(s/lc), via s = lc * t.
    Rat lead = p.lc();
    int n = p.deg();
    std::vector<Rat> gc(n + 1);
    for (int i = 0; i <= n; ++i) {
        // coefficient of s^i: p[i] * lc^{n-1-i}
        Rat c = p[i];
        for (int k = 0; k < n - 1 - i; ++k) c *= lead;
        for (int k = 0; k < i - (n - 1); ++k) c /= lead;  // i == n only
        gc[i] = c;
    }
    QPoly g(std::move(gc));
    QPoly gs = squarefree_part(g);
    if (gs.deg() >= 1) {
        // Cauchy bound, rounded up to an integer.
        Rat maxr(0);
        for (int i = 0; i < gs.deg(); ++i) {
            Rat m = gs[i] / gs.lc();
            if (m < 0) m = -m;
            if (m > maxr) maxr = m;
        }
        Int bound_z;
        Rat bnd = maxr + 2;
        mpz_cdiv_q(bound_z.get_mpz_t(), bnd.get_num_mpz_t(), bnd.get_den_mpz_t());
        Rat B(bound_z);

        auto ch = sturm_chain(gs);
        // Bisection until each candidate interval is shorter than 1, then test
        // the at most two integers touching it.
        std::vector<std::pair<Rat, Rat>> stack{{-B, B}};
        std::vector<Int> candidates;
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            int cnt = sign_changes_at(ch, a) - sign_changes_at(ch, b);
            if (cnt == 0) continue;
            if (b - a <= 1) {
                Int lo, hi;
                mpz_fdiv_q(lo.get_mpz_t(), a.get_num_mpz_t(), a.get_den_mpz_t());
                mpz_cdiv_q(hi.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
                for (Int k = lo; k <= hi; ++k) candidates.push_back(k);
                continue;
            }
            Rat mid = (a + b) / 2;
            stack.emplace_back(a, mid);
            stack.emplace_back(mid, b);
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const Int& k : candidates) {
            if (g.eval(Rat(k)) != 0) continue;
            Rat root = Rat(k) / lead;
            // multiplicity by repeated exact division
            int mult = 0;
            QPoly q = p;
            QPoly lin(std::vector<Rat>{-root, Rat(1)});
            while (true) {
                auto d = q.divide_exact(lin);
                if (!d) break;
                q = *d;
                ++mult;
            }
            if (mult > 0) out.emplace_back(root, mult);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

}  // namespace pend
