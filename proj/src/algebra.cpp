#include "pend/algebra.hpp"

#include <algorithm>

namespace pend {

namespace {

// f as a coefficient vector in var (each entry free of var), lowest power first
std::vector<MultiPoly> coeffs_in(const MultiPoly& f, const std::string& var) {
    return f.coefficients_in(var);
}

int vdeg(const std::vector<MultiPoly>& c) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
        if (!c[i].is_zero()) return i;
    return -1;
}

void vtrim(std::vector<MultiPoly>& c) { c.resize(static_cast<size_t>(vdeg(c) + 1)); }

std::vector<MultiPoly> vmul_scalar(const std::vector<MultiPoly>& a, const MultiPoly& s) {
    std::vector<MultiPoly> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    vtrim(r);
    return r;
}

std::vector<MultiPoly> vsub_shifted(const std::vector<MultiPoly>& a,
                                    const std::vector<MultiPoly>& b, int shift,
                                    const MultiPoly& factor) {
    // a - factor * x^shift * b
    std::vector<MultiPoly> r = a;
    if (r.size() < b.size() + shift) r.resize(b.size() + shift, MultiPoly());
    for (size_t i = 0; i < b.size(); ++i) r[i + shift] = r[i + shift] - factor * b[i];
    vtrim(r);
    return r;
}

// Pseudo-remainder: lc(B)^(degA-degB+1) * A = Q*B + R, returns R.
std::vector<MultiPoly> prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
    int da = vdeg(a), db = vdeg(b);
    if (db < 0) throw degenerate_input_error("prem: zero divisor");
    if (da < db) {
        // multiply by the full power anyway so callers can rely on the identity
        MultiPoly l = b[db];
        for (int i = 0; i < da - db + 1; ++i) a = vmul_scalar(a, l);
        return a;
    }
    const MultiPoly& l = b[db];
    int steps = da - db + 1;
    while (true) {
        int d = vdeg(a);
        if (d < db || d < 0) break;
        std::vector<MultiPoly> la = vmul_scalar(a, l);
        a = vsub_shifted(la, b, d - db, a[d]);
        --steps;
        // degree strictly drops each round
    }
    for (int i = 0; i < steps; ++i) a = vmul_scalar(a, l);
    return a;
}

MultiPoly vec_content(const std::vector<MultiPoly>& c) {
    MultiPoly g;
    for (const auto& p : c) {
        if (p.is_zero()) continue;
        g = g.is_zero() ? p : gcd_multi(g, p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g.is_zero() ? MultiPoly() : g.canonical_scale();
}

std::vector<MultiPoly> vec_divide(const std::vector<MultiPoly>& c, const MultiPoly& d) {
    std::vector<MultiPoly> r(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i].is_zero()) {
            r[i] = MultiPoly();
            continue;
        }
        auto q = divides(d, c[i]);
        if (!q) throw error("internal: inexact content division");
        r[i] = *q;
    }
    return r;
}

std::string pick_main_var(const MultiPoly& a, const MultiPoly& b) {
    for (const auto& v : a.vars())
        if (a.deg_in(v) > 0 && b.deg_in(v) > 0) return v;
    return "";
}

}  // namespace

std::pair<MultiPoly, MultiPoly> content_primitive_in(const MultiPoly& f, const std::string& var) {
    auto c = coeffs_in(f, var);
    MultiPoly cont = vec_content(c);
    if (cont.is_zero()) return {MultiPoly(), MultiPoly()};
    MultiPoly prim = divide_exact(f, cont);
    return {cont, prim};
}

MultiPoly gcd_multi(const MultiPoly& a0, const MultiPoly& b0) {
    MultiPoly a = a0.pruned(), b = b0.pruned();
    if (a.is_zero()) return b.canonical_scale();
    if (b.is_zero()) return a.canonical_scale();
    if (a.is_constant() || b.is_constant()) return MultiPoly::constant(Scalar(1));
    auto [aa, bb] = aligned(a, b);
    std::string v = pick_main_var(aa, bb);
    if (v.empty()) return MultiPoly::constant(Scalar(1));

    auto [ca, pa] = content_primitive_in(aa, v);
    auto [cb, pb] = content_primitive_in(bb, v);
    MultiPoly cg = gcd_multi(ca, cb);

    auto f = coeffs_in(pa, v);
    auto g = coeffs_in(pb, v);
    if (vdeg(f) < vdeg(g)) std::swap(f, g);
    while (true) {
        auto r = prem(f, g);
        if (vdeg(r) < 0) break;  // g divides: gcd is primitive part of g
        if (vdeg(r) == 0) {
            // coprime in v
            return cg.canonical_scale();
        }
        f = g;
        MultiPoly rc = vec_content(r);
        g = vec_divide(r, rc);
    }
    MultiPoly gm = MultiPoly::from_coefficients(g, v);
    MultiPoly gp = content_primitive_in(gm, v).second;
    return (gp * cg).canonical_scale();
}

MultiPoly resultant(const MultiPoly& f0, const MultiPoly& g0, const std::string& var) {
    if (f0.is_zero() && g0.is_zero())
        throw degenerate_input_error("resultant: both inputs are zero");
    if (f0.is_zero() || g0.is_zero()) return MultiPoly();
    auto [fa, ga] = aligned(f0, g0);
    auto A = coeffs_in(fa, var);
    auto B = coeffs_in(ga, var);
    int da = vdeg(A), db = vdeg(B);
    MultiPoly one = MultiPoly::constant(Scalar(1), fa.vars());
    if (da == 0 && db == 0) return one;
    bool swapped = false;
    if (da < db) {
        std::swap(A, B);
        std::swap(da, db);
        swapped = (da % 2 == 1) && (db % 2 == 1);
    }
    if (db == 0) {
        MultiPoly r = B[0].pow(static_cast<unsigned>(da));
        return swapped ? -r : r;
    }

    // subresultant sequence with bookkeeping (Cohen alg. 3.3.7)
    int s = swapped ? -1 : 1;
    MultiPoly g = one, h = one;
    while (true) {
        int dA = vdeg(A), dB = vdeg(B);
        int delta = dA - dB;
        if ((dA % 2 == 1) && (dB % 2 == 1)) s = -s;
        auto R = prem(A, B);
        A = B;
        MultiPoly denom = g * h.pow(static_cast<unsigned>(delta));
        B.resize(R.size());
        for (size_t i = 0; i < R.size(); ++i)
            B[i] = R[i].is_zero() ? MultiPoly() : divide_exact(R[i], denom);
        vtrim(B);
        g = A[vdeg(A)];
        if (delta > 0) {
            MultiPoly num = g.pow(static_cast<unsigned>(delta));
            h = (delta == 1) ? num : divide_exact(num, h.pow(static_cast<unsigned>(delta - 1)));
        }
        int ndB = vdeg(B);
        if (ndB < 0) return MultiPoly();  // common factor of positive degree
        if (ndB == 0) {
            int dAf = vdeg(A);
            MultiPoly num = B[0].pow(static_cast<unsigned>(dAf));
            MultiPoly res =
                (dAf <= 1) ? num : divide_exact(num, h.pow(static_cast<unsigned>(dAf - 1)));
            return s < 0 ? -res : res;
        }
    }
}

std::optional<MultiPoly> divides(const MultiPoly& f0, const MultiPoly& g0) {
    if (f0.is_zero()) throw degenerate_input_error("divides: zero divisor");
    auto [f, g] = aligned(f0, g0);
    if (g.is_zero()) return MultiPoly(f.vars());
    MultiPoly q(f.vars());
    MultiPoly r = g;
    const auto& ltf = *f.terms().begin();
    Scalar lcf_inv = ltf.second.inverse();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms().begin();
        Exp e(ltr.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (ltr.first[i] < ltf.first[i]) return std::nullopt;
            e[i] = ltr.first[i] - ltf.first[i];
        }
        Scalar c = ltr.second * lcf_inv;
        MultiPoly t(f.vars());
        t.add_term(e, c);
        q = q + t;
        r = r - t * f;
    }
    return q;
}

MultiPoly divide_exact(const MultiPoly& g, const MultiPoly& f) {
    auto q = divides(f, g);
    if (!q) throw error("divide_exact: not divisible");
    return *q;
}

std::pair<MultiPoly, MultiPoly> poly_divrem(const MultiPoly& g0, const MultiPoly& f0) {
    if (f0.is_zero()) throw degenerate_input_error("poly_divrem: zero divisor");
    auto [f, g] = aligned(f0, g0);
    MultiPoly q(f.vars()), rem(f.vars());
    MultiPoly r = g;
    const auto& ltf = *f.terms().begin();
    Scalar lcf_inv = ltf.second.inverse();
    while (!r.is_zero()) {
        const auto& ltr = *r.terms().begin();
        bool div = true;
        Exp e(ltr.first.size());
        for (size_t i = 0; i < e.size(); ++i) {
            if (ltr.first[i] < ltf.first[i]) {
                div = false;
                break;
            }
            e[i] = ltr.first[i] - ltf.first[i];
        }
        MultiPoly t(f.vars());
        if (div) {
            t.add_term(e, ltr.second * lcf_inv);
            q = q + t;
            r = r - t * f;
        } else {
            t.add_term(ltr.first, ltr.second);
            rem = rem + t;
            r = r - t;
        }
    }
    return {q, rem};
}

MultiPoly squarefree_part(const MultiPoly& f) {
    if (f.is_zero()) throw degenerate_input_error("squarefree_part: zero polynomial");
    if (f.is_constant()) return MultiPoly::constant(Scalar(1), f.vars());
    MultiPoly g = f;
    for (const auto& v : f.vars()) {
        MultiPoly d = f.derivative(v);
        if (d.is_zero()) continue;
        g = gcd_multi(g, d);
        if (g.is_constant()) break;
    }
    if (g.is_constant()) return f.canonical_scale();
    return divide_exact(f, g).canonical_scale();
}

MultiPoly compose(const MultiPoly& f, const std::map<std::string, MultiPoly>& sub) {
    return f.substituted(sub);
}

std::vector<std::pair<Rat, int>> univariate_rational_roots(const MultiPoly& f) {
    SPoly p = SPoly::from_multipoly(f, f.pruned().vars().empty() ? "t" : f.pruned().vars()[0]);
    if (p.is_zero()) throw degenerate_input_error("roots of zero polynomial");
    std::vector<Rat> qc(p.deg() + 1);
    for (int i = 0; i <= p.deg(); ++i) {
        if (!p[i].is_rational()) throw field_tower_error("exact roots need rational coefficients");
        qc[i] = p[i].rational();
    }
    return rational_roots(QPoly(std::move(qc)));
}

}  // namespace pend
