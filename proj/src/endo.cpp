#include "pend/endo.hpp"

#include <chrono>

namespace pend {

namespace {
long long now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}
}  // namespace

void Budget::start() const { t0 = now_ms(); }

void Budget::check(const char* where) const {
    if (ms < 0) return;
    if (t0 < 0) t0 = now_ms();
    if (now_ms() - t0 > ms)
        throw budget_error(std::string("budget of ") + std::to_string(ms) + " ms exceeded in " +
                           where);
}

Endomorphism::Endomorphism(MultiPoly P, MultiPoly Q, std::string vx, std::string vy)
    : vx_(std::move(vx)), vy_(std::move(vy)) {
    if (vx_ == vy_) throw error("endomorphism needs two distinct variables");
    MultiPoly Pp = P.pruned(), Qp = Q.pruned();
    for (const auto& v : Pp.vars())
        if (v != vx_ && v != vy_) throw error("P involves unexpected variable " + v);
    for (const auto& v : Qp.vars())
        if (v != vx_ && v != vy_) throw error("Q involves unexpected variable " + v);
    std::vector<std::string> vars{vx_, vy_};
    std::sort(vars.begin(), vars.end());
    p_ = P.with_vars(vars);
    q_ = Q.with_vars(vars);
    d_ = std::max(p_.deg(), q_.deg());
    if (d_ < 2)
        throw regularity_error("rejected: degree " + std::to_string(std::max(d_, 0)) +
                               " < 2");
    for (const char* cand : {"z", "w", "u", "v", "h", "zz"}) {
        if (cand != vx_ && cand != vy_) {
            vz_ = cand;
            break;
        }
    }

    MultiPoly pd = p_.homogeneous_part(d_);
    MultiPoly qd = q_.homogeneous_part(d_);
    auto witness_root = [&](const MultiPoly& form) -> std::string {
        // a rational projective zero of a nonzero binary form, if any
        MultiPoly f1 = form.eval_partial({{vx_, Scalar(1)}});
        if (f1.is_zero()) return "[0:1]";  // form = c*y^k only happens otherwise
        if (!f1.is_constant()) {
            SPoly sp = SPoly::from_multipoly(f1, vy_);
            auto roots = roots_over_field(sp);
            if (!roots.exact.empty())
                return "[1:" + roots.exact.front().first.to_string() + "]";
        }
        if (form.deg_in(vy_) < form.deg()) return "[0:1]";
        return "";
    };
    if (pd.is_zero() || qd.is_zero()) {
        const MultiPoly& other = pd.is_zero() ? qd : pd;
        std::string w = witness_root(other);
        throw regularity_error("rejected: a top form vanishes identically" +
                               (w.empty() ? std::string() : ", common root " + w));
    }
    MultiPoly g = gcd_multi(pd, qd);
    if (!g.is_constant()) {
        std::string w = witness_root(g);
        throw regularity_error("rejected: top forms share a projective root" +
                               (w.empty() ? std::string(" (irrational)") : " " + w));
    }
}

FieldSpec Endomorphism::field() const {
    FieldSpec fp = p_.field();
    return fp.kind != FieldKind::Q ? fp : q_.field();
}

MultiPoly Endomorphism::homog_p() const {
    MultiPoly h = p_.homogenized(vz_);
    return h;
}
MultiPoly Endomorphism::homog_q() const { return q_.homogenized(vz_); }
MultiPoly Endomorphism::homog_z() const {
    return MultiPoly::variable(vz_, {vx_ < vy_ ? vx_ : vy_, vx_ < vy_ ? vy_ : vx_, vz_})
        .pow(static_cast<unsigned>(d_));
}

std::pair<Scalar, Scalar> Endomorphism::apply(const Scalar& x, const Scalar& y) const {
    std::map<std::string, Scalar> at{{vx_, x}, {vy_, y}};
    return {p_.eval(at), q_.eval(at)};
}

Endomorphism Endomorphism::after(const Endomorphism& other, const Budget& budget) const {
    budget.check("composition");
    std::map<std::string, MultiPoly> sub{{vx_, other.p_}, {vy_, other.q_}};
    MultiPoly np = p_.substituted(sub);
    budget.check("composition");
    MultiPoly nq = q_.substituted(sub);
    if (np.weight() + nq.weight() > budget.max_weight)
        throw budget_error("iterate exceeded the coefficient-size budget at degree " +
                           std::to_string(np.deg()));
    return Endomorphism(np, nq, vx_, vy_);
}

Endomorphism iterate(const Endomorphism& F, int n, const Budget& budget) {
    if (n < 1) throw degenerate_input_error("iterate: n must be >= 1");
    budget.start();
    Endomorphism r = F;
    for (int i = 1; i < n; ++i) {
        try {
            r = F.after(r, budget);
        } catch (const budget_error& e) {
            throw budget_error(std::string(e.what()) + " (reached F^" + std::to_string(i) +
                               ", degree " + std::to_string(r.degree()) + ")");
        }
    }
    return r;
}

InfinityMap make_infinity_map(const SPoly& num, const SPoly& den, const std::string& tname) {
    if (num.is_zero() && den.is_zero())
        throw degenerate_input_error("infinity map: zero/zero");
    SPoly n = num, d = den;
    SPoly g = gcd(n, d);
    if (g.deg() > 0) {
        n = *n.divide_exact(g);
        d = *d.divide_exact(g);
    }
    InfinityMap f;
    f.tname = tname;
    f.num = n;
    f.den = d;
    int deg = std::max(n.deg(), d.deg());
    f.degree = deg;
    // companion chart: s = 1/t, fb(s) = 1 / f(1/s) = rev(den)/rev(num)
    auto rev = [&](const SPoly& p) {
        std::vector<Scalar> c(deg + 1, Scalar(0));
        for (int i = 0; i <= p.deg(); ++i) c[deg - i] = p[i];
        return SPoly(std::move(c));
    };
    f.bnum = rev(d);
    f.bden = rev(n);
    SPoly gb = gcd(f.bnum, f.bden);
    if (gb.deg() > 0) {
        f.bnum = *f.bnum.divide_exact(gb);
        f.bden = *f.bden.divide_exact(gb);
    }
    return f;
}

InfinityMap restrict_infinity(const Endomorphism& F) {
    int d = F.degree();
    MultiPoly pd = F.top_p().eval_partial({{F.vx(), Scalar(1)}});
    MultiPoly qd = F.top_q().eval_partial({{F.vx(), Scalar(1)}});
    SPoly den = SPoly::from_multipoly(pd.with_vars({F.vy()}), F.vy());
    SPoly num = SPoly::from_multipoly(qd.with_vars({F.vy()}), F.vy());
    SPoly g = gcd(num, den);
    if (g.deg() > 0) throw error("internal: restriction to infinity not reduced");
    InfinityMap f = make_infinity_map(num, den);
    if (f.degree != d) throw error("internal: degree of the infinity restriction is off");
    return f;
}

std::optional<Scalar> InfinityMap::apply(const Scalar& t0) const {
    Scalar d = den.eval(t0);
    if (d.is_zero()) return std::nullopt;
    return num.eval(t0) / d;
}

InfinityMap InfinityMap::iterate(int n, const Budget& budget) const {
    if (n < 1) throw degenerate_input_error("iterate: n must be >= 1");
    budget.start();
    SPoly N = num, D = den;
    for (int k = 1; k < n; ++k) {
        budget.check("infinity-map iterate");
        // compose (num/den) after (N/D), rescaled by D^degree
        std::vector<Scalar> nc(degree + 1, Scalar(0)), dc(degree + 1, Scalar(0));
        for (int i = 0; i <= num.deg(); ++i) nc[i] = num[i];
        for (int i = 0; i <= den.deg(); ++i) dc[i] = den[i];
        SPoly NN, DD;
        std::vector<SPoly> powN{SPoly(Scalar(1))}, powD{SPoly(Scalar(1))};
        for (int i = 1; i <= degree; ++i) {
            powN.push_back(powN.back() * N);
            powD.push_back(powD.back() * D);
        }
        for (int i = 0; i <= degree; ++i) {
            SPoly term = powN[i] * powD[degree - i];
            NN = NN + term * nc[i];
            DD = DD + term * dc[i];
        }
        SPoly g = gcd(NN, DD);
        if (g.deg() > 0) {
            NN = *NN.divide_exact(g);
            DD = *DD.divide_exact(g);
        }
        N = NN;
        D = DD;
    }
    InfinityMap r = make_infinity_map(N, D, tname);
    return r;
}

std::pair<SPoly, SPoly> InfinityMap::derivative() const {
    SPoly n = num.derivative() * den - num * den.derivative();
    SPoly d = den * den;
    SPoly g = gcd(n, d);
    if (g.deg() > 0) {
        n = *n.divide_exact(g);
        d = *d.divide_exact(g);
    }
    return {n, d};
}

namespace {

Scalar binom_scalar(int n, int k) {
    Rat r(1);
    for (int i = 0; i < k; ++i) r *= Rat(n - i) / Rat(i + 1);
    return Scalar(r);
}

// Full skew check for a candidate vertical direction ell = y - tau*x (or
// ell = x for the direction at infinity): is (ell o F) a polynomial in ell?
bool skew_check(const Endomorphism& F, const std::optional<Scalar>& tau) {
    MultiPoly X = MultiPoly::variable(F.vx(), {F.vx(), F.vy()});
    MultiPoly Y = MultiPoly::variable(F.vy(), {F.vx(), F.vy()});
    MultiPoly ell = tau ? Y - X * *tau : X;
    MultiPoly h = tau ? F.Q() - F.P() * *tau : F.P();
    // coordinates (u0, v0) with ell = u0: x = v0, y = u0 + tau*v0 (affine case)
    std::vector<std::string> uv{"u0", "v0"};
    MultiPoly U = MultiPoly::variable("u0", uv), V = MultiPoly::variable("v0", uv);
    std::map<std::string, MultiPoly> sub;
    if (tau) {
        sub[F.vx()] = V;
        sub[F.vy()] = U + V * *tau;
    } else {
        sub[F.vx()] = U;
        sub[F.vy()] = V;
    }
    MultiPoly H = h.substituted(sub);
    return H.deg_in("v0") == 0;
}

}  // namespace

SkewReport is_skew_product(const Endomorphism& F) {
    SkewReport rep;
    MultiPoly X = MultiPoly::variable(F.vx(), {F.vx(), F.vy()});
    MultiPoly Y = MultiPoly::variable(F.vy(), {F.vx(), F.vy()});
    // direction at infinity of the t-chart: top form of P a pure power of x
    MultiPoly pd = F.top_p();
    if (pd.deg_in(F.vy()) == 0) {
        if (skew_check(F, std::nullopt)) {
            rep.verdict = Verdict::Yes;
            rep.coordinate = X;
            return rep;
        }
    }
    // affine candidates: tau with N(t) - tau*D(t) = c (t - tau)^d, c != 0
    InfinityMap f = restrict_infinity(F);
    int d = F.degree();
    auto coef = [&](const SPoly& p, int j) { return p[j]; };
    // E_j(tau) = (N_j - tau D_j) - (N_d - tau D_d) * C(d,j) * (-tau)^(d-j)
    std::vector<SPoly> eqs;
    SPoly tau_poly = SPoly::var();
    SPoly md = SPoly(coef(f.num, d)) - tau_poly * coef(f.den, d);
    for (int j = 0; j < d; ++j) {
        SPoly mj = SPoly(coef(f.num, j)) - tau_poly * coef(f.den, j);
        SPoly pw = tau_poly.pow(static_cast<unsigned>(d - j)) *
                   Scalar(((d - j) % 2) ? -1 : 1) * binom_scalar(d, j);
        eqs.push_back(mj - md * pw);
    }
    SPoly G;
    for (const auto& e : eqs) G = G.is_zero() ? e : gcd(G, e);
    bool undetected_possible = false;
    if (!G.is_zero() && G.deg() > 0) {
        FieldRoots roots = roots_over_field(G);
        for (const auto& [tau, mult] : roots.exact) {
            if (md.eval(tau).is_zero()) continue;  // degree would drop: not total
            if (skew_check(F, tau)) {
                rep.verdict = Verdict::Yes;
                rep.coordinate = Y - X * tau;
                return rep;
            }
        }
        for (const auto& pk : roots.packets) {
            if (pk.minpoly.deg() <= 3 && F.field().kind == FieldKind::Q) {
                // lift to the extension and finish the check there
                std::vector<Rat> mc(pk.minpoly.deg() + 1);
                bool ok = true;
                for (int i = 0; i <= pk.minpoly.deg(); ++i) {
                    if (!pk.minpoly[i].is_rational()) ok = false;
                    else mc[i] = pk.minpoly[i].rational();
                }
                if (!ok) {
                    undetected_possible = true;
                    continue;
                }
                try {
                    auto nf = std::make_shared<const NumberField>(QPoly(std::move(mc)), "r0");
                    Scalar tau = Scalar::nf_gen(nf);
                    if (md.eval(tau).is_zero()) continue;
                    if (skew_check(F, tau)) {
                        rep.verdict = Verdict::Yes;
                        rep.coordinate = Y - X * tau;
                        rep.note = "coordinate over " + tau.field().describe();
                        return rep;
                    }
                } catch (const zero_divisor_error&) {
                    undetected_possible = true;
                }
            } else {
                undetected_possible = true;
            }
        }
    }
    rep.verdict = undetected_possible ? Verdict::NotDetectedOverField : Verdict::No;
    if (undetected_possible)
        rep.note = "candidate directions over a higher extension were not checked";
    return rep;
}

HomogeneousReport is_homogeneous(const Endomorphism& F) {
    // A homogeneous center is a fixed point, and it is unique for d >= 2
    // (two centers force the degree-d Taylor identity to collapse), so a
    // rational map has a rational center: rational fixed points suffice.
    HomogeneousReport rep;
    const std::string vx = F.vx(), vy = F.vy();
    MultiPoly fx = F.P() - MultiPoly::variable(vx, {vx, vy});
    MultiPoly fy = F.Q() - MultiPoly::variable(vy, {vx, vy});
    auto try_center = [&](const Scalar& a, const Scalar& b) {
        std::map<std::string, MultiPoly> shift{
            {vx, MultiPoly::variable(vx, {vx, vy}) + MultiPoly::constant(a)},
            {vy, MultiPoly::variable(vy, {vx, vy}) + MultiPoly::constant(b)}};
        MultiPoly gp = F.P().substituted(shift) - MultiPoly::constant(a, {vx, vy});
        MultiPoly gq = F.Q().substituted(shift) - MultiPoly::constant(b, {vx, vy});
        if (gp.is_homogeneous() && gq.is_homogeneous() && gp.deg() == F.degree() &&
            gq.deg() == F.degree()) {
            rep.homogeneous = true;
            rep.translation = std::make_pair(a, b);
            return true;
        }
        return false;
    };
    MultiPoly R = resultant(fx, fy, vy);
    if (R.is_zero()) {
        // a fixed curve; homogeneous maps only have isolated fixed points
        // (a fixed curve would give F|_C = id against deg F|_C = d)
        return rep;
    }
    SPoly rx = SPoly::from_multipoly(R.pruned().vars().empty() ? R.with_vars({vx}) : R, vx);
    for (const auto& [x0, m] : roots_over_field(rx).exact) {
        MultiPoly g1 = fx.eval_partial({{vx, x0}});
        MultiPoly g2 = fy.eval_partial({{vx, x0}});
        SPoly s1 = SPoly::from_multipoly(g1.with_vars({vy}), vy);
        SPoly s2 = SPoly::from_multipoly(g2.with_vars({vy}), vy);
        SPoly g = s1.is_zero() ? s2 : (s2.is_zero() ? s1 : gcd(s1, s2));
        if (g.is_constant()) continue;
        for (const auto& [y0, my] : roots_over_field(g).exact)
            if (try_center(x0, y0)) return rep;
    }
    return rep;
}

bool commutes_with(const Endomorphism& F, const Endomorphism& G, const Budget& budget) {
    budget.start();
    Endomorphism fg = F.after(G, budget);
    Endomorphism gf = G.after(F, budget);
    return fg == gf;
}

bool check_semiconjugacy(const RatExpr& mu1, const RatExpr& mu2, const Endomorphism& G,
                         const Endomorphism& F) {
    if (mu1.den.is_zero() || mu2.den.is_zero())
        throw degenerate_input_error("semiconjugacy: mu has an identically zero denominator");
    std::map<std::string, MultiPoly> g{{G.vx(), G.P()}, {G.vy(), G.Q()}};
    RatExpr lhs1 = RatExpr::make(mu1.num.substituted(g), mu1.den.substituted(g));
    RatExpr lhs2 = RatExpr::make(mu2.num.substituted(g), mu2.den.substituted(g));
    std::map<std::string, RatExpr> mu{{F.vx(), mu1}, {F.vy(), mu2}};
    RatExpr rhs1 = RatExpr::eval_poly(F.P(), mu);
    RatExpr rhs2 = RatExpr::eval_poly(F.Q(), mu);
    return lhs1 == rhs1 && lhs2 == rhs2;
}

}  // namespace pend
