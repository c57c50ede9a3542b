#include "pend/local.hpp"

#include <algorithm>
#include <sstream>

#include "pend/linsolve.hpp"

namespace pend {

int vanishing_order(const MultiPoly& f) {
    if (f.is_zero()) throw degenerate_input_error("vanishing_order of zero polynomial");
    int v = f.deg();
    for (const auto& [e, c] : f.terms()) v = std::min(v, static_cast<int>(exp_total(e)));
    return v;
}

MultiPoly translate_to_origin(const MultiPoly& f, const std::string& vx, const std::string& vy,
                              const PlanePoint& p) {
    std::vector<std::string> vars{vx, vy};
    std::sort(vars.begin(), vars.end());
    std::map<std::string, MultiPoly> sub{
        {vx, MultiPoly::variable(vx, vars) + MultiPoly::constant(p.x, vars)},
        {vy, MultiPoly::variable(vy, vars) + MultiPoly::constant(p.y, vars)}};
    return f.substituted(sub);
}

namespace {

// dim of Scalar[x,y] / ((f, g) + m^N), both translated to the origin
int truncated_quotient_dim(const MultiPoly& f, const MultiPoly& g, const std::string& vx,
                           const std::string& vy, int N) {
    // columns: monomials x^a y^b with a + b < N
    std::vector<std::pair<int, int>> mono;
    for (int t = 0; t < N; ++t)
        for (int a = t; a >= 0; --a) mono.emplace_back(a, t - a);
    std::map<std::pair<int, int>, int> idx;
    for (size_t i = 0; i < mono.size(); ++i) idx[mono[i]] = static_cast<int>(i);

    SMatrix rows;
    auto add_rows = [&](const MultiPoly& h) {
        int ih = 0;  // unused warning dodge
        (void)ih;
        for (const auto& [a, b] : mono) {
            // row = x^a y^b * h, truncated below degree N
            std::vector<Scalar> row(mono.size(), Scalar(0));
            bool nonzero = false;
            int xi = h.var_index(vx), yi = h.var_index(vy);
            for (const auto& [e, c] : h.terms()) {
                int ea = (xi >= 0 ? static_cast<int>(e[xi]) : 0) + a;
                int eb = (yi >= 0 ? static_cast<int>(e[yi]) : 0) + b;
                if (ea + eb >= N) continue;
                row[idx[{ea, eb}]] += c;
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    };
    add_rows(f);
    add_rows(g);
    int r = rows.empty() ? 0 : rank(std::move(rows));
    return static_cast<int>(mono.size()) - r;
}

}  // namespace

int intersection_multiplicity(const AffineCurve& c1, const AffineCurve& c2,
                              const PlanePoint& p) {
    if (c1.vx != c2.vx || c1.vy != c2.vy) throw error("curves use different charts");
    MultiPoly f = translate_to_origin(c1.f, c1.vx, c1.vy, p);
    MultiPoly g = translate_to_origin(c2.f, c1.vx, c1.vy, p);
    bool on1 = f.eval_partial({{c1.vx, Scalar(0)}, {c1.vy, Scalar(0)}}).is_zero();
    bool on2 = g.eval_partial({{c1.vx, Scalar(0)}, {c1.vy, Scalar(0)}}).is_zero();
    if (!on1 || !on2) return 0;
    MultiPoly w = gcd_multi(c1.f, c2.f);
    if (!w.is_constant()) {
        MultiPoly w0 = translate_to_origin(w, c1.vx, c1.vy, p);
        if (w0.eval_partial({{c1.vx, Scalar(0)}, {c1.vy, Scalar(0)}}).is_zero())
            throw infinite_multiplicity_error(
                "curves share a component through the point: " + w.to_string());
    }
    int cap = c1.f.deg() * c2.f.deg() + 2;
    int prev = truncated_quotient_dim(f, g, c1.vx, c1.vy, 2);
    for (int N = 3; N <= cap + 1; ++N) {
        int cur = truncated_quotient_dim(f, g, c1.vx, c1.vy, N);
        if (cur == prev) return cur;
        prev = cur;
    }
    throw error("internal: local quotient dimension failed to stabilize");
}

std::optional<int> intersection_multiplicity_resultant(const AffineCurve& c1,
                                                       const AffineCurve& c2,
                                                       const PlanePoint& p) {
    const std::string &vx = c1.vx, &vy = c1.vy;
    auto cf = c1.f.coefficients_in(vy);
    auto cg = c2.f.coefficients_in(vy);
    if (cf.size() < 2 && cg.size() < 2) return std::nullopt;
    Scalar lf = cf.back().eval_partial({{vx, p.x}}).constant_value();
    Scalar lg = cg.back().eval_partial({{vx, p.x}}).constant_value();
    if (lf.is_zero() && lg.is_zero()) return std::nullopt;
    // p must be the only common point on its vertical line
    MultiPoly f0 = c1.f.eval_partial({{vx, p.x}});
    MultiPoly g0 = c2.f.eval_partial({{vx, p.x}});
    if (f0.is_zero() || g0.is_zero()) return std::nullopt;
    SPoly u = gcd(SPoly::from_multipoly(f0.with_vars({vy}), vy),
                  SPoly::from_multipoly(g0.with_vars({vy}), vy));
    SPoly lin(std::vector<Scalar>{-p.y, Scalar(1)});
    while (u.deg() > 0) {
        auto q = u.divide_exact(lin);
        if (!q) return std::nullopt;  // another common point on the line
        u = *q;
    }
    MultiPoly R = resultant(c1.f, c2.f, vy);
    if (R.is_zero()) throw infinite_multiplicity_error("curves share a component");
    SPoly r = SPoly::from_multipoly(R.pruned().vars().empty() ? R.with_vars({vx}) : R, vx);
    int ord = 0;
    SPoly linx(std::vector<Scalar>{-p.x, Scalar(1)});
    while (true) {
        auto q = r.divide_exact(linx);
        if (!q) break;
        r = *q;
        ++ord;
    }
    return ord;
}

bool is_transverse(const AffineCurve& c1, const AffineCurve& c2, const PlanePoint& p) {
    return intersection_multiplicity(c1, c2, p) == 1;
}

BlowUp blow_up(const AffineCurve& c, const PlanePoint& p) {
    MultiPoly f = translate_to_origin(c.f, c.vx, c.vy, p);
    if (!f.eval_partial({{c.vx, Scalar(0)}, {c.vy, Scalar(0)}}).is_zero())
        throw degenerate_input_error("blow_up: point is not on the curve");
    int m = vanishing_order(f);
    std::vector<std::string> vars{c.vx, c.vy};
    std::sort(vars.begin(), vars.end());
    MultiPoly X = MultiPoly::variable(c.vx, vars), Y = MultiPoly::variable(c.vy, vars);
    MultiPoly ta = f.substituted({{c.vy, X * Y}});
    MultiPoly tb = f.substituted({{c.vx, X * Y}});
    BlowUp r;
    r.m = m;
    r.total_a = ta;
    r.total_b = tb;
    r.strict_a = divide_exact(ta, X.pow(static_cast<unsigned>(m)));
    r.strict_b = divide_exact(tb, Y.pow(static_cast<unsigned>(m)));
    return r;
}

std::string NearLocation::label() const {
    switch (kind) {
        case Root:
            return "root";
        case Slope:
            return "slope " + slope.to_string() + " (mult " +
                   std::to_string(restriction_mult) + ")";
        case SlopePacket:
            return "packet " + minpoly.to_string("s") + " (mult " +
                   std::to_string(restriction_mult) + ")";
        case Vertical:
            return "vertical (mult " + std::to_string(restriction_mult) + ")";
    }
    return "?";
}

int NearLocation::cmp(const NearLocation& o) const {
    if (kind != o.kind) return kind < o.kind ? -1 : 1;
    if (restriction_mult != o.restriction_mult)
        return restriction_mult < o.restriction_mult ? -1 : 1;
    if (kind == Slope) return slope.cmp(o.slope);
    if (kind == SlopePacket) return minpoly.cmp(o.minpoly);
    return 0;
}

namespace {

// one extension of Q: lift rational-coefficient polynomial coefficients into
// Q[r0]/(minpoly); fails (nullopt) off Q or when the modulus is unusable
std::optional<Scalar> extension_root(const SPoly& minpoly, const FieldSpec& base) {
    if (base.kind != FieldKind::Q) return std::nullopt;
    if (minpoly.deg() > 3) return std::nullopt;  // not irreducible-certified
    std::vector<Rat> mc(minpoly.deg() + 1);
    for (int i = 0; i <= minpoly.deg(); ++i) {
        if (!minpoly[i].is_rational()) return std::nullopt;
        mc[i] = minpoly[i].rational();
    }
    try {
        auto nf = std::make_shared<const NumberField>(QPoly(std::move(mc)), "r0");
        return Scalar::nf_gen(nf);
    } catch (const error&) {
        return std::nullopt;
    }
}

void expand_node(ResolutionNode& node, const AffineCurve& germ, int depth);

// children of a germ at the origin: one blow-up, then locations on E
void attach_children(ResolutionNode& node, const AffineCurve& germ, int depth) {
    if (depth <= 0) {
        node.truncated = true;
        return;
    }
    BlowUp b = blow_up(germ, PlanePoint{Scalar(0), Scalar(0)});
    node.m = b.m;

    // restriction of the strict transform to E in chart A: strict_a(0, y)
    MultiPoly restA = b.strict_a.eval_partial({{germ.vx, Scalar(0)}});
    SPoly rest = SPoly::from_multipoly(restA.is_constant() ? restA.with_vars({germ.vy})
                                                           : restA,
                                       germ.vy);
    if (rest.is_zero()) throw error("internal: strict transform contains E");

    // vertical direction present iff strict_b passes through the chart-B origin
    bool vertical =
        b.strict_b.eval_partial({{germ.vx, Scalar(0)}, {germ.vy, Scalar(0)}}).is_zero();
    int vert_mult = b.m - rest.deg();  // multiplicity of E-infinity in strict|_E

    FieldRoots roots = roots_over_field(rest);
    for (const auto& [s, mult] : roots.exact) {
        ResolutionNode child;
        child.loc = NearLocation{NearLocation::Slope, s, SPoly(), mult};
        AffineCurve next{translate_to_origin(b.strict_a, germ.vx, germ.vy,
                                             PlanePoint{Scalar(0), s}),
                         germ.vx, germ.vy};
        expand_node(child, next, depth - 1);
        node.children.push_back(std::move(child));
    }
    for (const auto& pk : roots.packets) {
        ResolutionNode child;
        child.loc = NearLocation{NearLocation::SlopePacket, Scalar(0), pk.minpoly, pk.mult};
        auto lifted = extension_root(pk.minpoly, germ.f.field());
        if (lifted) {
            AffineCurve next{translate_to_origin(b.strict_a, germ.vx, germ.vy,
                                                 PlanePoint{Scalar(0), *lifted}),
                             germ.vx, germ.vy};
            try {
                expand_node(child, next, depth - 1);
            } catch (const zero_divisor_error&) {
                child.expanded = false;  // reducible modulus surfaced downstream
                child.children.clear();
            }
        } else {
            child.expanded = false;
        }
        node.children.push_back(std::move(child));
    }
    if (vertical) {
        ResolutionNode child;
        child.loc = NearLocation{NearLocation::Vertical, Scalar(0), SPoly(), vert_mult};
        // in chart B the roles of the variables swap; the germ is at the origin
        AffineCurve next{b.strict_b, germ.vx, germ.vy};
        expand_node(child, next, depth - 1);
        node.children.push_back(std::move(child));
    }
    std::sort(node.children.begin(), node.children.end(),
              [](const ResolutionNode& a, const ResolutionNode& b2) {
                  return a.loc.cmp(b2.loc) < 0;
              });
}

void expand_node(ResolutionNode& node, const AffineCurve& germ, int depth) {
    node.m = vanishing_order(germ.f);
    if (depth > 0) attach_children(node, germ, depth);
    else node.truncated = true;
}

}  // namespace

ResolutionNode resolution_tree(const AffineCurve& c, const PlanePoint& p, int depth) {
    if (depth < 0) throw degenerate_input_error("resolution_tree: negative depth");
    MultiPoly f = translate_to_origin(c.f, c.vx, c.vy, p);
    if (!f.eval_partial({{c.vx, Scalar(0)}, {c.vy, Scalar(0)}}).is_zero())
        throw degenerate_input_error("resolution_tree: point is not on the curve");
    ResolutionNode root;
    root.loc = NearLocation{};  // Root
    if (depth == 0) {
        root.m = vanishing_order(f);
        root.truncated = false;
        return root;
    }
    attach_children(root, AffineCurve{f, c.vx, c.vy}, depth);
    return root;
}

namespace {

constexpr int kInfDepth = 1 << 20;

int shared_levels(const ResolutionNode& a, const ResolutionNode& b) {
    if (a.m != b.m) return 0;
    if (a.loc.cmp(b.loc) != 0) return 0;
    if (!a.expanded || !b.expanded) return 1;  // unknown below: count this level
    if (a.truncated || b.truncated) return kInfDepth;  // agreed to the cut
    if (a.children.size() != b.children.size()) return 1;
    int best = kInfDepth;
    for (size_t i = 0; i < a.children.size(); ++i) {
        const auto& ca = a.children[i];
        const auto& cb = b.children[i];
        if (ca.loc.cmp(cb.loc) != 0) return 1;  // canonical order: sets differ
        best = std::min(best, shared_levels(ca, cb));
    }
    if (a.children.empty()) return kInfDepth;
    return 1 + best;
}

}  // namespace

int shared_tree_depth(const AffineCurve& c1, const AffineCurve& c2, const PlanePoint& p,
                      int max_depth) {
    ResolutionNode t1 = resolution_tree(c1, p, max_depth);
    ResolutionNode t2 = resolution_tree(c2, p, max_depth);
    return std::min(shared_levels(t1, t2), max_depth);
}

std::string tree_to_json(const ResolutionNode& n) {
    std::ostringstream os;
    os << "{\"m\":" << n.m;
    switch (n.loc.kind) {
        case NearLocation::Root:
            break;
        case NearLocation::Slope:
            os << ",\"slope\":\"" << n.loc.slope.to_string() << "\"";
            break;
        case NearLocation::SlopePacket:
            os << ",\"location_minpoly\":\"" << n.loc.minpoly.to_string("s") << "\"";
            break;
        case NearLocation::Vertical:
            os << ",\"slope\":\"infinity\"";
            break;
    }
    if (n.loc.kind != NearLocation::Root)
        os << ",\"restriction_mult\":" << n.loc.restriction_mult;
    if (!n.expanded) os << ",\"expanded\":false";
    if (n.truncated) os << ",\"truncated\":true";
    os << ",\"children\":[";
    for (size_t i = 0; i < n.children.size(); ++i) {
        if (i) os << ",";
        os << tree_to_json(n.children[i]);
    }
    os << "]}";
    return os.str();
}

CommonPoints affine_common_points(const AffineCurve& c1, const AffineCurve& c2) {
    CommonPoints out;
    MultiPoly g = gcd_multi(c1.f, c2.f);
    if (!g.is_constant()) throw infinite_multiplicity_error("curves share a component");
    const std::string &vx = c1.vx, &vy = c1.vy;
    MultiPoly R = resultant(c1.f, c2.f, vy);
    std::vector<Scalar> xcands;
    if (R.is_zero()) throw error("internal: resultant of coprime curves vanished");
    MultiPoly Rp = R.pruned();
    if (!Rp.is_constant()) {
        SPoly rx = SPoly::from_multipoly(Rp.var_index(vx) >= 0 ? Rp : Rp.with_vars({vx}), vx);
        FieldRoots roots = roots_over_field(rx);
        if (!roots.packets.empty()) out.complete = false;
        for (const auto& [x0, m] : roots.exact) xcands.push_back(x0);
    }
    for (const Scalar& x0 : xcands) {
        MultiPoly f0 = c1.f.eval_partial({{vx, x0}});
        MultiPoly g0 = c2.f.eval_partial({{vx, x0}});
        if (f0.is_zero() || g0.is_zero()) {
            // a vertical-line component: its points are handled by the other
            // curve's restriction
            const MultiPoly& other = f0.is_zero() ? g0 : f0;
            if (other.is_zero()) continue;
            SPoly s = SPoly::from_multipoly(other.with_vars({vy}), vy);
            FieldRoots r = roots_over_field(s);
            if (!r.packets.empty()) out.complete = false;
            for (const auto& [y0, m] : r.exact) out.rational.push_back({x0, y0});
            continue;
        }
        SPoly s1 = SPoly::from_multipoly(f0.with_vars({vy}), vy);
        SPoly s2 = SPoly::from_multipoly(g0.with_vars({vy}), vy);
        SPoly u = gcd(s1, s2);
        if (u.deg() == 0) continue;
        FieldRoots r = roots_over_field(u);
        if (!r.packets.empty()) out.complete = false;
        for (const auto& [y0, m] : r.exact) out.rational.push_back({x0, y0});
    }
    std::sort(out.rational.begin(), out.rational.end(), [](const PlanePoint& a, const PlanePoint& b) {
        if (int c = a.x.cmp(b.x)) return c < 0;
        return a.y.cmp(b.y) < 0;
    });
    return out;
}

}  // namespace pend
