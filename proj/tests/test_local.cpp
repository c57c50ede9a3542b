#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pend/local.hpp"
#include "test_support.hpp"

using namespace pend;

namespace {

MultiPoly P(const std::string& s) { return parse_poly(s, {"x", "y"}); }
AffineCurve C(const std::string& s) { return AffineCurve{P(s), "x", "y"}; }
PlanePoint origin() { return PlanePoint{Scalar(0), Scalar(0)}; }

// random curve through the origin built from graph factors with rational
// slopes, so the whole resolution data stays rational
MultiPoly random_origin_curve(int factors) {
    MultiPoly f = MultiPoly::constant(Scalar(1), {"x", "y"});
    for (int i = 0; i < factors; ++i) {
        Rat a = testsup::random_rat(-3, 3), b = testsup::random_rat(-2, 2);
        // y - a*x - b*x^2 passes through the origin for every a, b
        f = f * (P("y") - P("x") * Scalar(a) - P("x^2") * Scalar(b));
    }
    return f;
}

}  // namespace

TEST_CASE("intersection multiplicities at the origin") {
    CHECK(intersection_multiplicity(C("y"), C("y^2-x^3"), origin()) == 3);
    CHECK(intersection_multiplicity(C("x"), C("y^2-x^3"), origin()) == 2);
    CHECK(intersection_multiplicity(C("y^2-x^3"), C("y^2-x^2"), origin()) == 4);
    CHECK(intersection_multiplicity(C("y"), C("x"), origin()) == 1);
    // off-point gives zero
    CHECK(intersection_multiplicity(C("y-1"), C("x"), origin()) == 0);
    // shared component raises
    CHECK_THROWS_AS(intersection_multiplicity(C("y*(y-x)"), C("y*(y+x)"), origin()),
                    infinite_multiplicity_error);
}

TEST_CASE("both multiplicity routes agree whenever the resultant route applies") {
    auto check_both = [](const AffineCurve& a, const AffineCurve& b, const PlanePoint& p) {
        auto r = intersection_multiplicity_resultant(a, b, p);
        if (r) CHECK(*r == intersection_multiplicity(a, b, p));
        return r.has_value();
    };
    CHECK(check_both(C("y^2-x^3"), C("y^2-x^2"), origin()));
    CHECK(check_both(C("y"), C("y^2-x^3"), origin()));
    int applied = 0;
    for (int i = 0; i < 12; ++i) {
        MultiPoly f = random_origin_curve(2);
        MultiPoly g = random_origin_curve(1);
        if (!gcd_multi(f, g).is_constant()) continue;
        if (check_both(AffineCurve{f, "x", "y"}, AffineCurve{g, "x", "y"}, origin())) ++applied;
    }
    CHECK(applied >= 3);
}

TEST_CASE("multiplicity one means smooth transverse") {
    // gradient oracle: both curves smooth at p with distinct tangent lines
    auto oracle = [](const AffineCurve& a, const AffineCurve& b, const PlanePoint& p) {
        auto grad = [&](const AffineCurve& c) {
            Scalar gx = c.f.derivative(c.vx).eval_partial({{c.vx, p.x}, {c.vy, p.y}})
                            .constant_value();
            Scalar gy = c.f.derivative(c.vy).eval_partial({{c.vx, p.x}, {c.vy, p.y}})
                            .constant_value();
            return std::make_pair(gx, gy);
        };
        auto [ax, ay] = grad(a);
        auto [bx, by] = grad(b);
        bool smooth = !(ax.is_zero() && ay.is_zero()) && !(bx.is_zero() && by.is_zero());
        return smooth && !(ax * by - ay * bx).is_zero();
    };
    std::vector<std::pair<AffineCurve, AffineCurve>> pairs = {
        {C("y"), C("x")},
        {C("y-x"), C("y+x")},
        {C("y-x^2"), C("y")},
        {C("y^2-x^3"), C("y-x")},
        {C("y^2-x^3"), C("x")},
    };
    for (const auto& [a, b] : pairs) {
        int m = intersection_multiplicity(a, b, origin());
        CHECK((m == 1) == oracle(a, b, origin()));
    }
}

TEST_CASE("blow-up strict transforms and multiplicities") {
    BlowUp cusp = blow_up(C("y^2-x^3"), origin());
    CHECK(cusp.m == 2);
    CHECK(cusp.strict_a == P("y^2 - x"));
    BlowUp line = blow_up(C("y-x"), origin());
    CHECK(line.m == 1);
    CHECK(line.strict_a == P("y-1"));
    BlowUp node = blow_up(C("y^2-x^2"), origin());
    CHECK(node.m == 2);
    CHECK(node.strict_a == P("(y-1)*(y+1)"));
    CHECK_THROWS_AS(blow_up(C("y-1"), origin()), degenerate_input_error);
}

TEST_CASE("resolution trees: cusp, smooth branch, node") {
    ResolutionNode cusp = resolution_tree(C("y^2-x^3"), origin(), 2);
    CHECK(cusp.m == 2);
    REQUIRE(cusp.children.size() == 1);
    CHECK(cusp.children[0].m == 1);
    REQUIRE(cusp.children[0].children.size() == 1);
    CHECK(cusp.children[0].children[0].m == 1);
    CHECK(cusp.children[0].children[0].loc.kind == NearLocation::Vertical);

    ResolutionNode smooth = resolution_tree(C("y-x"), origin(), 2);
    CHECK(smooth.m == 1);
    REQUIRE(smooth.children.size() == 1);
    CHECK(smooth.children[0].m == 1);
    REQUIRE(smooth.children[0].children.size() == 1);
    CHECK(smooth.children[0].children[0].m == 1);

    ResolutionNode node = resolution_tree(C("y*x"), origin(), 1);
    CHECK(node.m == 2);
    REQUIRE(node.children.size() == 2);  // two transverse branches separate
    CHECK(node.children[0].loc.kind == NearLocation::Slope);
    CHECK(node.children[1].loc.kind == NearLocation::Vertical);
}

TEST_CASE("irrational tangent directions come as packets and expand once") {
    ResolutionNode t = resolution_tree(C("y^2 - 2*x^2"), origin(), 2);
    CHECK(t.m == 2);
    REQUIRE(t.children.size() == 1);
    CHECK(t.children[0].loc.kind == NearLocation::SlopePacket);
    CHECK(t.children[0].loc.minpoly.to_string("s") == "s^2 - 2");
    CHECK(t.children[0].expanded);
    CHECK(t.children[0].children.size() >= 1);
}

TEST_CASE("shared tree depth") {
    CHECK(shared_tree_depth(C("y"), C("y-x^2"), origin(), 6) == 2);
    CHECK(shared_tree_depth(C("y"), C("x"), origin(), 6) == 1);
    CHECK(shared_tree_depth(C("y^2-x^3"), C("y^2-x^3"), origin(), 5) == 5);
    // tangent curves share one more level than transverse ones
    CHECK(shared_tree_depth(C("y"), C("y-x^3"), origin(), 6) == 3);
    CHECK(shared_tree_depth(C("y-x"), C("y+x"), origin(), 6) == 1);
}

TEST_CASE("blow-up bookkeeping identity on random pairs") {
    // (C1.C2)_p = m1*m2 + sum over shared points on E of the strict transforms
    int done = 0;
    for (int i = 0; i < 60 && done < 25; ++i) {
        MultiPoly f = random_origin_curve(1 + (i % 2));
        MultiPoly g = random_origin_curve(1);
        if (!gcd_multi(f, g).is_constant()) continue;
        AffineCurve a{f, "x", "y"}, b{g, "x", "y"};
        int lhs;
        try {
            lhs = intersection_multiplicity(a, b, origin());
        } catch (const infinite_multiplicity_error&) {
            continue;
        }
        BlowUp ba = blow_up(a, origin());
        BlowUp bb = blow_up(b, origin());
        int rhs = ba.m * bb.m;
        // chart-A shared slopes
        MultiPoly ra = ba.strict_a.eval_partial({{"x", Scalar(0)}});
        MultiPoly rb = bb.strict_a.eval_partial({{"x", Scalar(0)}});
        SPoly sa = SPoly::from_multipoly(ra.is_constant() ? ra.with_vars({"y"}) : ra, "y");
        SPoly sb = SPoly::from_multipoly(rb.is_constant() ? rb.with_vars({"y"}) : rb, "y");
        SPoly common = gcd(sa, sb);
        for (const auto& [s, m] : roots_over_field(common).exact) {
            AffineCurve sa2{ba.strict_a, "x", "y"}, sb2{bb.strict_a, "x", "y"};
            rhs += intersection_multiplicity(sa2, sb2, PlanePoint{Scalar(0), s});
        }
        REQUIRE(roots_over_field(common).packets.empty());
        // shared vertical point
        bool va = ba.strict_b.eval_partial({{"x", Scalar(0)}, {"y", Scalar(0)}}).is_zero();
        bool vb = bb.strict_b.eval_partial({{"x", Scalar(0)}, {"y", Scalar(0)}}).is_zero();
        if (va && vb) {
            AffineCurve sa2{ba.strict_b, "x", "y"}, sb2{bb.strict_b, "x", "y"};
            rhs += intersection_multiplicity(sa2, sb2, origin());
        }
        CHECK(lhs == rhs);
        ++done;
    }
    CHECK(done >= 25);
}

TEST_CASE("rigidity: distinct coprime curves separate within deg^2 levels") {
    int done = 0;
    for (int i = 0; i < 80 && done < 30; ++i) {
        MultiPoly f = random_origin_curve(1 + (i % 3));
        MultiPoly g = random_origin_curve(1 + ((i + 1) % 2));
        if (f == g) continue;
        if (!gcd_multi(f, g).is_constant()) continue;
        MultiPoly fr = squarefree_part(f), gr = squarefree_part(g);
        if (fr == gr) continue;
        int D = std::max(fr.deg(), gr.deg());
        int bound = D * D;
        int s = shared_tree_depth(AffineCurve{fr, "x", "y"}, AffineCurve{gr, "x", "y"},
                                  origin(), bound + 1);
        CHECK(s <= bound);
        ++done;
    }
    CHECK(done >= 30);
}

TEST_CASE("tree serialization is canonical") {
    ResolutionNode t = resolution_tree(C("y*x"), origin(), 1);
    std::string j = tree_to_json(t);
    CHECK(j.find("\"m\":2") != std::string::npos);
    CHECK(j == tree_to_json(resolution_tree(C("x*y"), origin(), 1)));
}

TEST_CASE("affine common points of coprime curves") {
    auto cp = affine_common_points(C("y-x^2"), C("y-x"));
    REQUIRE(cp.rational.size() == 2);
    CHECK(cp.complete);
    CHECK(cp.rational[0].x == Scalar(0));
    CHECK(cp.rational[1].x == Scalar(1));
    auto cp2 = affine_common_points(C("x^2+y^2-1"), C("x-3"));
    CHECK(cp2.rational.empty());
    CHECK(!cp2.complete);  // the two points have irrational y
}
