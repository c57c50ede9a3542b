#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pend/curve.hpp"
#include "test_support.hpp"

using namespace pend;

namespace {

MultiPoly P(const std::string& s,
            const std::vector<std::string>& v = {"x", "y"}) {
    return parse_poly(s, v);
}

ProjCurve curve(const std::string& s) { return ProjCurve(P(s), ProjCurve::Form::Affine); }

Endomorphism ex_skew() { return Endomorphism(P("x^2"), P("y^2 - x")); }
Endomorphism ex_split() { return Endomorphism(P("x^2"), P("y^2")); }

ProjCurve line_with_param(const Rat& slope, const Rat& off) {
    ProjCurve c = ProjCurve(P("y") - P("x") * Scalar(slope) - P("1") * Scalar(off),
                            ProjCurve::Form::Affine);
    c.set_parametrization(SPoly::var(), SPoly(std::vector<Scalar>{Scalar(off), Scalar(slope)}));
    return c;
}

}  // namespace

TEST_CASE("curve construction reduces and canonicalizes") {
    CHECK(curve("y").degree() == 1);
    CHECK(curve("y").poly() == parse_poly("y", {"x", "y", "z"}));
    CHECK(curve("y^2-x").poly() == parse_poly("y^2 - x*z", {"x", "y", "z"}));
    CHECK(curve("(y-x)^2").degree() == 1);
    CHECK(curve("(y-x)^2") == curve("y-x"));
    CHECK(curve("2*y-2*x") == curve("y-x"));
    CHECK_THROWS_AS(curve("5"), degenerate_input_error);
    ProjCurve hinf(parse_poly("z", {"x", "y", "z"}), ProjCurve::Form::Homogeneous);
    CHECK(hinf.is_infinity_line());
    // idempotence of reduction
    ProjCurve c1 = curve("y^2 - x");
    ProjCurve c2 = ProjCurve(c1.poly(), ProjCurve::Form::Homogeneous);
    CHECK(c1 == c2);
}

TEST_CASE("the two-cycle of the running example") {
    Endomorphism F = ex_skew();
    PushforwardCertificate fwd = pushforward_image(F, curve("y"));
    CHECK(fwd.image == curve("y^2-x"));
    CHECK(fwd.delta == 1);
    PushforwardCertificate back = pushforward_image(F, curve("y^2-x"));
    CHECK(back.image == curve("y"));
    CHECK(back.delta == 4);  // all four preimages of a generic image point lie on the conic
    // two-cycle closure
    CHECK(pushforward_image(F, back.image).image == curve("y^2-x"));
    // certificate identity holds exactly
    MultiPoly g = curve("y").affine().with_vars({"x", "y"});
    MultiPoly h = fwd.image.affine().with_vars({"x", "y"});
    MultiPoly hF = h.substituted({{"x", F.P()}, {"y", F.Q()}});
    CHECK(hF == fwd.cofactor * g);
}

TEST_CASE("diagonal under the split square map") {
    PushforwardCertificate c = pushforward_image(ex_split(), curve("y-x"));
    CHECK(c.image == curve("y-x"));
    CHECK(c.delta == 2);  // (t,t) -> (t^2,t^2) is generically two-to-one
}

TEST_CASE("pushforward degree identity on random curves") {
    // graph curves y = p(x) are irreducible, so the fiber degree is uniform
    for (int i = 0; i < 10; ++i) {
        MultiPoly p = testsup::random_poly({"x"}, 3, 0.9, -4, 4);
        MultiPoly g = P("y") - p.with_vars({"y"});
        if (g.deg() < 1) continue;
        ProjCurve C(g, ProjCurve::Form::Affine);
        for (const Endomorphism& F : {ex_skew(), ex_split()}) {
            PushforwardCertificate cert = pushforward_image(F, C);
            CHECK(cert.delta_uniform);
            CHECK(cert.delta * cert.image.degree() == F.degree() * C.degree());
            // soundness: rational points of C map into the certified image
            for (long u = -2; u <= 2; ++u) {
                Scalar x0{rat(u)}, y0 = p.eval({{"x", Scalar(rat(u))}});
                auto [fx, fy] = F.apply(x0, y0);
                CHECK(cert.image.affine().eval({{"x", fx}, {"y", fy}}).is_zero());
            }
        }
    }
}

TEST_CASE("parametrized pushforward route agrees with the kernel route") {
    Endomorphism F = ex_skew();
    ProjCurve with = line_with_param(rat(1), rat(0));
    ProjCurve without = curve("y-x");
    PushforwardCertificate a = pushforward_image(F, with);
    PushforwardCertificate b = pushforward_image(F, without);
    CHECK(a.image == b.image);
    CHECK(a.delta == b.delta);
    CHECK(a.image.parametrization().has_value());
    // and once more along the orbit
    PushforwardCertificate a2 = pushforward_image(F, a.image);
    PushforwardCertificate b2 = pushforward_image(F, b.image);
    CHECK(a2.image == b2.image);
}

TEST_CASE("infinity points with multiplicities") {
    auto pts = infinity_points(curve("y^2-x"));
    REQUIRE(pts.size() == 1);
    CHECK(!pts[0].vertical);
    CHECK(pts[0].t == Scalar(0));
    CHECK(pts[0].multiplicity == 2);  // tangent to the line at infinity

    auto pl = infinity_points(curve("y-x"));
    REQUIRE(pl.size() == 1);
    CHECK(pl[0].t == Scalar(1));
    CHECK(pl[0].multiplicity == 1);

    auto ph = infinity_points(ProjCurve(parse_poly("x*y - z^2", {"x", "y", "z"}),
                                        ProjCurve::Form::Homogeneous));
    REQUIRE(ph.size() == 2);
    CHECK(ph[0].t == Scalar(0));
    CHECK(ph[0].multiplicity == 1);
    CHECK(ph[1].vertical);
    CHECK(ph[1].multiplicity == 1);

    // multiplicities always sum to the degree (packets included)
    for (const char* s : {"y^2 - 2*x^2 + y - 1", "y^3 - x*y + 1", "x^2*y + y + x"}) {
        auto v = infinity_points(curve(s));
        int total = 0;
        for (const auto& ip : v)
            total += ip.multiplicity * (ip.packet ? ip.packet->minpoly.deg() : 1);
        CHECK(total == curve(s).degree());
    }
}

TEST_CASE("invariance certificates") {
    Endomorphism F = ex_skew();
    auto c2 = invariance_certificate(F, curve("y"), 2);
    REQUIRE(c2.has_value());
    // y o F^2 = (y^2-x)^2 - x^2 = y^2 (y^2 - 2x)
    CHECK(*c2 == P("y*(y^2 - 2*x)"));
    CHECK(!invariance_certificate(F, curve("y"), 1).has_value());

    auto diag = invariance_certificate(ex_split(), curve("y-x"), 1);
    REQUIRE(diag.has_value());
    CHECK(*diag == P("y+x"));
}

TEST_CASE("certificates over a number field") {
    auto fs = parse_number_field("k^2+k+1", "k");
    MultiPoly g = parse_poly("y - k*x", {"x", "y"}, fs);
    ProjCurve C(g, ProjCurve::Form::Affine);
    auto cert = invariance_certificate(ex_split(), C, 2);
    CHECK(cert.has_value());
    CHECK(!invariance_certificate(ex_split(), C, 1).has_value());
}

TEST_CASE("pushforward rejects the line at infinity") {
    ProjCurve hinf(parse_poly("z", {"x", "y", "z"}), ProjCurve::Form::Homogeneous);
    CHECK_THROWS_AS(pushforward_image(ex_split(), hinf), degenerate_input_error);
}
