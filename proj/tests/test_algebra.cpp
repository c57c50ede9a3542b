#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace pend;
using testsup::random_nonzero_poly;
using testsup::random_poly;
using testsup::sylvester_resultant;

namespace {
MultiPoly P(const std::string& s, const std::vector<std::string>& v = {"x", "y"},
            const FieldSpec& f = FieldSpec::rationals()) {
    return parse_poly(s, v, f);
}
}  // namespace

TEST_CASE("scalar field axioms") {
    Scalar a(rat(3, 4)), b(rat(-2, 5));
    CHECK(a * a.inverse() == Scalar(1));
    CHECK((a + b) - b == a);

    auto fs = parse_number_field("k^2+k+1", "k");
    Scalar k = Scalar::nf_gen(fs.nf);
    Scalar w = k * k + k + Scalar(1);
    CHECK(w.is_zero());
    Scalar u = k + Scalar(2);
    CHECK(u * u.inverse() == Scalar(1));
    CHECK((k * k * k) == Scalar(1));  // k^3 = 1 in Q[k]/(k^2+k+1)

    Scalar t = Scalar::ratfunc_gen("t");
    Scalar r = (t * t + Scalar(1)) / t;
    CHECK(r * t == t * t + Scalar(1));
    CHECK(specialize_scalar(r, rat(2)) == rat(5, 2));

    CHECK_THROWS_AS((void)(t + k), field_tower_error);
}

TEST_CASE("number field modulus must be squarefree; zero divisors surface") {
    CHECK_THROWS_AS(parse_number_field("k^2+2*k+1", "k"), degenerate_input_error);
    auto fs = parse_number_field("k^2-1", "k");  // squarefree but reducible
    Scalar k = Scalar::nf_gen(fs.nf);
    CHECK_THROWS_AS((k - Scalar(1)).inverse(), zero_divisor_error);
}

TEST_CASE("parser and printer round-trip to canonical form") {
    MultiPoly p = P("y^2 - x");
    CHECK(p.to_string() == "y^2 - x");
    CHECK(parse_poly(p.to_string(), {"x", "y"}) == p);
    MultiPoly q = P("(x+y)^3*(x-y)");
    CHECK(parse_poly(q.to_string(), {"x", "y"}) == q);
    CHECK(P(" y ^ 2-x ") == p);
    CHECK_THROWS_AS(P("y^-1"), parse_error);
    CHECK_THROWS_AS(P("z"), parse_error);
    CHECK_THROWS_AS(P("x/y"), parse_error);
    CHECK(P("3/4*x") * Scalar(rat(4, 3)) == P("x"));
}

TEST_CASE("ring axioms on random triples") {
    for (int i = 0; i < 30; ++i) {
        MultiPoly a = random_poly({"x", "y"}, 3);
        MultiPoly b = random_poly({"x", "y"}, 3);
        MultiPoly c = random_poly({"x", "y"}, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
    }
}

TEST_CASE("resultant examples") {
    CHECK(resultant(P("y^2-x"), P("y-3"), "y") == P("9-x"));
    MultiPoly lin1 = P("a*y+b", {"y", "a", "b", "c", "d"});
    MultiPoly lin2 = P("c*y+d", {"y", "a", "b", "c", "d"});
    CHECK(resultant(lin1, lin2, "y") == P("a*d-b*c", {"a", "b", "c", "d"}).with_vars({"y"}));
    CHECK(resultant(P("y^2-x"), P("y^2-x"), "y").is_zero());
    CHECK_THROWS_AS(resultant(MultiPoly(), MultiPoly(), "y"), degenerate_input_error);
}

TEST_CASE("resultant agrees with the Sylvester determinant oracle") {
    for (int i = 0; i < 25; ++i) {
        MultiPoly f = random_nonzero_poly({"x", "y"}, 3);
        MultiPoly g = random_nonzero_poly({"x", "y"}, 3);
        if (f.deg_in("y") == 0 && g.deg_in("y") == 0) continue;
        CHECK(resultant(f, g, "y") == sylvester_resultant(f, g, "y"));
    }
    // and over Q(t)
    FieldSpec qt = FieldSpec::rational_functions("t");
    MultiPoly f = P("y^2 - t*x", {"x", "y"}, qt);
    MultiPoly g = P("y - t", {"x", "y"}, qt);
    CHECK(resultant(f, g, "y") == sylvester_resultant(f, g, "y"));
}

TEST_CASE("resultant symmetry sign") {
    for (int i = 0; i < 15; ++i) {
        MultiPoly f = random_nonzero_poly({"x", "y"}, 3);
        MultiPoly g = random_nonzero_poly({"x", "y"}, 3);
        int df = f.deg_in("y"), dg = g.deg_in("y");
        if (df == 0 && dg == 0) continue;
        MultiPoly r1 = resultant(f, g, "y");
        MultiPoly r2 = resultant(g, f, "y");
        if ((df % 2 == 1) && (dg % 2 == 1))
            CHECK(r1 == -r2);
        else
            CHECK(r1 == r2);
    }
}

TEST_CASE("squarefree part") {
    CHECK(squarefree_part(P("x^2*y")) == P("x*y"));
    CHECK(squarefree_part(P("(x+y)^3*(x-y)")) == P("(x+y)*(x-y)"));
    CHECK(squarefree_part(P("5")) == P("1"));
    CHECK_THROWS_AS(squarefree_part(MultiPoly()), degenerate_input_error);
    for (int i = 0; i < 15; ++i) {
        MultiPoly f = random_nonzero_poly({"x", "y"}, 3);
        CHECK(squarefree_part(f * f) == squarefree_part(f));
    }
}

TEST_CASE("divides with cofactor") {
    auto q = divides(P("y-x"), P("y^2-x^2"));
    REQUIRE(q.has_value());
    CHECK(*q == P("y+x"));
    CHECK(!divides(P("y"), P("y^2-x")).has_value());

    auto fs = parse_number_field("k^2+k+1", "k");
    MultiPoly f = parse_poly("w - k*z", {"z", "w"}, fs);
    MultiPoly g = parse_poly("w^2 - k^2*z^2", {"z", "w"}, fs);
    auto qk = divides(f, g);
    REQUIRE(qk.has_value());
    CHECK(*qk == parse_poly("w + k*z", {"z", "w"}, fs));

    for (int i = 0; i < 20; ++i) {
        MultiPoly f2 = random_nonzero_poly({"x", "y"}, 2);
        MultiPoly q2 = random_nonzero_poly({"x", "y"}, 2);
        auto c = divides(f2, f2 * q2);
        REQUIRE(c.has_value());
        CHECK(*c == q2);
    }
}

TEST_CASE("gcd sanity") {
    CHECK(gcd_multi(P("(x+y)^2*(x-y)"), P("(x+y)*(x^2+1)")) == P("x+y"));
    CHECK(gcd_multi(P("x"), P("y")).is_constant());
}

TEST_CASE("exact rational roots") {
    auto r1 = univariate_rational_roots(P("t^2-1", {"t"}));
    REQUIRE(r1.size() == 2);
    CHECK(r1[0].first == rat(-1));
    CHECK(r1[1].first == rat(1));
    CHECK(univariate_rational_roots(P("t^2-2", {"t"})).empty());
    auto r3 = univariate_rational_roots(P("t^3-t", {"t"}));
    REQUIRE(r3.size() == 3);
    CHECK(r3[0].first == rat(-1));
    CHECK(r3[1].first == rat(0));
    CHECK(r3[2].first == rat(1));
    // multiplicities and fractional roots
    auto r4 = univariate_rational_roots(P("(2*t-3)^2*(t+5)", {"t"}));
    REQUIRE(r4.size() == 2);
    CHECK(r4[0] == std::make_pair(rat(-5), 1));
    CHECK(r4[1] == std::make_pair(rat(3, 2), 2));
}

TEST_CASE("numeric roots satisfy their reported bounds") {
    MultiPoly f = P("t^5 - t - 1", {"t"});
    auto roots = univariate_numeric_roots(f);
    REQUIRE(roots.size() == 5);
    for (const auto& r : roots) CHECK(r.residual <= r.bound + 1e-30);
    // residual really is |f(z)| for the monic polynomial
    for (const auto& r : roots) CHECK(r.residual < 1e-10);
}

TEST_CASE("compose") {
    std::map<std::string, MultiPoly> sub{{"x", P("x^2")}, {"y", P("y^2-x")}};
    CHECK(compose(P("y"), sub) == P("y^2-x"));
    CHECK(compose(P("y^2-x"), sub) == P("(y^2-x)^2 - x^2"));
    std::map<std::string, MultiPoly> id{{"x", P("x")}, {"y", P("y")}};
    CHECK(compose(P("x"), id) == P("x"));
}

TEST_CASE("squarefree decomposition over a scalar field") {
    SPoly f = SPoly::from_multipoly(P("(t-1)^2*(t+2)", {"t"}), "t");
    auto dec = squarefree_decomposition(f);
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[1].second == 2);
    auto roots = roots_over_field(SPoly::from_multipoly(P("t^4-t", {"t"}), "t"));
    // t(t-1)(t^2+t+1): rational 0,1 and one quadratic packet
    REQUIRE(roots.exact.size() == 2);
    REQUIRE(roots.packets.size() == 1);
    CHECK(roots.packets[0].minpoly.to_string("t") == "t^2 + t + 1");
}
