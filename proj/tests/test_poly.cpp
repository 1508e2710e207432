#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "test_util.hpp"
#include "venkit/gallery.hpp"
#include "venkit/poly.hpp"
#include "venkit/polymap.hpp"

using namespace venkit;

namespace {

Poly var(const Ring& r, std::string_view n) { return Poly::variable(r, n); }

}  // namespace

TEST_CASE("ring invariants") {
    CHECK_THROWS_AS(make_ring({"x", "x"}), error);
    CHECK_THROWS_AS(make_ring({""}), error);
    CHECK_THROWS_AS(make_ring({"x"}, {"y"}), error);
    Ring r = make_ring({"x", "y"}, {"x"});
    CHECK(r->laurent(0));
    CHECK_FALSE(r->laurent(1));
}

TEST_CASE("poly canonical form and flags") {
    Ring r = make_ring({"x", "y"});
    Poly x = var(r, "x"), y = var(r, "y");
    Poly p = x * y + y * x;  // merges to 2xy
    CHECK(p.term_count() == 1);
    CHECK(p.terms()[0].coeff == 2);
    CHECK((p - p).is_zero());
    // negative exponents rejected without the Laurent flag
    CHECK_THROWS_AS(Poly::monomial(r, 1, Monomial{-1, 0}), error);
    Ring rl = make_ring({"x", "y"}, {"x"});
    CHECK_NOTHROW(Poly::monomial(rl, 1, Monomial{-1, 0}));
}

TEST_CASE("additive identity and w construction") {
    Ring amb = ambient_ring();
    Poly z = var(amb, "z"), y = var(amb, "y"), u = var(amb, "u");
    Poly p = z * z + y * u;
    CHECK(p + Poly::zero(amb) == p);
    CHECK(p == make("w"));
}

TEST_CASE("t expands to x*z + y*z^2 + y^2*u") {
    Ring amb = ambient_ring();
    Poly x = var(amb, "x"), y = var(amb, "y"), z = var(amb, "z"),
         u = var(amb, "u");
    Poly expanded = x * z + y * z.pow(2) + y.pow(2) * u;
    CHECK(make("t") == expanded);
}

TEST_CASE("substitute: scaling identities") {
    Ring loc = affine4_xloc();
    PolyMap g = scaling_g();
    Poly w = make("w").cast_to(loc);
    Poly t = make("t").cast_to(loc);
    Poly x = var(loc, "x");

    CHECK(g.apply(w) == x.pow(2) * w);
    // Nagata second coordinate pulled back along g gives t.
    Poly y = var(loc, "y"), z = var(loc, "z");
    Poly t0 = z + y * w;
    CHECK(g.apply(t0) == t);

    PolyMap id = PolyMap::identity(loc);
    CHECK(id.apply(w) == w);
}

TEST_CASE("substitute error paths") {
    Ring amb = ambient_ring();
    Poly w = make("w");
    std::array<Poly, 2> too_few{Poly::zero(amb), Poly::zero(amb)};
    CHECK_THROWS_AS(substitute(w, too_few, amb), error);
    // negative exponent needs a unit monomial image
    Ring rl = make_ring({"x", "y"}, {"x"});
    Poly p = Poly::monomial(rl, 1, Monomial{-1, 0});
    Poly x = var(rl, "x"), y = var(rl, "y");
    std::array<Poly, 2> bad{x + y, y};
    CHECK_THROWS_AS(substitute(p, bad, rl), error);
    std::array<Poly, 2> good{x, y};
    CHECK(substitute(p, good, rl) == p);
}

TEST_CASE("partial derivatives") {
    Ring rt = coeff_t_ring();
    Poly t = var(rt, "t"), x = var(rt, "x"), v = var(rt, "v");
    CHECK(partial_derivative(t.pow(3), "t") == 3 * t.pow(2));
    CHECK(partial_derivative(make("p", 3), "t") == 2 * v * t - x.pow(2));
    CHECK_THROWS_AS(partial_derivative(t, "nope"), error);

    Ring rl = make_ring({"x", "t"}, {"x"});
    Poly xt = Poly::monomial(rl, 1, Monomial{-1, 1});
    Poly expect = Poly::monomial(rl, -1, Monomial{-2, 1});
    CHECK(partial_derivative(xt, "x") == expect);
}

TEST_CASE("jacobian2 basics") {
    Ring rc = cert_ring();
    Poly t = var(rc, "t"), xi = var(rc, "xi"), x = var(rc, "x");
    CHECK(jacobian2(t, xi, "t", "xi") == Poly::constant(rc, 1));
    Poly a = make("a_tilde"), b0 = make("b0");
    CHECK(jacobian2(a, b0, "t", "xi") == x.pow(3));
}

TEST_CASE("exact_div examples") {
    Ring amb = ambient_ring();
    Poly x = var(amb, "x"), y = var(amb, "y"), z = var(amb, "z"),
         u = var(amb, "u");
    Poly v1 = make("v", 1), eta = make("eta"), t = make("t"), s = make("s");

    auto q = exact_div(v1 * eta + t * t, x);
    REQUIRE(q.has_value());
    CHECK(*q == x * (v1 * u + z * z) + s * t);

    CHECK_FALSE(exact_div(y, x).has_value());
    CHECK_THROWS_AS(exact_div(y, Poly::zero(amb)), error);

    Poly zeta3 = make("zeta", 3), v3 = make("v", 3);
    auto th = exact_div(t + x * zeta3 - v3 * zeta3.pow(2), v3.pow(2));
    REQUIRE(th.has_value());
    CHECK(*th == make("theta", 3));
}

TEST_CASE("exact_div in Laurent rings factors the common monomial") {
    Ring rl = make_ring({"x", "y"}, {"x"});
    Poly x = var(rl, "x"), y = var(rl, "y");
    Poly xin = Poly::monomial(rl, 1, Monomial{-1, 0});
    // (x^-1 y + y^2) / (x^-1) = y + x y^2
    auto q = exact_div(xin * y + y * y, xin);
    REQUIRE(q.has_value());
    CHECK(*q == y + x * y * y);
}

TEST_CASE("monomial ideal membership and reduction") {
    Ring rt = coeff_t_ring();
    Poly x = var(rt, "x"), v = var(rt, "v"), t = var(rt, "t");
    using P = std::pair<std::string, int>;
    std::array<P, 2> kx3vl2{P{"x", 3}, P{"v", 2}};
    auto gens = parse_gens(rt, kx3vl2);

    CHECK_FALSE(monomial_ideal_member(make("p", 3), gens));

    Ring rc = cert_ring();
    Poly xc = var(rc, "x"), vc = var(rc, "v"), tc = var(rc, "t"),
         xic = var(rc, "xi");
    auto gensc = parse_gens(rc, kx3vl2);
    CHECK(monomial_ideal_member(xc.pow(3) * tc + vc.pow(2) * xic, gensc));

    // p_2(a_tilde) lies in (x^3, v^2)
    Poly a = make("a_tilde");
    std::array<Poly, 3> im{xc, vc, a};
    Poly p2a = substitute(make("p", 2), im, rc);
    CHECK(monomial_ideal_member(p2a, gensc));

    CHECK(reduce_mod_monomials(x.pow(3) * t, parse_gens(rt, std::array<P, 1>{
                                                            P{"x", 3}}))
              .is_zero());
    // member iff reduce == 0
    Poly q = make("p", 2);
    CHECK(monomial_ideal_member(q, gens) ==
          reduce_mod_monomials(q, gens).is_zero());

    // negative exponents in a generator variable are rejected
    Ring rll = make_ring({"x", "v", "t"}, {"x"});
    Poly bad = Poly::monomial(rll, 1, Monomial{-1, 0, 0});
    auto gl = parse_gens(rll, std::array<P, 1>{P{"x", 2}});
    CHECK_THROWS_AS(monomial_ideal_member(bad, gl), error);
}

TEST_CASE("generic coefficient expansions of p_2") {
    // a = a00 + a10 x + a01 v + a20 x^2 + a11 x v + a02 v^2 with symbolic
    // coefficients; p_2(a) mod (x, v^2) collapses to a00^2 v.
    Ring big =
        make_ring({"x", "v", "a00", "a10", "a01", "a20", "a11", "a02"});
    Poly x = var(big, "x"), v = var(big, "v");
    Poly a00 = var(big, "a00"), a10 = var(big, "a10"), a01 = var(big, "a01");
    Poly a20 = var(big, "a20"), a11 = var(big, "a11"), a02 = var(big, "a02");
    Poly rest = a10 * x + a01 * v + a20 * x.pow(2) + a11 * x * v +
                a02 * v.pow(2);
    using P = std::pair<std::string, int>;

    auto p2_at = [&](const Poly& a) {
        std::array<Poly, 3> im{x, v, a};
        return substitute(make("p", 2), im, big);
    };

    Poly generic = a00 + rest;
    Poly red = reduce_mod_monomials(
        p2_at(generic), parse_gens(big, std::array<P, 2>{P{"x", 1}, P{"v", 2}}));
    CHECK(red == a00.pow(2) * v);

    Poly no_const = rest;
    Poly red2 = reduce_mod_monomials(
        p2_at(no_const),
        parse_gens(big, std::array<P, 2>{P{"x", 3}, P{"v", 2}}));
    CHECK(red2 == (a10.pow(2) - a01) * x.pow(2) * v);
}

TEST_CASE("coeff_in extracts certificate coefficients") {
    Poly a = make("a_tilde");
    using P = std::pair<std::string, int>;
    Poly a00 = coeff_in(a, std::array<P, 2>{P{"x", 0}, P{"v", 0}});
    CHECK(a00.is_zero());
    Poly a10 = coeff_in(a, std::array<P, 2>{P{"x", 1}, P{"v", 0}});
    Ring txi = a10.ring();
    CHECK(a10 == -Poly::variable(txi, "xi"));
    Poly a01 = coeff_in(a, std::array<P, 2>{P{"x", 0}, P{"v", 1}});
    CHECK(a01 == Poly::variable(txi, "xi").pow(2));
    CHECK(a01 == a10 * a10);
    CHECK_THROWS_AS(coeff_in(a, std::array<P, 1>{P{"nope", 0}}), error);
}

TEST_CASE("eval_at examples") {
    Ring amb = ambient_ring();
    std::array<mpq_class, 4> pt{mpq_class(0), mpq_class(1), mpq_class(2),
                                mpq_class(3)};
    // w at y=1, z=2, u=3 (x unused)
    CHECK(eval_at(make("w"), pt) == 7);

    std::array<mpq_class, 4> ones{mpq_class(1), mpq_class(1), mpq_class(1),
                                  mpq_class(1)};
    CHECK(eval_at(make("v", 1), ones) == 4);

    Poly rel = make("v", 1) * Poly::zero(amb);  // exercise zero poly
    CHECK(eval_at(rel, ones) == 0);

    // the quadratic relation vanishes identically
    Poly x = var(amb, "x"), y = var(amb, "y"), z = var(amb, "z");
    Poly lhs = y * make("s") + make("t").pow(2) - x.pow(2) * z.pow(2);
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10; ++i) {
        std::array<mpq_class, 4> p;
        for (auto& c : p) c = testutil::random_rational(rng, 7, false);
        CHECK(eval_at(lhs, p) == 0);
    }

    Ring rl = make_ring({"x"}, {"x"});
    Poly xin = Poly::monomial(rl, 1, Monomial{-1});
    std::array<mpq_class, 1> half{mpq_class(1, 2)};
    CHECK(eval_at(xin, half) == 2);
    std::array<mpq_class, 1> zero{mpq_class(0)};
    CHECK_THROWS_AS(eval_at(xin, zero), error);
}

TEST_CASE("property: canonicality of add/sub round trip") {
    std::mt19937_64 rng(11);
    Ring r = make_ring({"x", "y", "z"}, {"x"});
    for (int i = 0; i < 300; ++i) {
        Poly p = testutil::random_poly(rng, r, 5, 9, 6);
        Poly q = testutil::random_poly(rng, r, 5, 9, 6);
        CHECK((p + q) - q == p);
    }
}

TEST_CASE("property: substitution is a ring homomorphism") {
    std::mt19937_64 rng(12);
    Ring r = make_ring({"x", "y", "z"});
    for (int i = 0; i < 60; ++i) {
        Poly p = testutil::random_poly(rng, r, 3, 5, 4);
        Poly q = testutil::random_poly(rng, r, 3, 5, 4);
        std::array<Poly, 3> im{testutil::random_poly(rng, r, 2, 3, 3),
                               testutil::random_poly(rng, r, 2, 3, 3),
                               testutil::random_poly(rng, r, 2, 3, 3)};
        CHECK(substitute(p + q, im, r) ==
              substitute(p, im, r) + substitute(q, im, r));
        CHECK(substitute(p * q, im, r) ==
              substitute(p, im, r) * substitute(q, im, r));
    }
}

TEST_CASE("property: Leibniz rule") {
    std::mt19937_64 rng(13);
    Ring r = make_ring({"x", "y"}, {"y"});
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::random_poly(rng, r, 4, 7, 5);
        Poly q = testutil::random_poly(rng, r, 4, 7, 5);
        CHECK(partial_derivative(p * q, "y") ==
              p * partial_derivative(q, "y") + q * partial_derivative(p, "y"));
    }
}

TEST_CASE("property: exact division round trip") {
    std::mt19937_64 rng(14);
    Ring r = make_ring({"x", "y", "z"}, {"z"});
    int done = 0;
    for (int i = 0; i < 400 && done < 150; ++i) {
        Poly q = testutil::random_poly(rng, r, 3, 4, 4);
        Poly h = testutil::random_poly(rng, r, 3, 4, 4);
        if (q.is_zero()) continue;
        auto back = exact_div(q * h, q);
        REQUIRE(back.has_value());
        CHECK(*back == h);
        ++done;
    }
    CHECK(done >= 100);

    // whenever division succeeds the factorization is exact
    for (int i = 0; i < 200; ++i) {
        Poly p = testutil::random_poly(rng, r, 4, 6, 5);
        Poly q = testutil::random_poly(rng, r, 2, 3, 3);
        if (q.is_zero()) continue;
        if (auto h = exact_div(p, q)) CHECK(*h * q == p);
    }
}

TEST_CASE("property: membership agrees with reduction") {
    std::mt19937_64 rng(15);
    Ring r = make_ring({"x", "v", "t"});
    using P = std::pair<std::string, int>;
    auto gens = parse_gens(r, std::array<P, 2>{P{"x", 2}, P{"v", 3}});
    for (int i = 0; i < 300; ++i) {
        Poly p = testutil::random_poly(rng, r, 5, 5, 6);
        CHECK(monomial_ideal_member(p, gens) ==
              reduce_mod_monomials(p, gens).is_zero());
    }
}

TEST_CASE("property: evaluation is a homomorphism") {
    std::mt19937_64 rng(16);
    Ring r = make_ring({"x", "y"}, {"x"});
    for (int i = 0; i < 150; ++i) {
        Poly p = testutil::random_poly(rng, r, 4, 6, 5);
        Poly q = testutil::random_poly(rng, r, 4, 6, 5);
        std::array<mpq_class, 2> pt{testutil::random_rational(rng, 5, true),
                                    testutil::random_rational(rng, 5, false)};
        CHECK(eval_at(p + q, pt) == eval_at(p, pt) + eval_at(q, pt));
        CHECK(eval_at(p * q, pt) == eval_at(p, pt) * eval_at(q, pt));
    }
}

TEST_CASE("property: evaluation commutes with substitution") {
    std::mt19937_64 rng(17);
    Ring r = make_ring({"x", "y"});
    for (int i = 0; i < 100; ++i) {
        Poly p = testutil::random_poly(rng, r, 3, 5, 4);
        std::array<Poly, 2> im{testutil::random_poly(rng, r, 2, 3, 3),
                               testutil::random_poly(rng, r, 2, 3, 3)};
        std::array<mpq_class, 2> pt{testutil::random_rational(rng, 4, false),
                                    testutil::random_rational(rng, 4, false)};
        std::array<mpq_class, 2> inner{eval_at(im[0], pt), eval_at(im[1], pt)};
        CHECK(eval_at(substitute(p, im, r), pt) == eval_at(p, inner));
    }
}
