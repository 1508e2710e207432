#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>

#include "test_util.hpp"
#include "venkit/format.hpp"
#include "venkit/gallery.hpp"
#include "venkit/polymap.hpp"

using namespace venkit;

TEST_CASE("compose conventions") {
    Ring loc = affine4_xloc();
    PolyMap id = PolyMap::identity(loc);
    PolyMap b = beta_map();
    PolyMap c = compose(id, b);
    for (std::size_t i = 0; i < 4; ++i) CHECK(c.images[i] == b.images[i]);
    CHECK(is_identity(compose(id, id)));
}

TEST_CASE("beta lands on (y, t, eta)") {
    Ring loc = affine4_xloc();
    PolyMap b = beta_map();
    CHECK(b.images[0] == Poly::variable(loc, "x"));
    CHECK(b.images[1] == Poly::variable(loc, "y"));
    CHECK(b.images[2] == make("t").cast_to(loc));
    CHECK(b.images[3] == make("eta").cast_to(loc));
}

TEST_CASE("gamma composed with beta gives the chart map") {
    Ring loc = affine4_xloc();
    for (int n = 1; n <= 4; ++n) {
        PolyMap chart = compose(gamma_shear(n), beta_map());
        CHECK(chart.images[1] == make("v", n).cast_to(loc));
        CHECK(chart.images[2] == make("t").cast_to(loc));
        CHECK(chart.images[3] == make("eta").cast_to(loc));
    }
}

TEST_CASE("nagata preserves w and inverts") {
    Ring r3 = affine3();
    PolyMap a = nagata(), ai = nagata_inverse();
    Poly y = Poly::variable(r3, "y"), z = Poly::variable(r3, "z"),
         u = Poly::variable(r3, "u");
    Poly w = z * z + y * u;
    CHECK(a.apply(w) == w);
    CHECK(is_identity(compose(a, ai)));
    CHECK(is_identity(compose(ai, a)));
}

TEST_CASE("footnote decomposition") {
    CHECK(verify_footnote_decomposition());
    CHECK_FALSE(footnote_with_broken_chain());
    // mu really is (y, y*z1, y*u1)
    Ring r3 = affine3();
    Poly y = Poly::variable(r3, "y"), z = Poly::variable(r3, "z"),
         u = Poly::variable(r3, "u");
    PolyMap mu{r3, {y, y * z, y * u}};
    CHECK(mu.images[1] == y * z);
}

TEST_CASE("elementary move inverses") {
    Ring loc = affine4_xloc();
    // scale by x^-2 inverts to scale by x^2
    ScaleMove sc{loc->index_of("y"), Term{mpz_class(1), Monomial{-2, 0, 0, 0}}};
    auto inv = invert_move(sc);
    const auto& si = std::get<ScaleMove>(inv);
    CHECK(si.unit.mono == Monomial{2, 0, 0, 0});
    // shear inverse subtracts
    Poly z = Poly::variable(loc, "z");
    TriangularMove tri{loc->index_of("u"), z * z};
    ElementaryMove tri_inv = invert_move(tri);
    const auto& ti = std::get<TriangularMove>(tri_inv);
    CHECK(ti.addend == -(z * z));

    // triangular addend must not involve the target variable
    Poly u = Poly::variable(loc, "u");
    Chain bad{loc, {TriangularMove{loc->index_of("u"), u}}};
    CHECK_THROWS_AS(flatten(bad), error);
    // explicit moves verify both sides
    CHECK_THROWS_AS(make_explicit(beta_map(), beta_map()), error);
}

TEST_CASE("property: chains invert") {
    std::mt19937_64 rng(31);
    Ring r = make_ring({"x", "y", "z"}, {"x"});
    // shears and swaps act on the plain variables y, z; scales may hit any
    std::uniform_int_distribution<int> kind(0, 2), plainpick(1, 2),
        varpick(0, 2), xexp(-3, 3), sign(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
        Chain c{r, {}};
        std::uniform_int_distribution<int> len(1, 5);
        int L = len(rng);
        for (int i = 0; i < L; ++i) {
            int k = kind(rng);
            if (k == 0) {
                std::size_t v = static_cast<std::size_t>(plainpick(rng));
                Poly add = testutil::random_poly(rng, r, 3, 4, 3);
                // strip the target variable from the addend
                std::vector<Term> kept;
                for (const auto& t : add.terms())
                    if (t.mono[v] == 0) kept.push_back(t);
                c.moves.push_back(TriangularMove{v, Poly(r, kept)});
            } else if (k == 1) {
                std::size_t v = static_cast<std::size_t>(varpick(rng));
                Monomial m{v == 0 ? 0 : xexp(rng), 0, 0};
                c.moves.push_back(
                    ScaleMove{v, Term{mpz_class(sign(rng) ? 1 : -1), m}});
            } else {
                c.moves.push_back(PermuteMove{{0, 2, 1}});
            }
        }
        Chain ci = invert_chain(c);
        CHECK(is_identity(compose(flatten(ci), flatten(c))));
        CHECK(is_identity(compose(flatten(c), flatten(ci))));
    }
}

TEST_CASE("property: composition is associative") {
    std::mt19937_64 rng(32);
    Ring r = make_ring({"x", "y"});
    for (int i = 0; i < 30; ++i) {
        auto rnd_map = [&] {
            PolyMap m{r, {}};
            m.images.push_back(testutil::random_poly(rng, r, 2, 3, 3));
            m.images.push_back(testutil::random_poly(rng, r, 2, 3, 3));
            return m;
        };
        PolyMap f = rnd_map(), g = rnd_map(), h = rnd_map();
        PolyMap lhs = compose(compose(f, g), h);
        PolyMap rhs = compose(f, compose(g, h));
        for (std::size_t k = 0; k < 2; ++k) CHECK(lhs.images[k] == rhs.images[k]);
    }
}

TEST_CASE("integrality detection") {
    Ring loc = affine4_xloc();
    Ring plain = affine4();
    CHECK(is_integral(PolyMap::identity(loc), *plain));
    PolyMap beta_inv = flatten(invert_chain(beta_chain()));
    CHECK_FALSE(is_integral(beta_inv, *plain));     // x-denominators survive
    CHECK(is_integral(beta_inv, *loc));             // but it lives over L0
    CHECK(is_identity(compose(beta_inv, beta_map())));
}

TEST_CASE("alpha_n: construction, integrality, round trip") {
    CHECK_THROWS_AS(build_alpha_n(2), error);
    for (int n : {3, 4, 5}) {
        CAPTURE(n);
        auto [alpha, alpha_inv] = build_alpha_n(n);  // verifies internally
        Ring plain = affine4();
        CHECK(alpha.images[0] == Poly::variable(plain, "x"));
        CHECK(alpha.images[1] == make("v", n));
        CHECK(alpha.images[2] == make("zeta", n));
        CHECK(alpha.images[3] == make("theta", n));
        CHECK(is_integral(alpha_inv, *plain));

        // numeric spot check of the round trip
        std::array<mpq_class, 4> pt{mpq_class(2), mpq_class(-3), mpq_class(1),
                                    mpq_class(4)};
        std::array<mpq_class, 4> mid, back;
        for (std::size_t i = 0; i < 4; ++i)
            mid[i] = eval_at(alpha.images[i], pt);
        for (std::size_t i = 0; i < 4; ++i)
            back[i] = eval_at(alpha_inv.images[i], mid);
        for (std::size_t i = 0; i < 4; ++i) CHECK(back[i] == pt[i]);
    }
}

TEST_CASE("alpha chain flattening stays over the localization") {
    Chain c = alpha_chain(3);
    PolyMap fwd = flatten(c);
    CHECK(is_integral(fwd, *affine4()));
    // intermediate prefix maps genuinely use x-denominators
    Chain prefix{c.ring, {c.moves.begin(), c.moves.end() - 2}};
    CHECK_FALSE(is_integral(flatten(prefix), *affine4()));
}
