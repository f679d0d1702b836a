#include "spinc8/bundles.hpp"
#include "spinc8/catalog.hpp"

#include "oracles.hpp"
#include "test_models.hpp"

#include <doctest.h>

#include <random>

using namespace spinc8;

TEST_CASE("q1_from_lift basics") {
    ManifoldModel M = catalog::builtin("CP4").model;
    IntClass x = M.basis_class(2, 0);

    SUBCASE("zero data") {
        auto q = q1_from_lift(M, M.zero(4), M.zero(2));
        CHECK(q.canonical == M.zero(4));
        CHECK_FALSE(q.ambiguous);
    }
    SUBCASE("tangent of CP4 at the complex lift") {
        auto q = q1_from_lift(M, M.tangent.p1_tau, scale(M, 5, x));
        CHECK(q.canonical == M.make_class(4, {Int(-10)}));
    }
    SUBCASE("odd data is rejected") {
        // p1 - l^2 = 5x^2 is not halvable
        CHECK_THROWS_AS(q1_from_lift(M, M.tangent.p1_tau, M.zero(2)), data_error);
    }
    SUBCASE("HP2 tangent at lift zero") {
        ManifoldModel H = catalog::builtin("HP2").model;
        auto q = q1_from_lift(H, H.tangent.p1_tau, H.zero(2));
        CHECK(q.canonical == H.make_class(4, {Int(1)}));
    }
}

TEST_CASE("q1 halving ambiguity over even torsion") {
    ManifoldModel M = testmodels::torsion_model();
    // p1 = 2t in Z + Z/4: halvings are t and 3t
    auto q = q1_from_lift(M, M.make_class(4, {Int(0), Int(2)}), M.zero(2));
    CHECK(q.ambiguous);
    REQUIRE(q.all.size() == 2);
    CHECK(q.all[0].torsion[0] == 1);
    CHECK(q.all[1].torsion[0] == 3);
    CHECK(q.canonical == q.all[0]);
    for (const auto& h : q.all)
        CHECK(scale(M, 2, h) == M.make_class(4, {Int(0), Int(2)}));

    // candidate filtering matches w4
    RealBundleData xi = trivial_real(M);
    xi.p1 = M.make_class(4, {Int(0), Int(2)});
    xi.w4 = rho2(M, q.all[0]);
    auto cands = q1_candidates(M, xi, M.zero(2));
    CHECK(cands.size() == 2);  // both halvings reduce to the same w4 here
}

TEST_CASE("rebase_lift") {
    ManifoldModel M = catalog::builtin("CP4").model;
    IntClass x = M.basis_class(2, 0);
    IntClass q1 = M.make_class(4, {Int(-10)});
    IntClass l = scale(M, 5, x);

    SUBCASE("m = 0 is the identity") {
        CHECK(rebase_lift(M, q1, l, M.zero(2)) == q1);
    }
    SUBCASE("rebase by m then -m returns") {
        IntClass m = scale(M, 3, x);
        IntClass once = rebase_lift(M, q1, l, m);
        // moving back starts from lift l + 2m
        IntClass lift2 = add(M, l, scale(M, 2, m));
        CHECK(rebase_lift(M, once, lift2, scale(M, -1, m)) == q1);
    }
    SUBCASE("agreement with a fresh halving at the rebased lift") {
        IntClass m = x;
        IntClass moved = rebase_lift(M, q1, l, m);
        CHECK(moved == M.make_class(4, {Int(-22)}));
        auto direct = q1_from_lift(M, M.tangent.p1_tau, add(M, l, scale(M, 2, m)));
        CHECK(direct.canonical == moved);
    }
}

TEST_CASE("realify against the conjugate-sum route") {
    // p1 = -c2(z + conj z), p2 = c4(z + conj z); the closed forms must agree
    ManifoldModel M = catalog::builtin("CP2xCP2").model;
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> small(-3, 3);
    for (int round = 0; round < 25; ++round) {
        ComplexBundleData z = trivial_complex(M, 4);
        auto rnd = [&](int deg) {
            IntClass c = M.zero(deg);
            for (auto& v : c.free) v = small(rng);
            return c;
        };
        z.c1 = rnd(2);
        z.c2 = rnd(4);
        z.c3 = rnd(6);
        z.c4 = rnd(8);

        ComplexBundleData conj = z;
        conj.c1 = scale(M, -1, z.c1);
        conj.c3 = scale(M, -1, z.c3);
        ComplexBundleData sum = whitney_sum(M, z, conj);
        CHECK(sum.c1.is_zero());
        CHECK(sum.c3.is_zero());

        RealBundleData xi = realify(M, z);
        CHECK(xi.p1 == scale(M, -1, sum.c2));
        CHECK(xi.p2 == sum.c4);
        CHECK(xi.w2 == rho2(M, z.c1));
        CHECK(*xi.e == z.c4);
    }
}

TEST_CASE("realify of simple sums") {
    ManifoldModel M = catalog::builtin("CP4").model;
    SUBCASE("trivial C^4") {
        RealBundleData xi = realify(M, trivial_complex(M, 4));
        CHECK(xi.p1.is_zero());
        CHECK(xi.p2.is_zero());
        CHECK(xi.e->is_zero());
        CHECK(xi.w2.is_zero());
    }
    SUBCASE("line bundle plus trivial") {
        IntClass l = M.basis_class(2, 0);
        ComplexBundleData z = whitney_sum(M, complex_line(M, l), trivial_complex(M, 3));
        RealBundleData xi = realify(M, z);
        CHECK(xi.p1 == cup(M, l, l));
        CHECK(xi.p2.is_zero());
        CHECK(xi.e->is_zero());
    }
    SUBCASE("CP4 tangent as a complex bundle") {
        ComplexBundleData z = trivial_complex(M, 4);
        z.c1 = M.make_class(2, {Int(5)});
        z.c2 = M.make_class(4, {Int(10)});
        z.c3 = M.make_class(6, {Int(10)});
        z.c4 = M.make_class(8, {Int(5)});
        RealBundleData xi = realify(M, z);
        CHECK(xi.p1 == M.tangent.p1_tau);
        CHECK(xi.p2 == M.tangent.p2_tau);
        CHECK(evaluate(M, *xi.e) == 5);  // chi
    }
}

TEST_CASE("su adjoint bundle against the line-splitting oracle") {
    // su(mu1 + mu2 + mu3) = iR^2 + conj(mu1)mu2 + conj(mu1)mu3 + conj(mu2)mu3
    ManifoldModel M = catalog::builtin("CP2xCP2").model;
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> small(-2, 2);
    for (int round = 0; round < 25; ++round) {
        IntClass m1 = M.zero(2), m2 = M.zero(2), m3 = M.zero(2);
        for (auto* m : {&m1, &m2, &m3})
            for (auto& v : m->free) v = small(rng);

        // elementary symmetric Chern data of the rank-3 sum
        ComplexBundleData z = whitney_sum(
            M, whitney_sum(M, complex_line(M, m1), complex_line(M, m2)), complex_line(M, m3));
        RealBundleData xi = su_adjoint_bundle(M, z);

        // oracle: three real 2-planes with Euler classes m_j - m_i
        IntClass d12 = sub(M, m2, m1), d13 = sub(M, m3, m1), d23 = sub(M, m3, m2);
        IntClass p1 = add(M, add(M, cup(M, d12, d12), cup(M, d13, d13)), cup(M, d23, d23));
        IntClass p2 = add(M, add(M, cup(M, cup(M, d12, d12), cup(M, d13, d13)),
                                 cup(M, cup(M, d12, d12), cup(M, d23, d23))),
                          cup(M, cup(M, d13, d13), cup(M, d23, d23)));
        CHECK(xi.p1 == p1);
        CHECK(xi.p2 == p2);
        CHECK(xi.e->is_zero());
        CHECK(xi.w2.is_zero());
        // w6 of the split model: top Stiefel-Whitney of the three planes
        Mod2Class w6 = rho2(M, cup(M, cup(M, d12, d13), d23));
        CHECK(xi.w6 == w6);
        Mod2Class w4 = rho2(M, add(M, add(M, cup(M, d12, d13), cup(M, d12, d23)),
                                   cup(M, d13, d23)));
        CHECK(xi.w4 == w4);
    }
}

TEST_CASE("su adjoint output identities") {
    ManifoldModel M = catalog::builtin("Gr24").model;
    SUBCASE("trivial input gives zero data") {
        RealBundleData xi = su_adjoint_bundle(M, trivial_complex(M, 3));
        CHECK(xi.p1.is_zero());
        CHECK(xi.p2.is_zero());
        CHECK(xi.e->is_zero());
    }
    SUBCASE("p2 = q1^2 exactly, on arbitrary data") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<int> small(-4, 4);
        for (int round = 0; round < 20; ++round) {
            ComplexBundleData z = trivial_complex(M, 3);
            for (auto& v : z.c1.free) v = small(rng);
            for (auto& v : z.c2.free) v = small(rng);
            for (auto& v : z.c3.free) v = small(rng);
            RealBundleData xi = su_adjoint_bundle(M, z);
            IntClass q1 = q1_from_lift(M, xi.p1, M.zero(2)).canonical;
            CHECK(xi.p2 == cup(M, q1, q1));
            CHECK(xi.w2.is_zero());
            CHECK(xi.e->is_zero());
        }
    }
    SUBCASE("c1 = 0 specialization: q1 = -3u, p2 = 9u^2") {
        ComplexBundleData z = trivial_complex(M, 3);
        z.c2 = M.basis_class(4, 0);
        RealBundleData xi = su_adjoint_bundle(M, z);
        CHECK(xi.p1 == scale(M, -6, z.c2));
        CHECK(xi.p2 == scale(M, 9, cup(M, z.c2, z.c2)));
    }
}

TEST_CASE("spinc6_eta formulas") {
    ManifoldModel M = catalog::builtin("CP4").model;
    IntClass l = M.basis_class(2, 0);

    SUBCASE("the quaternionic plane H_lambda^2") {
        ComplexBundleData z = whitney_sum(M, h_lambda(M, l), h_lambda(M, l));
        CHECK(z.c1 == scale(M, 2, l));
        CHECK(z.c2 == cup(M, l, l));
        CHECK(z.c3.is_zero());
        CHECK(z.c4.is_zero());
        RealBundleData eta = spinc6_eta(M, z, l);
        IntClass q1 = q1_from_lift(M, eta.p1, l).canonical;
        CHECK(q1.is_zero());
        CHECK(eta.e->is_zero());
        CHECK(eta.p2.is_zero());
        CHECK(eta.dim == 6);
    }
    SUBCASE("l = 0 specialization") {
        ComplexBundleData z = trivial_complex(M, 4);
        z.c2 = M.basis_class(4, 0);
        z.c3 = scale(M, 2, M.basis_class(6, 0));
        z.c4 = scale(M, 3, M.basis_class(8, 0));
        RealBundleData eta = spinc6_eta(M, z, M.zero(2));
        CHECK(eta.p1 == scale(M, -2, z.c2));  // q1 = -c2
        CHECK(*eta.e == z.c3);
        IntClass expect_p2 = sub(M, cup(M, z.c2, z.c2), scale(M, 4, z.c4));
        CHECK(eta.p2 == expect_p2);
    }
    SUBCASE("c1 != 2l is rejected") {
        ComplexBundleData z = trivial_complex(M, 4);
        z.c1 = l;
        CHECK_THROWS_AS(spinc6_eta(M, z, l), data_error);
    }
    SUBCASE("rho2(q1) = w4 consistency") {
        for (int n = -2; n <= 2; ++n) {
            ComplexBundleData z = whitney_sum(M, h_lambda(M, l), h_lambda(M, l));
            z.c2 = add(M, z.c2, scale(M, 2 * n, M.basis_class(4, 0)));
            RealBundleData eta = spinc6_eta(M, z, l);
            IntClass q1 = q1_from_lift(M, eta.p1, l).canonical;
            CHECK(rho2(M, q1) == eta.w4);
        }
    }
}

TEST_CASE("spinc4_eta formulas") {
    ManifoldModel M = catalog::builtin("Gr24").model;
    IntClass u = M.basis_class(4, 0), v = M.basis_class(4, 1);

    RealBundleData same = spinc4_eta(M, u, u, M.zero(2));
    CHECK(same.e->is_zero());

    RealBundleData one = spinc4_eta(M, u, M.zero(4), M.zero(2));
    CHECK(one.p1 == scale(M, -2, u));  // q1 = -u
    CHECK(*one.e == u);

    RealBundleData ab = spinc4_eta(M, u, v, M.zero(2));
    RealBundleData ba = spinc4_eta(M, v, u, M.zero(2));
    CHECK(*ab.e == scale(M, -1, *ba.e));
    CHECK(ab.p1 == ba.p1);
    CHECK(ab.p2 == ba.p2);
}

TEST_CASE("spinc5_eta formulas") {
    ManifoldModel M = catalog::builtin("CP4").model;
    IntClass l = M.basis_class(2, 0);

    ComplexBundleData hl2 = whitney_sum(M, h_lambda(M, l), h_lambda(M, l));
    RealBundleData eta = spinc5_eta(M, hl2, l);
    CHECK(eta.dim == 5);
    CHECK_FALSE(eta.e.has_value());  // odd dimension carries no Euler class
    IntClass q1 = q1_from_lift(M, eta.p1, l).canonical;
    CHECK(q1.is_zero());
    CHECK(eta.p2.is_zero());

    ComplexBundleData z = trivial_complex(M, 4);
    z.c2 = scale(M, 2, M.basis_class(4, 0));
    z.c4 = scale(M, 5, M.basis_class(8, 0));
    RealBundleData e0 = spinc5_eta(M, z, M.zero(2));
    CHECK(e0.p1 == scale(M, -2, z.c2));
    CHECK(e0.p2 == sub(M, cup(M, z.c2, z.c2), scale(M, 4, z.c4)));
}

TEST_CASE("halpha_total satisfies its defining identities symbolically") {
    using oracles::SymPoly;
    SymPoly l = SymPoly::var(0), u = SymPoly::var(1), c2 = SymPoly::var(2), c4 = SymPoly::var(3);
    SymPoly lsq = l * l;
    SymPoly q1 = u * Int(2) - c2 + lsq * Int(2);
    SymPoly p2 = c4 * Int(2) + c2 * (c2 - u * Int(2) - lsq * Int(4)) + u * u * Int(6) +
                 u * lsq * Int(6) + lsq * lsq * Int(4);
    SymPoly e = c4 + c2 * u - lsq * u + u * u;
    CHECK((p2 - q1 * q1 - e * Int(2)).is_zero());
}

TEST_CASE("halpha_total on models") {
    ManifoldModel M = catalog::builtin("Gr24").model;
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> small(-3, 3);

    SUBCASE("u = 0, l = 0 reduces to realified quaternionic data") {
        IntClass c2 = M.basis_class(4, 0), c4 = scale(M, 2, M.basis_class(8, 0));
        RealBundleData xi = halpha_total(M, M.zero(4), c2, c4, M.zero(2));
        IntClass q1 = q1_from_lift(M, xi.p1, M.zero(2)).canonical;
        CHECK(q1 == scale(M, -1, c2));
        CHECK(xi.p2 == add(M, cup(M, c2, c2), scale(M, 2, c4)));
        CHECK(*xi.e == c4);
    }
    SUBCASE("p2 - q1^2 - 2e = 0 on random inputs") {
        for (int round = 0; round < 20; ++round) {
            IntClass u = M.zero(4), c2 = M.zero(4), c4 = M.zero(8), l = M.zero(2);
            for (auto& x : u.free) x = small(rng);
            for (auto& x : c2.free) x = small(rng);
            for (auto& x : c4.free) x = small(rng);
            for (auto& x : l.free) x = small(rng);
            RealBundleData xi = halpha_total(M, u, c2, c4, l);
            IntClass q1 = q1_from_lift(M, xi.p1, M.zero(2)).canonical;
            IntClass comb = sub(M, sub(M, xi.p2, cup(M, q1, q1)), scale(M, 2, *xi.e));
            CHECK(comb.is_zero());
            CHECK(xi.w2.is_zero());
        }
    }
}
