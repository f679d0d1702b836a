#include "spinc8/catalog.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>

using namespace spinc8;
using oracles::Series;

TEST_CASE("HP2 tangent data solves the two defining equations") {
    // Ahat[M] = 0 and (7 p2 - p1^2)[M] = 45 * signature, a^2[M] = 1:
    // enumerate small integer solutions (alpha, beta) of 7 a^2 = 4 b,
    // 7 b - a^2 = 45; the positively oriented one is (2, 7).
    std::vector<std::pair<int, int>> sols;
    for (int alpha = -10; alpha <= 10; ++alpha)
        for (int beta = -100; beta <= 100; ++beta)
            if (7 * alpha * alpha == 4 * beta && 7 * beta - alpha * alpha == 45)
                sols.push_back({alpha, beta});
    REQUIRE(sols.size() == 2);  // +-2
    CHECK(sols[1] == std::pair<int, int>{2, 7});

    ManifoldModel M = catalog::builtin("HP2").model;
    CHECK(M.tangent.p1_tau == M.make_class(4, {Int(2)}));
    CHECK(M.tangent.p2_tau == M.make_class(8, {Int(7)}));
    CHECK(M.tangent.q1_tau_c == M.make_class(4, {Int(1)}));
    CHECK(evaluate(M, cup(M, M.basis_class(4, 0), M.basis_class(4, 0))) == 1);
}

TEST_CASE("CP4 tangent data equals the binomial expansion of (1+x)^5") {
    Series c = Series::linear(1).pow(5);
    CHECK(c.c[1] == 5);
    CHECK(c.c[2] == 10);
    CHECK(c.c[3] == 10);
    CHECK(c.c[4] == 5);
    auto p = oracles::pontrjagin_of(c);
    CHECK(p.p1 == 5);
    CHECK(p.p2 == 10);
    CHECK(p.e == 5);

    ManifoldModel M = catalog::builtin("CP4").model;
    CHECK(M.tangent.c == M.make_class(2, {Int(5)}));
    CHECK(M.tangent.p1_tau == M.make_class(4, {p.p1}));
    CHECK(M.tangent.p2_tau == M.make_class(8, {p.p2}));
    CHECK(M.tangent.e_tau == M.make_class(8, {p.e}));
    CHECK(M.tangent.chi == 5);
    // q1(tau; 5x) = (5 - 25)/2 = -10
    CHECK(M.tangent.q1_tau_c == M.make_class(4, {Int(-10)}));
}

TEST_CASE("V6 tangent data equals the power-series oracle") {
    // c(tau V6) = (1+a)^6 (1+6a)^{-1}, a^4[M] = 6
    Series c = Series::linear(1).pow(6) * Series::linear(6).inverse();
    CHECK(c.c[1] == 0);
    CHECK(c.c[2] == 15);
    CHECK(c.c[3] == -70);
    CHECK(c.c[4] == 435);
    auto p = oracles::pontrjagin_of(c);
    CHECK(p.p1 == -30);
    CHECK(p.p2 == 1095);
    Int deg = 6;  // a^4 evaluates to 6
    CHECK(p.e * deg == 2610);

    ManifoldModel M = catalog::builtin("V6").model;
    CHECK(M.tangent.chi == 2610);
    // catalog coordinates: a^2-line in degree 4, dual generator in 6 and 8
    CHECK(M.tangent.p1_tau == M.make_class(4, {p.p1}));
    CHECK(M.tangent.p2_tau == M.make_class(8, {p.p2 * deg}));
    CHECK(M.tangent.e_tau == M.make_class(8, {p.e * deg}));
    CHECK(M.groups[4].partial);
    // a . a^3 = a^4 = 6 g8 and the degree-6 generator is unimodular against a
    IntClass a = M.basis_class(2, 0);
    IntClass a3 = cup(M, a, cup(M, a, a));
    CHECK(evaluate(M, cup(M, a, a3)) == 6);
    CHECK(evaluate(M, cup(M, a, M.basis_class(6, 0))) == 1);
}

TEST_CASE("Gr24 structure constants equal the Schur-polynomial oracle") {
    ManifoldModel M = catalog::builtin("Gr24").model;
    // partitions by catalog basis position
    auto part = [](int deg, int idx) -> std::pair<int, int> {
        if (deg == 2) return {1, 0};
        if (deg == 4) return idx == 0 ? std::pair<int, int>{2, 0} : std::pair<int, int>{1, 1};
        if (deg == 6) return {2, 1};
        return {2, 2};
    };
    auto index_of = [](std::pair<int, int> lam) {
        if (lam == std::pair<int, int>{1, 0}) return std::pair<int, int>{2, 0};
        if (lam == std::pair<int, int>{2, 0}) return std::pair<int, int>{4, 0};
        if (lam == std::pair<int, int>{1, 1}) return std::pair<int, int>{4, 1};
        if (lam == std::pair<int, int>{2, 1}) return std::pair<int, int>{6, 0};
        return std::pair<int, int>{8, 0};
    };
    for (int dj : {2, 4})
        for (int dk : {2, 4, 6}) {
            if (dj + dk > 8 || dj > dk) continue;
            for (int a = 0; a < M.basis_count(dj); ++a)
                for (int b = 0; b < M.basis_count(dk); ++b) {
                    auto prod = oracles::box_product(part(dj, a), part(dk, b));
                    IntClass expect = M.zero(dj + dk);
                    for (const auto& [nu, coeff] : prod) {
                        auto [deg, idx] = index_of(nu);
                        REQUIRE(deg == dj + dk);
                        expect = add(M, expect, scale(M, coeff, M.basis_class(deg, idx)));
                    }
                    CHECK(cup(M, M.basis_class(dj, a), M.basis_class(dk, b)) == expect);
                }
        }
}

TEST_CASE("Gr24 tangent classes from two independent oracles") {
    ManifoldModel M = catalog::builtin("Gr24").model;
    IntClass s1 = M.basis_class(2, 0), s2 = M.basis_class(4, 0), s11 = M.basis_class(4, 1);

    SUBCASE("rank-2 tensor rank-2 Chern formulas with S* and Q data") {
        // c(A (x) B) for rank-2 A, B: c1 = 2a + 2b, c2 = a^2 + 3ab + b^2 + 2A2 + 2B2,
        // c3 = (a+b)(ab + 2A2 + 2B2), c4 = (A2-B2)^2 + ab(A2+B2) + a^2 B2 + b^2 A2
        IntClass a = s1, b = s1, A2 = s11, B2 = s2;
        IntClass c1 = add(M, scale(M, 2, a), scale(M, 2, b));
        IntClass ab = cup(M, a, b);
        IntClass c2 = add(M, add(M, cup(M, a, a), scale(M, 3, ab)), cup(M, b, b));
        c2 = add(M, c2, add(M, scale(M, 2, A2), scale(M, 2, B2)));
        IntClass inner = add(M, ab, add(M, scale(M, 2, A2), scale(M, 2, B2)));
        IntClass c3 = cup(M, add(M, a, b), inner);
        IntClass diff = sub(M, A2, B2);
        IntClass c4 = cup(M, diff, diff);
        c4 = add(M, c4, cup(M, ab, add(M, A2, B2)));
        c4 = add(M, c4, cup(M, cup(M, a, a), B2));
        c4 = add(M, c4, cup(M, cup(M, b, b), A2));

        IntClass p1 = sub(M, cup(M, c1, c1), scale(M, 2, c2));
        IntClass p2 = add(M, sub(M, cup(M, c2, c2), scale(M, 2, cup(M, c1, c3))),
                          scale(M, 2, c4));
        CHECK(p1 == M.tangent.p1_tau);
        CHECK(p2 == M.tangent.p2_tau);
        CHECK(c4 == M.tangent.e_tau);
        CHECK(evaluate(M, c4) == 6);
    }
    SUBCASE("hypersurface route: the quadric V2 with a^4[M] = 2") {
        Series c = Series::linear(1).pow(6) * Series::linear(2).inverse();
        CHECK(c.c[1] == 4);
        CHECK(c.c[2] == 7);
        CHECK(c.c[3] == 6);
        CHECK(c.c[4] == 3);
        auto p = oracles::pontrjagin_of(c);
        // a = s1, a^2 = s2 + s11, a^4 evaluates to 2
        IntClass asq = cup(M, s1, s1);
        CHECK(scale(M, p.p1, asq) == M.tangent.p1_tau);
        CHECK(M.make_class(8, {p.p2 * 2}) == M.tangent.p2_tau);
        CHECK(M.make_class(8, {p.e * 2}) == M.tangent.e_tau);
        CHECK(s2 == s2);
        CHECK(s11 == s11);
    }
}

TEST_CASE("kunneth product of two CP2 factors") {
    ManifoldModel M = catalog::kunneth_product(catalog::fourfold_CP2("x"), catalog::fourfold_CP2("y"));
    CHECK(M.groups[2].free_rank == 2);
    CHECK(M.groups[4].free_rank == 3);
    CHECK(M.tangent.chi == 9);
    REQUIRE(M.tangent.signature.has_value());
    CHECK(*M.tangent.signature == 1);

    int ix = M.gen_index(2, "x"), iy = M.gen_index(2, "y");
    IntClass x = M.basis_class(2, ix), y = M.basis_class(2, iy);
    // x^2 y^2 evaluates to 1, x^3 = 0
    CHECK(evaluate(M, cup(M, cup(M, x, x), cup(M, y, y))) == 1);
    CHECK(cup(M, cup(M, x, x), x).is_zero());
    // p1 = 3x^2 + 3y^2, e[M] = 9
    IntClass p1_expect = add(M, scale(M, 3, cup(M, x, x)), scale(M, 3, cup(M, y, y)));
    CHECK(M.tangent.p1_tau == p1_expect);
    CHECK(evaluate(M, M.tangent.e_tau) == 9);
    // q1(tau; c) for c = 3x + 3y
    IntClass c = M.tangent.c;
    IntClass q1_expect = q1_from_lift(M, M.tangent.p1_tau, c).canonical;
    CHECK(M.tangent.q1_tau_c == q1_expect);
    CHECK(validate_ring(M).passed());
}

TEST_CASE("kunneth product S4 x S4 matches the direct catalog entry") {
    ManifoldModel prod = catalog::kunneth_product(catalog::fourfold_S4(), catalog::fourfold_S4());
    CHECK(prod.groups[4].free_rank == 2);
    CHECK(prod.tangent.chi == 4);
    CHECK(evaluate(prod, prod.tangent.e_tau) == 4);
    ManifoldModel direct = catalog::builtin("S4xS4").model;
    CHECK(direct.tangent.chi == 4);
    // same intersection lattice in the middle: two hyperbolic generators
    IntClass x = prod.basis_class(4, 0), y = prod.basis_class(4, prod.groups[4].free_rank - 1);
    CHECK(evaluate(prod, cup(prod, x, y)) == 1);
    CHECK(cup(prod, x, x).is_zero());
}

TEST_CASE("kunneth rejects inconsistent factor data") {
    auto bad = catalog::fourfold_CP2();
    bad.w2_lift = {Int(0)};  // not characteristic for the odd form
    CHECK_THROWS_AS(catalog::kunneth_product(bad, catalog::fourfold_S4()), data_error);
}

TEST_CASE("model files round-trip") {
    for (const char* name : {"HP2", "CP4", "Gr24", "V6", "G2SO4", "CP2xCP2"}) {
        ManifoldModel M = catalog::builtin(name).model;
        std::string path = std::string("roundtrip_") + name + ".json";
        save_model(M, path);
        ManifoldModel back = load_model(path);
        CHECK(back == M);
        std::remove(path.c_str());
    }
}

TEST_CASE("loader rejects corrupted files") {
    ManifoldModel M = catalog::builtin("HP2").model;

    SUBCASE("unknown top-level key") {
        std::string text = serialize_model(M);
        text.insert(text.rfind('}'), ", \"surprise\": 1");
        CHECK_THROWS_AS(parse_model(text), parse_error);
    }
    SUBCASE("rho2(c) != w2 is rejected") {
        ManifoldModel bad = catalog::builtin("CP4").model;
        bad.tangent.w2_M.bits[0] ^= 1;
        save_model(bad, "bad_w2.json");
        CHECK_THROWS_AS(load_model("bad_w2.json"), data_error);
        std::remove("bad_w2.json");
    }
    SUBCASE("broken degree-4 square is rejected by the ring audit") {
        ManifoldModel bad = catalog::builtin("G2SO4").model;
        bad.cup_table.entries[{4, 4}][0][0] = bad.zero(8);  // a^2 = 0, cup2 says otherwise
        save_model(bad, "bad_ring.json");
        CHECK_THROWS_AS(load_model("bad_ring.json"), error);
        std::remove("bad_ring.json");
    }
}

TEST_CASE("unknown catalog name throws") {
    CHECK_THROWS_AS(catalog::builtin("T8"), error);
}

TEST_CASE("signature consistency holds for every entry that declares one") {
    for (const auto& name : catalog::builtin_names()) {
        ManifoldModel M = catalog::builtin(name).model;
        if (!M.tangent.signature) continue;
        Int lhs = evaluate(
            M, sub(M, scale(M, 7, M.tangent.p2_tau), cup(M, M.tangent.p1_tau, M.tangent.p1_tau)));
        CHECK(lhs == 45 * *M.tangent.signature);
    }
}
