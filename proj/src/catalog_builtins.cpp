#include "spinc8/bundles.hpp"
#include "spinc8/catalog.hpp"

#include <algorithm>

namespace spinc8::catalog {

namespace {

struct Builder {
    ManifoldModel M;

    explicit Builder(std::string name) {
        M.name = std::move(name);
        M.groups[0] = {1, {}, {"1"}, false};
    }

    void group(int deg, int free_rank, std::vector<std::string> names,
               std::vector<Int> torsion = {}, bool partial = false) {
        GroupStructure g;
        g.free_rank = free_rank;
        g.torsion = std::move(torsion);
        g.gen_names = std::move(names);
        g.partial = partial;
        M.groups[deg] = g;
    }

    void mod2(int deg, int dim, Mat2 reduction) {
        M.mod2_dim[deg] = dim;
        M.rho2_map[deg] = std::move(reduction);
    }

    /// torsion-free convenience: F2 dims equal free ranks, identity reduction
    void auto_mod2() {
        for (int d = 0; d <= 8; d += 2) {
            int n = M.groups[d].free_rank;
            if (!M.groups[d].torsion.empty())
                throw data_error("auto_mod2 requires torsion-free groups");
            Mat2 m(n, std::vector<std::uint8_t>(n, 0));
            for (int i = 0; i < n; ++i) m[i][i] = 1;
            M.mod2_dim[d] = n;
            M.rho2_map[d] = std::move(m);
        }
    }

    void cup_entry(int j, int a, int k, int b, std::vector<Int> coords) {
        auto& table = M.cup_table.entries[{j, k}];
        if (table.empty()) {
            table.resize(M.basis_count(j));
            for (auto& row : table) row.resize(M.basis_count(k), M.zero(j + k));
        }
        table.at(a).at(b) = M.make_class(j + k, std::move(coords));
    }

    void cup2_entry(int j, int a, int k, int b, std::vector<std::uint8_t> bits) {
        auto& table = M.cup2_table.entries[{j, k}];
        if (table.empty()) {
            table.resize(M.mod2_dim[j]);
            for (auto& row : table) row.resize(M.mod2_dim[k], M.zero2(j + k));
        }
        Mod2Class c = M.zero2(j + k);
        c.bits = std::move(bits);
        table.at(a).at(b) = c;
    }

    void tangent(std::vector<Int> c, std::vector<Int> p1, std::vector<Int> p2,
                 std::vector<Int> e, Int chi, std::optional<Int> signature) {
        M.tangent.c = M.make_class(2, std::move(c));
        M.tangent.p1_tau = M.make_class(4, std::move(p1));
        M.tangent.p2_tau = M.make_class(8, std::move(p2));
        M.tangent.e_tau = M.make_class(8, std::move(e));
        M.tangent.chi = std::move(chi);
        M.tangent.signature = std::move(signature);
    }

    void note(const std::string& field, const std::string& text) { M.provenance[field] = text; }

    ManifoldModel finish(bool derive_cup2_from_rho2) {
        // symmetric completion of the integral table
        auto pending = M.cup_table.entries;
        for (const auto& [jk, table] : pending) {
            auto [j, k] = jk;
            if (M.cup_table.entries.count({k, j})) continue;
            std::vector<std::vector<IntClass>> t(M.basis_count(k));
            for (int b = 0; b < M.basis_count(k); ++b) {
                t[b].resize(M.basis_count(j), M.zero(j + k));
                for (int a = 0; a < M.basis_count(j); ++a) t[b][a] = table[a][b];
            }
            M.cup_table.entries[{k, j}] = t;
        }

        if (derive_cup2_from_rho2) {
            for (const auto& [jk, table] : M.cup_table.entries) {
                std::vector<std::vector<Mod2Class>> t2(table.size());
                for (std::size_t a = 0; a < table.size(); ++a) {
                    t2[a].reserve(table[a].size());
                    for (const auto& c : table[a]) t2[a].push_back(rho2(M, c));
                }
                M.cup2_table.entries[jk] = t2;
            }
        } else {
            auto pending2 = M.cup2_table.entries;
            for (const auto& [jk, table] : pending2) {
                auto [j, k] = jk;
                if (M.cup2_table.entries.count({k, j})) continue;
                std::vector<std::vector<Mod2Class>> t(M.mod2_dim[k]);
                for (int b = 0; b < M.mod2_dim[k]; ++b) {
                    t[b].resize(M.mod2_dim[j], M.zero2(j + k));
                    for (int a = 0; a < M.mod2_dim[j]; ++a) t[b][a] = table[a][b];
                }
                M.cup2_table.entries[{k, j}] = t;
            }
        }

        M.tangent.w2_M = rho2(M, M.tangent.c);
        M.tangent.q1_tau_c = q1_from_lift(M, M.tangent.p1_tau, M.tangent.c).canonical;

        CheckReport audit = validate_ring(M);
        if (!audit.passed())
            throw data_error(M.name + ": internal ring audit failed:\n" + render_text(audit));
        validate_tangent(M);
        return M;
    }
};

Mat2 rows(std::initializer_list<std::vector<std::uint8_t>> r) { return Mat2(r); }

ManifoldModel build_S8() {
    Builder b("S8");
    b.group(8, 1, {"g8"});
    b.auto_mod2();
    b.M.sq2_table.deg2 = Mat2{};
    b.M.sq2_table.deg4 = Mat2{};
    b.M.fundamental = {Int(1)};
    b.tangent({}, {}, {Int(0)}, {Int(2)}, 2, 0);
    b.note("tangent", "stably trivial; e[M] = chi = 2");
    return b.finish(true);
}

ManifoldModel build_HP2() {
    Builder b("HP2");
    b.group(4, 1, {"a"});
    b.group(8, 1, {"g8"});
    b.auto_mod2();
    b.cup_entry(4, 0, 4, 0, {Int(1)});  // a^2 = g8
    b.M.sq2_table.deg2 = Mat2{std::vector<std::uint8_t>{}};  // one empty row: H^2 = 0
    b.M.sq2_table.deg4 = Mat2{};                              // H^6 = 0
    b.M.fundamental = {Int(1)};
    // p1 = 2a, p2 = 7a^2 solve Ahat[M] = 0 and (7 p2 - p1^2)[M] = 45
    b.tangent({}, {Int(2)}, {Int(7)}, {Int(3)}, 3, 1);
    b.note("tangent", "p1, p2 from Ahat = 0 (spin, PSC) and signature 1");
    return b.finish(true);
}

ManifoldModel build_CP4() {
    Builder b("CP4");
    b.group(2, 1, {"x"});
    b.group(4, 1, {"x2"});
    b.group(6, 1, {"x3"});
    b.group(8, 1, {"x4"});
    b.auto_mod2();
    b.cup_entry(2, 0, 2, 0, {Int(1)});
    b.cup_entry(2, 0, 4, 0, {Int(1)});
    b.cup_entry(2, 0, 6, 0, {Int(1)});
    b.cup_entry(4, 0, 4, 0, {Int(1)});
    // Sq2 x^k = k x^{k+1} on the truncated polynomial ring
    b.M.sq2_table.deg2 = rows({{1}});
    b.M.sq2_table.deg4 = rows({{0}});
    b.M.fundamental = {Int(1)};
    // c(tau) = (1+x)^5: c1 = 5x, p1 = 5x^2, p2 = 10x^4, e = 5x^4
    b.tangent({Int(5)}, {Int(5)}, {Int(10)}, {Int(5)}, 5, 1);
    b.note("tangent", "binomial expansion of (1+x)^5; c = 5x");
    return b.finish(true);
}

ManifoldModel build_S2xS6() {
    Builder b("S2xS6");
    b.group(2, 1, {"s"});
    b.group(6, 1, {"t"});
    b.group(8, 1, {"g8"});
    b.auto_mod2();
    b.cup_entry(2, 0, 6, 0, {Int(1)});
    b.M.sq2_table.deg2 = Mat2{};                              // H^4 = 0
    b.M.sq2_table.deg4 = Mat2{std::vector<std::uint8_t>{}};   // one target row, no sources
    b.M.fundamental = {Int(1)};
    b.tangent({Int(0)}, {}, {Int(0)}, {Int(4)}, 4, 0);
    b.note("tangent", "product of stably trivial factors; chi = 4");
    return b.finish(true);
}

ManifoldModel build_S4xS4() {
    Builder b("S4xS4");
    b.group(4, 2, {"x", "y"});
    b.group(8, 1, {"g8"});
    b.auto_mod2();
    b.cup_entry(4, 0, 4, 0, {Int(0)});
    b.cup_entry(4, 0, 4, 1, {Int(1)});
    b.cup_entry(4, 1, 4, 0, {Int(1)});
    b.cup_entry(4, 1, 4, 1, {Int(0)});
    b.M.sq2_table.deg2 = Mat2{std::vector<std::uint8_t>{}, std::vector<std::uint8_t>{}};
    b.M.sq2_table.deg4 = Mat2{};        // H^6 = 0
    b.M.fundamental = {Int(1)};
    b.tangent({}, {Int(0), Int(0)}, {Int(0)}, {Int(4)}, 4, 0);
    return b.finish(true);
}

ManifoldModel build_Gr24() {
    Builder b("Gr24");
    b.group(2, 1, {"s1"});
    b.group(4, 2, {"s2", "s11"});
    b.group(6, 1, {"s21"});
    b.group(8, 1, {"s22"});
    b.auto_mod2();
    // Pieri products in the 2x2 box
    b.cup_entry(2, 0, 2, 0, {Int(1), Int(1)});         // s1^2 = s2 + s11
    b.cup_entry(2, 0, 4, 0, {Int(1)});                 // s1 s2 = s21
    b.cup_entry(2, 0, 4, 1, {Int(1)});                 // s1 s11 = s21
    b.cup_entry(2, 0, 6, 0, {Int(1)});                 // s1 s21 = s22
    b.cup_entry(4, 0, 4, 0, {Int(1)});                 // s2^2 = s22
    b.cup_entry(4, 0, 4, 1, {Int(0)});                 // s2 s11 = 0
    b.cup_entry(4, 1, 4, 0, {Int(0)});
    b.cup_entry(4, 1, 4, 1, {Int(1)});                 // s11^2 = s22
    b.M.sq2_table.deg2 = rows({{1}, {1}});             // Sq2 s1 = s2 + s11
    b.M.sq2_table.deg4 = rows({{1, 1}});               // Sq2 s2 = Sq2 s11 = s21
    b.M.fundamental = {Int(1)};
    // tau = Hom(S,Q): c = 0 (spin), p1 = 2(s2+s11), p2 = 14 s22, e = 6 s22
    b.tangent({Int(0)}, {Int(2), Int(2)}, {Int(14)}, {Int(6)}, 6, 2);
    b.note("tangent", "tautological sequence and Pieri products; equals the quadric V2");
    return b.finish(true);
}

ManifoldModel build_V6() {
    Builder b("V6");
    b.group(2, 1, {"a"});
    b.group(4, 1, {"a2"}, {}, /*partial=*/true);  // stored subspace Z a^2 of the middle
    b.group(6, 1, {"bb"});                        // a^3 = 6 bb
    b.group(8, 1, {"g8"});                        // a^4 = 6 g8
    b.auto_mod2();
    b.cup_entry(2, 0, 2, 0, {Int(1)});
    b.cup_entry(2, 0, 4, 0, {Int(6)});
    b.cup_entry(2, 0, 6, 0, {Int(1)});
    b.cup_entry(4, 0, 4, 0, {Int(6)});
    b.M.sq2_table.deg2 = rows({{1}});   // Sq2 rho(a) = rho(a^2)
    b.M.sq2_table.deg4 = rows({{0}});   // Sq2 rho(a^2) = 0 (Cartan)
    b.M.fundamental = {Int(1)};
    // c(tau) = (1+a)^6 (1+6a)^{-1}: c1 = 0, c2 = 15a^2, c3 = -70a^3, c4 = 435a^4
    // p1 = -30a^2, p2 = 1095a^4 = 6570 g8, e = 2610 g8 = chi
    b.tangent({Int(0)}, {Int(-30)}, {Int(6570)}, {Int(2610)}, 2610, 902);
    b.note("tangent", "power-series expansion of (1+a)^6/(1+6a); sextic fourfold");
    b.note("groups.4", "partial: only the hyperplane-power subspace of the middle is stored");
    return b.finish(true);
}

ManifoldModel build_G2SO4() {
    Builder b("G2SO4");
    b.group(4, 1, {"a"});
    b.group(6, 0, {"t"}, {Int(2)});
    b.group(8, 1, {"g8"});
    b.mod2(0, 1, rows({{1}}));
    b.mod2(2, 1, Mat2{std::vector<std::uint8_t>{}});  // u2 is not a reduction
    b.mod2(4, 1, rows({{1}}));
    b.mod2(6, 1, rows({{1}}));
    b.mod2(8, 1, rows({{1}}));
    b.cup_entry(4, 0, 4, 0, {Int(1)});
    b.cup2_entry(2, 0, 2, 0, {1});  // u2^2 = rho(a)
    b.cup2_entry(2, 0, 4, 0, {1});  // u2 rho(a) = rho(t)
    b.cup2_entry(2, 0, 6, 0, {1});  // u2 rho(t) = top (mod-2 duality)
    b.cup2_entry(4, 0, 4, 0, {1});  // rho(a)^2 = top
    b.M.sq2_table.deg2 = rows({{1}});  // Sq2 u2 = u2^2
    b.M.sq2_table.deg4 = rows({{1}});  // Sq2 rho(a) = rho(t)
    b.M.fundamental = {Int(1)};
    b.tangent({}, {Int(2)}, {Int(7)}, {Int(3)}, 3, 1);
    b.note("source", "unverified-source: transcription assembled from chi = 3, "
                     "signature 1, Ahat = 0, duality and Bockstein consistency; "
                     "no desk-scale derivation oracle");
    return b.finish(false);
}

}  // namespace

std::vector<std::string> builtin_names() {
    return {"S8", "HP2", "CP4", "S2xS6", "S4xS4", "CP2xCP2", "Gr24", "V6", "G2SO4"};
}

CatalogEntry builtin(const std::string& name) {
    CatalogEntry entry;
    if (name == "S8") {
        entry.model = build_S8();
        entry.expected = {
            {"complex_structure(tangent, 0, 0)", "fail (e != 0)", "derived"},
            {"spinc6/spinc5/spinc4 on tangent", "fail (e != 0)", "derived"},
        };
    } else if (name == "HP2") {
        entry.model = build_HP2();
        entry.expected = {
            {"halpha_structure(tangent, 0, k*a)", "k = 1, 9 (mod 24)", "paper"},
            {"complex_structure(tangent, 0, 0)", "fail at parity, b holds", "paper"},
            {"hlambda_on_real(tangent, 0)", "fail at congruence b", "paper"},
            {"three_dim_bundle_exists(0, k*a)", "k = 0, 1, 9, 16 (mod 24)", "derived"},
            {"hlambda_line_exists(0, k*a)", "k = 0, 8, 15, 23 (mod 24)", "derived"},
        };
    } else if (name == "CP4") {
        entry.model = build_CP4();
        entry.expected = {
            {"complex_structure(tangent, 5x, 10x3)", "pass", "derived"},
            {"chern_realizable_closed(5x, 10x2, 10x3, 5x4)", "pass", "derived"},
        };
    } else if (name == "S2xS6") {
        entry.model = build_S2xS6();
    } else if (name == "S4xS4") {
        entry.model = build_S4xS4();
    } else if (name == "CP2xCP2") {
        entry.model = kunneth_product(fourfold_CP2("x"), fourfold_CP2("y"));
        entry.model.name = "CP2xCP2";
        entry.expected = {
            {"spinc3_reduction(tangent, c, u)", "fail (q1 odd, p2 != 0)", "derived"},
        };
    } else if (name == "Gr24") {
        entry.model = build_Gr24();
        entry.expected = {
            {"halpha_structure(tangent, 0, k*(s2+s11))", "k = 1, 9 (mod 12)", "paper"},
            {"hlambda_on_complex(tangent chern data, l = s1)", "fail (c1 != 2l)", "paper"},
        };
    } else if (name == "V6") {
        entry.model = build_V6();
        entry.expected = {
            {"halpha_structure(tangent, 0, k*a2)", "k = 1 (mod 4)", "paper"},
        };
    } else if (name == "G2SO4") {
        entry.model = build_G2SO4();
        entry.unverified_source = true;
        entry.expected = {
            {"halpha_structure(tangent, 0, k*a)", "no k passes", "unverified-source"},
        };
    } else {
        throw error("unknown catalog entry '" + name + "'");
    }
    return entry;
}

}  // namespace spinc8::catalog
