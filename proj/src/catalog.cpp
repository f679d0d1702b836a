#include "spinc8/catalog.hpp"

#include "spinc8/bundles.hpp"

#include <algorithm>

namespace spinc8::catalog {

FourfoldData fourfold_S4() {
    FourfoldData d;
    d.name = "S4";
    d.euler = 2;
    d.signature = 0;
    return d;
}

FourfoldData fourfold_CP2(const std::string& gen) {
    FourfoldData d;
    d.name = "CP2";
    d.gen_names = {gen};
    d.intersection = {{Int(1)}};
    d.p1 = 3;
    d.euler = 3;
    d.w2_lift = {Int(3)};  // c1 of the complex structure
    d.signature = 1;
    return d;
}

namespace {

void validate_fourfold(const FourfoldData& d) {
    int b2 = static_cast<int>(d.gen_names.size());
    if (static_cast<int>(d.intersection.size()) != b2)
        throw data_error(d.name + ": intersection matrix does not match b2");
    for (const auto& row : d.intersection)
        if (static_cast<int>(row.size()) != b2)
            throw data_error(d.name + ": intersection matrix not square");
    for (int i = 0; i < b2; ++i)
        for (int j = 0; j < b2; ++j)
            if (d.intersection[i][j] != d.intersection[j][i])
                throw data_error(d.name + ": intersection matrix not symmetric");
    if (static_cast<int>(d.w2_lift.size()) != b2)
        throw data_error(d.name + ": w2 lift has wrong length");
    if (d.euler != 2 + b2)
        throw data_error(d.name + ": euler characteristic must be 2 + b2");
    // characteristic-vector condition: Q(x,x) = Q(c,x) mod 2 for all basis x
    for (int i = 0; i < b2; ++i) {
        Int qx = d.intersection[i][i];
        Int cx = 0;
        for (int j = 0; j < b2; ++j) cx += d.w2_lift[j] * d.intersection[j][i];
        if (mod_reduce(qx - cx, 2) != 0)
            throw data_error(d.name + ": w2 lift is not characteristic for the form");
    }
    if (d.signature && b2 >= 1) {
        if (d.p1 != 3 * *d.signature)
            throw data_error(d.name + ": p1 != 3 * signature");
    }
}

Mat2 identity2(int n) {
    Mat2 m(n, std::vector<std::uint8_t>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

}  // namespace

ManifoldModel kunneth_product(const FourfoldData& A, const FourfoldData& B) {
    validate_fourfold(A);
    validate_fourfold(B);
    int ra = static_cast<int>(A.gen_names.size());
    int rb = static_cast<int>(B.gen_names.size());

    ManifoldModel M;
    M.name = A.name + "x" + B.name;

    // basis layout
    // degree 2: A generators, then B generators
    // degree 4: [gA] + [x_i y_j, i-major] + [gB]
    // degree 6: [gA y_j] + [x_i gB]
    // degree 8: [g8]
    auto gA_name = ra == 1 ? A.gen_names[0] + "2" : "gA";
    auto gB_name = rb == 1 ? B.gen_names[0] + "2" : "gB";

    M.groups[0] = {1, {}, {"1"}, false};
    {
        GroupStructure g;
        g.free_rank = ra + rb;
        g.gen_names = A.gen_names;
        g.gen_names.insert(g.gen_names.end(), B.gen_names.begin(), B.gen_names.end());
        M.groups[2] = g;
    }
    {
        GroupStructure g;
        g.free_rank = 1 + ra * rb + 1;
        g.gen_names.push_back(gA_name);
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < rb; ++j)
                g.gen_names.push_back(A.gen_names[i] + B.gen_names[j]);
        g.gen_names.push_back(gB_name);
        M.groups[4] = g;
    }
    {
        GroupStructure g;
        g.free_rank = rb + ra;
        for (int j = 0; j < rb; ++j) g.gen_names.push_back(gA_name + B.gen_names[j]);
        for (int i = 0; i < ra; ++i) g.gen_names.push_back(A.gen_names[i] + gB_name);
        M.groups[6] = g;
    }
    M.groups[8] = {1, {}, {"g8"}, false};

    for (int d = 0; d <= 8; d += 2) {
        M.mod2_dim[d] = M.groups[d].free_rank;
        M.rho2_map[d] = identity2(M.mod2_dim[d]);
    }

    int n2 = ra + rb, n4 = 2 + ra * rb;
    auto pair4 = [&](int i, int j) { return 1 + i * rb + j; };  // x_i y_j slot
    int gA4 = 0, gB4 = 1 + ra * rb;
    auto gAy6 = [&](int j) { return j; };
    auto xgB6 = [&](int i) { return rb + i; };

    auto cls = [&](int deg, std::vector<Int> coords) { return M.make_class(deg, std::move(coords)); };
    auto e4 = [&](int idx, const Int& c) {
        std::vector<Int> v(n4, Int(0));
        v[idx] = c;
        return v;
    };

    // degree 2 x degree 2
    {
        std::vector<std::vector<IntClass>> t(n2);
        for (int a = 0; a < n2; ++a) t[a].resize(n2, M.zero(4));
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n2; ++b) {
                std::vector<Int> v(n4, Int(0));
                if (a < ra && b < ra) v[gA4] = A.intersection[a][b];
                else if (a >= ra && b >= ra) v[gB4] = B.intersection[a - ra][b - ra];
                else if (a < ra) v[pair4(a, b - ra)] = 1;
                else v[pair4(b, a - ra)] = 1;
                t[a][b] = cls(4, v);
            }
        M.cup_table.entries[{2, 2}] = t;
    }
    // degree 2 x degree 4
    {
        std::vector<std::vector<IntClass>> t(n2);
        int n6 = ra + rb;
        for (int a = 0; a < n2; ++a) t[a].resize(n4, M.zero(6));
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n4; ++b) {
                std::vector<Int> v(n6, Int(0));
                if (b == gA4) {
                    if (a >= ra) v[gAy6(a - ra)] = 1;  // x-part of gA * y_j
                } else if (b == gB4) {
                    if (a < ra) v[xgB6(a)] = 1;
                } else {
                    int i = (b - 1) / rb, j = (b - 1) % rb;
                    if (a < ra) v[gAy6(j)] = A.intersection[a][i];
                    else v[xgB6(i)] = B.intersection[a - ra][j];
                }
                t[a][b] = cls(6, v);
            }
        M.cup_table.entries[{2, 4}] = t;
    }
    // degree 2 x degree 6
    {
        int n6 = ra + rb;
        std::vector<std::vector<IntClass>> t(n2);
        for (int a = 0; a < n2; ++a) t[a].resize(n6, M.zero(8));
        for (int a = 0; a < n2; ++a)
            for (int b = 0; b < n6; ++b) {
                Int v = 0;
                if (b < rb) {  // gA y_j
                    if (a >= ra) v = B.intersection[a - ra][b];
                } else {  // x_i gB
                    if (a < ra) v = A.intersection[a][b - rb];
                }
                t[a][b] = cls(8, {v});
            }
        M.cup_table.entries[{2, 6}] = t;
    }
    // degree 4 x degree 4
    {
        std::vector<std::vector<IntClass>> t(n4);
        for (int a = 0; a < n4; ++a) t[a].resize(n4, M.zero(8));
        for (int a = 0; a < n4; ++a)
            for (int b = 0; b < n4; ++b) {
                Int v = 0;
                if ((a == gA4 && b == gB4) || (a == gB4 && b == gA4)) v = 1;
                else if (a != gA4 && a != gB4 && b != gA4 && b != gB4) {
                    int i1 = (a - 1) / rb, j1 = (a - 1) % rb;
                    int i2 = (b - 1) / rb, j2 = (b - 1) % rb;
                    v = A.intersection[i1][i2] * B.intersection[j1][j2];
                }
                t[a][b] = cls(8, {v});
            }
        M.cup_table.entries[{4, 4}] = t;
    }
    // symmetric fills
    for (auto [j, k] : std::vector<std::pair<int, int>>{{4, 2}, {6, 2}}) {
        const auto& src = M.cup_table.entries.at({k, j});
        std::vector<std::vector<IntClass>> t(M.basis_count(j));
        for (int a = 0; a < M.basis_count(j); ++a) {
            t[a].resize(M.basis_count(k), M.zero(j + k));
            for (int b = 0; b < M.basis_count(k); ++b) t[a][b] = src[b][a];
        }
        M.cup_table.entries[{j, k}] = t;
    }

    // F2 ring is the reduction of the integral one (everything torsion-free)
    for (const auto& [jk, table] : M.cup_table.entries) {
        std::vector<std::vector<Mod2Class>> t2(table.size());
        for (std::size_t a = 0; a < table.size(); ++a) {
            t2[a].reserve(table[a].size());
            for (const auto& c : table[a]) t2[a].push_back(rho2(M, c));
        }
        M.cup2_table.entries[jk] = t2;
    }

    // Sq2: factor Sq1 vanishes (torsion-free), Sq2 on H^2 of a factor is the
    // cup square, Sq2 on a factor's H^4 lands in zero.
    {
        Mat2 d2(n4, std::vector<std::uint8_t>(n2, 0));
        for (int a = 0; a < ra; ++a)
            d2[gA4][a] = static_cast<std::uint8_t>(mod_reduce(A.intersection[a][a], 2).convert_to<int>());
        for (int b = 0; b < rb; ++b)
            d2[gB4][ra + b] = static_cast<std::uint8_t>(mod_reduce(B.intersection[b][b], 2).convert_to<int>());
        M.sq2_table.deg2 = d2;
        int n6 = ra + rb;
        Mat2 d4(n6, std::vector<std::uint8_t>(n4, 0));
        for (int i = 0; i < ra; ++i)
            for (int j = 0; j < rb; ++j) {
                d4[gAy6(j)][pair4(i, j)] =
                    static_cast<std::uint8_t>(mod_reduce(A.intersection[i][i], 2).convert_to<int>());
                d4[xgB6(i)][pair4(i, j)] =
                    static_cast<std::uint8_t>(mod_reduce(B.intersection[j][j], 2).convert_to<int>());
            }
        M.sq2_table.deg4 = d4;
    }

    M.fundamental = {Int(1)};

    // tangent data by the Whitney formula
    TangentData t;
    {
        std::vector<Int> c(n2, Int(0));
        for (int i = 0; i < ra; ++i) c[i] = A.w2_lift[i];
        for (int j = 0; j < rb; ++j) c[ra + j] = B.w2_lift[j];
        t.c = cls(2, c);
    }
    t.p1_tau = cls(4, [&] {
        auto v = e4(gA4, A.p1);
        v[gB4] = B.p1;
        return v;
    }());
    t.p2_tau = cls(8, {A.p1 * B.p1});
    t.e_tau = cls(8, {A.euler * B.euler});
    t.chi = A.euler * B.euler;
    if (A.signature && B.signature) t.signature = *A.signature * *B.signature;
    t.w2_M = rho2(M, t.c);
    t.q1_tau_c = q1_from_lift(M, t.p1_tau, t.c).canonical;
    M.tangent = t;
    M.provenance["construction"] = "graded tensor product of " + A.name + " and " + B.name;

    CheckReport audit = validate_ring(M);
    if (!audit.passed()) throw data_error("kunneth_product: ring audit failed");
    validate_tangent(M);
    return M;
}

}  // namespace spinc8::catalog
