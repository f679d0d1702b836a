// Test-only oracles, kept independent of the library's computation paths:
// truncated power series for hypersurface/projective-space tangent data,
// two-variable Schur polynomial arithmetic for the Grassmannian, a tiny
// multivariate polynomial ring for symbolic identities, and binomial-rule
// Steenrod squares on truncated polynomial rings.

#pragma once

#include "spinc8/arith.hpp"

#include <array>
#include <map>
#include <vector>

namespace oracles {

using spinc8::Int;

// ---------------------------------------------------------------------------
// one-variable series truncated after x^4 (x of topological degree 2)
// ---------------------------------------------------------------------------

struct Series {
    std::array<Int, 5> c{};  // integer coefficients suffice for Chern data

    static Series one() {
        Series s;
        s.c[0] = 1;
        return s;
    }
    /// 1 + a x
    static Series linear(const Int& a) {
        Series s;
        s.c[0] = 1;
        s.c[1] = a;
        return s;
    }

    Series operator*(const Series& o) const {
        Series r;
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) r.c[i + j] += c[i] * o.c[j];
        return r;
    }

    Series pow(int n) const {
        Series r = one();
        for (int i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    /// multiplicative inverse; requires unit constant term
    Series inverse() const {
        Series r;
        r.c[0] = 1;
        for (int n = 1; n <= 4; ++n) {
            Int acc = 0;
            for (int i = 1; i <= n; ++i) acc += c[i] * r.c[n - i];
            r.c[n] = -acc;
        }
        return r;
    }
};

/// Pontrjagin data from a Chern series: p1 = c1^2 - 2c2, p2 = c2^2 - 2c1c3 + 2c4.
struct PontrjaginData {
    Int p1, p2, e;
};
inline PontrjaginData pontrjagin_of(const Series& chern) {
    const auto& c = chern.c;
    return {c[1] * c[1] - 2 * c[2], c[2] * c[2] - 2 * c[1] * c[3] + 2 * c[4], c[4]};
}

// ---------------------------------------------------------------------------
// Sq2 on F2[x]/(x^{n+1}) with |x| = 2: Sq(x^k) = x^k (1+x)^k, so the
// degree-(2k+2) component is binom(k,1) x^{k+1}
// ---------------------------------------------------------------------------

inline int sq2_on_power(int k) { return k % 2; }

// ---------------------------------------------------------------------------
// symmetric polynomials in two variables; Schur basis s_(a,b) with a >= b
// ---------------------------------------------------------------------------

struct TwoVarPoly {
    // coefficient of x^i y^j, stored for all (i,j)
    std::map<std::pair<int, int>, Int> m;

    static TwoVarPoly schur(int a, int b) {
        // s_(a,b)(x,y) = sum_{i+j = a+b, b <= j,i ; between} x^i y^j along the string
        TwoVarPoly p;
        for (int i = a; i >= b; --i) p.m[{i, a + b - i}] += 1;
        return p;
    }
    static TwoVarPoly zero() { return {}; }

    TwoVarPoly operator+(const TwoVarPoly& o) const {
        TwoVarPoly r = *this;
        for (const auto& [k, v] : o.m) r.m[k] += v;
        return r;
    }
    TwoVarPoly operator*(const TwoVarPoly& o) const {
        TwoVarPoly r;
        for (const auto& [k1, v1] : m)
            for (const auto& [k2, v2] : o.m)
                r.m[{k1.first + k2.first, k1.second + k2.second}] += v1 * v2;
        return r;
    }
    void scale_add(const Int& s, const TwoVarPoly& o) {
        for (const auto& [k, v] : o.m) m[k] += s * v;
    }

    /// Expand in the Schur basis: list of ((a,b), coefficient).
    std::vector<std::pair<std::pair<int, int>, Int>> schur_expand() const {
        TwoVarPoly rest = *this;
        std::vector<std::pair<std::pair<int, int>, Int>> out;
        auto prune = [&] {
            for (auto it = rest.m.begin(); it != rest.m.end();)
                it = it->second == 0 ? rest.m.erase(it) : std::next(it);
        };
        prune();
        while (!rest.m.empty()) {
            // leading monomial x^a y^b with a maximal (then b); symmetric input
            // guarantees a >= b
            auto lead = *std::max_element(
                rest.m.begin(), rest.m.end(), [](const auto& p, const auto& q) {
                    return p.first < q.first;
                });
            auto [a, b] = lead.first;
            if (a < b) std::swap(a, b);
            Int coeff = lead.second;
            out.push_back({{a, b}, coeff});
            rest.scale_add(-coeff, schur(a, b));
            prune();
        }
        return out;
    }
};

/// Structure constants of H^*(Gr(2,4)): Schur product truncated to the 2x2
/// box (classes with a > 2 vanish).
inline std::map<std::pair<int, int>, Int> box_product(std::pair<int, int> lam,
                                                      std::pair<int, int> mu) {
    TwoVarPoly prod = TwoVarPoly::schur(lam.first, lam.second) *
                      TwoVarPoly::schur(mu.first, mu.second);
    std::map<std::pair<int, int>, Int> out;
    for (const auto& [nu, c] : prod.schur_expand())
        if (nu.first <= 2) out[nu] += c;
    return out;
}

// ---------------------------------------------------------------------------
// multivariate polynomials for symbolic identities, four graded variables
// ---------------------------------------------------------------------------

struct SymPoly {
    // exponents of (l, u, c2, c4); degrees (2, 4, 4, 8)
    std::map<std::array<int, 4>, Int> m;

    static SymPoly var(int i) {
        SymPoly p;
        std::array<int, 4> e{};
        e[i] = 1;
        p.m[e] = 1;
        return p;
    }
    static SymPoly constant(const Int& c) {
        SymPoly p;
        if (c != 0) p.m[{0, 0, 0, 0}] = c;
        return p;
    }

    SymPoly operator+(const SymPoly& o) const {
        SymPoly r = *this;
        for (const auto& [k, v] : o.m) {
            r.m[k] += v;
            if (r.m[k] == 0) r.m.erase(k);
        }
        return r;
    }
    SymPoly operator-() const {
        SymPoly r = *this;
        for (auto& [k, v] : r.m) v = -v;
        return r;
    }
    SymPoly operator-(const SymPoly& o) const { return *this + (-o); }
    SymPoly operator*(const SymPoly& o) const {
        SymPoly r;
        for (const auto& [k1, v1] : m)
            for (const auto& [k2, v2] : o.m) {
                std::array<int, 4> k{};
                for (int i = 0; i < 4; ++i) k[i] = k1[i] + k2[i];
                r.m[k] += v1 * v2;
                if (r.m[k] == 0) r.m.erase(k);
            }
        return r;
    }
    SymPoly operator*(const Int& s) const {
        SymPoly r;
        if (s == 0) return r;
        r = *this;
        for (auto& [k, v] : r.m) v *= s;
        return r;
    }
    bool is_zero() const { return m.empty(); }
};

}  // namespace oracles
