#include "spinc8/bundles.hpp"

namespace spinc8 {

RealBundleData tangent_bundle(const ManifoldModel& M) {
    const TangentData& t = M.tangent;
    RealBundleData xi;
    xi.dim = 8;
    xi.w2 = t.w2_M;
    xi.w4 = rho2(M, t.q1_tau_c);
    // Wu relation for real bundles: w6 = Sq2(w4) + w2 w4.
    xi.w6 = add2(sq2(M, xi.w4), cup2(M, xi.w2, xi.w4));
    xi.p1 = t.p1_tau;
    xi.p2 = t.p2_tau;
    xi.e = t.e_tau;
    return xi;
}

RealBundleData trivial_real(const ManifoldModel& M, int dim) {
    RealBundleData xi;
    xi.dim = dim;
    xi.w2 = M.zero2(2);
    xi.w4 = M.zero2(4);
    xi.w6 = M.zero2(6);
    xi.p1 = M.zero(4);
    xi.p2 = M.zero(8);
    if (dim >= 4 && dim <= 8 && dim % 2 == 0) xi.e = M.zero(dim);
    return xi;
}

ComplexBundleData trivial_complex(const ManifoldModel& M, int rank) {
    ComplexBundleData z;
    z.rank = rank;
    z.c1 = M.zero(2);
    z.c2 = M.zero(4);
    z.c3 = M.zero(6);
    z.c4 = M.zero(8);
    return z;
}

ComplexBundleData complex_line(const ManifoldModel& M, const IntClass& c1) {
    ComplexBundleData z = trivial_complex(M, 1);
    z.c1 = c1;
    return z;
}

ComplexBundleData whitney_sum(const ManifoldModel& M, const ComplexBundleData& a,
                              const ComplexBundleData& b) {
    ComplexBundleData z = trivial_complex(M, a.rank + b.rank);
    z.c1 = add(M, a.c1, b.c1);
    z.c2 = add(M, add(M, a.c2, cup(M, a.c1, b.c1)), b.c2);
    z.c3 = add(M, add(M, a.c3, cup(M, a.c2, b.c1)),
               add(M, cup(M, a.c1, b.c2), b.c3));
    z.c4 = add(M, add(M, a.c4, cup(M, a.c3, b.c1)),
               add(M, cup(M, a.c2, b.c2), add(M, cup(M, a.c1, b.c3), b.c4)));
    return z;
}

ComplexBundleData h_lambda(const ManifoldModel& M, const IntClass& l) {
    return whitney_sum(M, trivial_complex(M, 1), complex_line(M, l));
}

// ---------------------------------------------------------------------------
// q1 calculus
// ---------------------------------------------------------------------------

Q1Lift q1_from_lift(const ManifoldModel& M, const IntClass& p1, const IntClass& l) {
    if (p1.degree != 4 || l.degree != 2) throw degree_error("q1_from_lift: degrees must be (4,2)");
    IntClass target = sub(M, p1, cup(M, l, l));

    IntClass half = M.zero(4);
    for (std::size_t i = 0; i < target.free.size(); ++i) {
        if (mod_reduce(target.free[i], 2) != 0)
            throw data_error("q1_from_lift: p1 - l^2 has an odd free coordinate");
        half.free[i] = target.free[i] / 2;
    }

    const auto& orders = M.groups[4].torsion;
    std::vector<std::size_t> split_slots;  // even-order slots, two halvings each
    for (std::size_t i = 0; i < target.torsion.size(); ++i) {
        const Int& d = orders[i];
        const Int& r = target.torsion[i];
        if (mod_reduce(d, 2) != 0) {
            // odd order: 2 is invertible
            Int inv2 = (d + 1) / 2;
            half.torsion[i] = mod_reduce(r * inv2, d);
        } else {
            if (mod_reduce(r, 2) != 0)
                throw data_error("q1_from_lift: torsion coordinate not halvable");
            half.torsion[i] = r / 2;  // lies in [0, d/2)
            split_slots.push_back(i);
        }
    }

    Q1Lift out;
    out.canonical = half;
    out.ambiguous = !split_slots.empty();
    if (split_slots.size() > 16)
        throw data_error("q1_from_lift: too many ambiguous torsion slots");
    std::size_t combos = std::size_t(1) << split_slots.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        IntClass q = half;
        for (std::size_t b = 0; b < split_slots.size(); ++b)
            if (mask & (std::size_t(1) << b)) {
                std::size_t slot = split_slots[b];
                q.torsion[slot] = mod_reduce(q.torsion[slot] + orders[slot] / 2, orders[slot]);
            }
        out.all.push_back(q);
    }
    return out;
}

IntClass rebase_lift(const ManifoldModel& M, const IntClass& q1, const IntClass& l,
                     const IntClass& m) {
    if (q1.degree != 4 || l.degree != 2 || m.degree != 2)
        throw degree_error("rebase_lift: degrees must be (4,2,2)");
    IntClass lm = cup(M, l, m);
    IntClass mm = cup(M, m, m);
    return sub(M, q1, add(M, scale(M, 2, lm), scale(M, 2, mm)));
}

std::vector<IntClass> q1_candidates(const ManifoldModel& M, const RealBundleData& xi,
                                    const IntClass& l) {
    Q1Lift lift = q1_from_lift(M, xi.p1, l);
    std::vector<IntClass> out;
    for (const auto& q : lift.all)
        if (rho2(M, q) == xi.w4) out.push_back(q);
    return out;
}

// ---------------------------------------------------------------------------
// class-formula constructors
// ---------------------------------------------------------------------------

RealBundleData realify(const ManifoldModel& M, const ComplexBundleData& z) {
    RealBundleData xi;
    xi.dim = 2 * z.rank;
    xi.w2 = rho2(M, z.c1);
    xi.w4 = rho2(M, z.c2);
    xi.w6 = rho2(M, z.c3);
    xi.p1 = sub(M, cup(M, z.c1, z.c1), scale(M, 2, z.c2));
    xi.p2 = add(M, sub(M, cup(M, z.c2, z.c2), scale(M, 2, cup(M, z.c1, z.c3))),
                scale(M, 2, z.c4));
    switch (z.rank) {
        case 2: xi.e = z.c2; break;
        case 3: xi.e = z.c3; break;
        case 4: xi.e = z.c4; break;
        default: break;  // out of the 4..8 window
    }
    return xi;
}

RealBundleData su_adjoint_bundle(const ManifoldModel& M, const ComplexBundleData& z) {
    if (z.rank != 3) throw degree_error("su_adjoint_bundle: rank-3 input required");
    IntClass c1sq = cup(M, z.c1, z.c1);
    IntClass q1 = sub(M, c1sq, scale(M, 3, z.c2));
    RealBundleData xi;
    xi.dim = 8;
    xi.w2 = M.zero2(2);
    xi.w4 = rho2(M, add(M, c1sq, z.c2));
    xi.w6 = rho2(M, add(M, cup(M, z.c1, z.c2), z.c3));
    xi.p1 = scale(M, 2, q1);
    xi.p2 = cup(M, q1, q1);  // c1^4 - 6 c1^2 c2 + 9 c2^2
    xi.e = M.zero(8);
    return xi;
}

RealBundleData spinc6_eta(const ManifoldModel& M, const ComplexBundleData& z, const IntClass& l) {
    if (!(z.c1 == scale(M, 2, l))) throw data_error("spinc6_eta: c1(zeta) != 2l");
    IntClass lsq = cup(M, l, l);
    IntClass q1 = sub(M, lsq, z.c2);
    IntClass e = add(M, z.c3, cup(M, l, q1));
    RealBundleData eta;
    eta.dim = 6;
    eta.w2 = rho2(M, l);
    eta.w4 = rho2(M, q1);
    eta.w6 = rho2(M, e);
    eta.p1 = add(M, scale(M, 2, q1), lsq);
    eta.p2 = sub(M, add(M, cup(M, q1, q1), scale(M, 2, cup(M, l, e))),
                 scale(M, 4, z.c4));
    eta.e = e;
    return eta;
}

RealBundleData spinc4_eta(const ManifoldModel& M, const IntClass& u_plus, const IntClass& u_minus,
                          const IntClass& l) {
    if (u_plus.degree != 4 || u_minus.degree != 4 || l.degree != 2)
        throw degree_error("spinc4_eta: degrees must be (4,4,2)");
    IntClass q1 = scale(M, -1, add(M, u_plus, u_minus));
    IntClass e = sub(M, u_plus, u_minus);
    RealBundleData eta;
    eta.dim = 4;
    eta.w2 = rho2(M, l);
    eta.w4 = rho2(M, add(M, u_plus, u_minus));
    eta.w6 = M.zero2(6);
    eta.p1 = add(M, scale(M, 2, q1), cup(M, l, l));
    eta.p2 = cup(M, e, e);  // rank-4: p2 = e^2
    eta.e = e;
    return eta;
}

RealBundleData spinc5_eta(const ManifoldModel& M, const ComplexBundleData& z, const IntClass& l) {
    if (!(z.c1 == scale(M, 2, l))) throw data_error("spinc5_eta: c1(zeta) != 2l");
    IntClass lsq = cup(M, l, l);
    IntClass q1 = sub(M, lsq, z.c2);
    RealBundleData eta;
    eta.dim = 5;
    eta.w2 = rho2(M, l);
    eta.w4 = add2(rho2(M, lsq), rho2(M, z.c2));
    eta.w6 = M.zero2(6);
    eta.p1 = add(M, scale(M, 2, q1), lsq);
    eta.p2 = sub(M, cup(M, q1, q1), scale(M, 4, z.c4));
    // no Euler class in odd dimension
    return eta;
}

RealBundleData halpha_total(const ManifoldModel& M, const IntClass& u, const IntClass& eta_c2,
                            const IntClass& eta_c4, const IntClass& l) {
    IntClass lsq = cup(M, l, l);
    IntClass l4 = cup(M, lsq, lsq);
    IntClass q1 = add(M, sub(M, scale(M, 2, u), eta_c2), scale(M, 2, lsq));

    // p2 = 2 c4 + c2 (c2 - 2u - 4 l^2) + 6 u^2 + 6 u l^2 + 4 l^4
    IntClass inner = sub(M, eta_c2, add(M, scale(M, 2, u), scale(M, 4, lsq)));
    IntClass p2 = scale(M, 2, eta_c4);
    p2 = add(M, p2, cup(M, eta_c2, inner));
    p2 = add(M, p2, scale(M, 6, cup(M, u, u)));
    p2 = add(M, p2, scale(M, 6, cup(M, u, lsq)));
    p2 = add(M, p2, scale(M, 4, l4));

    // e = c4 + c2 u - l^2 u + u^2
    IntClass e = add(M, eta_c4, cup(M, eta_c2, u));
    e = sub(M, e, cup(M, lsq, u));
    e = add(M, e, cup(M, u, u));

    RealBundleData xi;
    xi.dim = 8;
    xi.w2 = M.zero2(2);
    xi.w4 = rho2(M, q1);
    xi.w6 = sq2(M, xi.w4);  // spin bundle: w6 = Sq2 w4
    xi.p1 = scale(M, 2, q1);
    xi.p2 = p2;
    xi.e = e;
    return xi;
}

// ---------------------------------------------------------------------------
// the spin^c index
// ---------------------------------------------------------------------------

namespace {

// Graded piece numerator/denominator; degree-0 pieces are pure scalars.
struct Piece {
    bool scalar = false;
    Int s = 0;          // scalar numerator (degree 0)
    IntClass cls;       // class numerator  (degree > 0)
    Int denom = 1;
};

Rat evaluate_product(const ManifoldModel& M, const std::vector<Piece>& factors) {
    Int scalar_num = 1;
    Int denom = 1;
    std::optional<IntClass> cls;
    for (const auto& f : factors) {
        denom *= f.denom;
        if (f.scalar) {
            if (f.s == 0) return Rat(0);
            scalar_num *= f.s;
        } else {
            if (f.cls.is_zero()) return Rat(0);
            cls = cls ? cup(M, *cls, f.cls) : f.cls;
        }
    }
    Int value = cls ? evaluate(M, *cls) : Int(0);
    if (!cls) throw degree_error("index: degree-8 component missing");
    return Rat(scalar_num * value, denom);
}

// e^{c/2} components by degree: 1, c/2, c^2/8, c^3/48, c^4/384.
Piece exp_half_piece(const ManifoldModel& M, const IntClass& c, int deg) {
    switch (deg) {
        case 0: return {true, 1, {}, 1};
        case 2: return {false, 0, c, 2};
        case 4: return {false, 0, cup_pow(M, c, 2), 8};
        case 6: return {false, 0, cup_pow(M, c, 3), 48};
        case 8: return {false, 0, cup_pow(M, c, 4), 384};
        default: throw degree_error("exp_half_piece: bad degree");
    }
}

// Ahat components by degree: 1, -p1/24, (7 p1^2 - 4 p2)/5760.
Piece ahat_piece(const ManifoldModel& M, const TangentData& t, int deg) {
    switch (deg) {
        case 0: return {true, 1, {}, 1};
        case 4: return {false, 0, scale(M, -1, t.p1_tau), 24};
        case 8: {
            IntClass num = sub(M, scale(M, 7, cup(M, t.p1_tau, t.p1_tau)),
                               scale(M, 4, t.p2_tau));
            return {false, 0, num, 5760};
        }
        default: throw degree_error("ahat_piece: bad degree");
    }
}

}  // namespace

Rat spinc_index(const ManifoldModel& M, const ComplexBundleData& z,
                const std::optional<IntClass>& c_override) {
    const TangentData& t = M.tangent;
    IntClass c = c_override ? *c_override : t.c;

    // Chern character components through degree 8.
    auto ch_piece = [&](int deg) -> Piece {
        switch (deg) {
            case 0: return {true, Int(z.rank), {}, 1};
            case 2: return {false, 0, z.c1, 1};
            case 4: {
                IntClass num = sub(M, cup(M, z.c1, z.c1), scale(M, 2, z.c2));
                return {false, 0, num, 2};
            }
            case 6: {
                IntClass num = sub(M, cup_pow(M, z.c1, 3), scale(M, 3, cup(M, z.c1, z.c2)));
                num = add(M, num, scale(M, 3, z.c3));
                return {false, 0, num, 6};
            }
            case 8: {
                IntClass num = cup_pow(M, z.c1, 4);
                num = sub(M, num, scale(M, 4, cup(M, cup(M, z.c1, z.c1), z.c2)));
                num = add(M, num, scale(M, 4, cup(M, z.c1, z.c3)));
                num = add(M, num, scale(M, 2, cup(M, z.c2, z.c2)));
                num = sub(M, num, scale(M, 4, z.c4));
                return {false, 0, num, 24};
            }
            default: throw degree_error("ch_piece: bad degree");
        }
    };

    Rat total(0);
    for (int i = 0; i <= 8; i += 2)
        for (int j : {0, 4, 8}) {
            int k = 8 - i - j;
            if (k < 0) continue;
            total += evaluate_product(
                M, {exp_half_piece(M, c, i), ahat_piece(M, t, j), ch_piece(k)});
        }
    return total;
}

Rat index_of_complexified(const ManifoldModel& M, const RealBundleData& x,
                          const std::optional<IntClass>& c_override) {
    const TangentData& t = M.tangent;
    IntClass c = c_override ? *c_override : t.c;

    // Pontrjagin character: dim + p1 + (p1^2 - 2 p2)/12, odd parts vanish.
    auto ph_piece = [&](int deg) -> Piece {
        switch (deg) {
            case 0: return {true, Int(x.dim), {}, 1};
            case 2:
            case 6: return {true, 0, {}, 1};
            case 4: return {false, 0, x.p1, 1};
            case 8: {
                IntClass num = sub(M, cup(M, x.p1, x.p1), scale(M, 2, x.p2));
                return {false, 0, num, 12};
            }
            default: throw degree_error("ph_piece: bad degree");
        }
    };

    Rat total(0);
    for (int i = 0; i <= 8; i += 2)
        for (int j : {0, 4, 8}) {
            int k = 8 - i - j;
            if (k < 0) continue;
            total += evaluate_product(
                M, {exp_half_piece(M, c, i), ahat_piece(M, t, j), ph_piece(k)});
        }
    return total;
}

}  // namespace spinc8
