#include "spinc8/criteria.hpp"

#include <algorithm>
#include <functional>

namespace spinc8::criteria {

namespace {

struct Work {
    const ManifoldModel& M;
    CheckReport rep;
    bool bad = false;

    Work(const ManifoldModel& m, std::string crit) : M(m) { rep.criterion = std::move(crit); }

    void witness(const std::string& k, const IntClass& x) {
        rep.witnesses.emplace_back(k, M.format(x));
    }

    void pre_eq2(const std::string& name, const Mod2Class& a, const Mod2Class& b) {
        rep.pre(name, a == b, M.format(a), M.format(b));
    }

    void eq_class(const std::string& name, const std::string& rel, const IntClass& a,
                  const IntClass& b) {
        rep.cond(name, rel, a == b, M.format(a), M.format(b));
    }

    void eq_mod2(const std::string& name, const std::string& rel, const Mod2Class& a,
                 const Mod2Class& b) {
        rep.cond(name, rel, a == b, M.format(a), M.format(b));
    }

    /// evaluate(num)/den, recording a data problem when not an integer.
    std::optional<Int> integer_value(const std::string& what, const IntClass& num,
                                     const Int& den) {
        auto rv = eval_rational(M, num, den);
        if (!rv.integral) {
            rep.data_problem(what + " = " + to_string(rv.value) + " is not an integer");
            bad = true;
            return std::nullopt;
        }
        return rv.value.numerator();
    }

    void congruence(const std::string& name, const std::string& rel, const Int& lhs,
                    const Int& rhs, const Int& mod) {
        rep.cond(name, rel, congruent(lhs, rhs, mod), lhs.str(),
                 rhs.str() + " (mod " + mod.str() + ")");
    }

    CheckReport done() {
        if (!bad) rep.finalize();
        return rep;
    }
};

void require_dim8(const ManifoldModel& M, Work& w, const RealBundleData& xi) {
    if (xi.dim != 8 || !xi.e)
        throw degree_error(w.rep.criterion + ": 8-dimensional bundle data with Euler class required");
    Mod2Class wu = add2(sq2(M, xi.w4), cup2(M, xi.w2, xi.w4));
    if (!(wu == xi.w6)) {
        w.rep.data_problem("bundle data violates Sq2 w4 = w6 + w2 w4");
        w.bad = true;
    }
}

/// Evaluate the criterion body once per valid halving of p1(xi) - l^2,
/// existentially; the successful branch (or the first one) is reported.
CheckReport over_q1(const ManifoldModel& M, const std::string& crit, const RealBundleData& xi,
                    const IntClass& l, const std::function<CheckReport(const IntClass&)>& body) {
    std::vector<IntClass> cands;
    try {
        cands = q1_candidates(M, xi, l);
    } catch (const data_error& e) {
        Work w(M, crit);
        w.rep.data_problem(e.what());
        return w.rep;
    }
    if (cands.empty()) {
        Work w(M, crit);
        w.rep.data_problem("no halving of p1 - l^2 reduces to w4");
        return w.rep;
    }
    CheckReport first;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        CheckReport r = body(cands[i]);
        if (cands.size() > 1)
            r.note("q1 halving branch " + std::to_string(i + 1) + " of " +
                   std::to_string(cands.size()));
        if (r.passed()) return r;
        if (i == 0) first = r;
    }
    return first;
}

/// Is there t in H^6(M;Z) with (c.t)[M] odd?  Torsion pairs to zero, so it
/// suffices to scan the free generators.
bool c_pairs_oddly_with_h6(const ManifoldModel& M) {
    const IntClass& c = M.tangent.c;
    for (int i = 0; i < M.groups[6].free_rank; ++i) {
        Int v = evaluate(M, cup(M, c, M.basis_class(6, i)));
        if (mod_reduce(v, 2) != 0) return true;
    }
    return false;
}

}  // namespace

// ---------------------------------------------------------------------------
// Chern realizability
// ---------------------------------------------------------------------------

CheckReport chern_realizable_punctured(const ManifoldModel& M, const IntClass& l,
                                       const IntClass& u, const IntClass& v) {
    Work w(M, "chern_realizable_punctured");
    w.witness("l", l);
    w.witness("u", u);
    w.witness("v", v);
    Mod2Class lhs = add2(sq2(M, rho2(M, u)), rho2(M, cup(M, l, u)));
    w.eq_mod2("sq2_relation", "Sq2 rho2(u) + rho2(lu) = rho2(v)", lhs, rho2(M, v));
    return w.done();
}

CheckReport chern_realizable_closed(const ManifoldModel& M, const IntClass& l, const IntClass& u,
                                    const IntClass& v, const IntClass& w8) {
    Work w(M, "chern_realizable_closed");
    w.witness("l", l);
    w.witness("u", u);
    w.witness("v", v);
    w.witness("w", w8);

    CheckReport punctured = chern_realizable_punctured(M, l, u, v);
    w.rep.pre("punctured_realizable", punctured.passed());
    if (!punctured.passed()) return w.done();

    const TangentData& t = M.tangent;
    IntClass lsq = cup(M, l, l);
    IntClass inner = add(M, u, t.q1_tau_c);
    inner = sub(M, inner, scale(M, 2, lsq));
    inner = sub(M, inner, scale(M, 3, cup(M, t.c, l)));
    inner = sub(M, inner, cup(M, t.c, t.c));
    IntClass num = cup(M, u, inner);
    num = add(M, num, cup(M, add(M, scale(M, 2, l), scale(M, 3, t.c)), v));

    auto I = w.integer_value("I", num, 2);
    if (!I) return w.done();
    w.rep.note("I = " + I->str());
    w.congruence("w_mod6", "w[M] = I (mod 6)", evaluate(M, w8), *I, 6);
    return w.done();
}

// ---------------------------------------------------------------------------
// isomorphism tests
// ---------------------------------------------------------------------------

static CheckReport iso_common(const ManifoldModel& M, const char* crit, const RealBundleData& xi,
                              const RealBundleData& xi2, const IntClass& l, bool oriented) {
    Work w(M, crit);
    w.pre_eq2("lift", rho2(M, l), xi.w2);
    w.pre_eq2("lift2", rho2(M, l), xi2.w2);
    require_dim8(M, w, xi);
    require_dim8(M, w, xi2);
    if (w.bad) return w.done();
    if (w.rep.find("pre:lift")->ok && w.rep.find("pre:lift2")->ok) {
        std::vector<IntClass> a, b;
        try {
            a = q1_candidates(M, xi, l);
            b = q1_candidates(M, xi2, l);
        } catch (const data_error& e) {
            w.rep.data_problem(e.what());
            return w.rep;
        }
        bool equal = false;
        for (const auto& x : a)
            for (const auto& y : b)
                if (x == y) equal = true;
        w.rep.cond("q1_equal", "q1(xi;l) = q1(xi';l)", equal,
                   a.empty() ? "-" : M.format(a.front()), b.empty() ? "-" : M.format(b.front()));
    }
    if (oriented) {
        w.eq_class("p2_equal", "p2(xi) = p2(xi')", xi.p2, xi2.p2);
        w.eq_class("euler_equal", "e(xi) = e(xi')", *xi.e, *xi2.e);
    }
    return w.done();
}

CheckReport stably_isomorphic(const ManifoldModel& M, const RealBundleData& xi,
                              const RealBundleData& xi2, const IntClass& l) {
    return iso_common(M, "stably_isomorphic", xi, xi2, l, false);
}

CheckReport isomorphic_oriented(const ManifoldModel& M, const RealBundleData& xi,
                                const RealBundleData& xi2, const IntClass& l) {
    return iso_common(M, "isomorphic_oriented", xi, xi2, l, true);
}

// ---------------------------------------------------------------------------
// structure-group reductions
// ---------------------------------------------------------------------------

CheckReport complex_structure(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                              const IntClass& v) {
    const TangentData& t = M.tangent;
    return over_q1(M, "complex_structure", xi, l, [&](const IntClass& q1) {
        Work w(M, "complex_structure");
        w.witness("l", l);
        w.witness("v", v);
        w.pre_eq2("lift", rho2(M, l), xi.w2);
        require_dim8(M, w, xi);
        if (w.bad) return w.rep;

        w.eq_mod2("w6_lift", "rho2(v) = w6(xi)", rho2(M, v), xi.w6);

        IntClass lsq = cup(M, l, l);
        IntClass q1sq = cup(M, q1, q1);
        IntClass diff = sub(M, xi.p2, q1sq);

        auto lhs = w.integer_value("(p2 - q1^2)/2", diff, 2);
        if (!lhs) return w.rep;

        IntClass inner = sub(M, q1, t.q1_tau_c);
        inner = add(M, inner, scale(M, 2, lsq));
        inner = add(M, inner, scale(M, 3, cup(M, l, t.c)));
        inner = add(M, inner, cup(M, t.c, t.c));
        IntClass jnum = add(M, cup(M, q1, inner), scale(M, 3, cup(M, t.c, v)));
        auto jv = eval_rational(M, jnum, 2);
        if (!jv.integral) {
            if (w.rep.find("w6_lift")->ok) {
                w.rep.data_problem("J = " + to_string(jv.value) +
                                   " is not an integer although rho2(v) = w6");
                w.bad = true;
                return w.rep;
            }
            w.rep.cond("a_parity", "(p2 - q1^2)/2 [M] = J (mod 2)", false, lhs->str(),
                       to_string(jv.value) + " (mod 2)");
        } else {
            w.congruence("a_parity", "(p2 - q1^2)/2 [M] = J (mod 2)", *lhs,
                         jv.value.numerator(), 2);
        }

        IntClass rhs = scale(M, 2, sub(M, *xi.e, cup(M, l, v)));
        w.eq_class("b_euler", "p2 - q1^2 = 2(e - lv)", diff, rhs);

        if (c_pairs_oddly_with_h6(M)) {
            w.rep.note("w2(M).H6 != 0: for a stable structure only the integrality of w6 "
                       "matters, v can absorb the parity");
        } else {
            bool c_torsion = std::all_of(t.c.free.begin(), t.c.free.end(),
                                         [](const Int& v) { return v == 0; });
            if (c_torsion) w.rep.note("c is torsion: J does not depend on v");
        }
        return w.done();
    });
}

CheckReport congruence_4B(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l) {
    const TangentData& t = M.tangent;
    return over_q1(M, "congruence_4B", xi, l, [&](const IntClass& q1) {
        Work w(M, "congruence_4B");
        w.witness("l", l);
        w.pre_eq2("lift", rho2(M, l), xi.w2);
        require_dim8(M, w, xi);
        if (w.bad) return w.rep;

        Int lhs = evaluate(M, sub(M, xi.p2, cup(M, q1, q1)));
        IntClass inner = sub(M, q1, t.q1_tau_c);
        inner = add(M, inner, scale(M, 2, cup(M, l, l)));
        inner = add(M, inner, cup(M, t.c, t.c));
        Int rhs = evaluate(M, cup(M, q1, inner));
        w.congruence("congruence_mod6", "(p2 - q1^2)[M] = q1(q1 - q1(tau;c) + 2l^2 + c^2)[M]",
                     lhs, rhs, 6);
        return w.done();
    });
}

CheckReport spinc6_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& v) {
    const TangentData& t = M.tangent;
    return over_q1(M, "spinc6_reduction", xi, l, [&](const IntClass& q1) {
        Work w(M, "spinc6_reduction");
        w.witness("l", l);
        w.witness("v", v);
        w.pre_eq2("lift", rho2(M, l), xi.w2);
        require_dim8(M, w, xi);
        if (w.bad) return w.rep;

        w.eq_class("euler_zero", "e(xi) = 0", *xi.e, M.zero(8));
        w.eq_mod2("w6_lift", "rho2(v) = w6(xi)", rho2(M, v), xi.w6);

        IntClass lsq = cup(M, l, l);
        IntClass inner = sub(M, q1, t.q1_tau_c);
        inner = add(M, inner, scale(M, 2, lsq));
        inner = add(M, inner, scale(M, 3, cup(M, l, t.c)));
        inner = add(M, inner, cup(M, t.c, t.c));

        IntClass num = sub(M, xi.p2, cup(M, q1, q1));
        num = add(M, num, scale(M, 2, cup(M, q1, inner)));
        num = add(M, num, scale(M, 6, cup(M, add(M, l, t.c), v)));
        auto val = w.integer_value("spin^c(6) expression", num, 2);
        if (!val) return w.rep;
        w.congruence("congruence_mod4", "expression = 0 (mod 4)", *val, 0, 4);
        return w.done();
    });
}

CheckReport u3_adjoint(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                       const IntClass& u, const IntClass& v) {
    const TangentData& t = M.tangent;

    Work head(M, "u3_adjoint");
    head.witness("l", l);
    head.witness("u", u);
    head.witness("v", v);
    head.rep.pre("spin", xi.w2.is_zero(), M.format(xi.w2), "0");
    require_dim8(M, head, xi);
    if (head.bad || !xi.w2.is_zero()) return head.done();

    return over_q1(M, "u3_adjoint", xi, M.zero(2), [&](const IntClass& q1) {
        Work w(M, "u3_adjoint");
        w.witness("l", l);
        w.witness("u", u);
        w.witness("v", v);
        w.rep.pre("spin", true, "0", "0");

        IntClass lsq = cup(M, l, l);
        IntClass vlu = sub(M, v, cup(M, l, u));
        w.eq_class("q1_match", "q1(xi) = -3u + l^2", q1, add(M, scale(M, -3, u), lsq));
        w.eq_mod2("w6_match", "rho2(v - lu) = w6(xi)", rho2(M, vlu), xi.w6);
        w.eq_class("p2_match", "p2(xi) = q1^2(xi)", xi.p2, cup(M, q1, q1));
        w.eq_class("euler_zero", "e(xi) = 0", *xi.e, M.zero(8));

        IntClass inner = add(M, u, t.q1_tau_c);
        inner = sub(M, inner, cup(M, t.c, t.c));
        IntClass num = cup(M, u, inner);
        num = add(M, num, cup(M, add(M, scale(M, 2, l), scale(M, 3, t.c)), vlu));
        auto val = w.integer_value("U(3) expression", num, 2);
        if (!val) return w.rep;
        w.congruence("congruence_mod6", "expression = 0 (mod 6)", *val, 0, 6);
        return w.done();
    });
}

CheckReport su3_structure(const ManifoldModel& M, const RealBundleData& xi, const IntClass& u) {
    const TangentData& t = M.tangent;

    Work head(M, "su3_structure");
    head.witness("u", u);
    head.rep.pre("model_spin", t.w2_M.is_zero(), M.format(t.w2_M), "0");
    head.rep.pre("spin", xi.w2.is_zero(), M.format(xi.w2), "0");
    require_dim8(M, head, xi);
    if (head.bad || !t.w2_M.is_zero() || !xi.w2.is_zero()) return head.done();

    return over_q1(M, "su3_structure", xi, M.zero(2), [&](const IntClass& q1) {
        Work w(M, "su3_structure");
        w.witness("u", u);
        w.rep.pre("model_spin", true, "0", "0");
        w.rep.pre("spin", true, "0", "0");

        w.rep.cond("w6_integral", "w6(xi) is a reduction of an integral class",
                   in_rho2_image(M, xi.w6), M.format(xi.w6), "");
        w.eq_class("euler_zero", "e(xi) = 0", *xi.e, M.zero(8));
        w.eq_class("q1_match", "q1(xi) = -3u", q1, scale(M, -3, u));
        w.eq_class("p2_match", "p2(xi) = 9u^2", xi.p2, scale(M, 9, cup(M, u, u)));

        IntClass q1_tau0;
        try {
            q1_tau0 = q1_from_lift(M, t.p1_tau, M.zero(2)).canonical;
        } catch (const data_error& e) {
            w.rep.data_problem(std::string("q1(tau M) undefined: ") + e.what());
            w.bad = true;
            return w.rep;
        }
        IntClass num = cup(M, u, add(M, u, q1_tau0));
        auto val = w.integer_value("SU(3) expression", num, 2);
        if (!val) return w.rep;
        w.congruence("congruence_mod6", "u(u + q1(tau M))[M]/2 = 0 (mod 6)", *val, 0, 6);
        return w.done();
    });
}

CheckReport hlambda_stable_punctured(const ManifoldModel& M, const ComplexBundleData& z,
                                     const IntClass& l) {
    Work w(M, "hlambda_stable_punctured");
    w.witness("l", l);
    w.eq_class("c1_even", "c1(zeta) = 2l", z.c1, scale(M, 2, l));
    IntClass rel = sub(M, z.c3, cup(M, l, z.c2));
    rel = add(M, rel, cup_pow(M, l, 3));
    w.eq_class("c3_relation", "c3 - l c2 + l^3 = 0", rel, M.zero(6));
    return w.done();
}

/// K = (p1(tau)u + 2u^2 + l^2 (3l^2 - p1(tau) - 5u))[M] / 4
static std::optional<Int> quaternionic_K(const ManifoldModel& M, Work& w, const IntClass& l,
                                         const IntClass& u) {
    const TangentData& t = M.tangent;
    IntClass lsq = cup(M, l, l);
    IntClass num = cup(M, t.p1_tau, u);
    num = add(M, num, scale(M, 2, cup(M, u, u)));
    IntClass inner = scale(M, 3, lsq);
    inner = sub(M, inner, t.p1_tau);
    inner = sub(M, inner, scale(M, 5, u));
    num = add(M, num, cup(M, lsq, inner));
    return w.integer_value("K", num, 4);
}

CheckReport hlambda_realizable(const ManifoldModel& M, const IntClass& l, const IntClass& u,
                               const IntClass& w8) {
    Work w(M, "hlambda_realizable");
    w.witness("l", l);
    w.witness("u", u);
    w.witness("w", w8);
    w.pre_eq2("lift_w2M", rho2(M, l), M.tangent.w2_M);

    IntClass lu_l3 = sub(M, cup(M, l, u), cup_pow(M, l, 3));
    w.eq_mod2("sq2_u", "Sq2 rho2(u) = rho2(lu - l^3)", sq2(M, rho2(M, u)), rho2(M, lu_l3));

    auto K = quaternionic_K(M, w, l, u);
    if (!K) return w.done();
    w.rep.note("K = " + K->str());
    w.congruence("w_mod12", "w[M] = K (mod 12)", evaluate(M, w8), *K, 12);
    return w.done();
}

CheckReport hlambda_on_complex(const ManifoldModel& M, const ComplexBundleData& z,
                               const IntClass& l) {
    Work w(M, "hlambda_on_complex");
    w.witness("l", l);
    w.pre_eq2("lift_w2M", rho2(M, l), M.tangent.w2_M);

    w.eq_class("c1_even", "c1(xi) = 2l", z.c1, scale(M, 2, l));
    IntClass rel = sub(M, z.c3, cup(M, l, z.c2));
    rel = add(M, rel, cup_pow(M, l, 3));
    w.eq_class("c3_relation", "c3 - l c2 + l^3 = 0", rel, M.zero(6));

    auto K = quaternionic_K(M, w, l, z.c2);
    if (!K) return w.done();
    w.rep.note("K = " + K->str());
    w.congruence("K_mod4", "K = c4(xi)[M] (mod 4)", *K, evaluate(M, z.c4), 4);
    return w.done();
}

CheckReport hlambda_line_exists(const ManifoldModel& M, const IntClass& l, const IntClass& u) {
    const TangentData& t = M.tangent;
    Work w(M, "hlambda_line_exists");
    w.witness("l", l);
    w.witness("u", u);
    w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);

    w.eq_mod2("sq2_u", "Sq2 rho2(u) = rho2(lu)", sq2(M, rho2(M, u)), rho2(M, cup(M, l, u)));

    IntClass num = cup(M, t.p1_tau, u);
    num = add(M, num, scale(M, 2, cup(M, u, u)));
    num = sub(M, num, cup(M, cup(M, l, l), u));
    auto val = w.integer_value("line expression", num, 4);
    if (!val) return w.done();
    w.congruence("congruence_mod12", "(p1(tau)u + 2u^2 - l^2 u)[M]/4 = 0 (mod 12)", *val, 0, 12);
    return w.done();
}

CheckReport spinc4_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& u_plus, const IntClass& u_minus) {
    const TangentData& t = M.tangent;
    return over_q1(M, "spinc4_reduction", xi, l, [&](const IntClass& q1) {
        Work w(M, "spinc4_reduction");
        w.witness("l", l);
        w.witness("u_plus", u_plus);
        w.witness("u_minus", u_minus);
        w.pre_eq2("lift", rho2(M, l), xi.w2);
        w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
        require_dim8(M, w, xi);
        if (w.bad) return w.rep;

        IntClass usum = add(M, u_plus, u_minus);
        IntClass udiff = sub(M, u_plus, u_minus);
        IntClass lsq = cup(M, l, l);

        w.eq_class("q1_match", "q1(xi;l) = -(u+ + u-)", q1, scale(M, -1, usum));
        w.eq_mod2("w6_zero", "w6(xi) = 0", xi.w6, M.zero2(6));
        w.eq_mod2("sq2_uplus", "Sq2 rho2(u+) = rho2(l u+)", sq2(M, rho2(M, u_plus)),
                  rho2(M, cup(M, l, u_plus)));
        w.eq_class("euler_zero", "e(xi) = 0", *xi.e, M.zero(8));
        w.eq_class("p2_match", "p2(xi) = (u+ - u-)^2", xi.p2, cup(M, udiff, udiff));

        IntClass nplus = cup(M, u_plus, add(M, sub(M, t.p1_tau, lsq), scale(M, 2, u_plus)));
        auto vplus = w.integer_value("u+ expression", nplus, 4);
        if (!vplus) return w.rep;
        w.congruence("uplus_mod12", "u+(p1(tau) + 2u+ - l^2)[M]/4 = 0 (mod 12)", *vplus, 0, 12);

        IntClass nminus = cup(M, u_minus, add(M, sub(M, t.p1_tau, lsq), scale(M, 2, u_minus)));
        auto vminus = w.integer_value("u- expression", nminus, 4);
        if (!vminus) return w.rep;
        w.congruence("uminus_mod4", "u-(p1(tau) + 2u- - l^2)[M]/4 = 0 (mod 4)", *vminus, 0, 4);
        w.rep.note("u- residue mod 12 is " + mod_reduce(*vminus, 12).str() +
                   " (sharpens to 0 when all conditions hold)");
        return w.done();
    });
}

CheckReport three_dim_bundle_exists(const ManifoldModel& M, const IntClass& l, const IntClass& u) {
    const TangentData& t = M.tangent;
    Work w(M, "three_dim_bundle_exists");
    w.witness("l", l);
    w.witness("u", u);
    w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);

    w.eq_mod2("sq2_u", "Sq2 rho2(u) = rho2(lu)", sq2(M, rho2(M, u)), rho2(M, cup(M, l, u)));

    IntClass num = cup(M, u, sub(M, sub(M, t.p1_tau, scale(M, 2, u)), cup(M, l, l)));
    auto val = w.integer_value("3-bundle expression", num, 4);
    if (!val) return w.done();
    w.congruence("congruence_mod12", "u(p1(tau) - 2u - l^2)[M]/4 = 0 (mod 12)", *val, 0, 12);
    return w.done();
}

CheckReport spinc3_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& u) {
    const TangentData& t = M.tangent;
    return over_q1(M, "spinc3_reduction", xi, l, [&](const IntClass& q1) {
        Work w(M, "spinc3_reduction");
        w.witness("l", l);
        w.witness("u", u);
        w.pre_eq2("lift", rho2(M, l), xi.w2);
        w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
        require_dim8(M, w, xi);
        if (w.bad) return w.rep;

        w.eq_class("q1_match", "q1(xi;l) = 2u", q1, scale(M, 2, u));
        w.eq_mod2("w6_zero", "w6(xi) = 0", xi.w6, M.zero2(6));
        w.eq_mod2("sq2_u", "Sq2 rho2(u) = rho2(lu)", sq2(M, rho2(M, u)),
                  rho2(M, cup(M, l, u)));
        w.eq_class("euler_zero", "e(xi) = 0", *xi.e, M.zero(8));
        w.eq_class("p2_zero", "p2(xi) = 0", xi.p2, M.zero(8));

        IntClass num = cup(M, u, sub(M, sub(M, t.p1_tau, scale(M, 2, u)), cup(M, l, l)));
        auto val = w.integer_value("spin^c(3) expression", num, 4);
        if (!val) return w.rep;
        w.congruence("congruence_mod4", "u(p1(tau) - 2u - l^2)[M]/4 = 0 (mod 4)", *val, 0, 4);
        return w.done();
    });
}

CheckReport hlambda_on_real(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l) {
    const TangentData& t = M.tangent;

    Work head(M, "hlambda_on_real");
    head.witness("l", l);
    head.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
    require_dim8(M, head, xi);
    if (head.bad) return head.rep;
    head.rep.cond("w2_zero", "w2(xi) = 0", xi.w2.is_zero(), M.format(xi.w2), "0");
    if (!xi.w2.is_zero()) {
        head.rep.note("xi is not spin; q1(xi) is undefined and the remaining conditions "
                      "were not evaluated");
        return head.done();
    }

    return over_q1(M, "hlambda_on_real", xi, M.zero(2), [&](const IntClass& q1) {
        Work w(M, "hlambda_on_real");
        w.witness("l", l);
        w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
        w.rep.cond("w2_zero", "w2(xi) = 0", true, "0", "0");

        Mod2Class w2sq = cup2(M, t.w2_M, t.w2_M);
        Mod2Class rhs6 = cup2(M, t.w2_M, add2(xi.w4, w2sq));
        w.eq_mod2("w6_wu", "w6(xi) = w2(M)(w4(xi) + w2(M)^2)", xi.w6, rhs6);

        IntClass lsq = cup(M, l, l);
        IntClass q1sq = cup(M, q1, q1);
        auto lhs = w.integer_value("(p2 - q1^2)/2", sub(M, xi.p2, q1sq), 2);
        if (!lhs) return w.rep;

        IntClass num = scale(M, 2, q1sq);
        num = sub(M, num, cup(M, t.p1_tau, q1));
        IntClass inner = sub(M, t.p1_tau, scale(M, 3, q1));
        inner = add(M, inner, lsq);
        num = add(M, num, cup(M, lsq, inner));
        auto rhs = w.integer_value("quarter expression", num, 4);
        if (!rhs) return w.rep;
        w.congruence("b_congruence_mod4", "(p2-q1^2)/2 [M] = quarter expression (mod 4)", *lhs,
                     *rhs, 4);

        w.eq_class("c_euler", "2e(xi) = p2 - q1^2", scale(M, 2, *xi.e), sub(M, xi.p2, q1sq));
        return w.done();
    });
}

CheckReport halpha_structure(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& u) {
    const TangentData& t = M.tangent;

    Work head(M, "halpha_structure");
    head.witness("l", l);
    head.witness("u", u);
    head.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
    require_dim8(M, head, xi);
    if (head.bad) return head.rep;
    head.rep.cond("w2_zero", "w2(xi) = 0", xi.w2.is_zero(), M.format(xi.w2), "0");
    if (!xi.w2.is_zero()) {
        head.rep.note("xi is not spin; q1(xi) is undefined and the remaining conditions "
                      "were not evaluated");
        return head.done();
    }

    return over_q1(M, "halpha_structure", xi, M.zero(2), [&](const IntClass& q1) {
        Work w(M, "halpha_structure");
        w.witness("l", l);
        w.witness("u", u);
        w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
        w.rep.cond("w2_zero", "w2(xi) = 0", true, "0", "0");

        IntClass lsq = cup(M, l, l);
        IntClass l4 = cup(M, lsq, lsq);
        IntClass q1sq = cup(M, q1, q1);

        IntClass comb = sub(M, sub(M, xi.p2, q1sq), scale(M, 2, *xi.e));
        w.eq_class("p2_q1_euler", "p2 - q1^2 - 2e = 0", comb, M.zero(8));

        Mod2Class w6comb = add2(xi.w6, cup2(M, xi.w4, rho2(M, l)));
        w6comb = add2(w6comb, rho2(M, cup_pow(M, l, 3)));
        w.eq_mod2("w6_combination", "w6 + w4 rho2(l) + rho2(l^3) = 0", w6comb, M.zero2(6));

        w.eq_mod2("sq2_u", "Sq2 rho2(u) = rho2(lu)", sq2(M, rho2(M, u)),
                  rho2(M, cup(M, l, u)));

        IntClass n12 = cup(M, u, sub(M, sub(M, t.p1_tau, scale(M, 2, u)), lsq));
        auto v12 = w.integer_value("u expression", n12, 4);
        if (!v12) return w.rep;
        w.congruence("u_mod12", "u(p1(tau) - 2u - l^2)[M]/4 = 0 (mod 12)", *v12, 0, 12);

        IntClass num = scale(M, 4, q1sq);
        num = sub(M, num, scale(M, 2, xi.p2));
        num = sub(M, num, cup(M, q1, t.p1_tau));
        num = sub(M, num, scale(M, 3, cup(M, lsq, q1)));
        num = add(M, num, cup(M, lsq, t.p1_tau));
        num = add(M, num, l4);
        IntClass utail = scale(M, 20, u);
        utail = add(M, utail, scale(M, 10, lsq));
        utail = add(M, utail, scale(M, 2, t.p1_tau));
        num = add(M, num, cup(M, u, utail));
        num = sub(M, num, scale(M, 12, cup(M, q1, u)));
        auto v4 = w.integer_value("main expression", num, 4);
        if (!v4) return w.rep;
        w.congruence("congruence_mod4", "main expression = 0 (mod 4)", *v4, 0, 4);
        return w.done();
    });
}

CheckReport spinc5_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l) {
    const TangentData& t = M.tangent;
    return over_q1(M, "spinc5_reduction", xi, l, [&](const IntClass& q1) {
        Work w(M, "spinc5_reduction");
        w.witness("l", l);
        w.pre_eq2("lift", rho2(M, l), xi.w2);
        w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
        require_dim8(M, w, xi);
        if (w.bad) return w.rep;

        w.eq_mod2("w6_zero", "w6(xi) = 0", xi.w6, M.zero2(6));
        w.eq_class("euler_zero", "e(xi) = 0", *xi.e, M.zero(8));

        IntClass q1sq = cup(M, q1, q1);
        IntClass num = add(M, xi.p2, q1sq);
        num = sub(M, num, cup(M, q1, t.p1_tau));
        num = add(M, num, cup(M, q1, cup(M, l, l)));
        auto val = w.integer_value("spin^c(5) expression", num, 2);
        if (!val) return w.rep;
        w.congruence("congruence_mod8", "expression = 0 (mod 8)", *val, 0, 8);
        return w.done();
    });
}

CheckReport five_dim_bundle_exists(const ManifoldModel& M, const IntClass& l, const IntClass& u,
                                   const IntClass& z8) {
    const TangentData& t = M.tangent;
    Work w(M, "five_dim_bundle_exists");
    w.witness("l", l);
    w.witness("u", u);
    w.witness("z", z8);
    w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);

    w.eq_mod2("sq2_u", "Sq2 rho2(u) = rho2(lu)", sq2(M, rho2(M, u)), rho2(M, cup(M, l, u)));

    // Solve 4w = u^2 - z. The free part of w is unique when solvable, and
    // evaluation kills torsion, so w[M] is determined.
    IntClass target = sub(M, cup(M, u, u), z8);
    bool solvable = true;
    IntClass wsol = M.zero(8);
    for (std::size_t i = 0; i < target.free.size(); ++i) {
        if (mod_reduce(target.free[i], 4) != 0) solvable = false;
        else wsol.free[i] = target.free[i] / 4;
    }
    const auto& orders = M.groups[8].torsion;
    for (std::size_t i = 0; i < target.torsion.size(); ++i) {
        Int g = gcd(Int(4), orders[i]);
        if (mod_reduce(target.torsion[i], g) != 0) solvable = false;
    }
    w.rep.cond("w_solvable", "4w = u^2 - z has a solution", solvable, M.format(target), "");
    if (!solvable) return w.done();
    w.witness("w", wsol);

    IntClass num = cup(M, u, add(M, sub(M, scale(M, 2, u), t.p1_tau), cup(M, l, l)));
    auto rhs = w.integer_value("5-bundle expression", num, 4);
    if (!rhs) return w.done();
    w.congruence("w_mod12", "w[M] = u(2u - p1(tau) + l^2)[M]/4 (mod 12)", evaluate(M, wsol),
                 *rhs, 12);
    return w.done();
}

CheckReport three_subbundle(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                            const IntClass& u) {
    const TangentData& t = M.tangent;

    Work head(M, "three_subbundle");
    head.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
    head.rep.pre("spin", xi.w2.is_zero(), M.format(xi.w2), "0");
    require_dim8(M, head, xi);
    if (head.bad || !xi.w2.is_zero() || !head.rep.find("pre:lift_w2M")->ok) {
        head.witness("l", l);
        head.witness("u", u);
        return head.done();
    }

    return over_q1(M, "three_subbundle", xi, M.zero(2), [&](const IntClass& q1) {
        Work w(M, "three_subbundle");
        w.witness("l", l);
        w.witness("u", u);
        w.pre_eq2("lift_w2M", rho2(M, l), t.w2_M);
        w.rep.pre("spin", xi.w2.is_zero(), M.format(xi.w2), "0");

        w.eq_class("euler_zero", "e(xi) = 0", *xi.e, M.zero(8));

        IntClass lsq = cup(M, l, l);
        IntClass l4 = cup(M, lsq, lsq);
        IntClass q1sq = cup(M, q1, q1);

        Mod2Class w6comb = add2(xi.w6, cup2(M, xi.w4, rho2(M, l)));
        w6comb = add2(w6comb, rho2(M, cup_pow(M, l, 3)));
        w.eq_mod2("w6_combination", "w6 + w4 rho2(l) + rho2(l^3) = 0", w6comb, M.zero2(6));

        w.eq_mod2("sq2_u", "Sq2 rho2(u) = rho2(lu)", sq2(M, rho2(M, u)),
                  rho2(M, cup(M, l, u)));

        IntClass n12 = cup(M, u, sub(M, sub(M, t.p1_tau, scale(M, 2, u)), lsq));
        auto v12 = w.integer_value("u expression", n12, 4);
        if (!v12) return w.rep;
        w.congruence("u_mod12", "u(p1(tau) - 2u - l^2)[M]/4 = 0 (mod 12)", *v12, 0, 12);

        IntClass num = add(M, xi.p2, q1sq);
        num = sub(M, num, cup(M, q1, t.p1_tau));
        num = sub(M, num, scale(M, 3, cup(M, lsq, q1)));
        num = add(M, num, cup(M, lsq, t.p1_tau));
        num = add(M, num, l4);
        IntClass utail = scale(M, 20, u);
        utail = add(M, utail, scale(M, 10, lsq));
        utail = add(M, utail, scale(M, 2, t.p1_tau));
        utail = sub(M, utail, scale(M, 12, q1));
        num = add(M, num, cup(M, u, utail));
        auto v4 = w.integer_value("main expression", num, 4);
        if (!v4) return w.rep;
        w.congruence("congruence_mod4", "main expression = 0 (mod 4)", *v4, 0, 4);
        return w.done();
    });
}

RealBundleData triality_transform(const ManifoldModel& M, const RealBundleData& xi) {
    if (xi.dim != 8 || !xi.e) throw degree_error("triality_transform: 8-dimensional data required");
    if (!xi.w2.is_zero()) throw data_error("triality_transform: bundle must be spin");
    auto cands = q1_candidates(M, xi, M.zero(2));
    if (cands.empty()) throw data_error("triality_transform: q1 undefined");
    IntClass q1 = cands.front();
    IntClass q1sq = cup(M, q1, q1);

    IntClass rem = sub(M, sub(M, xi.p2, q1sq), scale(M, 2, *xi.e));
    IntClass q2 = M.zero(8);
    for (std::size_t i = 0; i < rem.free.size(); ++i) {
        if (mod_reduce(rem.free[i], 4) != 0)
            throw data_error("triality_transform: p2 - q1^2 - 2e is not divisible by 4");
        q2.free[i] = rem.free[i] / 4;
    }
    const auto& orders = M.groups[8].torsion;
    for (std::size_t i = 0; i < rem.torsion.size(); ++i) {
        Int d = orders[i];
        Int g = gcd(Int(4), d);
        if (mod_reduce(rem.torsion[i], g) != 0)
            throw data_error("triality_transform: torsion part of p2 - q1^2 - 2e not divisible by 4");
        // canonical solution of 4t = r (mod d)
        Int d1 = d / g;
        Int t = mod_reduce((rem.torsion[i] / g) * mod_inverse(4 / g, d1), d1);
        q2.torsion[i] = t;
    }

    RealBundleData out = xi;
    out.e = scale(M, -1, q2);
    // p2' = q1^2 + 2e' + 4q2' with q2' = -e
    out.p2 = add(M, q1sq, scale(M, 2, *out.e));
    out.p2 = sub(M, out.p2, scale(M, 4, *xi.e));
    // q1, p1, w4 are fixed; w6 is carried unchanged
    return out;
}

}  // namespace spinc8::criteria
