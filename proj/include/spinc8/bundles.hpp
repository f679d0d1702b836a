#pragma once

#include "spinc8/cohomology.hpp"

#include <optional>
#include <vector>

namespace spinc8 {

/// Characteristic data of an oriented real bundle over the loaded model.
/// The Euler class is carried only when deg e = dim is representable
/// (dim in 4..8, even); odd-dimensional bundles have no stored e.
struct RealBundleData {
    int dim = 8;
    Mod2Class w2, w4, w6;   // degrees 2, 4, 6
    IntClass p1;            // degree 4
    IntClass p2;            // degree 8
    std::optional<IntClass> e;

    bool spin() const { return w2.is_zero(); }
};

struct ComplexBundleData {
    int rank = 4;
    IntClass c1, c2, c3, c4;  // degrees 2, 4, 6, 8 (zero beyond the rank)
};

// ---------------------------------------------------------------------------
// constructors
// ---------------------------------------------------------------------------

RealBundleData tangent_bundle(const ManifoldModel& M);
RealBundleData trivial_real(const ManifoldModel& M, int dim = 8);
ComplexBundleData trivial_complex(const ManifoldModel& M, int rank);
ComplexBundleData complex_line(const ManifoldModel& M, const IntClass& c1);
ComplexBundleData whitney_sum(const ManifoldModel& M, const ComplexBundleData& a,
                              const ComplexBundleData& b);

/// Quaternion-algebra bundle C + lambda as a rank-2 complex bundle.
ComplexBundleData h_lambda(const ManifoldModel& M, const IntClass& l);

// ---------------------------------------------------------------------------
// q1 calculus
// ---------------------------------------------------------------------------

struct Q1Lift {
    IntClass canonical;           // torsion coordinates in [0, d/2)
    bool ambiguous = false;       // even-order torsion admits two halvings
    std::vector<IntClass> all;    // every halving
};

/// Solve 2*q1 = p1 - l^2. Throws data_error when no halving exists.
Q1Lift q1_from_lift(const ManifoldModel& M, const IntClass& p1, const IntClass& l);

/// q1 at the rebased lift l + 2m: q1 - 2lm - 2m^2.
IntClass rebase_lift(const ManifoldModel& M, const IntClass& q1, const IntClass& l,
                     const IntClass& m);

/// Halvings of p1(xi) - l^2 whose mod-2 reduction matches w4(xi).
/// Empty result means the (p1, l, w4) data is inconsistent.
std::vector<IntClass> q1_candidates(const ManifoldModel& M, const RealBundleData& xi,
                                    const IntClass& l);

// ---------------------------------------------------------------------------
// class-formula constructors
// ---------------------------------------------------------------------------

/// Underlying real bundle of a complex one.
RealBundleData realify(const ManifoldModel& M, const ComplexBundleData& z);

/// su(zeta) for rank-3 zeta: spin, e = 0, q1 = c1^2 - 3c2, p2 = q1^2.
RealBundleData su_adjoint_bundle(const ManifoldModel& M, const ComplexBundleData& z);

/// 6-dimensional bundle eta built from rank-4 zeta with c1 = 2l.
RealBundleData spinc6_eta(const ManifoldModel& M, const ComplexBundleData& z, const IntClass& l);

/// 4-dimensional bundle from a pair of quaternionic line bundles.
RealBundleData spinc4_eta(const ManifoldModel& M, const IntClass& u_plus, const IntClass& u_minus,
                          const IntClass& l);

/// 5-dimensional bundle from a rank-2 quaternionic zeta (rank-4 complex, c1 = 2l).
RealBundleData spinc5_eta(const ManifoldModel& M, const ComplexBundleData& z, const IntClass& l);

/// 8-dimensional bundle eta (x)_{H_lambda} zeta^*, where c1(eta) = 2l,
/// c2(zeta) = -u. Result is spin and satisfies p2 - q1^2 - 2e = 0.
RealBundleData halpha_total(const ManifoldModel& M, const IntClass& u, const IntClass& eta_c2,
                            const IntClass& eta_c4, const IntClass& l);

// ---------------------------------------------------------------------------
// the spin^c index
// ---------------------------------------------------------------------------

/// (e^{c/2} Ahat(tau M) ch(z))[M], exact. c defaults to the model's
/// spin^c class; pass c_override for a different characteristic class.
Rat spinc_index(const ManifoldModel& M, const ComplexBundleData& z,
                const std::optional<IntClass>& c_override = std::nullopt);

/// Index of the complexification C (x) x, computed from Pontrjagin data.
Rat index_of_complexified(const ManifoldModel& M, const RealBundleData& x,
                          const std::optional<IntClass>& c_override = std::nullopt);

}  // namespace spinc8
