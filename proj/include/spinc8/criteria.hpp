#pragma once

#include "spinc8/bundles.hpp"
#include "spinc8/report.hpp"

namespace spinc8::criteria {

// Chern-class realizability ------------------------------------------------

/// (l,u,v) realizable as (c1,c2,c3) of a complex bundle off a point:
/// Sq2 rho2(u) + rho2(lu) = rho2(v).
CheckReport chern_realizable_punctured(const ManifoldModel& M, const IntClass& l,
                                       const IntClass& u, const IntClass& v);

/// Extension over the whole manifold with c4 = w: w[M] = I (mod 6), where
/// I = (u(u + q1(tau;c) - 2l^2 - 3cl - c^2) + (2l+3c)v)[M] / 2.
CheckReport chern_realizable_closed(const ManifoldModel& M, const IntClass& l, const IntClass& u,
                                    const IntClass& v, const IntClass& w);

// Isomorphism tests ---------------------------------------------------------

CheckReport stably_isomorphic(const ManifoldModel& M, const RealBundleData& xi,
                              const RealBundleData& xi2, const IntClass& l);

CheckReport isomorphic_oriented(const ManifoldModel& M, const RealBundleData& xi,
                                const RealBundleData& xi2, const IntClass& l);

// Structure-group reductions ------------------------------------------------

/// Reduction to U(4) with c1 = l, witness v for c3.
CheckReport complex_structure(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                              const IntClass& v);

/// Diagnostic congruence mod 6 satisfied by every genuine bundle.
CheckReport congruence_4B(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l);

/// Reduction to Spin^c(6) with characteristic class l and Euler class v.
CheckReport spinc6_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& v);

/// xi = su(zeta) for a rank-3 zeta with Chern classes (l, u, v).
CheckReport u3_adjoint(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                       const IntClass& u, const IntClass& v);

/// SU(3)-structure on a spin manifold, witness u for -q1/3.
CheckReport su3_structure(const ManifoldModel& M, const RealBundleData& xi, const IntClass& u);

/// Stable quaternionic structure off a point on a rank-4 complex bundle.
CheckReport hlambda_stable_punctured(const ManifoldModel& M, const ComplexBundleData& z,
                                     const IntClass& l);

/// Rank-2 quaternionic bundle with c2 = u, c4 = w exists.
CheckReport hlambda_realizable(const ManifoldModel& M, const IntClass& l, const IntClass& u,
                               const IntClass& w);

/// Quaternionic structure on a given rank-4 complex bundle.
CheckReport hlambda_on_complex(const ManifoldModel& M, const ComplexBundleData& z,
                               const IntClass& l);

/// Quaternionic line bundle with c2 = u exists.
CheckReport hlambda_line_exists(const ManifoldModel& M, const IntClass& l, const IntClass& u);

/// Reduction to Spin^c(4) with witnesses u_plus, u_minus.
CheckReport spinc4_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& u_plus, const IntClass& u_minus);

/// 3-dimensional bundle alpha with w2 = rho2(l), q1(alpha;l) = 2u exists.
CheckReport three_dim_bundle_exists(const ManifoldModel& M, const IntClass& l, const IntClass& u);

/// Reduction to Spin^c(3) with witness u.
CheckReport spinc3_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& u);

/// Quaternionic module structure over C + lambda on a real bundle.
CheckReport hlambda_on_real(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l);

/// Module structure over R + alpha, where w2(alpha) = rho2(l), q1(alpha;l) = 2u.
CheckReport halpha_structure(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                             const IntClass& u);

/// Reduction to Spin^c(5) with characteristic class l.
CheckReport spinc5_reduction(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l);

/// 5-dimensional bundle with q1 = u, p2 = z exists.
CheckReport five_dim_bundle_exists(const ManifoldModel& M, const IntClass& l, const IntClass& u,
                                   const IntClass& z);

/// 3-dimensional subbundle of xi with q1(alpha;l) = 2u.
CheckReport three_subbundle(const ManifoldModel& M, const RealBundleData& xi, const IntClass& l,
                            const IntClass& u);

// Triality ------------------------------------------------------------------

/// The outer-automorphism transform on spin bundles: fixes q1, swaps
/// (e, q2) to (-q2, -e), where q2 = (p2 - q1^2 - 2e)/4.
RealBundleData triality_transform(const ManifoldModel& M, const RealBundleData& xi);

}  // namespace spinc8::criteria
