#pragma once

#include "spinc8/arith.hpp"
#include "spinc8/report.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinc8 {

/// One graded piece H^k(M;Z) in Smith normal form coordinates:
/// Z^free_rank + Z/d_1 + ... + Z/d_n with d_1 | d_2 | ... | d_n.
struct GroupStructure {
    int free_rank = 0;
    std::vector<Int> torsion;             // cyclic orders, divisibility-sorted
    std::vector<std::string> gen_names;   // free generators first, then torsion
    bool partial = false;                 // only a marked subspace is stored

    int basis_count() const { return free_rank + static_cast<int>(torsion.size()); }
    bool operator==(const GroupStructure&) const = default;
};

/// Element of H^k(M;Z). Torsion coordinates are kept reduced in [0, d_i).
struct IntClass {
    int degree = 0;
    std::vector<Int> free;
    std::vector<Int> torsion;

    bool is_zero() const;
    bool operator==(const IntClass&) const = default;
};

/// Element of H^k(M;F2) over the stored F2 basis.
struct Mod2Class {
    int degree = 0;
    std::vector<std::uint8_t> bits;

    bool is_zero() const;
    bool operator==(const Mod2Class&) const = default;
};

using Mat2 = std::vector<std::vector<std::uint8_t>>;  // F2 matrix, row-major

/// Integral cup structure constants: (deg_a, deg_b) -> basis x basis -> class.
struct CupTable {
    std::map<std::pair<int, int>, std::vector<std::vector<IntClass>>> entries;
    bool operator==(const CupTable&) const = default;
};

/// Parallel table for the F2 ring.
struct Cup2Table {
    std::map<std::pair<int, int>, std::vector<std::vector<Mod2Class>>> entries;
    bool operator==(const Cup2Table&) const = default;
};

/// Sq^2 on degrees 2 and 4. Degree 6 is not stored: on a closed oriented
/// 8-manifold it is forced to be cup with w2(M) (Wu closure).
struct Sq2Table {
    Mat2 deg2;  // H^2(F2) -> H^4(F2)
    Mat2 deg4;  // H^4(F2) -> H^6(F2)
    bool operator==(const Sq2Table&) const = default;
};

/// Characteristic data of the tangent bundle and the fixed spin^c structure.
struct TangentData {
    IntClass c;          // degree 2, rho2(c) = w2(M)
    IntClass p1_tau;     // degree 4
    IntClass q1_tau_c;   // degree 4, 2*q1 = p1 - c^2
    IntClass p2_tau;     // degree 8
    IntClass e_tau;      // degree 8, evaluates to chi
    Mod2Class w2_M;      // degree 2
    Int chi = 0;
    std::optional<Int> signature;
    bool operator==(const TangentData&) const = default;
};

/// Immutable after construction/validation; all operations on it are pure.
struct ManifoldModel {
    std::string name;
    std::array<GroupStructure, 9> groups;  // degrees 0..8
    std::array<int, 9> mod2_dim{};
    std::array<Mat2, 9> rho2_map;          // mod2_dim[k] x basis_count(k)
    CupTable cup_table;
    Cup2Table cup2_table;
    Sq2Table sq2_table;
    std::vector<Int> fundamental;          // functional on H^8 free coordinates
    TangentData tangent;
    std::map<std::string, std::string> provenance;

    int basis_count(int deg) const { return groups.at(deg).basis_count(); }

    IntClass zero(int deg) const;
    IntClass basis_class(int deg, int index) const;
    /// Class from full coordinate vector (free coords then torsion coords).
    IntClass make_class(int deg, std::vector<Int> coords) const;
    IntClass unit() const { return basis_class(0, 0); }

    Mod2Class zero2(int deg) const;
    Mod2Class basis_class2(int deg, int index) const;

    std::string gen_name(int deg, int index) const;
    /// Index of the named generator in degree deg, or -1.
    int gen_index(int deg, const std::string& name) const;

    std::string format(const IntClass& x) const;
    std::string format(const Mod2Class& x) const;

    /// Clamp torsion coordinates into canonical range.
    void reduce(IntClass& x) const;

    bool operator==(const ManifoldModel&) const = default;
};

// ---------------------------------------------------------------------------
// class arithmetic
// ---------------------------------------------------------------------------

IntClass add(const ManifoldModel& M, const IntClass& x, const IntClass& y);
IntClass sub(const ManifoldModel& M, const IntClass& x, const IntClass& y);
IntClass scale(const ManifoldModel& M, const Int& n, const IntClass& x);

Mod2Class add2(const Mod2Class& x, const Mod2Class& y);

/// Bilinear extension of the cup table. Commutative here (even degrees only).
IntClass cup(const ManifoldModel& M, const IntClass& x, const IntClass& y);
Mod2Class cup2(const ManifoldModel& M, const Mod2Class& x, const Mod2Class& y);
IntClass cup_pow(const ManifoldModel& M, const IntClass& x, int n);

/// Reduction mod 2, a ring homomorphism.
Mod2Class rho2(const ManifoldModel& M, const IntClass& x);

/// Sq^2 on degrees 2, 4 (table) and 6 (cup with w2(M)).
Mod2Class sq2(const ManifoldModel& M, const Mod2Class& x);

/// Evaluation of a degree-8 class against the fundamental class.
Int evaluate(const ManifoldModel& M, const IntClass& x);

struct RationalValue {
    Rat value;
    bool integral = false;
};

/// evaluate(num)/denom as an exact rational, with an integrality flag.
RationalValue eval_rational(const ManifoldModel& M, const IntClass& num, const Int& denom);

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

/// Ring-axiom audit: torsion well-definedness of the cup tables,
/// commutativity, associativity, rho2 multiplicativity, Sq^2 shape and the
/// degree-2 cup-square law, fundamental-class surjectivity, and the
/// degree-2 x degree-6 pairing killing torsion.
CheckReport validate_ring(const ManifoldModel& M);

/// Tangent-data invariants (2 q1 = p1 - c^2, rho2(c) = w2(M),
/// e[M] = chi, declared signature). Throws data_error on violation.
void validate_tangent(const ManifoldModel& M);

/// Solve for membership of x in the image of rho2 on degree x.degree.
bool in_rho2_image(const ManifoldModel& M, const Mod2Class& x);

}  // namespace spinc8
