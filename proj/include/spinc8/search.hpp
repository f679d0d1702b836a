#pragma once

#include "spinc8/cohomology.hpp"
#include "spinc8/report.hpp"

#include <functional>
#include <optional>

namespace spinc8::search {

/// One witness slot of a criterion: a box of free coordinates, with torsion
/// coordinates either pinned to zero or enumerated exhaustively.
struct Slot {
    std::string name;
    int degree = 4;
    std::vector<std::pair<Int, Int>> free_bounds;  // inclusive [lo, hi] per coordinate
    bool include_torsion = false;
};

struct SearchSpace {
    std::vector<Slot> slots;
};

using CriterionFn = std::function<CheckReport(const std::vector<IntClass>&)>;

struct SolutionPoint {
    std::vector<IntClass> witness;
    CheckReport report;
};

struct ResidueSummary {
    Int period;
    std::vector<Int> residues;    // sorted, in [0, period)
    std::string method;           // "window-verified"
    std::pair<Int, Int> window;
};

struct SolutionSet {
    SearchSpace space;
    std::vector<SolutionPoint> solutions;   // lexicographic order, pass verdicts only
    Int points_evaluated = 0;
    Int data_errors = 0;
    std::vector<std::string> notes;
    std::optional<ResidueSummary> summary;
};

struct SweepOptions {
    Int max_points = 1000000;
    int threads = 1;   // partitioned execution must agree with serial
};

/// Exhaustive lexicographic evaluation of the criterion over the box.
/// Throws data_error when the space exceeds options.max_points, with a size
/// estimate in the message.
SolutionSet sweep(const ManifoldModel& M, const CriterionFn& fn, const SearchSpace& space,
                  const SweepOptions& options = {});

/// One-parameter affine sweep: witness = offset + k * direction for k in
/// [lo, hi]. Runs under the same deterministic partitioned-merge contract as
/// the box sweep; the recorded witness per solution is the bare coefficient.
SolutionSet sweep_affine(const ManifoldModel& M,
                         const std::function<CheckReport(const IntClass&)>& fn,
                         const std::string& slot_name, const IntClass& offset,
                         const IntClass& direction, const Int& lo, const Int& hi,
                         const SweepOptions& options = {});

/// Divisors of 48 and of 24 * (largest criterion modulus), sorted.
std::vector<Int> default_trial_periods(const std::vector<Int>& criterion_moduli);

/// Attach a window-verified residue summary for a one-parameter sweep
/// (exactly one free coordinate with lo < hi, torsion pinned). The smallest
/// trial period P whose shift-invariance holds across the whole window is
/// certified; the window must cover at least two full periods.
SolutionSet residue_summary(SolutionSet sol, const std::string& slot_name,
                            const std::vector<Int>& trial_periods);

}  // namespace spinc8::search
