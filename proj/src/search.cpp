#include "spinc8/search.hpp"

#include <algorithm>
#include <set>
#include <thread>

namespace spinc8::search {

namespace {

struct Grid {
    const ManifoldModel& M;
    const SearchSpace& space;
    // flattened mixed-radix digits: per slot, per free coordinate, then per
    // enumerated torsion coordinate
    struct Digit {
        std::size_t slot;
        bool is_torsion;
        std::size_t coord;
        Int lo;      // free: lower bound; torsion: 0
        Int count;   // number of values
    };
    std::vector<Digit> digits;
    Int total = 1;

    Grid(const ManifoldModel& m, const SearchSpace& s) : M(m), space(s) {
        for (std::size_t si = 0; si < s.slots.size(); ++si) {
            const Slot& slot = s.slots[si];
            const auto& g = M.groups.at(slot.degree);
            if (static_cast<int>(slot.free_bounds.size()) != g.free_rank)
                throw degree_error("sweep: slot '" + slot.name +
                                   "' bounds do not match free rank in degree " +
                                   std::to_string(slot.degree));
            for (std::size_t ci = 0; ci < slot.free_bounds.size(); ++ci) {
                auto [lo, hi] = slot.free_bounds[ci];
                if (hi < lo) throw degree_error("sweep: empty bound range");
                digits.push_back({si, false, ci, lo, hi - lo + 1});
                total *= hi - lo + 1;
            }
            if (slot.include_torsion)
                for (std::size_t ti = 0; ti < g.torsion.size(); ++ti) {
                    digits.push_back({si, true, ti, 0, g.torsion[ti]});
                    total *= g.torsion[ti];
                }
        }
    }

    std::vector<IntClass> decode(Int index) const {
        std::vector<IntClass> witness;
        witness.reserve(space.slots.size());
        for (const auto& slot : space.slots) witness.push_back(M.zero(slot.degree));
        // last digit varies fastest; walk from the back for lexicographic order
        for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
            Int v = it->lo + index % it->count;
            index /= it->count;
            if (it->is_torsion)
                witness[it->slot].torsion[it->coord] = v;
            else
                witness[it->slot].free[it->coord] = v;
        }
        return witness;
    }
};

}  // namespace

SolutionSet sweep(const ManifoldModel& M, const CriterionFn& fn, const SearchSpace& space,
                  const SweepOptions& options) {
    Grid grid(M, space);
    if (grid.total > options.max_points)
        throw data_error("sweep: space has " + grid.total.str() + " points, cap is " +
                         options.max_points.str());

    SolutionSet out;
    out.space = space;
    out.points_evaluated = grid.total;

    std::size_t n = static_cast<std::size_t>(grid.total);
    int threads = std::max(1, options.threads);
    std::vector<std::vector<SolutionPoint>> chunks(threads);
    std::vector<Int> errors(threads, Int(0));

    auto run_chunk = [&](int t) {
        std::size_t begin = n * t / threads, end = n * (t + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) {
            std::vector<IntClass> witness = grid.decode(Int(i));
            CheckReport rep = fn(witness);
            if (rep.passed())
                chunks[t].push_back({std::move(witness), std::move(rep)});
            else if (rep.verdict == Verdict::precondition_violated)
                errors[t] += 1;
        }
    };

    if (threads == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
        for (auto& th : pool) th.join();
    }

    for (int t = 0; t < threads; ++t) {
        out.data_errors += errors[t];
        for (auto& p : chunks[t]) out.solutions.push_back(std::move(p));
    }
    if (out.data_errors > 0)
        out.notes.push_back(out.data_errors.str() + " grid points reported data problems");
    return out;
}

SolutionSet sweep_affine(const ManifoldModel& M,
                         const std::function<CheckReport(const IntClass&)>& fn,
                         const std::string& slot_name, const IntClass& offset,
                         const IntClass& direction, const Int& lo, const Int& hi,
                         const SweepOptions& options) {
    if (hi < lo) throw degree_error("sweep_affine: empty range");
    Int total = hi - lo + 1;
    if (total > options.max_points)
        throw data_error("sweep_affine: range has " + total.str() + " points, cap is " +
                         options.max_points.str());

    SolutionSet out;
    {
        Slot s;
        s.name = slot_name;
        s.degree = offset.degree;
        s.free_bounds = {{lo, hi}};
        out.space.slots = {s};
    }
    out.points_evaluated = total;

    std::size_t n = static_cast<std::size_t>(total);
    int threads = std::max(1, options.threads);
    std::vector<std::vector<SolutionPoint>> chunks(threads);
    std::vector<Int> errors(threads, Int(0));

    auto run_chunk = [&](int t) {
        std::size_t begin = n * t / threads, end = n * (t + 1) / threads;
        for (std::size_t i = begin; i < end; ++i) {
            Int k = lo + Int(i);
            CheckReport rep = fn(add(M, offset, scale(M, k, direction)));
            if (rep.passed()) {
                SolutionPoint p;
                p.witness.push_back({offset.degree, {k}, {}});
                p.report = std::move(rep);
                chunks[t].push_back(std::move(p));
            } else if (rep.verdict == Verdict::precondition_violated) {
                errors[t] += 1;
            }
        }
    };
    if (threads == 1) {
        run_chunk(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(run_chunk, t);
        for (auto& th : pool) th.join();
    }
    for (int t = 0; t < threads; ++t) {
        out.data_errors += errors[t];
        for (auto& p : chunks[t]) out.solutions.push_back(std::move(p));
    }
    if (out.data_errors > 0)
        out.notes.push_back(out.data_errors.str() + " grid points reported data problems");
    return out;
}

std::vector<Int> default_trial_periods(const std::vector<Int>& criterion_moduli) {
    Int largest = 1;
    for (const auto& m : criterion_moduli) largest = std::max(largest, m);
    std::set<Int> periods;
    auto divisors_of = [&](const Int& n) {
        for (Int d = 1; d * d <= n; ++d)
            if (n % d == 0) {
                periods.insert(d);
                periods.insert(n / d);
            }
    };
    divisors_of(48);
    divisors_of(24 * largest);
    return {periods.begin(), periods.end()};
}

SolutionSet residue_summary(SolutionSet sol, const std::string& slot_name,
                            const std::vector<Int>& trial_periods) {
    // locate the swept coordinate
    std::size_t slot_index = sol.space.slots.size();
    int coord = -1;
    for (std::size_t si = 0; si < sol.space.slots.size(); ++si) {
        const Slot& s = sol.space.slots[si];
        if (s.name != slot_name) continue;
        slot_index = si;
        for (std::size_t ci = 0; ci < s.free_bounds.size(); ++ci)
            if (s.free_bounds[ci].second > s.free_bounds[ci].first) {
                if (coord >= 0) throw data_error("residue_summary: more than one swept coordinate");
                coord = static_cast<int>(ci);
            }
    }
    if (slot_index == sol.space.slots.size())
        throw data_error("residue_summary: unknown slot '" + slot_name + "'");
    if (coord < 0) throw data_error("residue_summary: slot '" + slot_name + "' is not swept");
    for (std::size_t si = 0; si < sol.space.slots.size(); ++si) {
        const Slot& s = sol.space.slots[si];
        for (std::size_t ci = 0; ci < s.free_bounds.size(); ++ci)
            if ((si != slot_index || static_cast<int>(ci) != coord) &&
                s.free_bounds[ci].second > s.free_bounds[ci].first)
                throw data_error("residue_summary: sweep is not one-dimensional");
        if (s.include_torsion)
            throw data_error("residue_summary: torsion enumeration makes the sweep "
                             "multi-dimensional");
    }

    auto [lo, hi] = sol.space.slots[slot_index].free_bounds[coord];
    Int window_len = hi - lo + 1;

    std::set<Int> members;
    for (const auto& p : sol.solutions) members.insert(p.witness[slot_index].free[coord]);
    auto member = [&](const Int& k) { return members.count(k) > 0; };

    std::vector<Int> periods = trial_periods;
    std::sort(periods.begin(), periods.end());
    bool any_feasible = false;
    for (const Int& P : periods) {
        if (P < 1) continue;
        if (window_len < 2 * P) continue;  // cannot certify with this window
        any_feasible = true;
        bool periodic = true;
        for (Int k = lo; k + P <= hi; k += 1)
            if (member(k) != member(k + P)) {
                periodic = false;
                break;
            }
        if (!periodic) continue;

        ResidueSummary summary;
        summary.period = P;
        summary.method = "window-verified";
        summary.window = {lo, hi};
        std::set<Int> residues;
        for (const auto& k : members) residues.insert(mod_reduce(k, P));
        summary.residues.assign(residues.begin(), residues.end());
        sol.summary = summary;
        sol.notes.push_back("residues certified by exhaustive sweep over [" + lo.str() + ", " +
                            hi.str() + "], period " + P.str());
        return sol;
    }
    if (!any_feasible)
        throw data_error("residue_summary: window of length " + window_len.str() +
                         " is too small for every trial period");
    return sol;  // no certified period
}

}  // namespace spinc8::search
