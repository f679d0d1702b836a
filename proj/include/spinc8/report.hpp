#pragma once

#include "spinc8/arith.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinc8 {

enum class Verdict { pass, fail, precondition_violated };

std::string to_string(Verdict v);

/// One named sub-condition of a criterion, with the computed values on both
/// sides of the required relation.
struct Condition {
    std::string name;
    std::string relation;
    std::string left;
    std::string right;
    bool ok = false;
};

struct CheckReport {
    std::string criterion;
    Verdict verdict = Verdict::pass;
    std::vector<Condition> conditions;
    std::vector<std::pair<std::string, std::string>> witnesses;
    std::vector<std::string> notes;

    bool passed() const { return verdict == Verdict::pass; }
    const Condition* find(const std::string& name) const;

    Condition& cond(std::string name, std::string relation, bool ok,
                    std::string left = "", std::string right = "");
    /// Precondition; a failing one forces verdict precondition_violated.
    Condition& pre(std::string name, bool ok, std::string left = "", std::string right = "");
    void note(std::string n) { notes.push_back(std::move(n)); }
    /// Inconsistent input data (e.g. a non-integral expression the theory
    /// guarantees integral). Not a mathematical failure of the criterion.
    void data_problem(std::string n);

    /// Recompute the verdict from the recorded conditions.
    void finalize();
};

std::string render_text(const CheckReport& r);
/// Deterministic machine-readable serialization (stable key order, no floats).
std::string render_json(const CheckReport& r);

}  // namespace spinc8
