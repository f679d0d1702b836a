#include "spinc8/report.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace spinc8 {

using ordered_json = nlohmann::ordered_json;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::precondition_violated: return "precondition-violated";
    }
    return "?";
}

const Condition* CheckReport::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

Condition& CheckReport::cond(std::string name, std::string relation, bool ok, std::string left,
                             std::string right) {
    conditions.push_back({std::move(name), std::move(relation), std::move(left), std::move(right), ok});
    return conditions.back();
}

Condition& CheckReport::pre(std::string name, bool ok, std::string left, std::string right) {
    return cond("pre:" + std::move(name), "precondition", ok, std::move(left), std::move(right));
}

void CheckReport::data_problem(std::string n) {
    notes.push_back("data error: " + n);
    conditions.push_back({"data", "input data consistent", "", std::move(n), false});
    verdict = Verdict::precondition_violated;
}

void CheckReport::finalize() {
    bool any_fail = false;
    for (const auto& c : conditions) {
        if (c.ok) continue;
        if (c.name.rfind("pre:", 0) == 0 || c.name == "data") {
            verdict = Verdict::precondition_violated;
            return;
        }
        any_fail = true;
    }
    if (verdict == Verdict::precondition_violated) return;
    verdict = any_fail ? Verdict::fail : Verdict::pass;
}

std::string render_text(const CheckReport& r) {
    std::ostringstream os;
    os << r.criterion << ": " << to_string(r.verdict) << "\n";
    for (const auto& c : r.conditions) {
        os << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.name << ": " << c.relation;
        if (!c.left.empty() || !c.right.empty()) {
            os << "  (" << c.left;
            if (!c.right.empty()) os << " | " << c.right;
            os << ")";
        }
        os << "\n";
    }
    for (const auto& [k, v] : r.witnesses) os << "  witness " << k << " = " << v << "\n";
    for (const auto& n : r.notes) os << "  note: " << n << "\n";
    return os.str();
}

std::string render_json(const CheckReport& r) {
    ordered_json j;
    j["criterion"] = r.criterion;
    j["verdict"] = to_string(r.verdict);
    j["conditions"] = ordered_json::array();
    for (const auto& c : r.conditions) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["relation"] = c.relation;
        jc["left"] = c.left;
        jc["right"] = c.right;
        jc["ok"] = c.ok;
        j["conditions"].push_back(jc);
    }
    j["witnesses"] = ordered_json::object();
    for (const auto& [k, v] : r.witnesses) j["witnesses"][k] = v;
    j["notes"] = r.notes;
    return j.dump(2) + "\n";
}

}  // namespace spinc8
