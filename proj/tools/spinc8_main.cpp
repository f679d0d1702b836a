// Command-line front end: validate models, run single criterion checks, run
// parameter sweeps with residue summaries, list the catalog, compute indices.
//
// Exit codes: 0 pass, 1 fail / empty sweep, 2 precondition or data error,
// 64 bad arguments.

#include "spinc8/catalog.hpp"
#include "spinc8/criteria.hpp"
#include "spinc8/search.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace spinc8;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitDataError = 2;
constexpr int kExitUsage = 64;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// --------------------------------------------------------------------------
// witness expressions: sums of [coeff '*'] generator terms, with the single
// reserved sweep coefficient `k`, e.g. "0", "5*x", "k*a", "k*s2+k*s11", "-2*x"
// --------------------------------------------------------------------------

struct ClassExpr {
    IntClass offset;
    IntClass direction;  // coefficient of k
    bool has_k = false;
};

ClassExpr parse_class_expr(const ManifoldModel& M, int degree, std::string text) {
    ClassExpr out{M.zero(degree), M.zero(degree), false};
    std::erase_if(text, [](char c) { return c == ' ' || c == '\t'; });
    if (text.empty() || text == "0") return out;

    std::size_t pos = 0;
    while (pos < text.size()) {
        Int sign = 1;
        if (text[pos] == '+') ++pos;
        else if (text[pos] == '-') { sign = -1; ++pos; }
        std::size_t end = pos;
        while (end < text.size() && text[end] != '+' && text[end] != '-') ++end;
        std::string term = text.substr(pos, end - pos);
        pos = end;
        if (term.empty()) throw parse_error("bad class expression '" + text + "'");

        std::string coeff_part, gen_part;
        auto star = term.find('*');
        if (star != std::string::npos) {
            coeff_part = term.substr(0, star);
            gen_part = term.substr(star + 1);
        } else if (std::isdigit(static_cast<unsigned char>(term[0])) || term == "k") {
            coeff_part = term;
        } else {
            gen_part = term;
        }

        bool k_term = coeff_part == "k";
        Int coeff = k_term || coeff_part.empty() ? Int(1) : parse_int(coeff_part);

        IntClass gen = M.zero(degree);
        if (gen_part.empty()) {
            if (coeff == 0 && !k_term) continue;
            if (M.basis_count(degree) != 1)
                throw parse_error("bare coefficient '" + term + "' is ambiguous in degree " +
                                  std::to_string(degree) + "; name a generator");
            gen = M.basis_class(degree, 0);
        } else {
            int idx = M.gen_index(degree, gen_part);
            if (idx < 0)
                throw parse_error("unknown degree-" + std::to_string(degree) + " generator '" +
                                  gen_part + "'");
            gen = M.basis_class(degree, idx);
        }
        IntClass contribution = scale(M, sign * coeff, gen);
        if (k_term) {
            out.has_k = true;
            out.direction = add(M, out.direction, scale(M, sign, gen));
        } else {
            out.offset = add(M, out.offset, contribution);
        }
    }
    return out;
}

struct Range {
    Int lo = 0, hi = 0;
};

Range parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) throw parse_error("range must look like lo..hi");
    Range r;
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
    if (r.hi < r.lo) throw parse_error("empty range " + text);
    return r;
}

// --------------------------------------------------------------------------

ManifoldModel resolve_model(const std::string& manifold, const std::string& file) {
    if (!file.empty()) return load_model(file);
    if (!manifold.empty()) return catalog::builtin(manifold).model;
    throw parse_error("need --manifold NAME or --file PATH");
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::pass: return kExitPass;
        case Verdict::fail: return kExitFail;
        case Verdict::precondition_violated: return kExitDataError;
    }
    return kExitDataError;
}

void write_out(const std::string& path, const std::string& payload) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << payload;
}

ordered_json solution_set_json(const std::string& criterion, const search::SolutionSet& sol) {
    ordered_json j;
    j["criterion"] = criterion;
    j["evaluated"] = sol.points_evaluated.str();
    j["solutions"] = ordered_json::array();
    for (const auto& p : sol.solutions) {
        ordered_json w = ordered_json::object();
        for (std::size_t i = 0; i < p.witness.size(); ++i)
            w[sol.space.slots[i].name] =
                p.witness[i].free.empty() ? "0" : p.witness[i].free[0].str();
        j["solutions"].push_back(w);
    }
    if (sol.summary) {
        ordered_json s;
        s["period"] = sol.summary->period.str();
        ordered_json residues = ordered_json::array();
        for (const auto& r : sol.summary->residues) residues.push_back(r.str());
        s["residues"] = residues;
        s["method"] = sol.summary->method;
        s["window"] = {sol.summary->window.first.str(), sol.summary->window.second.str()};
        j["summary"] = s;
    }
    j["notes"] = sol.notes;
    return j;
}

struct CheckArgs {
    std::string manifold, file, bundle = "tangent", bundle_file, bundle2, bundle_file2;
    std::string chern;
    std::string criterion;
    std::string l = "0", u = "0", v = "0", w = "0", u_plus = "0", u_minus = "0", z = "0";
    std::string l_range, u_range, v_range, w_range, u_plus_range, u_minus_range, z_range;
    std::string summary_periods;
    std::string out;
    bool stable = false;
    int threads = 1;
};

RealBundleData resolve_real_bundle(const ManifoldModel& M, const std::string& kind,
                                   const std::string& file) {
    if (!file.empty()) return parse_real_bundle(M, slurp(file));
    if (kind == "tangent") return tangent_bundle(M);
    if (kind == "trivial") return trivial_real(M);
    throw parse_error("unknown bundle '" + kind + "' (expected tangent, trivial or a file)");
}

struct CriterionCall {
    std::vector<std::string> slots;  // witness slots, in order
    std::function<CheckReport(const ManifoldModel&, const std::vector<IntClass>&)> run;
};

CriterionCall make_call(const ManifoldModel& M, const CheckArgs& args) {
    const std::string& name = args.criterion;
    auto xi = [&M, &args] { return resolve_real_bundle(M, args.bundle, args.bundle_file); };

    auto complex_data = [&M, &args]() -> ComplexBundleData {
        if (!args.chern.empty()) {
            ComplexBundleData z = trivial_complex(M, 4);
            std::vector<std::string> parts;
            std::stringstream ss(args.chern);
            std::string item;
            while (std::getline(ss, item, ',')) parts.push_back(item);
            if (parts.size() != 4) throw parse_error("--chern needs c1,c2,c3,c4");
            auto fixed = [&M](int deg, const std::string& e) {
                ClassExpr ce = parse_class_expr(M, deg, e);
                if (ce.has_k) throw parse_error("--chern does not take the sweep parameter");
                return ce.offset;
            };
            z.c1 = fixed(2, parts[0]);
            z.c2 = fixed(4, parts[1]);
            z.c3 = fixed(6, parts[2]);
            z.c4 = fixed(8, parts[3]);
            return z;
        }
        if (!args.bundle_file.empty()) return parse_complex_bundle(M, slurp(args.bundle_file));
        throw parse_error("criterion needs --chern or a complex --bundle-file");
    };

    if (name == "complex")
        return {{"l", "v"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::complex_structure(m, xi(), w[0], w[1]);
                }};
    if (name == "spinc6")
        return {{"l", "v"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::spinc6_reduction(m, xi(), w[0], w[1]);
                }};
    if (name == "spinc5")
        return {{"l"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::spinc5_reduction(m, xi(), w[0]);
                }};
    if (name == "spinc4")
        return {{"l", "u_plus", "u_minus"},
                [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::spinc4_reduction(m, xi(), w[0], w[1], w[2]);
                }};
    if (name == "spinc3")
        return {{"l", "u"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::spinc3_reduction(m, xi(), w[0], w[1]);
                }};
    if (name == "u3")
        return {{"l", "u", "v"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::u3_adjoint(m, xi(), w[0], w[1], w[2]);
                }};
    if (name == "su3")
        return {{"u"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::su3_structure(m, xi(), w[0]);
                }};
    if (name == "hlambda") {
        if (!args.chern.empty())
            return {{"l"}, [complex_data](const ManifoldModel& m, const std::vector<IntClass>& w) {
                        return criteria::hlambda_on_complex(m, complex_data(), w[0]);
                    }};
        return {{"l"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::hlambda_on_real(m, xi(), w[0]);
                }};
    }
    if (name == "hlambda-line")
        return {{"l", "u"}, [](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::hlambda_line_exists(m, w[0], w[1]);
                }};
    if (name == "halpha")
        return {{"l", "u"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::halpha_structure(m, xi(), w[0], w[1]);
                }};
    if (name == "3sub")
        return {{"l", "u"}, [xi](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::three_subbundle(m, xi(), w[0], w[1]);
                }};
    if (name == "5dim")
        return {{"l", "u", "z"}, [](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::five_dim_bundle_exists(m, w[0], w[1], w[2]);
                }};
    if (name == "3dim")
        return {{"l", "u"}, [](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::three_dim_bundle_exists(m, w[0], w[1]);
                }};
    if (name == "chern") {
        if (args.w_range.empty() && args.w == "0")
            return {{"l", "u", "v"}, [](const ManifoldModel& m, const std::vector<IntClass>& w) {
                        return criteria::chern_realizable_punctured(m, w[0], w[1], w[2]);
                    }};
        return {{"l", "u", "v", "w"}, [](const ManifoldModel& m, const std::vector<IntClass>& w) {
                    return criteria::chern_realizable_closed(m, w[0], w[1], w[2], w[3]);
                }};
    }
    if (name == "iso") {
        bool stable = args.stable;
        std::string bundle2 = args.bundle2.empty() ? "tangent" : args.bundle2;
        std::string bundle_file2 = args.bundle_file2;
        return {{"l"}, [xi, bundle2, bundle_file2, stable](const ManifoldModel& m,
                                                           const std::vector<IntClass>& w) {
                    RealBundleData other = resolve_real_bundle(m, bundle2, bundle_file2);
                    return stable ? criteria::stably_isomorphic(m, xi(), other, w[0])
                                  : criteria::isomorphic_oriented(m, xi(), other, w[0]);
                }};
    }
    throw parse_error("unknown criterion '" + name + "'");
}

int slot_degree(const std::string& slot) {
    if (slot == "l") return 2;
    if (slot == "u" || slot == "u_plus" || slot == "u_minus") return 4;
    if (slot == "v") return 6;
    return 8;  // w, z
}

const std::string& slot_text(const CheckArgs& a, const std::string& slot) {
    if (slot == "l") return a.l;
    if (slot == "u") return a.u;
    if (slot == "v") return a.v;
    if (slot == "w") return a.w;
    if (slot == "u_plus") return a.u_plus;
    if (slot == "u_minus") return a.u_minus;
    return a.z;
}

const std::string& slot_range(const CheckArgs& a, const std::string& slot) {
    if (slot == "l") return a.l_range;
    if (slot == "u") return a.u_range;
    if (slot == "v") return a.v_range;
    if (slot == "w") return a.w_range;
    if (slot == "u_plus") return a.u_plus_range;
    if (slot == "u_minus") return a.u_minus_range;
    return a.z_range;
}

std::vector<Int> criterion_moduli(const std::string& name) {
    if (name == "chern" || name == "u3" || name == "su3") return {Int(6)};
    if (name == "complex") return {Int(2)};
    if (name == "spinc6" || name == "spinc3") return {Int(4)};
    if (name == "hlambda-line" || name == "3dim") return {Int(12)};
    if (name == "spinc4" || name == "halpha" || name == "3sub" || name == "5dim")
        return {Int(12), Int(4)};
    if (name == "hlambda") return {Int(12), Int(4)};
    if (name == "spinc5") return {Int(8)};
    return {Int(12)};
}

int run_check(const CheckArgs& args, bool allow_ranges) {
    ManifoldModel M = resolve_model(args.manifold, args.file);
    CriterionCall call = make_call(M, args);

    // parse witnesses; at most one slot may carry the k parameter + a range
    std::vector<ClassExpr> exprs;
    int swept = -1;
    for (std::size_t i = 0; i < call.slots.size(); ++i) {
        const std::string& slot = call.slots[i];
        ClassExpr e = parse_class_expr(M, slot_degree(slot), slot_text(args, slot));
        std::string flag = slot;
        for (auto& ch : flag)
            if (ch == '_') ch = '-';
        bool ranged = !slot_range(args, slot).empty();
        if (e.has_k && !ranged)
            throw parse_error("slot '" + slot + "' uses k: add --" + flag + "-range lo..hi");
        if (ranged && !e.has_k)
            throw parse_error("--" + flag + "-range needs a k term in --" + flag);
        if (ranged) {
            if (!allow_ranges) throw parse_error("ranges need the search subcommand");
            if (swept >= 0) throw parse_error("only one slot may be swept");
            swept = static_cast<int>(i);
        }
        exprs.push_back(std::move(e));
    }

    if (swept < 0) {
        std::vector<IntClass> witness;
        for (const auto& e : exprs) witness.push_back(e.offset);
        CheckReport rep = call.run(M, witness);
        std::cout << render_text(rep);
        if (!args.out.empty()) write_out(args.out, render_json(rep));
        return verdict_exit(rep.verdict);
    }

    // sweep the k coefficient over the range (deterministic, parallelizable)
    Range range = parse_range(slot_range(args, call.slots[swept]));
    auto fn = [&](const IntClass& swept_witness) {
        std::vector<IntClass> witness;
        for (std::size_t i = 0; i < exprs.size(); ++i)
            witness.push_back(static_cast<int>(i) == swept ? swept_witness : exprs[i].offset);
        return call.run(M, witness);
    };
    search::SweepOptions opt;
    opt.threads = args.threads;
    search::SolutionSet sol =
        search::sweep_affine(M, fn, call.slots[swept], exprs[swept].offset,
                             exprs[swept].direction, range.lo, range.hi, opt);

    std::vector<Int> periods;
    if (!args.summary_periods.empty()) {
        std::stringstream ss(args.summary_periods);
        std::string item;
        while (std::getline(ss, item, ',')) periods.push_back(parse_int(item));
    } else {
        periods = search::default_trial_periods(criterion_moduli(args.criterion));
    }
    try {
        sol = search::residue_summary(std::move(sol), call.slots[swept], periods);
    } catch (const data_error& e) {
        sol.notes.push_back(e.what());
    }

    std::cout << args.criterion << " sweep over " << call.slots[swept] << " in [" << range.lo.str()
              << ", " << range.hi.str() << "]: " << sol.solutions.size() << " solutions\n";
    std::cout << "  k =";
    for (const auto& p : sol.solutions) std::cout << " " << p.witness[0].free[0].str();
    std::cout << "\n";
    if (sol.summary) {
        std::cout << "  k = ";
        for (std::size_t i = 0; i < sol.summary->residues.size(); ++i)
            std::cout << (i ? ", " : "") << sol.summary->residues[i].str();
        std::cout << " (mod " << sol.summary->period.str() << ")  [" << sol.summary->method
                  << "]\n";
    }
    for (const auto& n : sol.notes) std::cout << "  note: " << n << "\n";
    if (!args.out.empty())
        write_out(args.out, solution_set_json(args.criterion, sol).dump(2) + "\n");
    return sol.solutions.empty() ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-group reduction criteria for bundles over 8-manifolds"};
    app.require_subcommand(1);

    std::string v_file, v_manifold;
    auto* validate = app.add_subcommand("validate", "run the ring and tangent audits");
    validate->add_option("--file", v_file);
    validate->add_option("--manifold", v_manifold);

    CheckArgs ca;
    auto add_check_options = [&ca](CLI::App* cmd, bool with_ranges) {
        cmd->add_option("--manifold", ca.manifold);
        cmd->add_option("--file", ca.file);
        cmd->add_option("--bundle", ca.bundle, "tangent (default) or trivial");
        cmd->add_option("--bundle-file", ca.bundle_file);
        cmd->add_option("--bundle2", ca.bundle2);
        cmd->add_option("--bundle-file2", ca.bundle_file2);
        cmd->add_option("--chern", ca.chern, "c1,c2,c3,c4 class expressions");
        cmd->add_option("--criterion", ca.criterion)->required();
        cmd->add_option("--l", ca.l);
        cmd->add_option("--u", ca.u);
        cmd->add_option("--v", ca.v);
        cmd->add_option("--w", ca.w);
        cmd->add_option("--u-plus", ca.u_plus);
        cmd->add_option("--u-minus", ca.u_minus);
        cmd->add_option("--z", ca.z);
        cmd->add_option("--out", ca.out, "machine-readable report file");
        cmd->add_flag("--stable", ca.stable, "stable isomorphism for criterion iso");
        if (with_ranges) {
            cmd->add_option("--l-range", ca.l_range);
            cmd->add_option("--u-range", ca.u_range);
            cmd->add_option("--v-range", ca.v_range);
            cmd->add_option("--w-range", ca.w_range);
            cmd->add_option("--u-plus-range", ca.u_plus_range);
            cmd->add_option("--u-minus-range", ca.u_minus_range);
            cmd->add_option("--z-range", ca.z_range);
            cmd->add_option("--summary-periods", ca.summary_periods, "comma-separated");
            cmd->add_option("--threads", ca.threads);
        }
    };
    auto* check = app.add_subcommand("check", "evaluate one criterion");
    add_check_options(check, false);
    auto* searchcmd = app.add_subcommand("search", "sweep a witness parameter and summarize");
    add_check_options(searchcmd, true);

    auto* cat = app.add_subcommand("catalog", "built-in manifold models");
    auto* cat_list = cat->add_subcommand("list");
    std::string show_name;
    auto* cat_show = cat->add_subcommand("show");
    cat_show->add_option("name", show_name)->required();

    std::string i_manifold, i_file, i_chern, i_c, i_out;
    int i_rank = 4;
    auto* index = app.add_subcommand("index", "spin^c index of a complex bundle");
    index->add_option("--manifold", i_manifold);
    index->add_option("--file", i_file);
    index->add_option("--chern", i_chern)->required();
    index->add_option("--rank", i_rank, "complex rank (default 4)");
    index->add_option("--c", i_c, "override the spin^c characteristic class");
    index->add_option("--out", i_out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*validate) {
            try {
                ManifoldModel M = resolve_model(v_manifold, v_file);
                std::cout << M.name << ": valid\n";
                return kExitPass;
            } catch (const error& e) {
                std::cout << "invalid: " << e.what() << "\n";
                return kExitDataError;
            }
        }
        if (*check) return run_check(ca, false);
        if (*searchcmd) return run_check(ca, true);
        if (*cat_list) {
            for (const auto& n : catalog::builtin_names()) std::cout << n << "\n";
            return kExitPass;
        }
        if (*cat_show) {
            catalog::CatalogEntry entry = catalog::builtin(show_name);
            const ManifoldModel& M = entry.model;
            std::cout << M.name << (entry.unverified_source ? "  [unverified-source]" : "") << "\n";
            for (int d = 0; d <= 8; d += 2) {
                if (M.basis_count(d) == 0) continue;
                std::cout << "  H^" << d << ": free rank " << M.groups[d].free_rank;
                for (const auto& t : M.groups[d].torsion) std::cout << " + Z/" << t.str();
                std::cout << "  gens:";
                for (int i = 0; i < M.basis_count(d); ++i) std::cout << " " << M.gen_name(d, i);
                if (M.groups[d].partial) std::cout << "  (partial)";
                std::cout << "\n";
            }
            std::cout << "  tangent: c = " << M.format(M.tangent.c)
                      << ", p1 = " << M.format(M.tangent.p1_tau)
                      << ", q1 = " << M.format(M.tangent.q1_tau_c)
                      << ", p2 = " << M.format(M.tangent.p2_tau)
                      << ", e = " << M.format(M.tangent.e_tau)
                      << ", chi = " << M.tangent.chi.str();
            if (M.tangent.signature) std::cout << ", signature = " << M.tangent.signature->str();
            std::cout << "\n";
            for (const auto& [k, v] : M.provenance)
                std::cout << "  provenance[" << k << "]: " << v << "\n";
            for (const auto& e : entry.expected)
                std::cout << "  expected: " << e.criterion << " -> " << e.expectation << "  ["
                          << e.provenance << "]\n";
            return kExitPass;
        }
        if (*index) {
            ManifoldModel M = resolve_model(i_manifold, i_file);
            ComplexBundleData z = trivial_complex(M, i_rank);
            {
                std::stringstream ss(i_chern);
                std::string item;
                std::vector<std::string> parts;
                while (std::getline(ss, item, ',')) parts.push_back(item);
                if (parts.size() != 4) throw parse_error("--chern needs c1,c2,c3,c4");
                z.c1 = parse_class_expr(M, 2, parts[0]).offset;
                z.c2 = parse_class_expr(M, 4, parts[1]).offset;
                z.c3 = parse_class_expr(M, 6, parts[2]).offset;
                z.c4 = parse_class_expr(M, 8, parts[3]).offset;
            }
            std::optional<IntClass> c_override;
            if (!i_c.empty()) c_override = parse_class_expr(M, 2, i_c).offset;
            Rat ind = spinc_index(M, z, c_override);
            std::cout << "index = " << to_string(ind)
                      << (is_integer(ind) ? "  (integer)" : "  (not an integer)") << "\n";
            if (!i_out.empty()) {
                ordered_json j;
                j["index"] = to_string(ind);
                j["integral"] = is_integer(ind);
                write_out(i_out, j.dump(2) + "\n");
            }
            return kExitPass;
        }
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}
