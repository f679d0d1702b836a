#include "spinc8/catalog.hpp"

#include "spinc8/bundles.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace spinc8 {

using ordered_json = nlohmann::ordered_json;

namespace {

void reject_unknown_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& [key, _] : obj.items())
        if (!allowed.count(key)) throw parse_error(where + ": unknown key '" + key + "'");
}

std::vector<Int> parse_int_vector(const ordered_json& arr, const std::string& where) {
    if (!arr.is_array()) throw parse_error(where + ": expected an array");
    std::vector<Int> out;
    for (const auto& v : arr) {
        if (v.is_string()) out.push_back(parse_int(v.get<std::string>()));
        else if (v.is_number_integer()) out.push_back(Int(v.get<long long>()));
        else throw parse_error(where + ": integers must be decimal strings");
    }
    return out;
}

std::vector<std::uint8_t> parse_bit_vector(const ordered_json& arr, const std::string& where) {
    if (!arr.is_array()) throw parse_error(where + ": expected an array");
    std::vector<std::uint8_t> out;
    for (const auto& v : arr) {
        int b = v.is_boolean() ? (v.get<bool>() ? 1 : 0) : v.get<int>();
        if (b != 0 && b != 1) throw parse_error(where + ": bits must be 0 or 1");
        out.push_back(static_cast<std::uint8_t>(b));
    }
    return out;
}

Mat2 parse_mat2(const ordered_json& arr, const std::string& where) {
    if (!arr.is_array()) throw parse_error(where + ": expected a matrix");
    Mat2 out;
    for (const auto& row : arr) out.push_back(parse_bit_vector(row, where));
    return out;
}

ordered_json dump_int_vector(const std::vector<Int>& v) {
    ordered_json arr = ordered_json::array();
    for (const auto& x : v) arr.push_back(x.str());
    return arr;
}

ordered_json dump_class(const IntClass& x) {
    ordered_json arr = ordered_json::array();
    for (const auto& c : x.free) arr.push_back(c.str());
    for (const auto& c : x.torsion) arr.push_back(c.str());
    return arr;
}

ordered_json dump_bits(const std::vector<std::uint8_t>& bits) {
    ordered_json arr = ordered_json::array();
    for (auto b : bits) arr.push_back(static_cast<int>(b));
    return arr;
}

ordered_json dump_mat2(const Mat2& m) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : m) arr.push_back(dump_bits(row));
    return arr;
}

IntClass class_from_coords(const ManifoldModel& M, int deg, std::vector<Int> coords,
                           const std::string& where) {
    if (static_cast<int>(coords.size()) != M.basis_count(deg))
        throw parse_error(where + ": expected " + std::to_string(M.basis_count(deg)) +
                          " coordinates in degree " + std::to_string(deg));
    return M.make_class(deg, std::move(coords));
}

Mod2Class bits_from_json(const ManifoldModel& M, int deg, const ordered_json& arr,
                         const std::string& where) {
    auto bits = parse_bit_vector(arr, where);
    if (static_cast<int>(bits.size()) != M.mod2_dim[deg])
        throw parse_error(where + ": expected " + std::to_string(M.mod2_dim[deg]) +
                          " bits in degree " + std::to_string(deg));
    Mod2Class c = M.zero2(deg);
    c.bits = std::move(bits);
    return c;
}

}  // namespace

std::string serialize_model(const ManifoldModel& M) {
    ordered_json j;
    j["name"] = M.name;

    j["groups"] = ordered_json::object();
    for (int d = 0; d <= 8; ++d) {
        const auto& g = M.groups[d];
        if (g.basis_count() == 0 && d != 0 && d != 8) continue;
        ordered_json jg;
        jg["free_rank"] = g.free_rank;
        jg["torsion"] = dump_int_vector(g.torsion);
        ordered_json names = ordered_json::array();
        for (int i = 0; i < g.basis_count(); ++i) names.push_back(M.gen_name(d, i));
        jg["gens"] = names;
        if (g.partial) jg["partial"] = true;
        j["groups"][std::to_string(d)] = jg;
    }

    j["mod2"] = ordered_json::object();
    for (int d = 0; d <= 8; ++d) {
        if (M.mod2_dim[d] == 0) continue;
        ordered_json jm;
        jm["dim"] = M.mod2_dim[d];
        jm["reduction"] = dump_mat2(M.rho2_map[d]);
        j["mod2"][std::to_string(d)] = jm;
    }

    j["cup"] = ordered_json::array();
    for (const auto& [jk, table] : M.cup_table.entries) {
        auto [dj, dk] = jk;
        if (dj > dk) continue;  // symmetric half
        for (std::size_t a = 0; a < table.size(); ++a)
            for (std::size_t b = 0; b < table[a].size(); ++b) {
                ordered_json e;
                e["deg_a"] = dj;
                e["gen_a"] = a;
                e["deg_b"] = dk;
                e["gen_b"] = b;
                e["result"] = dump_class(table[a][b]);
                j["cup"].push_back(e);
            }
    }

    j["cup2"] = ordered_json::array();
    for (const auto& [jk, table] : M.cup2_table.entries) {
        auto [dj, dk] = jk;
        if (dj > dk) continue;
        for (std::size_t a = 0; a < table.size(); ++a)
            for (std::size_t b = 0; b < table[a].size(); ++b) {
                ordered_json e;
                e["deg_a"] = dj;
                e["gen_a"] = a;
                e["deg_b"] = dk;
                e["gen_b"] = b;
                e["result"] = dump_bits(table[a][b].bits);
                j["cup2"].push_back(e);
            }
    }

    j["sq2"] = ordered_json::object();
    j["sq2"]["2"] = dump_mat2(M.sq2_table.deg2);
    j["sq2"]["4"] = dump_mat2(M.sq2_table.deg4);

    j["fundamental"] = dump_int_vector(M.fundamental);

    ordered_json jt;
    jt["c"] = dump_class(M.tangent.c);
    jt["p1"] = dump_class(M.tangent.p1_tau);
    jt["p2"] = dump_class(M.tangent.p2_tau);
    jt["e"] = dump_class(M.tangent.e_tau);
    jt["w2"] = dump_bits(M.tangent.w2_M.bits);
    jt["chi"] = M.tangent.chi.str();
    if (M.tangent.signature) jt["signature"] = M.tangent.signature->str();
    j["tangent"] = jt;

    j["provenance"] = ordered_json::object();
    for (const auto& [k, v] : M.provenance) j["provenance"][k] = v;

    return j.dump(2) + "\n";
}

ManifoldModel parse_model(const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("manifold file: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("manifold file: top level must be an object");
    reject_unknown_keys(j, {"name", "groups", "mod2", "cup", "cup2", "sq2", "fundamental",
                            "tangent", "provenance"},
                        "manifold file");
    for (const char* key : {"name", "groups", "mod2", "cup", "cup2", "sq2", "fundamental", "tangent"})
        if (!j.contains(key)) throw parse_error(std::string("manifold file: missing key '") + key + "'");

    ManifoldModel M;
    M.name = j["name"].get<std::string>();

    for (const auto& [key, jg] : j["groups"].items()) {
        int d = std::stoi(key);
        if (d < 0 || d > 8) throw parse_error("groups: degree out of range");
        reject_unknown_keys(jg, {"free_rank", "torsion", "gens", "partial"}, "groups." + key);
        GroupStructure g;
        g.free_rank = jg.at("free_rank").get<int>();
        if (g.free_rank < 0) throw parse_error("groups." + key + ": negative free rank");
        if (jg.contains("torsion")) g.torsion = parse_int_vector(jg["torsion"], "groups." + key);
        for (std::size_t i = 0; i < g.torsion.size(); ++i) {
            if (g.torsion[i] < 2) throw parse_error("groups." + key + ": torsion orders must be >= 2");
            if (i > 0 && g.torsion[i] % g.torsion[i - 1] != 0)
                throw parse_error("groups." + key + ": torsion orders must be divisibility-sorted");
        }
        if (jg.contains("gens"))
            for (const auto& n : jg["gens"]) g.gen_names.push_back(n.get<std::string>());
        if (jg.contains("partial")) g.partial = jg["partial"].get<bool>();
        M.groups[d] = g;
    }
    if (M.groups[0].free_rank != 1 || !M.groups[0].torsion.empty())
        throw parse_error("groups.0: degree 0 must be Z");
    if (M.groups[8].free_rank < 1) throw parse_error("groups.8: degree 8 needs a free part");

    for (const auto& [key, jm] : j["mod2"].items()) {
        int d = std::stoi(key);
        if (d < 0 || d > 8) throw parse_error("mod2: degree out of range");
        reject_unknown_keys(jm, {"dim", "reduction"}, "mod2." + key);
        M.mod2_dim[d] = jm.at("dim").get<int>();
        M.rho2_map[d] = parse_mat2(jm.at("reduction"), "mod2." + key);
        if (static_cast<int>(M.rho2_map[d].size()) != M.mod2_dim[d])
            throw parse_error("mod2." + key + ": reduction row count != dim");
        for (const auto& row : M.rho2_map[d])
            if (static_cast<int>(row.size()) != M.basis_count(d))
                throw parse_error("mod2." + key + ": reduction column count != basis count");
    }

    for (const auto& e : j["cup"]) {
        reject_unknown_keys(e, {"deg_a", "gen_a", "deg_b", "gen_b", "result"}, "cup entry");
        int dj = e.at("deg_a").get<int>(), dk = e.at("deg_b").get<int>();
        int a = e.at("gen_a").get<int>(), b = e.at("gen_b").get<int>();
        if (dj + dk > 8) throw parse_error("cup entry: degree overflow");
        if (a < 0 || a >= M.basis_count(dj) || b < 0 || b >= M.basis_count(dk))
            throw parse_error("cup entry: generator index out of range");
        auto& table = M.cup_table.entries[{dj, dk}];
        if (table.empty()) {
            table.resize(M.basis_count(dj));
            for (auto& row : table) row.resize(M.basis_count(dk), M.zero(dj + dk));
        }
        table[a][b] = class_from_coords(M, dj + dk, parse_int_vector(e.at("result"), "cup entry"),
                                        "cup entry");
    }
    for (const auto& e : j["cup2"]) {
        reject_unknown_keys(e, {"deg_a", "gen_a", "deg_b", "gen_b", "result"}, "cup2 entry");
        int dj = e.at("deg_a").get<int>(), dk = e.at("deg_b").get<int>();
        int a = e.at("gen_a").get<int>(), b = e.at("gen_b").get<int>();
        if (dj + dk > 8) throw parse_error("cup2 entry: degree overflow");
        if (a < 0 || a >= M.mod2_dim[dj] || b < 0 || b >= M.mod2_dim[dk])
            throw parse_error("cup2 entry: generator index out of range");
        auto& table = M.cup2_table.entries[{dj, dk}];
        if (table.empty()) {
            table.resize(M.mod2_dim[dj]);
            for (auto& row : table) row.resize(M.mod2_dim[dk], M.zero2(dj + dk));
        }
        table[a][b] = bits_from_json(M, dj + dk, e.at("result"), "cup2 entry");
    }

    // symmetric completion for pairs given in one order only
    {
        auto pending = M.cup_table.entries;
        for (const auto& [jk, table] : pending) {
            auto [dj, dk] = jk;
            if (M.cup_table.entries.count({dk, dj})) continue;
            std::vector<std::vector<IntClass>> t(M.basis_count(dk));
            for (int b = 0; b < M.basis_count(dk); ++b) {
                t[b].resize(M.basis_count(dj), M.zero(dj + dk));
                for (int a = 0; a < M.basis_count(dj); ++a) t[b][a] = table[a][b];
            }
            M.cup_table.entries[{dk, dj}] = t;
        }
        auto pending2 = M.cup2_table.entries;
        for (const auto& [jk, table] : pending2) {
            auto [dj, dk] = jk;
            if (M.cup2_table.entries.count({dk, dj})) continue;
            std::vector<std::vector<Mod2Class>> t(M.mod2_dim[dk]);
            for (int b = 0; b < M.mod2_dim[dk]; ++b) {
                t[b].resize(M.mod2_dim[dj], M.zero2(dj + dk));
                for (int a = 0; a < M.mod2_dim[dj]; ++a) t[b][a] = table[a][b];
            }
            M.cup2_table.entries[{dk, dj}] = t;
        }
    }

    reject_unknown_keys(j["sq2"], {"2", "4"}, "sq2");
    M.sq2_table.deg2 = parse_mat2(j["sq2"].at("2"), "sq2.2");
    M.sq2_table.deg4 = parse_mat2(j["sq2"].at("4"), "sq2.4");

    M.fundamental = parse_int_vector(j["fundamental"], "fundamental");
    if (static_cast<int>(M.fundamental.size()) != M.groups[8].free_rank)
        throw parse_error("fundamental: length must equal the degree-8 free rank");

    const auto& jt = j["tangent"];
    reject_unknown_keys(jt, {"c", "p1", "p2", "e", "w2", "chi", "signature"}, "tangent");
    M.tangent.c = class_from_coords(M, 2, parse_int_vector(jt.at("c"), "tangent.c"), "tangent.c");
    M.tangent.p1_tau =
        class_from_coords(M, 4, parse_int_vector(jt.at("p1"), "tangent.p1"), "tangent.p1");
    M.tangent.p2_tau =
        class_from_coords(M, 8, parse_int_vector(jt.at("p2"), "tangent.p2"), "tangent.p2");
    M.tangent.e_tau =
        class_from_coords(M, 8, parse_int_vector(jt.at("e"), "tangent.e"), "tangent.e");
    M.tangent.w2_M = bits_from_json(M, 2, jt.at("w2"), "tangent.w2");
    M.tangent.chi = jt.at("chi").is_string() ? parse_int(jt.at("chi").get<std::string>())
                                             : Int(jt.at("chi").get<long long>());
    if (jt.contains("signature"))
        M.tangent.signature = jt.at("signature").is_string()
                                  ? parse_int(jt.at("signature").get<std::string>())
                                  : Int(jt.at("signature").get<long long>());

    if (j.contains("provenance"))
        for (const auto& [k, v] : j["provenance"].items())
            M.provenance[k] = v.get<std::string>();

    return M;
}

namespace {

ManifoldModel finish_load(ManifoldModel M) {
    CheckReport audit = validate_ring(M);
    if (!audit.passed()) {
        std::string axioms;
        for (const auto& c : audit.conditions)
            if (!c.ok) axioms += (axioms.empty() ? "" : ", ") + c.name;
        throw data_error(M.name + ": ring validation failed (" + axioms + ")");
    }
    // q1(tau; c) is derived, not stored
    M.tangent.q1_tau_c = q1_from_lift(M, M.tangent.p1_tau, M.tangent.c).canonical;
    validate_tangent(M);
    return M;
}

}  // namespace

ManifoldModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return finish_load(parse_model(ss.str()));
}

RealBundleData parse_real_bundle(const ManifoldModel& M, const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bundle file: ") + e.what());
    }
    reject_unknown_keys(j, {"dim", "w2", "w4", "w6", "p1", "p2", "e"}, "bundle file");
    RealBundleData xi;
    xi.dim = j.contains("dim") ? j["dim"].get<int>() : 8;
    xi.w2 = bits_from_json(M, 2, j.at("w2"), "bundle.w2");
    xi.w4 = bits_from_json(M, 4, j.at("w4"), "bundle.w4");
    xi.w6 = bits_from_json(M, 6, j.at("w6"), "bundle.w6");
    xi.p1 = class_from_coords(M, 4, parse_int_vector(j.at("p1"), "bundle.p1"), "bundle.p1");
    xi.p2 = class_from_coords(M, 8, parse_int_vector(j.at("p2"), "bundle.p2"), "bundle.p2");
    if (j.contains("e")) {
        int edeg = xi.dim >= 4 && xi.dim <= 8 ? xi.dim : 8;
        xi.e = class_from_coords(M, edeg, parse_int_vector(j.at("e"), "bundle.e"), "bundle.e");
    }
    return xi;
}

ComplexBundleData parse_complex_bundle(const ManifoldModel& M, const std::string& json_text) {
    ordered_json j;
    try {
        j = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        throw parse_error(std::string("bundle file: ") + e.what());
    }
    reject_unknown_keys(j, {"rank", "c1", "c2", "c3", "c4"}, "bundle file");
    ComplexBundleData z;
    z.rank = j.contains("rank") ? j["rank"].get<int>() : 4;
    z.c1 = class_from_coords(M, 2, parse_int_vector(j.at("c1"), "bundle.c1"), "bundle.c1");
    z.c2 = class_from_coords(M, 4, parse_int_vector(j.at("c2"), "bundle.c2"), "bundle.c2");
    z.c3 = class_from_coords(M, 6, parse_int_vector(j.at("c3"), "bundle.c3"), "bundle.c3");
    z.c4 = class_from_coords(M, 8, parse_int_vector(j.at("c4"), "bundle.c4"), "bundle.c4");
    return z;
}

void save_model(const ManifoldModel& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot write '" + path + "'");
    out << serialize_model(M);
}

}  // namespace spinc8
