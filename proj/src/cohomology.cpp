#include "spinc8/cohomology.hpp"

#include <algorithm>
#include <sstream>

namespace spinc8 {

bool IntClass::is_zero() const {
    return std::all_of(free.begin(), free.end(), [](const Int& v) { return v == 0; }) &&
           std::all_of(torsion.begin(), torsion.end(), [](const Int& v) { return v == 0; });
}

bool Mod2Class::is_zero() const {
    return std::all_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b == 0; });
}

static void check_degree(int deg) {
    if (deg < 0 || deg > 8) throw degree_error("degree out of range: " + std::to_string(deg));
}

IntClass ManifoldModel::zero(int deg) const {
    check_degree(deg);
    const auto& g = groups[deg];
    IntClass x;
    x.degree = deg;
    x.free.assign(g.free_rank, Int(0));
    x.torsion.assign(g.torsion.size(), Int(0));
    return x;
}

IntClass ManifoldModel::basis_class(int deg, int index) const {
    IntClass x = zero(deg);
    const auto& g = groups[deg];
    if (index < 0 || index >= g.basis_count())
        throw degree_error("basis index out of range in degree " + std::to_string(deg));
    if (index < g.free_rank)
        x.free[index] = 1;
    else
        x.torsion[index - g.free_rank] = 1;
    return x;
}

IntClass ManifoldModel::make_class(int deg, std::vector<Int> coords) const {
    const auto& g = groups.at(deg);
    if (static_cast<int>(coords.size()) != g.basis_count())
        throw degree_error("coordinate vector has wrong length in degree " + std::to_string(deg));
    IntClass x;
    x.degree = deg;
    x.free.assign(coords.begin(), coords.begin() + g.free_rank);
    x.torsion.assign(coords.begin() + g.free_rank, coords.end());
    reduce(x);
    return x;
}

Mod2Class ManifoldModel::zero2(int deg) const {
    check_degree(deg);
    Mod2Class x;
    x.degree = deg;
    x.bits.assign(mod2_dim[deg], 0);
    return x;
}

Mod2Class ManifoldModel::basis_class2(int deg, int index) const {
    Mod2Class x = zero2(deg);
    if (index < 0 || index >= mod2_dim[deg])
        throw degree_error("F2 basis index out of range in degree " + std::to_string(deg));
    x.bits[index] = 1;
    return x;
}

std::string ManifoldModel::gen_name(int deg, int index) const {
    const auto& g = groups.at(deg);
    if (index < static_cast<int>(g.gen_names.size()) && !g.gen_names[index].empty())
        return g.gen_names[index];
    if (index < g.free_rank) return "g" + std::to_string(deg) + "_" + std::to_string(index);
    return "t" + std::to_string(deg) + "_" + std::to_string(index - g.free_rank);
}

int ManifoldModel::gen_index(int deg, const std::string& name) const {
    const auto& g = groups.at(deg);
    for (int i = 0; i < g.basis_count(); ++i)
        if (gen_name(deg, i) == name) return i;
    return -1;
}

void ManifoldModel::reduce(IntClass& x) const {
    const auto& g = groups.at(x.degree);
    for (std::size_t i = 0; i < x.torsion.size(); ++i)
        x.torsion[i] = mod_reduce(x.torsion[i], g.torsion[i]);
}

std::string ManifoldModel::format(const IntClass& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Int& coeff, const std::string& name) {
        if (coeff == 0) return;
        if (!first) os << (coeff > 0 ? " + " : " - ");
        else if (coeff < 0) os << "-";
        Int a = abs(coeff);
        if (a != 1) os << a.str() << "*";
        os << name;
        first = false;
    };
    for (std::size_t i = 0; i < x.free.size(); ++i)
        emit(x.free[i], gen_name(x.degree, static_cast<int>(i)));
    const auto& g = groups.at(x.degree);
    for (std::size_t i = 0; i < x.torsion.size(); ++i)
        emit(x.torsion[i], gen_name(x.degree, g.free_rank + static_cast<int>(i)));
    return os.str();
}

std::string ManifoldModel::format(const Mod2Class& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < x.bits.size(); ++i) {
        if (!x.bits[i]) continue;
        if (!first) os << " + ";
        os << "m" << x.degree << "_" << i;
        first = false;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// arithmetic
// ---------------------------------------------------------------------------

IntClass add(const ManifoldModel& M, const IntClass& x, const IntClass& y) {
    if (x.degree != y.degree) throw degree_error("add: degree mismatch");
    IntClass r = x;
    for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += y.free[i];
    for (std::size_t i = 0; i < r.torsion.size(); ++i) r.torsion[i] += y.torsion[i];
    M.reduce(r);
    return r;
}

IntClass sub(const ManifoldModel& M, const IntClass& x, const IntClass& y) {
    return add(M, x, scale(M, -1, y));
}

IntClass scale(const ManifoldModel& M, const Int& n, const IntClass& x) {
    IntClass r = x;
    for (auto& v : r.free) v *= n;
    for (auto& v : r.torsion) v *= n;
    M.reduce(r);
    return r;
}

Mod2Class add2(const Mod2Class& x, const Mod2Class& y) {
    if (x.degree != y.degree || x.bits.size() != y.bits.size())
        throw degree_error("add2: degree mismatch");
    Mod2Class r = x;
    for (std::size_t i = 0; i < r.bits.size(); ++i) r.bits[i] ^= y.bits[i];
    return r;
}

static Int coeff_at(const IntClass& x, int index, int free_rank) {
    return index < free_rank ? x.free[index] : x.torsion[index - free_rank];
}

IntClass cup(const ManifoldModel& M, const IntClass& x, const IntClass& y) {
    int j = x.degree, k = y.degree;
    if (j % 2 || k % 2) throw degree_error("cup: odd-degree classes are not supported");
    if (j + k > 8) throw degree_error("cup: degree overflow");
    if (j == 0) return scale(M, x.free.at(0), y);
    if (k == 0) return scale(M, y.free.at(0), x);

    IntClass r = M.zero(j + k);
    if (x.is_zero() || y.is_zero() || M.basis_count(j + k) == 0) return r;

    auto it = M.cup_table.entries.find({j, k});
    if (it == M.cup_table.entries.end())
        throw data_error("cup: table entry missing for degrees (" + std::to_string(j) + "," +
                         std::to_string(k) + ")");
    const auto& table = it->second;
    int nj = M.basis_count(j), nk = M.basis_count(k);
    int fj = M.groups[j].free_rank, fk = M.groups[k].free_rank;
    for (int a = 0; a < nj; ++a) {
        Int ca = coeff_at(x, a, fj);
        if (ca == 0) continue;
        for (int b = 0; b < nk; ++b) {
            Int cb = coeff_at(y, b, fk);
            if (cb == 0) continue;
            r = add(M, r, scale(M, ca * cb, table.at(a).at(b)));
        }
    }
    return r;
}

Mod2Class cup2(const ManifoldModel& M, const Mod2Class& x, const Mod2Class& y) {
    int j = x.degree, k = y.degree;
    if (j % 2 || k % 2) throw degree_error("cup2: odd-degree classes are not supported");
    if (j + k > 8) throw degree_error("cup2: degree overflow");
    if (j == 0 || k == 0) throw degree_error("cup2: degree-0 F2 classes are not modelled");

    Mod2Class r = M.zero2(j + k);
    if (x.is_zero() || y.is_zero() || M.mod2_dim[j + k] == 0) return r;

    auto it = M.cup2_table.entries.find({j, k});
    if (it == M.cup2_table.entries.end())
        throw data_error("cup2: table entry missing for degrees (" + std::to_string(j) + "," +
                         std::to_string(k) + ")");
    const auto& table = it->second;
    for (std::size_t a = 0; a < x.bits.size(); ++a) {
        if (!x.bits[a]) continue;
        for (std::size_t b = 0; b < y.bits.size(); ++b) {
            if (!y.bits[b]) continue;
            r = add2(r, table.at(a).at(b));
        }
    }
    return r;
}

IntClass cup_pow(const ManifoldModel& M, const IntClass& x, int n) {
    if (n < 1) throw degree_error("cup_pow: exponent must be >= 1");
    IntClass r = x;
    for (int i = 1; i < n; ++i) r = cup(M, r, x);
    return r;
}

Mod2Class rho2(const ManifoldModel& M, const IntClass& x) {
    const auto& mat = M.rho2_map.at(x.degree);
    Mod2Class r = M.zero2(x.degree);
    int n = M.basis_count(x.degree);
    int fr = M.groups[x.degree].free_rank;
    for (int col = 0; col < n; ++col) {
        Int c = coeff_at(x, col, fr);
        if (mod_reduce(c, 2) == 0) continue;
        for (int row = 0; row < M.mod2_dim[x.degree]; ++row)
            r.bits[row] ^= mat.at(row).at(col);
    }
    return r;
}

static Mod2Class apply_mat2(const ManifoldModel& M, const Mat2& mat, const Mod2Class& x,
                            int target_deg) {
    Mod2Class r = M.zero2(target_deg);
    for (std::size_t col = 0; col < x.bits.size(); ++col) {
        if (!x.bits[col]) continue;
        for (int row = 0; row < M.mod2_dim[target_deg]; ++row)
            r.bits[row] ^= mat.at(row).at(col);
    }
    return r;
}

Mod2Class sq2(const ManifoldModel& M, const Mod2Class& x) {
    switch (x.degree) {
        case 2: return apply_mat2(M, M.sq2_table.deg2, x, 4);
        case 4: return apply_mat2(M, M.sq2_table.deg4, x, 6);
        case 6: return cup2(M, M.tangent.w2_M, x);  // Wu closure
        default: throw degree_error("sq2: unsupported degree " + std::to_string(x.degree));
    }
}

Int evaluate(const ManifoldModel& M, const IntClass& x) {
    if (x.degree != 8) throw degree_error("evaluate: degree-8 class required");
    Int r = 0;
    for (std::size_t i = 0; i < x.free.size(); ++i) r += M.fundamental.at(i) * x.free[i];
    return r;
}

RationalValue eval_rational(const ManifoldModel& M, const IntClass& num, const Int& denom) {
    if (denom == 0) throw data_error("eval_rational: zero denominator");
    Rat v(evaluate(M, num), denom);
    return {v, is_integer(v)};
}

// ---------------------------------------------------------------------------
// validation
// ---------------------------------------------------------------------------

bool in_rho2_image(const ManifoldModel& M, const Mod2Class& x) {
    // Gaussian elimination on [rho2 | x] over F2.
    int deg = x.degree;
    int rows = M.mod2_dim[deg];
    int cols = M.basis_count(deg);
    std::vector<std::vector<std::uint8_t>> aug(rows);
    for (int r = 0; r < rows; ++r) {
        aug[r] = M.rho2_map[deg].at(r);
        aug[r].push_back(x.bits[r]);
    }
    int lead = 0;
    for (int col = 0; col < cols && lead < rows; ++col) {
        int pivot = -1;
        for (int r = lead; r < rows; ++r)
            if (aug[r][col]) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(aug[lead], aug[pivot]);
        for (int r = 0; r < rows; ++r)
            if (r != lead && aug[r][col])
                for (int c = 0; c <= cols; ++c) aug[r][c] ^= aug[lead][c];
        ++lead;
    }
    for (int r = 0; r < rows; ++r) {
        bool empty = true;
        for (int c = 0; c < cols; ++c)
            if (aug[r][c]) { empty = false; break; }
        if (empty && aug[r][cols]) return false;
    }
    return true;
}

CheckReport validate_ring(const ManifoldModel& M) {
    CheckReport rep;
    rep.criterion = "validate_ring";

    auto pair_name = [&](int j, int a, int k, int b) {
        return M.gen_name(j, a) + " * " + M.gen_name(k, b);
    };

    // Structural shape of the stored linear maps.
    for (int deg = 0; deg <= 8; deg += 2) {
        const auto& mat = M.rho2_map[deg];
        bool ok = static_cast<int>(mat.size()) == M.mod2_dim[deg];
        for (const auto& row : mat)
            ok = ok && static_cast<int>(row.size()) == M.basis_count(deg);
        if (!ok)
            rep.cond("rho2_shape", "reduction matrix dims match groups", false,
                     "degree " + std::to_string(deg), "");
    }
    {
        bool ok2 = static_cast<int>(M.sq2_table.deg2.size()) == M.mod2_dim[4] &&
                   static_cast<int>(M.sq2_table.deg4.size()) == M.mod2_dim[6];
        for (const auto& row : M.sq2_table.deg2)
            ok2 = ok2 && static_cast<int>(row.size()) == M.mod2_dim[2];
        for (const auto& row : M.sq2_table.deg4)
            ok2 = ok2 && static_cast<int>(row.size()) == M.mod2_dim[4];
        rep.cond("sq2_shape", "Sq2 matrices have the declared dimensions", ok2);
        if (!ok2) {
            rep.finalize();
            return rep;
        }
    }

    bool tables_complete = true;
    for (int j = 2; j <= 6; j += 2)
        for (int k = j; j + k <= 8; k += 2) {
            if (M.basis_count(j) == 0 || M.basis_count(k) == 0 || M.basis_count(j + k) == 0)
                continue;
            if (!M.cup_table.entries.count({j, k}) || !M.cup_table.entries.count({k, j})) {
                rep.cond("cup_table_missing", "structure constants present", false,
                         "(" + std::to_string(j) + "," + std::to_string(k) + ")", "");
                tables_complete = false;
            }
        }
    if (!tables_complete) {
        rep.finalize();
        return rep;
    }

    // Torsion well-definedness: an order-d generator times anything lands in
    // d-torsion of the target.
    for (int j = 2; j <= 6; j += 2) {
        const auto& gj = M.groups[j];
        for (std::size_t t = 0; t < gj.torsion.size(); ++t) {
            int a = gj.free_rank + static_cast<int>(t);
            const Int& d = gj.torsion[t];
            for (int k = 2; j + k <= 8; k += 2) {
                for (int b = 0; b < M.basis_count(k); ++b) {
                    IntClass prod = cup(M, M.basis_class(j, a), M.basis_class(k, b));
                    IntClass killed = scale(M, d, prod);
                    if (!killed.is_zero())
                        rep.cond("torsion_welldefined",
                                 "order-" + d.str() + " generator annihilates its products",
                                 false, pair_name(j, a, k, b), M.format(prod));
                }
            }
        }
    }

    // Commutativity (all modelled degrees are even).
    for (int j = 2; j <= 6; j += 2)
        for (int k = j; j + k <= 8; k += 2)
            for (int a = 0; a < M.basis_count(j); ++a)
                for (int b = 0; b < M.basis_count(k); ++b) {
                    IntClass xy = cup(M, M.basis_class(j, a), M.basis_class(k, b));
                    IntClass yx = cup(M, M.basis_class(k, b), M.basis_class(j, a));
                    if (!(xy == yx))
                        rep.cond("commutative", "cup(x,y) = cup(y,x)", false,
                                 pair_name(j, a, k, b), M.format(xy) + " vs " + M.format(yx));
                }

    // Associativity on basis triples (criteria evaluate l^3, l^4 as nested cups).
    for (int j = 2; j <= 4; j += 2)
        for (int k = 2; j + k <= 6; k += 2)
            for (int m = 2; j + k + m <= 8; m += 2)
                for (int a = 0; a < M.basis_count(j); ++a)
                    for (int b = 0; b < M.basis_count(k); ++b)
                        for (int c = 0; c < M.basis_count(m); ++c) {
                            IntClass lhs = cup(M, cup(M, M.basis_class(j, a), M.basis_class(k, b)),
                                               M.basis_class(m, c));
                            IntClass rhs = cup(M, M.basis_class(j, a),
                                               cup(M, M.basis_class(k, b), M.basis_class(m, c)));
                            if (!(lhs == rhs))
                                rep.cond("associative", "(xy)z = x(yz)", false,
                                         pair_name(j, a, k, b) + " * " + M.gen_name(m, c),
                                         M.format(lhs) + " vs " + M.format(rhs));
                        }

    // rho2 is a ring map on generators.
    for (int j = 2; j <= 6; j += 2)
        for (int k = j; j + k <= 8; k += 2)
            for (int a = 0; a < M.basis_count(j); ++a)
                for (int b = 0; b < M.basis_count(k); ++b) {
                    Mod2Class lhs = rho2(M, cup(M, M.basis_class(j, a), M.basis_class(k, b)));
                    Mod2Class rhs = cup2(M, rho2(M, M.basis_class(j, a)),
                                         rho2(M, M.basis_class(k, b)));
                    if (!(lhs == rhs))
                        rep.cond("rho2_ring_map", "rho2(xy) = rho2(x) rho2(y)", false,
                                 pair_name(j, a, k, b), M.format(lhs) + " vs " + M.format(rhs));
                }

    // Sq^2 on a degree-2 class is its cup square.
    for (int a = 0; a < M.mod2_dim[2]; ++a) {
        Mod2Class x = M.basis_class2(2, a);
        Mod2Class lhs = sq2(M, x);
        Mod2Class rhs = cup2(M, x, x);
        if (!(lhs == rhs))
            rep.cond("sq2_deg2_square", "Sq2(x) = x^2 on degree 2", false,
                     M.format(x), M.format(lhs) + " vs " + M.format(rhs));
    }

    // Fundamental evaluation must be onto Z.
    {
        bool ok = M.groups[8].free_rank >= 1 &&
                  static_cast<int>(M.fundamental.size()) == M.groups[8].free_rank;
        if (ok) {
            Int g = 0;
            for (const auto& v : M.fundamental) g = gcd(g, v);
            ok = (g == 1);
        }
        rep.cond("fundamental_surjective", "evaluation hits 1", ok);
    }

    // Degree-2 x degree-6 integral pairing kills torsion.
    if (M.basis_count(2) > 0 && M.basis_count(6) > 0) {
        const auto& g2 = M.groups[2];
        for (std::size_t t = 0; t < g2.torsion.size(); ++t)
            for (int b = 0; b < M.basis_count(6); ++b) {
                IntClass prod =
                    cup(M, M.basis_class(2, g2.free_rank + static_cast<int>(t)),
                        M.basis_class(6, b));
                if (evaluate(M, prod) != 0)
                    rep.cond("pairing_kills_torsion", "(torsion . H^6)[M] = 0", false,
                             pair_name(2, g2.free_rank + static_cast<int>(t), 6, b),
                             evaluate(M, prod).str());
            }
    }

    rep.finalize();
    return rep;
}

void validate_tangent(const ManifoldModel& M) {
    const TangentData& t = M.tangent;
    IntClass csq = cup(M, t.c, t.c);
    IntClass twice_q1 = scale(M, 2, t.q1_tau_c);
    if (!(twice_q1 == sub(M, t.p1_tau, csq)))
        throw data_error(M.name + ": tangent data violates 2*q1 = p1 - c^2");
    if (!(rho2(M, t.c) == t.w2_M))
        throw data_error(M.name + ": tangent data violates rho2(c) = w2(M)");
    if (evaluate(M, t.e_tau) != t.chi)
        throw data_error(M.name + ": tangent Euler class does not evaluate to chi");
    if (t.signature) {
        Int lhs = evaluate(M, sub(M, scale(M, 7, t.p2_tau), cup(M, t.p1_tau, t.p1_tau)));
        if (lhs != 45 * *t.signature)
            throw data_error(M.name + ": (7 p2 - p1^2)[M] != 45 * signature");
    }
}

}  // namespace spinc8
