#pragma once

// Classical limit of a structure-constant table.  At q = 1 every coefficient
// collapses into Q(sqrt 2) and the two-sided actions merge, so the table must
// define an honest Lie bracket.  This is checked by brute force: antisymmetry
// on every ordered basis pair, Jacobi on basis triples (full sweep at rank
// <= 3, seeded random sampling above), plus the degeneration facts themselves
// (l = r and f = 0 at q = 1).

#include "qla/qlabuild.hpp"
#include "qla/report.hpp"

#include <random>
#include <string>
#include <vector>

namespace qla {

inline std::string basis_label(const RootSystem& rs, int x) {
    int nr = (int)rs.roots.size();
    if (x < nr) return "X" + eps_str(rs.roots[x]);
    return "H" + std::to_string(x - nr + 1);
}

// Bracket table over Q(sqrt 2) on the ordered basis
//   X_{roots[0]}, ..., X_{roots[n-1]}, H_1, ..., H_rank.
struct ClassicalBracket {
    RootSystem rs;
    int dim = 0;
    // table[x][y] = coefficient vector of [basis_x, basis_y]
    std::vector<std::vector<std::vector<BaseScalar>>> table;

    // [v, basis_k] for a coefficient vector v
    std::vector<BaseScalar> bracket_with(const std::vector<BaseScalar>& v, int k) const {
        std::vector<BaseScalar> out(dim);
        for (int w = 0; w < dim; ++w) {
            if (v[w].is_zero()) continue;
            const auto& row = table[w][k];
            for (int u = 0; u < dim; ++u)
                if (!row[u].is_zero()) out[u] += v[w] * row[u];
        }
        return out;
    }

    bool jacobi_holds(int x, int y, int z) const {
        std::vector<BaseScalar> res = bracket_with(table[x][y], z);
        std::vector<BaseScalar> t = bracket_with(table[y][z], x);
        for (int u = 0; u < dim; ++u) res[u] += t[u];
        t = bracket_with(table[z][x], y);
        for (int u = 0; u < dim; ++u) res[u] += t[u];
        for (int u = 0; u < dim; ++u)
            if (!res[u].is_zero()) return false;
        return true;
    }
};

inline ClassicalBracket classical_bracket(const StructureConstants& sc) {
    const RootSystem& rs = sc.rs;
    const int nr = (int)rs.roots.size();
    const int l = rs.rank;

    ClassicalBracket cb;
    cb.rs = rs;
    cb.dim = nr + l;
    cb.table.assign(cb.dim, std::vector<std::vector<BaseScalar>>(
                                cb.dim, std::vector<BaseScalar>(cb.dim)));

    for (int a = 0; a < nr; ++a)
        for (int i = 1; i <= l; ++i) {
            cb.table[nr + i - 1][a][a] = sc.l[a][i - 1].eval_classical();
            cb.table[a][nr + i - 1][a] = -sc.r[a][i - 1].eval_classical();
        }
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j)
            for (int k = 1; k <= l; ++k)
                cb.table[nr + i - 1][nr + j - 1][nr + k - 1] =
                    sc.fud[i - 1][j - 1][k - 1].eval_classical();
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            EpsVec s = eps_add(rs.roots[a], rs.roots[b]);
            if (eps_is_zero(s)) {
                for (int k = 1; k <= l; ++k)
                    cb.table[a][b][nr + k - 1] = -sc.g[a][k - 1].eval_classical();
            } else if (int c = rs.root_index(s); c >= 0) {
                cb.table[a][b][c] = sc.N_at(rs.roots[a], rs.roots[b]).eval_classical();
            }
        }
    return cb;
}

// Full degeneration suite.  Jacobi sweeps every ascending basis triple when
// rank <= 3; above that it samples `random_triples` distinct-index triples
// from a generator seeded with `seed` (repeats across draws are harmless).
inline CheckReport classical_suite(const StructureConstants& sc, unsigned seed = 20240901u,
                                   int random_triples = 10000) {
    const RootSystem& rs = sc.rs;
    const int nr = (int)rs.roots.size();
    CheckReport rp;

    for (int a = 0; a < nr; ++a)
        for (int i = 1; i <= rs.rank; ++i)
            rp.check(sc.l[a][i - 1].eval_classical() == sc.r[a][i - 1].eval_classical(),
                     "left = right action at q = 1 on (" + eps_str(rs.roots[a]) + ", H" +
                         std::to_string(i) + ")");
    for (int i = 1; i <= rs.rank; ++i)
        for (int j = 1; j <= rs.rank; ++j)
            for (int k = 1; k <= rs.rank; ++k)
                rp.check(sc.fud[i - 1][j - 1][k - 1].eval_classical().is_zero(),
                         "Cartan bracket vanishes at q = 1 at (" + std::to_string(i) + "," +
                             std::to_string(j) + "," + std::to_string(k) + ")");

    ClassicalBracket cb = classical_bracket(sc);
    for (int x = 0; x < cb.dim; ++x)
        for (int y = x; y < cb.dim; ++y) {
            bool anti = true;
            for (int u = 0; u < cb.dim; ++u)
                if (cb.table[x][y][u] + cb.table[y][x][u] != BaseScalar(0)) anti = false;
            rp.check(anti, "antisymmetry at (" + basis_label(rs, x) + ", " +
                               basis_label(rs, y) + ")");
        }

    auto jac = [&](int x, int y, int z) {
        rp.check(cb.jacobi_holds(x, y, z),
                 "jacobi at (" + basis_label(rs, x) + ", " + basis_label(rs, y) + ", " +
                     basis_label(rs, z) + ")");
    };
    if (rs.rank <= 3) {
        for (int x = 0; x < cb.dim; ++x)
            for (int y = x + 1; y < cb.dim; ++y)
                for (int z = y + 1; z < cb.dim; ++z) jac(x, y, z);
    } else {
        std::mt19937 rng(seed);
        std::uniform_int_distribution<int> pick(0, cb.dim - 1);
        for (int t = 0; t < random_triples; ++t) {
            int x = pick(rng), y = pick(rng), z = pick(rng);
            if (x == y || y == z || x == z) {
                --t;
                continue;
            }
            jac(x, y, z);
        }
    }
    return rp;
}

}  // namespace qla
