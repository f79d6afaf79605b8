#pragma once

// Closed-form structure constants for all four series, assembled from the
// minimal tables: left root actions for positive roots, the symmetric
// lowered f on the Cartan block, and base N values extended to all root
// pairs by a small rewrite closure over the q-conjugation symmetries.
// Also the verification suites that compare these tables against the
// tensor-square pipeline and check the algebraic identities they satisfy.

#include "qla/killing.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace qla {

// The special linear series forms a family weighted by two parameters
// (s, t) with s + t invertible; the other series ignore them.
struct FamilyWeights {
    RingElem s{1}, t{0};
};

// ---- root shapes in the eps basis (indices 1-based) ----

// a == e_p - e_m with exactly one +1 and one -1
inline bool shape_chain(const EpsVec& a, int& p, int& m) {
    p = m = 0;
    for (int k = 0; k < static_cast<int>(a.size()); ++k) {
        if (a[k] == 1 && p == 0)
            p = k + 1;
        else if (a[k] == -1 && m == 0)
            m = k + 1;
        else if (a[k] != 0)
            return false;
    }
    return p > 0 && m > 0;
}

// a == e_k + e_m with k < m
inline bool shape_sum(const EpsVec& a, int& k, int& m) {
    k = m = 0;
    for (int c = 0; c < static_cast<int>(a.size()); ++c) {
        if (a[c] == 1 && k == 0)
            k = c + 1;
        else if (a[c] == 1 && m == 0)
            m = c + 1;
        else if (a[c] != 0)
            return false;
    }
    return k > 0 && m > 0;
}

// a == w * e_m for the given weight w (1 for short, 2 for long roots)
inline bool shape_single(const EpsVec& a, int w, int& m) {
    m = 0;
    for (int c = 0; c < static_cast<int>(a.size()); ++c) {
        if (a[c] == w && m == 0)
            m = c + 1;
        else if (a[c] != 0)
            return false;
    }
    return m > 0;
}

inline RingElem parity(int n) { return RingElem(((n % 2) + 2) % 2 == 0 ? 1 : -1); }

// ---- left root action on the Cartan generators ----

// positive roots of the B, C and D series
inline RingElem closed_l_positive(const RootSystem& rs, const EpsVec& a, int i) {
    const int l = rs.rank;
    int j = 0, k = 0;
    auto d = [](int x, int y) { return x == y ? 1 : 0; };
    switch (rs.type) {
        case AlgebraType::B:
            if (shape_chain(a, j, k) && j < k)
                return qhalf(2 * (l - i) - 1) * d(i, j) - qhalf(2 * (i - l) + 1) * d(i, k) -
                       qhalf(2 * (l - i) - 5) * d(i + 1, j) + qhalf(2 * (i - l) + 5) * d(i + 1, k);
            if (shape_sum(a, j, k))
                return qhalf(2 * (l - i) - 1) * d(i, j) + qhalf(2 * (l - i) + 3) * d(i, k) -
                       qhalf(2 * (l - i) - 5) * d(i + 1, j) - qhalf(2 * (l - i) - 1) * d(i + 1, k);
            if (shape_single(a, 1, k))
                return qhalf(2 * (l - i) - 1) * d(i, k) - qhalf(2 * (l - i) - 5) * d(i + 1, k) +
                       (qhalf(3) - qhalf(1)) * d(i, l);
            break;
        case AlgebraType::C:
            if (shape_chain(a, j, k) && j < k)
                return qpow(l - i + 3) * d(i, j) - qpow(i - l - 3) * d(i, k) -
                       qpow(l - i + 1) * d(i + 1, j) + qpow(i - l - 1) * d(i + 1, k);
            if (shape_sum(a, j, k))
                return qpow(l - i + 3) * d(i, j) + qpow(l - i + 1) * d(i, k) -
                       qpow(l - i + 1) * d(i + 1, j) - qpow(l - i - 1) * d(i + 1, k);
            if (shape_single(a, 2, k))
                return (qpow(1) + qpow(-1)) * (qpow(l - i + 2) * d(i, k) -
                                               qpow(l - i) * d(i + 1, k));
            break;
        case AlgebraType::D:
            if (shape_chain(a, j, k) && j < k) {
                if (i < l)
                    return qpow(l - i - 1) * d(i, j) - qpow(i - l + 1) * d(i, k) -
                           qpow(l - i - 3) * d(i + 1, j) + qpow(i - l + 3) * d(i + 1, k);
                return RingElem(-d(i, k) + d(i - 1, j) - d(i - 1, k));
            }
            if (shape_sum(a, j, k)) {
                if (i < l)
                    return qpow(l - i - 1) * d(i, j) + qpow(l - i + 1) * d(i, k) -
                           qpow(l - i - 3) * d(i + 1, j) - qpow(l - i - 1) * d(i + 1, k);
                return qpow(2) * d(i, k) + RingElem(d(i - 1, j)) + qpow(2) * d(i - 1, k);
            }
            break;
        default:
            break;
    }
    throw MathError("closed_l_positive: unsupported root " + eps_str(a));
}

// all roots of all series
inline RingElem closed_l(const RootSystem& rs, const EpsVec& a, int i,
                         const FamilyWeights& fw = {}) {
    if (rs.type == AlgebraType::A) {
        const int l = rs.rank;
        int j = 0, k = 0;
        if (!shape_chain(a, j, k)) throw MathError("closed_l: unsupported root " + eps_str(a));
        auto d = [](int x, int y) { return x == y ? 1 : 0; };
        return (qpow(1 - i) * d(i, j) - qpow(-1 - i) * d(i + 1, j)) *
                   (fw.s + fw.t * qpow(l + 1)) -
               (qpow(i - 1) * d(i, k) - qpow(i + 1) * d(i + 1, k)) *
                   (fw.s + fw.t * qpow(-l - 1));
    }
    int idx = rs.root_index(a);
    if (idx >= 0 && idx < static_cast<int>(rs.positive.size()))
        return closed_l_positive(rs, a, i);
    return -closed_l_positive(rs, eps_neg(a), i).qconj();
}

// ---- the completely symmetric lowered f on the Cartan block ----

inline RingElem closed_f3(const RootSystem& rs, int i, int j, int k,
                          const FamilyWeights& fw = {}) {
    const int l = rs.rank;
    if (rs.type == AlgebraType::D) {
        // the two tail nodes mirror each other and never mix
        bool tip = i == l || j == l || k == l;
        bool pre = i == l - 1 || j == l - 1 || k == l - 1;
        if (tip && pre) return RingElem(0);
        if (tip) {
            auto fold = [&](int x) { return x == l ? l - 1 : x; };
            return closed_f3(rs, fold(i), fold(j), fold(k), fw);
        }
    }
    // sort the triple; the value depends on the multiset only
    int a = i, b = j, c = k;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    const RingElem qdif = qpow(2) - qpow(-2);
    if (a == c) {  // all equal
        switch (rs.type) {
            case AlgebraType::A:
                return fw.s * qdif * (qpow(-a) + qpow(a)) +
                       fw.t * qdif * (qpow(l - a + 1) + qpow(a - l - 1));
            case AlgebraType::B:
                if (a == l)
                    return (qpow(1) + qpow(-1)) * (qhalf(1) - qhalf(-1)) - (qhalf(1) - qhalf(-1));
                return (qhalf(2 * (l - a) - 3) + qhalf(2 * (a - l) + 3)) * qdif;
            case AlgebraType::C:
                return qdif * (qpow(l - a + 2) + qpow(a - l - 2));
            default:
                return qdif * (qpow(l - a - 2) + qpow(a - l + 2));
        }
    }
    // two equal indices, the odd one adjacent in the chain
    int x, y;  // f_{x,x,y}
    if (a == b && c == a + 1) {
        x = a;
        y = c;
    } else if (b == c && a == b - 1) {
        x = b;
        y = a;
    } else {
        return RingElem(0);
    }
    RingElem split;  // value of f_{y+1,y+1,y}; f_{y-1,y-1,y} is its negative
    switch (rs.type) {
        case AlgebraType::A:
            split = -fw.s * (qpow(-y) - qpow(y)) - fw.t * (qpow(l - y + 1) - qpow(y - l - 1));
            break;
        case AlgebraType::B: split = -(qhalf(2 * (l - y) - 3) - qhalf(2 * (y - l) + 3)); break;
        case AlgebraType::C: split = -(qpow(l - y + 2) - qpow(y - l - 2)); break;
        default: split = -(qpow(l - y - 2) - qpow(y - l + 2)); break;
    }
    return x == y + 1 ? split : -split;
}

// ---- N values: base patterns plus the rewrite closure ----

// base patterns as tabulated; false when (a, b) is not of tabulated shape
inline bool closed_N_base(const RootSystem& rs, const EpsVec& a, const EpsVec& b, RingElem& out,
                          const FamilyWeights& fw) {
    const int l = rs.rank;
    int i = 0, j = 0, k = 0, m = 0;
    auto d = [](int x, int y) { return x == y ? 1 : 0; };
    switch (rs.type) {
        case AlgebraType::A:
            if (!shape_chain(a, i, j) || !shape_chain(b, k, m)) return false;
            out = qhalf(1 - 2 * j) * (fw.s + fw.t * qpow(l + 1)) * d(j, k) -
                  qhalf(2 * i - 1) * (fw.s + fw.t * qpow(-l - 1)) * d(i, m);
            return true;
        case AlgebraType::B:
            if (shape_chain(a, i, j) && i < j) {
                if (shape_chain(b, k, m) && k < m) {
                    out = qpow(l - k - 1) * d(j, k) - qpow(m - l + 1) * d(i, m);
                    return true;
                }
                if (shape_sum(b, k, m)) {
                    out = qpow(l - k - 1) * d(j, k);
                    if (j == m) out += i > k ? qpow(l - m + 1) : -qpow(l - m);
                    return true;
                }
                if (shape_single(b, 1, m)) {
                    out = qpow(l - m - 1) * d(j, m);
                    return true;
                }
                return false;
            }
            if (shape_single(a, 1, j) && shape_single(b, 1, m)) {
                if (j > m)
                    out = qhalf(1);
                else
                    out = j < m ? -qhalf(-1) : RingElem(0);
                return true;
            }
            return false;
        case AlgebraType::C: {
            if (!shape_chain(a, i, j) || i >= j) return false;
            if (shape_chain(b, k, m) && k < m) {
                out = parity(l - i) * qhalf(2 * (i - l) - 5) * d(i, m) -
                      parity(l - j) * qhalf(2 * (l - j) + 5) * d(j, k);
                return true;
            }
            if (shape_sum(b, k, m)) {
                RingElem inner = qhalf(2 * (l - j) + 5) * d(j, k);
                if (j == m) {
                    if (i < k) inner += qhalf(2 * (l - j) + 3);
                    // no parity factor: forced by the long-root row and the symmetries
                    if (i == k) inner += selem() * qpow(l - j + 1);
                    if (i > k) inner += qhalf(2 * (l - j) + 1);
                }
                out = -parity(l - j) * inner;
                return true;
            }
            if (shape_single(b, 2, m)) {
                out = -parity(l - j) * selem() * qpow(l - j + 2) * d(j, m);
                return true;
            }
            EpsVec nb = eps_neg(b);
            if (shape_single(nb, 2, m)) {
                out = parity(l - j) * selem() * qpow(i - l - 1) * d(i, m);
                return true;
            }
            return false;
        }
        default:
            if (!shape_chain(a, i, j) || i >= j) return false;
            if (shape_chain(b, k, m) && k < m) {
                out = qhalf(2 * (l - j) - 3) * d(j, k) - qhalf(2 * (i - l) + 3) * d(i, m);
                return true;
            }
            if (shape_sum(b, k, m)) {
                out = qhalf(2 * (l - j) - 3) * d(j, k);
                if (j == m) out -= i < k ? qhalf(2 * (l - j) - 1) : -qhalf(2 * (l - j) + 1);
                return true;
            }
            return false;
    }
}

// depth-capped search through the symmetry moves: negating both arguments,
// swapping the arguments, and rotating through the zero-sum triple.  All
// successful branches must agree.
inline std::optional<RingElem> closed_N_search(const RootSystem& rs, const EpsVec& a,
                                               const EpsVec& b, const FamilyWeights& fw,
                                               int depth) {
    RingElem base;
    if (closed_N_base(rs, a, b, base, fw)) return base;
    if (depth == 0) return std::nullopt;
    std::optional<RingElem> found;
    auto consider = [&](const RingElem& v) {
        if (found && !(*found == v))
            throw MathError("closed_N: conflicting derivations at " + eps_str(a) + ", " +
                            eps_str(b));
        found = v;
    };
    if (auto v = closed_N_search(rs, eps_neg(a), eps_neg(b), fw, depth - 1))
        consider(-v->qconj());
    if (auto v = closed_N_search(rs, b, a, fw, depth - 1)) consider(-v->qconj());
    EpsVec c = eps_neg(eps_add(a, b));
    if (auto v = closed_N_search(rs, b, c, fw, depth - 1))
        consider(RingElem::vpow(rs.two_rho_dot(b)) * *v);
    return found;
}

inline RingElem closed_N(const RootSystem& rs, const EpsVec& a, const EpsVec& b,
                         const FamilyWeights& fw = {}, int depth = 6) {
    EpsVec s = eps_add(a, b);
    if (eps_is_zero(s) || rs.root_index(s) < 0)
        throw MathError("closed_N: sum is not a root at " + eps_str(a) + ", " + eps_str(b));
    auto v = closed_N_search(rs, a, b, fw, depth);
    if (!v) throw MathError("closed_N: no derivation for " + eps_str(a) + ", " + eps_str(b));
    return *v;
}

// ---- the full closed tables, in the same layout the pipeline extracts ----

inline StructureConstants closed_constants(const RootSystem& rs, const FamilyWeights& fw = {}) {
    const int l = rs.rank;
    const int nr = static_cast<int>(rs.roots.size());
    StructureConstants sc;
    sc.rs = rs;

    sc.l.assign(nr, std::vector<RingElem>(l));
    sc.r.assign(nr, std::vector<RingElem>(l));
    for (int a = 0; a < nr; ++a)
        for (int i = 1; i <= l; ++i) {
            sc.l[a][i - 1] = closed_l(rs, rs.roots[a], i, fw);
            sc.r[a][i - 1] = sc.l[a][i - 1].qconj();
        }

    const auto Binv = closed_killing_inverse(rs);

    sc.fud.assign(l, std::vector<std::vector<RingElem>>(l, std::vector<RingElem>(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                RingElem x;
                for (int m = 0; m < l; ++m) x += closed_f3(rs, i + 1, j + 1, m + 1, fw) * Binv[m][k];
                sc.fud[i][j][k] = x;
            }

    sc.g.assign(nr, std::vector<RingElem>(l));
    for (int a = 0; a < nr; ++a) {
        RingElem w = RingElem::vpow(-rs.two_rho_dot(rs.roots[a]));
        for (int k = 0; k < l; ++k) {
            RingElem x;
            for (int j = 0; j < l; ++j) x += sc.l[a][j] * Binv[j][k];
            sc.g[a][k] = -w * x;
        }
    }

    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            EpsVec s = eps_add(rs.roots[a], rs.roots[b]);
            if (!eps_is_zero(s) && rs.root_index(s) >= 0)
                sc.N[{a, b}] = closed_N(rs, rs.roots[a], rs.roots[b], fw);
        }
    return sc;
}

// ---- comparison and identity suites ----

inline CheckReport compare_constants(const StructureConstants& x, const StructureConstants& y) {
    CheckReport rp;
    const RootSystem& rs = x.rs;
    const int l = rs.rank;
    const int nr = static_cast<int>(rs.roots.size());
    // mismatch labels carry both values, so a report line is a counterexample
    auto cmp = [&](const RingElem& xv, const RingElem& yv, auto&& where) {
        if (xv == yv)
            rp.check(true, {});
        else
            rp.fail(where() + ": " + xv.str() + " vs " + yv.str());
    };
    for (int a = 0; a < nr; ++a)
        for (int i = 0; i < l; ++i) {
            auto at = [&](const char* t) {
                return [&, t] {
                    return std::string(t) + " at " + eps_str(rs.roots[a]) + ", H_" +
                           std::to_string(i + 1);
                };
            };
            cmp(x.l[a][i], y.l[a][i], at("l"));
            cmp(x.r[a][i], y.r[a][i], at("r"));
            cmp(x.g[a][i], y.g[a][i], at("g"));
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k)
                cmp(x.fud[i][j][k], y.fud[i][j][k], [&] {
                    return "f at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                           "," + std::to_string(k + 1) + ")";
                });
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            EpsVec s = eps_add(rs.roots[a], rs.roots[b]);
            if (eps_is_zero(s) || rs.root_index(s) < 0) continue;
            cmp(x.N_at(rs.roots[a], rs.roots[b]), y.N_at(rs.roots[a], rs.roots[b]), [&] {
                return "N at " + eps_str(rs.roots[a]) + ", " + eps_str(rs.roots[b]);
            });
        }
    return rp;
}

// proportionality factor between the Killing row and the symmetrized root
inline RingElem closed_xi(const RootSystem& rs, int i) {
    const int l = rs.rank;
    switch (rs.type) {
        case AlgebraType::B: return qhalf(2 * (i - l) + 3) + qhalf(2 * (l - i) - 3);
        case AlgebraType::C:
            if (i < l) return qpow(i - l - 2) + qpow(l - i + 2);
            return (qpow(1) + qpow(-1)) * (qpow(1) + qpow(-1));
        case AlgebraType::D:
            if (i < l) return qpow(i - l + 2) + qpow(l - i - 2);
            return qpow(1) + qpow(-1);
        default: throw MathError("closed_xi: extracted from the table instead");
    }
}

// the q-conjugation symmetries, total symmetry of the lowered f, and the
// two observations tying the Cartan data to the quantum roots
inline CheckReport symmetry_suite(const StructureConstants& sc, const KillingTable& kt) {
    CheckReport rp;
    const RootSystem& rs = sc.rs;
    const int l = rs.rank;
    const int nr = static_cast<int>(rs.roots.size());
    const auto& B = kt.cartan;
    auto neg = [&](int a) { return kt.neg[a]; };
    auto lab = [&](int a) { return eps_str(rs.roots[a]); };

    for (int a = 0; a < nr; ++a)
        for (int i = 0; i < l; ++i) {
            rp.check(sc.l[a][i] == sc.r[a][i].qconj(), "l = conj r at " + lab(a));
            rp.check(sc.l[a][i] == -sc.l[neg(a)][i].qconj(), "l mirror at " + lab(a));
            rp.check(sc.g[a][i] == -sc.g[neg(a)][i].qconj(), "g mirror at " + lab(a));
        }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                rp.check(sc.fud[i][j][k] == -sc.fud[j][i][k].qconj(), "f swap");
                rp.check(sc.fud[i][j][k] == -sc.fud[i][j][k].qconj(), "f is q-odd");
            }
    for (const auto& [key, v] : sc.N) {
        auto [a, b] = key;
        rp.check(v == -sc.N.at({b, a}).qconj(), "N swap at " + lab(a) + ", " + lab(b));
        rp.check(v == -sc.N.at({neg(a), neg(b)}).qconj(),
                 "N mirror at " + lab(a) + ", " + lab(b));
        int c = rs.root_index(eps_neg(eps_add(rs.roots[a], rs.roots[b])));
        rp.check(v == RingElem::vpow(rs.two_rho_dot(rs.roots[b])) * sc.N.at({b, c}),
                 "N rotation at " + lab(a) + ", " + lab(b));
    }
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                RingElem lhs, rhs;
                for (int m = 0; m < l; ++m) {
                    lhs += sc.fud[j][k][m] * B[i][m];
                    rhs += sc.fud[j][i][m] * B[m][k];
                }
                rp.check(lhs == rhs, "f intertwines the Cartan form");
            }
    for (int a = 0; a < nr; ++a) {
        RingElem w = RingElem::vpow(-rs.two_rho_dot(rs.roots[a]));
        for (int j = 0; j < l; ++j) {
            RingElem lhs;
            for (int i = 0; i < l; ++i) lhs += sc.g[a][i] * B[i][j];
            rp.check(-lhs == sc.l[a][j] * w, "g pairs with l at " + lab(a));
        }
    }

    auto f3 = lowered_f(sc, B);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                rp.check(f3[i][j][k] == f3[j][i][k] && f3[i][j][k] == f3[i][k][j],
                         "lowered f is symmetric");
                if (inner(rs.simple[i], rs.simple[j]) == 0 ||
                    inner(rs.simple[i], rs.simple[k]) == 0 ||
                    inner(rs.simple[j], rs.simple[k]) == 0)
                    rp.check(f3[i][j][k].is_zero(), "lowered f vanishes off the diagram");
            }

    // the Cartan bracket is the split between left and right roots
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            int aj = rs.root_index(rs.simple[j]);
            rp.check(f3[i][i][j] == B[i][j] * (sc.l[aj][i] - sc.r[aj][i]),
                     "f is the left/right split at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
        }

    // the Killing row is the symmetrized simple root, scaled by xi
    for (int i = 0; i < l; ++i) {
        int ai = rs.root_index(rs.simple[i]);
        RingElem xi;
        if (rs.type == AlgebraType::A) {
            xi = (sc.l[ai][i] + sc.r[ai][i]) / B[i][i];
            rp.check(!xi.is_zero(), "extracted xi is invertible");
        } else {
            xi = closed_xi(rs, i + 1);
        }
        for (int j = 0; j < l; ++j)
            rp.check(xi * B[i][j] == sc.l[ai][j] + sc.r[ai][j],
                     "symmetrized root is the Killing row at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
    }
    return rp;
}

// zero patterns: the root actions match the classical support except for
// the known quantum enhancements, listed per series.
inline CheckReport support_suite(const StructureConstants& sc) {
    CheckReport rp;
    const RootSystem& rs = sc.rs;
    const int l = rs.rank;
    const int nr = static_cast<int>(rs.roots.size());
    auto classical = [&](const EpsVec& a, int i) {  // 1-based i
        if (rs.type == AlgebraType::D && i == l) return a[l - 2] + a[l - 1];
        if (i < l || rs.type == AlgebraType::A) return a[i - 1] - (i < static_cast<int>(a.size()) ? a[i] : 0);
        return a[l - 1];
    };
    auto enhanced = [&](const EpsVec& a, int i) {
        int m = 0;
        if (rs.type == AlgebraType::B && i == l)
            return (shape_single(a, 1, m) || shape_single(eps_neg(a), 1, m)) && m < l;
        if (rs.type == AlgebraType::C) {
            int k = 0;
            return (shape_sum(a, k, m) || shape_sum(eps_neg(a), k, m)) && k == i && m == i + 1;
        }
        return false;
    };
    for (int a = 0; a < nr; ++a)
        for (int i = 1; i <= l; ++i) {
            bool expect = classical(rs.roots[a], i) != 0 || enhanced(rs.roots[a], i);
            rp.check(sc.l[a][i - 1].is_zero() == !expect,
                     "root support at " + eps_str(rs.roots[a]) + ", H_" + std::to_string(i));
        }
    return rp;
}

// the three composed-map identities, sharing one proportionality constant
struct RelationResult {
    CheckReport report;
    RingElem constant;
};

inline RelationResult verify_relations(const StructureConstants& sc, const KillingTable& kt) {
    RelationResult res;
    CheckReport& rp = res.report;
    const RootSystem& rs = sc.rs;
    const int l = rs.rank;
    const int nr = static_cast<int>(rs.roots.size());
    const auto& B = kt.cartan;
    const auto& Binv = kt.cartan_inv;

    for (int m = 0; m < l; ++m) {
        RingElem sum;
        for (int a = 0; a < nr; ++a)
            sum += sc.l[a][m] * qpow(-rs.two_rho_dot(rs.roots[a]));
        for (int i = 0; i < l; ++i) sum += sc.fud[m][i][i];
        rp.check(sum.is_zero(), "weighted root sum closes at H_" + std::to_string(m + 1));
    }

    bool first = true;
    for (int a = 0; a < nr; ++a) {
        RingElem sum;
        for (int b = 0; b < nr; ++b) {
            auto it = sc.N.find({a, b});
            if (it != sc.N.end())
                sum += it->second * it->second * qpow(-rs.two_rho_dot(rs.roots[b]));
        }
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j)
                sum += (sc.r[a][i] * sc.r[a][j] + sc.l[a][i] * sc.l[a][j]) * Binv[i][j];
        if (first) {
            res.constant = sum;
            first = false;
        } else {
            rp.check(sum == res.constant,
                     "quadratic invariant at " + eps_str(rs.roots[a]));
        }
    }

    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            RingElem sum;
            for (int a = 0; a < nr; ++a)
                sum += sc.l[a][i] * sc.l[a][j] * qpow(-rs.two_rho_dot(rs.roots[a]));
            for (int m = 0; m < l; ++m)
                for (int x = 0; x < l; ++x) {
                    RingElem up, down;
                    for (int k = 0; k < l; ++k) up += sc.fud[i][k][m] * Binv[k][x];
                    for (int n = 0; n < l; ++n) down += sc.fud[m][x][n] * B[n][j];
                    sum += up * down;
                }
            rp.check(sum == res.constant * B[i][j],
                     "Cartan invariant at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
        }
    return res;
}

// the tabulated rank-two symplectic algebra: left roots on both Cartan
// generators and the full grid of N values in units of (q+q^{-1})^{1/2}
inline CheckReport verify_c2_reference(const StructureConstants& sc) {
    CheckReport rp;
    const RootSystem& rs = sc.rs;
    rp.check(rs.type == AlgebraType::C && rs.rank == 2, "rank-two symplectic input");
    if (!rp.ok()) return rp;
    auto ev = [](int i, int ci, int j = 0, int cj = 0) {
        EpsVec e(2, 0);
        e[i - 1] += ci;
        if (j) e[j - 1] += cj;
        return e;
    };
    const EpsVec a1 = ev(1, 1, 2, -1), a2 = ev(2, 2), a12 = ev(1, 1, 2, 1), a112 = ev(1, 2);
    const RingElem two = qpow(1) + qpow(-1);

    std::vector<std::pair<EpsVec, std::array<RingElem, 2>>> left = {
        {a1, {two * (qpow(2) - RingElem(1) + qpow(-2)) * qpow(1), -qpow(-3)}},
        {a2, {-two * qpow(1), qpow(2) * two}},
        {a12, {two * (qpow(1) - qpow(-1)) * qpow(2), qpow(1)}},
        {a112, {two * qpow(3), RingElem(0)}},
    };
    for (const auto& [root, vals] : left)
        for (int i = 1; i <= 2; ++i)
            rp.check(sc.l_at(root, i) == vals[i - 1],
                     "tabulated left root at " + eps_str(root) + ", H_" + std::to_string(i));

    const std::vector<EpsVec> rows = {a112, a12, a2, a1};
    const std::vector<EpsVec> cols = {a112,          a12,          a2,          a1,
                                      eps_neg(a1),   eps_neg(a2),  eps_neg(a12), eps_neg(a112)};
    const int Z = 99;  // marks entries outside the root lattice
    const int table[4][8] = {
        {0, 0, 0, 0, -2, Z, -2, Z},   // exponents; negative entries listed below
        {0, 0, 0, -1, -3, 0, 0, -2},
        {0, 0, 0, -2, 0, 0, 0, Z},
        {0, 1, 2, 0, 0, 0, -3, -2},
    };
    const bool minus[4][8] = {
        {false, false, false, false, false, false, true, false},
        {false, false, false, false, false, true, false, true},
        {false, false, false, false, false, false, true, false},
        {false, true, true, false, false, false, false, false},
    };
    const bool zero[4][8] = {
        {true, true, true, true, false, true, false, true},
        {true, true, true, false, false, false, true, false},
        {true, true, true, false, true, true, false, true},
        {true, false, false, true, true, true, false, false},
    };
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 8; ++c) {
            RingElem want;
            if (!zero[r][c])
                want = (minus[r][c] ? RingElem(-1) : RingElem(1)) * qpow(table[r][c]) * selem();
            rp.check(sc.N_at(rows[r], cols[c]) == want,
                     "tabulated N at " + eps_str(rows[r]) + ", " + eps_str(cols[c]));
        }
    return rp;
}

}  // namespace qla
