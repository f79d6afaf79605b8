#pragma once

// The quantum Lie algebra realized inside V ⊗ V.  The adjoint submodule
// vectors are rescaled into root vectors X_alpha and Cartan elements H_i,
// and the bracket of two generators is computed by pairing the inner tensor
// factors with the invariant singlet covector and reading the result off
// against the generator duals.  One overall scalar (the composed map is only
// fixed up to normalization) is calibrated once per algebra against an
// anchor value, after which every coefficient is exact.

#include "qla/report.hpp"
#include "qla/tensordecomp.hpp"

#include <cstdlib>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace qla {

// Generators carry a dense index: the roots first, in root-system order,
// then H_1 .. H_l.
struct GenLabel {
    bool cartan = false;
    EpsVec root;    // when !cartan
    int index = 0;  // 1-based Cartan index when cartan

    static GenLabel X(EpsVec a) {
        GenLabel g;
        g.root = std::move(a);
        return g;
    }
    static GenLabel H(int i) {
        GenLabel g;
        g.cartan = true;
        g.index = i;
        return g;
    }
    std::string str() const {
        return cartan ? "H_" + std::to_string(index) : "X_" + eps_str(root);
    }
    friend bool operator==(const GenLabel&, const GenLabel&) = default;
    friend bool operator<(const GenLabel& a, const GenLabel& b) {
        if (a.cartan != b.cartan) return !a.cartan;
        return a.cartan ? a.index < b.index : a.root < b.root;
    }
};

struct AdjointRealization {
    RootSystem rs;
    TensorDecomp dec;
    RingElem xi;                     // (q + q^{-1}) <t, t>
    TensorVec singlet_dual;          // <T| with <T, t> = 1
    RingElem lambda = RingElem(1);   // global bracket calibration
    int n_roots = 0;
    std::vector<TensorVec> vectors;  // generator -> element of V ⊗ V
    std::vector<TensorVec> duals;    // <duals[a], vectors[b]> = delta_ab

    int size() const { return n_roots + rs.rank; }

    int root_gen(const EpsVec& a) const {
        int k = rs.root_index(a);
        if (k < 0) throw MathError("not a root: " + eps_str(a));
        return k;
    }
    int cartan_gen(int i) const {  // i is 1-based
        if (i < 1 || i > rs.rank) throw MathError("Cartan index out of range");
        return n_roots + i - 1;
    }
    int gen_of(const GenLabel& g) const { return g.cartan ? cartan_gen(g.index) : root_gen(g.root); }
    GenLabel label(int g) const {
        return g < n_roots ? GenLabel::X(rs.roots[g]) : GenLabel::H(g - n_roots + 1);
    }
    EpsVec gen_weight(int g) const { return g < n_roots ? rs.roots[g] : EpsVec(rs.ambient, 0); }
};

inline AdjointRealization build_adjoint_realization(const TensorDecomp& dec) {
    AdjointRealization real;
    real.rs = dec.rep.rs;
    real.dec = dec;
    const RootSystem& rs = real.rs;
    const int l = rs.rank;
    const SubmoduleBasis& adj = dec.adjoint();
    const SubmoduleBasis& sing = dec.parts[2];
    const TensorVec& t = sing.vectors[sing.singlet_index];
    real.singlet_dual = sing.duals[sing.singlet_index];

    const RingElem qq = qpow(1) + qpow(-1);
    real.xi = qq * pair_form(t, t);
    real.n_roots = static_cast<int>(rs.roots.size());
    real.vectors.assign(real.size(), TensorVec{});
    real.duals.assign(real.size(), TensorVec{});

    auto bar = [&](int i) { return dec.rep.bar(i); };
    auto eps = [&](int i, int ci, int j, int cj) {
        EpsVec e(l, 0);
        e[i - 1] += ci;
        if (j) e[j - 1] += cj;
        return e;
    };
    auto set_root = [&](const EpsVec& alpha, int i, int j, const RingElem& c) {
        int g = real.root_gen(alpha);
        int b = adj.pair_index.at({i, j});
        real.vectors[g] = c * adj.vectors[b];
        real.duals[g] = c.inv() * adj.duals[b];
    };
    auto set_cartan = [&](int i, const RingElem& c) {  // H_i = c * v_i
        int g = real.cartan_gen(i);
        int b = adj.cart_index.at(i);
        real.vectors[g] = c * adj.vectors[b];
        real.duals[g] = c.inv() * adj.duals[b];
    };

    const RingElem& xi = real.xi;
    switch (rs.type) {
        case AlgebraType::A:
            throw MathError("the tensor-square realization covers B, C, D only");

        case AlgebraType::B: {
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) {
                    set_root(eps(i, 1, j, -1), i, bar(j), xi);
                    set_root(eps(i, -1, j, 1), j, bar(i), xi);
                    set_root(eps(i, 1, j, 1), i, j, xi);
                    set_root(eps(i, -1, j, -1), bar(j), bar(i), xi);
                }
            for (int j = 1; j <= l; ++j) {
                set_root(eps(j, 1, 0, 0), j, l + 1, xi);
                set_root(eps(j, -1, 0, 0), l + 1, bar(j), xi);
            }
            for (int i = 1; i <= l; ++i) set_cartan(i, xi);
            break;
        }

        case AlgebraType::C: {
            const RingElem s = selem();  // (q + q^{-1})^{1/2}
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) {
                    RingElem sg((j - i) % 2 == 0 ? 1 : -1);
                    set_root(eps(i, 1, j, -1), i, bar(j), sg * xi);
                    set_root(eps(i, -1, j, 1), j, bar(i), xi);
                    set_root(eps(i, 1, j, 1), i, j, -sg * xi);
                    set_root(eps(i, -1, j, -1), bar(j), bar(i), xi);
                }
            for (int j = 1; j <= l; ++j) {
                set_root(eps(j, 2, 0, 0), j, j, -xi * s);
                set_root(eps(j, -2, 0, 0), bar(j), bar(j), xi * s);
            }
            RingElem hs((l + 1) % 2 == 0 ? 1 : -1);  // (-1)^{l+1}
            for (int i = 1; i <= l; ++i) set_cartan(i, hs * xi);
            break;
        }

        default: {  // D
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) {
                    set_root(eps(i, 1, j, -1), i, bar(j), xi);
                    set_root(eps(i, -1, j, 1), j, bar(i), xi);
                    set_root(eps(i, 1, j, 1), i, j, xi);
                    set_root(eps(i, -1, j, -1), bar(j), bar(i), xi);
                }
            for (int i = 1; i < l; ++i) set_cartan(i, xi);
            // H_l mixes the last two zero-weight vectors; the duals follow
            // from inverting that 2x2 change of basis.
            const TensorVec& vm = adj.vectors[adj.cart_index.at(l - 1)];
            const TensorVec& vl = adj.vectors[adj.cart_index.at(l)];
            const TensorVec& dm = adj.duals[adj.cart_index.at(l - 1)];
            const TensorVec& dl = adj.duals[adj.cart_index.at(l)];
            real.vectors[real.cartan_gen(l)] = xi * (vm + qq * vl);
            RingElem xinv = xi.inv();
            real.duals[real.cartan_gen(l - 1)] = xinv * (dm - qq.inv() * dl);
            real.duals[real.cartan_gen(l)] = (xinv * qq.inv()) * dl;
            break;
        }
    }

    for (int g = 0; g < real.size(); ++g)
        if (real.vectors[g].is_zero())
            throw MathError("generator " + real.label(g).str() + " was not identified");
    return real;
}

// Weight homogeneity of every generator vector and exact duality of the
// rescaled system.
inline CheckReport verify_realization(const AdjointRealization& real) {
    CheckReport rp;
    const int n = real.size();
    for (int g = 0; g < n; ++g) {
        EpsVec w = real.gen_weight(g);
        bool homog = true;
        for (const auto& [k, c] : real.vectors[g].entries)
            homog = homog && (eps_add(real.dec.rep.weight[k.first - 1],
                                      real.dec.rep.weight[k.second - 1]) == w);
        rp.check(homog, "weight of " + real.label(g).str());
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            rp.check(pair_form(real.duals[a], real.vectors[b]) == RingElem(a == b ? 1 : 0),
                     "duality of " + real.label(a).str() + " against " + real.label(b).str());
    const TensorVec& t = real.dec.parts[2].vectors[real.dec.parts[2].singlet_index];
    rp.check(real.xi == (qpow(1) + qpow(-1)) * pair_form(t, t), "xi normalization");
    rp.check(pair_form(real.singlet_dual, t) == RingElem(1), "singlet dual normalization");
    return rp;
}

// <a ⊗ b| with the singlet covector eating the inner factors; coefficients
// of the bracket are pairings of generator duals against this element.
inline TensorVec middle_contraction(const AdjointRealization& real, const TensorVec& a,
                                    const TensorVec& b) {
    TensorVec m;
    const auto& t = real.singlet_dual.entries;
    for (const auto& [ka, ca] : a.entries)
        for (const auto& [kb, cb] : b.entries) {
            auto it = t.find({ka.second, kb.first});
            if (it != t.end()) m.add(ka.first, kb.second, ca * it->second * cb);
        }
    return m;
}

// Dense coefficient vector of [gen_a, gen_b] over all generators.
inline std::vector<RingElem> bracket_coefficients(const AdjointRealization& real, int a, int b) {
    TensorVec m = middle_contraction(real, real.vectors[a], real.vectors[b]);
    std::vector<RingElem> out(real.size());
    if (m.is_zero()) return out;
    for (int c = 0; c < real.size(); ++c) {
        RingElem x = pair_form(real.duals[c], m);
        if (!x.is_zero()) out[c] = real.lambda * x;
    }
    return out;
}

inline std::map<GenLabel, RingElem> bracket(const AdjointRealization& real, const GenLabel& a,
                                            const GenLabel& b) {
    std::vector<RingElem> coef = bracket_coefficients(real, real.gen_of(a), real.gen_of(b));
    std::map<GenLabel, RingElem> out;
    for (int c = 0; c < real.size(); ++c)
        if (!coef[c].is_zero()) out.emplace(real.label(c), coef[c]);
    return out;
}

inline int thread_count() {
    if (const char* env = std::getenv("QLA_THREADS")) {
        int k = std::atoi(env);
        if (k >= 1) return k;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

struct BracketTable {
    int n = 0;
    std::vector<std::vector<std::vector<RingElem>>> coef;  // [a][b] -> dense over c

    const std::vector<RingElem>& at(int a, int b) const { return coef[a][b]; }
};

inline BracketTable compute_bracket_table(const AdjointRealization& real) {
    BracketTable tb;
    const int n = tb.n = real.size();
    tb.coef.assign(n, std::vector<std::vector<RingElem>>(n));
    const int nt = std::min(thread_count(), n);
    auto work = [&](int t0) {
        for (int a = t0; a < n; a += nt)
            for (int b = 0; b < n; ++b) tb.coef[a][b] = bracket_coefficients(real, a, b);
    };
    if (nt <= 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int t = 1; t < nt; ++t) pool.emplace_back(work, t);
        work(0);
        for (auto& th : pool) th.join();
    }
    return tb;
}

// Fixes the overall scalar of the composed map against one anchor: the
// coefficient of X_{alpha_1} in [H_1, X_{alpha_1}].
inline RingElem calibrate(AdjointRealization& real, const RingElem& anchor) {
    real.lambda = RingElem(1);
    const int h1 = real.cartan_gen(1);
    const int x1 = real.root_gen(real.rs.simple[0]);
    RingElem raw = bracket_coefficients(real, h1, x1)[x1];
    if (raw.is_zero()) throw MathError("calibration anchor vanished");
    real.lambda = anchor / raw;
    return real.lambda;
}

// Bracket data in the graded basis:
//   [H_i, X_a] = l_a(H_i) X_a          [X_a, H_i] = -r_a(H_i) X_a
//   [H_i, H_j] = sum_k f_ij^k H_k      [X_a, X_{-a}] = -sum_k g_a^k H_k
//   [X_a, X_b] = N_{a,b} X_{a+b} when a+b is a root, 0 otherwise.
struct StructureConstants {
    RootSystem rs;
    std::vector<std::vector<RingElem>> l, r;              // [root][i-1]
    std::vector<std::vector<std::vector<RingElem>>> fud;  // [i-1][j-1][k-1], upper k
    std::vector<std::vector<RingElem>> g;                 // [root][k-1]
    std::map<std::pair<int, int>, RingElem> N;            // (root, root), sum a root

    RingElem l_at(const EpsVec& a, int i) const { return l[idx(a)][i - 1]; }
    RingElem r_at(const EpsVec& a, int i) const { return r[idx(a)][i - 1]; }
    RingElem g_at(const EpsVec& a, int k) const { return g[idx(a)][k - 1]; }
    RingElem f_at(int i, int j, int k) const { return fud[i - 1][j - 1][k - 1]; }
    RingElem N_at(const EpsVec& a, const EpsVec& b) const {
        auto it = N.find({idx(a), idx(b)});
        return it == N.end() ? RingElem(0) : it->second;
    }

private:
    int idx(const EpsVec& a) const {
        int k = rs.root_index(a);
        if (k < 0) throw MathError("not a root: " + eps_str(a));
        return k;
    }
};

inline StructureConstants extract_structure_constants(const AdjointRealization& real,
                                                      const BracketTable& tb) {
    const RootSystem& rs = real.rs;
    const int l = rs.rank;
    const int nr = real.n_roots;
    const int n = real.size();

    StructureConstants sc;
    sc.rs = rs;

    auto only = [&](const std::vector<RingElem>& row, auto&& allowed, const std::string& what) {
        for (int c = 0; c < n; ++c)
            if (!row[c].is_zero() && !allowed(c))
                throw MathError("grading violation: " + what + " leaks onto " +
                                real.label(c).str());
    };

    sc.l.assign(nr, std::vector<RingElem>(l));
    sc.r.assign(nr, std::vector<RingElem>(l));
    for (int a = 0; a < nr; ++a)
        for (int i = 1; i <= l; ++i) {
            const auto& hx = tb.at(real.cartan_gen(i), a);
            only(hx, [&](int c) { return c == a; }, "[H_i, X]");
            sc.l[a][i - 1] = hx[a];
            const auto& xh = tb.at(a, real.cartan_gen(i));
            only(xh, [&](int c) { return c == a; }, "[X, H_i]");
            sc.r[a][i - 1] = -xh[a];
        }

    sc.fud.assign(l, std::vector<std::vector<RingElem>>(l, std::vector<RingElem>(l)));
    for (int i = 1; i <= l; ++i)
        for (int j = 1; j <= l; ++j) {
            const auto& row = tb.at(real.cartan_gen(i), real.cartan_gen(j));
            only(row, [&](int c) { return c >= nr; }, "[H, H]");
            for (int k = 1; k <= l; ++k) sc.fud[i - 1][j - 1][k - 1] = row[nr + k - 1];
        }

    sc.g.assign(nr, std::vector<RingElem>(l));
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            const auto& row = tb.at(a, b);
            EpsVec s = eps_add(rs.roots[a], rs.roots[b]);
            if (eps_is_zero(s)) {
                only(row, [&](int c) { return c >= nr; }, "[X, X] at opposite roots");
                for (int k = 1; k <= l; ++k) sc.g[a][k - 1] = -row[nr + k - 1];
            } else if (int cidx = rs.root_index(s); cidx >= 0) {
                only(row, [&](int c) { return c == cidx; }, "[X, X] at a root sum");
                sc.N[{a, b}] = row[cidx];
            } else {
                only(row, [](int) { return false; }, "[X, X] off the root lattice");
            }
        }
    return sc;
}

// f with the last index lowered by the Killing form on the Cartan block;
// this combination is completely symmetric in all three indices.
inline std::vector<std::vector<std::vector<RingElem>>> lowered_f(
    const StructureConstants& sc, const std::vector<std::vector<RingElem>>& killing_cartan) {
    const int l = sc.rs.rank;
    std::vector f3(l, std::vector(l, std::vector<RingElem>(l)));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            for (int k = 0; k < l; ++k) {
                RingElem x;
                for (int m = 0; m < l; ++m) x += sc.fud[i][j][m] * killing_cartan[m][k];
                f3[i][j][k] = x;
            }
    return f3;
}

}  // namespace qla
