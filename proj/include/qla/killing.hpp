#pragma once

// The invariant bilinear form on the algebra, computed from the same
// composed map as the bracket (both inner pairings against the singlet
// covector, divided by the series constant N), together with its closed
// Cartan matrices, their printed inverses, exact matrix inversion, the
// ad-invariance check, and the companion pairing attached to the dagger
// antiautomorphism.

#include "qla/qlabuild.hpp"

#include <random>
#include <string>
#include <vector>

namespace qla {

struct KillingTable {
    RootSystem rs;
    int n_roots = 0;
    std::vector<int> neg;                           // root index of -alpha
    std::vector<std::vector<RingElem>> cartan;      // B(H_i, H_j)
    std::vector<RingElem> root_pair;                // a -> B(X_a, X_{-a})
    std::vector<std::vector<RingElem>> cartan_inv;  // B^{ij}
    std::vector<RingElem> root_pair_inv;            // B^{-a,a}

    // the form on generator indices (roots first, then H_1..H_l)
    RingElem form(int x, int y) const {
        bool xc = x >= n_roots, yc = y >= n_roots;
        if (xc && yc) return cartan[x - n_roots][y - n_roots];
        if (xc || yc) return RingElem(0);
        return neg[x] == y ? root_pair[x] : RingElem(0);
    }
};

inline void fill_root_block(KillingTable& kt) {
    const RootSystem& rs = kt.rs;
    kt.n_roots = static_cast<int>(rs.roots.size());
    kt.neg.resize(kt.n_roots);
    for (int a = 0; a < kt.n_roots; ++a) kt.neg[a] = rs.root_index(eps_neg(rs.roots[a]));
}

// Exact inverse by Gauss-Jordan elimination over the coefficient field.
inline std::vector<std::vector<RingElem>> invert_matrix(std::vector<std::vector<RingElem>> m) {
    const int n = static_cast<int>(m.size());
    std::vector id(n, std::vector<RingElem>(n));
    for (int i = 0; i < n; ++i) id[i][i] = RingElem(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!m[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw MathError("invert_matrix: singular matrix");
        std::swap(m[piv], m[col]);
        std::swap(id[piv], id[col]);
        RingElem inv = m[col][col].inv();
        for (int c = 0; c < n; ++c) {
            m[col][c] *= inv;
            id[col][c] *= inv;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col].is_zero()) continue;
            RingElem f = m[r][col];
            for (int c = 0; c < n; ++c) {
                m[r][c] -= f * m[col][c];
                id[r][c] -= f * id[col][c];
            }
        }
    }
    return id;
}

// Cartan block of the closed form: [2]_q on the diagonal and -1 where the
// simple roots are non-orthogonal, except the short/long corner entries of
// the B and C series.
inline std::vector<std::vector<RingElem>> closed_killing_cartan(const RootSystem& rs) {
    const int l = rs.rank;
    std::vector B(l, std::vector<RingElem>(l));
    const RingElem two = qpow(1) + qpow(-1);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            if (i == j)
                B[i][j] = two;
            else if (inner(rs.simple[i], rs.simple[j]) != 0)
                B[i][j] = RingElem(-1);
        }
    if (rs.type == AlgebraType::B) B[l - 1][l - 1] = RingElem(1);
    if (rs.type == AlgebraType::C) B[l - 1][l - 1] = (qpow(2) + qpow(-2)) / two;
    return B;
}

inline std::vector<std::vector<RingElem>> closed_killing_inverse(const RootSystem& rs) {
    const int l = rs.rank;
    std::vector<std::vector<RingElem>> B(l, std::vector<RingElem>(l));
    auto upper = [&](int i, int j) {  // 1-based, i <= j
        switch (rs.type) {
            case AlgebraType::A:
                return qnum(i) * (qpow(l - j + 1) - qpow(j - l - 1)) /
                       (qpow(l + 1) - qpow(-l - 1));
            case AlgebraType::B:
                return qnum(i) * (qhalf(2 * (l - j) - 1) + qhalf(2 * (j - l) + 1)) /
                       (qhalf(2 * l - 1) + qhalf(1 - 2 * l));
            case AlgebraType::C:
                return qnum(i) * (qpow(l - j + 1) + qpow(j - l - 1)) /
                       (qpow(l + 1) + qpow(-l - 1));
            default: {  // D: the last two columns coincide and scale differently
                RingElem tail = ((qpow(1) + qpow(-1)) * (qpow(l - 1) + qpow(1 - l))).inv();
                if (i == l - 1 && j == l - 1) return qnum(l) * tail;
                if (i == l && j == l) return qnum(l) * tail;
                if (i == l - 1 && j == l) return qnum(l - 2) * tail;
                if (j >= l - 1)  // the two-term numerator degenerates at the fork
                    return qnum(i) / (qpow(l - 1) + qpow(1 - l));
                return qnum(i) * (qpow(l - j - 1) + qpow(j - l + 1)) /
                       (qpow(l - 1) + qpow(1 - l));
            }
        }
    };
    for (int i = 1; i <= l; ++i)
        for (int j = i; j <= l; ++j) B[i - 1][j - 1] = B[j - 1][i - 1] = upper(i, j);
    return B;
}

inline KillingTable closed_killing(const RootSystem& rs) {
    KillingTable kt;
    kt.rs = rs;
    fill_root_block(kt);
    kt.cartan = closed_killing_cartan(rs);
    kt.cartan_inv = closed_killing_inverse(rs);
    kt.root_pair.resize(kt.n_roots);
    kt.root_pair_inv.resize(kt.n_roots);
    for (int a = 0; a < kt.n_roots; ++a) {
        int rho2 = rs.two_rho_dot(rs.roots[a]);  // 2 rho . alpha
        kt.root_pair[a] = RingElem::vpow(-rho2);
        kt.root_pair_inv[a] = RingElem::vpow(rho2);
    }
    return kt;
}

// B(a, b) evaluated through the tensor-square realization; off-pattern
// entries (roots not summing to zero, mixed root/Cartan pairs) are checked
// to vanish and reported through rp when given.
inline KillingTable compute_killing(const AdjointRealization& real, CheckReport* rp = nullptr) {
    const RootSystem& rs = real.rs;
    KillingTable kt;
    kt.rs = rs;
    fill_root_block(kt);
    const int l = rs.rank;
    const int nr = kt.n_roots;

    RingElem nfac = (qpow(1) + qpow(-1)).pow(3);
    if (rs.type == AlgebraType::C) nfac = -nfac;
    const RingElem scale = real.lambda * real.lambda / nfac;

    auto value = [&](int x, int y) {
        return scale * pair_form(real.singlet_dual,
                                 middle_contraction(real, real.vectors[x], real.vectors[y]));
    };

    kt.cartan.assign(l, std::vector<RingElem>(l));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) kt.cartan[i][j] = value(nr + i, nr + j);

    kt.root_pair.assign(nr, RingElem(0));
    for (int a = 0; a < nr; ++a)
        for (int b = 0; b < nr; ++b) {
            RingElem v = value(a, b);
            if (b == kt.neg[a])
                kt.root_pair[a] = v;
            else if (rp)
                rp->check(v.is_zero(), "root block zero at " + real.label(a).str() + ", " +
                                           real.label(b).str());
        }
    if (rp) {
        bool mixed = true;
        for (int a = 0; a < nr; ++a)
            for (int i = 0; i < l; ++i)
                mixed = mixed && value(a, nr + i).is_zero() && value(nr + i, a).is_zero();
        rp->check(mixed, "mixed root/Cartan block vanishes");
    }

    kt.cartan_inv = invert_matrix(kt.cartan);
    kt.root_pair_inv.resize(nr);
    for (int a = 0; a < nr; ++a) kt.root_pair_inv[a] = kt.root_pair[a].inv();
    return kt;
}

// Structural facts about the form itself: inverse contracts, the
// q-asymmetry between B(X_a, X_{-a}) and B(X_{-a}, X_a), and the
// orthogonality pattern of the Cartan block.
inline CheckReport verify_killing_properties(const KillingTable& kt) {
    CheckReport rp;
    const RootSystem& rs = kt.rs;
    const int l = rs.rank;

    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            RingElem s;
            for (int m = 0; m < l; ++m) s += kt.cartan[i][m] * kt.cartan_inv[m][j];
            rp.check(s == RingElem(i == j ? 1 : 0),
                     "Cartan inverse contract at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
        }
    for (int a = 0; a < kt.n_roots; ++a)
        rp.check(kt.root_pair[a] * kt.root_pair_inv[a] == RingElem(1),
                 "root inverse contract at " + eps_str(rs.roots[a]));

    for (int a = 0; a < kt.n_roots; ++a) {
        int rho2 = rs.two_rho_dot(rs.roots[a]);
        rp.check(kt.root_pair[kt.neg[a]] == RingElem::vpow(2 * rho2) * kt.root_pair[a],
                 "pair asymmetry q^{2 rho.a} at " + eps_str(rs.roots[a]));
    }

    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j)
            rp.check(kt.cartan[i][j].is_zero() == (inner(rs.simple[i], rs.simple[j]) == 0),
                     "Cartan support pattern at (" + std::to_string(i + 1) + "," +
                         std::to_string(j + 1) + ")");
    return rp;
}

inline bool tables_equal(const KillingTable& a, const KillingTable& b) {
    return a.cartan == b.cartan && a.root_pair == b.root_pair;
}

// B([a,b], c) = B(a, [b,c]) over generator triples: the full cube for rank
// at most 3, a seeded random sample above that.
inline CheckReport verify_ad_invariance(const AdjointRealization& real, const BracketTable& tb,
                                        const KillingTable& kt, int trials = 4000,
                                        unsigned seed = 20260819) {
    CheckReport rp;
    const int n = tb.n;
    auto check_triple = [&](int a, int b, int c) {
        RingElem lhs, rhs;
        const auto& ab = tb.at(a, b);
        for (int d = 0; d < n; ++d)
            if (!ab[d].is_zero()) lhs += ab[d] * kt.form(d, c);
        const auto& bc = tb.at(b, c);
        for (int d = 0; d < n; ++d)
            if (!bc[d].is_zero()) rhs += kt.form(a, d) * bc[d];
        rp.check(lhs == rhs, "ad-invariance at (" + real.label(a).str() + ", " +
                                 real.label(b).str() + ", " + real.label(c).str() + ")");
    };
    if (real.rs.rank <= 3) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 gen(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < trials; ++t) check_triple(pick(gen), pick(gen), pick(gen));
    }
    return rp;
}

// The companion pairing: <X_a, X_b> = delta_ab, <H_i, H_j> = B_ij, mixed
// entries zero.  It intertwines the bracket through the dagger map
// X_a -> q^{-rho.a} X_{-a}, H_i -> H_i:  <[a,b], c> = <b, [a^dagger, c]>.
inline CheckReport verify_dagger_form(const AdjointRealization& real, const BracketTable& tb,
                                      const KillingTable& kt, int trials = 4000,
                                      unsigned seed = 20260819) {
    CheckReport rp;
    const RootSystem& rs = real.rs;
    const int n = tb.n;
    const int nr = kt.n_roots;
    auto pairing = [&](int x, int y) -> RingElem {
        bool xc = x >= nr, yc = y >= nr;
        if (xc && yc) return kt.cartan[x - nr][y - nr];
        if (xc || yc) return RingElem(0);
        return RingElem(x == y ? 1 : 0);
    };
    auto dagger = [&](int x) -> std::pair<int, RingElem> {
        if (x >= nr) return {x, RingElem(1)};
        return {kt.neg[x], RingElem::vpow(-rs.two_rho_dot(rs.roots[x]))};
    };
    auto check_triple = [&](int a, int b, int c) {
        RingElem lhs, rhs;
        const auto& ab = tb.at(a, b);
        for (int d = 0; d < n; ++d)
            if (!ab[d].is_zero()) lhs += ab[d] * pairing(d, c);
        auto [ad, kappa] = dagger(a);
        const auto& dc = tb.at(ad, c);
        for (int d = 0; d < n; ++d)
            if (!dc[d].is_zero()) rhs += pairing(b, d) * kappa * dc[d];
        rp.check(lhs == rhs, "dagger pairing at (" + real.label(a).str() + ", " +
                                 real.label(b).str() + ", " + real.label(c).str() + ")");
    };
    if (rs.rank <= 3) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) check_triple(a, b, c);
    } else {
        std::mt19937 gen(seed);
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < trials; ++t) check_triple(pick(gen), pick(gen), pick(gen));
    }
    return rp;
}

}  // namespace qla
