#pragma once

// The vector representation V^{eps_1} of the quantized enveloping algebra for
// the B, C and D series, as explicit matrices over the coefficient ring, and
// the checker for the defining relations (Cartan commutators, [E_i, F_j],
// and the q-Serre relations in the base q_i = q^{d_i}).
//
// States are numbered 1..dim with bar(i) the index of the conjugate state:
// bar(i) = 2l+2-i for B_l (dim 2l+1) and 2l+1-i for C_l, D_l (dim 2l).

#include "qla/report.hpp"
#include "qla/ring.hpp"
#include "qla/rootdata.hpp"

#include <vector>

namespace qla {

using Mat = std::vector<std::vector<RingElem>>;

inline Mat mat_zero(int n) { return Mat(n, std::vector<RingElem>(n)); }

inline bool mat_is_zero(const Mat& m) {
    for (auto& row : m)
        for (auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    int n = static_cast<int>(a.size());
    Mat r = mat_zero(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                r[i][j] += a[i][k] * b[k][j];
            }
        }
    return r;
}

inline Mat mat_add(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[i][j] += b[i][j];
    return r;
}

inline Mat mat_sub(const Mat& a, const Mat& b) {
    Mat r = a;
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = 0; j < r.size(); ++j) r[i][j] -= b[i][j];
    return r;
}

inline Mat mat_scale(const Mat& a, const RingElem& c) {
    Mat r = a;
    for (auto& row : r)
        for (auto& x : row) x = x * c;
    return r;
}

inline Mat mat_comm(const Mat& a, const Mat& b) { return mat_sub(mat_mul(a, b), mat_mul(b, a)); }

struct Representation {
    RootSystem rs;
    int dim = 0;
    std::vector<Mat> E, F;            // one matrix per simple root
    std::vector<std::vector<int>> H;  // diagonal integer entries, H[i][state]
    std::vector<EpsVec> weight;       // weight of each state (0-based state index)

    int bar(int i) const {  // 1-based state index
        return rs.type == AlgebraType::B ? 2 * rs.rank + 2 - i : 2 * rs.rank + 1 - i;
    }
};

inline Representation build_vector_rep(const RootSystem& rs) {
    if (rs.type == AlgebraType::A) throw MathError("vector rep matrices are built for B, C, D only");
    Representation rep;
    rep.rs = rs;
    int l = rs.rank;
    rep.dim = rs.type == AlgebraType::B ? 2 * l + 1 : 2 * l;

    auto bar = [&](int i) { return rep.bar(i); };

    // a_{ij} = e_{ij} - sgn(i,j) e_{bar j, bar i} as a matrix, 1-based indices.
    auto amat = [&](int i, int j, const RingElem& scale) {
        Mat m = mat_zero(rep.dim);
        RingElem sgn(1);
        if (rs.type == AlgebraType::C && (i + j) % 2 != 0) sgn = RingElem(-1);
        m[i - 1][j - 1] += scale;
        m[bar(j) - 1][bar(i) - 1] -= sgn * scale;
        return m;
    };
    auto adiag = [&](int i, int coef, std::vector<int>& d) {  // a_{ii}: sign factor is +1
        d[i - 1] += coef;
        d[bar(i) - 1] -= coef;
    };

    RingElem one(1);
    RingElem rt2 = RingElem(BaseScalar::sqrt2());
    RingElem half = RingElem(Rational(1, 2));

    for (int i = 1; i < l; ++i) {
        rep.E.push_back(amat(i, i + 1, one));
        rep.F.push_back(amat(i + 1, i, one));
        std::vector<int> d(rep.dim, 0);
        adiag(i, 1, d);
        adiag(i + 1, -1, d);
        rep.H.push_back(d);
    }
    switch (rs.type) {
        case AlgebraType::B: {
            // F_l carries the q-correction so [E_l,F_l] hits [H_l]_{q^{1/2}};
            // the symmetric splitting would need a square root outside the ring.
            rep.E.push_back(amat(l, l + 1, rt2));
            rep.F.push_back(amat(l + 1, l, rt2 * half * (qhalf(1) + qhalf(-1))));
            std::vector<int> d(rep.dim, 0);
            adiag(l, 2, d);
            rep.H.push_back(d);
            break;
        }
        case AlgebraType::C: {
            rep.E.push_back(amat(l, l + 1, half));
            rep.F.push_back(amat(l + 1, l, half));
            std::vector<int> d(rep.dim, 0);
            adiag(l, 1, d);
            rep.H.push_back(d);
            break;
        }
        default: {  // D
            rep.E.push_back(amat(l - 1, l + 1, one));
            rep.F.push_back(amat(l + 1, l - 1, one));
            std::vector<int> d(rep.dim, 0);
            adiag(l - 1, 1, d);
            adiag(l + 1, -1, d);
            rep.H.push_back(d);
            break;
        }
    }

    for (int st = 1; st <= rep.dim; ++st) {
        EpsVec w(l, 0);
        if (st <= l)
            w[st - 1] = 1;
        else if (rs.type == AlgebraType::B && st == l + 1)
            ;  // zero weight
        else
            w[bar(st) - 1] = -1;
        rep.weight.push_back(w);
    }
    return rep;
}

inline Mat h_matrix(const Representation& rep, int i) {  // 0-based simple index
    Mat m = mat_zero(rep.dim);
    for (int k = 0; k < rep.dim; ++k) m[k][k] = RingElem(rep.H[i][k]);
    return m;
}

// Diagonal matrix q_i^{c * h_i / 2}; exponents stay integral in v for these
// representations.
inline Mat k_power(const Representation& rep, int i, int c) {
    Mat m = mat_zero(rep.dim);
    int step = rep.rs.two_d[i];
    for (int k = 0; k < rep.dim; ++k) {
        int e = step * rep.H[i][k] * c;
        if (e % 2 != 0) throw MathError("k_power: non-integral exponent");
        m[k][k] = RingElem::vpow(e / 2);
    }
    return m;
}

inline CheckReport verify_defining_relations(const Representation& rep) {
    CheckReport rp;
    const RootSystem& rs = rep.rs;
    int l = rs.rank;
    std::string tag = std::string(1, algebra_letter(rs.type)) + std::to_string(l) + " rep: ";

    // weight bookkeeping: H_i acts by the pairing with the simple coroot, and
    // E_i moves a state of weight mu to one of weight mu + alpha_i
    for (int i = 0; i < l; ++i) {
        for (int k = 0; k < rep.dim; ++k) {
            int expect = 2 * inner(rep.weight[k], rs.simple[i]) / rs.two_d[i];
            rp.check(rep.H[i][k] == expect,
                     tag + "H_" + std::to_string(i + 1) + " eigenvalue vs weight, state " + std::to_string(k + 1));
        }
        for (int r = 0; r < rep.dim; ++r)
            for (int c = 0; c < rep.dim; ++c) {
                if (rep.E[i][r][c].is_zero()) continue;
                rp.check(rep.weight[r] == eps_add(rep.weight[c], rs.simple[i]),
                         tag + "E_" + std::to_string(i + 1) + " weight shift at entry (" + std::to_string(r + 1) +
                             "," + std::to_string(c + 1) + ")");
            }
    }

    // [H_i, E_j] = a_ij E_j and [H_i, F_j] = -a_ij F_j
    for (int i = 0; i < l; ++i) {
        Mat hi = h_matrix(rep, i);
        for (int j = 0; j < l; ++j) {
            Mat lhsE = mat_comm(hi, rep.E[j]);
            Mat lhsF = mat_comm(hi, rep.F[j]);
            rp.check(mat_is_zero(mat_sub(lhsE, mat_scale(rep.E[j], RingElem(rs.cartan[i][j])))),
                     tag + "[H_" + std::to_string(i + 1) + ", E_" + std::to_string(j + 1) + "]");
            rp.check(mat_is_zero(mat_add(lhsF, mat_scale(rep.F[j], RingElem(rs.cartan[i][j])))),
                     tag + "[H_" + std::to_string(i + 1) + ", F_" + std::to_string(j + 1) + "]");
        }
    }

    // [E_i, F_j] = delta_ij (q_i^{h_i} - q_i^{-h_i}) / (q_i - q_i^{-1})
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            Mat lhs = mat_comm(rep.E[i], rep.F[j]);
            if (i == j) {
                Mat rhs = mat_zero(rep.dim);
                for (int k = 0; k < rep.dim; ++k) rhs[k][k] = qint_step(rep.H[i][k], rs.two_d[i]);
                lhs = mat_sub(lhs, rhs);
            }
            rp.check(mat_is_zero(lhs),
                     tag + "[E_" + std::to_string(i + 1) + ", F_" + std::to_string(j + 1) + "]");
        }

    // q-Serre relations in the base q_i
    auto serre = [&](const std::vector<Mat>& X, const char* name) {
        for (int i = 0; i < l; ++i)
            for (int j = 0; j < l; ++j) {
                if (i == j) continue;
                int n = 1 - rs.cartan[i][j];
                std::vector<Mat> pw{mat_zero(rep.dim)};  // powers of X_i
                for (int t = 0; t < rep.dim; ++t) pw[0][t][t] = RingElem(1);
                for (int k = 1; k <= n; ++k) pw.push_back(mat_mul(pw[k - 1], X[i]));
                Mat acc = mat_zero(rep.dim);
                for (int k = 0; k <= n; ++k) {
                    RingElem coef = qbinom_step(n, k, rs.two_d[i]);
                    if (k % 2 != 0) coef = -coef;
                    Mat term = mat_mul(pw[k], mat_mul(X[j], pw[n - k]));
                    acc = mat_add(acc, mat_scale(term, coef));
                }
                rp.check(mat_is_zero(acc), tag + std::string(name) + "-Serre (" + std::to_string(i + 1) + "," +
                                               std::to_string(j + 1) + ")");
            }
    };
    serre(rep.E, "E");
    serre(rep.F, "F");

    return rp;
}

}  // namespace qla
