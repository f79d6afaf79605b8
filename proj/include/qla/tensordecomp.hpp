#pragma once

// V ⊗ V as a module under the coproduct, and its decomposition into the
// three submodules V^{2 eps_1}, V^{eps_1 + eps_2} and the singlet V^0.
// The explicit basis vectors and their duals are the Clebsch-Gordan data
// everything downstream (brackets, Killing form) is built from.
//
// Tensor basis kets are |i>|j> with 1-based state indices; covectors live in
// the same coordinates because the vector-representation basis is self-dual.

#include "qla/report.hpp"
#include "qla/vectorrep.hpp"

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qla {

using StatePair = std::pair<int, int>;

struct TensorVec {
    std::map<StatePair, RingElem> entries;  // no zero entries stored

    static TensorVec unit(int i, int j, RingElem c = RingElem(1)) {
        TensorVec t;
        t.add(i, j, c);
        return t;
    }

    bool is_zero() const { return entries.empty(); }

    void add(int i, int j, const RingElem& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = entries.try_emplace({i, j}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) entries.erase(it);
        }
    }

    TensorVec& operator+=(const TensorVec& o) {
        for (const auto& [k, c] : o.entries) add(k.first, k.second, c);
        return *this;
    }
    TensorVec& operator-=(const TensorVec& o) {
        for (const auto& [k, c] : o.entries) add(k.first, k.second, -c);
        return *this;
    }
    friend TensorVec operator+(TensorVec x, const TensorVec& y) { return x += y; }
    friend TensorVec operator-(TensorVec x, const TensorVec& y) { return x -= y; }
    friend TensorVec operator*(const RingElem& c, const TensorVec& x) {
        TensorVec r;
        if (c.is_zero()) return r;
        for (const auto& [k, e] : x.entries) r.entries.emplace(k, c * e);
        return r;
    }
    friend bool operator==(const TensorVec&, const TensorVec&) = default;
};

// <x, y> = sum over common kets of the coefficient products.
inline RingElem pair_form(const TensorVec& x, const TensorVec& y) {
    RingElem r;
    const TensorVec* small = &x;
    const TensorVec* big = &y;
    if (big->entries.size() < small->entries.size()) std::swap(small, big);
    for (const auto& [k, c] : small->entries) {
        auto it = big->entries.find(k);
        if (it != big->entries.end()) r += c * it->second;
    }
    return r;
}

enum class Gen { E, F, H };

// (pi ⊗ pi)Delta(g) acting on w, with Delta(x_i^±) = x_i^± ⊗ q_i^{-h_i/2}
// + q_i^{h_i/2} ⊗ x_i^± and Delta(h_i) = h_i ⊗ 1 + 1 ⊗ h_i.
inline TensorVec coproduct_action(const Representation& rep, Gen g, int i, const TensorVec& w) {
    TensorVec out;
    const std::vector<int>& hd = rep.H[i];
    if (g == Gen::H) {
        for (const auto& [k, c] : w.entries)
            out.add(k.first, k.second, RingElem(hd[k.first - 1] + hd[k.second - 1]) * c);
        return out;
    }
    const Mat& m = (g == Gen::E) ? rep.E[i] : rep.F[i];
    int step = rep.rs.two_d[i];
    auto kfac = [&](int state, int sign) {  // q_i^{sign * h_i / 2} eigenvalue
        int e = step * hd[state - 1] * sign;
        if (e % 2 != 0) throw MathError("coproduct_action: non-integral exponent");
        return RingElem::vpow(e / 2);
    };
    for (const auto& [k, c] : w.entries) {
        auto [a, b] = k;
        RingElem right = kfac(b, -1) * c;
        RingElem left = kfac(a, +1) * c;
        for (int r = 0; r < rep.dim; ++r) {
            if (!m[r][a - 1].is_zero()) out.add(r + 1, b, m[r][a - 1] * right);
            if (!m[r][b - 1].is_zero()) out.add(a, r + 1, left * m[r][b - 1]);
        }
    }
    return out;
}

struct SubmoduleBasis {
    std::string name;                    // "2e1", "e1+e2" or "0"
    std::vector<TensorVec> vectors;
    std::vector<TensorVec> duals;        // pair(duals[a], vectors[b]) = delta
    std::vector<EpsVec> weights;
    std::map<StatePair, int> pair_index; // omega_ij / v_ij keys, incl. (i,i)
    std::map<int, int> cart_index;       // zero-weight family omega_i / v_i
    int singlet_index = -1;

    int size() const { return static_cast<int>(vectors.size()); }
};

struct TensorDecomp {
    Representation rep;
    std::array<SubmoduleBasis, 3> parts;  // [V^{2 eps_1}, V^{eps_1+eps_2}, V^0]

    // which part carries the adjoint representation
    int adjoint_part() const { return rep.rs.type == AlgebraType::C ? 0 : 1; }
    const SubmoduleBasis& adjoint() const { return parts[adjoint_part()]; }
};

// Expansion of w in the basis of one part via the duals; the residual is zero
// exactly when w lies in the part.
inline std::pair<std::vector<RingElem>, TensorVec> expand_in_basis(const TensorVec& w,
                                                                   const SubmoduleBasis& part) {
    std::vector<RingElem> coef(part.vectors.size());
    TensorVec residual = w;
    for (size_t c = 0; c < part.vectors.size(); ++c) {
        coef[c] = pair_form(part.duals[c], w);
        residual -= coef[c] * part.vectors[c];
    }
    return {std::move(coef), std::move(residual)};
}

inline TensorDecomp build_submodule_bases(const Representation& rep) {
    const RootSystem& rs = rep.rs;
    if (rs.type == AlgebraType::A) throw MathError("tensor decomposition is built for B, C, D only");
    const int l = rs.rank;
    const int dim = rep.dim;

    TensorDecomp dec;
    dec.rep = rep;

    auto bar = [&](int i) { return rep.bar(i); };
    auto wt = [&](int i, int j) { return eps_add(rep.weight[i - 1], rep.weight[j - 1]); };

    auto push = [&](SubmoduleBasis& part, TensorVec vec, TensorVec dual, EpsVec w) {
        part.vectors.push_back(std::move(vec));
        part.duals.push_back(std::move(dual));
        part.weights.push_back(std::move(w));
    };
    auto push_pair = [&](SubmoduleBasis& part, int i, int j, TensorVec vec, TensorVec dual) {
        part.pair_index[{i, j}] = part.size();
        push(part, std::move(vec), std::move(dual), wt(i, j));
    };
    auto push_cart = [&](SubmoduleBasis& part, int i, TensorVec vec, TensorVec dual) {
        part.cart_index[i] = part.size();
        push(part, std::move(vec), std::move(dual), EpsVec(l, 0));
    };

    const RingElem qq = qpow(1) + qpow(-1);  // q + q^{-1}
    const RingElem qqinv = RingElem(1) / qq;

    // A weight space {|i>|j>, |j>|i>} with i < j, j != bar(i) is 2-dimensional
    // and splits between the two large submodules as q^{1/2}|i>|j> + q^{-1/2}|j>|i>
    // (symmetric type) and q^{-1/2}|i>|j> - q^{1/2}|j>|i> (antisymmetric type);
    // inverting the 2x2 coefficient matrix yields the dual covectors.
    auto sym_vec = [&](int i, int j) {
        TensorVec t;
        t.add(i, j, qhalf(1));
        t.add(j, i, qhalf(-1));
        return t;
    };
    auto sym_dual = [&](int i, int j) {
        TensorVec t;
        t.add(i, j, qhalf(1) * qqinv);
        t.add(j, i, qhalf(-1) * qqinv);
        return t;
    };
    auto asym_vec = [&](int i, int j) {
        TensorVec t;
        t.add(i, j, qhalf(-1));
        t.add(j, i, -qhalf(1));
        return t;
    };
    auto asym_dual = [&](int i, int j) {
        TensorVec t;
        t.add(i, j, qhalf(-1) * qqinv);
        t.add(j, i, -qhalf(1) * qqinv);
        return t;
    };
    auto diag_vec = [&](int i) { return TensorVec::unit(i, i); };

    auto fill_pairs = [&](SubmoduleBasis& part, bool symmetric) {
        for (int i = 1; i <= dim; ++i)
            for (int j = i + 1; j <= dim; ++j) {
                if (j == bar(i)) continue;
                if (symmetric)
                    push_pair(part, i, j, sym_vec(i, j), sym_dual(i, j));
                else
                    push_pair(part, i, j, asym_vec(i, j), asym_dual(i, j));
            }
    };

    SubmoduleBasis& sym = dec.parts[0];
    SubmoduleBasis& adj = dec.parts[1];
    SubmoduleBasis& sing = dec.parts[2];
    sym.name = "2e1";
    adj.name = "e1+e2";
    sing.name = "0";

    // In the C series the symmetric square is the adjoint module; the printed
    // letters swap (v's live in V^{2 eps_1}) but the vector shapes do not.

    switch (rs.type) {
        case AlgebraType::B: {
            // V^{2 eps_1}: omega_ij, omega_ii (i != l+1), omega_i
            fill_pairs(sym, true);
            for (int i = 1; i <= dim; ++i) {
                if (i == l + 1) continue;
                push_pair(sym, i, i, diag_vec(i), diag_vec(i));
            }
            RingElem sroot = qhalf(1) + qhalf(-1);  // q^{1/2} + q^{-1/2}
            auto Dsym = [&](int k) { return qint_step(2 * k + 1, 1); };
            for (int i = 1; i <= l; ++i) {
                TensorVec v;
                v.add(i, bar(i), qpow(1));
                v.add(bar(i), i, qpow(-1));
                if (i < l) {
                    v.add(i + 1, bar(i + 1), RingElem(-1));
                    v.add(bar(i + 1), i + 1, RingElem(-1));
                } else {
                    v.add(l + 1, l + 1, -sroot);
                }
                TensorVec d;
                RingElem pre = qqinv / Dsym(l);
                for (int j = 1; j <= i; ++j) {
                    d.add(j, bar(j), pre * Dsym(l - i) * qpow(j));
                    d.add(bar(j), j, pre * Dsym(l - i) * qpow(-j));
                }
                RingElem mid = pre * qnum(i) * sroot;
                d.add(l + 1, l + 1, -mid);
                for (int j = i + 1; j <= l; ++j) {
                    d.add(j, bar(j), -mid * qhalf(2 * (j - l) - 1));
                    d.add(bar(j), j, -mid * qhalf(2 * (l - j) + 1));
                }
                push_cart(sym, i, std::move(v), std::move(d));
            }

            // V^{eps_1 + eps_2}: v_ij, v_i
            fill_pairs(adj, false);
            RingElem sdif = qhalf(1) - qhalf(-1);  // q^{1/2} - q^{-1/2}
            auto Dadj = [&](int k) { return (qhalf(2 * k - 1) + qhalf(1 - 2 * k)) / (qhalf(1) + qhalf(-1)); };
            for (int i = 1; i <= l; ++i) {
                TensorVec v;
                v.add(i, bar(i), RingElem(1));
                v.add(bar(i), i, RingElem(-1));
                if (i < l) {
                    v.add(i + 1, bar(i + 1), -qpow(-1));
                    v.add(bar(i + 1), i + 1, qpow(1));
                } else {
                    v.add(l + 1, l + 1, sdif);
                }
                TensorVec d;
                RingElem pre = qqinv / Dadj(l);
                RingElem mid = pre * qnum(i) * sdif;
                d.add(l + 1, l + 1, mid);
                for (int j = i + 1; j <= l; ++j) {
                    d.add(j, bar(j), mid * qhalf(2 * (j - l) - 1));
                    d.add(bar(j), j, mid * qhalf(2 * (l - j) + 1));
                }
                for (int j = 1; j <= i; ++j) {
                    d.add(j, bar(j), pre * Dadj(l - i) * qpow(j - 1));
                    d.add(bar(j), j, -pre * Dadj(l - i) * qpow(1 - j));
                }
                push_cart(adj, i, std::move(v), std::move(d));
            }

            // V^0
            TensorVec t;
            for (int i = 1; i <= l; ++i) {
                t.add(i, bar(i), qhalf(2 * (i - l) - 1));
                t.add(bar(i), i, qhalf(2 * (l - i) + 1));
            }
            t.add(l + 1, l + 1, RingElem(1));
            sing.singlet_index = sing.size();
            push(sing, t, RingElem(1) / pair_form(t, t) * t, EpsVec(l, 0));
            break;
        }

        case AlgebraType::C: {
            // V^{2 eps_1} (adjoint): v_ij, v_ii, v_i
            fill_pairs(sym, true);
            for (int i = 1; i <= dim; ++i) push_pair(sym, i, i, diag_vec(i), diag_vec(i));
            auto Dsym = [&](int k) { return (qpow(k + 1) + qpow(-k - 1)) * qqinv; };
            for (int i = 1; i <= l; ++i) {
                RingElem sgn((i % 2 == 0) ? 1 : -1);
                TensorVec v;
                v.add(i, bar(i), sgn * qpow(1));
                v.add(bar(i), i, sgn * qpow(-1));
                if (i < l) {
                    v.add(i + 1, bar(i + 1), sgn);
                    v.add(bar(i + 1), i + 1, sgn);
                }
                TensorVec d;
                RingElem pre = qqinv / Dsym(l);
                for (int j = 1; j <= i; ++j) {
                    RingElem js((j % 2 == 0) ? 1 : -1);
                    d.add(j, bar(j), pre * Dsym(l - i) * js * qpow(j));
                    d.add(bar(j), j, pre * Dsym(l - i) * js * qpow(-j));
                }
                RingElem mid = pre * qnum(i) * (qpow(1) - qpow(-1)) * qqinv;
                for (int j = i + 1; j <= l; ++j) {
                    RingElem js((j % 2 == 0) ? 1 : -1);
                    d.add(j, bar(j), mid * js * qpow(j - l - 1));
                    d.add(bar(j), j, -mid * js * qpow(l + 1 - j));
                }
                push_cart(sym, i, std::move(v), std::move(d));
            }

            // V^{eps_1 + eps_2}: omega_ij, omega_i (i < l)
            fill_pairs(adj, false);
            for (int i = 1; i < l; ++i) {
                RingElem sgn((i % 2 == 0) ? 1 : -1);
                TensorVec v;
                v.add(i, bar(i), sgn);
                v.add(bar(i), i, -sgn);
                v.add(i + 1, bar(i + 1), sgn * qpow(-1));
                v.add(bar(i + 1), i + 1, -sgn * qpow(1));
                TensorVec d;
                RingElem pre = qqinv / qnum(l);
                for (int j = 1; j <= i; ++j) {
                    RingElem js((j % 2 == 0) ? 1 : -1);
                    d.add(j, bar(j), pre * qnum(l - i) * js * qpow(j - 1));
                    d.add(bar(j), j, -pre * qnum(l - i) * js * qpow(1 - j));
                }
                for (int j = i + 1; j <= l; ++j) {
                    RingElem js((j % 2 == 0) ? -1 : 1);  // (-1)^{j-1}
                    d.add(j, bar(j), pre * qnum(i) * js * qpow(j - l - 1));
                    d.add(bar(j), j, -pre * qnum(i) * js * qpow(l + 1 - j));
                }
                push_cart(adj, i, std::move(v), std::move(d));
            }

            // V^0
            TensorVec t;
            for (int i = 1; i <= l; ++i) {
                RingElem sgn(((l - i) % 2 == 0) ? 1 : -1);
                t.add(i, bar(i), sgn * qpow(i - l - 1));
                t.add(bar(i), i, -sgn * qpow(l + 1 - i));
            }
            sing.singlet_index = sing.size();
            push(sing, t, RingElem(1) / pair_form(t, t) * t, EpsVec(l, 0));
            break;
        }

        default: {  // D
            // V^{2 eps_1}: omega_ii, omega_ij, omega_i (i < l)
            fill_pairs(sym, true);
            for (int i = 1; i <= dim; ++i) push_pair(sym, i, i, diag_vec(i), diag_vec(i));
            for (int i = 1; i < l; ++i) {
                TensorVec v;
                v.add(i, bar(i), qpow(1));
                v.add(bar(i), i, qpow(-1));
                v.add(i + 1, bar(i + 1), RingElem(-1));
                v.add(bar(i + 1), i + 1, RingElem(-1));
                TensorVec d;
                RingElem pre = qqinv / qnum(l);
                for (int j = 1; j <= i; ++j) {
                    d.add(j, bar(j), pre * qnum(l - i) * qpow(j));
                    d.add(bar(j), j, pre * qnum(l - i) * qpow(-j));
                }
                for (int j = i + 1; j <= l; ++j) {
                    d.add(j, bar(j), -pre * qnum(i) * qpow(j - l));
                    d.add(bar(j), j, -pre * qnum(i) * qpow(l - j));
                }
                push_cart(sym, i, std::move(v), std::move(d));
            }

            // V^{eps_1 + eps_2} (adjoint): v_ij, v_i
            fill_pairs(adj, false);
            auto Dadj = [&](int k) { return (qpow(k - 1) + qpow(1 - k)) * qqinv; };
            for (int i = 1; i <= l; ++i) {
                TensorVec v;
                v.add(i, bar(i), RingElem(1));
                v.add(bar(i), i, RingElem(-1));
                if (i < l) {
                    v.add(i + 1, bar(i + 1), -qpow(-1));
                    v.add(bar(i + 1), i + 1, qpow(1));
                }
                TensorVec d;
                RingElem pre = qqinv / Dadj(l);
                for (int j = 1; j <= i; ++j) {
                    d.add(j, bar(j), pre * Dadj(l - i) * qpow(j - 1));
                    d.add(bar(j), j, -pre * Dadj(l - i) * qpow(1 - j));
                }
                RingElem mid = pre * qnum(i) * (qpow(1) - qpow(-1)) * qqinv;
                for (int j = i + 1; j <= l; ++j) {
                    d.add(j, bar(j), mid * qpow(j - l));
                    d.add(bar(j), j, mid * qpow(l - j));
                }
                push_cart(adj, i, std::move(v), std::move(d));
            }

            // V^0
            TensorVec t;
            for (int i = 1; i <= l; ++i) {
                t.add(i, bar(i), qpow(i - l));
                t.add(bar(i), i, qpow(l - i));
            }
            sing.singlet_index = sing.size();
            push(sing, t, RingElem(1) / pair_form(t, t) * t, EpsVec(l, 0));
            break;
        }
    }
    return dec;
}

// Coefficient matrices of the submodule action: mats[g][i] has entry (a,b)
// equal to the coefficient of vectors[a] in Delta(g_i) vectors[b].
struct InducedAction {
    std::vector<Mat> E, F;
    bool closed = true;  // false if any action leaked out of the part
};

inline InducedAction induced_action(const Representation& rep, const SubmoduleBasis& part, CheckReport* rp = nullptr) {
    const int l = rep.rs.rank;
    const int n = part.size();
    InducedAction act;
    act.E.assign(l, mat_zero(n));
    act.F.assign(l, mat_zero(n));
    for (int i = 0; i < l; ++i)
        for (int b = 0; b < n; ++b)
            for (Gen g : {Gen::E, Gen::F}) {
                TensorVec image = coproduct_action(rep, g, i, part.vectors[b]);
                auto [coef, residual] = expand_in_basis(image, part);
                bool ok = residual.is_zero();
                act.closed = act.closed && ok;
                if (rp)
                    rp->check(ok, part.name + ": invariance of vector " + std::to_string(b) + " under " +
                                      (g == Gen::E ? "E_" : "F_") + std::to_string(i + 1));
                Mat& m = (g == Gen::E) ? act.E[i] : act.F[i];
                for (int a = 0; a < n; ++a) m[a][b] = coef[a];
            }
    return act;
}

// Full verification of one part: weight homogeneity, highest-weight top
// vector, exact duality, invariance with zero residual, and the defining
// relations for the induced matrices.
inline CheckReport verify_submodule(const Representation& rep, const SubmoduleBasis& part) {
    CheckReport rp;
    const RootSystem& rs = rep.rs;
    const int l = rs.rank;

    // weight homogeneity of every vector and dual
    for (int c = 0; c < part.size(); ++c) {
        bool homog = true;
        for (const auto& [k, coefficient] : part.vectors[c].entries)
            homog = homog && (eps_add(rep.weight[k.first - 1], rep.weight[k.second - 1]) == part.weights[c]);
        for (const auto& [k, coefficient] : part.duals[c].entries)
            homog = homog && (eps_add(rep.weight[k.first - 1], rep.weight[k.second - 1]) == part.weights[c]);
        rp.check(homog, part.name + ": weight homogeneity of vector " + std::to_string(c));
    }

    // top vector: weight equals the label, all raising operators annihilate
    int top = -1;
    EpsVec expect(l, 0);
    if (part.name == "2e1") {
        top = part.pair_index.at({1, 1});
        expect[0] = 2;
    } else if (part.name == "e1+e2") {
        top = part.pair_index.at({1, 2});
        expect[0] = 1;
        expect[1] = 1;
    } else {
        top = part.singlet_index;
    }
    rp.check(part.weights[top] == expect, part.name + ": top vector weight");
    for (int i = 0; i < l; ++i)
        rp.check(coproduct_action(rep, Gen::E, i, part.vectors[top]).is_zero(),
                 part.name + ": top vector killed by E_" + std::to_string(i + 1));

    // exact duality inside the part
    for (int a = 0; a < part.size(); ++a)
        for (int b = 0; b < part.size(); ++b) {
            RingElem expect_ab(a == b ? 1 : 0);
            if (pair_form(part.duals[a], part.vectors[b]) != expect_ab) {
                rp.fail(part.name + ": duality at (" + std::to_string(a) + "," + std::to_string(b) + ")");
            } else {
                rp.check(true, "");
            }
        }

    // invariance and induced representation
    InducedAction act = induced_action(rep, part, &rp);
    if (act.closed) {
        Representation ind;
        ind.rs = rs;
        ind.dim = part.size();
        ind.E = act.E;
        ind.F = act.F;
        ind.weight = part.weights;
        for (int i = 0; i < l; ++i) {
            std::vector<int> d(part.size());
            for (int c = 0; c < part.size(); ++c) d[c] = 2 * inner(part.weights[c], rs.simple[i]) / rs.two_d[i];
            ind.H.push_back(std::move(d));
        }
        rp.merge(verify_defining_relations(ind));
    }
    return rp;
}

// Cross-part duality and the resolution of identity on V ⊗ V.
inline CheckReport verify_decomposition(const TensorDecomp& dec) {
    CheckReport rp;
    const Representation& rep = dec.rep;

    for (const auto& part : dec.parts) rp.merge(verify_submodule(rep, part));

    // duals of one part annihilate the other parts
    for (int p = 0; p < 3; ++p)
        for (int o = 0; o < 3; ++o) {
            if (p == o) continue;
            bool clean = true;
            for (const auto& d : dec.parts[p].duals)
                for (const auto& v : dec.parts[o].vectors) clean = clean && pair_form(d, v).is_zero();
            rp.check(clean, dec.parts[p].name + " duals annihilate " + dec.parts[o].name);
        }

    // sum of |vector><dual| over all parts is the identity
    std::map<std::pair<StatePair, StatePair>, RingElem> op;
    for (const auto& part : dec.parts)
        for (int c = 0; c < part.size(); ++c)
            for (const auto& [kv, cv] : part.vectors[c].entries)
                for (const auto& [kd, cd] : part.duals[c].entries) {
                    RingElem& slot = op[{kv, kd}];
                    slot += cv * cd;
                    if (slot.is_zero()) op.erase({kv, kd});
                }
    bool resolved = true;
    int expected = rep.dim * rep.dim;
    if (static_cast<int>(op.size()) != expected) resolved = false;
    for (const auto& [k, c] : op)
        if (k.first != k.second || c != RingElem(1)) resolved = false;
    rp.check(resolved, "resolution of identity on the tensor square");

    int total = dec.parts[0].size() + dec.parts[1].size() + dec.parts[2].size();
    rp.check(total == expected, "dimension count of the decomposition");
    return rp;
}

}  // namespace qla
