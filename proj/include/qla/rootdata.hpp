#pragma once

// Root systems of the classical series in the orthogonal (epsilon) basis.
// For B_l, C_l, D_l the ambient space is R^l; for A_l it is R^{l+1} with the
// roots eps_i - eps_j.  Everything downstream is keyed by these integer
// coordinate vectors.

#include "qla/scalar.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qla {

enum class AlgebraType { A, B, C, D };

inline char algebra_letter(AlgebraType t) {
    switch (t) {
        case AlgebraType::A: return 'A';
        case AlgebraType::B: return 'B';
        case AlgebraType::C: return 'C';
        default: return 'D';
    }
}

inline AlgebraType algebra_from_letter(char c) {
    switch (c) {
        case 'A': return AlgebraType::A;
        case 'B': return AlgebraType::B;
        case 'C': return AlgebraType::C;
        case 'D': return AlgebraType::D;
        default: throw MathError(std::string("unknown algebra letter '") + c + "'");
    }
}

using EpsVec = std::vector<int>;

inline int inner(const EpsVec& a, const EpsVec& b) {
    int s = 0;
    for (size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

inline EpsVec eps_add(const EpsVec& a, const EpsVec& b) {
    EpsVec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

inline EpsVec eps_neg(const EpsVec& a) {
    EpsVec r(a.size());
    for (size_t k = 0; k < a.size(); ++k) r[k] = -a[k];
    return r;
}

inline bool eps_is_zero(const EpsVec& a) {
    return std::all_of(a.begin(), a.end(), [](int x) { return x == 0; });
}

inline std::string eps_str(const EpsVec& a) {
    std::string s = "[";
    for (size_t k = 0; k < a.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(a[k]);
    }
    return s + "]";
}

struct RootSystem {
    AlgebraType type = AlgebraType::A;
    int rank = 0;     // l
    int ambient = 0;  // l, or l+1 for the A series
    std::vector<EpsVec> simple;            // alpha_1 .. alpha_l
    std::vector<EpsVec> positive;
    std::vector<EpsVec> roots;             // positive roots then their negatives
    std::vector<int> two_rho;              // 2 rho in epsilon coordinates
    std::vector<std::vector<int>> cartan;  // a_ij = 2 (a_i, a_j) / (a_i, a_i)
    std::vector<int> two_d;                // (a_i, a_i) = 2 d_i

    int root_index(const EpsVec& r) const {
        auto it = index_.find(r);
        return it == index_.end() ? -1 : it->second;
    }
    bool is_root(const EpsVec& r) const { return root_index(r) >= 0; }

    std::optional<EpsVec> add_roots(const EpsVec& a, const EpsVec& b) const {
        EpsVec s = eps_add(a, b);
        if (is_root(s)) return s;
        return std::nullopt;
    }

    int two_rho_dot(const EpsVec& r) const { return inner(two_rho, r); }

    static RootSystem build(AlgebraType type, int rank, bool allow_small_rank = false);

private:
    std::map<EpsVec, int> index_;

    void finish() {
        for (size_t k = 0; k < roots.size(); ++k) index_[roots[k]] = static_cast<int>(k);
        int l = rank;
        cartan.assign(l, std::vector<int>(l, 0));
        two_d.assign(l, 0);
        for (int i = 0; i < l; ++i) {
            two_d[i] = inner(simple[i], simple[i]);
            for (int j = 0; j < l; ++j) cartan[i][j] = 2 * inner(simple[i], simple[j]) / two_d[i];
        }
    }
    friend RootSystem build_root_system_impl(AlgebraType, int, bool);
};

inline RootSystem build_root_system_impl(AlgebraType type, int l, bool allow_small_rank) {
    RootSystem rs;
    rs.type = type;
    rs.rank = l;
    rs.ambient = type == AlgebraType::A ? l + 1 : l;

    auto unit = [&](int i) {  // eps_i, 1-based
        EpsVec e(rs.ambient, 0);
        e[i - 1] = 1;
        return e;
    };
    auto diff = [&](int i, int j) {
        EpsVec e(rs.ambient, 0);
        e[i - 1] = 1;
        e[j - 1] -= 1;
        return e;
    };
    auto sum2 = [&](int i, int j) {
        EpsVec e(rs.ambient, 0);
        e[i - 1] += 1;
        e[j - 1] += 1;
        return e;
    };

    switch (type) {
        case AlgebraType::A: {
            if (l < 1) throw MathError("A series requires rank >= 1");
            for (int i = 1; i <= l + 1; ++i)
                for (int j = i + 1; j <= l + 1; ++j) rs.positive.push_back(diff(i, j));
            for (int i = 1; i <= l; ++i) rs.simple.push_back(diff(i, i + 1));
            rs.two_rho.resize(l + 1);
            for (int i = 1; i <= l + 1; ++i) rs.two_rho[i - 1] = l + 2 - 2 * i;
            break;
        }
        case AlgebraType::B: {
            if (l < 2) throw MathError("B series requires rank >= 2");
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) rs.positive.push_back(diff(i, j));
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) rs.positive.push_back(sum2(i, j));
            for (int i = 1; i <= l; ++i) rs.positive.push_back(unit(i));
            for (int i = 1; i < l; ++i) rs.simple.push_back(diff(i, i + 1));
            rs.simple.push_back(unit(l));
            rs.two_rho.resize(l);
            for (int i = 1; i <= l; ++i) rs.two_rho[i - 1] = 2 * (l - i) + 1;
            break;
        }
        case AlgebraType::C: {
            if (l < 2) throw MathError("C series requires rank >= 2");
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) rs.positive.push_back(diff(i, j));
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) rs.positive.push_back(sum2(i, j));
            for (int i = 1; i <= l; ++i) rs.positive.push_back(sum2(i, i));
            for (int i = 1; i < l; ++i) rs.simple.push_back(diff(i, i + 1));
            rs.simple.push_back(sum2(l, l));
            rs.two_rho.resize(l);
            for (int i = 1; i <= l; ++i) rs.two_rho[i - 1] = 2 * (l - i + 1);
            break;
        }
        case AlgebraType::D: {
            if (l < 4 && !allow_small_rank) throw MathError("D series requires rank >= 4");
            if (l < 2) throw MathError("D series requires rank >= 2");
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) rs.positive.push_back(diff(i, j));
            for (int i = 1; i <= l; ++i)
                for (int j = i + 1; j <= l; ++j) rs.positive.push_back(sum2(i, j));
            for (int i = 1; i < l; ++i) rs.simple.push_back(diff(i, i + 1));
            rs.simple.push_back(sum2(l - 1, l));
            rs.two_rho.resize(l);
            for (int i = 1; i <= l; ++i) rs.two_rho[i - 1] = 2 * (l - i);
            break;
        }
    }

    rs.roots = rs.positive;
    for (auto& r : rs.positive) rs.roots.push_back(eps_neg(r));
    rs.finish();
    return rs;
}

inline RootSystem RootSystem::build(AlgebraType type, int rank, bool allow_small_rank) {
    return build_root_system_impl(type, rank, allow_small_rank);
}

}  // namespace qla
