#pragma once

// Document layer: the full structure-constant payload as deterministic JSON
// (sorted keys, canonical ring-element strings), an aligned text rendering,
// exact parsing back, and pointwise numeric evaluation.  Roots serialize as
// integer eps-coordinate arrays; basis labels as {"X": [coords]} / {"H": i}.

#include "qla/closedform.hpp"
#include "qla/killing.hpp"
#include "qla/qlabuild.hpp"

#include <json.hpp>

#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace qla {

using Json = nlohmann::json;

// Everything one generate run produces.
struct TableDocument {
    AlgebraType type = AlgebraType::B;
    int rank = 0;
    RingElem calibration{1};
    FamilyWeights weights;  // used by the special linear family only
    StructureConstants sc;
    KillingTable kt;
};

inline TableDocument make_document(AlgebraType t, int rank, const FamilyWeights& fw = {}) {
    TableDocument doc;
    doc.type = t;
    doc.rank = rank;
    doc.weights = fw;
    RootSystem rs = RootSystem::build(t, rank);
    doc.sc = closed_constants(rs, fw);
    doc.kt = closed_killing(rs);
    return doc;
}

inline Json document_json(const TableDocument& doc) {
    const RootSystem& rs = doc.sc.rs;
    const int l = rs.rank;
    const int nr = (int)rs.roots.size();

    Json j;
    j["algebra"] = std::string(1, algebra_letter(doc.type));
    j["rank"] = l;
    j["calibration"] = doc.calibration.str();
    if (doc.type == AlgebraType::A) {
        j["weights"]["s"] = doc.weights.s.str();
        j["weights"]["t"] = doc.weights.t.str();
    }
    j["conventions"] = {
        {"bracket",
         "[H_i,X_a] = l_a(H_i) X_a; [X_a,H_i] = -r_a(H_i) X_a; "
         "[H_i,H_j] = sum_k f_ij^k H_k; [X_a,X_-a] = -sum_k g_a^k H_k; "
         "[X_a,X_b] = N_ab X_a+b"},
        {"pairing", "B(X_a, X_-a) = q^-(rho,a); B(H_i, H_j) symmetric Cartan block"},
        {"ring", "Q(r2)(v)[s] with v^2 = q and s^2 = q + q^-1; canonical reduced strings"},
    };

    Json basis = Json::array();
    for (int a = 0; a < nr; ++a) basis.push_back(Json{{"X", rs.roots[a]}});
    for (int i = 1; i <= l; ++i) basis.push_back(Json{{"H", i}});
    j["basis"] = basis;

    auto rows = [&](const std::vector<std::vector<RingElem>>& tab) {
        Json out = Json::array();
        for (int a = 0; a < nr; ++a) {
            Json vals = Json::array();
            for (int i = 0; i < l; ++i) vals.push_back(tab[a][i].str());
            out.push_back(Json{{"root", rs.roots[a]}, {"values", vals}});
        }
        return out;
    };
    auto cube = [&](auto&& get) {
        Json ci = Json::array();
        for (int i = 0; i < l; ++i) {
            Json cj = Json::array();
            for (int jx = 0; jx < l; ++jx) {
                Json ck = Json::array();
                for (int k = 0; k < l; ++k) ck.push_back(get(i, jx, k).str());
                cj.push_back(ck);
            }
            ci.push_back(cj);
        }
        return ci;
    };
    auto mat = [&](const std::vector<std::vector<RingElem>>& m) {
        Json out = Json::array();
        for (int i = 0; i < l; ++i) {
            Json row = Json::array();
            for (int jx = 0; jx < l; ++jx) row.push_back(m[i][jx].str());
            out.push_back(row);
        }
        return out;
    };
    auto pairs = [&](const std::vector<RingElem>& v) {
        Json out = Json::array();
        for (int a = 0; a < nr; ++a)
            out.push_back(Json{{"root", rs.roots[a]}, {"value", v[a].str()}});
        return out;
    };

    Json& t = j["tables"];
    t["l"] = rows(doc.sc.l);
    t["r"] = rows(doc.sc.r);
    t["g"] = rows(doc.sc.g);
    t["f_upper"] = cube([&](int i, int jx, int k) { return doc.sc.fud[i][jx][k]; });
    auto f3 = lowered_f(doc.sc, doc.kt.cartan);
    t["f_lower"] = cube([&](int i, int jx, int k) { return f3[i][jx][k]; });
    Json tn = Json::array();
    for (const auto& [key, val] : doc.sc.N)
        tn.push_back(Json{
            {"a", rs.roots[key.first]}, {"b", rs.roots[key.second]}, {"value", val.str()}});
    t["N"] = tn;
    t["killing"] = Json{{"cartan", mat(doc.kt.cartan)}, {"roots", pairs(doc.kt.root_pair)}};
    t["killing_inverse"] =
        Json{{"cartan", mat(doc.kt.cartan_inv)}, {"roots", pairs(doc.kt.root_pair_inv)}};
    return j;
}

inline TableDocument parse_document(const Json& j) {
    TableDocument doc;
    std::string letter = j.at("algebra").get<std::string>();
    if (letter.size() != 1) throw ParseError("algebra letter: " + letter);
    doc.type = algebra_from_letter(letter[0]);
    doc.rank = j.at("rank").get<int>();
    doc.calibration = RingElem::parse(j.at("calibration").get<std::string>());
    if (j.contains("weights")) {
        doc.weights.s = RingElem::parse(j["weights"].at("s").get<std::string>());
        doc.weights.t = RingElem::parse(j["weights"].at("t").get<std::string>());
    }

    RootSystem rs = RootSystem::build(doc.type, doc.rank);
    const int l = rs.rank;
    const int nr = (int)rs.roots.size();
    doc.sc.rs = rs;
    doc.kt.rs = rs;
    doc.kt.n_roots = nr;
    doc.kt.neg.resize(nr);
    for (int a = 0; a < nr; ++a) doc.kt.neg[a] = rs.root_index(eps_neg(rs.roots[a]));

    auto elem = [](const Json& v) { return RingElem::parse(v.get<std::string>()); };
    auto root_of = [&](const Json& v) {
        int a = rs.root_index(v.get<EpsVec>());
        if (a < 0) throw ParseError("not a root: " + v.dump());
        return a;
    };
    auto rows = [&](const Json& tab) {
        std::vector rows_out(nr, std::vector<RingElem>(l));
        for (const Json& row : tab) {
            int a = root_of(row.at("root"));
            const Json& vals = row.at("values");
            for (int i = 0; i < l; ++i) rows_out[a][i] = elem(vals.at(i));
        }
        return rows_out;
    };
    const Json& t = j.at("tables");
    doc.sc.l = rows(t.at("l"));
    doc.sc.r = rows(t.at("r"));
    doc.sc.g = rows(t.at("g"));
    doc.sc.fud.assign(l, std::vector(l, std::vector<RingElem>(l)));
    for (int i = 0; i < l; ++i)
        for (int jx = 0; jx < l; ++jx)
            for (int k = 0; k < l; ++k)
                doc.sc.fud[i][jx][k] = elem(t.at("f_upper").at(i).at(jx).at(k));
    for (const Json& e : t.at("N"))
        doc.sc.N[{root_of(e.at("a")), root_of(e.at("b"))}] = elem(e.at("value"));

    auto mat = [&](const Json& m) {
        std::vector out(l, std::vector<RingElem>(l));
        for (int i = 0; i < l; ++i)
            for (int jx = 0; jx < l; ++jx) out[i][jx] = elem(m.at(i).at(jx));
        return out;
    };
    auto pairs = [&](const Json& p) {
        std::vector<RingElem> out(nr);
        for (const Json& e : p) out[root_of(e.at("root"))] = elem(e.at("value"));
        return out;
    };
    doc.kt.cartan = mat(t.at("killing").at("cartan"));
    doc.kt.root_pair = pairs(t.at("killing").at("roots"));
    doc.kt.cartan_inv = mat(t.at("killing_inverse").at("cartan"));
    doc.kt.root_pair_inv = pairs(t.at("killing_inverse").at("roots"));
    return doc;
}

// --- text rendering ---------------------------------------------------------

namespace detail {

inline std::string pad(std::string s, std::size_t w) {
    if (s.size() < w) s.append(w - s.size(), ' ');
    return s;
}

// rows of cells -> aligned block
inline void aligned(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w;
    for (const auto& r : rows)
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c >= w.size()) w.resize(c + 1, 0);
            w[c] = std::max(w[c], r[c].size());
        }
    for (const auto& r : rows) {
        os << "  ";
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c + 1 < r.size())
                os << pad(r[c], w[c]) << "  ";
            else
                os << r[c];
        }
        os << "\n";
    }
}

}  // namespace detail

template <class Value>
inline std::string document_text_with(const TableDocument& doc, Value&& value,
                                      const std::string& note) {
    const RootSystem& rs = doc.sc.rs;
    const int l = rs.rank;
    const int nr = (int)rs.roots.size();
    std::ostringstream os;

    os << "algebra " << algebra_letter(doc.type) << l << "   calibration "
       << doc.calibration.str() << "\n";
    if (doc.type == AlgebraType::A)
        os << "weights   s = " << doc.weights.s.str() << "   t = " << doc.weights.t.str()
           << "\n";
    if (!note.empty()) os << note << "\n";
    os << "\n";

    auto header = [&](std::vector<std::string> lead) {
        for (int i = 1; i <= l; ++i) lead.push_back("H" + std::to_string(i));
        return lead;
    };
    auto table = [&](const char* name, const std::vector<std::vector<RingElem>>& tab) {
        os << name << "-table (rows: roots; columns: Cartan index)\n";
        std::vector<std::vector<std::string>> rows{header({"root"})};
        for (int a = 0; a < nr; ++a) {
            std::vector<std::string> row{eps_str(rs.roots[a])};
            for (int i = 0; i < l; ++i) row.push_back(value(tab[a][i]));
            rows.push_back(std::move(row));
        }
        detail::aligned(os, rows);
        os << "\n";
    };
    table("l", doc.sc.l);
    table("r", doc.sc.r);
    table("g", doc.sc.g);

    os << "f-table (rows: (i,j); columns: k; upper index, then lowered)\n";
    auto f3 = lowered_f(doc.sc, doc.kt.cartan);
    {
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> head{"(i,j)"};
        for (int k = 1; k <= l; ++k) head.push_back("k=" + std::to_string(k));
        for (int k = 1; k <= l; ++k) head.push_back("k=" + std::to_string(k) + " low");
        rows.push_back(std::move(head));
        for (int i = 0; i < l; ++i)
            for (int jx = 0; jx < l; ++jx) {
                std::vector<std::string> row{"(" + std::to_string(i + 1) + "," +
                                             std::to_string(jx + 1) + ")"};
                for (int k = 0; k < l; ++k) row.push_back(value(doc.sc.fud[i][jx][k]));
                for (int k = 0; k < l; ++k) row.push_back(value(f3[i][jx][k]));
                rows.push_back(std::move(row));
            }
        detail::aligned(os, rows);
        os << "\n";
    }

    os << "N-table (pairs with a + b a root)\n";
    {
        std::vector<std::vector<std::string>> rows{{"a", "b", "N"}};
        for (const auto& [key, val] : doc.sc.N)
            rows.push_back({eps_str(rs.roots[key.first]), eps_str(rs.roots[key.second]),
                            value(val)});
        detail::aligned(os, rows);
        os << "\n";
    }

    auto killing = [&](const char* name, const std::vector<std::vector<RingElem>>& cfr,
                       const std::vector<RingElem>& rp) {
        os << name << " (Cartan block, then root pairs)\n";
        std::vector<std::vector<std::string>> rows;
        for (int i = 0; i < l; ++i) {
            std::vector<std::string> row;
            for (int jx = 0; jx < l; ++jx) row.push_back(value(cfr[i][jx]));
            rows.push_back(std::move(row));
        }
        detail::aligned(os, rows);
        std::vector<std::vector<std::string>> prow{{"root", "B(X_a, X_-a)"}};
        for (int a = 0; a < nr; ++a) prow.push_back({eps_str(rs.roots[a]), value(rp[a])});
        detail::aligned(os, prow);
        os << "\n";
    };
    killing("killing form", doc.kt.cartan, doc.kt.root_pair);
    killing("killing form inverse", doc.kt.cartan_inv, doc.kt.root_pair_inv);
    return os.str();
}

inline std::string document_text(const TableDocument& doc) {
    return document_text_with(doc, [](const RingElem& x) { return x.str(); }, {});
}

// --- numeric evaluation ------------------------------------------------------

// rational square root; false if q is not a perfect rational square
inline bool rational_sqrt(const Rational& q, Rational& out) {
    if (q < 0) return false;
    BigInt n = numerator(q), d = denominator(q);
    BigInt rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d) return false;
    out = Rational(rn, rd);
    return true;
}

inline std::string numeric_str(const RingElem::Numeric& n) {
    if (n.scoef.is_zero()) return n.plain.str();
    std::string tail = "(" + n.scoef.str() + ")*s";
    if (n.plain.is_zero()) return tail;
    return n.plain.str() + " + " + tail;
}

// Same document shape with every ring-element string replaced by its exact
// value: at q = 1 the classical specialization, otherwise the value at
// v = sqrt(q) with s kept formal (s^2 = q + q^-1 is recorded in metadata).
inline Json eval_document_json(const TableDocument& doc, const Rational& q) {
    if (q == 0) throw PoleError("q = 0");
    bool classical = (q == 1);
    Rational v;
    if (!classical && !rational_sqrt(q, v))
        throw ParseError("q must be the square of a rational: " + rational_str(q));

    auto value = [&](const RingElem& x) -> std::string {
        if (classical) return x.eval_classical().str();
        return numeric_str(x.eval_numeric(v));
    };

    Json j = document_json(doc);
    j["q"] = rational_str(q);
    if (classical) {
        j["evaluation"] = "classical (q = 1, s = r2)";
    } else {
        j["evaluation"] = "exact at v = " + rational_str(v) + ", s formal";
        j["s_squared"] = rational_str(v * v + Rational(1) / (v * v));
    }

    // walk the emitted tables and re-render every value in place
    Json& t = j["tables"];
    auto redo_rows = [&](Json& tab, const std::vector<std::vector<RingElem>>& src) {
        for (std::size_t a = 0; a < tab.size(); ++a)
            for (std::size_t i = 0; i < src[a].size(); ++i)
                tab[a]["values"][i] = value(src[a][i]);
    };
    redo_rows(t["l"], doc.sc.l);
    redo_rows(t["r"], doc.sc.r);
    redo_rows(t["g"], doc.sc.g);
    auto f3 = lowered_f(doc.sc, doc.kt.cartan);
    for (int i = 0; i < doc.rank; ++i)
        for (int jx = 0; jx < doc.rank; ++jx)
            for (int k = 0; k < doc.rank; ++k) {
                t["f_upper"][i][jx][k] = value(doc.sc.fud[i][jx][k]);
                t["f_lower"][i][jx][k] = value(f3[i][jx][k]);
            }
    {
        std::size_t row = 0;
        for (const auto& [key, val] : doc.sc.N) t["N"][row++]["value"] = value(val);
    }
    for (int i = 0; i < doc.rank; ++i)
        for (int jx = 0; jx < doc.rank; ++jx) {
            t["killing"]["cartan"][i][jx] = value(doc.kt.cartan[i][jx]);
            t["killing_inverse"]["cartan"][i][jx] = value(doc.kt.cartan_inv[i][jx]);
        }
    for (int a = 0; a < doc.kt.n_roots; ++a) {
        t["killing"]["roots"][a]["value"] = value(doc.kt.root_pair[a]);
        t["killing_inverse"]["roots"][a]["value"] = value(doc.kt.root_pair_inv[a]);
    }
    return j;
}

inline std::string eval_document_text(const TableDocument& doc, const Rational& q) {
    if (q == 0) throw PoleError("q = 0");
    bool classical = (q == 1);
    Rational v;
    if (!classical && !rational_sqrt(q, v))
        throw ParseError("q must be the square of a rational: " + rational_str(q));
    std::string note = classical
                           ? std::string("evaluated classically at q = 1 (s = r2)")
                           : "evaluated at v = " + rational_str(v) + " with s formal, s^2 = " +
                                 rational_str(v * v + Rational(1) / (v * v));
    auto value = [&](const RingElem& x) {
        return classical ? x.eval_classical().str() : numeric_str(x.eval_numeric(v));
    };
    return document_text_with(doc, value, note);
}

}  // namespace qla
