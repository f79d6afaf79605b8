// Command-line front end.  Three jobs:
//   generate  emit the full structure-constant document (JSON or text)
//   verify    run verification suites, print per-suite pass/fail, exit 0/1
//   eval      evaluate every table entry at a rational q, exactly
// Exit codes: 0 pass, 1 verification failure, 2 usage error, 3 evaluation pole.

#include "qla/classical.hpp"
#include "qla/closedform.hpp"
#include "qla/qlabuild.hpp"
#include "qla/serialize.hpp"
#include "qla/tensordecomp.hpp"
#include "qla/vectorrep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

using namespace qla;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

AlgebraType parse_algebra(const std::string& s) {
    if (s.size() == 1) switch (std::toupper(static_cast<unsigned char>(s[0]))) {
            case 'A': return AlgebraType::A;
            case 'B': return AlgebraType::B;
            case 'C': return AlgebraType::C;
            case 'D': return AlgebraType::D;
        }
    throw UsageError("algebra must be one of A, B, C, D (got '" + s + "')");
}

FamilyWeights parse_weights(AlgebraType t, const std::string& s, const std::string& tt) {
    if (t != AlgebraType::A) {
        if (s != "1" || tt != "0")
            throw UsageError("--s/--t parameterize the A series only");
        return {};
    }
    try {
        return {RingElem::parse(s), RingElem::parse(tt)};
    } catch (const ParseError& e) {
        throw UsageError(std::string("bad weight: ") + e.what());
    }
}

int thread_hint() {
    const char* e = std::getenv("QLA_THREADS");
    if (!e) return 1;
    int n = std::atoi(e);
    return n > 1 ? n : 1;
}

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(output_path, std::ios::binary);
    if (!f) throw UsageError("cannot open for writing: " + output_path);
    f << text;
}

// shared artifacts for the verify suites; built once, read-only afterwards
struct VerifyData {
    RootSystem rs;
    FamilyWeights fw;
    unsigned seed = 0;
    std::optional<Representation> rep;
    std::optional<TensorDecomp> dec;
    std::optional<AdjointRealization> real;
    std::optional<BracketTable> tb;
    RingElem lambda{1};
    std::optional<StructureConstants> sc;  // extracted (B/C/D) or closed (A)
    std::optional<KillingTable> kt;
};

CheckReport suite_rep(const VerifyData& d) { return verify_defining_relations(*d.rep); }

CheckReport suite_submodule(const VerifyData& d) { return verify_decomposition(*d.dec); }

CheckReport suite_pipeline(const VerifyData& d) {
    CheckReport rp = verify_realization(*d.real);
    rp.check(!d.lambda.is_zero(), "calibration scalar is invertible");
    rp.merge(compare_constants(*d.sc, closed_constants(d.rs, d.fw)));
    return rp;
}

CheckReport suite_killing(const VerifyData& d) {
    CheckReport rp = verify_killing_properties(*d.kt);
    KillingTable closed = closed_killing(d.rs);
    const int l = d.rs.rank;
    auto cmp = [&](const RingElem& x, const RingElem& y, const std::string& where) {
        if (x == y)
            rp.check(true, {});
        else
            rp.fail(where + ": " + x.str() + " vs " + y.str());
    };
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) {
            auto ij = std::to_string(i + 1) + "," + std::to_string(j + 1);
            cmp(d.kt->cartan[i][j], closed.cartan[i][j], "B(H) at " + ij);
            cmp(d.kt->cartan_inv[i][j], closed.cartan_inv[i][j], "B(H) inverse at " + ij);
        }
    for (int a = 0; a < d.kt->n_roots; ++a) {
        cmp(d.kt->root_pair[a], closed.root_pair[a],
            "B(X) at " + eps_str(d.rs.roots[a]));
        cmp(d.kt->root_pair_inv[a], closed.root_pair_inv[a],
            "B(X) inverse at " + eps_str(d.rs.roots[a]));
    }
    if (d.real) {
        rp.merge(verify_ad_invariance(*d.real, *d.tb, *d.kt));
        rp.merge(verify_dagger_form(*d.real, *d.tb, *d.kt));
    }
    return rp;
}

// symmetry identities, support patterns, and the composed-map relations
CheckReport suite_relations(const VerifyData& d) {
    CheckReport rp = symmetry_suite(*d.sc, *d.kt);
    rp.merge(support_suite(*d.sc));
    rp.merge(verify_relations(*d.sc, *d.kt).report);
    return rp;
}

CheckReport suite_classical(const VerifyData& d) { return classical_suite(*d.sc, d.seed); }

CheckReport suite_c2(const VerifyData& d) { return verify_c2_reference(*d.sc); }

CheckReport suite_alseries(const VerifyData& d) {
    std::mt19937 rng(d.seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    CheckReport rp;
    for (int k = 0; k < 5; ++k) {
        RingElem s = RingElem(num(rng)) / RingElem(den(rng));
        RingElem t = RingElem(num(rng)) / RingElem(den(rng));
        while ((s + t).is_zero()) s = s + RingElem(1);
        StructureConstants sc = closed_constants(d.rs, {s, t});
        KillingTable kt = closed_killing(d.rs);
        CheckReport one = symmetry_suite(sc, kt);
        one.merge(verify_relations(sc, kt).report);
        if (!one.ok())
            rp.fail("weights s = " + s.str() + ", t = " + t.str() + ": " +
                    one.failures.front());
        rp.checks += one.checks;
    }
    return rp;
}

struct Suite {
    std::string name;
    bool needs_pipeline;                              // B/C/D pipeline artifacts
    std::function<CheckReport(const VerifyData&)> fn;
};

const std::vector<Suite> catalogue = {
    {"rep", false, suite_rep},
    {"submodule", false, suite_submodule},
    {"pipeline", true, suite_pipeline},
    {"killing", true, suite_killing},
    {"relations", true, suite_relations},
    {"classical", true, suite_classical},
    {"c2", true, suite_c2},
    {"alseries", false, suite_alseries},
};

bool suite_applies(const std::string& name, AlgebraType t, int rank) {
    if (t == AlgebraType::A)
        return name == "relations" || name == "classical" || name == "killing" ||
               name == "alseries";
    if (name == "alseries") return false;
    if (name == "c2") return t == AlgebraType::C && rank == 2;
    return true;
}

int run_verify(AlgebraType t, int rank, const FamilyWeights& fw,
               std::vector<std::string> names, unsigned seed, bool inject) {
    if (names.size() == 1 && names[0] == "all") {
        names.clear();
        for (const Suite& s : catalogue)
            if (suite_applies(s.name, t, rank)) names.push_back(s.name);
    }
    std::vector<const Suite*> picked;
    for (const std::string& n : names) {
        const Suite* found = nullptr;
        for (const Suite& s : catalogue)
            if (s.name == n) found = &s;
        if (!found) throw UsageError("unknown suite: " + n);
        if (!suite_applies(n, t, rank))
            throw UsageError("suite " + n + " does not apply to " +
                             std::string(1, algebra_letter(t)) + std::to_string(rank));
        picked.push_back(found);
    }
    if (picked.empty()) throw UsageError("no suites selected");

    VerifyData d;
    d.rs = RootSystem::build(t, rank);
    d.fw = fw;
    d.seed = seed;
    bool vector_side = t != AlgebraType::A;
    bool need_rep = false, need_pipeline = false, need_tables = false;
    for (const Suite* s : picked) {
        if (s->name == "rep" || s->name == "submodule") need_rep = true;
        if (s->needs_pipeline) need_tables = true;
        if (s->needs_pipeline && vector_side) need_pipeline = need_rep = true;
    }
    if (need_rep) {
        d.rep = build_vector_rep(d.rs);
        if (need_pipeline || std::any_of(picked.begin(), picked.end(), [](const Suite* s) {
                return s->name == "submodule";
            }))
            d.dec = build_submodule_bases(*d.rep);
    }
    if (need_pipeline) {
        d.real = build_adjoint_realization(*d.dec);
        d.lambda = calibrate(*d.real, closed_l(d.rs, d.rs.simple[0], 1));
        d.tb = compute_bracket_table(*d.real);
        d.sc = extract_structure_constants(*d.real, *d.tb);
        d.kt = compute_killing(*d.real);
    } else if (need_tables) {
        d.sc = closed_constants(d.rs, fw);
        d.kt = closed_killing(d.rs);
    }
    if (inject) {
        if (d.sc) {
            d.sc->l[0][0] = -d.sc->l[0][0];
            if (!d.sc->N.empty()) d.sc->N.begin()->second = -d.sc->N.begin()->second;
        } else {
            std::cerr << "error: --inject-error needs a table-reading suite\n";
            return 1;
        }
    }

    auto safe = [&](const Suite* s) -> CheckReport {
        try {
            return s->fn(d);
        } catch (const std::exception& e) {
            CheckReport rp;
            rp.fail(std::string("exception: ") + e.what());
            return rp;
        }
    };
    std::vector<CheckReport> results(picked.size());
    int workers = std::min<int>(thread_hint(), (int)picked.size());
    if (workers > 1) {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = cursor++) < picked.size();)
                    results[i] = safe(picked[i]);
            });
        for (std::thread& th : pool) th.join();
    } else {
        for (std::size_t i = 0; i < picked.size(); ++i) results[i] = safe(picked[i]);
    }

    bool all_ok = true;
    for (std::size_t i = 0; i < picked.size(); ++i) {
        const CheckReport& rp = results[i];
        std::cout << (rp.ok() ? "[pass] " : "[fail] ") << picked[i]->name << "  ("
                  << rp.checks << " checks";
        if (!rp.ok()) std::cout << ", " << rp.failures.size() << " failures";
        std::cout << ")\n";
        for (std::size_t k = 0; k < rp.failures.size() && k < 3; ++k)
            std::cout << "       counterexample: " << rp.failures[k] << "\n";
        if (rp.failures.size() > 3)
            std::cout << "       ... " << rp.failures.size() - 3 << " more\n";
        all_ok = all_ok && rp.ok();
    }
    return all_ok ? 0 : 1;
}

Rational parse_rational(const std::string& s) {
    try {
        Rational r(s);
        return r;
    } catch (const std::exception&) {
        throw UsageError("not a rational: " + s);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact structure-constant tables for quantum Lie algebras"};
    app.require_subcommand(1);

    std::string algebra, format = "json", output, s_w = "1", t_w = "0", q_text;
    int rank = 0;
    unsigned seed = 20240901u;
    std::vector<std::string> suites{"all"};
    bool inject = false;

    auto add_common = [&](CLI::App* c) {
        c->add_option("algebra", algebra, "series letter: A, B, C or D")->required();
        c->add_option("rank", rank, "rank of the series member")->required();
        c->add_option("--s", s_w, "highest-weight parameter s (A series)");
        c->add_option("--t", t_w, "highest-weight parameter t (A series)");
    };
    auto add_format = [&](CLI::App* c) {
        c->add_option("--format", format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        c->add_option("--output", output, "write to a file instead of stdout");
    };

    CLI::App* gen = app.add_subcommand("generate", "emit the structure-constant document");
    add_common(gen);
    add_format(gen);

    CLI::App* ver = app.add_subcommand("verify", "run verification suites");
    add_common(ver);
    ver->add_option("--suites", suites,
                    "comma-separated subset of rep,submodule,pipeline,killing,relations,"
                    "classical,c2,alseries (default: all)")
        ->delimiter(',');
    ver->add_option("--seed", seed, "seed for sampled checks");
    ver->add_flag("--inject-error", inject)->group("");

    CLI::App* ev = app.add_subcommand("eval", "evaluate every table at a rational q");
    add_common(ev);
    ev->add_option("--q", q_text, "rational q; must be the square of a rational")
        ->required();
    add_format(ev);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        AlgebraType t = parse_algebra(algebra);
        FamilyWeights fw = parse_weights(t, s_w, t_w);
        RootSystem::build(t, rank);  // validates the rank for this series

        if (gen->parsed()) {
            TableDocument doc = make_document(t, rank, fw);
            emit(format == "json" ? document_json(doc).dump(2) + "\n" : document_text(doc),
                 output);
            return 0;
        }
        if (ver->parsed()) return run_verify(t, rank, fw, suites, seed, inject);
        if (ev->parsed()) {
            Rational q = parse_rational(q_text);
            TableDocument doc = make_document(t, rank, fw);
            emit(format == "json" ? eval_document_json(doc, q).dump(2) + "\n"
                                  : eval_document_text(doc, q),
                 output);
            return 0;
        }
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PoleError& e) {
        std::cerr << "pole: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
