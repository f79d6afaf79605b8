// Acceptance gate.  Eight criteria, one [PASS]/[FAIL] line each, exit
// nonzero if any fail.  Everything is exact: a criterion passes only if
// every underlying equality holds in canonical ring form.

#include "qla/classical.hpp"
#include "qla/closedform.hpp"
#include "qla/killing.hpp"
#include "qla/qlabuild.hpp"
#include "qla/tensordecomp.hpp"
#include "qla/vectorrep.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <string>
#include <vector>

using namespace qla;

namespace {

struct Case {
    AlgebraType t;
    int rank;
    Representation rep;
    TensorDecomp dec;
    AdjointRealization real;
    BracketTable tb;
    RingElem lambda;
    StructureConstants sc;
    KillingTable kt;
};

Case build_case(AlgebraType t, int rank) {
    Case c;
    c.t = t;
    c.rank = rank;
    RootSystem rs = RootSystem::build(t, rank);
    c.rep = build_vector_rep(rs);
    c.dec = build_submodule_bases(c.rep);
    c.real = build_adjoint_realization(c.dec);
    c.lambda = calibrate(c.real, closed_l(rs, rs.simple[0], 1));
    c.tb = compute_bracket_table(c.real);
    c.sc = extract_structure_constants(c.real, c.tb);
    c.kt = compute_killing(c.real);
    return c;
}

std::string case_name(const Case& c) {
    return std::string(1, algebra_letter(c.t)) + std::to_string(c.rank);
}

int failures_total = 0;

void report(int num, const std::string& what, const CheckReport& rp,
            const std::string& extra = {}) {
    bool ok = rp.ok();
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << num << ". " << what << "  ("
              << rp.checks << " checks";
    if (!ok) std::cout << ", " << rp.failures.size() << " failures";
    if (!extra.empty()) std::cout << "; " << extra;
    std::cout << ")\n";
    for (std::size_t k = 0; k < rp.failures.size() && k < 3; ++k)
        std::cout << "       counterexample: " << rp.failures[k] << "\n";
    if (!ok) ++failures_total;
}

}  // namespace

int main() {
    std::cout << "acceptance: exact quantum Lie algebra structure constants\n";

    auto t0 = std::chrono::steady_clock::now();
    std::vector<Case> cases;
    for (auto [t, l] : {std::pair{AlgebraType::B, 2},
                        {AlgebraType::B, 3},
                        {AlgebraType::C, 2},
                        {AlgebraType::C, 3},
                        {AlgebraType::D, 4}})
        cases.push_back(build_case(t, l));

    // 1. pipeline vs closed forms, one calibration scalar per case
    {
        CheckReport rp;
        for (const Case& c : cases) {
            rp.check(!c.lambda.is_zero(),
                     case_name(c) + ": calibration scalar is invertible");
            CheckReport cmp = compare_constants(c.sc, closed_constants(c.sc.rs));
            if (!cmp.ok())
                rp.fail(case_name(c) + ": " + cmp.failures.front());
            rp.checks += cmp.checks;
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                          .count();
        rp.check(secs < 300.0, "runtime under five minutes");
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.1f s", secs);
        report(1, "pipeline equals the closed tables after one calibration scalar", rp,
               buf);
    }

    // 2. Killing form: computed = closed, inverse exact, B B^-1 = id
    {
        CheckReport rp;
        for (const Case& c : cases) {
            KillingTable closed = closed_killing(c.sc.rs);
            const int l = c.rank;
            bool equal = true;
            for (int i = 0; i < l; ++i)
                for (int j = 0; j < l; ++j)
                    equal = equal && c.kt.cartan[i][j] == closed.cartan[i][j] &&
                            c.kt.cartan_inv[i][j] == closed.cartan_inv[i][j];
            for (int a = 0; a < c.kt.n_roots; ++a)
                equal = equal && c.kt.root_pair[a] == closed.root_pair[a] &&
                        c.kt.root_pair_inv[a] == closed.root_pair_inv[a];
            rp.check(equal, case_name(c) + ": computed table equals the closed table");
            CheckReport props = verify_killing_properties(c.kt);
            if (!props.ok()) rp.fail(case_name(c) + ": " + props.failures.front());
            rp.checks += props.checks;
        }
        report(2, "Killing form equals the closed table with exact inverse", rp);
    }

    // 3. symmetry suite on the extracted constants
    {
        CheckReport rp;
        for (const Case& c : cases) {
            // extraction itself enforces the root grading (it throws on leaks)
            rp.check(true, case_name(c) + ": bracket respects the root grading");
            CheckReport s = symmetry_suite(c.sc, c.kt);
            s.merge(support_suite(c.sc));
            if (!s.ok()) rp.fail(case_name(c) + ": " + s.failures.front());
            rp.checks += s.checks;
        }
        report(3, "symmetry suite holds on the extracted constants", rp);
    }

    // 4. composed-map relations, one constant per algebra/rank
    {
        CheckReport rp;
        for (const Case& c : cases) {
            RelationResult rel = verify_relations(c.sc, c.kt);
            rp.check(!rel.constant.is_zero(),
                     case_name(c) + ": shared invariant constant is nonzero");
            if (!rel.report.ok()) rp.fail(case_name(c) + ": " + rel.report.failures.front());
            rp.checks += rel.report.checks;
        }
        report(4, "weighted relation sums close with a single shared constant", rp);
    }

    // 5. tabulated rank-two symplectic reference values
    {
        CheckReport rp;
        for (const Case& c : cases)
            if (c.t == AlgebraType::C && c.rank == 2) rp.merge(verify_c2_reference(c.sc));
        report(5, "rank-two symplectic reference tables reproduced exactly", rp);
    }

    // 6. classical degeneration at q = 1
    {
        CheckReport rp;
        for (const Case& c : cases) {
            CheckReport s = classical_suite(c.sc, 20240901u, 10000);
            if (!s.ok()) rp.fail(case_name(c) + ": " + s.failures.front());
            rp.checks += s.checks;
        }
        report(6, "classical limit is an antisymmetric Jacobi bracket", rp);
    }

    // 7. special linear family at randomized weights
    {
        CheckReport rp;
        std::mt19937 rng(424243u);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        for (int l = 1; l <= 3; ++l) {
            RootSystem rs = RootSystem::build(AlgebraType::A, l);
            KillingTable kt = closed_killing(rs);
            for (int k = 0; k < 5; ++k) {
                RingElem s = RingElem(num(rng)) / RingElem(den(rng));
                RingElem t = RingElem(num(rng)) / RingElem(den(rng));
                while ((s + t).is_zero()) s = s + RingElem(1);
                StructureConstants sc = closed_constants(rs, {s, t});
                CheckReport one = symmetry_suite(sc, kt);
                one.merge(verify_relations(sc, kt).report);
                if (!one.ok())
                    rp.fail("A" + std::to_string(l) + " at s = " + s.str() + ", t = " +
                            t.str() + ": " + one.failures.front());
                rp.checks += one.checks;
            }
        }
        report(7, "special linear family passes at randomized weights", rp);
    }

    // 8. representation and submodule verifications
    {
        CheckReport rp;
        for (const Case& c : cases) {
            CheckReport one = verify_defining_relations(c.rep);
            one.merge(verify_decomposition(c.dec));
            one.merge(verify_realization(c.real));
            if (!one.ok()) rp.fail(case_name(c) + ": " + one.failures.front());
            rp.checks += one.checks;
        }
        report(8, "defining relations and submodule structure verified", rp);
    }

    if (failures_total == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << failures_total << " criteria failed\n";
    return 1;
}
