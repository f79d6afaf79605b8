#include <catch2/catch_amalgamated.hpp>

#include "qla/classical.hpp"
#include "qla/closedform.hpp"
#include "qla/qlabuild.hpp"

using namespace qla;

namespace {

EpsVec ev(int rank, int i, int ci, int j = 0, int cj = 0) {
    EpsVec e(rank, 0);
    e[i - 1] += ci;
    if (j) e[j - 1] += cj;
    return e;
}

RingElem anchor_for(AlgebraType t, int l) {
    switch (t) {
        case AlgebraType::B: return qhalf(2 * l - 3) + qhalf(7 - 2 * l);
        case AlgebraType::C: return qpow(l + 2) + qpow(-l);
        default: return qpow(l - 2) + qpow(4 - l);
    }
}

StructureConstants pipeline_sc(AlgebraType t, int l) {
    Representation rep = build_vector_rep(RootSystem::build(t, l));
    AdjointRealization real = build_adjoint_realization(build_submodule_bases(rep));
    calibrate(real, anchor_for(t, l));
    return extract_structure_constants(real, compute_bracket_table(real));
}

}  // namespace

TEST_CASE("degeneration collapses the two-sided actions") {
    StructureConstants sc = pipeline_sc(AlgebraType::B, 2);
    RootSystem& rs = sc.rs;
    // chain-root action q^1/2 + q^3/2 lands on 2
    CHECK(sc.l_at(ev(2, 1, 1, 2, -1), 1).eval_classical() == BaseScalar(2));
    CHECK(sc.l_at(ev(2, 1, 1, 2, -1), 1).eval_classical() ==
          sc.r_at(ev(2, 1, 1, 2, -1), 1).eval_classical());

    ClassicalBracket cb = classical_bracket(sc);
    REQUIRE(cb.dim == (int)rs.roots.size() + rs.rank);

    // [X_{e1-e2}, X_{e2}] lands on X_{e1} with a nonzero coefficient
    int a = rs.root_index(ev(2, 1, 1, 2, -1));
    int b = rs.root_index(ev(2, 2, 1));
    int c = rs.root_index(ev(2, 1, 1));
    REQUIRE(a >= 0);
    REQUIRE(b >= 0);
    REQUIRE(c >= 0);
    CHECK(!cb.table[a][b][c].is_zero());
    CHECK(cb.jacobi_holds(a, b, c));
}

TEST_CASE("classical suite passes on pipeline and closed tables") {
    {
        CheckReport rp = classical_suite(pipeline_sc(AlgebraType::B, 2));
        INFO("B2 pipeline: " << (rp.failures.empty() ? "" : rp.failures.front()));
        CHECK(rp.ok());
        CHECK(rp.checks > 100);
    }
    for (auto [t, l] : {std::pair{AlgebraType::B, 3}, {AlgebraType::C, 3}}) {
        StructureConstants sc = closed_constants(RootSystem::build(t, l));
        CheckReport rp = classical_suite(sc);
        INFO(algebra_letter(t) << l << " closed: "
                               << (rp.failures.empty() ? "" : rp.failures.front()));
        CHECK(rp.ok());
    }
    {
        // rank 4 takes the sampled-triple branch; keep the count modest here
        StructureConstants sc = closed_constants(RootSystem::build(AlgebraType::D, 4));
        CheckReport rp = classical_suite(sc, 7u, 500);
        INFO("D4 closed: " << (rp.failures.empty() ? "" : rp.failures.front()));
        CHECK(rp.ok());
    }
    for (auto w : {FamilyWeights{}, FamilyWeights{RingElem(1), RingElem(2)}}) {
        StructureConstants sc = closed_constants(RootSystem::build(AlgebraType::A, 2), w);
        CheckReport rp = classical_suite(sc);
        INFO("A2 closed: " << (rp.failures.empty() ? "" : rp.failures.front()));
        CHECK(rp.ok());
    }
}

TEST_CASE("suite flags a scaled action row") {
    StructureConstants sc = closed_constants(RootSystem::build(AlgebraType::B, 2));
    sc.l[0][0] = sc.l[0][0] * 2;
    CheckReport rp = classical_suite(sc);
    CHECK(!rp.ok());
}
