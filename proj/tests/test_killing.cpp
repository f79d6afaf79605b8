#include <catch2/catch_amalgamated.hpp>

#include "qla/killing.hpp"

using namespace qla;

namespace {

AdjointRealization make_real(AlgebraType t, int l) {
    Representation rep = build_vector_rep(RootSystem::build(t, l));
    return build_adjoint_realization(build_submodule_bases(rep));
}

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

const std::vector<std::pair<AlgebraType, int>> closed_family = {
    {AlgebraType::A, 1}, {AlgebraType::A, 2}, {AlgebraType::A, 3}, {AlgebraType::A, 4},
    {AlgebraType::B, 2}, {AlgebraType::B, 3}, {AlgebraType::B, 4}, {AlgebraType::C, 2},
    {AlgebraType::C, 3}, {AlgebraType::C, 4}, {AlgebraType::D, 4}, {AlgebraType::D, 5},
    {AlgebraType::D, 6}};

}  // namespace

TEST_CASE("closed Cartan block is [2]_q with corner corrections") {
    const RingElem two = qpow(1) + qpow(-1);

    auto a3 = closed_killing_cartan(RootSystem::build(AlgebraType::A, 3));
    CHECK(a3[0][0] == two);
    CHECK(a3[0][1] == RingElem(-1));
    CHECK(a3[0][2].is_zero());

    // short-root corner of the odd orthogonal series
    auto b3 = closed_killing_cartan(RootSystem::build(AlgebraType::B, 3));
    CHECK(b3[2][2] == RingElem(1));
    CHECK(b3[1][2] == RingElem(-1));
    CHECK(b3[0][2].is_zero());
    CHECK(b3[0][0] == two);

    // long-root corner of the symplectic series
    auto c2 = closed_killing_cartan(RootSystem::build(AlgebraType::C, 2));
    CHECK(c2[1][1] == (qpow(2) + qpow(-2)) / two);
    CHECK(c2[0][1] == RingElem(-1));

    // fork of the even orthogonal series: both tails touch node l-2 only
    auto d4 = closed_killing_cartan(RootSystem::build(AlgebraType::D, 4));
    CHECK(d4[1][2] == RingElem(-1));
    CHECK(d4[1][3] == RingElem(-1));
    CHECK(d4[2][3].is_zero());
    CHECK(d4[0][3].is_zero());
    CHECK(d4[3][3] == two);
}

TEST_CASE("closed inverse spot values") {
    auto a2 = closed_killing_inverse(RootSystem::build(AlgebraType::A, 2));
    RingElem den = qpow(3) - qpow(-3);
    CHECK(a2[0][0] == (qpow(2) - qpow(-2)) / den);
    CHECK(a2[0][1] == (qpow(1) - qpow(-1)) / den);
    CHECK(a2[0][1] == a2[1][0]);
    CHECK(a2[1][1] == (qpow(1) + qpow(-1)) * (qpow(1) - qpow(-1)) / den);

    auto d4 = closed_killing_inverse(RootSystem::build(AlgebraType::D, 4));
    const RingElem tail = (qpow(3) + qpow(-3)).inv();
    const RingElem two = qpow(1) + qpow(-1);
    CHECK(d4[2][2] == qnum(4) / two * tail);
    CHECK(d4[3][3] == d4[2][2]);
    CHECK(d4[2][3] == qnum(2) / two * tail);
    CHECK(d4[0][1] == qnum(1) * two * tail);
    // the two fork columns coincide, at half the degenerate two-term numerator
    CHECK(d4[0][2] == tail);
    CHECK(d4[0][3] == tail);
    CHECK(d4[1][2] == qnum(2) * tail);
    CHECK(d4[1][3] == qnum(2) * tail);
}

TEST_CASE("closed tables satisfy the structural properties") {
    for (auto [t, l] : closed_family) {
        KillingTable kt = closed_killing(RootSystem::build(t, l));
        CheckReport rp = verify_killing_properties(kt);
        INFO(algebra_letter(t) << l << ": " << (rp.ok() ? "" : rp.failures.front()));
        CHECK(rp.checks > 0);
        CHECK(rp.ok());
    }
}

TEST_CASE("property check flags a perturbed table") {
    KillingTable kt = closed_killing(RootSystem::build(AlgebraType::B, 3));
    kt.cartan[0][0] += RingElem(1);
    CHECK(!verify_killing_properties(kt).ok());

    KillingTable kt2 = closed_killing(RootSystem::build(AlgebraType::B, 3));
    kt2.root_pair[0] *= qpow(1);
    CHECK(!verify_killing_properties(kt2).ok());
}

TEST_CASE("singular matrices are rejected") {
    std::vector m(2, std::vector<RingElem>(2, RingElem(1)));
    CHECK_THROWS_AS(invert_matrix(m), MathError);
}

TEST_CASE("root pairs carry the Weyl-vector weight") {
    KillingTable kt = closed_killing(RootSystem::build(AlgebraType::B, 2));
    const RootSystem& rs = kt.rs;
    // 2 rho = (3, 1): B(X_{e1}, X_{-e1}) = q^{-3/2}, B(X_{e1+e2}, X_{-e1-e2}) = q^{-2}
    CHECK(kt.root_pair[rs.root_index(ev(2, 1, 1))] == qhalf(-3));
    CHECK(kt.root_pair[rs.root_index(ev(2, 1, -1))] == qhalf(3));
    CHECK(kt.root_pair[rs.root_index(ev(2, 1, 1, 2, 1))] == qpow(-2));
    CHECK(kt.root_pair_inv[rs.root_index(ev(2, 1, 1))] == qhalf(3));
}

TEST_CASE("computed form matches the closed tables") {
    for (auto [t, l] :
         {std::pair{AlgebraType::B, 2}, {AlgebraType::C, 2}, {AlgebraType::D, 4}}) {
        AdjointRealization real = make_real(t, l);
        calibrate(real, anchor_for(t, l));
        CheckReport pattern;
        KillingTable kt = compute_killing(real, &pattern);
        INFO(algebra_letter(t) << l
                               << ": " << (pattern.ok() ? "" : pattern.failures.front()));
        CHECK(pattern.ok());
        KillingTable closed = closed_killing(real.rs);
        CHECK(tables_equal(kt, closed));
        // exact inversion of the computed block agrees with the closed inverse
        CHECK(kt.cartan_inv == closed.cartan_inv);
        CHECK(verify_killing_properties(kt).ok());
    }
}

TEST_CASE("form is ad-invariant and matches the dagger pairing") {
    SECTION("full cube at rank two") {
        for (auto t : {AlgebraType::B, AlgebraType::C}) {
            AdjointRealization real = make_real(t, 2);
            calibrate(real, anchor_for(t, 2));
            BracketTable tb = compute_bracket_table(real);
            KillingTable kt = compute_killing(real);
            CheckReport ad = verify_ad_invariance(real, tb, kt);
            CheckReport dg = verify_dagger_form(real, tb, kt);
            INFO(algebra_letter(t) << 2 << ": " << (ad.ok() ? "" : ad.failures.front())
                                   << (dg.ok() ? "" : dg.failures.front()));
            CHECK(ad.checks == 1000);
            CHECK(ad.ok());
            CHECK(dg.checks == 1000);
            CHECK(dg.ok());
        }
    }
    SECTION("seeded sample on the fork series") {
        AdjointRealization real = make_real(AlgebraType::D, 4);
        calibrate(real, anchor_for(AlgebraType::D, 4));
        BracketTable tb = compute_bracket_table(real);
        KillingTable kt = compute_killing(real);
        CheckReport ad = verify_ad_invariance(real, tb, kt, 600);
        CheckReport dg = verify_dagger_form(real, tb, kt, 600);
        INFO((ad.ok() ? "" : ad.failures.front()) << (dg.ok() ? "" : dg.failures.front()));
        CHECK(ad.checks == 600);
        CHECK(ad.ok());
        CHECK(dg.checks == 600);
        CHECK(dg.ok());
    }
}
