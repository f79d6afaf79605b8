#include <catch2/catch_amalgamated.hpp>

#include "qla/qlabuild.hpp"

#include <set>

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

// anchor values l_{alpha_1}(H_1) used throughout
RingElem anchor_for(AlgebraType t, int l) {
    switch (t) {
        case AlgebraType::B: return qhalf(2 * l - 3) + qhalf(7 - 2 * l);
        case AlgebraType::C: return qpow(l + 2) + qpow(-l);
        default: return qpow(l - 2) + qpow(4 - l);
    }
}

}  // namespace

TEST_CASE("generator identification matches the tensor-square tables") {
    SECTION("B2 short root") {
        AdjointRealization real = make_real(AlgebraType::B, 2);
        // X_{eps_1} = xi v_{1,l+1}; v_{1,3} = q^{-1/2}|1,3> - q^{1/2}|3,1>
        TensorVec expect;
        expect.add(1, 3, real.xi * qhalf(-1));
        expect.add(3, 1, -real.xi * qhalf(1));
        CHECK(real.vectors[real.root_gen(ev(2, 1, 1))] == expect);
        // xi = (q+q^{-1}) <t,t> with <t,t> = q^3+q+1+q^{-1}+q^{-3}
        RingElem tt = qpow(3) + qpow(1) + RingElem(1) + qpow(-1) + qpow(-3);
        CHECK(real.xi == (qpow(1) + qpow(-1)) * tt);
    }
    SECTION("C2 long root carries the formal square root") {
        AdjointRealization real = make_real(AlgebraType::C, 2);
        TensorVec expect;
        expect.add(2, 2, -real.xi * selem());
        CHECK(real.vectors[real.root_gen(ev(2, 2, 2))] == expect);
        TensorVec opposite;
        opposite.add(3, 3, real.xi * selem());
        CHECK(real.vectors[real.root_gen(ev(2, 2, -2))] == opposite);
    }
    SECTION("D4 last Cartan element mixes the two zero-weight tails") {
        AdjointRealization real = make_real(AlgebraType::D, 4);
        const SubmoduleBasis& adj = real.dec.adjoint();
        TensorVec expect = real.xi * (adj.vectors[adj.cart_index.at(3)] +
                                      (qpow(1) + qpow(-1)) * adj.vectors[adj.cart_index.at(4)]);
        CHECK(real.vectors[real.cartan_gen(4)] == expect);
    }
}

TEST_CASE("realization is weight-graded and exactly dual") {
    for (auto [t, l] : {std::pair{AlgebraType::B, 2}, {AlgebraType::C, 2}, {AlgebraType::D, 4}}) {
        AdjointRealization real = make_real(t, l);
        CheckReport rp = verify_realization(real);
        INFO(algebra_letter(t) << l);
        CHECK(rp.ok());
    }
}

TEST_CASE("calibration against the anchor is exact and idempotent") {
    for (auto [t, l] : {std::pair{AlgebraType::B, 2}, {AlgebraType::B, 3}, {AlgebraType::C, 2},
                        {AlgebraType::C, 3}, {AlgebraType::D, 4}}) {
        AdjointRealization real = make_real(t, l);
        RingElem anchor = anchor_for(t, l);
        RingElem lam = calibrate(real, anchor);
        INFO(algebra_letter(t) << l);
        // the t/<t,t> singlet normalization reproduces the printed scaling
        CHECK(lam == RingElem(1));
        int h1 = real.cartan_gen(1);
        int x1 = real.root_gen(real.rs.simple[0]);
        std::vector<RingElem> row = bracket_coefficients(real, h1, x1);
        CHECK(row[x1] == anchor);
        for (int c = 0; c < real.size(); ++c)
            if (c != x1) CHECK(row[c].is_zero());
    }
}

TEST_CASE("calibration absorbs a rescaled singlet covector") {
    AdjointRealization real = make_real(AlgebraType::B, 2);
    RingElem anchor = anchor_for(AlgebraType::B, 2);
    calibrate(real, anchor);
    BracketTable reference = compute_bracket_table(real);

    AdjointRealization scaled = make_real(AlgebraType::B, 2);
    RingElem c(7);
    scaled.singlet_dual = c * scaled.singlet_dual;
    RingElem lam = calibrate(scaled, anchor);
    CHECK(lam == RingElem(1) / c);
    BracketTable rescaled = compute_bracket_table(scaled);
    CHECK(reference.coef == rescaled.coef);
}

TEST_CASE("calibration refuses a vanishing anchor") {
    AdjointRealization real = make_real(AlgebraType::B, 2);
    real.vectors[real.cartan_gen(1)] = TensorVec{};
    CHECK_THROWS_AS(calibrate(real, RingElem(1)), MathError);
}

TEST_CASE("bracket spot values for B2") {
    AdjointRealization real = make_real(AlgebraType::B, 2);
    calibrate(real, anchor_for(AlgebraType::B, 2));
    SECTION("[H_1, X_{e1-e2}] is the anchor") {
        auto out = bracket(real, GenLabel::H(1), GenLabel::X(ev(2, 1, 1, 2, -1)));
        REQUIRE(out.size() == 1);
        CHECK(out.at(GenLabel::X(ev(2, 1, 1, 2, -1))) == qhalf(1) + qhalf(3));
    }
    SECTION("[X_{e1}, X_{e1}] vanishes: twice a short root is not a root") {
        auto out = bracket(real, GenLabel::X(ev(2, 1, 1)), GenLabel::X(ev(2, 1, 1)));
        CHECK(out.empty());
    }
    SECTION("[X_{e1-e2}, X_{e2}] lands on X_{e1} with no square-root factor") {
        auto out = bracket(real, GenLabel::X(ev(2, 1, 1, 2, -1)), GenLabel::X(ev(2, 2, 1)));
        REQUIRE(out.size() == 1);
        CHECK(out.at(GenLabel::X(ev(2, 1, 1))) == qpow(-1));
    }
}

TEST_CASE("extracted constants for B2 match the closed forms") {
    AdjointRealization real = make_real(AlgebraType::B, 2);
    calibrate(real, anchor_for(AlgebraType::B, 2));
    BracketTable tb = compute_bracket_table(real);
    StructureConstants sc = extract_structure_constants(real, tb);

    // left action of the Cartan generators on simple-root vectors (l = 2)
    CHECK(sc.l_at(ev(2, 1, 1, 2, -1), 1) == qhalf(1) + qhalf(3));
    CHECK(sc.l_at(ev(2, 2, 1), 2) == qhalf(-1) - qhalf(1) + qhalf(3));
    CHECK(sc.l_at(ev(2, 1, 1), 1) == qhalf(1));
    CHECK(sc.l_at(ev(2, 1, 1), 2) == qhalf(3) - qhalf(1));
    CHECK(sc.l_at(ev(2, 1, 1, 2, 1), 1).is_zero());
    CHECK(sc.l_at(ev(2, 1, 1, 2, 1), 2) == qhalf(3));
    CHECK(sc.N_at(ev(2, 1, 1, 2, -1), ev(2, 2, 1)) == qpow(-1));
    CHECK(sc.N_at(ev(2, 1, 1), ev(2, 2, 1)) == -qhalf(-1));
    CHECK(sc.N_at(ev(2, 2, 1), ev(2, 1, 1)) == qhalf(1));

    // q-conjugation sends l to r on the mirrored root
    for (int a = 0; a < real.n_roots; ++a)
        for (int i = 1; i <= 2; ++i)
            CHECK(sc.r[a][i - 1] == sc.l[a][i - 1].qconj());
}

TEST_CASE("lowered f is completely symmetric and matches the corner value") {
    AdjointRealization real = make_real(AlgebraType::B, 2);
    calibrate(real, anchor_for(AlgebraType::B, 2));
    BracketTable tb = compute_bracket_table(real);
    StructureConstants sc = extract_structure_constants(real, tb);
    // Killing Cartan block of the B series: [[q+q^{-1}, -1], [-1, 1]]
    std::vector killing(2, std::vector<RingElem>(2));
    killing[0][0] = qpow(1) + qpow(-1);
    killing[0][1] = killing[1][0] = RingElem(-1);
    killing[1][1] = RingElem(1);
    auto f3 = lowered_f(sc, killing);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                CHECK(f3[i][j][k] == f3[j][i][k]);
                CHECK(f3[i][j][k] == f3[i][k][j]);
            }
    RingElem sdif = qhalf(1) - qhalf(-1);
    CHECK(f3[1][1][1] == (qpow(1) + qpow(-1)) * sdif - sdif);
    CHECK(f3[0][0][0] == (qhalf(-1) + qhalf(1)) * (qpow(2) - qpow(-2)));
}

TEST_CASE("grading holds across every generator pair") {
    for (auto [t, l] : {std::pair{AlgebraType::B, 2}, {AlgebraType::C, 2}, {AlgebraType::C, 3},
                        {AlgebraType::D, 4}}) {
        AdjointRealization real = make_real(t, l);
        calibrate(real, anchor_for(t, l));
        BracketTable tb = compute_bracket_table(real);
        INFO(algebra_letter(t) << l);
        CHECK_NOTHROW(extract_structure_constants(real, tb));
    }
}

TEST_CASE("C2 values agree with the tabulated rank-2 algebra") {
    AdjointRealization real = make_real(AlgebraType::C, 2);
    calibrate(real, anchor_for(AlgebraType::C, 2));
    BracketTable tb = compute_bracket_table(real);
    StructureConstants sc = extract_structure_constants(real, tb);

    EpsVec a1 = ev(2, 1, 1, 2, -1);   // eps_1 - eps_2
    EpsVec a2 = ev(2, 2, 2);          // 2 eps_2
    EpsVec a12 = ev(2, 1, 1, 2, 1);   // eps_1 + eps_2
    EpsVec a112 = ev(2, 1, 2);        // 2 eps_1

    CHECK(sc.l_at(a1, 1) == qpow(4) + qpow(-2));
    CHECK(sc.l_at(a1, 2) == -qpow(-3));
    CHECK(sc.l_at(a2, 1) == -(qpow(1) + qpow(-1)) * qpow(1));
    CHECK(sc.l_at(a2, 2) == qpow(2) * (qpow(1) + qpow(-1)));
    CHECK(sc.l_at(a12, 1) == (qpow(1) + qpow(-1)) * (qpow(1) - qpow(-1)) * qpow(2));
    CHECK(sc.l_at(a12, 2) == qpow(1));
    CHECK(sc.l_at(a112, 1) == (qpow(1) + qpow(-1)) * qpow(3));
    CHECK(sc.l_at(a112, 2).is_zero());

    // N table rows (all carrying one power of the formal (q+q^{-1})^{1/2})
    RingElem s = selem();
    CHECK(sc.N_at(a112, eps_neg(a1)) == s * qpow(-2));
    CHECK(sc.N_at(a112, eps_neg(a12)) == -s * qpow(-2));
    CHECK(sc.N_at(a12, a1) == s * qpow(-1));
    CHECK(sc.N_at(a12, eps_neg(a1)) == s * qpow(-3));
    CHECK(sc.N_at(a12, eps_neg(a2)) == -s);
    CHECK(sc.N_at(a12, eps_neg(a112)) == -s * qpow(-2));
    CHECK(sc.N_at(a2, a1) == s * qpow(-2));
    CHECK(sc.N_at(a2, eps_neg(a12)) == -s);
    CHECK(sc.N_at(a1, a12) == -s * qpow(1));
    CHECK(sc.N_at(a1, a2) == -s * qpow(2));
    CHECK(sc.N_at(a1, eps_neg(a12)) == s * qpow(-3));
    CHECK(sc.N_at(a1, eps_neg(a112)) == s * qpow(-2));
    // zero entries of the table stay zero even where roots could combine
    CHECK(sc.N_at(a2, a112).is_zero());
    CHECK(sc.N_at(a112, a2).is_zero());
}

TEST_CASE("bracket table is independent of the thread count") {
    AdjointRealization real = make_real(AlgebraType::C, 2);
    calibrate(real, anchor_for(AlgebraType::C, 2));
    setenv("QLA_THREADS", "1", 1);
    BracketTable one = compute_bracket_table(real);
    setenv("QLA_THREADS", "5", 1);
    BracketTable five = compute_bracket_table(real);
    unsetenv("QLA_THREADS");
    CHECK(one.coef == five.coef);
}

TEST_CASE("structure constants collapse correctly in the classical limit") {
    AdjointRealization real = make_real(AlgebraType::B, 2);
    calibrate(real, anchor_for(AlgebraType::B, 2));
    BracketTable tb = compute_bracket_table(real);
    StructureConstants sc = extract_structure_constants(real, tb);
    // [H_i,H_j] dies at q=1 and l equals r there
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(sc.fud[i][j][k].eval_classical() == BaseScalar(Rational(0)));
    for (int a = 0; a < real.n_roots; ++a)
        for (int i = 0; i < 2; ++i)
            CHECK(sc.l[a][i].eval_classical() == sc.r[a][i].eval_classical());
    // classical l-values are consecutive coordinate differences of the root
    for (int a = 0; a < real.n_roots; ++a)
        for (int i = 1; i <= 2; ++i) {
            const EpsVec& root = real.rs.roots[a];
            int cart = root[i - 1] - (i < 2 ? root[i] : 0);
            CHECK(sc.l[a][i - 1].eval_classical() == BaseScalar(Rational(cart)));
        }
}
