#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgl21/jimbo.hpp"

#include <random>

using namespace qgl21;

namespace {

El mon(Mon m, QQ c = QQ::one()) { return El::monomial(m, c); }
QQ qp(long k) { return QQ::qpow(k); }

const QQ kap = kappa();
const QQ kapInv = kappa().inverse();

}  // namespace

TEST_CASE("chevalley images and loop relations") {
    CHECK(loopgen::e0() == mon(Mon{.f13 = 1, .k = {1, 0, -1}}, QQ(-1)));
    CHECK(loopgen::f0() == mon(Mon{.k = {-1, 0, 1}, .e13 = 1}));
    std::string witness;
    bool ok = checkLoopRelations(&witness);
    INFO("failed relation: ", witness);
    CHECK(ok);
}

TEST_CASE("cone bracket template agrees with the element-level bracket") {
    std::mt19937 rng(991);
    std::uniform_int_distribution<int> kv(-2, 2), pv(0, 1);
    for (int i = 0; i < 60; ++i) {
        Mon ma, mb;
        ma.f12 = pv(rng); ma.e13 = pv(rng); ma.k = {kv(rng), 0, kv(rng)};
        mb.e12 = pv(rng); mb.f23 = pv(rng); mb.k = {0, kv(rng), 0};
        El a = mon(ma), b = mon(mb);
        AWeight wa{kv(rng), kv(rng), kv(rng)}, wb{kv(rng), kv(rng), kv(rng)};
        int pa = pv(rng), pb = pv(rng);
        CHECK(coneBracket(a, wa, pa, b, wb, pb) == superCommutatorAffine(a, wa, pa, b, wb, pb));
    }
}

TEST_CASE("level-zero raising root vectors against worked forms") {
    EpsVectors eps(2);
    CHECK(eps.e.real(0, 0) == El::gen(Gen::E12));
    CHECK(eps.e.real(2, 0) == El::gen(Gen::E23));
    CHECK(eps.e.real(1, 0) == El::gen(Gen::E13));
    CHECK(eps.e.realMinus(1, 0) == loopgen::e0());
    CHECK(eps.e.realMinus(0, 0) == mon(Mon{.f12 = 1, .k = {1, 1, 0}}, QQ(-1)));
    // the 23-minus vector mixes two shapes
    CHECK(eps.e.realMinus(2, 0) ==
          mon(Mon{.f13 = 1, .k = {1, 0, -1}, .e12 = 1}, kap) +
              mon(Mon{.f23 = 1, .k = {0, 1, -1}}, qp(-1)));
}

TEST_CASE("level-zero lowering root vectors against worked forms") {
    EpsVectors eps(1);
    CHECK(eps.f.real(0, 0) == El::gen(Gen::F12));
    CHECK(eps.f.real(2, 0) == El::gen(Gen::F23));
    CHECK(eps.f.real(1, 0) == El::gen(Gen::F13));
    CHECK(eps.f.realMinus(1, 0) == loopgen::f0());
}

TEST_CASE("first primed imaginary vectors") {
    EpsVectors eps(2);
    // tag alpha_1
    El expect1 = mon(Mon{.f12 = 1, .k = {1, 1, 0}, .e12 = 1}, qp(1) * kap) -
                 El::cartan({2, 0, 0}) * kapInv + El::cartan({0, 2, 0}) * kapInv;
    CHECK(eps.e.primedImag(0, 1) == expect1);
    // tag alpha_2
    El expect2 = -(El::cartan({0, 2, 0}) - El::cartan({0, 0, -2})) * (kapInv * qp(-1)) -
                 kap * (mon(Mon{.f12 = 1, .k = {1, 1, 0}, .e12 = 1}) +
                        mon(Mon{.f13 = 1, .k = {1, 0, -1}, .e13 = 1}, qp(-2)) +
                        mon(Mon{.f13 = 1, .k = {1, 0, -1}, .e12 = 1, .e23 = 1}, qp(-1) * kap) +
                        mon(Mon{.f23 = 1, .k = {0, 1, -1}, .e23 = 1}, qp(-2)));
    CHECK(eps.e.primedImag(1, 1) == expect2);
}

TEST_CASE("eigenvalues of the primed imaginary family") {
    EpsVectors eps(2);
    const std::array<std::array<QQ, 3>, 4> lams{{{QQ(1), QQ(0), QQ(0)},
                                                 {QQ(1), QQ(1), QQ(0)},
                                                 {QQ(2), QQ(1), QQ(1)},
                                                 {QQ(3), QQ(0), QQ(0)}}};
    auto qpAt = [](const QQ& lam, long mult) {
        // q^{mult * lam} for integer lam
        long v = lam.isZero() ? 0 : lam.num().coeff(0).convert_to<long>();
        return QQ::qpow(mult * v);
    };
    for (const auto& lam : lams) {
        QQ v1 = eps.e.primedImag(1, 1).hwEigenvalue(lam);
        CHECK(v1 == -kapInv * qp(-1) * (qpAt(lam[1], 2) - qpAt(lam[2], -2)));
        QQ v2 = eps.e.primedImag(1, 2).hwEigenvalue(lam);
        CHECK(v2 == -kapInv * qp(-2) * (qpAt(lam[1], 4) - qpAt(lam[1], 2) * qpAt(lam[2], -2)));
    }
}

TEST_CASE("second-level minus-family vector") {
    EpsVectors eps(2);
    CHECK(eps.e.realMinus(0, 1) == mon(Mon{.f12 = 1, .k = {3, 1, 0}}, QQ(-1)));
}

TEST_CASE("imaginary subalgebra is commutative") {
    EpsVectors eps(3);
    for (int ta = 0; ta < 2; ++ta)
        for (int tb = 0; tb < 2; ++tb)
            for (int m = 1; m <= 3; ++m)
                for (int n = 1; m + n <= 4 && n <= 3; ++n) {
                    El a = eps.e.primedImag(ta, m), b = eps.e.primedImag(tb, n);
                    CHECK((a * b - b * a).isZero());
                    El af = eps.f.primedImag(ta, m), bf = eps.f.primedImag(tb, n);
                    CHECK((af * bf - bf * af).isZero());
                }
}

TEST_CASE("unprimed imaginary vectors expand in the primed family") {
    EpsVectors eps(4);
    for (int tag = 0; tag < 2; ++tag) {
        const El& p1 = eps.e.primedImag(tag, 1);
        const El& p2 = eps.e.primedImag(tag, 2);
        const El& p3 = eps.e.primedImag(tag, 3);
        const El& p4 = eps.e.primedImag(tag, 4);
        CHECK(eps.e.imag(tag, 1) == p1);
        CHECK(eps.e.imag(tag, 2) == p2 + (p1 * p1) * (kap * QQ(1, 2)));
        CHECK(eps.e.imag(tag, 3) == p3 + (p1 * p2) * kap + (p1 * p1 * p1) * (kap * kap * QQ(1, 3)));
        CHECK(eps.e.imag(tag, 4) ==
              p4 + (p1 * p3) * kap + (p2 * p2) * (kap * QQ(1, 2)) +
                  (p1 * p1 * p2) * (kap * kap) + (p1 * p1 * p1 * p1) * (kap * kap * kap * QQ(1, 4)));
    }
}

TEST_CASE("central family: display form at level one") {
    EpsVectors eps(1);
    El ebar13 = El::gen(Gen::E12) * El::gen(Gen::E23) -
                qp(-1) * (El::gen(Gen::E23) * El::gen(Gen::E12));
    El phi1expect =
        El::cartan({2, 0, 0}) + qp(-2) * El::cartan({0, 2, 0}) - qp(-2) * El::cartan({0, 0, -2}) +
        (kap * kap) *
            (qp(-1) * (El::gen(Gen::F12) * El::gen(Gen::E12) * El::cartan({1, 1, 0})) +
             qp(1) * (El::gen(Gen::F13) * ebar13 * El::cartan({1, 0, -1})) +
             qp(-1) * (El::gen(Gen::F23) * El::gen(Gen::E23) * El::cartan({0, 1, -1})));
    CHECK(phiN(eps.e, 1) == phi1expect);
}

TEST_CASE("central family: centrality and eigenvalues") {
    EpsVectors eps(3);
    for (int n = 1; n <= 2; ++n) CHECK(phiN(eps.e, n).isCentral());
    const std::array<std::array<long, 3>, 4> lams{
        {{1, 0, 0}, {1, 1, 0}, {2, 1, 1}, {3, 0, 0}}};
    for (int n = 1; n <= 3; ++n) {
        for (const auto& lv : lams) {
            std::array<QQ, 3> lam{QQ(lv[0]), QQ(lv[1]), QQ(lv[2])};
            QQ got = phiN(eps.e, n).hwEigenvalue(lam);
            QQ expect = qp(2 * n * lv[0]) + qp(2 * n * (lv[1] - 1)) - qp(-2 * n * (lv[2] + 1));
            CHECK(got == expect);
        }
    }
    CHECK(phiN(eps.e, 1).hwEigenvalue({QQ(1), QQ(0), QQ(0)}) == qp(2));
}

TEST_CASE("matrix images of lowering root vectors match the closed forms") {
    const int N = 4;
    PhiVectors phi(N);
    for (int fam = 0; fam < 3; ++fam)
        for (int n = 0; n <= N; ++n) {
            CHECK(phi.f.real(fam, n) == phiFClosedForm({LRoot::RealPlus, fam, n}));
            CHECK(phi.f.realMinus(fam, n) == phiFClosedForm({LRoot::RealMinus, fam, n}));
        }
    for (int tag = 0; tag < 2; ++tag)
        for (int n = 1; n <= N; ++n)
            CHECK(phi.f.imag(tag, n) == phiFClosedForm({LRoot::Imag, tag, n}));
    // primed level-one values
    CHECK(phi.f.primedImag(0, 1) ==
          qp(-1) * (Mat3::unit(1, 1) - qp(-2) * Mat3::unit(2, 2)));
    CHECK(phi.f.primedImag(1, 1) == qp(-2) * (Mat3::unit(2, 2) + Mat3::unit(3, 3)));
}

TEST_CASE("vector representation intertwines the two realizations") {
    const int N = 2;
    EpsVectors eps(N);
    PhiVectors phi(N);
    for (int fam = 0; fam < 3; ++fam)
        for (int n = 0; n <= N; ++n) {
            CHECK(pi(eps.e.real(fam, n)) == phi.e.real(fam, n));
            CHECK(pi(eps.e.realMinus(fam, n)) == phi.e.realMinus(fam, n));
            CHECK(pi(eps.f.real(fam, n)) == phi.f.real(fam, n));
            CHECK(pi(eps.f.realMinus(fam, n)) == phi.f.realMinus(fam, n));
        }
    for (int tag = 0; tag < 2; ++tag)
        for (int n = 1; n <= N; ++n) {
            CHECK(pi(eps.e.imag(tag, n)) == phi.e.imag(tag, n));
            CHECK(pi(eps.f.imag(tag, n)) == phi.f.imag(tag, n));
        }
}
