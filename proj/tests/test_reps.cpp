#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgl21/reps.hpp"

#include <random>

using namespace qgl21;

namespace {

std::mt19937 rng(77001);

Mon randMon() {
    std::uniform_int_distribution<int> ev(0, 2), odd(0, 1), kv(-2, 2);
    Mon m;
    m.f12 = ev(rng); m.f13 = odd(rng); m.f23 = odd(rng);
    m.k = {kv(rng), kv(rng), kv(rng)};
    m.e12 = ev(rng); m.e13 = odd(rng); m.e23 = odd(rng);
    return m;
}

El randEl(int nterms) {
    std::uniform_int_distribution<int> cv(-3, 3);
    El x;
    for (int i = 0; i < nterms; ++i) {
        int c = cv(rng);
        if (c == 0) c = 1;
        x += El::monomial(randMon(), QQ(c));
    }
    return x;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
    Mat3 a = Mat3::unit(1, 2) + Mat3::unit(2, 3) * QQ::qpow(1);
    Mat3 b = Mat3::unit(2, 1);
    CHECK((a * b).at(1, 1) == QQ::one());
    CHECK((b * a).at(2, 2) == QQ::one());
    CHECK((b * a).at(2, 3).isZero());
    CHECK((a * a).at(1, 3) == QQ::qpow(1));
    CHECK(Mat3::id() * a == a);
    CHECK((a - a).isZero());
    CHECK(Mat3::diag(QQ(1), QQ(2), QQ(3)) * Mat3::unit(2, 2) == Mat3::unit(2, 2) * QQ(2));
}

TEST_CASE("vector representation of the generators") {
    CHECK(pi(El::gen(Gen::E12)) == Mat3::unit(1, 2));
    CHECK(pi(El::gen(Gen::E13)) == Mat3::unit(1, 3));
    CHECK(pi(El::gen(Gen::E23)) == Mat3::unit(2, 3));
    CHECK(pi(El::gen(Gen::F12)) == Mat3::unit(2, 1));
    CHECK(pi(El::gen(Gen::F13)) == Mat3::unit(3, 1));
    CHECK(pi(El::gen(Gen::F23)) == Mat3::unit(3, 2));
    CHECK(pi(El::cartan({1, -1, 2})) == Mat3::diag(QQ::qpow(1), QQ::qpow(-1), QQ::qpow(2)));
    CHECK(pi(El::scalar(kappa())) == Mat3::id() * kappa());
}

TEST_CASE("vector representation is a homomorphism") {
    for (int i = 0; i < 120; ++i) {
        El a = randEl(2), b = randEl(2);
        CHECK(pi(a * b) == pi(a) * pi(b));
    }
}

TEST_CASE("supertrace twisted cyclicity") {
    for (int i = 0; i < 80; ++i) {
        El a = El::monomial(randMon()), b = El::monomial(randMon());
        int sgn = (a.parity() && b.parity()) ? -1 : 1;
        CHECK(mu(a * b) == QQ(sgn) * mu(b * a));
    }
}

TEST_CASE("graded operator matrices") {
    CHECK(GOp2::one() * GOp2::one() == GOp2::one());

    // odd row label times odd entry flips the sign
    GOp2 x, y;
    x.at(3, 1) = El::gen(Gen::F13);
    y.at(1, 2) = El::gen(Gen::F23);
    GOp2 p = x * y;
    CHECK(p.at(3, 2) == -(El::gen(Gen::F13) * El::gen(Gen::F23)));

    // even row and column labels leave the product alone
    GOp2 u, v;
    u.at(1, 2) = El::gen(Gen::E12);
    v.at(2, 1) = El::gen(Gen::F12);
    CHECK((u * v).at(1, 1) == El::gen(Gen::E12) * El::gen(Gen::F12));

    // odd entry against odd column pair
    GOp2 w, z;
    w.at(1, 3) = El::gen(Gen::E13);
    z.at(3, 3) = El::gen(Gen::F13);
    CHECK((w * z).at(1, 3) == -(El::gen(Gen::E13) * El::gen(Gen::F13)));
}

TEST_CASE("associativity of the graded product") {
    // entries follow the parity pattern [i]+[j], as every operator in use
    // here does; that keeps products parity-homogeneous
    auto randGOp = [&]() {
        GOp2 g;
        std::uniform_int_distribution<int> pick(1, 3);
        for (int t = 0; t < 4; ++t) {
            int i = pick(rng), j = pick(rng);
            Mon m = randMon();
            if (m.parity() != ((indexParity(i) + indexParity(j)) & 1)) m.f13 ^= 1;
            g.at(i, j) += El::monomial(m);
        }
        return g;
    };
    for (int i = 0; i < 40; ++i) {
        GOp2 a = randGOp(), b = randGOp(), c = randGOp();
        CHECK((a * b) * c == a * (b * c));
    }
}
