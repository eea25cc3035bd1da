#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qgl21/qq.hpp"
#include "qgl21/series.hpp"

#include <random>

using namespace qgl21;

static Poly P(std::initializer_list<long> cs) {
    std::vector<Int> v;
    for (long c : cs) v.push_back(Int(c));
    return Poly(std::move(v));
}

TEST_CASE("polynomial arithmetic basics") {
    Poly a = P({1, 2});        // 1 + 2q
    Poly b = P({-1, 0, 1});    // q^2 - 1
    CHECK(a * b == P({-1, -2, 1, 2}));
    CHECK((a + b) == P({0, 2, 1}));
    CHECK((b - b).isZero());
    CHECK(Poly::monomial(3).degree() == 3);
    CHECK(P({0, 0, 0}).isZero());
    CHECK(a.str() == "2*q + 1");
    CHECK(b.str() == "q^2 - 1");
}

TEST_CASE("exact division and gcd") {
    Poly b = P({-1, 0, 1});
    Poly c = P({1, 1});
    CHECK(Poly::divExact(b, c) == P({-1, 1}));
    Poly q;
    CHECK_FALSE(Poly::tryDivide(P({1, 1, 1}), c, q));
    CHECK(Poly::gcd(b, c) == c);
    CHECK(Poly::gcd(P({2, 2}), P({4})) == P({2}));
    CHECK(Poly::gcd(P({0}), P({-3, 0, -3})) == P({3, 0, 3}));
    // gcd of coprime polynomials is a positive constant
    CHECK(Poly::gcd(P({1, 1}), P({-1, 1})).degree() == 0);
}

TEST_CASE("canonical rational functions") {
    QQ r(P({-1, 0, 1}), P({1, 1}));  // (q^2-1)/(q+1) = q-1
    CHECK(r == QQ(P({-1, 1})));
    QQ s(P({2, 2}), P({-4}));
    CHECK(s.num() == P({-1, -1}));
    CHECK(s.den() == P({2}));
    CHECK((r - r).isZero());
    CHECK(QQ(3) + QQ(1, 2) == QQ(7, 2));
    CHECK(QQ(1, 3) * QQ(3) == QQ::one());
    CHECK(QQ::qpow(-2) * QQ::qpow(2) == QQ::one());
    CHECK(QQ::qpow(-1).str() == "1/q");
}

TEST_CASE("bar involution") {
    CHECK(kappa().bar() == -kappa());
    CHECK(QQ::qpow(3).bar() == QQ::qpow(-3));
    QQ r(P({1, 2, 3}), P({-1, 0, 2}));
    CHECK(r.bar().bar() == r);
    CHECK(qint(5).bar() == qint(5));
}

TEST_CASE("q-integers and q-numbers") {
    QQ k = kappa();
    for (long n = 0; n <= 6; ++n) {
        CHECK(qint(n) * k == QQ::qpow(n) - QQ::qpow(-n));
    }
    CHECK(qint(1) == QQ::one());
    CHECK(qint(2) == QQ::qpow(1) + QQ::qpow(-1));
    CHECK(qint(-3) == -qint(3));
    QQ q = QQ::qpow(1);
    CHECK(qnumber(q, 2) == QQ(P({1, 1})));
    // (q^2-1)/(q-1) = q+1
    CHECK(QQ(P({-1, 0, 1}), P({-1, 1})) == qnumber(q, 2));
    CHECK(qnumberFactorial(q, 3) == QQ(P({1, 2, 2, 1})));
    CHECK(qnumber(QQ(-1), 2).isZero());
    CHECK(qnumber(QQ(-1), 3) == QQ::one());
    QQ q2 = QQ::qpow(2);
    CHECK(qnumber(q2, 3) == QQ::one() + q2 + q2 * q2);
}

TEST_CASE("rational function field laws on random samples") {
    std::mt19937 rng(12345);
    auto randPoly = [&]() {
        std::uniform_int_distribution<int> deg(0, 3), coef(-4, 4);
        std::vector<Int> v(static_cast<size_t>(deg(rng)) + 1);
        for (auto& c : v) c = Int(coef(rng));
        return Poly(std::move(v));
    };
    auto randQQ = [&]() {
        Poly d;
        do { d = randPoly(); } while (d.isZero());
        return QQ(randPoly(), d);
    };
    for (int i = 0; i < 200; ++i) {
        QQ a = randQQ(), b = randQQ(), c = randQQ();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a + (b + c) == (a + b) + c);
        CHECK(a * (b * c) == (a * b) * c);
        CHECK((a - b) + b == a);
        if (!b.isZero()) CHECK((a / b) * b == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
        CHECK((a + b).bar() == a.bar() + b.bar());
    }
}

TEST_CASE("series ring operations") {
    // geometric series: inverse of 1 - q^2 x
    Series<QQ> g(4);
    g.setCoeff(0, QQ::one());
    g.setCoeff(1, -QQ::qpow(2));
    Series<QQ> inv = g.inverse();
    for (int n = 0; n <= 4; ++n) CHECK(inv.coeff(n) == QQ::qpow(2 * n));
    CHECK(g * inv == Series<QQ>::one(4));

    Series<QQ> x(5);
    x.setCoeff(1, QQ::one());
    Series<QQ> e = x.exp();
    CHECK(e.coeff(0) == QQ::one());
    CHECK(e.coeff(3) == QQ(1, 6));
    CHECK(e.coeff(5) == QQ(1, 120));
    CHECK(e.log() == x);
    CHECK(e * (-x).exp() == Series<QQ>::one(5));
}

TEST_CASE("series truncation bookkeeping") {
    Series<QQ> a(3), b(5);
    a.setCoeff(1, QQ(1));
    b.setCoeff(1, QQ(1));
    b.setCoeff(5, QQ(7));
    CHECK((a + b).order() == 3);
    CHECK(a == b);  // agree on the shared range
    CHECK(a.shifted(2).order() == 5);
    CHECK(a.shifted(2).coeff(3) == QQ(1));
    Series<QQ> s = Series<QQ>::constant(QQ(1), 4);
    s.setCoeff(2, QQ(5));
    CHECK(s.scaledArgument(QQ::qpow(1)).coeff(2) == QQ(5) * QQ::qpow(2));
}

TEST_CASE("series exp log roundtrip with rational coefficients") {
    Series<QQ> s(6);
    s.setCoeff(0, QQ::one());
    s.setCoeff(1, kappa());
    s.setCoeff(2, QQ(3, 2));
    s.setCoeff(4, -QQ::qpow(-2));
    CHECK(s.log().exp() == s);
    CHECK(s.inverse() * s == Series<QQ>::one(6));
}
