#include "qgl21/jimbo.hpp"

#include <stdexcept>

namespace qgl21 {

namespace loopgen {

El e0() { return El::monomial(Mon{.f13 = 1, .k = {1, 0, -1}}, QQ(-1)); }
El e1() { return El::gen(Gen::E12); }
El e2() { return El::gen(Gen::E23); }
El f0() { return El::monomial(Mon{.k = {-1, 0, 1}, .e13 = 1}); }
El f1() { return El::gen(Gen::F12); }
El f2() { return El::gen(Gen::F23); }

std::array<int, 3> h(int i) {
    switch (i) {
        case 0: return {-1, 0, -1};
        case 1: return {1, -1, 0};
        case 2: return {0, 1, 1};
    }
    throw std::logic_error("bad Chevalley index");
}

int genParity(int i) { return i == 1 ? 0 : 1; }

int cartanA(int i, int j) {
    static const int a[3][3] = {{0, -1, 1}, {-1, 2, -1}, {1, -1, 0}};
    return a[i][j];
}

}  // namespace loopgen

PhiVectors::PhiVectors(int maxN)
    : e({QQ(-1) * QQ::qpow(1) * Mat3::unit(3, 1), Mat3::unit(1, 2), Mat3::unit(2, 3)}, false,
        maxN),
      f({QQ::qpow(-1) * Mat3::unit(1, 3), Mat3::unit(2, 1), Mat3::unit(3, 2)}, true, maxN) {}

Mat3 phiFClosedForm(const LRoot& r) {
    const long n = r.n;
    const QQ sgn = (n % 2 == 0) ? QQ(1) : QQ(-1);
    switch (r.kind) {
        case LRoot::RealPlus:
            switch (r.ij) {
                case 0: return sgn * QQ::qpow(-2 * n) * Mat3::unit(2, 1);
                case 1: return QQ::qpow(-2 * n) * Mat3::unit(3, 1);
                case 2: return sgn * QQ::qpow(-3 * n) * Mat3::unit(3, 2);
            }
            break;
        case LRoot::RealMinus:
            switch (r.ij) {
                case 0: return sgn * QQ::qpow(-2 * n - 1) * Mat3::unit(1, 2);
                case 1: return QQ::qpow(-2 * n - 1) * Mat3::unit(1, 3);
                case 2: return -sgn * QQ::qpow(-3 * n - 2) * Mat3::unit(2, 3);
            }
            break;
        case LRoot::Imag: {
            QQ c = -sgn * qint(n) * QQ(1, n);
            if (r.ij == 0)
                return c * QQ::qpow(-n) *
                       (Mat3::unit(1, 1) - QQ::qpow(-2 * n) * Mat3::unit(2, 2));
            return c * QQ::qpow(-2 * n) * (Mat3::unit(2, 2) + Mat3::unit(3, 3));
        }
    }
    throw std::logic_error("bad loop root");
}

El phiN(const RootVectors<El>& eSide, int n) {
    return El::cartan({2 * n, 0, 0}) -
           eSide.imag(1, n) * (kappa() * QQ(n) * QQ::qpow(-n));
}

namespace {

El cartanPairOverKappa(const std::array<int, 3>& hv) {
    QQ ki = kappa().inverse();
    return El::cartan(hv) * ki - El::cartan({-hv[0], -hv[1], -hv[2]}) * ki;
}

bool fail(std::string* witness, const std::string& name) {
    if (witness) *witness = name;
    return false;
}

}  // namespace

bool checkLoopRelations(std::string* witness) {
    using namespace loopgen;
    const std::array<El, 3> e{e0(), e1(), e2()};
    const std::array<El, 3> f{f0(), f1(), f2()};

    // the three Cartan vectors sum to zero
    {
        std::array<int, 3> s{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int d = 0; d < 3; ++d) s[d] += h(i)[d];
        if (s != std::array<int, 3>{0, 0, 0}) return fail(witness, "cartan-sum");
    }

    // exponentiated Cartan relations
    for (int i = 0; i < 3; ++i) {
        auto hv = h(i);
        El qh = El::cartan(hv);
        El qhInv = El::cartan({-hv[0], -hv[1], -hv[2]});
        for (int j = 0; j < 3; ++j) {
            if (qh * e[j] * qhInv != e[j] * QQ::qpow(cartanA(i, j)))
                return fail(witness, "cartan-e-" + std::to_string(i) + std::to_string(j));
            if (qh * f[j] * qhInv != f[j] * QQ::qpow(-cartanA(i, j)))
                return fail(witness, "cartan-f-" + std::to_string(i) + std::to_string(j));
        }
    }

    // odd generators square to zero
    for (int i : {0, 2}) {
        if (!(e[i] * e[i]).isZero()) return fail(witness, "e" + std::to_string(i) + "-square");
        if (!(f[i] * f[i]).isZero()) return fail(witness, "f" + std::to_string(i) + "-square");
    }

    // pairing of raising with lowering generators
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            El br = superBracket(e[i], genParity(i), f[j], genParity(j));
            El expect = i == j ? cartanPairOverKappa(h(i)) : El::zero();
            if (br != expect)
                return fail(witness, "pair-" + std::to_string(i) + std::to_string(j));
        }

    // Serre relations of degree three
    auto wE = [](int i) -> AWeight {
        switch (i) {
            case 0: return {1, 0, 0};
            case 1: return {0, 1, 0};
            default: return {0, 0, 1};
        }
    };
    auto neg = [](AWeight w) {
        for (auto& x : w) x = -x;
        return w;
    };
    auto add = [](const AWeight& a, const AWeight& b) {
        return AWeight{a[0] + b[0], a[1] + b[1], a[2] + b[2]};
    };
    for (int j : {0, 2}) {
        El inner = coneBracket(e[1], wE(1), 0, e[j], wE(j), 1);
        El outer = coneBracket(e[1], wE(1), 0, inner, add(wE(1), wE(j)), 1);
        if (!outer.isZero()) return fail(witness, "serre-e-" + std::to_string(j));
        El innerF = coneBracket(f[1], neg(wE(1)), 0, f[j], neg(wE(j)), 1);
        El outerF = coneBracket(f[1], neg(wE(1)), 0, innerF, neg(add(wE(1), wE(j))), 1);
        if (!outerF.isZero()) return fail(witness, "serre-f-" + std::to_string(j));
    }

    // degree-five Serre relations tying the two odd generators
    {
        auto nest = [&](const std::array<El, 3>& g, bool lowering, int a, int b, int c, int d,
                        int ee) {
            auto w = [&](int i) { return lowering ? neg(wE(i)) : wE(i); };
            auto p = [](int i) { return genParity(i); };
            El x1 = coneBracket(g[d], w(d), p(d), g[ee], w(ee), p(ee));
            AWeight w1 = add(w(d), w(ee));
            int p1 = (p(d) + p(ee)) & 1;
            El x2 = coneBracket(g[c], w(c), p(c), x1, w1, p1);
            AWeight w2 = add(w(c), w1);
            int p2 = (p(c) + p1) & 1;
            El x3 = coneBracket(g[b], w(b), p(b), x2, w2, p2);
            AWeight w3 = add(w(b), w2);
            int p3 = (p(b) + p2) & 1;
            return coneBracket(g[a], w(a), p(a), x3, w3, p3);
        };
        if (nest(e, false, 0, 2, 0, 2, 1) != nest(e, false, 2, 0, 2, 0, 1))
            return fail(witness, "serre5-e");
        if (nest(f, true, 0, 2, 0, 2, 1) != nest(f, true, 2, 0, 2, 0, 1))
            return fail(witness, "serre5-f");
    }

    return true;
}

}  // namespace qgl21
