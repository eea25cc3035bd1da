#include "qgl21/checks.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <random>
#include <utility>

namespace qgl21 {

namespace {

QQ qp(long k) { return QQ::qpow(k); }

std::string shortStr(const El& x) {
    std::string s = x.str();
    if (s.size() > 160) s = s.substr(0, 157) + "...";
    return s;
}

// q^{h.K}/kappa - q^{-h.K}/kappa
El cartanPair(const std::array<int, 3>& h) {
    QQ ki = kappa().inverse();
    return El::cartan(h) * ki - El::cartan({-h[0], -h[1], -h[2]}) * ki;
}

// Folds sub-checks into a single result; the first failure provides the
// witness.
class Collector {
public:
    explicit Collector(std::string name) : name_(std::move(name)) {}

    void expect(const std::string& what, bool ok, const std::string& detail = "") {
        if (!ok && pass_) {
            witness_ = what;
            if (!detail.empty()) witness_ += ": " + detail;
        }
        pass_ = pass_ && ok;
    }

    void expectZero(const std::string& what, const El& residual) {
        if (residual.isZero()) return expect(what, true);
        expect(what, false, "residual " + shortStr(residual));
    }

    void expectZeroMat(const std::string& what, const Mat3& residual) {
        if (residual.isZero()) return expect(what, true);
        expect(what, false, "matrix residual " + residual.str());
    }

    void absorb(const CheckResult& r) { expect(r.name, r.pass, r.witness); }

    void absorb(const std::vector<CheckResult>& rs) {
        for (const auto& r : rs) absorb(r);
    }

    CheckResult result() const { return {name_, pass_, witness_}; }

private:
    std::string name_;
    bool pass_ = true;
    std::string witness_;
};

CheckResult runDefiningRelations(const CheckContext&) {
    Collector c("defining-relations");
    const El E1 = El::gen(Gen::E12), E2 = El::gen(Gen::E23);
    const El F1 = El::gen(Gen::F12), F2 = El::gen(Gen::F23);
    const Mat3 mE1 = pi(E1), mE2 = pi(E2), mF1 = pi(F1), mF2 = pi(F2);

    // the Cartan exponentials commute
    const std::array<std::array<int, 3>, 3> dirs{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    for (const auto& u : dirs)
        for (const auto& v : dirs) {
            El a = El::cartan(u), b = El::cartan(v);
            c.expectZero("cartan-commute", a * b - b * a);
            c.expectZeroMat("cartan-commute-pi", pi(a) * pi(b) - pi(b) * pi(a));
        }

    // conjugating a simple letter by a Cartan exponential scales it by
    // the pairing of the direction with the letter's weight
    auto conj = [&](const El& x, const Mat3& mx, int i, int j, bool lowering) {
        for (int d = 0; d < 3; ++d) {
            std::array<int, 3> lam{0, 0, 0}, mlam{0, 0, 0};
            lam[d] = 1;
            mlam[d] = -1;
            int w = (d + 1 == i ? 1 : 0) - (d + 1 == j ? 1 : 0);
            if (lowering) w = -w;
            c.expectZero("cartan-conjugation",
                         El::cartan(lam) * x * El::cartan(mlam) - x * qp(w));
            c.expectZeroMat("cartan-conjugation-pi",
                            pi(El::cartan(lam)) * mx * pi(El::cartan(mlam)) - mx * qp(w));
        }
    };
    conj(E1, mE1, 1, 2, false);
    conj(E2, mE2, 2, 3, false);
    conj(F1, mF1, 1, 2, true);
    conj(F2, mF2, 2, 3, true);

    // raising against lowering
    c.expectZero("cross-e1-f1", superBracket(E1, 0, F1, 0) - cartanPair({1, -1, 0}));
    c.expectZero("cross-e2-f2", superBracket(E2, 1, F2, 1) - cartanPair({0, 1, 1}));
    c.expectZero("cross-e1-f2", superBracket(E1, 0, F2, 1));
    c.expectZero("cross-e2-f1", superBracket(E2, 1, F1, 0));
    c.expectZeroMat("cross-e1-f1-pi",
                    mE1 * mF1 - mF1 * mE1 - pi(cartanPair({1, -1, 0})));
    c.expectZeroMat("cross-e2-f2-pi",
                    mE2 * mF2 + mF2 * mE2 - pi(cartanPair({0, 1, 1})));
    c.expectZeroMat("cross-e1-f2-pi", mE1 * mF2 - mF2 * mE1);
    c.expectZeroMat("cross-e2-f1-pi", mE2 * mF1 - mF1 * mE2);

    // the odd letters square to zero
    c.expectZero("square-e2", E2 * E2);
    c.expectZero("square-f2", F2 * F2);
    c.expectZeroMat("square-e2-pi", mE2 * mE2);
    c.expectZeroMat("square-f2-pi", mF2 * mF2);

    // Serre relations with the weight-directed bracket
    c.expectZero("serre-e", superCommutator(E1, superCommutator(E1, E2)));
    c.expectZero("serre-f", superCommutator(F1, superCommutator(F1, F2)));
    Mat3 einner = mE1 * mE2 - (mE2 * mE1) * qp(1);
    c.expectZeroMat("serre-e-pi", mE1 * einner - (einner * mE1) * qp(-1));
    Mat3 finner = mF1 * mF2 - (mF2 * mF1) * qp(-1);
    c.expectZeroMat("serre-f-pi", mF1 * finner - (finner * mF1) * qp(1));

    return c.result();
}

CheckResult runJimboHomomorphism(const CheckContext&) {
    CheckResult r;
    r.name = "jimbo-homomorphism";
    std::string witness;
    r.pass = checkLoopRelations(&witness);
    if (!r.pass) r.witness = witness;
    return r;
}

CheckResult runPhiCentral(const CheckContext& ctx) {
    Collector c("phi-central");
    const EpsVectors& eps = epsAt(std::max(4, ctx.truncation));
    for (int n = 1; n <= 4; ++n)
        c.expect("phi-" + std::to_string(n) + "-central", phiN(eps.e, n).isCentral());

    // the worked-out form of the first central element
    const QQ kap = kappa();
    El ebar13 = El::gen(Gen::E12) * El::gen(Gen::E23) -
                qp(-1) * (El::gen(Gen::E23) * El::gen(Gen::E12));
    El display =
        El::cartan({2, 0, 0}) + qp(-2) * El::cartan({0, 2, 0}) -
        qp(-2) * El::cartan({0, 0, -2}) +
        (kap * kap) *
            (qp(-1) * (El::gen(Gen::F12) * El::gen(Gen::E12) * El::cartan({1, 1, 0})) +
             qp(1) * (El::gen(Gen::F13) * ebar13 * El::cartan({1, 0, -1})) +
             qp(-1) * (El::gen(Gen::F23) * El::gen(Gen::E23) * El::cartan({0, 1, -1})));
    c.expectZero("phi-1-worked-form", phiN(eps.e, 1) - display);
    return c.result();
}

CheckResult runPhiEigenvalues(const CheckContext& ctx) {
    Collector c("phi-eigenvalues");
    const EpsVectors& eps = epsAt(std::max(4, ctx.truncation));
    const std::array<std::array<long, 3>, 4> lams{
        {{1, 0, 0}, {1, 1, 0}, {2, 1, 1}, {3, 0, 0}}};
    for (int n = 1; n <= 4; ++n) {
        const El phi = phiN(eps.e, n);
        for (const auto& lv : lams) {
            QQ got = phi.hwEigenvalue({QQ(lv[0]), QQ(lv[1]), QQ(lv[2])});
            QQ expect = qp(2 * n * lv[0]) + qp(2 * n * (lv[1] - 1)) -
                        qp(-2 * n * (lv[2] + 1));
            std::string what = "eigenvalue-" + std::to_string(n) + "-(" +
                               std::to_string(lv[0]) + "," + std::to_string(lv[1]) +
                               "," + std::to_string(lv[2]) + ")";
            c.expect(what, got == expect, "value " + got.str());
        }
    }
    return c.result();
}

CheckResult runGenSeriesRecurrences(const CheckContext& ctx) {
    Collector c("gen-series-recurrences");
    const int order = std::max(1, ctx.truncation);
    const EpsVectors& eps = epsAt(std::max(4, order));
    c.absorb(checkSeriesRecurrences(eps, order));
    c.absorb(checkQuadraticIdentities(eps, order));
    return c.result();
}

CheckResult runYbe(const CheckContext& ctx) {
    CheckResult r = checkYangBaxter(ctx.spectral);
    r.name = "ybe";
    return r;
}

CheckResult runExchange(const CheckContext& ctx) {
    CheckResult r = checkExchange(ctx.spectral);
    r.name = "exchange";
    return r;
}

CheckResult runFactorizationSuite(const CheckContext& ctx) {
    Collector c("factorization");
    const int order = std::max(1, ctx.truncation);
    const EpsVectors& eps = epsAt(std::max(4, order));
    c.absorb(checkFactorization(eps, ctx.spectral, order));
    return c.result();
}

CheckResult runFImageTable(const CheckContext&) {
    Collector c("f-image-table");
    const int depth = 4;
    PhiVectors phi(depth);
    for (int fam = 0; fam < 3; ++fam)
        for (int n = 0; n <= depth; ++n) {
            LRoot plus{LRoot::RealPlus, fam, n};
            LRoot minus{LRoot::RealMinus, fam, n};
            c.expect("f-image-" + lrootName(plus),
                     phi.f.real(fam, n) == phiFClosedForm(plus));
            c.expect("f-image-" + lrootName(minus),
                     phi.f.realMinus(fam, n) == phiFClosedForm(minus));
        }
    for (int tag = 0; tag < 2; ++tag)
        for (int n = 1; n <= depth; ++n) {
            LRoot im{LRoot::Imag, tag, n};
            c.expect("f-image-" + lrootName(im),
                     phi.f.imag(tag, n) == phiFClosedForm(im));
        }
    return c.result();
}

CheckResult runPhiCtilde(const CheckContext& ctx) {
    Collector c("phi-ctilde");
    c.absorb(checkCentralTraces(epsAt(std::max(4, ctx.truncation))));
    return c.result();
}

CheckResult runSSquareTwist(const CheckContext&) {
    Collector c("s-square-twist");
    c.absorb(checkSquaredAntipode());
    return c.result();
}

}  // namespace

const EpsVectors& epsAt(int maxN) {
    static std::map<int, std::unique_ptr<EpsVectors>> cache;
    auto& slot = cache[maxN];
    if (!slot) slot = std::make_unique<EpsVectors>(maxN);
    return *slot;
}

CheckResult runSoundness(int triples, unsigned seed) {
    Collector c("soundness");
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> ev(0, 2), odd(0, 1), kv(-2, 2), cv(-3, 3);

    auto randMon = [&]() {
        Mon m;
        m.f12 = ev(rng); m.f13 = odd(rng); m.f23 = odd(rng);
        m.k = {kv(rng), kv(rng), kv(rng)};
        m.e12 = ev(rng); m.e13 = odd(rng); m.e23 = odd(rng);
        return m;
    };
    auto randCoeff = [&]() {
        int n = cv(rng);
        if (n == 0) n = 1;
        return QQ(n) * qp(kv(rng));
    };

    // straightening is associative on random monomial triples
    bool assocOk = true;
    std::string assocWitness;
    for (int t = 0; t < triples && assocOk; ++t) {
        El a = El::monomial(randMon()), b = El::monomial(randMon());
        El d = El::monomial(randMon());
        if (!((a * b) * d == a * (b * d))) {
            assocOk = false;
            assocWitness = "triple " + std::to_string(t);
        }
    }
    c.expect("straightening-associativity", assocOk, assocWitness);

    // the vector representation respects every straightening rule:
    // all letter pairs and letters against Cartan exponentials
    const std::array<Gen, 6> gens{Gen::F12, Gen::F13, Gen::F23,
                                  Gen::E12, Gen::E13, Gen::E23};
    bool ruleOk = true;
    for (Gen ga : gens)
        for (Gen gb : gens) {
            El a = El::gen(ga), b = El::gen(gb);
            if (!(pi(a * b) == pi(a) * pi(b))) ruleOk = false;
        }
    for (Gen ga : gens)
        for (int d = 0; d < 3 && ruleOk; ++d)
            for (int sgn : {1, -1}) {
                std::array<int, 3> lam{0, 0, 0};
                lam[d] = sgn;
                El a = El::gen(ga), b = El::cartan(lam);
                if (!(pi(a * b) == pi(a) * pi(b))) ruleOk = false;
                if (!(pi(b * a) == pi(b) * pi(a))) ruleOk = false;
            }
    c.expect("pi-straightening-rules", ruleOk);

    bool piOk = true;
    for (int t = 0; t < 300 && piOk; ++t) {
        El a = El::monomial(randMon(), randCoeff());
        El b = El::monomial(randMon(), randCoeff());
        piOk = pi(a * b) == pi(a) * pi(b);
    }
    c.expect("pi-homomorphism-random", piOk);

    // omega is an involutive anti-automorphism
    bool omegaOk = true;
    for (int t = 0; t < 200 && omegaOk; ++t) {
        El a = El::monomial(randMon(), randCoeff());
        El b = El::monomial(randMon(), randCoeff());
        omegaOk = (a * b).omega() == b.omega() * a.omega() &&
                  a.omega().omega() == a;
    }
    c.expect("omega-anti-automorphism", omegaOk);

    // the graded tensor sign rule keeps operator products associative
    // when every entry is parity-homogeneous
    auto randMonParity = [&](int target) {
        for (;;) {
            Mon m = randMon();
            if (m.parity() == target) return m;
        }
    };
    auto randOp = [&](int px) {
        GOp2 x = GOp2::zero();
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j) {
                int target = (px + (i == 3 ? 1 : 0) + (j == 3 ? 1 : 0)) & 1;
                x.at(i, j) = El::monomial(randMonParity(target), randCoeff());
            }
        return x;
    };
    bool signOk = true;
    for (int t = 0; t < 25 && signOk; ++t) {
        GOp2 x = randOp(odd(rng)), y = randOp(odd(rng)), z = randOp(odd(rng));
        signOk = (x * y) * z == x * (y * z);
    }
    c.expect("graded-sign-associativity", signOk);

    // supercyclicity of the trace functional
    bool muOk = true;
    for (int t = 0; t < 300 && muOk; ++t) {
        Mon ma = randMon(), mb = randMon();
        El a = El::monomial(ma, randCoeff()), b = El::monomial(mb, randCoeff());
        QQ lhs = mu(a * b);
        QQ rhs = mu(b * a);
        if (ma.parity() && mb.parity()) rhs = -rhs;
        muOk = lhs == rhs;
    }
    c.expect("supertrace-supercyclicity", muOk);

    return c.result();
}

CheckResult runNegativeControls(const CheckContext& ctx) {
    Collector c("negative-controls");

    RMat9 r01 = rbarMatrix(ctx.spectral, 0, 1);
    RMat9 r02 = rbarMatrix(ctx.spectral, 0, 2);
    RMat9 r12 = rbarMatrix(ctx.spectral, 1, 2);
    c.expect("intact-r-satisfies-ybe", ybeHolds(r01, r02, r12));
    RMat9 bad = r01;
    bad[idx9(1, 2)][idx9(2, 1)] += LaurentPoly3::monomial({1, 0, 0}, QQ(1));
    c.expect("corrupted-r-fails-ybe", !ybeHolds(bad, r02, r12));

    c.expect("zeroed-block-fails-exchange", !checkExchange(ctx.spectral, true).pass);
    c.expect("letter-not-central", !El::gen(Gen::E12).isCentral());

    return c.result();
}

const std::vector<NamedCheck>& allChecks() {
    static const std::vector<NamedCheck> reg = {
        {"defining-relations", "finite-defining-relations", runDefiningRelations},
        {"jimbo-homomorphism", "loop-chevalley-images", runJimboHomomorphism},
        {"phi-central", "imaginary-central-family", runPhiCentral},
        {"phi-eigenvalues", "highest-weight-eigenvalues", runPhiEigenvalues},
        {"gen-series-recurrences", "root-vector-generating-series",
         runGenSeriesRecurrences},
        {"ybe", "spectral-yang-baxter", runYbe},
        {"exchange", "rtt-exchange-relation", runExchange},
        {"factorization", "gauss-factorization", runFactorizationSuite},
        {"f-image-table", "vector-rep-image-table", runFImageTable},
        {"phi-ctilde", "supertrace-identities", runPhiCtilde},
        {"s-square-twist", "squared-antipode-twist", runSSquareTwist},
        {"soundness", "engine-soundness",
         [](const CheckContext&) { return runSoundness(1000, 20260819u); }},
    };
    return reg;
}

const NamedCheck* findCheck(const std::string& name) {
    for (const auto& nc : allChecks())
        if (nc.name == name) return &nc;
    return nullptr;
}

}  // namespace qgl21
