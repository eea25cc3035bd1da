#pragma once

#include "qgl21/pbw.hpp"
#include "qgl21/reps.hpp"
#include "qgl21/rootdata.hpp"
#include "qgl21/series.hpp"

#include <array>
#include <string>
#include <vector>

namespace qgl21 {

// Images of the affine Chevalley generators inside the finite algebra.
namespace loopgen {

El e0();
El e1();
El e2();
El f0();
El f1();
El f2();
// h_i as integer Cartan vectors
std::array<int, 3> h(int i);
int genParity(int i);
// affine Cartan matrix rows a_{ij}, i, j in {0,1,2}
int cartanA(int i, int j);

}  // namespace loopgen

// Bracket with the cone-directed q-power, generic over the coefficient
// algebra.  Matches the element-level superCommutatorAffine.
template <class Alg>
Alg coneBracket(const Alg& a, const AWeight& wa, int pa,
                const Alg& b, const AWeight& wb, int pb) {
    QQ factor = (pa && pb) ? QQ(-1) : QQ(1);
    if (inQPlusAffine(wa) && inQPlusAffine(wb)) factor *= QQ::qpow(-pairingAffine(wa, wb));
    else if (inQMinusAffine(wa) && inQMinusAffine(wb)) factor *= QQ::qpow(pairingAffine(wa, wb));
    return a * b - (b * a) * factor;
}

// Root vectors for one Borel half of the loop superalgebra, generated
// from images of the affine Chevalley generators by the fixed bracket
// recursions.  For the lowering half the bracket weights are negated.
template <class Alg>
class RootVectors {
public:
    RootVectors(std::array<Alg, 3> chev, bool lowering, int maxN);

    int maxN() const { return maxN_; }
    // root vector at alpha_{fam} + n delta, fam in {0,1,2} naming the
    // 12, 13, 23 families, 0 <= n <= maxN
    const Alg& real(int fam, int n) const { return real_[static_cast<size_t>(fam)].at(static_cast<size_t>(n)); }
    // root vector at (delta - alpha_{fam}) + n delta
    const Alg& realMinus(int fam, int n) const { return realMinus_[static_cast<size_t>(fam)].at(static_cast<size_t>(n)); }
    // primed imaginary root vector at n delta, tag in {0,1} naming
    // alpha_1 / alpha_2, 1 <= n <= maxN
    const Alg& primedImag(int tag, int n) const { return primed_[static_cast<size_t>(tag)].at(static_cast<size_t>(n - 1)); }
    // unprimed imaginary root vector (logarithm transform)
    const Alg& imag(int tag, int n) const { return imag_[static_cast<size_t>(tag)].at(static_cast<size_t>(n - 1)); }

private:
    int maxN_;
    bool lowering_;
    std::array<std::vector<Alg>, 3> real_, realMinus_;
    std::array<std::vector<Alg>, 2> primed_, imag_;
};

template <class Alg>
RootVectors<Alg>::RootVectors(std::array<Alg, 3> chev, bool lowering, int maxN)
    : maxN_(maxN), lowering_(lowering) {
    auto br = [this](const Alg& a, const LRoot& ra, const Alg& b, const LRoot& rb) {
        AWeight wa = lrootWeight(ra), wb = lrootWeight(rb);
        if (lowering_) {
            for (auto& x : wa) x = -x;
            for (auto& x : wb) x = -x;
        }
        return coneBracket(a, wa, lrootParity(ra), b, wb, lrootParity(rb));
    };
    const LRoot r12{LRoot::RealPlus, 0, 0}, r23{LRoot::RealPlus, 2, 0};
    const LRoot m12{LRoot::RealMinus, 0, 0}, m13{LRoot::RealMinus, 1, 0}, m23{LRoot::RealMinus, 2, 0};

    real_[0].push_back(chev[1]);
    real_[2].push_back(chev[2]);
    real_[1].push_back(lowering_ ? br(real(2, 0), r23, real(0, 0), r12)
                                 : br(real(0, 0), r12, real(2, 0), r23));
    realMinus_[1].push_back(chev[0]);
    if (!lowering_) {
        realMinus_[0].push_back(br(real(2, 0), r23, realMinus(1, 0), m13));
        realMinus_[2].push_back(br(real(0, 0), r12, realMinus(1, 0), m13));
    } else {
        realMinus_[0].push_back(br(realMinus(1, 0), m13, real(2, 0), r23));
        realMinus_[2].push_back(br(realMinus(1, 0), m13, real(0, 0), r12));
    }

    const QQ half2 = qint(2).inverse();
    for (int n = 1; n <= maxN; ++n) {
        const LRoot p0{LRoot::RealPlus, 0, n - 1}, p1{LRoot::RealPlus, 1, n - 1},
            p2{LRoot::RealPlus, 2, n - 1};
        const LRoot q0{LRoot::RealMinus, 0, n - 1}, q1{LRoot::RealMinus, 1, n - 1},
            q2{LRoot::RealMinus, 2, n - 1};
        const LRoot i1{LRoot::Imag, 0, 1}, i2{LRoot::Imag, 1, 1};
        if (!lowering_) {
            primed_[0].push_back(br(real(0, n - 1), p0, realMinus(0, 0), m12));
            primed_[1].push_back(-br(real(2, n - 1), p2, realMinus(2, 0), m23));
        } else {
            primed_[0].push_back(br(realMinus(0, 0), m12, real(0, n - 1), p0));
            primed_[1].push_back(-br(realMinus(2, 0), m23, real(2, n - 1), p2));
        }
        const Alg& d1 = primedImag(0, 1);
        const Alg& d2 = primedImag(1, 1);
        if (!lowering_) {
            real_[0].push_back(br(real(0, n - 1), p0, d1, i1) * half2);
            real_[1].push_back(br(real(1, n - 1), p1, d2, i2));
            real_[2].push_back(-br(real(2, n - 1), p2, d1, i1));
            realMinus_[0].push_back(br(d1, i1, realMinus(0, n - 1), q0) * half2);
            realMinus_[1].push_back(br(d2, i2, realMinus(1, n - 1), q1));
            realMinus_[2].push_back(-br(d1, i1, realMinus(2, n - 1), q2));
        } else {
            real_[0].push_back(br(d1, i1, real(0, n - 1), p0) * half2);
            real_[1].push_back(br(d2, i2, real(1, n - 1), p1));
            real_[2].push_back(-br(d1, i1, real(2, n - 1), p2));
            realMinus_[0].push_back(br(realMinus(0, n - 1), q0, d1, i1) * half2);
            realMinus_[1].push_back(br(realMinus(1, n - 1), q1, d2, i2));
            realMinus_[2].push_back(-br(realMinus(2, n - 1), q2, d1, i1));
        }
    }

    // unprimed imaginary vectors: on the raising side
    //   -kappa E(x) = log(1 - kappa P(x)),
    // on the lowering side
    //    kappa F(x) = log(1 + kappa P(x)).
    for (int tag = 0; tag < 2; ++tag) {
        Series<Alg> p(maxN);
        for (int n = 1; n <= maxN; ++n) p.setCoeff(n, primedImag(tag, n));
        QQ sgn = lowering_ ? kappa() : -kappa();
        Series<Alg> lg = (Series<Alg>::one(maxN) + p.scaled(sgn)).log().scaled(sgn.inverse());
        for (int n = 1; n <= maxN; ++n) imag_[static_cast<size_t>(tag)].push_back(lg.coeff(n));
    }
}

// Both halves of the loop root vectors realized inside the finite
// algebra.
struct EpsVectors {
    RootVectors<El> e, f;
    explicit EpsVectors(int maxN)
        : e({loopgen::e0(), loopgen::e1(), loopgen::e2()}, false, maxN),
          f({loopgen::f0(), loopgen::f1(), loopgen::f2()}, true, maxN) {}
};

// Both halves realized in the vector representation.
struct PhiVectors {
    RootVectors<Mat3> e, f;
    explicit PhiVectors(int maxN);
};

// Closed forms for the matrix images of the lowering root vectors.
Mat3 phiFClosedForm(const LRoot& r);

// The central generating family: phi(n) built from the Cartan monomial
// q^{2n K_1} and the unprimed imaginary vector with the second tag.
El phiN(const RootVectors<El>& eSide, int n);

// Runs the full list of loop-algebra defining relations on the
// Chevalley images; returns true when all hold, otherwise stores the
// name of the first failing identity in witness.
bool checkLoopRelations(std::string* witness = nullptr);

}  // namespace qgl21
