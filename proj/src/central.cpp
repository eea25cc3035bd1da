#include "qgl21/central.hpp"

#include <string>
#include <utility>

namespace qgl21 {

namespace {

GOp2 cartanDressing() {
    GOp2 d = GOp2::zero();
    d.at(1, 1) = El::cartan({-1, 0, 0});
    d.at(2, 2) = El::cartan({0, -1, 0});
    d.at(3, 3) = El::cartan({0, 0, 1});
    return d;
}

std::string shortStr(const El& x) {
    std::string s = x.str();
    if (s.size() > 160) s = s.substr(0, 157) + "...";
    return s;
}

CheckResult equalityCheck(std::string name, const El& lhs, const El& rhs) {
    CheckResult r;
    r.name = std::move(name);
    r.pass = (lhs == rhs);
    if (!r.pass) r.witness = "difference " + shortStr(lhs - rhs);
    return r;
}

}  // namespace

GOp2 universalM() {
    const QQ k = kappa();
    GOp2 a = GOp2::one();
    a.at(2, 1) = El::gen(Gen::E12) * (-k);
    a.at(3, 1) = El::gen(Gen::E13) * k;
    a.at(3, 2) = El::gen(Gen::E23) * k;
    return a * cartanDressing();
}

GOp2 universalMSigma() {
    const QQ k = kappa();
    const El f13bar =
        El::gen(Gen::F13) - El::gen(Gen::F12) * El::gen(Gen::F23) * k;
    GOp2 a = GOp2::one();
    a.at(1, 2) = El::gen(Gen::F12) * (-k);
    a.at(1, 3) = f13bar * (-k);
    a.at(2, 3) = El::gen(Gen::F23) * (-k);
    return a * cartanDressing();
}

std::vector<El> traceCs(int maxN) {
    const GOp2 b = universalMSigma() * universalM();
    const QQ q2 = QQ::qpow(2);
    std::vector<El> cs;
    GOp2 p = b;
    for (int n = 1; n <= maxN; ++n) {
        cs.push_back(p.at(1, 1) + p.at(2, 2) * q2 - p.at(3, 3) * q2);
        if (n < maxN) p = p * b;
    }
    return cs;
}

std::vector<CheckResult> checkCentralTraces(const EpsVectors& eps) {
    std::vector<CheckResult> out;
    const QQ k = kappa();
    const QQ q = QQ::qpow(1);

    const std::vector<El> cs = traceCs(4);
    // ct[n] is the bar-flipped trace, 1-based.
    std::vector<El> ct(5, El::zero());
    for (int n = 1; n <= 4; ++n) ct[n] = cs[n - 1].omega();

    for (int n = 1; n <= 2; ++n) {
        CheckResult r;
        r.name = "trace-" + std::to_string(n) + "-central";
        r.pass = cs[n - 1].isCentral();
        if (!r.pass) r.witness = "not central: " + shortStr(cs[n - 1]);
        out.push_back(r);
    }

    out.push_back(equalityCheck("phi-1-from-traces", phiN(eps.e, 1), ct[1]));

    const El rhs2 = (ct[2] * (q * QQ(2)) - ct[1] * ct[1] * k) *
                    (QQ::one() / qint(2));
    out.push_back(equalityCheck("phi-2-from-traces", phiN(eps.e, 2), rhs2));

    const El rhs3 = (ct[3] * (QQ::qpow(2) * QQ(3)) -
                     ct[2] * ct[1] * (k * q * QQ(3)) +
                     ct[1] * ct[1] * ct[1] * (k * k)) *
                    (QQ::one() / qint(3));
    out.push_back(equalityCheck("phi-3-from-traces", phiN(eps.e, 3), rhs3));

    const El ct1sq = ct[1] * ct[1];
    const El rhs4 = (ct[4] * (QQ::qpow(3) * QQ(4)) -
                     ct[3] * ct[1] * (k * QQ::qpow(2) * QQ(4)) -
                     ct[2] * ct[2] * (k * QQ::qpow(2) * QQ(2)) +
                     ct[2] * ct1sq * (k * k * q * QQ(4)) -
                     ct1sq * ct1sq * (k * k * k)) *
                    (QQ::one() / qint(4));
    out.push_back(equalityCheck("phi-4-from-traces", phiN(eps.e, 4), rhs4));

    return out;
}

std::vector<CheckResult> checkSquaredAntipode() {
    const El g = El::cartan({0, 2, 2});
    const El ginv = El::cartan({0, -2, -2});

    const std::vector<std::pair<std::string, El>> items = {
        {"e12", El::gen(Gen::E12)},
        {"e13", El::gen(Gen::E13)},
        {"e23", El::gen(Gen::E23)},
        {"f12", El::gen(Gen::F12)},
        {"f13", El::gen(Gen::F13)},
        {"f23", El::gen(Gen::F23)},
        {"cartan", El::cartan({1, -1, 2})},
        {"e12-f23", El::gen(Gen::E12) * El::gen(Gen::F23)},
        {"f13-e23", El::gen(Gen::F13) * El::gen(Gen::E23)},
        {"mixed-sum",
         El::gen(Gen::E12) * El::gen(Gen::F12) + El::cartan({0, 1, 0}) +
             El::gen(Gen::E13) * El::gen(Gen::F13) * kappa()},
    };

    std::vector<CheckResult> out;
    for (const auto& [label, x] : items) {
        out.push_back(equalityCheck("antipode-squared-" + label,
                                    x.antipode().antipode(), g * x * ginv));
    }
    return out;
}

}  // namespace qgl21
