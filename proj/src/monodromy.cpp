#include "qgl21/monodromy.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qgl21 {

LaurentPoly3 LaurentPoly3::monomial(const std::array<int, 3>& e, const QQ& c) {
    LaurentPoly3 p;
    p.add(e, c);
    return p;
}

void LaurentPoly3::add(const std::array<int, 3>& e, const QQ& c) {
    if (c.isZero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
}

LaurentPoly3 LaurentPoly3::operator-() const {
    LaurentPoly3 p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

LaurentPoly3& LaurentPoly3::operator+=(const LaurentPoly3& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
}

LaurentPoly3& LaurentPoly3::operator-=(const LaurentPoly3& o) {
    for (const auto& [e, c] : o.terms_) add(e, -c);
    return *this;
}

LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b) {
    LaurentPoly3 p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            p.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return p;
}

LaurentPoly3 LaurentPoly3::scaled(const QQ& c) const {
    LaurentPoly3 p;
    if (c.isZero()) return p;
    for (const auto& [e, v] : terms_) p.terms_.emplace(e, v * c);
    return p;
}

std::string LaurentPoly3::str() const {
    if (terms_.empty()) return "0";
    static const char* var[3] = {"u", "v", "w"};
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << "(" << c.str() << ")";
        for (int k = 0; k < 3; ++k) {
            if (e[k] == 0) continue;
            out << "*" << var[k];
            if (e[k] != 1) out << "^" << e[k];
        }
    }
    return out.str();
}

namespace {

Series<El> zeroSeries(int order) { return Series<El>(order); }

PrefSeries<El> zeroEntry(int s, int order) { return PrefSeries<El>(0, zeroSeries(order), s); }

PrefSeries<El> constEntry(const El& v, int s, int order, int pref = 0) {
    return PrefSeries<El>(pref, Series<El>::constant(v, order), s);
}

// generating series of a real plus family, argument scaled
Series<El> realSeries(const RootVectors<El>& e, int fam, const QQ& arg, int order) {
    Series<El> s(order);
    for (int n = 0; n <= order; ++n) s.setCoeff(n, e.real(fam, n));
    return s.scaledArgument(arg);
}

Series<El> realMinusSeries(const RootVectors<El>& e, int fam, const QQ& arg, int order) {
    Series<El> s(order);
    for (int n = 0; n <= order; ++n) s.setCoeff(n, e.realMinus(fam, n));
    return s.scaledArgument(arg);
}

// unprimed imaginary generating series, no constant term
Series<El> imagSeries(const RootVectors<El>& e, int tag, const QQ& arg, int order) {
    Series<El> s(order);
    for (int n = 1; n <= order; ++n) s.setCoeff(n, e.imag(tag, n));
    return s.scaledArgument(arg);
}

Series<El> primedImagSeries(const RootVectors<El>& e, int tag, int order) {
    Series<El> s(order);
    for (int n = 1; n <= order; ++n) s.setCoeff(n, e.primedImag(tag, n));
    return s;
}

std::string shortStr(const El& x) {
    std::string s = x.str();
    if (s.size() > 160) s = s.substr(0, 157) + "...";
    return s;
}

std::string diffWitness(const std::string& name, const PrefSeries<El>& a, const PrefSeries<El>& b) {
    if (a.pref() != b.pref())
        return name + ": prefactor " + std::to_string(a.pref()) + " vs " + std::to_string(b.pref());
    int n = std::min(a.series().order(), b.series().order());
    for (int k = 0; k <= n; ++k)
        if (!(a.series().coeff(k) == b.series().coeff(k)))
            return name + ": z^" + std::to_string(k) + " differs by " +
                   shortStr(a.series().coeff(k) - b.series().coeff(k));
    return name + ": equal";
}

CheckResult compareEntry(const std::string& name, const PrefSeries<El>& lhs, const PrefSeries<El>& rhs) {
    CheckResult r{name, lhs == rhs, ""};
    if (!r.pass) r.witness = diffWitness(name, lhs, rhs);
    return r;
}

CheckResult compareSeries(const std::string& name, const Series<El>& lhs, const Series<El>& rhs) {
    CheckResult r{name, lhs == rhs, ""};
    if (!r.pass) {
        int n = std::min(lhs.order(), rhs.order());
        for (int k = 0; k <= n; ++k)
            if (!(lhs.coeff(k) == rhs.coeff(k))) {
                r.witness = name + ": coefficient " + std::to_string(k) + " differs by " +
                            shortStr(lhs.coeff(k) - rhs.coeff(k));
                break;
            }
    }
    return r;
}

}  // namespace

PrefMat3<El> solvedO(const Spectral& sp, int order) {
    if (order < 1) throw std::logic_error("block order must be at least 1");
    const int s = sp.s();
    const QQ k = kappa();
    PrefMat3<El> o;
    auto diag = [&](const std::array<int, 3>& kvec) {
        Series<El> ser(order);
        ser.setCoeff(0, El::one());
        ser.setCoeff(1, -El::cartan(kvec));
        return PrefSeries<El>(0, std::move(ser), s);
    };
    o.at(1, 1) = diag({2, 0, 0});
    o.at(2, 2) = diag({0, 2, 0});
    o.at(3, 3) = diag({0, 0, -2});
    o.at(1, 2) = constEntry(El::gen(Gen::F12) * El::cartan({1, 1, 0}) * (-k * QQ::qpow(-1)), s,
                            order, s - sp.sified(0));
    o.at(1, 3) = constEntry(El::gen(Gen::F13) * El::cartan({1, 0, -1}) * (-k * QQ::qpow(-1)), s,
                            order, s - sp.sified(1));
    o.at(2, 3) = constEntry(El::gen(Gen::F23) * El::cartan({0, 1, -1}) * (-k * QQ::qpow(-1)), s,
                            order, s - sp.sified(2));
    o.at(2, 1) = constEntry(El::gen(Gen::E12) * (-k), s, order, sp.sified(0));
    o.at(3, 1) = constEntry(El::gen(Gen::E13) * k, s, order, sp.sified(1));
    o.at(3, 2) = constEntry(El::gen(Gen::E23) * k, s, order, sp.sified(2));
    return o;
}

PrefMat3<El> cartanD(const Spectral& sp, int order) {
    const int s = sp.s();
    PrefMat3<El> d;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) d.at(i, j) = zeroEntry(s, order);
    d.at(1, 1) = constEntry(El::cartan({0, 1, 1}), s, order);
    d.at(2, 2) = constEntry(El::cartan({1, 0, 1}), s, order);
    d.at(3, 3) = constEntry(El::cartan({1, 1, 2}), s, order);
    return d;
}

PrefMat3<El> dressedN(const Spectral& sp, int order) {
    PrefMat3<El> o = solvedO(sp, order);
    PrefMat3<El> d = cartanD(sp, order);
    PrefMat3<El> n;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) n.at(i, j) = o.at(i, j) * d.at(j, j);
    return n;
}

PrefMat3<El> gaussU(const EpsVectors& eps, const Spectral& sp, int order) {
    const int s = sp.s();
    const QQ k = kappa();
    PrefMat3<El> u;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            u.at(i, j) = i == j ? PrefSeries<El>(0, Series<El>::one(order), s) : zeroEntry(s, order);
    u.at(2, 1) = PrefSeries<El>(sp.sified(0), realSeries(eps.e, 0, QQ::qpow(-2), order).scaled(-k), s);
    u.at(3, 1) = PrefSeries<El>(sp.sified(1), realSeries(eps.e, 1, -QQ::qpow(-2), order).scaled(k), s);
    u.at(3, 2) = PrefSeries<El>(sp.sified(2), realSeries(eps.e, 2, QQ::qpow(-3), order).scaled(k), s);
    return u;
}

PrefMat3<El> gaussW(const EpsVectors& eps, const Spectral& sp, int order) {
    const int s = sp.s();
    const QQ k = kappa();
    PrefMat3<El> w;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            w.at(i, j) = i == j ? PrefSeries<El>(0, Series<El>::one(order), s) : zeroEntry(s, order);
    w.at(1, 2) = PrefSeries<El>(s - sp.sified(0),
                                realMinusSeries(eps.e, 0, QQ::qpow(-2), order).scaled(k * QQ::qpow(-1)), s);
    w.at(1, 3) = PrefSeries<El>(s - sp.sified(1),
                                realMinusSeries(eps.e, 1, -QQ::qpow(-2), order).scaled(k * QQ::qpow(-1)), s);
    w.at(2, 3) = PrefSeries<El>(s - sp.sified(2),
                                realMinusSeries(eps.e, 2, QQ::qpow(-3), order).scaled(-k * QQ::qpow(-2)), s);
    return w;
}

PrefMat3<El> gaussV(const EpsVectors& eps, const Spectral& sp, int order) {
    const int s = sp.s();
    const QQ k = kappa();
    Series<El> a1 = imagSeries(eps.e, 0, QQ::qpow(-2), order).scaled(-k);
    Series<El> a2low = imagSeries(eps.e, 1, QQ::qpow(-1), order).scaled(-k);
    Series<El> a2high = imagSeries(eps.e, 1, QQ::qpow(-3), order).scaled(-k);
    PrefMat3<El> v;
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) v.at(i, j) = zeroEntry(s, order);
    v.at(1, 1) = PrefSeries<El>(0, a2low.exp(), s);
    v.at(2, 2) = PrefSeries<El>(0, (a1 + a2low).exp(), s);
    v.at(3, 3) = PrefSeries<El>(0, (a1 + a2low + a2high).exp(), s);
    return v;
}

PrefSeries<El> expPhi(const EpsVectors& eps, const Spectral& sp, int order) {
    Series<El> phi(order);
    for (int n = 1; n <= order; ++n) phi.setCoeff(n, phiN(eps.e, n) * QQ(1, n));
    return PrefSeries<El>(0, phi.exp(), sp.s());
}

std::vector<CheckResult> checkFactorization(const EpsVectors& eps, const Spectral& sp, int order) {
    PrefMat3<El> o = solvedO(sp, order);
    PrefMat3<El> u = gaussU(eps, sp, order);
    PrefMat3<El> v = gaussV(eps, sp, order);
    PrefMat3<El> w = gaussW(eps, sp, order);
    PrefSeries<El> ephi = expPhi(eps, sp, order);

    PrefSeries<El> o11inv = o.at(1, 1).inverse();
    PrefSeries<El> s22 = o.at(2, 2) - o.at(2, 1) * o11inv * o.at(1, 2);
    PrefSeries<El> s23 = o.at(2, 3) - o.at(2, 1) * o11inv * o.at(1, 3);
    PrefSeries<El> s32 = o.at(3, 2) - o.at(3, 1) * o11inv * o.at(1, 2);
    PrefSeries<El> s33 = o.at(3, 3) + o.at(3, 1) * o11inv * o.at(1, 3);
    PrefSeries<El> s22inv = s22.inverse();
    PrefSeries<El> t33 = s33 + s32 * s22inv * s23;

    std::vector<CheckResult> out;
    out.push_back(compareEntry("lower-21", u.at(2, 1), o.at(2, 1) * o11inv));
    out.push_back(compareEntry("lower-31", u.at(3, 1), o.at(3, 1) * o11inv));
    out.push_back(compareEntry("lower-32", u.at(3, 2), s32 * s22inv));
    out.push_back(compareEntry("diagonal-11", v.at(1, 1), ephi * o.at(1, 1)));
    out.push_back(compareEntry("diagonal-22", v.at(2, 2), ephi * s22));
    out.push_back(compareEntry("diagonal-33", v.at(3, 3), ephi * t33));
    out.push_back(compareEntry("upper-12", w.at(1, 2), o11inv * o.at(1, 2)));
    out.push_back(compareEntry("upper-13", w.at(1, 3), o11inv * o.at(1, 3)));
    out.push_back(compareEntry("upper-23", w.at(2, 3), s22inv * s23));

    // assembled identity: UVWD equals the central factor times N
    PrefMat3<El> m = gradedMul(gradedMul(gradedMul(u, v), w), cartanD(sp, order));
    PrefMat3<El> n = dressedN(sp, order);
    bool pass = true;
    std::string witness;
    for (int i = 1; i <= 3 && pass; ++i)
        for (int j = 1; j <= 3 && pass; ++j) {
            PrefSeries<El> rhs = ephi * n.at(i, j);
            if (!(m.at(i, j) == rhs)) {
                pass = false;
                witness = diffWitness("entry " + std::to_string(i) + std::to_string(j), m.at(i, j), rhs);
            }
        }
    out.push_back({"assembled", pass, witness});
    return out;
}

std::vector<CheckResult> checkSeriesRecurrences(const EpsVectors& eps, int order) {
    const QQ inv2 = qint(2).inverse();
    std::vector<CheckResult> out;
    auto run = [&](const char* name, int fam, int tag, const QQ& coeff) {
        Series<El> lhs(order);
        for (int n = 0; n <= order; ++n) lhs.setCoeff(n, eps.e.real(fam, n));
        Series<El> cst = Series<El>::constant(eps.e.primedImag(tag, 1), order);
        Series<El> rhs = Series<El>::constant(eps.e.real(fam, 0), order) +
                         (lhs * cst - cst * lhs).scaled(coeff).shifted(1);
        out.push_back(compareSeries(name, lhs, rhs));
    };
    run("recurrence-a12", 0, 0, inv2);
    run("recurrence-a13", 1, 1, QQ::one());
    run("recurrence-a23", 2, 0, -QQ::one());
    return out;
}

std::vector<CheckResult> checkQuadraticIdentities(const EpsVectors& eps, int order) {
    std::vector<CheckResult> out;
    {
        Series<El> lhs = primedImagSeries(eps.e, 0, order);
        Series<El> real12(order);
        for (int n = 0; n <= order; ++n) real12.setCoeff(n, eps.e.real(0, n));
        Series<El> cm = Series<El>::constant(eps.e.realMinus(0, 0), order);
        Series<El> rhs = (real12 * cm - (cm * real12).scaled(QQ::qpow(2))).shifted(1);
        out.push_back(compareSeries("quadratic-a1", lhs, rhs));
    }
    {
        Series<El> lhs = primedImagSeries(eps.e, 1, order);
        Series<El> real23(order);
        for (int n = 0; n <= order; ++n) real23.setCoeff(n, eps.e.real(2, n));
        Series<El> cm = Series<El>::constant(eps.e.realMinus(2, 0), order);
        Series<El> rhs = -(real23 * cm + cm * real23).shifted(1);
        out.push_back(compareSeries("quadratic-a2", lhs, rhs));
    }
    return out;
}

RMat9 rbarMatrix(const Spectral& sp, int va, int vb) {
    const int s = sp.s();
    const QQ q2 = QQ::qpow(2);
    const QQ oneMinusQ2 = QQ::one() - q2;
    auto expo = [&](int a, int b) {
        std::array<int, 3> e{0, 0, 0};
        e[static_cast<size_t>(va)] = a;
        e[static_cast<size_t>(vb)] = b;
        return e;
    };
    auto famOf = [](int i, int j) { return (i == 1 && j == 2) ? 0 : (i == 1 ? 1 : 2); };

    RMat9 r{};
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            LaurentPoly3 d;
            if (i == j) {
                if (i <= 2) {
                    d.add(expo(0, s), QQ::one());
                    d.add(expo(s, 0), -q2);
                } else {
                    d.add(expo(0, s), q2);
                    d.add(expo(s, 0), -QQ::one());
                }
            } else {
                d.add(expo(0, s), QQ::qpow(1));
                d.add(expo(s, 0), -QQ::qpow(1));
            }
            r[idx9(i, j)][idx9(i, j)] = d;
        }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            QQ c = oneMinusQ2;
            if (indexParity(j)) c = -c;
            int sij = i < j ? sp.sified(famOf(i, j)) : sp.sified(famOf(j, i));
            std::array<int, 3> e = i < j ? expo(sij, s - sij) : expo(s - sij, sij);
            r[idx9(i, j)][idx9(j, i)] = LaurentPoly3::monomial(e, c);
        }
    return r;
}

Mat27 embedThree(const RMat9& r, int legA, int legB) {
    int legC = 3 - legA - legB;
    Mat27 m(27, std::vector<LaurentPoly3>(27));
    for (int a = 1; a <= 3; ++a)
        for (int c = 1; c <= 3; ++c)
            for (int b = 1; b <= 3; ++b)
                for (int d = 1; d <= 3; ++d) {
                    const LaurentPoly3& val = r[idx9(a, c)][idx9(b, d)];
                    if (val.isZero()) continue;
                    std::array<int, 3> par{};
                    par[static_cast<size_t>(legA)] = (indexParity(a) + indexParity(b)) & 1;
                    par[static_cast<size_t>(legB)] = (indexParity(c) + indexParity(d)) & 1;
                    for (int e = 1; e <= 3; ++e) {
                        std::array<int, 3> u{}, v{};
                        u[static_cast<size_t>(legA)] = a;
                        u[static_cast<size_t>(legB)] = c;
                        u[static_cast<size_t>(legC)] = e;
                        v[static_cast<size_t>(legA)] = b;
                        v[static_cast<size_t>(legB)] = d;
                        v[static_cast<size_t>(legC)] = e;
                        int sgn = par[1] * indexParity(v[0]) +
                                  par[2] * (indexParity(v[0]) + indexParity(v[1]));
                        size_t uf = static_cast<size_t>(9 * (u[0] - 1) + 3 * (u[1] - 1) + (u[2] - 1));
                        size_t vf = static_cast<size_t>(9 * (v[0] - 1) + 3 * (v[1] - 1) + (v[2] - 1));
                        m[uf][vf] += (sgn & 1) ? -val : val;
                    }
                }
    return m;
}

namespace {

Mat27 mul27(const Mat27& a, const Mat27& b) {
    Mat27 c(27, std::vector<LaurentPoly3>(27));
    for (size_t i = 0; i < 27; ++i)
        for (size_t k = 0; k < 27; ++k) {
            if (a[i][k].isZero()) continue;
            for (size_t j = 0; j < 27; ++j) {
                if (b[k][j].isZero()) continue;
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    return c;
}

}  // namespace

bool ybeHolds(const RMat9& r01, const RMat9& r02, const RMat9& r12, std::string* witness) {
    Mat27 a = embedThree(r01, 0, 1);
    Mat27 b = embedThree(r02, 0, 2);
    Mat27 c = embedThree(r12, 1, 2);
    Mat27 lhs = mul27(mul27(a, b), c);
    Mat27 rhs = mul27(mul27(c, b), a);
    for (size_t i = 0; i < 27; ++i)
        for (size_t j = 0; j < 27; ++j)
            if (!(lhs[i][j] == rhs[i][j])) {
                if (witness)
                    *witness = "entry (" + std::to_string(i) + "," + std::to_string(j) +
                               "): " + (lhs[i][j] - rhs[i][j]).str();
                return false;
            }
    return true;
}

CheckResult checkYangBaxter(const Spectral& sp) {
    std::string name = "yang-baxter(" + std::to_string(sp.s0) + "," + std::to_string(sp.s1) +
                       "," + std::to_string(sp.s2) + ")";
    std::string witness;
    bool ok = ybeHolds(rbarMatrix(sp, 0, 1), rbarMatrix(sp, 0, 2), rbarMatrix(sp, 1, 2), &witness);
    return {name, ok, ok ? "" : witness};
}

std::vector<CheckResult> checkRMatrixConsistency(const EpsVectors& eps, const Spectral& sp, int order) {
    std::vector<CheckResult> out;

    bool scalarOk = true;
    std::string scalarWitness;
    for (int n = 1; n <= order && scalarOk; ++n) {
        QQ c = QQ::qpow(2 * n);
        if (!(pi(phiN(eps.e, n)) == Mat3::diag(c, c, c))) {
            scalarOk = false;
            scalarWitness = "central element " + std::to_string(n) + " is not scalar q^{2n} in the vector rep";
        }
    }
    out.push_back({"central-scalar-image", scalarOk, scalarWitness});

    const int s = sp.s();
    PrefMat3<El> n = dressedN(sp, 1);
    RMat9 fromN{};
    bool shapeOk = true;
    std::string shapeWitness;
    for (int i = 1; i <= 3 && shapeOk; ++i)
        for (int j = 1; j <= 3 && shapeOk; ++j) {
            const PrefSeries<El>& entry = n.at(i, j);
            for (int k = 0; k <= entry.series().order(); ++k) {
                const El& c = entry.series().coeff(k);
                if (c.isZero()) continue;
                int ea = entry.pref() + k * s;
                int eb = s - ea;
                if (eb < 0) {
                    shapeOk = false;
                    shapeWitness = "entry " + std::to_string(i) + std::to_string(j) +
                                   " carries an unexpected high term";
                    break;
                }
                Mat3 m = pi(c);
                for (int a = 1; a <= 3; ++a)
                    for (int b = 1; b <= 3; ++b) {
                        const QQ& q = m.at(a, b);
                        if (q.isZero()) continue;
                        std::array<int, 3> e{0, 0, 0};
                        e[0] = ea;
                        e[1] = eb;
                        fromN[idx9(a, i)][idx9(b, j)] += LaurentPoly3::monomial(e, q);
                    }
            }
        }
    out.push_back({"solved-block-shape", shapeOk, shapeWitness});

    RMat9 table = rbarMatrix(sp, 0, 1);
    bool eq = shapeOk;
    std::string witness;
    for (size_t i = 0; i < 9 && eq; ++i)
        for (size_t j = 0; j < 9 && eq; ++j)
            if (!(fromN[i][j] == table[i][j])) {
                eq = false;
                witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                          (fromN[i][j] - table[i][j]).str();
            }
    out.push_back({"r-matrix-table", eq, witness});
    return out;
}

namespace {

// two-variable polynomials with algebra coefficients, used for the
// exchange relation
using BivarEl = std::map<std::pair<int, int>, El>;

void bivarAdd(BivarEl& a, const std::pair<int, int>& e, const El& v) {
    if (v.isZero()) return;
    auto it = a.find(e);
    if (it == a.end()) {
        a.emplace(e, v);
        return;
    }
    it->second += v;
    if (it->second.isZero()) a.erase(it);
}

// operators on algebra (x) aux (x) aux; entry [(i2,i3)],[(j2,j3)] is
// the coefficient of x (x) M_{i2 j2} (x) M_{i3 j3}
using TriOp = std::array<std::array<BivarEl, 9>, 9>;

// parity of the algebra coefficient of the right factor, determined
// by its matrix indices
using ParityFn = std::function<int(int, int, int, int)>;

TriOp triMul(const TriOp& x, const TriOp& y, const ParityFn& rightParity) {
    TriOp z{};
    for (int i2 = 1; i2 <= 3; ++i2)
        for (int i3 = 1; i3 <= 3; ++i3)
            for (int j2 = 1; j2 <= 3; ++j2)
                for (int j3 = 1; j3 <= 3; ++j3) {
                    const BivarEl& xe = x[idx9(i2, i3)][idx9(j2, j3)];
                    if (xe.empty()) continue;
                    for (int l2 = 1; l2 <= 3; ++l2)
                        for (int l3 = 1; l3 <= 3; ++l3) {
                            const BivarEl& ye = y[idx9(j2, j3)][idx9(l2, l3)];
                            if (ye.empty()) continue;
                            int py = rightParity(j2, j3, l2, l3) & 1;
                            int sgn = (indexParity(i2) + indexParity(j2) + indexParity(i3) +
                                       indexParity(j3)) * py +
                                      (indexParity(i3) + indexParity(j3)) *
                                          (indexParity(j2) + indexParity(l2));
                            BivarEl& ze = z[idx9(i2, i3)][idx9(l2, l3)];
                            for (const auto& [ex, vx] : xe)
                                for (const auto& [ey, vy] : ye) {
                                    El prod = vx * vy;
                                    if (sgn & 1) prod = -prod;
                                    bivarAdd(ze, {ex.first + ey.first, ex.second + ey.second}, prod);
                                }
                        }
                }
    return z;
}

BivarEl bivarOfEntry(const PrefSeries<El>& p, int var, int s) {
    BivarEl b;
    for (int k = 0; k <= p.series().order(); ++k) {
        const El& c = p.series().coeff(k);
        if (c.isZero()) continue;
        int d = p.pref() + k * s;
        bivarAdd(b, var == 0 ? std::pair<int, int>{d, 0} : std::pair<int, int>{0, d}, c);
    }
    return b;
}

}  // namespace

CheckResult checkExchange(const Spectral& sp, bool zeroLowerBlock) {
    const int s = sp.s();
    PrefMat3<El> n = dressedN(sp, 1);
    if (zeroLowerBlock) {
        Series<El> z(1);
        n.at(2, 1) = PrefSeries<El>(0, z, s);
        n.at(3, 1) = PrefSeries<El>(0, z, s);
        n.at(3, 2) = PrefSeries<El>(0, z, s);
    }
    TriOp r23{}, n13{}, n12{};

    // the R-matrix entries, with the first tensor factor on the middle
    // leg carrying the first variable
    const QQ q2 = QQ::qpow(2);
    const QQ oneMinusQ2 = QQ::one() - q2;
    auto famOf = [](int i, int j) { return (i == 1 && j == 2) ? 0 : (i == 1 ? 1 : 2); };
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            BivarEl& d = r23[idx9(i, j)][idx9(i, j)];
            if (i == j) {
                if (i <= 2) {
                    bivarAdd(d, {0, s}, El::one());
                    bivarAdd(d, {s, 0}, El::scalar(-q2));
                } else {
                    bivarAdd(d, {0, s}, El::scalar(q2));
                    bivarAdd(d, {s, 0}, El::scalar(-QQ::one()));
                }
            } else {
                bivarAdd(d, {0, s}, El::scalar(QQ::qpow(1)));
                bivarAdd(d, {s, 0}, El::scalar(-QQ::qpow(1)));
            }
        }
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j) {
            if (i == j) continue;
            QQ c = oneMinusQ2;
            if (indexParity(j)) c = -c;
            int sij = i < j ? sp.sified(famOf(i, j)) : sp.sified(famOf(j, i));
            std::pair<int, int> e = i < j ? std::pair<int, int>{sij, s - sij}
                                          : std::pair<int, int>{s - sij, sij};
            bivarAdd(r23[idx9(i, j)][idx9(j, i)], e, El::scalar(c));
        }

    for (int i2 = 1; i2 <= 3; ++i2)
        for (int i3 = 1; i3 <= 3; ++i3)
            for (int j3 = 1; j3 <= 3; ++j3)
                n13[idx9(i2, i3)][idx9(i2, j3)] = bivarOfEntry(n.at(i3, j3), 0, s);
    for (int i3 = 1; i3 <= 3; ++i3)
        for (int i2 = 1; i2 <= 3; ++i2)
            for (int j2 = 1; j2 <= 3; ++j2)
                n12[idx9(i2, i3)][idx9(j2, i3)] = bivarOfEntry(n.at(i2, j2), 1, s);

    ParityFn pScalar = [](int, int, int, int) { return 0; };
    ParityFn pN13 = [](int, int j3, int, int l3) { return indexParity(j3) + indexParity(l3); };
    ParityFn pN12 = [](int j2, int, int l2, int) { return indexParity(j2) + indexParity(l2); };

    TriOp lhs = triMul(triMul(r23, n13, pN13), n12, pN12);
    TriOp rhs = triMul(triMul(n12, n13, pN13), r23, pScalar);

    std::string name = zeroLowerBlock ? "exchange-corrupted" : "exchange";
    for (size_t i = 0; i < 9; ++i)
        for (size_t j = 0; j < 9; ++j)
            if (lhs[i][j] != rhs[i][j]) {
                std::string w = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") differs";
                return {name, false, w};
            }
    return {name, true, ""};
}

}  // namespace qgl21
