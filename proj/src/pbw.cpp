#include "qgl21/pbw.hpp"

#include <stdexcept>
#include <utility>

namespace qgl21 {

namespace {

using Word = std::array<int, 3>;  // exponents of the 12, 13, 23 generators

template <class K>
void acc(std::map<K, QQ>& m, const K& k, const QQ& c) {
    if (c.isZero()) return;
    auto it = m.find(k);
    if (it == m.end()) m.emplace(k, c);
    else {
        it->second += c;
        if (it->second.isZero()) m.erase(it);
    }
}

// Append one E-generator (0 = E12, 1 = E13, 2 = E23) to the right of an
// ordered word E12^{w0} E13^{w1} E23^{w2}, writing the straightened
// result into out.  The rewrite rules:
//   E13 E12 = q E12 E13        E23 E12 = q^{-1} E12 E23 - q^{-1} E13
//   E23 E13 = -q^{-1} E13 E23  E13^2 = E23^2 = 0
void eAppend(std::map<Word, QQ>& out, const Word& w, const QQ& c, int g) {
    switch (g) {
        case 2:
            if (w[2]) return;
            acc(out, Word{w[0], w[1], 1}, c);
            return;
        case 1: {
            if (w[1]) return;
            QQ cc = c;
            if (w[2]) cc *= -QQ::qpow(-1);
            acc(out, Word{w[0], 1, w[2]}, cc);
            return;
        }
        case 0:
            if (w[2]) {
                Word prefix{w[0], w[1], 0};
                std::map<Word, QQ> tmp;
                eAppend(tmp, prefix, c * QQ::qpow(-1), 0);
                for (const auto& [t, tc] : tmp) eAppend(out, t, tc, 2);
                eAppend(out, prefix, -c * QQ::qpow(-1), 1);
            } else if (w[1]) {
                acc(out, Word{w[0] + 1, 1, 0}, c * QQ::qpow(1));
            } else {
                acc(out, Word{w[0] + 1, 0, 0}, c);
            }
            return;
    }
    throw std::logic_error("bad E generator");
}

// F-side mirror:
//   F13 F12 = q F12 F13        F23 F12 = q^{-1} F12 F23 + F13
//   F23 F13 = -q^{-1} F13 F23  F13^2 = F23^2 = 0
void fAppend(std::map<Word, QQ>& out, const Word& w, const QQ& c, int g) {
    switch (g) {
        case 2:
            if (w[2]) return;
            acc(out, Word{w[0], w[1], 1}, c);
            return;
        case 1: {
            if (w[1]) return;
            QQ cc = c;
            if (w[2]) cc *= -QQ::qpow(-1);
            acc(out, Word{w[0], 1, w[2]}, cc);
            return;
        }
        case 0:
            if (w[2]) {
                Word prefix{w[0], w[1], 0};
                std::map<Word, QQ> tmp;
                fAppend(tmp, prefix, c * QQ::qpow(-1), 0);
                for (const auto& [t, tc] : tmp) fAppend(out, t, tc, 2);
                fAppend(out, prefix, c, 1);
            } else if (w[1]) {
                acc(out, Word{w[0] + 1, 1, 0}, c * QQ::qpow(1));
            } else {
                acc(out, Word{w[0] + 1, 0, 0}, c);
            }
            return;
    }
    throw std::logic_error("bad F generator");
}

// E_{ij} q^{k.K} = q^{k_j - k_i} q^{k.K} E_{ij},
// q^{k.K} F_{ij} = q^{k_j - k_i} F_{ij} q^{k.K}; both passes pick up the
// same exponent, summed over the letters of the word.
long cartanPass(const Word& w, const std::array<int, 3>& k) {
    return static_cast<long>(w[0]) * (k[1] - k[0]) + static_cast<long>(w[1]) * (k[2] - k[0]) +
           static_cast<long>(w[2]) * (k[2] - k[1]);
}

std::array<int, 3> addK(const std::array<int, 3>& a, const std::array<int, 3>& b) {
    return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

// One term of a straightened product E_{ij} F_{kl}.
struct CrossTerm {
    enum Type { FE, Cart, FCart, CartE } type;
    QQ c;
    int f = -1;
    std::array<int, 3> k{0, 0, 0};
    int e = -1;
};

// E_{ij} F_{kl} rewritten with every F to the left of every E.
const std::vector<CrossTerm>& crossEF(int e, int f) {
    static const std::array<std::vector<CrossTerm>, 9> table = [] {
        std::array<std::vector<CrossTerm>, 9> t;
        const QQ ki = kappa().inverse();
        const QQ one = QQ::one();
        auto fe = [](QQ c, int ff, int ee) {
            CrossTerm x;
            x.type = CrossTerm::FE; x.c = std::move(c); x.f = ff; x.e = ee;
            return x;
        };
        auto cart = [](QQ c, std::array<int, 3> k) {
            CrossTerm x;
            x.type = CrossTerm::Cart; x.c = std::move(c); x.k = k;
            return x;
        };
        auto fcart = [](QQ c, int ff, std::array<int, 3> k) {
            CrossTerm x;
            x.type = CrossTerm::FCart; x.c = std::move(c); x.f = ff; x.k = k;
            return x;
        };
        auto carte = [](QQ c, std::array<int, 3> k, int ee) {
            CrossTerm x;
            x.type = CrossTerm::CartE; x.c = std::move(c); x.k = k; x.e = ee;
            return x;
        };
        // E12 F12 = F12 E12 + (q^{H1} - q^{-H1})/kappa
        t[0 * 3 + 0] = {fe(one, 0, 0), cart(ki, {1, -1, 0}), cart(-ki, {-1, 1, 0})};
        // E12 F13 = F13 E12 - q^{-1} F23 q^{-H1}
        t[0 * 3 + 1] = {fe(one, 1, 0), fcart(-QQ::qpow(-1), 2, {-1, 1, 0})};
        // E12 F23 = F23 E12
        t[0 * 3 + 2] = {fe(one, 2, 0)};
        // E13 F12 = F12 E13 - q q^{H1} E23
        t[1 * 3 + 0] = {fe(one, 0, 1), carte(-QQ::qpow(1), {1, -1, 0}, 2)};
        // E13 F13 = -F13 E13 + (q^{(1,0,1).K} - q^{-(1,0,1).K})/kappa
        t[1 * 3 + 1] = {fe(-one, 1, 1), cart(ki, {1, 0, 1}), cart(-ki, {-1, 0, -1})};
        // E13 F23 = -F23 E13 + q^{-H2} E12
        t[1 * 3 + 2] = {fe(-one, 2, 1), carte(one, {0, -1, -1}, 0)};
        // E23 F12 = F12 E23
        t[2 * 3 + 0] = {fe(one, 0, 2)};
        // E23 F13 = -F13 E23 + F12 q^{H2}
        t[2 * 3 + 1] = {fe(-one, 1, 2), fcart(one, 0, {0, 1, 1})};
        // E23 F23 = -F23 E23 + (q^{H2} - q^{-H2})/kappa
        t[2 * 3 + 2] = {fe(-one, 2, 2), cart(ki, {0, 1, 1}), cart(-ki, {0, -1, -1})};
        return t;
    }();
    return table[static_cast<size_t>(e) * 3 + static_cast<size_t>(f)];
}

El rightMulE(const El& x, int e);
El rightMulCartan(const El& x, const std::array<int, 3>& k);
El mulEwordF(const Word& b, int f);

El rightMulE(const El& x, int e) {
    El out;
    for (const auto& [m, c] : x.terms()) {
        std::map<Word, QQ> tmp;
        eAppend(tmp, Word{m.e12, m.e13, m.e23}, c, e);
        for (const auto& [w, wc] : tmp) {
            Mon n = m;
            n.e12 = w[0]; n.e13 = w[1]; n.e23 = w[2];
            out.add(n, wc);
        }
    }
    return out;
}

El rightMulCartan(const El& x, const std::array<int, 3>& k) {
    El out;
    for (const auto& [m, c] : x.terms()) {
        long p = cartanPass(Word{m.e12, m.e13, m.e23}, k);
        Mon n = m;
        n.k = addK(m.k, k);
        out.add(n, c * QQ::qpow(p));
    }
    return out;
}

// E12^{b0} E13^{b1} E23^{b2} times one F-generator, fully straightened.
El mulEwordF(const Word& b, int f) {
    if (b == Word{0, 0, 0}) {
        Mon m;
        (f == 0 ? m.f12 : f == 1 ? m.f13 : m.f23) = 1;
        return El::monomial(m);
    }
    int e;
    Word prefix = b;
    if (b[2]) { e = 2; prefix[2] = 0; }
    else if (b[1]) { e = 1; prefix[1] = 0; }
    else { e = 0; prefix[0] -= 1; }

    El out;
    for (const auto& t : crossEF(e, f)) {
        switch (t.type) {
            case CrossTerm::FE: {
                El x = mulEwordF(prefix, t.f);
                out += rightMulE(x, t.e) * t.c;
                break;
            }
            case CrossTerm::Cart: {
                Mon m;
                m.k = t.k;
                m.e12 = prefix[0]; m.e13 = prefix[1]; m.e23 = prefix[2];
                out.add(m, t.c * QQ::qpow(cartanPass(prefix, t.k)));
                break;
            }
            case CrossTerm::FCart: {
                El x = mulEwordF(prefix, t.f);
                out += rightMulCartan(x, t.k) * t.c;
                break;
            }
            case CrossTerm::CartE: {
                Mon m;
                m.k = t.k;
                m.e12 = prefix[0]; m.e13 = prefix[1]; m.e23 = prefix[2];
                El x = El::monomial(m, t.c * QQ::qpow(cartanPass(prefix, t.k)));
                out += rightMulE(x, t.e);
                break;
            }
        }
    }
    return out;
}

std::map<Word, QQ> fMulWords(const Word& a, const Word& b) {
    std::map<Word, QQ> cur;
    cur.emplace(a, QQ::one());
    auto step = [&cur](int g) {
        std::map<Word, QQ> next;
        for (const auto& [w, c] : cur) fAppend(next, w, c, g);
        cur = std::move(next);
    };
    for (int i = 0; i < b[0]; ++i) step(0);
    if (b[1]) step(1);
    if (b[2]) step(2);
    return cur;
}

El rightMulF(const El& x, int f) {
    El out;
    for (const auto& [m, c] : x.terms()) {
        El cross = mulEwordF(Word{m.e12, m.e13, m.e23}, f);
        for (const auto& [t, tc] : cross.terms()) {
            Word tf{t.f12, t.f13, t.f23};
            QQ coeff = c * tc * QQ::qpow(cartanPass(tf, m.k));
            auto words = fMulWords(Word{m.f12, m.f13, m.f23}, tf);
            for (const auto& [w, wc] : words) {
                Mon n;
                n.f12 = w[0]; n.f13 = w[1]; n.f23 = w[2];
                n.k = addK(m.k, t.k);
                n.e12 = t.e12; n.e13 = t.e13; n.e23 = t.e23;
                out.add(n, coeff * wc);
            }
        }
    }
    return out;
}

}  // namespace

El El::monomial(const Mon& m, const QQ& c) {
    El e;
    e.add(m, c);
    return e;
}

El El::gen(Gen g) {
    Mon m;
    switch (g) {
        case Gen::F12: m.f12 = 1; break;
        case Gen::F13: m.f13 = 1; break;
        case Gen::F23: m.f23 = 1; break;
        case Gen::E12: m.e12 = 1; break;
        case Gen::E13: m.e13 = 1; break;
        case Gen::E23: m.e23 = 1; break;
    }
    return monomial(m);
}

El El::cartan(const std::array<int, 3>& k) {
    Mon m;
    m.k = k;
    return monomial(m);
}

void El::add(const Mon& m, const QQ& c) {
    if (c.isZero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) terms_.emplace(m, c);
    else {
        it->second += c;
        if (it->second.isZero()) terms_.erase(it);
    }
}

El El::operator-() const {
    El r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

El& El::operator+=(const El& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

El& El::operator-=(const El& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

El operator*(El a, const QQ& c) {
    if (c.isZero()) return El();
    for (auto& [m, mc] : a.terms_) mc *= c;
    return a;
}

El operator*(const El& a, const El& b) {
    El out;
    for (const auto& [my, cy] : b.terms()) {
        // fold the right factor's letters one at a time into each left monomial
        El acc;
        for (const auto& [mx, cx] : a.terms()) acc.add(mx, cx * cy);
        if (acc.isZero()) continue;
        for (int i = 0; i < my.f12; ++i) acc = rightMulF(acc, 0);
        if (my.f13) acc = rightMulF(acc, 1);
        if (my.f23) acc = rightMulF(acc, 2);
        if (my.k != std::array<int, 3>{0, 0, 0}) acc = rightMulCartan(acc, my.k);
        for (int i = 0; i < my.e12; ++i) acc = rightMulE(acc, 0);
        if (my.e13) acc = rightMulE(acc, 1);
        if (my.e23) acc = rightMulE(acc, 2);
        out += acc;
    }
    return out;
}

int El::parity() const {
    if (terms_.empty()) return 0;
    int p = terms_.begin()->first.parity();
    for (const auto& [m, c] : terms_)
        if (m.parity() != p) throw std::logic_error("parity of a parity-mixed element");
    return p;
}

bool El::isEvenParity() const {
    for (const auto& [m, c] : terms_)
        if (m.parity()) return false;
    return true;
}

FWeight El::weight() const {
    if (terms_.empty()) return {0, 0};
    FWeight w = terms_.begin()->first.weight();
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) throw std::logic_error("weight of a weight-mixed element");
    return w;
}

El El::barCoeffs() const {
    El r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.bar());
    return r;
}

El El::omega() const {
    El out;
    for (const auto& [m, c] : terms_) {
        El t = El::one();
        if (m.e23) t = rightMulF(t, 2);
        if (m.e13) t = rightMulF(t, 1);
        for (int i = 0; i < m.e12; ++i) t = rightMulF(t, 0);
        if (m.k != std::array<int, 3>{0, 0, 0})
            t = rightMulCartan(t, {-m.k[0], -m.k[1], -m.k[2]});
        if (m.f23) t = rightMulE(t, 2);
        if (m.f13) t = rightMulE(t, 1);
        for (int i = 0; i < m.f12; ++i) t = rightMulE(t, 0);
        out += t * c.bar();
    }
    return out;
}

El El::antipode() const {
    // images of the basis letters; the composite letters are worked out
    // from the generator images once
    static const El sE12 = El::monomial(Mon{.k = {-1, 1, 0}, .e12 = 1}, QQ(-1));
    static const El sE23 = El::monomial(Mon{.k = {0, -1, -1}, .e23 = 1}, QQ(-1));
    static const El sF12 = El::monomial(Mon{.f12 = 1, .k = {1, -1, 0}}, QQ(-1));
    static const El sF23 = El::monomial(Mon{.f23 = 1, .k = {0, 1, 1}}, QQ(-1));
    static const El sE13 = sE23 * sE12 - QQ::qpow(1) * (sE12 * sE23);
    static const El sF13 = sF12 * sF23 - QQ::qpow(-1) * (sF23 * sF12);

    El out;
    for (const auto& [m, c] : terms_) {
        int odd = m.f13 + m.f23 + m.e13 + m.e23;
        bool flip = (odd * (odd - 1) / 2) % 2 != 0;
        El t = El::one();
        if (m.e23) t *= sE23;
        if (m.e13) t *= sE13;
        for (int i = 0; i < m.e12; ++i) t *= sE12;
        if (m.k != std::array<int, 3>{0, 0, 0})
            t *= El::cartan({-m.k[0], -m.k[1], -m.k[2]});
        if (m.f23) t *= sF23;
        if (m.f13) t *= sF13;
        for (int i = 0; i < m.f12; ++i) t *= sF12;
        out += t * (flip ? -c : c);
    }
    return out;
}

QQ El::hwEigenvalue(const std::array<QQ, 3>& lambda) const {
    QQ r;
    for (const auto& [m, c] : terms_) {
        if (!m.isCartan()) continue;
        QQ e = lambda[0] * QQ(m.k[0]) + lambda[1] * QQ(m.k[1]) + lambda[2] * QQ(m.k[2]);
        if (!e.isInteger())
            throw std::logic_error("highest-weight eigenvalue needs integral Cartan exponents");
        long p = e.isZero() ? 0 : e.num().coeff(0).convert_to<long>();
        r += c * QQ::qpow(p);
    }
    return r;
}

bool El::isCentral() const {
    const El probes[] = {
        gen(Gen::E12), gen(Gen::E23), gen(Gen::F12), gen(Gen::F23),
        cartan({1, 0, 0}), cartan({0, 1, 0}), cartan({0, 0, 1}),
        cartan({-1, 0, 0}), cartan({0, -1, 0}), cartan({0, 0, -1}),
    };
    for (const El& g : probes)
        if (!((*this) * g - g * (*this)).isZero()) return false;
    return true;
}

El superCommutator(const El& a, const El& b) {
    if (a.isZero() || b.isZero()) return El::zero();
    FWeight wa = a.weight(), wb = b.weight();
    QQ factor = (a.parity() && b.parity()) ? QQ(-1) : QQ(1);
    if (inQPlus(wa) && inQPlus(wb)) factor *= QQ::qpow(-pairing(wa, wb));
    else if (inQMinus(wa) && inQMinus(wb)) factor *= QQ::qpow(pairing(wa, wb));
    return a * b - factor * (b * a);
}

El superCommutatorAffine(const El& a, const AWeight& wa, int pa,
                         const El& b, const AWeight& wb, int pb) {
    if (a.isZero() || b.isZero()) return El::zero();
    QQ factor = (pa && pb) ? QQ(-1) : QQ(1);
    if (inQPlusAffine(wa) && inQPlusAffine(wb)) factor *= QQ::qpow(-pairingAffine(wa, wb));
    else if (inQMinusAffine(wa) && inQMinusAffine(wb)) factor *= QQ::qpow(pairingAffine(wa, wb));
    return a * b - factor * (b * a);
}

El superBracket(const El& a, int pa, const El& b, int pb) {
    QQ factor = (pa && pb) ? QQ(-1) : QQ(1);
    return a * b - factor * (b * a);
}

namespace {

void appendPower(std::string& s, const char* name, int p, bool latexMode) {
    if (p == 0) return;
    if (!s.empty()) s += latexMode ? " " : "*";
    s += name;
    if (p > 1) s += (latexMode ? "^{" + std::to_string(p) + "}" : "^" + std::to_string(p));
}

std::string monStr(const Mon& m, bool latexMode) {
    std::string s;
    appendPower(s, latexMode ? "F_{12}" : "F12", m.f12, latexMode);
    appendPower(s, latexMode ? "F_{13}" : "F13", m.f13, latexMode);
    appendPower(s, latexMode ? "F_{23}" : "F23", m.f23, latexMode);
    if (m.k != std::array<int, 3>{0, 0, 0}) {
        if (!s.empty()) s += latexMode ? " " : "*";
        std::string kv = std::to_string(m.k[0]) + "," + std::to_string(m.k[1]) + "," +
                         std::to_string(m.k[2]);
        s += latexMode ? "q^{(" + kv + ")\\cdot K}" : "K[" + kv + "]";
    }
    appendPower(s, latexMode ? "E_{12}" : "E12", m.e12, latexMode);
    appendPower(s, latexMode ? "E_{13}" : "E13", m.e13, latexMode);
    appendPower(s, latexMode ? "E_{23}" : "E23", m.e23, latexMode);
    return s;
}

std::string elStr(const std::map<Mon, QQ>& terms, bool latexMode) {
    if (terms.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        std::string cs = latexMode ? c.latex() : c.str();
        bool neg = cs.size() > 1 && cs[0] == '-' && cs.find(" + ") == std::string::npos &&
                   cs.find(" - ") == std::string::npos;
        std::string body = neg ? cs.substr(1) : cs;
        bool sum = body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos;
        if (sum) body = "(" + body + ")";
        std::string ms = monStr(m, latexMode);
        std::string term;
        if (ms.empty()) term = body;
        else if (body == "1") term = ms;
        else term = body + (latexMode ? " " : "*") + ms;
        if (s.empty()) s = (neg && !sum ? "-" : (neg ? "-" : "")) + term;
        else s += (neg ? " - " : " + ") + term;
    }
    return s;
}

}  // namespace

std::string El::str() const { return elStr(terms_, false); }
std::string El::latex() const { return elStr(terms_, true); }

}  // namespace qgl21
