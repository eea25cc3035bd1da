#include "qgl21/qq.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <utility>

namespace qgl21 {

Poly::Poly(long c) {
    if (c != 0) c_.push_back(Int(c));
}

Poly::Poly(Int c) {
    if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(int deg, Int c) {
    Poly p;
    if (c != 0) {
        p.c_.assign(static_cast<size_t>(deg) + 1, Int(0));
        p.c_[static_cast<size_t>(deg)] = std::move(c);
    }
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Int(0);
    return c_[static_cast<size_t>(k)];
}

const Int& Poly::leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Int(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.isZero() || b.isZero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            r.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    r.trim();
    return r;
}

Poly Poly::shifted(int k) const {
    if (isZero() || k == 0) return *this;
    Poly r;
    r.c_.assign(c_.size() + static_cast<size_t>(k), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(k)] = c_[i];
    return r;
}

Poly Poly::reversed() const {
    Poly r(*this);
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

Poly Poly::scaled(const Int& m) const {
    if (m == 0) return Poly();
    Poly r(*this);
    for (auto& x : r.c_) x *= m;
    return r;
}

Int Poly::content() const {
    Int g(0);
    for (const auto& x : c_) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitivePart() const {
    if (isZero()) return Poly();
    Int g = content();
    Poly r(*this);
    for (auto& x : r.c_) x /= g;
    return r;
}

bool Poly::tryDivide(const Poly& a, const Poly& b, Poly& quot) {
    if (b.isZero()) return false;
    if (a.isZero()) { quot = Poly(); return true; }
    if (a.degree() < b.degree()) return false;
    Poly rem(a);
    std::vector<Int> q(static_cast<size_t>(a.degree() - b.degree()) + 1, Int(0));
    while (!rem.isZero() && rem.degree() >= b.degree()) {
        Int c = rem.leading() / b.leading();
        if (c * b.leading() != rem.leading()) return false;
        int d = rem.degree() - b.degree();
        q[static_cast<size_t>(d)] = c;
        rem -= b.shifted(d).scaled(c);
    }
    if (!rem.isZero()) return false;
    quot = Poly(std::move(q));
    return true;
}

Poly Poly::divExact(const Poly& a, const Poly& b) {
    Poly q;
    if (!tryDivide(a, b, q)) throw std::logic_error("inexact polynomial division");
    return q;
}

// primitive pseudo-remainder sequence
Poly Poly::gcd(Poly a, Poly b) {
    Int cont = boost::multiprecision::gcd(a.content(), b.content());
    if (a.isZero() && b.isZero()) return Poly();
    if (a.isZero() || b.isZero()) {
        Poly r = a.isZero() ? b : a;
        if (r.leading() < 0) r = -r;
        return r;
    }
    a = a.primitivePart();
    b = b.primitivePart();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.isZero()) {
        // pseudo-remainder of a by b
        Poly rem = a;
        while (!rem.isZero() && rem.degree() >= b.degree()) {
            int d = rem.degree() - b.degree();
            rem = rem.scaled(b.leading()) - b.shifted(d).scaled(rem.leading());
        }
        a = std::move(b);
        b = rem.isZero() ? Poly() : rem.primitivePart();
    }
    Poly g = a.scaled(cont);
    if (g.leading() < 0) g = -g;
    return g;
}

static std::string coeffStr(const Int& c, bool lead, int deg) {
    std::string s;
    Int a = c < 0 ? Int(-c) : c;
    if (lead) {
        if (c < 0) s += "-";
    } else {
        s += c < 0 ? " - " : " + ";
    }
    if (a != 1 || deg == 0) s += a.str();
    return s;
}

std::string Poly::str(const std::string& var) const {
    if (isZero()) return "0";
    std::string s;
    bool lead = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        Int a = c < 0 ? Int(-c) : c;
        s += coeffStr(c, lead, k);
        if (k > 0) {
            if (a != 1) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
        lead = false;
    }
    return s;
}

std::string Poly::latex(const std::string& var) const {
    if (isZero()) return "0";
    std::string s;
    bool lead = true;
    for (int k = degree(); k >= 0; --k) {
        const Int& c = coeff(k);
        if (c == 0) continue;
        s += coeffStr(c, lead, k);
        if (k > 0) {
            s += var;
            if (k > 1) s += "^{" + std::to_string(k) + "}";
        }
        lead = false;
    }
    return s;
}

QQ::QQ(long n, long d) : num_(Poly(n)), den_(Poly(d)) {
    if (d == 0) throw std::logic_error("zero denominator");
    normalize();
}

QQ::QQ(Poly n, Poly d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.isZero()) throw std::logic_error("zero denominator");
    normalize();
}

void QQ::normalize() {
    if (num_.isZero()) {
        den_ = Poly(1);
        return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (!g.isOne()) {
        num_ = Poly::divExact(num_, g);
        den_ = Poly::divExact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QQ QQ::qpow(long k) {
    QQ r;
    if (k >= 0) {
        r.num_ = Poly::monomial(static_cast<int>(k));
        r.den_ = Poly(1);
    } else {
        r.num_ = Poly(1);
        r.den_ = Poly::monomial(static_cast<int>(-k));
    }
    return r;
}

QQ QQ::operator-() const {
    QQ r(*this);
    r.num_ = -r.num_;
    return r;
}

QQ& QQ::operator+=(const QQ& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QQ& QQ::operator-=(const QQ& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QQ& QQ::operator*=(const QQ& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QQ& QQ::operator/=(const QQ& o) {
    if (o.isZero()) throw std::logic_error("division by zero");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

QQ QQ::inverse() const {
    if (isZero()) throw std::logic_error("inverse of zero");
    return QQ(den_, num_);
}

QQ QQ::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    QQ r = QQ::one();
    QQ base(*this);
    while (k > 0) {
        if (k & 1) r *= base;
        base *= base;
        k >>= 1;
    }
    return r;
}

QQ QQ::bar() const {
    // p(q)/r(q) -> p(1/q)/r(1/q), cleared of negative powers
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reversed(), d = den_.reversed();
    if (dd > dn) n = n.shifted(dd - dn);
    else if (dn > dd) d = d.shifted(dn - dd);
    return QQ(std::move(n), std::move(d));
}

static int termCount(const Poly& p) {
    int n = 0;
    for (const auto& c : p.coeffs())
        if (c != 0) ++n;
    return n;
}

std::string QQ::str() const {
    if (den_.isOne()) return num_.str();
    std::string n = num_.str();
    if (termCount(num_) > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (termCount(den_) > 1 || den_.leading() != 1) d = "(" + d + ")";
    return n + "/" + d;
}

std::string QQ::latex() const {
    if (den_.isOne()) return num_.latex();
    return "\\frac{" + num_.latex() + "}{" + den_.latex() + "}";
}

QQ kappa() {
    return QQ(Poly({Int(-1), Int(0), Int(1)}), Poly::monomial(1));
}

QQ qint(long n) {
    if (n < 0) return -qint(-n);
    // (q^n - q^{-n}) / (q - q^{-1}) = (q^{2n} - 1) / (q^{n-1} (q^2 - 1))
    if (n == 0) return QQ::zero();
    Poly num = Poly::monomial(static_cast<int>(2 * n)) - Poly(1);
    Poly den = (Poly::monomial(2) - Poly(1)).shifted(static_cast<int>(n - 1));
    return QQ(std::move(num), std::move(den));
}

QQ qnumber(const QQ& base, long n) {
    QQ r;
    QQ p = QQ::one();
    for (long k = 0; k < n; ++k) {
        r += p;
        p *= base;
    }
    return r;
}

QQ qnumberFactorial(const QQ& base, long n) {
    QQ r = QQ::one();
    for (long k = 1; k <= n; ++k) r *= qnumber(base, k);
    return r;
}

}  // namespace qgl21
