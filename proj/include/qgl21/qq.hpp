#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace qgl21 {

using Int = boost::multiprecision::cpp_int;

// Polynomial in q with integer coefficients.  Coefficients are stored
// little-endian (c[k] is the coefficient of q^k) and the vector never
// has trailing zeros, so the zero polynomial is the empty vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(long c);
    explicit Poly(Int c);
    explicit Poly(std::vector<Int> coeffs);
    static Poly monomial(int deg, Int c = Int(1));

    bool isZero() const { return c_.empty(); }
    bool isOne() const { return c_.size() == 1 && c_[0] == 1; }
    // degree of zero is -1
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    Int coeff(int k) const;
    const Int& leading() const;
    const std::vector<Int>& coeffs() const { return c_; }

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
    friend bool operator==(const Poly& a, const Poly& b) = default;

    // multiply by q^k, k >= 0
    Poly shifted(int k) const;
    // coefficient list reversed: p(q) -> q^deg * p(1/q)
    Poly reversed() const;
    Poly scaled(const Int& m) const;

    // gcd of all coefficients, made positive; content of zero is 0
    Int content() const;
    Poly primitivePart() const;

    // quotient when the division is exact; aborts otherwise
    static Poly divExact(const Poly& a, const Poly& b);
    static bool tryDivide(const Poly& a, const Poly& b, Poly& quot);
    // gcd with positive leading coefficient (primitive-PRS with content fixup)
    static Poly gcd(Poly a, Poly b);

    std::string str(const std::string& var = "q") const;
    std::string latex(const std::string& var = "q") const;

private:
    std::vector<Int> c_;
    void trim();
};

// Rational function in q, kept canonical: gcd(num, den) = 1, the
// denominator has a positive leading coefficient, zero is 0/1.
class QQ {
public:
    QQ() : num_(), den_(Poly(1)) {}
    QQ(long n) : num_(Poly(n)), den_(Poly(1)) {}
    QQ(long n, long d);
    QQ(Poly n, Poly d);
    explicit QQ(Poly n) : num_(std::move(n)), den_(Poly(1)) {}

    static QQ zero() { return QQ(); }
    static QQ one() { return QQ(1); }
    // q^k for any integer k
    static QQ qpow(long k);

    bool isZero() const { return num_.isZero(); }
    bool isOne() const { return num_.isOne() && den_.isOne(); }
    bool isInteger() const { return den_.isOne() && num_.degree() <= 0; }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    QQ operator-() const;
    QQ& operator+=(const QQ& o);
    QQ& operator-=(const QQ& o);
    QQ& operator*=(const QQ& o);
    QQ& operator/=(const QQ& o);
    friend QQ operator+(QQ a, const QQ& b) { a += b; return a; }
    friend QQ operator-(QQ a, const QQ& b) { a -= b; return a; }
    friend QQ operator*(QQ a, const QQ& b) { a *= b; return a; }
    friend QQ operator/(QQ a, const QQ& b) { a /= b; return a; }
    friend bool operator==(const QQ& a, const QQ& b) = default;

    QQ inverse() const;
    QQ pow(long k) const;
    // the involution q -> q^{-1}
    QQ bar() const;

    std::string str() const;
    std::string latex() const;

private:
    Poly num_, den_;
    void normalize();
};

// q - q^{-1}
QQ kappa();
// [n]_q = (q^n - q^{-n}) / (q - q^{-1})
QQ qint(long n);
// (n)_p = 1 + p + ... + p^{n-1} evaluated at an arbitrary base
QQ qnumber(const QQ& base, long n);
// (n)_p! = (1)_p (2)_p ... (n)_p
QQ qnumberFactorial(const QQ& base, long n);

}  // namespace qgl21
