#pragma once

#include "qgl21/qq.hpp"
#include "qgl21/rootdata.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qgl21 {

// Ordered monomial
//   F12^f12 F13^f13 F23^f23 q^{k.K} E12^e12 E13^e13 E23^e23
// where K = (K_1, K_2, K_3) and the odd exponents f13, f23, e13, e23
// are 0 or 1.
struct Mon {
    int f12 = 0, f13 = 0, f23 = 0;
    std::array<int, 3> k{0, 0, 0};
    int e12 = 0, e13 = 0, e23 = 0;

    friend auto operator<=>(const Mon&, const Mon&) = default;

    bool isCartan() const { return f12 + f13 + f23 + e12 + e13 + e23 == 0; }
    int parity() const { return (f13 + f23 + e13 + e23) & 1; }
    FWeight weight() const {
        return {e12 + e13 - f12 - f13, e13 + e23 - f13 - f23};
    }
};

enum class Gen { F12, F13, F23, E12, E13, E23 };

// An element of the algebra: a finite rational-function combination of
// ordered monomials.  Products are normal-ordered on the fly.
class El {
public:
    El() = default;

    static El zero() { return El(); }
    static El one() { return monomial(Mon{}, QQ::one()); }
    static El scalar(const QQ& c) { return monomial(Mon{}, c); }
    static El monomial(const Mon& m, const QQ& c = QQ::one());
    static El gen(Gen g);
    // q^{k.K}
    static El cartan(const std::array<int, 3>& k);

    bool isZero() const { return terms_.empty(); }
    const std::map<Mon, QQ>& terms() const { return terms_; }
    void add(const Mon& m, const QQ& c);

    El operator-() const;
    El& operator+=(const El& o);
    El& operator-=(const El& o);
    friend El operator+(El a, const El& b) { a += b; return a; }
    friend El operator-(El a, const El& b) { a -= b; return a; }
    friend El operator*(const El& a, const El& b);
    El& operator*=(const El& o) { *this = *this * o; return *this; }
    friend El operator*(El a, const QQ& c);
    friend El operator*(const QQ& c, El a) { return std::move(a) * c; }
    friend bool operator==(const El& a, const El& b) = default;

    // parity of a homogeneous element (throws if mixed); zero is even
    int parity() const;
    bool isEvenParity() const;
    // weight of a homogeneous element in simple-root coordinates
    FWeight weight() const;

    // coefficient-wise q -> q^{-1}
    El barCoeffs() const;
    // the anti-automorphism swapping E and F and inverting q
    El omega() const;
    // the antipode (a super-anti-homomorphism)
    El antipode() const;

    // eigenvalue on a highest-weight vector of weight lambda: the Cartan
    // part evaluated at q^{k.lambda}; requires every exponent to be an
    // integer
    QQ hwEigenvalue(const std::array<QQ, 3>& lambda) const;

    // commutes with both Chevalley generator sets and the Cartan torus
    bool isCentral() const;

    std::string str() const;
    std::string latex() const;

private:
    std::map<Mon, QQ> terms_;
};

// q-supercommutator with the weight-directed convention: for weights in
// the positive cone the bracket is a b - (-1)^{[a][b]} q^{-(al,be)} b a,
// in the negative cone the power is +(al,be), otherwise the plain super
// bracket.
El superCommutator(const El& a, const El& b);
// same, with the weights and parities supplied explicitly (loop setting)
El superCommutatorAffine(const El& a, const AWeight& wa, int pa,
                         const El& b, const AWeight& wb, int pb);
// plain graded bracket a b - (-1)^{[a][b]} b a with explicit parities
El superBracket(const El& a, int pa, const El& b, int pb);

}  // namespace qgl21
