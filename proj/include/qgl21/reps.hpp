#pragma once

#include "qgl21/pbw.hpp"

#include <array>
#include <string>

namespace qgl21 {

// 3x3 matrix over the scalar field; indices are 1-based to match the
// weight labels, and the third basis direction is the odd one.
class Mat3 {
public:
    static Mat3 zero() { return Mat3(); }
    static Mat3 id();
    static Mat3 one() { return id(); }
    static Mat3 unit(int i, int j, const QQ& c = QQ::one());
    static Mat3 diag(const QQ& a, const QQ& b, const QQ& c);

    QQ& at(int i, int j) { return a_[idx(i, j)]; }
    const QQ& at(int i, int j) const { return a_[idx(i, j)]; }

    bool isZero() const;
    Mat3 operator-() const;
    Mat3& operator+=(const Mat3& o);
    Mat3& operator-=(const Mat3& o);
    friend Mat3 operator+(Mat3 a, const Mat3& b) { a += b; return a; }
    friend Mat3 operator-(Mat3 a, const Mat3& b) { a -= b; return a; }
    friend Mat3 operator*(const Mat3& a, const Mat3& b);
    friend Mat3 operator*(Mat3 a, const QQ& c);
    friend Mat3 operator*(const QQ& c, Mat3 a) { return std::move(a) * c; }
    friend bool operator==(const Mat3&, const Mat3&) = default;

    std::string str() const;

private:
    static size_t idx(int i, int j) { return static_cast<size_t>(3 * (i - 1) + (j - 1)); }
    std::array<QQ, 9> a_{};
};

// The vector representation: K_i acts as the i-th diagonal unit, the
// root vectors as the matching elementary matrices.
Mat3 pi(const El& x);

// str X = X_11 + X_22 - X_33
QQ supertrace(const Mat3& m);

// str(pi(x)); supercyclic: mu(ab) = (-1)^{[a][b]} mu(ba)
QQ mu(const El& x);

// A 3x3 matrix with entries in the algebra, standing for
// sum_{ij} x_{ij} (x) M_{ij} inside the graded tensor product.  The
// product carries the sign (-1)^{([i]+[j]) [y_{jl}]}.
class GOp2 {
public:
    static GOp2 zero() { return GOp2(); }
    static GOp2 one();

    El& at(int i, int j) { return a_[idx(i, j)]; }
    const El& at(int i, int j) const { return a_[idx(i, j)]; }

    friend GOp2 operator+(const GOp2& x, const GOp2& y);
    friend GOp2 operator-(const GOp2& x, const GOp2& y);
    friend GOp2 operator*(const GOp2& x, const GOp2& y);
    friend bool operator==(const GOp2&, const GOp2&) = default;

private:
    static size_t idx(int i, int j) { return static_cast<size_t>(3 * (i - 1) + (j - 1)); }
    std::array<El, 9> a_{};
};

}  // namespace qgl21
