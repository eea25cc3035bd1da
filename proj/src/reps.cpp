#include "qgl21/reps.hpp"

namespace qgl21 {

Mat3 Mat3::id() {
    Mat3 m;
    for (int i = 1; i <= 3; ++i) m.at(i, i) = QQ::one();
    return m;
}

Mat3 Mat3::unit(int i, int j, const QQ& c) {
    Mat3 m;
    m.at(i, j) = c;
    return m;
}

Mat3 Mat3::diag(const QQ& a, const QQ& b, const QQ& c) {
    Mat3 m;
    m.at(1, 1) = a;
    m.at(2, 2) = b;
    m.at(3, 3) = c;
    return m;
}

bool Mat3::isZero() const {
    for (const auto& x : a_)
        if (!x.isZero()) return false;
    return true;
}

Mat3 Mat3::operator-() const {
    Mat3 m;
    for (size_t i = 0; i < 9; ++i) m.a_[i] = -a_[i];
    return m;
}

Mat3& Mat3::operator+=(const Mat3& o) {
    for (size_t i = 0; i < 9; ++i) a_[i] += o.a_[i];
    return *this;
}

Mat3& Mat3::operator-=(const Mat3& o) {
    for (size_t i = 0; i < 9; ++i) a_[i] -= o.a_[i];
    return *this;
}

Mat3 operator*(const Mat3& a, const Mat3& b) {
    Mat3 r;
    for (int i = 1; i <= 3; ++i)
        for (int k = 1; k <= 3; ++k) {
            if (a.at(i, k).isZero()) continue;
            for (int j = 1; j <= 3; ++j) {
                if (b.at(k, j).isZero()) continue;
                r.at(i, j) += a.at(i, k) * b.at(k, j);
            }
        }
    return r;
}

Mat3 operator*(Mat3 a, const QQ& c) {
    for (auto& x : a.a_) x *= c;
    return a;
}

std::string Mat3::str() const {
    std::string s;
    for (int i = 1; i <= 3; ++i) {
        s += i == 1 ? "[" : " ";
        for (int j = 1; j <= 3; ++j) {
            s += at(i, j).str();
            if (j < 3) s += ", ";
        }
        s += i == 3 ? "]" : ";\n";
    }
    return s;
}

Mat3 pi(const El& x) {
    Mat3 r;
    for (const auto& [m, c] : x.terms()) {
        Mat3 t = Mat3::id();
        for (int i = 0; i < m.f12; ++i) t = t * Mat3::unit(2, 1);
        if (m.f13) t = t * Mat3::unit(3, 1);
        if (m.f23) t = t * Mat3::unit(3, 2);
        if (t.isZero()) continue;
        t = t * Mat3::diag(QQ::qpow(m.k[0]), QQ::qpow(m.k[1]), QQ::qpow(m.k[2]));
        for (int i = 0; i < m.e12; ++i) t = t * Mat3::unit(1, 2);
        if (m.e13) t = t * Mat3::unit(1, 3);
        if (m.e23) t = t * Mat3::unit(2, 3);
        r += t * c;
    }
    return r;
}

QQ supertrace(const Mat3& m) { return m.at(1, 1) + m.at(2, 2) - m.at(3, 3); }

QQ mu(const El& x) { return supertrace(pi(x)); }

GOp2 GOp2::one() {
    GOp2 g;
    for (int i = 1; i <= 3; ++i) g.at(i, i) = El::one();
    return g;
}

GOp2 operator+(const GOp2& x, const GOp2& y) {
    GOp2 r;
    for (size_t i = 0; i < 9; ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
}

GOp2 operator-(const GOp2& x, const GOp2& y) {
    GOp2 r;
    for (size_t i = 0; i < 9; ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

GOp2 operator*(const GOp2& x, const GOp2& y) {
    GOp2 r;
    for (int i = 1; i <= 3; ++i)
        for (int l = 1; l <= 3; ++l) {
            El acc;
            for (int j = 1; j <= 3; ++j) {
                const El& a = x.at(i, j);
                const El& b = y.at(j, l);
                if (a.isZero() || b.isZero()) continue;
                int sgn = ((indexParity(i) + indexParity(j)) & 1) && b.parity() ? -1 : 1;
                acc += (sgn < 0) ? -(a * b) : a * b;
            }
            r.at(i, l) = std::move(acc);
        }
    return r;
}

}  // namespace qgl21
