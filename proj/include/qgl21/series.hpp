#pragma once

#include "qgl21/qq.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qgl21 {

// Truncated power series with coefficients in a ring T.  Every value
// carries its own truncation order: coefficients 0..order are known,
// everything above is unknown (not zero).  Binary operations return a
// result valid to the smaller of the two orders.
//
// T needs: default construction (zero), static T::one(), +, -, *,
// unary -, operator*(QQ), isZero(), ==.
template <class T>
class Series {
public:
    Series() = default;
    explicit Series(int order) : ord_(order), c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::logic_error("negative series order");
    }
    static Series constant(const T& v, int order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }
    static Series one(int order) { return constant(T::one(), order); }

    int order() const { return ord_; }
    const T& coeff(int n) const {
        if (n < 0 || n > ord_) throw std::logic_error("series coefficient out of range");
        return c_[static_cast<size_t>(n)];
    }
    void setCoeff(int n, T v) {
        if (n < 0 || n > ord_) throw std::logic_error("series coefficient out of range");
        c_[static_cast<size_t>(n)] = std::move(v);
    }

    bool isZero() const {
        for (const auto& x : c_)
            if (!x.isZero()) return false;
        return true;
    }

    Series truncated(int n) const {
        if (n >= ord_) return *this;
        Series s(n);
        for (int k = 0; k <= n; ++k) s.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
        return s;
    }

    Series operator-() const {
        Series s(*this);
        for (auto& x : s.c_) x = -x;
        return s;
    }

    friend Series operator+(const Series& a, const Series& b) {
        int n = std::min(a.ord_, b.ord_);
        Series s(n);
        for (int k = 0; k <= n; ++k)
            s.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] + b.c_[static_cast<size_t>(k)];
        return s;
    }
    friend Series operator-(const Series& a, const Series& b) {
        int n = std::min(a.ord_, b.ord_);
        Series s(n);
        for (int k = 0; k <= n; ++k)
            s.c_[static_cast<size_t>(k)] = a.c_[static_cast<size_t>(k)] - b.c_[static_cast<size_t>(k)];
        return s;
    }
    friend Series operator*(const Series& a, const Series& b) {
        int n = std::min(a.ord_, b.ord_);
        Series s(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[static_cast<size_t>(i)].isZero()) continue;
            for (int j = 0; i + j <= n; ++j) {
                if (b.c_[static_cast<size_t>(j)].isZero()) continue;
                s.c_[static_cast<size_t>(i + j)] =
                    s.c_[static_cast<size_t>(i + j)] + a.c_[static_cast<size_t>(i)] * b.c_[static_cast<size_t>(j)];
            }
        }
        return s;
    }
    Series& operator+=(const Series& o) { *this = *this + o; return *this; }
    Series& operator-=(const Series& o) { *this = *this - o; return *this; }
    Series& operator*=(const Series& o) { *this = *this * o; return *this; }

    Series scaled(const QQ& c) const {
        Series s(*this);
        for (auto& x : s.c_) x = x * c;
        return s;
    }

    // multiply by x^k; the result is known k orders further out
    Series shifted(int k) const {
        if (k < 0) throw std::logic_error("negative series shift");
        Series s(ord_ + k);
        for (int n = 0; n <= ord_; ++n) s.c_[static_cast<size_t>(n + k)] = c_[static_cast<size_t>(n)];
        return s;
    }

    // substitute x -> c * x
    Series scaledArgument(const QQ& c) const {
        Series s(*this);
        QQ p = QQ::one();
        for (int n = 1; n <= ord_; ++n) {
            p *= c;
            s.c_[static_cast<size_t>(n)] = s.c_[static_cast<size_t>(n)] * p;
        }
        return s;
    }

    // exp of a series with zero constant term
    Series exp() const {
        if (!c_[0].isZero()) throw std::logic_error("series exp needs zero constant term");
        Series res = Series::one(ord_);
        Series term = Series::one(ord_);
        for (int k = 1; k <= ord_; ++k) {
            term = (term * *this).scaled(QQ(1, k));
            res += term;
        }
        return res;
    }

    // log of a series with constant term one
    Series log() const {
        if (!(c_[0] == T::one())) throw std::logic_error("series log needs constant term one");
        Series u = Series::one(ord_) - *this;  // valuation >= 1
        Series res(ord_);
        Series p = Series::one(ord_);
        for (int k = 1; k <= ord_; ++k) {
            p *= u;
            res -= p.scaled(QQ(1, k));
        }
        return res;
    }

    // multiplicative inverse of a series with constant term one
    Series inverse() const {
        if (!(c_[0] == T::one())) throw std::logic_error("series inverse needs constant term one");
        Series u = Series::one(ord_) - *this;
        Series res = Series::one(ord_);
        Series p = Series::one(ord_);
        for (int k = 1; k <= ord_; ++k) {
            p *= u;
            res += p;
        }
        return res;
    }

    // equality of the shared coefficient range
    friend bool operator==(const Series& a, const Series& b) {
        int n = std::min(a.ord_, b.ord_);
        for (int k = 0; k <= n; ++k)
            if (!(a.c_[static_cast<size_t>(k)] == b.c_[static_cast<size_t>(k)])) return false;
        return true;
    }

private:
    int ord_ = 0;
    std::vector<T> c_{T()};
};

}  // namespace qgl21
