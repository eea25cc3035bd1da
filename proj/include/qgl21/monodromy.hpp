#pragma once

#include "qgl21/check.hpp"
#include "qgl21/jimbo.hpp"
#include "qgl21/reps.hpp"
#include "qgl21/series.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qgl21 {

// Polynomial in up to three spectral variables, exponents may be
// negative.  Used for the scalar R-matrix and the Yang-Baxter check.
class LaurentPoly3 {
public:
    LaurentPoly3() = default;
    static LaurentPoly3 monomial(const std::array<int, 3>& e, const QQ& c);

    bool isZero() const { return terms_.empty(); }
    void add(const std::array<int, 3>& e, const QQ& c);

    LaurentPoly3 operator-() const;
    LaurentPoly3& operator+=(const LaurentPoly3& o);
    LaurentPoly3& operator-=(const LaurentPoly3& o);
    friend LaurentPoly3 operator+(LaurentPoly3 a, const LaurentPoly3& b) { a += b; return a; }
    friend LaurentPoly3 operator-(LaurentPoly3 a, const LaurentPoly3& b) { a -= b; return a; }
    friend LaurentPoly3 operator*(const LaurentPoly3& a, const LaurentPoly3& b);
    LaurentPoly3 scaled(const QQ& c) const;
    friend bool operator==(const LaurentPoly3&, const LaurentPoly3&) = default;

    std::string str() const;

private:
    std::map<std::array<int, 3>, QQ> terms_;
};

// A power series in z = zeta^s carrying an overall prefactor zeta^p.
// Whole periods are absorbed into the series, so 0 <= p < s always
// holds; sums only make sense when the prefactors agree.
template <class T>
class PrefSeries {
public:
    PrefSeries() = default;
    PrefSeries(int pref, Series<T> ser, int period)
        : p_(pref), ser_(std::move(ser)), s_(period) {
        if (s_ <= 0) throw std::logic_error("prefixed series needs a positive period");
        if (p_ < 0) throw std::logic_error("negative prefactor");
        while (p_ >= s_) {
            p_ -= s_;
            ser_ = ser_.shifted(1);
        }
    }

    int pref() const { return p_; }
    int period() const { return s_; }
    const Series<T>& series() const { return ser_; }

    PrefSeries operator-() const { return PrefSeries(p_, -ser_, s_); }

    friend PrefSeries operator+(const PrefSeries& a, const PrefSeries& b) {
        a.requireSame(b);
        int n = std::min(a.ser_.order(), b.ser_.order());
        if (a.ser_.isZero()) return PrefSeries(b.p_, b.ser_.truncated(n), b.s_);
        if (b.ser_.isZero()) return PrefSeries(a.p_, a.ser_.truncated(n), a.s_);
        if (a.p_ != b.p_) throw std::logic_error("prefactor mismatch in sum");
        return PrefSeries(a.p_, a.ser_ + b.ser_, a.s_);
    }
    friend PrefSeries operator-(const PrefSeries& a, const PrefSeries& b) { return a + (-b); }
    friend PrefSeries operator*(const PrefSeries& a, const PrefSeries& b) {
        a.requireSame(b);
        return PrefSeries(a.p_ + b.p_, a.ser_ * b.ser_, a.s_);
    }

    PrefSeries scaled(const QQ& c) const { return PrefSeries(p_, ser_.scaled(c), s_); }
    PrefSeries inverse() const {
        if (p_ != 0) throw std::logic_error("inverse needs a trivial prefactor");
        return PrefSeries(0, ser_.inverse(), s_);
    }

    friend bool operator==(const PrefSeries& a, const PrefSeries& b) {
        a.requireSame(b);
        if (a.p_ != b.p_) return a.ser_.isZero() && b.ser_.isZero();
        return a.ser_ == b.ser_;
    }

private:
    void requireSame(const PrefSeries& o) const {
        if (s_ <= 0 || o.s_ <= 0) throw std::logic_error("unset prefixed series");
        if (s_ != o.s_) throw std::logic_error("period mismatch");
    }

    int p_ = 0;
    Series<T> ser_;
    int s_ = 0;
};

// 3x3 block of prefixed series; entries sit in the graded tensor
// product with the matrix slot, so the product carries the sign
// (-1)^{([i]+[j])([j]+[l])} like GOp2.
template <class T>
class PrefMat3 {
public:
    PrefSeries<T>& at(int i, int j) { return a_[idx(i, j)]; }
    const PrefSeries<T>& at(int i, int j) const { return a_[idx(i, j)]; }

private:
    static size_t idx(int i, int j) { return static_cast<size_t>(3 * (i - 1) + (j - 1)); }
    std::array<PrefSeries<T>, 9> a_;
};

template <class T>
PrefMat3<T> gradedMul(const PrefMat3<T>& x, const PrefMat3<T>& y) {
    PrefMat3<T> z;
    for (int i = 1; i <= 3; ++i)
        for (int l = 1; l <= 3; ++l) {
            std::optional<PrefSeries<T>> acc;
            for (int j = 1; j <= 3; ++j) {
                int sgn = (indexParity(i) + indexParity(j)) * (indexParity(j) + indexParity(l));
                PrefSeries<T> term = x.at(i, j) * y.at(j, l);
                if (sgn & 1) term = -term;
                acc = acc ? *acc + term : term;
            }
            z.at(i, l) = *acc;
        }
    return z;
}

// The solved linear block: diagonal 1 - q^{2K_i} z (index 3 with the
// sign of the odd direction flipped), single lowering letters above,
// single raising letters below.
PrefMat3<El> solvedO(const Spectral& sp, int order);

// Diagonal Cartan dressing.
PrefMat3<El> cartanD(const Spectral& sp, int order);

// N = O D, entrywise products with the diagonal dressing.
PrefMat3<El> dressedN(const Spectral& sp, int order);

// Gauss blocks built from the loop root vector generating series.
PrefMat3<El> gaussU(const EpsVectors& eps, const Spectral& sp, int order);
PrefMat3<El> gaussV(const EpsVectors& eps, const Spectral& sp, int order);
PrefMat3<El> gaussW(const EpsVectors& eps, const Spectral& sp, int order);

// exp of the central generating series.
PrefSeries<El> expPhi(const EpsVectors& eps, const Spectral& sp, int order);

// The nine entrywise factorization identities expressing the Gauss
// blocks through Schur complements of the solved block, plus the
// assembled matrix identity UVWD = expPhi * N.
std::vector<CheckResult> checkFactorization(const EpsVectors& eps, const Spectral& sp, int order);

// Functional equations for the generating series of the three real
// plus families.
std::vector<CheckResult> checkSeriesRecurrences(const EpsVectors& eps, int order);

// The two quadratic identities tying the primed imaginary series to
// the level-zero minus vectors.
std::vector<CheckResult> checkQuadraticIdentities(const EpsVectors& eps, int order);

// Scalar R-matrix with denominators cleared, first tensor factor in
// variable va, second in vb.
using RMat9 = std::array<std::array<LaurentPoly3, 9>, 9>;
inline size_t idx9(int a, int c) { return static_cast<size_t>(3 * (a - 1) + (c - 1)); }
RMat9 rbarMatrix(const Spectral& sp, int va, int vb);

// Embed a two-leg operator into legs (legA, legB) of a three-fold
// graded tensor product, Koszul signs baked into the matrix entries.
using Mat27 = std::vector<std::vector<LaurentPoly3>>;
Mat27 embedThree(const RMat9& r, int legA, int legB);

bool ybeHolds(const RMat9& r01, const RMat9& r02, const RMat9& r12, std::string* witness = nullptr);

// Yang-Baxter equation for the cleared R-matrix at one spectral choice.
CheckResult checkYangBaxter(const Spectral& sp);

// Consistency of the R-matrix table with the evaluated solved block:
// the cleared table equals zeta_b^s (pi (x) id)(N), and the central
// series evaluates to the scalar that clears against the diagonal
// denominator.
std::vector<CheckResult> checkRMatrixConsistency(const EpsVectors& eps, const Spectral& sp, int order);

// Exchange relation between the R-matrix and two evaluated copies of
// N.  Exact, no truncation.  zeroLowerBlock corrupts N to provide a
// negative control.
CheckResult checkExchange(const Spectral& sp, bool zeroLowerBlock = false);

}  // namespace qgl21
