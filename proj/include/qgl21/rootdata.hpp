#pragma once

#include <array>
#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qgl21 {

// Parity of the weight-space index i in {1,2,3}: the third direction is odd.
inline constexpr int indexParity(int i) { return i == 3 ? 1 : 0; }

// Finite weights in simple-root coordinates x = x1*alpha_1 + x2*alpha_2.
using FWeight = std::array<int, 2>;

// Symmetrized bilinear form in simple-root coordinates:
// B = ((2,-1),(-1,0)).
inline int pairing(const FWeight& x, const FWeight& y) {
    return 2 * x[0] * y[0] - x[0] * y[1] - x[1] * y[0];
}

// Affine weights as coordinates (c0, c1, c2) in the affine simple roots;
// delta = (1,1,1).
using AWeight = std::array<int, 3>;

inline FWeight finiteImage(const AWeight& c) {
    return {c[1] - c[0], c[2] - c[0]};
}

inline int pairingAffine(const AWeight& x, const AWeight& y) {
    return pairing(finiteImage(x), finiteImage(y));
}

inline int parityAffine(const AWeight& x) { return (x[0] + x[2]) & 1; }

inline bool inQPlus(const FWeight& w) {
    return w[0] >= 0 && w[1] >= 0 && (w[0] != 0 || w[1] != 0);
}
inline bool inQMinus(const FWeight& w) {
    return w[0] <= 0 && w[1] <= 0 && (w[0] != 0 || w[1] != 0);
}
inline bool inQPlusAffine(const AWeight& w) {
    return w[0] >= 0 && w[1] >= 0 && w[2] >= 0 && (w[0] != 0 || w[1] != 0 || w[2] != 0);
}
inline bool inQMinusAffine(const AWeight& w) {
    return w[0] <= 0 && w[1] <= 0 && w[2] <= 0 && (w[0] != 0 || w[1] != 0 || w[2] != 0);
}

// Positive roots of the loop superalgebra, grouped into families.
//   RealPlus  ij, n : alpha_ij + n delta,          n >= 0
//   RealMinus ij, n : (delta - alpha_ij) + n delta, n >= 0
//   Imag      tag, n: n delta with tag in {0,1} naming alpha_1 / alpha_2, n >= 1
struct LRoot {
    enum Kind { RealPlus, RealMinus, Imag };
    Kind kind;
    int ij;  // 0: 12-family, 1: 13-family, 2: 23-family; for Imag the tag
    int n;
    friend auto operator<=>(const LRoot&, const LRoot&) = default;
};

inline AWeight rootAWeight(int ij) {
    switch (ij) {
        case 0: return {0, 1, 0};
        case 1: return {0, 1, 1};
        case 2: return {0, 0, 1};
    }
    throw std::logic_error("bad root family");
}

inline AWeight lrootWeight(const LRoot& r) {
    AWeight d{1, 1, 1};
    AWeight a = r.kind == LRoot::Imag ? AWeight{0, 0, 0} : rootAWeight(r.ij);
    AWeight w{};
    int shift = r.n;
    if (r.kind == LRoot::RealMinus) ++shift;
    for (int i = 0; i < 3; ++i) {
        int ai = r.kind == LRoot::RealMinus ? -a[i] : a[i];
        w[i] = ai + shift * d[i];
    }
    return w;
}

inline int lrootParity(const LRoot& r) { return parityAffine(lrootWeight(r)); }

// The fixed normal order on positive loop roots:
//   plus families first, 12-family before 13 before 23, ascending n;
//   imaginary roots in the middle;
//   minus families last, 23-family before 12 before 13, descending n.
inline bool normalLess(const LRoot& a, const LRoot& b) {
    auto block = [](const LRoot& r) {
        return r.kind == LRoot::RealPlus ? 0 : (r.kind == LRoot::Imag ? 1 : 2);
    };
    if (block(a) != block(b)) return block(a) < block(b);
    switch (a.kind) {
        case LRoot::RealPlus:
            if (a.ij != b.ij) return a.ij < b.ij;
            return a.n < b.n;
        case LRoot::Imag:
            if (a.ij != b.ij) return a.ij < b.ij;
            return a.n < b.n;
        case LRoot::RealMinus: {
            auto fam = [](int ij) { return ij == 2 ? 0 : (ij == 0 ? 1 : 2); };
            if (fam(a.ij) != fam(b.ij)) return fam(a.ij) < fam(b.ij);
            return a.n > b.n;
        }
    }
    return false;
}

inline std::string lrootName(const LRoot& r) {
    static const char* fam[3] = {"a12", "a13", "a23"};
    switch (r.kind) {
        case LRoot::RealPlus:
            return std::string(fam[r.ij]) + (r.n ? "+" + std::to_string(r.n) + "d" : "");
        case LRoot::RealMinus:
            return "d-" + std::string(fam[r.ij]) + (r.n ? "+" + std::to_string(r.n) + "d" : "");
        case LRoot::Imag:
            return std::to_string(r.n) + "d," + (r.ij == 0 ? "a1" : "a2");
    }
    return "?";
}

// Spectral weights attached to the three affine simple roots.
struct Spectral {
    int s0 = 1, s1 = 1, s2 = 1;
    int s() const { return s0 + s1 + s2; }
    int sified(int ij) const {  // degree of alpha_ij
        switch (ij) {
            case 0: return s1;
            case 1: return s1 + s2;
            case 2: return s2;
        }
        throw std::logic_error("bad root family");
    }
    // zeta-degree of the root vector attached to a positive loop root
    int degree(const LRoot& r) const {
        switch (r.kind) {
            case LRoot::RealPlus: return sified(r.ij) + r.n * s();
            case LRoot::RealMinus: return (s() - sified(r.ij)) + r.n * s();
            case LRoot::Imag: return r.n * s();
        }
        throw std::logic_error("bad root kind");
    }
};

}  // namespace qgl21
