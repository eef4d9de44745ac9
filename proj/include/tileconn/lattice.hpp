#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace tileconn {

/// Monic quadratic x^2 + p x + q, the characteristic polynomial of A.
struct CharPoly {
    std::int64_t p = 0;
    std::int64_t q = 0;

    std::int64_t discriminant() const { return p * p - 4 * q; }
    std::int64_t eval(std::int64_t x) const { return x * x + p * x + q; }

    friend bool operator==(const CharPoly&, const CharPoly&) = default;
    /// Ordered by (q, p).
    friend auto operator<=>(const CharPoly& a, const CharPoly& b) {
        if (auto c = a.q <=> b.q; c != 0) return c;
        return a.p <=> b.p;
    }

    std::string str() const {
        std::string s = "x^2";
        if (p != 0) s += (p > 0 ? "+" : "-") + (std::abs(p) == 1 ? std::string() : std::to_string(std::abs(p))) + "x";
        s += (q > 0 ? "+" : "-") + std::to_string(std::abs(q));
        return s;
    }
};

/// l*v + k*Av, exact integer coordinates in the basis {v, Av}.
struct LatticeVec {
    std::int64_t l = 0;
    std::int64_t k = 0;

    friend bool operator==(const LatticeVec&, const LatticeVec&) = default;
    friend auto operator<=>(const LatticeVec&, const LatticeVec&) = default;

    LatticeVec operator-() const { return {-l, -k}; }
    friend LatticeVec operator+(LatticeVec a, LatticeVec b) { return {a.l + b.l, a.k + b.k}; }
    friend LatticeVec operator-(LatticeVec a, LatticeVec b) { return {a.l - b.l, a.k - b.k}; }

    RationalVec to_rational() const { return {Rational(l), Rational(k)}; }

    friend std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
        return os << '(' << v.l << ',' << v.k << ')';
    }
};

/// Multiplication by A on (v, Av)-coordinates: v -> Av, Av -> -q v - p Av.
struct CoordAction {
    // Row-major integer matrix acting on column (l, k).
    std::int64_t a00 = 0, a01 = 0, a10 = 0, a11 = 0;

    LatticeVec operator()(LatticeVec x) const {
        return {a00 * x.l + a01 * x.k, a10 * x.l + a11 * x.k};
    }

    RationalMat2 to_rational() const {
        RationalMat2 m;
        m.a[0][0] = a00;
        m.a[0][1] = a01;
        m.a[1][0] = a10;
        m.a[1][1] = a11;
        return m;
    }

    /// Exact inverse; det = q, so entries have denominator dividing q.
    RationalMat2 inverse() const { return to_rational().inverse(); }
};

inline CoordAction coord_action(const CharPoly& poly) {
    return {0, -poly.q, 1, -poly.p};
}

/// Both roots of x^2 + p x + q have modulus > 1. Integer sign tests only.
inline bool is_expanding(const CharPoly& poly) {
    if (poly.q == 0) return false;
    if (poly.discriminant() < 0) return poly.q >= 2; // complex pair, |root|^2 = q
    const std::int64_t at_one = poly.eval(1);
    const std::int64_t at_minus_one = poly.eval(-1);
    // Real roots r1 <= r2. Either they straddle [-1, 1] ...
    if (at_one < 0 && at_minus_one < 0) return true;
    // ... or both lie on one side of it, with the vertex -p/2 outside [-1, 1].
    return at_one > 0 && at_minus_one > 0 && std::abs(poly.p) > 2;
}

/// Human-readable reason why a polynomial fails is_expanding.
inline std::string expanding_diagnostic(const CharPoly& poly) {
    if (poly.q == 0) return "constant coefficient q must be nonzero";
    if (poly.discriminant() < 0)
        return "complex roots have modulus sqrt(" + std::to_string(poly.q) + ") <= 1";
    if (poly.eval(1) == 0 || poly.eval(-1) == 0) return "f has a root at +1 or -1";
    return "f has a real root in (-1, 1)";
}

/// All expanding x^2 + p x + q with |q| = det_abs, ordered by (q, p).
inline std::vector<CharPoly> enumerate_expanding(std::int64_t det_abs) {
    if (det_abs < 2) throw Error("enumerate_expanding: det_abs must be >= 2");
    std::vector<CharPoly> out;
    // For expanding f, |p| = |r1 + r2| < |r1 r2| + 1 = det_abs + 1.
    for (std::int64_t q : {-det_abs, det_abs})
        for (std::int64_t p = -det_abs - 1; p <= det_abs + 1; ++p)
            if (CharPoly c{p, q}; is_expanding(c)) out.push_back(c);
    return out;
}

/// A characteristic polynomial together with a digit list in lattice coordinates.
struct DigitSystem {
    CharPoly poly;
    std::vector<LatticeVec> digits;

    /// Throws Error unless digits are distinct, contain 0, and poly is expanding.
    void validate() const {
        if (!is_expanding(poly))
            throw Error("polynomial " + poly.str() + " is not expanding: " + expanding_diagnostic(poly));
        if (digits.empty()) throw Error("digit set is empty");
        std::set<LatticeVec> seen(digits.begin(), digits.end());
        if (seen.size() != digits.size()) throw Error("digit set contains repeated digits");
        if (!seen.contains(LatticeVec{0, 0})) throw Error("digit set must contain the zero vector");
    }
};

/// D - D, deduplicated, sorted lexicographically on (l, k).
inline std::vector<LatticeVec> difference_set(const DigitSystem& ds) {
    std::set<LatticeVec> diffs;
    for (const auto& a : ds.digits)
        for (const auto& b : ds.digits) diffs.insert(a - b);
    return {diffs.begin(), diffs.end()};
}

/// {0, v, k Av}.
inline std::vector<LatticeVec> basic_digits(std::int64_t k) {
    if (k == 0) throw Error("k must be nonzero: {0, v, 0} is degenerate");
    return {{0, 0}, {1, 0}, {0, k}};
}

} // namespace tileconn
