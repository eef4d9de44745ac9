#pragma once

#include <array>
#include <cstdint>
#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace tileconn {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline std::string to_string(const Rational& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return boost::multiprecision::numerator(r).str();
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Largest integer not exceeding r.
inline BigInt floor(const Rational& r) {
    BigInt n = boost::multiprecision::numerator(r);
    BigInt d = boost::multiprecision::denominator(r);
    BigInt q = n / d; // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

/// A point in (v, Av)-coordinates with exact rational entries.
struct RationalVec {
    Rational l;
    Rational k;

    friend bool operator==(const RationalVec&, const RationalVec&) = default;

    RationalVec& operator+=(const RationalVec& o) {
        l += o.l;
        k += o.k;
        return *this;
    }
    friend RationalVec operator+(RationalVec a, const RationalVec& b) { return a += b; }
    friend RationalVec operator-(const RationalVec& a, const RationalVec& b) {
        return {a.l - b.l, a.k - b.k};
    }

    friend std::ostream& operator<<(std::ostream& os, const RationalVec& v) {
        return os << '(' << to_string(v.l) << ',' << to_string(v.k) << ')';
    }
};

/// 2x2 matrix over the rationals, row-major; acts on column vectors (l, k).
struct RationalMat2 {
    std::array<std::array<Rational, 2>, 2> a{};

    static RationalMat2 identity() {
        RationalMat2 m;
        m.a[0][0] = 1;
        m.a[1][1] = 1;
        return m;
    }

    friend bool operator==(const RationalMat2&, const RationalMat2&) = default;

    friend RationalMat2 operator*(const RationalMat2& x, const RationalMat2& y) {
        RationalMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.a[i][j] = x.a[i][0] * y.a[0][j] + x.a[i][1] * y.a[1][j];
        return r;
    }

    friend RationalVec operator*(const RationalMat2& m, const RationalVec& v) {
        return {m.a[0][0] * v.l + m.a[0][1] * v.k, m.a[1][0] * v.l + m.a[1][1] * v.k};
    }

    friend RationalMat2 operator-(const RationalMat2& x, const RationalMat2& y) {
        RationalMat2 r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.a[i][j] = x.a[i][j] - y.a[i][j];
        return r;
    }

    Rational det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

    /// Inverse via the adjugate; caller guarantees det() != 0.
    RationalMat2 inverse() const {
        const Rational d = det();
        RationalMat2 r;
        r.a[0][0] = a[1][1] / d;
        r.a[0][1] = -a[0][1] / d;
        r.a[1][0] = -a[1][0] / d;
        r.a[1][1] = a[0][0] / d;
        return r;
    }

    /// Maximum absolute row sum (the operator norm induced by the max-norm).
    Rational max_norm() const {
        Rational r0 = abs(a[0][0]) + abs(a[0][1]);
        Rational r1 = abs(a[1][0]) + abs(a[1][1]);
        return r0 < r1 ? r1 : r0;
    }
};

} // namespace tileconn
