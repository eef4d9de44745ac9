#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace tileconn {

/// Coordinates of A^{-i} v = alpha_i v + beta_i Av.
struct SeriesTerm {
    std::int64_t index = 0;
    Rational alpha;
    Rational beta;
};

/// Certified upper bounds on sum |alpha_i| and sum |beta_i|.
struct SeriesBounds {
    Rational alpha_upper;
    Rational beta_upper;
    std::int64_t terms_used = 0;
    // Bounds sum_{i > terms_used} max(|alpha_i|, |beta_i|); added to both partial sums.
    Rational tail_bound;
    // Exponent m with ||A^{-m}||_max < 1 and that norm, used for the tail.
    std::int64_t contraction_power = 0;
    Rational contraction_norm;
};

/// First n terms from q a_{i+2} + p a_{i+1} + a_i = 0 with the exact initial values.
inline std::vector<SeriesTerm> alpha_beta(const CharPoly& poly, std::int64_t n) {
    if (poly.q == 0) throw Error("alpha_beta: q must be nonzero");
    std::vector<SeriesTerm> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(n, 0)));
    const Rational p(poly.p), q(poly.q);
    for (std::int64_t i = 1; i <= n; ++i) {
        SeriesTerm t{i, {}, {}};
        if (i == 1) {
            t.alpha = -p / q;
            t.beta = Rational(-1) / q;
        } else if (i == 2) {
            t.alpha = (p * p - q) / (q * q);
            t.beta = p / (q * q);
        } else {
            const auto& a1 = out[out.size() - 1];
            const auto& a0 = out[out.size() - 2];
            t.alpha = -(p * a1.alpha + a0.alpha) / q;
            t.beta = -(p * a1.beta + a0.beta) / q;
        }
        out.push_back(std::move(t));
    }
    return out;
}

/// Compares the root-based closed form (floating point) against the exact
/// recurrence for i <= n. Throws when the discriminant vanishes.
inline bool closed_form_check(const CharPoly& poly, std::int64_t n, double tol = 1e-9) {
    if (poly.discriminant() == 0) throw Error("closed_form_check: discriminant is zero");
    using C = std::complex<double>;
    const double p = static_cast<double>(poly.p);
    const double q = static_cast<double>(poly.q);
    const C sqrt_disc = std::sqrt(C(static_cast<double>(poly.discriminant()), 0.0));
    // Roots of q y^2 + p y + 1 = 0.
    const C y1 = (-p + sqrt_disc) / (2.0 * q);
    const C y2 = (-p - sqrt_disc) / (2.0 * q);
    const auto terms = alpha_beta(poly, n);
    for (const auto& t : terms) {
        const double i = static_cast<double>(t.index);
        const C alpha = q * (std::pow(y1, i + 1.0) - std::pow(y2, i + 1.0)) / sqrt_disc;
        const C beta = -(std::pow(y1, i) - std::pow(y2, i)) / sqrt_disc;
        if (std::abs(alpha - C(to_double(t.alpha), 0.0)) > tol) return false;
        if (std::abs(beta - C(to_double(t.beta), 0.0)) > tol) return false;
    }
    return true;
}

namespace detail {

// Smallest m >= 1 with ||A^{-m}||_max < 1 (exists because poly is expanding).
inline std::pair<std::int64_t, Rational> contraction(const CharPoly& poly) {
    const RationalMat2 inv = coord_action(poly).inverse();
    RationalMat2 power = inv;
    for (std::int64_t m = 1; m <= 4096; ++m) {
        Rational norm = power.max_norm();
        if (norm < 1) return {m, norm};
        power = power * inv;
    }
    throw Error("no contracting power of A^{-1} found for " + poly.str());
}

inline Rational vec_max_norm(const SeriesTerm& t) {
    Rational a = abs(t.alpha), b = abs(t.beta);
    return a < b ? b : a;
}

inline SeriesBounds bounds_at(const std::vector<SeriesTerm>& terms, std::int64_t n,
                              std::int64_t m, const Rational& rho) {
    // Term i = n + r + j m satisfies ||x_i|| <= rho^j ||x_{n+r}||, r = 1..m.
    SeriesBounds b;
    b.terms_used = n;
    b.contraction_power = m;
    b.contraction_norm = rho;
    Rational window = 0;
    for (std::int64_t r = 1; r <= m; ++r) window += vec_max_norm(terms[static_cast<std::size_t>(n + r - 1)]);
    b.tail_bound = window / (Rational(1) - rho);
    for (std::int64_t i = 0; i < n; ++i) {
        b.alpha_upper += abs(terms[static_cast<std::size_t>(i)].alpha);
        b.beta_upper += abs(terms[static_cast<std::size_t>(i)].beta);
    }
    b.alpha_upper += b.tail_bound;
    b.beta_upper += b.tail_bound;
    return b;
}

} // namespace detail

/// Bounds from exactly n summed terms plus the certified tail.
inline SeriesBounds series_sums(const CharPoly& poly, std::int64_t n) {
    if (!is_expanding(poly)) throw Error("series_sums: " + poly.str() + " is not expanding");
    auto [m, rho] = detail::contraction(poly);
    const auto terms = alpha_beta(poly, n + m);
    return detail::bounds_at(terms, n, m, rho);
}

/// Adaptive: smallest n whose certified tail is below tail_target.
inline SeriesBounds series_sums(const CharPoly& poly, const Rational& tail_target = Rational(1, 1000000)) {
    if (!is_expanding(poly)) throw Error("series_sums: " + poly.str() + " is not expanding");
    auto [m, rho] = detail::contraction(poly);
    std::int64_t n = 1;
    auto terms = alpha_beta(poly, 64 + m);
    for (;;) {
        if (static_cast<std::int64_t>(terms.size()) < n + m)
            terms = alpha_beta(poly, 2 * (n + m));
        Rational window = 0;
        for (std::int64_t r = 1; r <= m; ++r)
            window += detail::vec_max_norm(terms[static_cast<std::size_t>(n + r - 1)]);
        if (window / (Rational(1) - rho) < tail_target) return detail::bounds_at(terms, n, m, rho);
        ++n;
    }
}

} // namespace tileconn
