#pragma once

#include <algorithm>
#include <ostream>
#include <vector>

#include "error.hpp"
#include "lattice.hpp"
#include "rational.hpp"

namespace tileconn {

/// Eventually periodic digit word: preperiod, then period repeated forever.
struct Witness {
    std::vector<LatticeVec> preperiod;
    std::vector<LatticeVec> period;

    friend bool operator==(const Witness&, const Witness&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const std::vector<LatticeVec>& word) {
    os << '[';
    for (std::size_t i = 0; i < word.size(); ++i) os << (i ? " " : "") << word[i];
    return os << ']';
}

inline std::ostream& operator<<(std::ostream& os, const Witness& w) {
    return os << "pre=" << w.preperiod << " per=" << w.period;
}

/// Exact value of sum_i A^{-i} pre_i + A^{-m} (I - A^{-P})^{-1} sum_j A^{-j} per_j.
inline RationalVec eval_expansion(const CharPoly& poly, const std::vector<LatticeVec>& pre,
                                  const std::vector<LatticeVec>& per) {
    if (!is_expanding(poly))
        throw Error("eval_expansion: " + poly.str() + " is not expanding: " + expanding_diagnostic(poly));
    if (per.empty()) throw Error("eval_expansion: period must be nonempty");
    const RationalMat2 inv = coord_action(poly).inverse();

    RationalVec total;
    RationalMat2 power = RationalMat2::identity();
    for (const auto& d : pre) {
        power = power * inv;
        total += power * d.to_rational();
    }
    const RationalMat2 head = power;

    RationalVec block;
    power = RationalMat2::identity();
    for (const auto& d : per) {
        power = power * inv;
        block += power * d.to_rational();
    }
    // Invertible: the eigenvalues of A^{-P} lie strictly inside the unit disk.
    const RationalMat2 geometric = (RationalMat2::identity() - power).inverse();
    total += head * (geometric * block);
    return total;
}

inline RationalVec eval_expansion(const CharPoly& poly, const Witness& w) {
    return eval_expansion(poly, w.preperiod, w.period);
}

/// Every digit of w lies in D - D and the expansion equals delta exactly.
inline bool verify_witness(const DigitSystem& ds, const LatticeVec& delta, const Witness& w) {
    if (w.period.empty() || !is_expanding(ds.poly)) return false;
    const auto diffs = difference_set(ds);
    auto allowed = [&](const LatticeVec& d) { return std::binary_search(diffs.begin(), diffs.end(), d); };
    if (!std::all_of(w.preperiod.begin(), w.preperiod.end(), allowed)) return false;
    if (!std::all_of(w.period.begin(), w.period.end(), allowed)) return false;
    return eval_expansion(ds.poly, w) == delta.to_rational();
}

} // namespace tileconn
