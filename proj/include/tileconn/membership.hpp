#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "disjoint_set.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "lattice.hpp"
#include "series.hpp"

namespace tileconn {

/// { (l, k) : |l| <= l_max, |k| <= k_max }.
struct StateBox {
    std::int64_t l_max = 0;
    std::int64_t k_max = 0;

    bool contains(const LatticeVec& s) const { return std::abs(s.l) <= l_max && std::abs(s.k) <= k_max; }
    std::int64_t width() const { return 2 * l_max + 1; }
    std::int64_t height() const { return 2 * k_max + 1; }
    std::int64_t size() const { return width() * height(); }
    StateBox enlarged(std::int64_t by) const { return {l_max + by, k_max + by}; }

    friend bool operator==(const StateBox&, const StateBox&) = default;
};

/// Integer hull of the bound |K| <= c beta, |L| <= K_max + c alpha on T - T,
/// where c = max |k(d') + l(d)| over pairs of difference digits.
inline StateBox state_box(const DigitSystem& ds, const SeriesBounds& bounds) {
    const auto diffs = difference_set(ds);
    std::int64_t k_abs_max = 0, c = 0;
    for (const auto& d : diffs) k_abs_max = std::max(k_abs_max, std::abs(d.k));
    for (const auto& d : diffs)
        for (const auto& e : diffs) c = std::max(c, std::abs(e.k + d.l));
    const BigInt l_max = floor(Rational(k_abs_max) + Rational(c) * bounds.alpha_upper);
    const BigInt k_max = floor(Rational(c) * bounds.beta_upper);
    return {l_max.convert_to<std::int64_t>(), k_max.convert_to<std::int64_t>()};
}

inline StateBox state_box(const DigitSystem& ds) { return state_box(ds, series_sums(ds.poly)); }

struct MembershipOutcome {
    bool member = false;
    std::optional<Witness> witness;
};

/// Greatest fixed point of "has a successor in the box" on the state graph
/// s -> A s - d, d in D - D. A state survives iff it lies in T - T.
class MembershipSolver {
public:
    static constexpr std::int64_t max_states = 50'000'000;

    MembershipSolver(const DigitSystem& ds, const StateBox& box)
        : poly_(ds.poly), action_(coord_action(ds.poly)), box_(box), digits_(difference_set(ds)) {
        if (!is_expanding(poly_))
            throw Error("polynomial " + poly_.str() + " is not expanding: " + expanding_diagnostic(poly_));
        if (box_.l_max < 0 || box_.k_max < 0) throw Error("state box must have nonnegative extents");
        if (box_.width() > max_states / box_.height()) throw Error("state box too large");
        // Witness walks try small digits first, so the zero word is found for 0.
        std::stable_sort(digits_.begin(), digits_.end(), [](const LatticeVec& a, const LatticeVec& b) {
            return std::abs(a.l) + std::abs(a.k) < std::abs(b.l) + std::abs(b.k);
        });
        prune();
    }

    explicit MembershipSolver(const DigitSystem& ds) : MembershipSolver(ds, state_box(ds)) {}

    const StateBox& box() const { return box_; }
    /// D - D in witness order: by l1 norm, then lexicographic.
    const std::vector<LatticeVec>& difference_digits() const { return digits_; }

    bool survives(const LatticeVec& s) const { return box_.contains(s) && alive_[index(s)]; }

    std::int64_t surviving_count() const {
        return static_cast<std::int64_t>(std::count(alive_.begin(), alive_.end(), true));
    }

    std::vector<LatticeVec> surviving_states() const {
        std::vector<LatticeVec> out;
        for (std::int64_t i = 0; i < box_.size(); ++i)
            if (alive_[static_cast<std::size_t>(i)]) out.push_back(state(i));
        return out;
    }

    MembershipOutcome decide(const LatticeVec& delta) const {
        if (!survives(delta)) return {false, std::nullopt};
        return {true, walk(delta)};
    }

private:
    std::size_t index(const LatticeVec& s) const {
        return static_cast<std::size_t>((s.l + box_.l_max) * box_.height() + (s.k + box_.k_max));
    }
    LatticeVec state(std::int64_t i) const {
        return {i / box_.height() - box_.l_max, i % box_.height() - box_.k_max};
    }

    void prune() {
        const auto n = static_cast<std::size_t>(box_.size());
        alive_.assign(n, true);
        std::vector<std::uint32_t> out_degree(n, 0);
        std::vector<std::size_t> dead;
        for (std::size_t i = 0; i < n; ++i) {
            const LatticeVec image = action_(state(static_cast<std::int64_t>(i)));
            for (const auto& d : digits_)
                if (box_.contains(image - d)) ++out_degree[i];
            if (out_degree[i] == 0) {
                alive_[i] = false;
                dead.push_back(i);
            }
        }
        while (!dead.empty()) {
            const LatticeVec t = state(static_cast<std::int64_t>(dead.back()));
            dead.pop_back();
            // Predecessors: A s = t + d, solvable over Z iff q divides the l-coordinate.
            for (const auto& d : digits_) {
                const LatticeVec image = t + d;
                if (image.l % poly_.q != 0) continue;
                const std::int64_t k = -image.l / poly_.q;
                const LatticeVec s{image.k + poly_.p * k, k};
                if (!box_.contains(s)) continue;
                const std::size_t si = index(s);
                if (alive_[si] && --out_degree[si] == 0) {
                    alive_[si] = false;
                    dead.push_back(si);
                }
            }
        }
    }

    Witness walk(const LatticeVec& start) const {
        std::map<LatticeVec, std::size_t> seen{{start, 0}};
        std::vector<LatticeVec> word;
        LatticeVec s = start;
        for (;;) {
            const LatticeVec image = action_(s);
            auto next = std::find_if(digits_.begin(), digits_.end(),
                                     [&](const LatticeVec& d) { return survives(image - d); });
            // Surviving states always have a surviving successor.
            word.push_back(*next);
            s = image - *next;
            auto [it, inserted] = seen.emplace(s, word.size());
            if (!inserted) {
                const auto split = static_cast<std::ptrdiff_t>(it->second);
                return {{word.begin(), word.begin() + split}, {word.begin() + split, word.end()}};
            }
        }
    }

    CharPoly poly_;
    CoordAction action_;
    StateBox box_;
    std::vector<LatticeVec> digits_;
    std::vector<bool> alive_;
};

inline MembershipOutcome decide_membership(const DigitSystem& ds, const LatticeVec& delta) {
    return MembershipSolver(ds).decide(delta);
}

inline MembershipOutcome decide_membership(const DigitSystem& ds, const LatticeVec& delta, const StateBox& box) {
    return MembershipSolver(ds, box).decide(delta);
}

/// Edge {i, j} (i < j) when d_j - d_i lies in T - T, i.e. T + d_i meets T + d_j.
struct Edge {
    std::size_t from = 0;
    std::size_t to = 0;
    LatticeVec delta;
    Witness witness;
};

struct EdgeGraph {
    std::vector<LatticeVec> vertices;
    std::vector<Edge> edges;
    /// Pairs {i, j} that are not edges.
    std::vector<std::pair<std::size_t, std::size_t>> missing;

    bool has_edge(std::size_t i, std::size_t j) const {
        if (i > j) std::swap(i, j);
        return std::any_of(edges.begin(), edges.end(), [&](const Edge& e) { return e.from == i && e.to == j; });
    }

    bool connected() const {
        if (vertices.empty()) return true;
        DisjointSet sets(vertices.size());
        for (const auto& e : edges) sets.unite(e.from, e.to);
        return sets.components() == 1;
    }
};

inline EdgeGraph edge_graph(const DigitSystem& ds, const MembershipSolver& solver) {
    EdgeGraph g;
    g.vertices = ds.digits;
    for (std::size_t i = 0; i < ds.digits.size(); ++i)
        for (std::size_t j = i + 1; j < ds.digits.size(); ++j) {
            const LatticeVec delta = ds.digits[j] - ds.digits[i];
            auto outcome = solver.decide(delta);
            if (outcome.member)
                g.edges.push_back({i, j, delta, std::move(*outcome.witness)});
            else
                g.missing.emplace_back(i, j);
        }
    return g;
}

inline EdgeGraph edge_graph(const DigitSystem& ds) { return edge_graph(ds, MembershipSolver(ds)); }

inline bool is_connected(const DigitSystem& ds) { return edge_graph(ds).connected(); }

} // namespace tileconn
