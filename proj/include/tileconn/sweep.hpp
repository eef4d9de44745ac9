#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "lattice.hpp"
#include "membership.hpp"
#include "parallel.hpp"

namespace tileconn {

struct SweepEntry {
    CharPoly poly;
    std::int64_t k = 0;
    bool connected = false;
    EdgeGraph graph;
    double runtime_ms = 0.0;
};

struct SweepReport {
    std::int64_t k_lo = 0;
    std::int64_t k_hi = 0;
    std::vector<SweepEntry> entries;
    /// connected <=> |k| = 1 for every entry.
    bool theorem_verdict = false;
    std::optional<bool> mirror_verdict;
    std::optional<bool> corollary_verdict;

    std::vector<const SweepEntry*> counterexamples() const {
        std::vector<const SweepEntry*> out;
        for (const auto& e : entries)
            if (e.connected != (std::abs(e.k) == 1)) out.push_back(&e);
        return out;
    }

    std::size_t connected_count() const {
        std::size_t n = 0;
        for (const auto& e : entries) n += e.connected ? 1 : 0;
        return n;
    }
};

inline SweepEntry run_instance(const CharPoly& poly, std::int64_t k) {
    const auto start = std::chrono::steady_clock::now();
    const DigitSystem ds{poly, basic_digits(k)};
    SweepEntry e{poly, k, false, edge_graph(ds), 0.0};
    e.connected = e.graph.connected();
    e.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return e;
}

/// Every expanding polynomial with |q| = 3 against D = {0, v, kAv}, k in [k_lo, k_hi], k != 0.
inline SweepReport sweep_theorem(std::int64_t k_lo, std::int64_t k_hi, unsigned threads = thread_count()) {
    if (k_lo > k_hi) throw Error("sweep: empty k range");
    const auto polys = enumerate_expanding(3);
    std::vector<std::pair<CharPoly, std::int64_t>> jobs;
    for (const auto& poly : polys)
        for (std::int64_t k = k_lo; k <= k_hi; ++k)
            if (k != 0) jobs.emplace_back(poly, k);

    SweepReport report{k_lo, k_hi, std::vector<SweepEntry>(jobs.size()), false, {}, {}};
    parallel_for(jobs.size(), [&](std::size_t i) { report.entries[i] = run_instance(jobs[i].first, jobs[i].second); },
                 threads);
    report.theorem_verdict = report.counterexamples().empty();
    return report;
}

/// is_connected((p,q), {0,v,kAv}) == is_connected((-p,q), {0,v,-kBv}) across the range.
inline bool mirror_check(std::int64_t k_lo, std::int64_t k_hi, unsigned threads = thread_count()) {
    const auto polys = enumerate_expanding(3);
    std::vector<std::pair<CharPoly, std::int64_t>> jobs;
    for (const auto& poly : polys)
        for (std::int64_t k = k_lo; k <= k_hi; ++k)
            if (k != 0) jobs.emplace_back(poly, k);
    std::vector<char> agree(jobs.size(), 0);
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto& [poly, k] = jobs[i];
        const bool lhs = is_connected({poly, basic_digits(k)});
        const bool rhs = is_connected({CharPoly{-poly.p, poly.q}, basic_digits(-k)});
        agree[i] = lhs == rhs;
    }, threads);
    return std::all_of(agree.begin(), agree.end(), [](char c) { return c != 0; });
}

/// {0, v, Av+v} and {0, v, -Av+v} give connected sets for all ten polynomials,
/// and D - D coincides with that of {0, v, -Av} resp. {0, v, Av}.
inline bool corollary_check() {
    const auto diff_of = [](std::vector<LatticeVec> digits) {
        return difference_set(DigitSystem{CharPoly{0, 3}, std::move(digits)});
    };
    if (diff_of({{0, 0}, {1, 0}, {1, 1}}) != diff_of(basic_digits(-1))) return false;
    if (diff_of({{0, 0}, {1, 0}, {1, -1}}) != diff_of(basic_digits(1))) return false;
    for (const auto& poly : enumerate_expanding(3)) {
        if (!is_connected({poly, {{0, 0}, {1, 0}, {1, 1}}})) return false;
        if (!is_connected({poly, {{0, 0}, {1, 0}, {1, -1}}})) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Serialization. Line format:
//
//   tileconn-sweep/1 k=<lo>..<hi>
//   p=<p> q=<q> k=<k> connected=<0|1> edges=<i-j,...|-> missing=<i-j,...|->
//   ...
//   theorem_verdict=<0|1>
//   [mirror_verdict=<0|1>]
//   [corollary_verdict=<0|1>]
//
// The structured format is JSON with schema "tileconn-sweep/1"; see README.
// runtime_ms appears in either format only when timings are requested.

namespace detail {

inline std::string pair_list(const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
    if (pairs.empty()) return "-";
    std::string s;
    for (const auto& [i, j] : pairs) s += (s.empty() ? "" : ",") + std::to_string(i) + "-" + std::to_string(j);
    return s;
}

inline nlohmann::json to_json(const LatticeVec& v) { return nlohmann::json::array({v.l, v.k}); }

inline nlohmann::json to_json(const std::vector<LatticeVec>& word) {
    auto arr = nlohmann::json::array();
    for (const auto& v : word) arr.push_back(to_json(v));
    return arr;
}

} // namespace detail

inline void write_text_report(std::ostream& os, const SweepReport& r, bool timings = false) {
    os << "tileconn-sweep/1 k=" << r.k_lo << ".." << r.k_hi << '\n';
    for (const auto& e : r.entries) {
        std::vector<std::pair<std::size_t, std::size_t>> edges;
        for (const auto& edge : e.graph.edges) edges.emplace_back(edge.from, edge.to);
        os << "p=" << e.poly.p << " q=" << e.poly.q << " k=" << e.k << " connected=" << (e.connected ? 1 : 0)
           << " edges=" << detail::pair_list(edges) << " missing=" << detail::pair_list(e.graph.missing);
        if (timings) os << " runtime_ms=" << e.runtime_ms;
        os << '\n';
    }
    os << "theorem_verdict=" << (r.theorem_verdict ? 1 : 0) << '\n';
    if (r.mirror_verdict) os << "mirror_verdict=" << (*r.mirror_verdict ? 1 : 0) << '\n';
    if (r.corollary_verdict) os << "corollary_verdict=" << (*r.corollary_verdict ? 1 : 0) << '\n';
}

inline nlohmann::json to_json(const SweepReport& r, bool timings = false) {
    using nlohmann::json;
    json entries = json::array();
    for (const auto& e : r.entries) {
        json edges = json::array();
        for (const auto& edge : e.graph.edges)
            edges.push_back({{"i", edge.from},
                             {"j", edge.to},
                             {"delta", detail::to_json(edge.delta)},
                             {"witness",
                              {{"preperiod", detail::to_json(edge.witness.preperiod)},
                               {"period", detail::to_json(edge.witness.period)}}}});
        json missing = json::array();
        for (const auto& [i, j] : e.graph.missing) missing.push_back(json::array({i, j}));
        json entry = {{"p", e.poly.p},
                      {"q", e.poly.q},
                      {"k", e.k},
                      {"digits", detail::to_json(e.graph.vertices)},
                      {"connected", e.connected},
                      {"edges", std::move(edges)},
                      {"missing", std::move(missing)}};
        if (timings) entry["runtime_ms"] = e.runtime_ms;
        entries.push_back(std::move(entry));
    }
    json out = {{"schema", "tileconn-sweep/1"},
                {"k_range", json::array({r.k_lo, r.k_hi})},
                {"entries", std::move(entries)},
                {"theorem_verdict", r.theorem_verdict}};
    if (r.mirror_verdict) out["mirror_verdict"] = *r.mirror_verdict;
    if (r.corollary_verdict) out["corollary_verdict"] = *r.corollary_verdict;
    return out;
}

} // namespace tileconn
