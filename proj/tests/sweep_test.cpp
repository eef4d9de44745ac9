#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "tileconn/sweep.hpp"

using namespace tileconn;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string golden(const std::string& name) { return read_file(std::string(TILECONN_GOLDEN_DIR) + "/" + name); }

SweepReport full_sweep(std::int64_t lo, std::int64_t hi, unsigned threads) {
    SweepReport r = sweep_theorem(lo, hi, threads);
    r.mirror_verdict = mirror_check(lo, hi, threads);
    r.corollary_verdict = corollary_check();
    return r;
}

std::string text(const SweepReport& r) {
    std::ostringstream os;
    write_text_report(os, r);
    return os.str();
}

} // namespace

TEST(SweepTheorem, FiveByFive) {
    const auto r = sweep_theorem(-5, 5);
    EXPECT_EQ(r.entries.size(), 100u);
    EXPECT_EQ(r.connected_count(), 20u);
    EXPECT_TRUE(r.theorem_verdict);
    EXPECT_TRUE(r.counterexamples().empty());
}

TEST(SweepTheorem, SingleK) {
    const auto two = sweep_theorem(2, 2);
    EXPECT_EQ(two.entries.size(), 10u);
    EXPECT_EQ(two.connected_count(), 0u);
    const auto one = sweep_theorem(1, 1);
    EXPECT_EQ(one.entries.size(), 10u);
    EXPECT_EQ(one.connected_count(), 10u);
    EXPECT_THROW(sweep_theorem(3, 2), Error);
}

TEST(SweepTheorem, OrderedByPolynomialThenK) {
    const auto r = sweep_theorem(-2, 2);
    for (std::size_t i = 1; i < r.entries.size(); ++i) {
        const auto& a = r.entries[i - 1];
        const auto& b = r.entries[i];
        EXPECT_TRUE(a.poly < b.poly || (a.poly == b.poly && a.k < b.k));
    }
}

TEST(SweepTheorem, ConnectedEntriesCarryVerifiedSpanningWitnesses) {
    for (const auto& e : sweep_theorem(-3, 3).entries) {
        if (!e.connected) continue;
        const DigitSystem ds{e.poly, basic_digits(e.k)};
        for (const auto& edge : e.graph.edges) EXPECT_TRUE(verify_witness(ds, edge.delta, edge.witness));
        EXPECT_GE(e.graph.edges.size(), 2u);
    }
}

TEST(MirrorCheck, Examples) {
    EXPECT_TRUE(mirror_check(-5, 5));
    EXPECT_TRUE(is_connected({{1, 3}, basic_digits(1)}));
    EXPECT_TRUE(is_connected({{-1, 3}, basic_digits(-1)}));
    EXPECT_FALSE(is_connected({{3, 3}, basic_digits(2)}));
    EXPECT_FALSE(is_connected({{-3, 3}, basic_digits(-2)}));
}

TEST(CorollaryCheck, Holds) { EXPECT_TRUE(corollary_check()); }

TEST(SweepReport, DeterministicAcrossThreadCounts) {
    const auto serial = full_sweep(-4, 4, 1);
    const auto threaded = full_sweep(-4, 4, 4);
    EXPECT_EQ(text(serial), text(threaded));
    EXPECT_EQ(to_json(serial).dump(), to_json(threaded).dump());
    EXPECT_EQ(text(serial), text(full_sweep(-4, 4, 3)));
}

TEST(SweepReport, MatchesGoldenText) { EXPECT_EQ(text(full_sweep(1, 2, 2)), golden("sweep_1_2.txt")); }

TEST(SweepReport, MatchesGoldenJson) {
    EXPECT_EQ(to_json(full_sweep(1, 2, 2)).dump(2) + "\n", golden("sweep_1_2.json"));
}

TEST(SweepReport, TimingsOnlyOnRequest) {
    const auto r = sweep_theorem(1, 1);
    EXPECT_EQ(text(r).find("runtime_ms"), std::string::npos);
    std::ostringstream os;
    write_text_report(os, r, true);
    EXPECT_NE(os.str().find("runtime_ms="), std::string::npos);
    EXPECT_TRUE(to_json(r, true)["entries"][0].contains("runtime_ms"));
    EXPECT_FALSE(to_json(r)["entries"][0].contains("runtime_ms"));
}

TEST(SweepReport, JsonSchemaFields) {
    const auto j = to_json(full_sweep(1, 1, 1));
    EXPECT_EQ(j["schema"], "tileconn-sweep/1");
    EXPECT_EQ(j["entries"].size(), 10u);
    const auto& e = j["entries"][0];
    for (const char* key : {"p", "q", "k", "digits", "connected", "edges", "missing"}) EXPECT_TRUE(e.contains(key)) << key;
    const auto& edge = e["edges"][0];
    for (const char* key : {"i", "j", "delta", "witness"}) EXPECT_TRUE(edge.contains(key)) << key;
    EXPECT_TRUE(edge["witness"].contains("preperiod"));
    EXPECT_TRUE(edge["witness"].contains("period"));
    EXPECT_TRUE(j["theorem_verdict"].get<bool>());
}
