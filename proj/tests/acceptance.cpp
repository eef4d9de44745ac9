// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "tileconn.hpp"

using namespace tileconn;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, const std::function<Outcome()>& body) {
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << name << " -- " << o.detail << std::endl;
}

const Rational kMillionth(1, 1'000'000);
const Rational kTrillionth(1, 1'000'000'000'000);

// Calibrated once (512x512, margin 0.05): depth 12 is the smallest depth at
// which the k=1 rasters of x^2+3 and x^2+x+3 are a single 8-connected component.
constexpr int kFigureDepth = 12;
constexpr int kFigureSize = 512;

struct FigureCase {
    CharPoly poly;
    std::int64_t k;
    std::uint64_t hash;
};

const FigureCase kFigures[] = {
    {{0, 3}, 1, 0x64fa5f6db54f1dabULL},
    {{0, 3}, 2, 0x4ae7455f07abb1c0ULL},
    {{1, 3}, 1, 0x2f494f00f8bfe92dULL},
    {{1, 3}, 2, 0x68b3cebb59a170a3ULL},
};

std::string hex(std::uint64_t h) {
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

} // namespace

int main() {
    criterion(1, "connected iff |k|=1 over all |q|=3 polynomials, k in [-6,6]", [] {
        const auto start = std::chrono::steady_clock::now();
        const auto r = sweep_theorem(-6, 6);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::size_t connected = r.connected_count();
        bool iff = true;
        for (const auto& e : r.entries) iff = iff && (e.connected == (std::abs(e.k) == 1));
        std::ostringstream d;
        d << r.entries.size() << " entries, " << connected << " connected, " << r.entries.size() - connected
          << " disconnected, " << secs << " s";
        for (const auto* e : r.counterexamples()) d << "; counterexample " << e->poly.str() << " k=" << e->k;
        return Outcome{iff && r.theorem_verdict && r.entries.size() == 120 && connected == 20 && secs < 60.0, d.str()};
    });

    criterion(2, "exactly ten expanding polynomials with |q|=3", [] {
        const auto polys = enumerate_expanding(3);
        const std::set<CharPoly> expected{{0, 3}, {0, -3}, {1, 3}, {-1, 3}, {2, 3},
                                          {-2, 3}, {3, 3}, {-3, 3}, {1, -3}, {-1, -3}};
        std::string list;
        for (const auto& f : polys) list += f.str() + " ";
        return Outcome{polys.size() == 10 && std::set<CharPoly>(polys.begin(), polys.end()) == expected, list};
    });

    criterion(3, "certified bounds on sum|alpha_i|, sum|beta_i|", [] {
        struct Target {
            std::int64_t p, q;
            Rational alpha_lt, beta_lt;
        };
        const Target strict[] = {{1, 3, Rational(88, 100), Rational(63, 100)},  {-1, 3, Rational(88, 100), Rational(63, 100)},
                                 {2, 3, Rational(117, 100), Rational(73, 100)}, {-2, 3, Rational(117, 100), Rational(73, 100)},
                                 {3, 3, Rational(224, 100), Rational(108, 100)}, {-3, 3, Rational(224, 100), Rational(108, 100)}};
        bool ok = true;
        std::ostringstream d;
        for (const auto& t : strict) {
            const auto b = series_sums(CharPoly{t.p, t.q});
            ok = ok && b.alpha_upper < t.alpha_lt && b.beta_upper < t.beta_lt;
            d << CharPoly{t.p, t.q}.str() << ": " << to_double(b.alpha_upper) << "/" << to_double(b.beta_upper) << "; ";
        }
        for (std::int64_t p : {1, -1}) {
            const auto b = series_sums(CharPoly{p, -3});
            ok = ok && b.alpha_upper >= 2 && b.alpha_upper - 2 <= kMillionth && b.beta_upper >= 1 &&
                 b.beta_upper - 1 <= kMillionth;
            d << CharPoly{p, -3}.str() << ": 2+" << to_double(b.alpha_upper - 2) << "/1+" << to_double(b.beta_upper - 1)
              << "; ";
        }
        return Outcome{ok, d.str()};
    });

    criterion(4, "sign-mirror identities exact for j<=15, bounds agree within 1e-12", [] {
        bool ok = true;
        int checked = 0;
        for (const auto& f : enumerate_expanding(3)) {
            const auto a = alpha_beta(f, 30);
            const auto m = alpha_beta({-f.p, f.q}, 30);
            for (std::size_t j = 1; j <= 15; ++j, ++checked) {
                const std::size_t at_2j = 2 * j - 1, at_2j_minus_1 = 2 * j - 2;
                ok = ok && m[at_2j].alpha == a[at_2j].alpha && m[at_2j_minus_1].alpha == -a[at_2j_minus_1].alpha &&
                     m[at_2j].beta == -a[at_2j].beta && m[at_2j_minus_1].beta == a[at_2j_minus_1].beta;
            }
            const auto ba = series_sums(f), bm = series_sums({-f.p, f.q});
            ok = ok && abs(ba.alpha_upper - bm.alpha_upper) < kTrillionth && abs(ba.beta_upper - bm.beta_upper) < kTrillionth;
        }
        return Outcome{ok, std::to_string(checked) + " (poly, j) pairs"};
    });

    criterion(5, "reference expansions evaluate exactly and targets are decided members", [] {
        const auto corpus = reference_expansions();
        int good = 0;
        std::string bad;
        for (const auto& item : corpus) {
            const auto ds = item.digit_system();
            const bool exact = eval_expansion(item.poly, item.word) == item.target.to_rational();
            const bool witness = !item.uses_difference_digits || verify_witness(ds, item.target, item.word);
            const bool member = decide_membership(ds, item.target).member;
            if (exact && witness && member)
                ++good;
            else
                bad += " [" + item.label + "]";
        }
        return Outcome{good == static_cast<int>(corpus.size()) && corpus.size() >= 14,
                       std::to_string(good) + "/" + std::to_string(corpus.size()) + " verified" + bad};
    });

    criterion(6, "{0,v,Av+v} and {0,v,-Av+v} connected for all ten polynomials", [] {
        return Outcome{corollary_check(), "20 instances plus difference-set identities"};
    });

    criterion(7, "verdicts agree between (p,q,k) and (-p,q,-k) on k in [-6,6]", [] {
        return Outcome{mirror_check(-6, 6), "120 pairs"};
    });

    criterion(8, "decider soundness: witness round-trip, box +2 robustness, negation symmetry", [] {
        std::int64_t checks = 0;
        bool ok = true;
        auto check_instance = [&](const DigitSystem& ds, auto&& deltas) {
            const MembershipSolver solver(ds);
            const MembershipSolver wide(ds, solver.box().enlarged(2));
            for (const LatticeVec& delta : deltas(wide.box())) {
                const auto out = solver.decide(delta);
                ok = ok && out.member == wide.decide(delta).member;
                ok = ok && out.member == solver.decide(-delta).member;
                ok = ok && out.member == out.witness.has_value();
                if (out.member) ok = ok && verify_witness(ds, delta, *out.witness);
                ++checks;
            }
        };
        auto whole_box = [](const StateBox& b) {
            std::vector<LatticeVec> all;
            for (std::int64_t l = -b.l_max; l <= b.l_max; ++l)
                for (std::int64_t k = -b.k_max; k <= b.k_max; ++k) all.push_back({l, k});
            return all;
        };
        // Every sweep instance, every state of the enlarged box.
        for (const auto& e : sweep_theorem(-6, 6).entries) {
            const DigitSystem ds{e.poly, basic_digits(e.k)};
            for (const auto& edge : e.graph.edges) ok = ok && verify_witness(ds, edge.delta, edge.witness);
            check_instance(ds, whole_box);
        }
        const std::int64_t sweep_checks = checks;
        // Generated instances: |q| in 2..5, three digits with coordinates in [-3, 3].
        std::vector<CharPoly> polys;
        for (std::int64_t d = 2; d <= 5; ++d)
            for (const auto& f : enumerate_expanding(d)) polys.push_back(f);
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<std::size_t> pick(0, polys.size() - 1);
        std::uniform_int_distribution<std::int64_t> coord(-3, 3);
        for (int trial = 0; trial < 200; ++trial) {
            DigitSystem ds{polys[pick(rng)], {{0, 0}}};
            while (ds.digits.size() < 3) {
                LatticeVec d{coord(rng), coord(rng)};
                if (std::find(ds.digits.begin(), ds.digits.end(), d) == ds.digits.end()) ds.digits.push_back(d);
            }
            check_instance(ds, [&](const StateBox& b) {
                std::uniform_int_distribution<std::int64_t> l(-b.l_max, b.l_max), k(-b.k_max, b.k_max);
                std::vector<LatticeVec> sample;
                for (int j = 0; j < 10; ++j) sample.push_back({l(rng), k(rng)});
                return sample;
            });
        }
        const std::int64_t generated = checks - sweep_checks;
        return Outcome{ok && generated >= 1000,
                       std::to_string(sweep_checks) + " sweep states, " + std::to_string(generated) + " generated cases"};
    });

    criterion(9, "figure rasters: component structure and pinned hashes", [] {
        bool ok = true;
        std::ostringstream d;
        const auto dir = std::filesystem::temp_directory_path() / "tileconn_acceptance";
        std::filesystem::create_directories(dir);
        for (const auto& fig : kFigures) {
            RenderConfig cfg;
            cfg.poly = fig.poly;
            cfg.digits = basic_digits(fig.k);
            cfg.depth = kFigureDepth;
            cfg.width = cfg.height = kFigureSize;
            const ImageGrid grid = rasterize(cfg);
            const std::size_t parts = grid.components();
            ok = ok && (fig.k == 1 ? parts == 1 : parts >= 2);

            const auto path = (dir / default_image_name(fig.poly, fig.k, kFigureDepth)).string();
            auto slurp = [&] {
                write_image(rasterize(cfg), path);
                std::ifstream in(path, std::ios::binary);
                std::ostringstream ss;
                ss << in.rdbuf();
                return ss.str();
            };
            const std::string first = slurp(), second = slurp();
            const std::uint64_t h = fnv1a64(first);
            ok = ok && first == second && first == encode_ppm(grid) && h == fig.hash;
            d << fig.poly.str() << " k=" << fig.k << ": " << parts << " components, " << hex(h) << "; ";
        }
        std::filesystem::remove_all(dir);
        return Outcome{ok, d.str()};
    });

    std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAILED") << std::endl;
    return failures == 0 ? 0 : 1;
}
