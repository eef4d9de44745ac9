#pragma once

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "error.hpp"
#include "expansion.hpp"
#include "lattice.hpp"
#include "membership.hpp"
#include "reference_expansions.hpp"
#include "render.hpp"
#include "series.hpp"
#include "sweep.hpp"

namespace tileconn::cli {

inline std::int64_t parse_int(std::string_view s, std::string_view what) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
        throw Error("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return value;
}

inline std::pair<std::int64_t, std::int64_t> parse_pair(std::string_view s, std::string_view sep, std::string_view what) {
    const auto pos = s.find(sep);
    if (pos == std::string_view::npos) throw Error("malformed " + std::string(what) + ": '" + std::string(s) + "'");
    return {parse_int(s.substr(0, pos), what), parse_int(s.substr(pos + sep.size()), what)};
}

/// "p,q".
inline CharPoly parse_poly(std::string_view s) {
    auto [p, q] = parse_pair(s, ",", "polynomial (expected p,q)");
    return {p, q};
}

/// "l,k".
inline LatticeVec parse_vec(std::string_view s) {
    auto [l, k] = parse_pair(s, ",", "lattice vector (expected l,k)");
    return {l, k};
}

/// "l,k;l,k;...".
inline std::vector<LatticeVec> parse_digits(std::string_view s) {
    std::vector<LatticeVec> out;
    while (true) {
        const auto pos = s.find(';');
        out.push_back(parse_vec(s.substr(0, pos)));
        if (pos == std::string_view::npos) break;
        s.remove_prefix(pos + 1);
    }
    return out;
}

inline void require_expanding(const CharPoly& poly) {
    if (!is_expanding(poly))
        throw Error("polynomial " + poly.str() + " (p=" + std::to_string(poly.p) + ", q=" + std::to_string(poly.q) +
                    ") is not expanding: " + expanding_diagnostic(poly) +
                    "; both roots must have modulus strictly greater than 1");
}

inline std::string approx(const Rational& r) {
    std::ostringstream os;
    os << std::setprecision(10) << to_double(r);
    return os.str();
}

inline void print_poly(std::ostream& out, const CharPoly& poly) {
    out << "poly: " << poly.str() << " (p=" << poly.p << ", q=" << poly.q << ")\n";
}

struct Options {
    std::string poly;
    std::string digits;
    std::string delta;
    std::string k_range = "-6..6";
    std::string report;
    bool timings = false;
    std::int64_t terms = 10;
    std::int64_t k = 0;
    bool k_given = false;
    int depth = 9;
    std::string size = "512x512";
    double margin = 0.05;
    std::string out_path;
};

inline int run_decide(const Options& o, std::ostream& out) {
    const CharPoly poly = parse_poly(o.poly);
    const auto digits = parse_digits(o.digits);
    const DigitSystem ds{poly, digits};
    require_expanding(poly);
    ds.validate();
    std::optional<LatticeVec> delta;
    if (!o.delta.empty()) delta = parse_vec(o.delta);

    const MembershipSolver solver(ds);
    print_poly(out, poly);
    out << "digits:";
    for (std::size_t i = 0; i < digits.size(); ++i) out << ' ' << i << '=' << digits[i];
    out << "\ndifference set:";
    for (const auto& d : difference_set(ds)) out << ' ' << d;
    out << "\nstate box: |l| <= " << solver.box().l_max << ", |k| <= " << solver.box().k_max
        << " (" << solver.surviving_count() << " of " << solver.box().size() << " states survive)\n";

    if (delta) {
        const auto outcome = solver.decide(*delta);
        out << "delta " << *delta << ": " << (outcome.member ? "member" : "nonmember") << '\n';
        if (outcome.member)
            out << "witness: " << *outcome.witness << " value=" << eval_expansion(poly, *outcome.witness) << '\n';
        return 0;
    }

    const EdgeGraph g = edge_graph(ds, solver);
    for (std::size_t i = 0; i < digits.size(); ++i)
        for (std::size_t j = i + 1; j < digits.size(); ++j) {
            out << "edge " << i << '-' << j << " delta=" << (digits[j] - digits[i]) << ": ";
            auto it = std::find_if(g.edges.begin(), g.edges.end(), [&](const Edge& e) { return e.from == i && e.to == j; });
            if (it != g.edges.end())
                out << "member " << it->witness << '\n';
            else
                out << "nonmember\n";
        }
    out << (g.connected() ? "connected" : "disconnected") << '\n';
    if (!g.missing.empty()) {
        out << "missing edges:";
        for (const auto& [i, j] : g.missing) out << ' ' << i << '-' << j;
        out << '\n';
    }
    return 0;
}

inline int run_sweep(const Options& o, std::ostream& out, std::ostream& err) {
    auto [lo, hi] = parse_pair(o.k_range, "..", "k range (expected a..b)");
    if (lo > hi) throw Error("k range " + o.k_range + " is empty");
    if (lo == 0 && hi == 0) throw Error("k range contains only k = 0");

    SweepReport report = sweep_theorem(lo, hi);
    report.mirror_verdict = mirror_check(lo, hi);
    report.corollary_verdict = corollary_check();
    write_text_report(out, report, o.timings);
    out << "entries=" << report.entries.size() << " connected=" << report.connected_count() << '\n';
    for (const SweepEntry* e : report.counterexamples()) {
        err << "counterexample: " << e->poly.str() << " k=" << e->k << (e->connected ? " connected" : " disconnected")
            << "; edges:";
        for (const auto& edge : e->graph.edges) err << ' ' << edge.from << '-' << edge.to;
        err << '\n';
    }
    if (!o.report.empty()) {
        std::ofstream file(o.report, std::ios::trunc);
        if (!file) throw Error("cannot open report file '" + o.report + "'");
        file << to_json(report, o.timings).dump(2) << '\n';
        if (!file) throw Error("failed writing report file '" + o.report + "'");
    }
    const bool ok = report.theorem_verdict && *report.mirror_verdict && *report.corollary_verdict;
    return ok ? 0 : 1;
}

inline int run_verify_corpus(std::ostream& out) {
    bool all = true;
    for (const auto& item : reference_expansions()) {
        const DigitSystem ds = item.digit_system();
        const RationalVec value = eval_expansion(item.poly, item.word);
        const bool exact = value == item.target.to_rational();
        const bool witness = !item.uses_difference_digits || verify_witness(ds, item.target, item.word);
        const bool member = decide_membership(ds, item.target).member;
        const bool ok = exact && witness && member;
        all = all && ok;
        out << (ok ? "ok  " : "FAIL") << ' ' << item.label << "\n     k=" << item.k << " target=" << item.target
            << " value=" << value << (item.uses_difference_digits ? " witness" : " identity")
            << (witness ? "" : "(digits outside D-D)") << " decider=" << (member ? "member" : "nonmember") << '\n';
    }
    out << (all ? "all reference expansions verified" : "verification FAILED") << '\n';
    return all ? 0 : 1;
}

inline int run_series(const Options& o, std::ostream& out) {
    const CharPoly poly = parse_poly(o.poly);
    require_expanding(poly);
    if (o.terms < 1) throw Error("--terms must be >= 1");
    print_poly(out, poly);
    out << "i alpha_i beta_i\n";
    for (const auto& t : alpha_beta(poly, o.terms))
        out << t.index << ' ' << to_string(t.alpha) << ' ' << to_string(t.beta) << '\n';
    const SeriesBounds b = series_sums(poly);
    out << "terms summed: " << b.terms_used << '\n'
        << "contraction: ||A^-" << b.contraction_power << "||_max = " << to_string(b.contraction_norm) << '\n'
        << "tail bound: " << to_string(b.tail_bound) << " (~" << approx(b.tail_bound) << ")\n"
        << "alpha_upper: " << to_string(b.alpha_upper) << " (~" << approx(b.alpha_upper) << ")\n"
        << "beta_upper: " << to_string(b.beta_upper) << " (~" << approx(b.beta_upper) << ")\n";
    return 0;
}

inline int run_render(const Options& o, std::ostream& out) {
    RenderConfig cfg;
    cfg.poly = parse_poly(o.poly);
    require_expanding(cfg.poly);
    if (o.k_given == !o.digits.empty()) throw Error("render: give exactly one of --k or --digits");
    cfg.digits = o.k_given ? basic_digits(o.k) : parse_digits(o.digits);
    auto [w, h] = parse_pair(o.size, "x", "size (expected WxH)");
    if (w > 16384 || h > 16384) throw Error("render: image dimensions above 16384 are not supported");
    cfg.width = static_cast<int>(w);
    cfg.height = static_cast<int>(h);
    cfg.depth = o.depth;
    cfg.margin = o.margin;
    cfg.validate();

    std::string path = o.out_path;
    const std::string name = default_image_name(cfg.poly, o.k_given ? o.k : 0, cfg.depth);
    if (path.empty())
        path = name;
    else if (std::filesystem::is_directory(path))
        path = (std::filesystem::path(path) / name).string();

    const ImageGrid grid = rasterize(cfg);
    write_image(grid, path);
    std::ostringstream hash;
    hash << std::hex << std::setw(16) << std::setfill('0') << fnv1a64(encode_ppm(grid));
    out << "wrote " << path << " (" << cfg.width << 'x' << cfg.height << ", depth " << cfg.depth << ", "
        << grid.occupied() << " pixels set, " << grid.components() << " components, fnv1a64 " << hash.str() << ")\n";
    return 0;
}

/// Entry point; args excludes the program name. Returns the process exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact connectedness decisions for planar self-affine sets T(A, D)", "tileconn"};
    app.require_subcommand(1);
    Options o;

    auto* decide = app.add_subcommand("decide", "Decide E-edges and connectedness, or membership of one delta in T-T");
    decide->add_option("--poly", o.poly, "characteristic polynomial x^2+px+q as p,q")->required();
    decide->add_option("--digits", o.digits, "digits in (v, Av)-coordinates: \"l,k;l,k;...\"")->required();
    decide->add_option("--delta", o.delta, "decide membership of l*v + k*Av in T-T only");

    auto* sweep = app.add_subcommand("sweep", "Check connected <=> |k|=1 for all |q|=3 polynomials");
    sweep->add_option("--k-range", o.k_range, "k range a..b (k = 0 skipped)")->capture_default_str();
    sweep->add_option("--report", o.report, "write the structured JSON report to this path");
    sweep->add_flag("--timings", o.timings, "include per-instance runtime_ms in reports");

    app.add_subcommand("verify-corpus", "Verify the transcribed reference expansions exactly");

    auto* series = app.add_subcommand("series", "Print alpha_i, beta_i and certified bounds on their absolute sums");
    series->add_option("--poly", o.poly, "p,q")->required();
    series->add_option("--terms", o.terms, "number of terms to print")->capture_default_str();

    auto* render = app.add_subcommand("render", "Rasterize a finite-depth approximation to a P6 image");
    render->add_option("--poly", o.poly, "p,q")->required();
    auto* k_opt = render->add_option("--k", o.k, "use digits {0, v, kAv}");
    render->add_option("--digits", o.digits, "explicit digits \"l,k;...\"");
    render->add_option("--depth", o.depth, "expansion depth")->capture_default_str();
    render->add_option("--size", o.size, "WxH in pixels")->capture_default_str();
    render->add_option("--margin", o.margin, "margin as a fraction of the image size")->capture_default_str();
    render->add_option("--out", o.out_path, "output file or directory (default tile_p{p}_q{q}_k{k}_d{depth}.ppm)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*decide) return run_decide(o, out);
        if (*sweep) return run_sweep(o, out, err);
        if (app.got_subcommand("verify-corpus")) return run_verify_corpus(out);
        if (*series) return run_series(o, out);
        if (*render) {
            o.k_given = k_opt->count() > 0;
            return run_render(o, out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

} // namespace tileconn::cli
