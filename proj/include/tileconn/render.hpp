#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "disjoint_set.hpp"
#include "error.hpp"
#include "lattice.hpp"

namespace tileconn {

struct RenderConfig {
    CharPoly poly;
    std::vector<LatticeVec> digits;
    int depth = 1;
    int width = 512;
    int height = 512;
    double margin = 0.05;
    std::int64_t point_budget = std::int64_t{1} << 24;

    void validate() const {
        if (!is_expanding(poly))
            throw Error("polynomial " + poly.str() + " is not expanding: " + expanding_diagnostic(poly));
        if (digits.empty()) throw Error("render: digit set is empty");
        if (depth < 1) throw Error("render: depth must be >= 1");
        if (width < 16 || height < 16) throw Error("render: image must be at least 16x16");
        if (!(margin >= 0.0 && margin < 0.5)) throw Error("render: margin must lie in [0, 0.5)");
        double count = std::pow(static_cast<double>(digits.size()), depth);
        if (count > static_cast<double>(point_budget))
            throw Error("render: " + std::to_string(digits.size()) + "^" + std::to_string(depth) +
                        " points exceed the budget of " + std::to_string(point_budget));
    }
};

/// Finite-depth points sum_{i<=depth} A^{-i} d_i for the companion realization
/// A = [[0,-q],[1,-p]], v = (1,0). Each point is numerator / denominator with
/// denominator = |q|^depth; one numerator per digit word, in word order.
struct ExactPointCloud {
    std::vector<std::array<std::int64_t, 2>> numerators;
    std::int64_t denominator = 1;
};

inline ExactPointCloud exact_attractor_points(const RenderConfig& cfg) {
    cfg.validate();
    using Wide = __int128;
    constexpr Wide limit = std::numeric_limits<std::int64_t>::max() / 4;
    const CoordAction a = coord_action(cfg.poly);
    auto checked = [&](Wide x) {
        if (x > limit || x < -limit) throw Error("render: coordinates overflow at depth " + std::to_string(cfg.depth));
        return static_cast<std::int64_t>(x);
    };

    // z = sum A^{depth-i} d_i, built most significant digit first.
    std::vector<LatticeVec> z{{0, 0}};
    for (int level = 0; level < cfg.depth; ++level) {
        std::vector<LatticeVec> next;
        next.reserve(z.size() * cfg.digits.size());
        for (const auto& s : z) {
            const LatticeVec image{checked(Wide(a.a01) * s.k), checked(Wide(s.l) + Wide(a.a11) * s.k)};
            for (const auto& d : cfg.digits) next.push_back({checked(Wide(image.l) + d.l), checked(Wide(image.k) + d.k)});
        }
        z = std::move(next);
    }

    // A^{-depth} = adj(A^depth) / q^depth.
    Wide m00 = 1, m01 = 0, m10 = 0, m11 = 1;
    for (int i = 0; i < cfg.depth; ++i) {
        const Wide n00 = a.a00 * m00 + a.a01 * m10, n01 = a.a00 * m01 + a.a01 * m11;
        const Wide n10 = a.a10 * m00 + a.a11 * m10, n11 = a.a10 * m01 + a.a11 * m11;
        m00 = checked(n00), m01 = checked(n01), m10 = checked(n10), m11 = checked(n11);
    }
    Wide den = 1;
    for (int i = 0; i < cfg.depth; ++i) den = checked(den * cfg.poly.q);
    const Wide sign = den < 0 ? -1 : 1;

    ExactPointCloud cloud;
    cloud.denominator = static_cast<std::int64_t>(den * sign);
    cloud.numerators.reserve(z.size());
    for (const auto& s : z)
        cloud.numerators.push_back({checked(sign * (m11 * s.l - m01 * s.k)), checked(sign * (-m10 * s.l + m00 * s.k))});
    return cloud;
}

/// The same points as doubles, |D|^depth of them.
inline std::vector<std::array<double, 2>> attractor_points(const RenderConfig& cfg) {
    const auto cloud = exact_attractor_points(cfg);
    std::vector<std::array<double, 2>> out;
    out.reserve(cloud.numerators.size());
    const auto den = static_cast<double>(cloud.denominator);
    for (const auto& n : cloud.numerators) out.push_back({static_cast<double>(n[0]) / den, static_cast<double>(n[1]) / den});
    return out;
}

/// Binary occupancy raster; row 0 is the top of the image.
struct ImageGrid {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> cells;

    ImageGrid() = default;
    ImageGrid(int w, int h) : width(w), height(h), cells(static_cast<std::size_t>(w) * static_cast<std::size_t>(h), 0) {}

    bool at(int x, int y) const { return cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)] != 0; }
    void set(int x, int y) { cells[static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x)] = 1; }

    std::size_t occupied() const { return static_cast<std::size_t>(std::count(cells.begin(), cells.end(), 1)); }

    /// Number of 8-connected components of occupied pixels.
    std::size_t components() const {
        DisjointSet sets(cells.size());
        std::size_t empty = 0;
        for (int y = 0; y < height; ++y)
            for (int x = 0; x < width; ++x) {
                if (!at(x, y)) {
                    ++empty;
                    continue;
                }
                const std::size_t here = static_cast<std::size_t>(y) * static_cast<std::size_t>(width) + static_cast<std::size_t>(x);
                // Already-visited neighbours: W, NW, N, NE.
                constexpr int dx[] = {-1, -1, 0, 1};
                constexpr int dy[] = {0, -1, -1, -1};
                for (int n = 0; n < 4; ++n) {
                    const int nx = x + dx[n], ny = y + dy[n];
                    if (nx < 0 || ny < 0 || nx >= width || !at(nx, ny)) continue;
                    sets.unite(here, static_cast<std::size_t>(ny) * static_cast<std::size_t>(width) + static_cast<std::size_t>(nx));
                }
            }
        return sets.components() - empty;
    }

    friend bool operator==(const ImageGrid&, const ImageGrid&) = default;
};

namespace detail {

// round(a / b) for a >= 0, b > 0, halves away from zero.
inline std::int64_t round_ratio(__int128 a, __int128 b) { return static_cast<std::int64_t>((2 * a + b) / (2 * b)); }

} // namespace detail

/// Fits the bounding box into the grid with uniform scale, centred, leaving
/// round(margin * size) pixels on each side. Pixel positions use exact integer
/// arithmetic on the point numerators; rounding is half away from zero.
inline ImageGrid rasterize(const RenderConfig& cfg) {
    const auto cloud = exact_attractor_points(cfg);
    ImageGrid grid(cfg.width, cfg.height);
    const auto& pts = cloud.numerators;

    std::int64_t min_x = pts[0][0], max_x = pts[0][0], min_y = pts[0][1], max_y = pts[0][1];
    for (const auto& p : pts) {
        min_x = std::min(min_x, p[0]), max_x = std::max(max_x, p[0]);
        min_y = std::min(min_y, p[1]), max_y = std::max(max_y, p[1]);
    }
    const std::int64_t margin_x = std::llround(cfg.margin * cfg.width);
    const std::int64_t margin_y = std::llround(cfg.margin * cfg.height);
    const std::int64_t inner_w = cfg.width - 1 - 2 * margin_x;
    const std::int64_t inner_h = cfg.height - 1 - 2 * margin_y;
    const __int128 span_x = max_x - min_x, span_y = max_y - min_y;

    if (span_x == 0 && span_y == 0) {
        grid.set(cfg.width / 2, cfg.height / 2);
        return grid;
    }
    // scale = scale_num / scale_den pixels per numerator unit.
    __int128 scale_num, scale_den;
    if (span_y == 0 || (span_x != 0 && inner_w * span_y <= inner_h * span_x)) {
        scale_num = inner_w, scale_den = span_x;
    } else {
        scale_num = inner_h, scale_den = span_y;
    }
    const std::int64_t offset_x = margin_x + (inner_w - detail::round_ratio(span_x * scale_num, scale_den)) / 2;
    const std::int64_t offset_y = margin_y + (inner_h - detail::round_ratio(span_y * scale_num, scale_den)) / 2;

    for (const auto& p : pts) {
        const std::int64_t px = offset_x + detail::round_ratio(__int128(p[0] - min_x) * scale_num, scale_den);
        const std::int64_t py = offset_y + detail::round_ratio(__int128(p[1] - min_y) * scale_num, scale_den);
        grid.set(static_cast<int>(px), cfg.height - 1 - static_cast<int>(py));
    }
    return grid;
}

/// Binary P6: "P6\n<w> <h>\n255\n" then RGB triples, black on white.
inline std::string encode_ppm(const ImageGrid& grid) {
    std::string out = "P6\n" + std::to_string(grid.width) + " " + std::to_string(grid.height) + "\n255\n";
    out.reserve(out.size() + grid.cells.size() * 3);
    for (auto c : grid.cells) out.append(3, c ? '\0' : '\xff');
    return out;
}

inline void write_image(const ImageGrid& grid, const std::string& path) {
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error("cannot open '" + path + "' for writing");
    const std::string bytes = encode_ppm(grid);
    file.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!file) throw Error("failed writing image to '" + path + "'");
}

/// FNV-1a, 64 bit.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::string default_image_name(const CharPoly& poly, std::int64_t k, int depth) {
    return "tile_p" + std::to_string(poly.p) + "_q" + std::to_string(poly.q) + "_k" + std::to_string(k) + "_d" +
           std::to_string(depth) + ".ppm";
}

} // namespace tileconn
