#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expansion.hpp"
#include "lattice.hpp"

namespace tileconn {

/// A published radix expansion of a lattice vector, transcribed as a word.
///
/// `uses_difference_digits` is true when every digit lies in D - D for the
/// digit set {0, v, k Av}; such items are witnesses for `target` in T - T.
/// The remaining items are matrix identities whose digits (for example 2v)
/// fall outside D - D and are checked by exact evaluation only.
struct ReferenceExpansion {
    std::string label;
    CharPoly poly;
    std::int64_t k = 1;
    LatticeVec target;
    Witness word;
    bool uses_difference_digits = true;

    DigitSystem digit_system() const { return {poly, basic_digits(k)}; }
};

inline std::vector<ReferenceExpansion> reference_expansions() {
    using W = Witness;
    const LatticeVec v{1, 0}, av{0, 1}, av_plus_v{1, 1};
    const std::vector<LatticeVec> cycle4{{-1, 0}, {0, -1}, {1, 0}, {0, 1}};
    return {
        // f = x^2 + 3
        {"x^2+3: v = 2 sum (-1)^n A^{-2n} v", {0, 3}, 1, v, W{{}, {{0, 0}, {-2, 0}, {0, 0}, {2, 0}}}, false},
        {"x^2+3, k=1: v, period (-v,-Av,v,Av) from A^{-2}", {0, 3}, 1, v, W{{{0, 0}}, cycle4}},
        {"x^2+3, k=1: Av, period (-v,-Av,v,Av) from A^{-1}", {0, 3}, 1, av, W{{}, cycle4}},
        {"x^2+3, k=-1: v, period (-v,-Av,v,Av) from A^{-2}", {0, 3}, -1, v, W{{{0, 0}}, cycle4}},
        {"x^2+3, k=-1: Av, period (-v,-Av,v,Av) from A^{-1}", {0, 3}, -1, av, W{{}, cycle4}},

        // f = x^2 + x + 3
        {"x^2+x+3: v = sum A^{-3i}(-2Av+2v)", {1, 3}, 1, v, W{{}, {{0, 0}, {-2, 0}, {2, 0}}}, false},
        {"x^2+x+3, k=1: v, period (-v, v-Av, Av)", {1, 3}, 1, v, W{{{0, 0}}, {{-1, 0}, {1, -1}, {0, 1}}}},
        {"x^2+x+3, k=1: Av, period (-v, v-Av, Av)", {1, 3}, 1, av, W{{}, {{-1, 0}, {1, -1}, {0, 1}}}},
        {"x^2+x+3, k=-1: v = -A^{-1}v - 2A^{-2}v + A^{-3}v + 2A^{-4}v - ...", {1, 3}, -1, v,
         W{{}, {{-1, 0}, {-2, 0}, {1, 0}, {2, 0}}}, false},
        {"x^2+x+3, k=-1: v, period (-Av-v, -Av, Av+v, Av)", {1, 3}, -1, v,
         W{{{0, 0}}, {{-1, -1}, {0, -1}, {1, 1}, {0, 1}}}},
        {"x^2+x+3, k=-1: Av, period (-Av-v, -Av, Av+v, Av)", {1, 3}, -1, av,
         W{{}, {{-1, -1}, {0, -1}, {1, 1}, {0, 1}}}},

        // f = x^2 + 2x + 3
        {"x^2+2x+3: v = sum A^{-3i}(-A^2v - Av + 2v)", {2, 3}, 1, v, W{{}, {{-1, 0}, {-1, 0}, {2, 0}}}, false},
        {"x^2+2x+3, k=1: v = A^{-1}(-v) + period (-v, v, Av-v)", {2, 3}, 1, v,
         W{{{-1, 0}}, {{-1, 0}, {1, 0}, {-1, 1}}}},
        // Printed with A^{-1}(-Av) and A^{-1}(-v) sharing the first place: digit -Av-v.
        {"x^2+2x+3, k=1: Av = A^{-1}(-Av) + sum A^{-3i}(A^{-1}(-v) + A^{-2}v + A^{-3}(Av-v))", {2, 3}, 1, av,
         W{{{-1, -1}}, {{1, 0}, {-1, 1}, {-1, 0}}}, false},
        {"x^2+2x+3, k=-1: v = -A^{-1}v - A^{-2}v + 2A^{-3}v - ...", {2, 3}, -1, v,
         W{{}, {{-1, 0}, {-1, 0}, {2, 0}}}, false},
        {"x^2+2x+3, k=-1: v, period (v, Av, -Av-v)", {2, 3}, -1, v,
         W{{{-1, 0}, {-1, 0}}, {{1, 0}, {0, 1}, {-1, -1}}}},
        {"x^2+2x+3, k=-1: Av+v, period (v, Av, -Av-v)", {2, 3}, -1, av_plus_v,
         W{{{-1, 0}}, {{1, 0}, {0, 1}, {-1, -1}}}},

        // f = x^2 + 3x + 3
        {"x^2+3x+3: v = -A^{-1}v + A^{-2}v + 2 sum_{i>=3} (-1)^{i+1} A^{-i} v", {3, 3}, 1, v,
         W{{{-1, 0}, {1, 0}}, {{2, 0}, {-2, 0}}}, false},
        {"x^2+3x+3, k=1: v, period (Av-v, v-Av)", {3, 3}, 1, v,
         W{{{0, 0}, {1, -1}, {1, 0}}, {{-1, 1}, {1, -1}}}},
        {"x^2+3x+3, k=1: Av, period (Av-v, v-Av)", {3, 3}, 1, av,
         W{{{1, -1}, {1, 0}}, {{-1, 1}, {1, -1}}}},
        {"x^2+3x+3, k=-1: v = -2A^{-1}v - A^{-2}v + A^{-3}v - A^{-4}v + ...", {3, 3}, -1, v,
         W{{{-2, 0}}, {{-1, 0}, {1, 0}}}, false},
        {"x^2+3x+3, k=-1: v, period (v, -v)", {3, 3}, -1, v, W{{{-1, 0}, {-1, -1}}, {{1, 0}, {-1, 0}}}},
        {"x^2+3x+3, k=-1: Av+v, period (v, -v)", {3, 3}, -1, av_plus_v, W{{{-1, -1}}, {{1, 0}, {-1, 0}}}},

        // f = x^2 + x - 3
        {"x^2+x-3: v = sum A^{-2i}(-A^{-1} + 2A^{-2}) v", {1, -3}, 1, v, W{{}, {{-1, 0}, {2, 0}}}, false},
        {"x^2+x-3, k=1: v, period (Av-v, v)", {1, -3}, 1, v, W{{{0, 0}, {1, -1}}, {{-1, 1}, {1, 0}}}},
        {"x^2+x-3, k=1: Av, period (Av-v, v)", {1, -3}, 1, av, W{{{1, -1}}, {{-1, 1}, {1, 0}}}},
        {"x^2+x-3, k=-1: v = A^{-1}(Av)", {1, -3}, -1, v, W{{{0, 1}}, {{0, 0}}}},
        {"x^2+x-3, k=-1: Av+v = A^{-1}(-Av) + sum_{i>=2} A^{-i}(Av)", {1, -3}, -1, av_plus_v,
         W{{{0, -1}}, {{0, 1}}}},

        // g = x^2 - x + 3 with B = -A; coordinates in {v, Bv}, digits {0, v, -Bv}.
        {"x^2-x+3, k=-1: v, mirrored from x^2+x+3 with sign (-1)^i per block", {-1, 3}, -1, v,
         W{{{0, 0}}, {{-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}}}},
        {"x^2-x+3, k=-1: Bv, mirrored from x^2+x+3 with sign (-1)^i per block", {-1, 3}, -1, av,
         W{{}, {{-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {1, 1}, {0, 1}}}},
    };
}

} // namespace tileconn
