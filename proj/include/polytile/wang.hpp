#pragma once

// Wang tiles with N/E/S/W edge colors, edge-matching validation, and a
// depth-first solver for finite tori and rectangles.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "polytile/search.hpp"

namespace polytile {

class WangError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct WangTile {
    int north = 0;
    int east = 0;
    int south = 0;
    int west = 0;

    friend bool operator==(const WangTile&, const WangTile&) = default;
};

struct LabeledTile {
    std::string north, east, south, west;
};

/// Ordered tile list plus its color table. Colors are indexed by first
/// appearance (N, E, S, W per tile) unless an explicit color order is given.
class WangTileSet {
public:
    WangTileSet(const std::vector<LabeledTile>& tiles, std::vector<std::string> color_order = {})
        : colors_(std::move(color_order))
    {
        if (tiles.empty()) {
            throw WangError("a Wang tile set needs at least one tile");
        }
        const bool fixed = !colors_.empty();
        for (std::size_t i = 0; i < colors_.size(); ++i) {
            if (!index_.emplace(colors_[i], static_cast<int>(i)).second) {
                throw WangError("duplicate color label '" + colors_[i] + "'");
            }
        }
        auto lookup = [&](const std::string& label) {
            if (auto it = index_.find(label); it != index_.end()) {
                return it->second;
            }
            if (fixed) {
                throw WangError("color '" + label + "' missing from the explicit color list");
            }
            const int id = static_cast<int>(colors_.size());
            colors_.push_back(label);
            index_.emplace(label, id);
            return id;
        };
        for (const auto& t : tiles) {
            // Evaluation order matters for first-appearance indexing.
            WangTile tile;
            tile.north = lookup(t.north);
            tile.east = lookup(t.east);
            tile.south = lookup(t.south);
            tile.west = lookup(t.west);
            tiles_.push_back(tile);
        }
    }

    std::size_t n() const { return tiles_.size(); }
    std::size_t m() const { return colors_.size(); }

    /// max(1, ceil(log2 m)).
    int bit_width() const
    {
        int t = 1;
        while ((std::size_t{1} << t) < colors_.size()) {
            ++t;
        }
        return t;
    }

    const std::vector<WangTile>& tiles() const { return tiles_; }
    const WangTile& tile(std::size_t i) const { return tiles_.at(i); }
    const std::vector<std::string>& colors() const { return colors_; }
    const std::string& color_label(int index) const { return colors_.at(static_cast<std::size_t>(index)); }

    LabeledTile labeled(std::size_t i) const
    {
        const auto& t = tiles_.at(i);
        return {colors_[t.north], colors_[t.east], colors_[t.south], colors_[t.west]};
    }

    std::vector<LabeledTile> labeled_tiles() const
    {
        std::vector<LabeledTile> out;
        for (std::size_t i = 0; i < tiles_.size(); ++i) {
            out.push_back(labeled(i));
        }
        return out;
    }

private:
    std::vector<std::string> colors_;
    std::unordered_map<std::string, int> index_;
    std::vector<WangTile> tiles_;
};

/// Assignment of tile indices to a p x q grid, stored row-major with row b
/// (northward) and column a (eastward): cells[b * p + a].
struct WangTiling {
    int p = 0;
    int q = 0;
    bool torus = true;
    std::vector<int> cells;

    int at(int a, int b) const { return cells.at(static_cast<std::size_t>(b * p + a)); }
    int& at(int a, int b) { return cells.at(static_cast<std::size_t>(b * p + a)); }

    friend bool operator==(const WangTiling&, const WangTiling&) = default;
};

enum class Adjacency { Horizontal, Vertical };

/// A mismatched pair: (a, b) and its east (Horizontal) or north (Vertical)
/// neighbor, with wrap-around on a torus.
struct Violation {
    int a = 0;
    int b = 0;
    Adjacency kind = Adjacency::Horizontal;

    friend bool operator==(const Violation&, const Violation&) = default;
};

inline std::vector<Violation> validate(const WangTileSet& set, const WangTiling& tiling)
{
    if (tiling.p < 1 || tiling.q < 1 ||
        tiling.cells.size() != static_cast<std::size_t>(tiling.p) * static_cast<std::size_t>(tiling.q)) {
        throw WangError("tiling dimensions do not match its cell list");
    }
    for (int idx : tiling.cells) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= set.n()) {
            throw WangError("tile index " + std::to_string(idx) + " out of range");
        }
    }
    std::vector<Violation> out;
    for (int b = 0; b < tiling.q; ++b) {
        for (int a = 0; a < tiling.p; ++a) {
            const auto& here = set.tile(static_cast<std::size_t>(tiling.at(a, b)));
            if (a + 1 < tiling.p || tiling.torus) {
                const auto& east = set.tile(static_cast<std::size_t>(tiling.at((a + 1) % tiling.p, b)));
                if (here.east != east.west) {
                    out.push_back({a, b, Adjacency::Horizontal});
                }
            }
            if (b + 1 < tiling.q || tiling.torus) {
                const auto& north = set.tile(static_cast<std::size_t>(tiling.at(a, (b + 1) % tiling.q)));
                if (here.north != north.south) {
                    out.push_back({a, b, Adjacency::Vertical});
                }
            }
        }
    }
    return out;
}

struct WangSolveResult {
    std::uint64_t count = 0;
    std::vector<WangTiling> tilings;
};

/// Depth-first search in row-major order, tile indices ascending. Each cell
/// only draws from tiles compatible with its assigned west and south
/// neighbors; the wrap constraints are checked on the last column and row.
inline WangSolveResult solve_wang(const WangTileSet& set, int p, int q, bool torus, SearchMode mode)
{
    if (p < 1 || q < 1) {
        throw WangError("torus dimensions must be positive");
    }
    const auto m = static_cast<int>(set.m());
    constexpr int kAny = -1;
    // candidates[(west + 1) * (m + 1) + (south + 1)] -> tiles with that west/south
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>((m + 1) * (m + 1)));
    for (int i = 0; i < static_cast<int>(set.n()); ++i) {
        const auto& t = set.tile(static_cast<std::size_t>(i));
        for (int w : {kAny, t.west}) {
            for (int s : {kAny, t.south}) {
                candidates[static_cast<std::size_t>((w + 1) * (m + 1) + (s + 1))].push_back(i);
            }
        }
    }

    WangSolveResult result;
    WangTiling current{p, q, torus, std::vector<int>(static_cast<std::size_t>(p * q), -1)};
    const int total = p * q;

    std::function<bool(int)> dfs = [&](int k) -> bool {
        if (k == total) {
            ++result.count;
            if (mode != SearchMode::Count) {
                result.tilings.push_back(current);
            }
            return mode == SearchMode::First;
        }
        const int a = k % p;
        const int b = k / p;
        const int west = a > 0 ? set.tile(static_cast<std::size_t>(current.at(a - 1, b))).east : kAny;
        const int south = b > 0 ? set.tile(static_cast<std::size_t>(current.at(a, b - 1))).north : kAny;
        for (int i : candidates[static_cast<std::size_t>((west + 1) * (m + 1) + (south + 1))]) {
            const auto& t = set.tile(static_cast<std::size_t>(i));
            if (torus && a == p - 1) {
                const auto& first = a == 0 ? t : set.tile(static_cast<std::size_t>(current.at(0, b)));
                if (t.east != first.west) {
                    continue;
                }
            }
            if (torus && b == q - 1) {
                const auto& bottom = b == 0 ? t : set.tile(static_cast<std::size_t>(current.at(a, 0)));
                if (t.north != bottom.south) {
                    continue;
                }
            }
            current.at(a, b) = i;
            if (dfs(k + 1)) {
                return true;
            }
        }
        current.at(a, b) = -1;
        return false;
    };
    dfs(0);
    return result;
}

inline WangSolveResult solve_torus(const WangTileSet& set, int p, int q, SearchMode mode)
{
    return solve_wang(set, p, q, true, mode);
}

/// First solvable torus, scanning sizes by increasing p*q and then p.
inline std::optional<WangTiling> find_periodic(const WangTileSet& set, int max_cells)
{
    if (max_cells < 1) {
        throw WangError("max_cells must be positive");
    }
    for (int area = 1; area <= max_cells; ++area) {
        for (int p = 1; p <= area; ++p) {
            if (area % p != 0) {
                continue;
            }
            auto r = solve_torus(set, p, area / p, SearchMode::First);
            if (!r.tilings.empty()) {
                return r.tilings.front();
            }
        }
    }
    return std::nullopt;
}

/// Repeats a torus tiling to a larger torus whose sides are multiples.
inline WangTiling unroll(const WangTiling& tiling, int p, int q)
{
    if (p % tiling.p != 0 || q % tiling.q != 0) {
        throw WangError("unrolled size must be a multiple of the torus size");
    }
    WangTiling out{p, q, tiling.torus, std::vector<int>(static_cast<std::size_t>(p * q))};
    for (int b = 0; b < q; ++b) {
        for (int a = 0; a < p; ++a) {
            out.at(a, b) = tiling.at(a % tiling.p, b % tiling.q);
        }
    }
    return out;
}

/// The three-tile example set, read with NE=N, SE=E, SW=S, NW=W and the
/// color order red, green, yellow, blue (codes ll, lr, rl, rr).
inline WangTileSet three_tile_example()
{
    return WangTileSet({{"red", "yellow", "red", "green"},
                        {"blue", "red", "blue", "yellow"},
                        {"yellow", "green", "yellow", "red"}},
                       {"red", "green", "yellow", "blue"});
}

} // namespace polytile
