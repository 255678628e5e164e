#pragma once

// Forward simulation: a periodic Wang tiling becomes a placement list of the
// seven compiled pieces on a torus quotient.
//
// Layout in block units. Wang cell (a, b) becomes diamond cell
// (u, v) = (a, b - a). Connector K(u, v) sits at (P*u + P/2*v, 6v - 3), with
// P = 2n(2t+2). The encoder row band 6v..6v+2 holds the connector's middle
// filler, k = n - i A-fillers, the encoder of tile i (1-based), and
// n-1-k B-fillers. The gap band 6v+3..6v+5 holds connector arms every P/2
// columns and t linkers between each pair of arms.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytile/compiler.hpp"
#include "polytile/solver.hpp"
#include "polytile/wang.hpp"

namespace polytile {

class SimulationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Diamond {
    Coord u = 0;
    Coord v = 0;
    friend bool operator==(Diamond, Diamond) = default;
};

/// Square north maps to diamond up-right, square west to diamond up-left.
constexpr Diamond wang_cell_to_diamond(Coord a, Coord b) { return {a, b - a}; }

/// Connector lattice in block units.
struct PatternLattice {
    int n = 0;
    int t = 0;

    Coord period() const { return 2 * n * (2 * t + 2); }
    Vec2 step_right() const { return {period() / 2, -6}; }
    Vec2 step_up() const { return {period() / 2, 6}; }

    BlockPos connector(Diamond d) const { return {period() * d.u + period() / 2 * d.v, 6 * d.v - 3}; }

    /// Unit lattice for a p x q Wang torus.
    TorusLattice torus(int p, int q) const
    {
        return TorusLattice(kBlockSize * p * step_right(), kBlockSize * q * step_up());
    }
};

struct SimulatedTiling {
    TorusLattice lattice;
    std::vector<Placement> placements;
};

namespace detail {

inline Placement place(const TorusLattice& lattice, PieceId piece, BlockPos block, Vec2 anchor = {})
{
    const Vec2 at = block.units() + anchor;
    const Cell reduced = lattice.reduce({at.x, at.y});
    return {piece_name(piece), {reduced.x, reduced.y}};
}

inline std::size_t piece_rank(const std::string& name)
{
    for (std::size_t i = 0; i < kAllPieces.size(); ++i) {
        if (piece_name(kAllPieces[i]) == name) {
            return i;
        }
    }
    return kAllPieces.size();
}

/// Piece order first, then offset in (y, x) order.
inline void sort_placements(std::vector<Placement>& placements)
{
    std::sort(placements.begin(), placements.end(), [](const Placement& l, const Placement& r) {
        if (l.piece != r.piece) {
            return piece_rank(l.piece) < piece_rank(r.piece);
        }
        return Cell{l.at.x, l.at.y} < Cell{r.at.x, r.at.y};
    });
}

/// Encoder block column of tile `tile` (0-based) carrying bit position
/// `bit` (0-based) on the left (NW/SW) or right (NE/SE) side.
inline int bit_column(const EncoderLayout& layout, int tile, int bit, bool right)
{
    const int segment = right ? layout.t + 1 + bit : bit;
    return segment * layout.segment_width() + 2 * tile;
}

} // namespace detail

/// Raw layout without checking that the Wang tiling is valid. Linkers take
/// their type from the cell's own W (first family) and N (second family)
/// colors, so a broken adjacency shows up as a tab/slot clash.
inline SimulatedTiling layout_placements(const WangTileSet& set, const WangTiling& tiling)
{
    if (set.n() < 2 || set.m() < 2) {
        throw SimulationError("simulation needs at least two tiles and two colors");
    }
    if (!tiling.torus) {
        throw SimulationError("simulation needs a torus tiling");
    }
    if (tiling.p < 1 || tiling.q < 1 ||
        tiling.cells.size() != static_cast<std::size_t>(tiling.p) * static_cast<std::size_t>(tiling.q)) {
        throw SimulationError("tiling dimensions do not match its cell list");
    }
    const int n = static_cast<int>(set.n());
    const int t = set.bit_width();
    const PatternLattice pattern{n, t};
    const EncoderLayout layout{n, t};
    SimulatedTiling out{pattern.torus(tiling.p, tiling.q), {}};
    auto& ps = out.placements;

    for (int b = 0; b < tiling.q; ++b) {
        for (int a = 0; a < tiling.p; ++a) {
            const int index = tiling.at(a, b);
            if (index < 0 || index >= n) {
                throw SimulationError("tile index " + std::to_string(index) + " out of range");
            }
            const auto& tile = set.tile(static_cast<std::size_t>(index));
            const Diamond d = wang_cell_to_diamond(a, b);
            const BlockPos k = pattern.connector(d);
            const Coord band = 6 * d.v;
            const int west_fillers = n - 1 - index;

            ps.push_back(detail::place(out.lattice, PieceId::Connector, k));
            for (int j = 0; j < west_fillers; ++j) {
                ps.push_back(detail::place(out.lattice, PieceId::AFiller, {k.col + 2 + 2 * j, band}));
            }
            const Coord encoder_col = k.col + 2 + 2 * west_fillers;
            ps.push_back(detail::place(out.lattice, PieceId::Encoder, {encoder_col, band}));
            for (int j = 0; j < n - 1 - west_fillers; ++j) {
                ps.push_back(
                    detail::place(out.lattice, PieceId::BFiller, {encoder_col + layout.width() + 2 * j, band}));
            }

            const BlockPos k_up = pattern.connector({d.u, d.v + 1});
            for (int j = 0; j < t; ++j) {
                const auto w_bit = color_bit(tile.west, t, j + 1);
                const auto n_bit = color_bit(tile.north, t, j + 1);
                const auto linker = [](BlockKind bit) {
                    return bit == BlockKind::SlotRight ? PieceId::RLinker : PieceId::LLinker;
                };
                ps.push_back(detail::place(out.lattice, linker(w_bit), {k.col + 2 * n * (j + 1), band + 3}));
                ps.push_back(detail::place(out.lattice, linker(n_bit), {k_up.col + 2 * n * (j + 1), band + 3}));
            }

            std::vector<int> linked;
            for (int j = 0; j < t; ++j) {
                linked.push_back(detail::bit_column(layout, index, j, false));
                linked.push_back(detail::bit_column(layout, index, j, true));
            }
            for (int row : {0, 2}) {
                for (int col = 0; col < layout.width(); col += 2) {
                    const auto kind = encoder_block_at(set, col, row);
                    if (!is_slot(kind) || std::find(linked.begin(), linked.end(), col) != linked.end()) {
                        continue;
                    }
                    ps.push_back(detail::place(out.lattice, PieceId::TFiller, {encoder_col + col, band + row},
                                               tab_anchor(kind)));
                }
            }
        }
    }
    detail::sort_placements(ps);
    return out;
}

/// Placements realizing a valid p x q torus Wang tiling.
inline SimulatedTiling emit_placements(const WangTileSet& set, const WangTiling& tiling)
{
    if (!validate(set, tiling).empty()) {
        throw SimulationError("Wang tiling has edge-color violations");
    }
    return layout_placements(set, tiling);
}

struct LinkerMismatch {
    Placement linker;
    bool upper = false;   // which tab: the one above the body or below it
    BlockKind found = BlockKind::Functional;
    std::string reason;
};

/// For every linker of the raw layout, checks that both tabs land in encoder
/// slot blocks of the linker's own kind (l for L-linkers, r for R-linkers).
inline std::vector<LinkerMismatch> linker_alignment_check(const WangTileSet& set, const WangTiling& tiling)
{
    const auto sim = layout_placements(set, tiling);
    const auto& lattice = sim.lattice;

    // Encoder block kinds keyed by the reduced unit position of the block.
    std::map<Cell, BlockKind> encoder_blocks;
    const auto grid = encoder_grid(set);
    for (const auto& p : sim.placements) {
        if (p.piece != piece_name(PieceId::Encoder)) {
            continue;
        }
        for (const auto& [pos, entry] : grid.entries()) {
            const Vec2 at = p.at + pos.units();
            encoder_blocks[lattice.reduce({at.x, at.y})] = entry.kind;
        }
    }

    std::vector<LinkerMismatch> report;
    for (const auto& p : sim.placements) {
        const bool left = p.piece == piece_name(PieceId::LLinker);
        if (!left && p.piece != piece_name(PieceId::RLinker)) {
            continue;
        }
        const BlockKind expected = left ? BlockKind::SlotLeft : BlockKind::SlotRight;
        for (bool upper : {false, true}) {
            const BlockPos cell = upper ? kUpperTabCell : kLowerTabCell;
            const Vec2 at = p.at + cell.units();
            auto it = encoder_blocks.find(lattice.reduce({at.x, at.y}));
            if (it == encoder_blocks.end()) {
                report.push_back({p, upper, BlockKind::Functional, "tab does not land on an encoder block"});
            } else if (!is_slot(it->second)) {
                report.push_back({p, upper, it->second, "tab lands on a non-slot block"});
            } else if (it->second != expected) {
                report.push_back({p, upper, it->second, "slot kind differs from the linker's tab side"});
            }
        }
    }
    return report;
}

} // namespace polytile
