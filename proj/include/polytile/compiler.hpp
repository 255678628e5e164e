#pragma once

// Compiles a Wang tile set into seven polyominoes: encoder, L-linker,
// R-linker, A-filler, B-filler, connector, T-filler.
//
// Pieces are described as level-2 block grids (each entry a 10x10 building
// block) and realized cell by cell with assemble().

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "polytile/blocks.hpp"
#include "polytile/geometry.hpp"
#include "polytile/wang.hpp"

namespace polytile {

class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CompileError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct BlockPos {
    Coord col = 0;
    Coord row = 0;

    friend auto operator<=>(const BlockPos&, const BlockPos&) = default;
    friend BlockPos operator+(BlockPos a, BlockPos b) { return {a.col + b.col, a.row + b.row}; }
    Vec2 units() const { return {col * kBlockSize, row * kBlockSize}; }
};

/// A block placed in a grid cell. Tabs carry the anchor that seats them
/// inside the cell; every other kind fills its cell from the corner.
struct GridEntry {
    BlockKind kind = BlockKind::Functional;
    Vec2 anchor{};
};

class BlockGrid {
public:
    void set(BlockPos pos, BlockKind kind, Vec2 anchor = {}) { entries_[pos] = {kind, anchor}; }

    /// Copies every entry of `other`, shifted by `offset`.
    void paste(const BlockGrid& other, BlockPos offset)
    {
        for (const auto& [pos, entry] : other.entries_) {
            entries_[pos + offset] = entry;
        }
    }

    const GridEntry* find(BlockPos pos) const
    {
        auto it = entries_.find(pos);
        return it == entries_.end() ? nullptr : &it->second;
    }

    BlockKind kind_at(BlockPos pos) const
    {
        auto* e = find(pos);
        if (e == nullptr) {
            throw AssemblyError("no block at (" + std::to_string(pos.col) + ", " + std::to_string(pos.row) + ")");
        }
        return e->kind;
    }

    const std::map<BlockPos, GridEntry>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

private:
    std::map<BlockPos, GridEntry> entries_;
};

namespace detail {

/// Block position a dent expects its matching bump to come from.
inline BlockPos bump_source(BlockPos pos, BlockKind dent)
{
    switch (dent) {
    case BlockKind::YPlusDent: return {pos.col, pos.row - 1};
    case BlockKind::YMinusDent: return {pos.col, pos.row + 1};
    default: return {pos.col - 1, pos.row};
    }
}

/// Block position a bump protrudes into.
inline BlockPos bump_target(BlockPos pos, BlockKind bump)
{
    switch (bump) {
    case BlockKind::YPlus: return {pos.col, pos.row + 1};
    case BlockKind::YMinus: return {pos.col, pos.row - 1};
    default: return {pos.col + 1, pos.row};
    }
}

} // namespace detail

/// Realizes a block grid as a polyomino. Bumps must land in matching dents
/// of occupied neighbors, dents facing occupied neighbors must be filled,
/// and no unit cell may be covered twice.
inline Polyomino assemble(const BlockGrid& grid, const std::string& name)
{
    if (grid.size() == 0) {
        throw AssemblyError("cannot assemble an empty block grid");
    }
    for (const auto& [pos, entry] : grid.entries()) {
        if (is_bump(entry.kind)) {
            auto* target = grid.find(detail::bump_target(pos, entry.kind));
            if (target != nullptr && target->kind != partner(entry.kind)) {
                throw AssemblyError(std::string("bump ") + std::string(to_string(entry.kind)) +
                                    " protrudes into a non-matching block " + std::string(to_string(target->kind)));
            }
        }
        if (is_dent(entry.kind)) {
            auto* source = grid.find(detail::bump_source(pos, entry.kind));
            if (source != nullptr && source->kind != partner(entry.kind)) {
                throw AssemblyError(std::string("dent ") + std::string(to_string(entry.kind)) +
                                    " faces an occupied block without the matching bump");
            }
        }
    }

    std::vector<Cell> cells;
    for (const auto& [pos, entry] : grid.entries()) {
        for (auto c : block_cells(entry.kind)) {
            cells.push_back(c + pos.units() + entry.anchor);
        }
    }
    const auto total = cells.size();
    CellSet set(std::move(cells));
    if (set.size() != total) {
        throw AssemblyError("blocks of '" + name + "' overlap (" + std::to_string(total - set.size()) + " cells)");
    }
    if (!is_connected(set)) {
        throw AssemblyError("assembled piece '" + name + "' is not connected");
    }
    return Polyomino(name, std::move(set));
}

// ---------------------------------------------------------------------------
// Encoder

/// Column/segment bookkeeping for an encoder of n tiles and t bits:
/// 2t+1 segments of 2n block columns, three block rows.
struct EncoderLayout {
    int n = 0;
    int t = 0;

    int segment_width() const { return 2 * n; }
    int segments() const { return 2 * t + 1; }
    int width() const { return segment_width() * segments(); }
    int height() const { return 3; }
    int structural_segment() const { return t; }
    int segment_of(int col) const { return col / segment_width(); }

    /// Columns holding tile `tile` (0-based) inside each encoding segment.
    std::vector<int> tile_columns(int tile) const
    {
        std::vector<int> cols;
        for (int s = 0; s < segments(); ++s) {
            if (s != structural_segment()) {
                cols.push_back(s * segment_width() + 2 * tile);
            }
        }
        return cols;
    }
};

/// Big-endian binary code of a color, bit 0 -> l, bit 1 -> r.
inline std::vector<BlockKind> encode_color(int index, int t)
{
    if (t < 1 || t > 30 || index < 0 || index >= (1 << t)) {
        throw CompileError("color index " + std::to_string(index) + " does not fit in " + std::to_string(t) +
                           " bits");
    }
    std::vector<BlockKind> out;
    for (int j = t - 1; j >= 0; --j) {
        out.push_back(((index >> j) & 1) != 0 ? BlockKind::SlotRight : BlockKind::SlotLeft);
    }
    return out;
}

/// Slot kind carrying bit `position` (1-based, most significant first).
inline BlockKind color_bit(int index, int t, int position)
{
    return encode_color(index, t).at(static_cast<std::size_t>(position - 1));
}

inline BlockKind encoder_block_at(const WangTileSet& set, int col, int row)
{
    const EncoderLayout layout{static_cast<int>(set.n()), set.bit_width()};
    if (col < 0 || col >= layout.width() || row < 0 || row >= layout.height()) {
        throw CompileError("encoder coordinate (" + std::to_string(col) + ", " + std::to_string(row) +
                           ") out of range");
    }
    if (row == 1) {
        if (col == 0) {
            return BlockKind::ADent;
        }
        if (col == layout.width() - 1) {
            return BlockKind::BBump;
        }
        return BlockKind::Functional;
    }
    if (col % 2 == 1) {
        return row == 0 ? BlockKind::YMinus : BlockKind::YPlus;
    }
    const int seg = layout.segment_of(col);
    if (seg == layout.structural_segment()) {
        return BlockKind::Functional;
    }
    const auto& tile = set.tile(static_cast<std::size_t>((col % layout.segment_width()) / 2));
    const bool left = seg < layout.structural_segment();
    const int position = left ? seg + 1 : seg - layout.t;
    int color = 0;
    if (row == 2) {
        color = left ? tile.west : tile.north;
    } else {
        color = left ? tile.south : tile.east;
    }
    return color_bit(color, layout.t, position);
}

inline BlockGrid encoder_grid(const WangTileSet& set)
{
    const EncoderLayout layout{static_cast<int>(set.n()), set.bit_width()};
    BlockGrid grid;
    for (int row = 0; row < layout.height(); ++row) {
        for (int col = 0; col < layout.width(); ++col) {
            grid.set({col, row}, encoder_block_at(set, col, row));
        }
    }
    return grid;
}

// ---------------------------------------------------------------------------
// The other six pieces

enum class TabSide { Left, Right };

/// 2n x 3 linker body: y+ dents below, y- dents above, x/X at the ends.
inline BlockGrid linker_body_grid(int n)
{
    BlockGrid grid;
    const int width = 2 * n;
    for (int col = 0; col < width; ++col) {
        const bool odd = col % 2 == 1;
        grid.set({col, 0}, odd ? BlockKind::YPlusDent : BlockKind::Functional);
        grid.set({col, 2}, odd ? BlockKind::YMinusDent : BlockKind::Functional);
        BlockKind mid = BlockKind::Functional;
        if (col == 0) {
            mid = BlockKind::XDent;
        } else if (col == width - 1) {
            mid = BlockKind::XBump;
        }
        grid.set({col, 1}, mid);
    }
    return grid;
}

inline constexpr BlockPos kLowerTabCell{0, -1};
inline constexpr BlockPos kUpperTabCell{0, 3};

inline BlockGrid linker_grid(int n, TabSide side)
{
    auto grid = linker_body_grid(n);
    const Vec2 anchor = side == TabSide::Left ? kLeftTabAnchor : kRightTabAnchor;
    grid.set(kLowerTabCell, BlockKind::Tab, anchor);
    grid.set(kUpperTabCell, BlockKind::Tab, anchor);
    return grid;
}

/// 2 x 3 filler; `dent` is ADent for the A-filler and BDent for the mixed
/// filler inside the connector and for the B-filler's west side.
inline BlockGrid filler_grid(BlockKind dent, BlockKind bump)
{
    BlockGrid grid;
    grid.set({0, 0}, BlockKind::Functional);
    grid.set({0, 1}, dent);
    grid.set({0, 2}, BlockKind::Functional);
    grid.set({1, 0}, BlockKind::YMinus);
    grid.set({1, 1}, bump);
    grid.set({1, 2}, BlockKind::YPlus);
    return grid;
}

/// Two degenerated linkers (rows 0-2 and 6-8) and a b/A mixed filler
/// (rows 3-5), all aligned to the left.
inline BlockGrid connector_grid(int n)
{
    BlockGrid grid;
    const auto body = linker_body_grid(n);
    grid.paste(body, {0, 0});
    grid.paste(filler_grid(BlockKind::BDent, BlockKind::ABump), {0, 3});
    grid.paste(body, {0, 6});
    return grid;
}

enum class PieceId { Encoder, LLinker, RLinker, AFiller, BFiller, Connector, TFiller };

inline constexpr std::array kAllPieces = {PieceId::Encoder, PieceId::LLinker,   PieceId::RLinker, PieceId::AFiller,
                                          PieceId::BFiller, PieceId::Connector, PieceId::TFiller};

inline std::string piece_name(PieceId id)
{
    switch (id) {
    case PieceId::Encoder: return "encoder";
    case PieceId::LLinker: return "L-linker";
    case PieceId::RLinker: return "R-linker";
    case PieceId::AFiller: return "A-filler";
    case PieceId::BFiller: return "B-filler";
    case PieceId::Connector: return "connector";
    case PieceId::TFiller: return "T-filler";
    }
    return "?";
}

/// The seven compiled pieces in fixed order, plus the set they encode.
/// Piece cells are in piece-local units whose origin is the southwest
/// corner of block (0, 0) of the piece's grid.
class SevenPieceSet {
public:
    SevenPieceSet(WangTileSet source, std::vector<Polyomino> pieces)
        : source_(std::move(source)), pieces_(std::move(pieces))
    {
        if (pieces_.size() != kAllPieces.size()) {
            throw CompileError("a compiled set has exactly seven pieces");
        }
    }

    const WangTileSet& source() const { return source_; }
    int n() const { return static_cast<int>(source_.n()); }
    int m() const { return static_cast<int>(source_.m()); }
    int t() const { return source_.bit_width(); }

    const Polyomino& piece(PieceId id) const { return pieces_[static_cast<std::size_t>(id)]; }
    const Polyomino& encoder() const { return piece(PieceId::Encoder); }
    const Polyomino& l_linker() const { return piece(PieceId::LLinker); }
    const Polyomino& r_linker() const { return piece(PieceId::RLinker); }
    const Polyomino& a_filler() const { return piece(PieceId::AFiller); }
    const Polyomino& b_filler() const { return piece(PieceId::BFiller); }
    const Polyomino& connector() const { return piece(PieceId::Connector); }
    const Polyomino& t_filler() const { return piece(PieceId::TFiller); }

    const std::vector<Polyomino>& pieces() const { return pieces_; }

private:
    WangTileSet source_;
    std::vector<Polyomino> pieces_;
};

inline SevenPieceSet compile(const WangTileSet& set)
{
    if (set.n() < 2) {
        throw CompileError("compile needs at least two Wang tiles");
    }
    if (set.m() < 2) {
        throw CompileError("compile needs at least two colors");
    }
    const int n = static_cast<int>(set.n());

    BlockGrid tab;
    tab.set({0, 0}, BlockKind::Tab);

    std::vector<Polyomino> pieces;
    pieces.push_back(assemble(encoder_grid(set), piece_name(PieceId::Encoder)));
    pieces.push_back(assemble(linker_grid(n, TabSide::Left), piece_name(PieceId::LLinker)));
    pieces.push_back(assemble(linker_grid(n, TabSide::Right), piece_name(PieceId::RLinker)));
    pieces.push_back(assemble(filler_grid(BlockKind::ADent, BlockKind::ABump), piece_name(PieceId::AFiller)));
    pieces.push_back(assemble(filler_grid(BlockKind::BDent, BlockKind::BBump), piece_name(PieceId::BFiller)));
    pieces.push_back(assemble(connector_grid(n), piece_name(PieceId::Connector)));
    pieces.push_back(assemble(tab, piece_name(PieceId::TFiller)));
    return SevenPieceSet(set, std::move(pieces));
}

} // namespace polytile
