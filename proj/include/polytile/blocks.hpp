#pragma once

// Level-1 building blocks: 10x10 functional squares with slots, bumps, or
// dents. Cell geometry is anchored at the block's southwest corner.

#include <array>
#include <stdexcept>
#include <string_view>

#include "polytile/geometry.hpp"

namespace polytile {

inline constexpr Coord kBlockSize = 10;

enum class BlockKind {
    Functional,
    SlotLeft,   // l
    SlotRight,  // r
    Tab,        // L / R / T-filler shape
    YPlus,      // Y+, bump on the north side
    YPlusDent,  // y+
    YMinus,     // Y-, bump on the south side
    YMinusDent, // y-
    XBump,      // X, bump on the east side
    XDent,      // x
    ABump,      // A
    ADent,      // a
    BBump,      // B
    BDent,      // b
};

inline constexpr std::array kAllBlockKinds = {
    BlockKind::Functional, BlockKind::SlotLeft,  BlockKind::SlotRight, BlockKind::Tab,
    BlockKind::YPlus,      BlockKind::YPlusDent, BlockKind::YMinus,    BlockKind::YMinusDent,
    BlockKind::XBump,      BlockKind::XDent,     BlockKind::ABump,     BlockKind::ADent,
    BlockKind::BBump,      BlockKind::BDent,
};

inline constexpr std::array kBumpKinds = {BlockKind::YPlus, BlockKind::YMinus, BlockKind::XBump,
                                          BlockKind::ABump, BlockKind::BBump};
inline constexpr std::array kDentKinds = {BlockKind::YPlusDent, BlockKind::YMinusDent, BlockKind::XDent,
                                          BlockKind::ADent, BlockKind::BDent};

class BlockError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

constexpr std::string_view to_string(BlockKind kind)
{
    switch (kind) {
    case BlockKind::Functional: return "F";
    case BlockKind::SlotLeft: return "l";
    case BlockKind::SlotRight: return "r";
    case BlockKind::Tab: return "T";
    case BlockKind::YPlus: return "Y+";
    case BlockKind::YPlusDent: return "y+";
    case BlockKind::YMinus: return "Y-";
    case BlockKind::YMinusDent: return "y-";
    case BlockKind::XBump: return "X";
    case BlockKind::XDent: return "x";
    case BlockKind::ABump: return "A";
    case BlockKind::ADent: return "a";
    case BlockKind::BBump: return "B";
    case BlockKind::BDent: return "b";
    }
    return "?";
}

constexpr bool is_slot(BlockKind k) { return k == BlockKind::SlotLeft || k == BlockKind::SlotRight; }

constexpr bool is_bump(BlockKind k)
{
    return k == BlockKind::YPlus || k == BlockKind::YMinus || k == BlockKind::XBump || k == BlockKind::ABump ||
           k == BlockKind::BBump;
}

constexpr bool is_dent(BlockKind k)
{
    return k == BlockKind::YPlusDent || k == BlockKind::YMinusDent || k == BlockKind::XDent ||
           k == BlockKind::ADent || k == BlockKind::BDent;
}

/// Where a tab sits inside a block cell so that it fills an l- or r-slot.
inline constexpr Vec2 kLeftTabAnchor{1, 0};
inline constexpr Vec2 kRightTabAnchor{6, 0};

constexpr Vec2 tab_anchor(BlockKind slot)
{
    return slot == BlockKind::SlotRight ? kRightTabAnchor : kLeftTabAnchor;
}

struct BlockGeometry {
    CellSet base;       // inside [0,10)^2
    CellSet protrusion; // bump cells outside [0,10)^2
};

namespace shapes {

// Outlines as drawn in the building-block drawings, in unit coordinates of
// the block whose bump it is.

inline RectilinearPolygon left_slot()
{
    return {{{1, 0}, {1, 10}, {2, 10}, {2, 9}, {4, 9}, {4, 6}, {3, 6}, {3, 8},
             {2, 8}, {2, 2}, {3, 2}, {3, 4}, {4, 4}, {4, 1}, {2, 1}, {2, 0}}};
}

inline RectilinearPolygon y_plus_bump()
{
    return {{{4, 10}, {4, 13}, {2, 13}, {2, 12}, {3, 12}, {3, 11}, {1, 11}, {1, 14}, {5, 14}, {5, 10}}};
}

inline RectilinearPolygon y_minus_bump()
{
    return {{{4, 0}, {4, -3}, {2, -3}, {2, -2}, {3, -2}, {3, -1}, {1, -1}, {1, -4}, {5, -4}, {5, 0}}};
}

inline RectilinearPolygon x_bump()
{
    return {{{10, 9}, {12, 9}, {12, 1}, {11, 1}, {11, 8}, {10, 8}}};
}

inline RectilinearPolygon a_bump()
{
    return {{{10, 9}, {14, 9}, {14, 6}, {12, 6}, {12, 1}, {11, 1}, {11, 7}, {13, 7}, {13, 8}, {10, 8}}};
}

inline RectilinearPolygon b_bump()
{
    return {{{10, 9}, {14, 9}, {14, 2}, {12, 2}, {12, 1}, {11, 1}, {11, 7}, {12, 7}, {12, 3}, {13, 3}, {13, 8},
             {10, 8}}};
}

} // namespace shapes

namespace detail {

struct BlockCatalog {
    std::array<BlockGeometry, kAllBlockKinds.size()> entries;

    BlockCatalog()
    {
        const auto square = CellSet::rectangle(0, 0, kBlockSize, kBlockSize);
        const auto slot = rasterize(shapes::left_slot());
        const auto y_plus = rasterize(shapes::y_plus_bump());
        const auto y_minus = rasterize(shapes::y_minus_bump());
        const auto x = rasterize(shapes::x_bump());
        const auto a = rasterize(shapes::a_bump());
        const auto b = rasterize(shapes::b_bump());
        const Vec2 west{-kBlockSize, 0};

        at(BlockKind::Functional) = {square, {}};
        at(BlockKind::SlotLeft) = {set_difference(square, slot), {}};
        at(BlockKind::SlotRight) = {set_difference(square, translate(slot, {5, 0})), {}};
        at(BlockKind::Tab) = {translate(slot, -kLeftTabAnchor), {}};
        at(BlockKind::YPlus) = {square, y_plus};
        at(BlockKind::YPlusDent) = {set_difference(square, translate(y_plus, {0, -kBlockSize})), {}};
        at(BlockKind::YMinus) = {square, y_minus};
        at(BlockKind::YMinusDent) = {set_difference(square, translate(y_minus, {0, kBlockSize})), {}};
        at(BlockKind::XBump) = {square, x};
        at(BlockKind::XDent) = {set_difference(square, translate(x, west)), {}};
        at(BlockKind::ABump) = {square, a};
        at(BlockKind::ADent) = {set_difference(square, translate(a, west)), {}};
        at(BlockKind::BBump) = {square, b};
        at(BlockKind::BDent) = {set_difference(square, translate(b, west)), {}};
    }

    BlockGeometry& at(BlockKind k) { return entries[static_cast<std::size_t>(k)]; }
};

inline const BlockCatalog& catalog()
{
    static const BlockCatalog instance;
    return instance;
}

} // namespace detail

inline const BlockGeometry& block_geometry(BlockKind kind)
{
    return detail::catalog().entries[static_cast<std::size_t>(kind)];
}

/// base ∪ protrusion. The tab is normalized to its own bounding box; use
/// tab_anchor() to seat it inside a slot block.
inline CellSet block_cells(BlockKind kind)
{
    const auto& g = block_geometry(kind);
    return set_union(g.base, g.protrusion);
}

/// The complementary kind. Tab is ambiguous (it completes both slots), so
/// only Functional and Tab are rejected.
inline BlockKind partner(BlockKind kind)
{
    switch (kind) {
    case BlockKind::YPlus: return BlockKind::YPlusDent;
    case BlockKind::YPlusDent: return BlockKind::YPlus;
    case BlockKind::YMinus: return BlockKind::YMinusDent;
    case BlockKind::YMinusDent: return BlockKind::YMinus;
    case BlockKind::XBump: return BlockKind::XDent;
    case BlockKind::XDent: return BlockKind::XBump;
    case BlockKind::ABump: return BlockKind::ADent;
    case BlockKind::ADent: return BlockKind::ABump;
    case BlockKind::BBump: return BlockKind::BDent;
    case BlockKind::BDent: return BlockKind::BBump;
    case BlockKind::SlotLeft:
    case BlockKind::SlotRight: return BlockKind::Tab;
    case BlockKind::Functional: throw BlockError("functional square has no partner block");
    case BlockKind::Tab: throw BlockError("tab partners both slot kinds; partner is ambiguous");
    }
    throw BlockError("unknown block kind");
}

/// Canonical frame offset at which a bump block meets its dent partner.
inline Vec2 canonical_offset(BlockKind bump)
{
    switch (bump) {
    case BlockKind::YPlus: return {0, kBlockSize};
    case BlockKind::YMinus: return {0, -kBlockSize};
    case BlockKind::XBump:
    case BlockKind::ABump:
    case BlockKind::BBump: return {kBlockSize, 0};
    default: return {0, 0};
    }
}

/// True iff the first block together with the second one, its frame
/// translated by `offset`, exactly tiles the rectangle spanned by the two
/// frames with no overlap. When one argument is a slot and the other a tab,
/// the tab is seated at the slot's anchor inside the shifted frame.
inline bool complement_check(BlockKind first, BlockKind second, Vec2 offset)
{
    const bool adjacent = (offset.y == 0 && (offset.x == kBlockSize || offset.x == -kBlockSize)) ||
                          (offset.x == 0 && (offset.y == kBlockSize || offset.y == -kBlockSize));
    const bool same_frame = offset == Vec2{0, 0};
    if (!adjacent && !same_frame) {
        return false;
    }

    auto first_cells = block_cells(first);
    auto second_cells = block_cells(second);
    if (second == BlockKind::Tab && is_slot(first)) {
        second_cells = translate(second_cells, tab_anchor(first));
    } else if (first == BlockKind::Tab && is_slot(second)) {
        first_cells = translate(first_cells, tab_anchor(second) + offset);
    }
    second_cells = translate(second_cells, offset);

    if (!set_intersection(first_cells, second_cells).empty()) {
        return false;
    }
    const Coord x0 = std::min<Coord>(0, offset.x);
    const Coord y0 = std::min<Coord>(0, offset.y);
    const auto frame = CellSet::rectangle(x0, y0, kBlockSize + (offset.x < 0 ? -offset.x : offset.x),
                                          kBlockSize + (offset.y < 0 ? -offset.y : offset.y));
    return set_union(first_cells, second_cells) == frame;
}

} // namespace polytile
