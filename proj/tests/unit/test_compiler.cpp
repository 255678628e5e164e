#include <random>

#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "polytile/compiler.hpp"

using namespace polytile;

namespace {

/// n tiles over m colors where tile i carries colors 4i..4i+3 (mod m).
WangTileSet synthetic(int n, int m)
{
    std::vector<std::string> colors;
    for (int c = 0; c < m; ++c) {
        colors.push_back("c" + std::to_string(c));
    }
    std::vector<LabeledTile> tiles;
    for (int i = 0; i < n; ++i) {
        auto c = [&](int k) { return colors[static_cast<std::size_t>((4 * i + k) % m)]; };
        tiles.push_back({c(0), c(1), c(2), c(3)});
    }
    return WangTileSet(tiles, colors);
}

int colors_for_bits(int t) { return 1 << t; }

} // namespace

TEST(EncodeColor, Examples)
{
    using K = BlockKind;
    EXPECT_EQ(encode_color(0, 2), (std::vector<K>{K::SlotLeft, K::SlotLeft}));
    EXPECT_EQ(encode_color(3, 2), (std::vector<K>{K::SlotRight, K::SlotRight}));
    EXPECT_EQ(encode_color(2, 2), (std::vector<K>{K::SlotRight, K::SlotLeft}));
    EXPECT_EQ(encode_color(1, 2), (std::vector<K>{K::SlotLeft, K::SlotRight}));
    EXPECT_EQ(encode_color(5, 3), (std::vector<K>{K::SlotRight, K::SlotLeft, K::SlotRight}));
    EXPECT_THROW(encode_color(4, 2), CompileError);
    EXPECT_THROW(encode_color(-1, 2), CompileError);
}

TEST(EncoderBlocks, ThreeTileExamples)
{
    const auto example = three_tile_example();
    EXPECT_EQ(encoder_block_at(example, 0, 2), BlockKind::SlotLeft);
    EXPECT_EQ(encoder_block_at(example, 18, 0), BlockKind::SlotRight);
    EXPECT_EQ(encoder_block_at(example, 13, 0), BlockKind::YMinus);
    EXPECT_EQ(encoder_block_at(example, 14, 0), BlockKind::Functional);
    EXPECT_EQ(encoder_block_at(example, 0, 1), BlockKind::ADent);
    EXPECT_EQ(encoder_block_at(example, 29, 1), BlockKind::BBump);
    EXPECT_THROW(encoder_block_at(example, 30, 0), CompileError);
    EXPECT_THROW(encoder_block_at(example, 0, 3), CompileError);
}

TEST(EncoderBlocks, BitsFollowTheSidesOfEachTile)
{
    // Independent re-derivation: segment s < t carries bit s+1 of W (top)
    // and S (bottom); segment s > t carries bit s-t of N (top) and E
    // (bottom); bit k of color c is r iff (c >> (t-k)) & 1.
    for (int n : {2, 3, 4}) {
        for (int t : {1, 2, 3}) {
            const auto set = synthetic(n, colors_for_bits(t));
            ASSERT_EQ(set.bit_width(), t);
            for (int s = 0; s < 2 * t + 1; ++s) {
                for (int i = 0; i < n; ++i) {
                    const int col = 2 * n * s + 2 * i;
                    for (int row : {0, 2}) {
                        const auto kind = encoder_block_at(set, col, row);
                        if (s == t) {
                            EXPECT_EQ(kind, BlockKind::Functional);
                            continue;
                        }
                        const auto& tile = set.tile(static_cast<std::size_t>(i));
                        const int color = s < t ? (row == 2 ? tile.west : tile.south)
                                                : (row == 2 ? tile.north : tile.east);
                        const int bit = s < t ? s + 1 : s - t;
                        const bool r = ((color >> (t - bit)) & 1) != 0;
                        EXPECT_EQ(kind, r ? BlockKind::SlotRight : BlockKind::SlotLeft);
                    }
                }
            }
        }
    }
}

TEST(EncoderBlocks, SlotCensus)
{
    for (int n : {2, 3, 4}) {
        for (int t : {1, 2, 3}) {
            const auto set = synthetic(n, colors_for_bits(t));
            const EncoderLayout layout{n, t};
            const auto grid = encoder_grid(set);
            EXPECT_EQ(grid.size(), static_cast<std::size_t>(3 * layout.width()));
            for (int s = 0; s < layout.segments(); ++s) {
                for (int row : {0, 2}) {
                    int slots = 0;
                    for (int c = 0; c < layout.segment_width(); ++c) {
                        slots += is_slot(grid.kind_at({s * layout.segment_width() + c, row})) ? 1 : 0;
                    }
                    EXPECT_EQ(slots, s == layout.structural_segment() ? 0 : n);
                }
            }
            // Row census by block cardinalities.
            std::array<std::size_t, 3> rows{};
            for (const auto& [pos, entry] : grid.entries()) {
                rows[static_cast<std::size_t>(pos.row)] += block_cells(entry.kind).size();
            }
            const auto w = static_cast<std::size_t>(layout.width());
            const auto un = static_cast<std::size_t>(n), ut = static_cast<std::size_t>(t);
            EXPECT_EQ(rows[1], 87 + 117 + 100 * (w - 2));
            EXPECT_EQ(rows[0], 110 * un * (2 * ut + 1) + 82 * 2 * un * ut + 100 * un);
            EXPECT_EQ(rows[2], rows[0]);
        }
    }
}

TEST(Assemble, Examples)
{
    BlockGrid one;
    one.set({0, 0}, BlockKind::Functional);
    EXPECT_EQ(assemble(one, "sq").cells(), CellSet::rectangle(0, 0, 10, 10));

    BlockGrid pair;
    pair.set({0, 0}, BlockKind::YPlus);
    pair.set({0, 1}, BlockKind::YPlusDent);
    EXPECT_EQ(assemble(pair, "pair").cells(), CellSet::rectangle(0, 0, 10, 20));
}

TEST(Assemble, RejectsMismatchesOverlapsAndGaps)
{
    BlockGrid wrong;
    wrong.set({0, 0}, BlockKind::XBump);
    wrong.set({1, 0}, BlockKind::ADent);
    EXPECT_THROW(assemble(wrong, "w"), AssemblyError);

    BlockGrid into_square;
    into_square.set({0, 0}, BlockKind::YPlus);
    into_square.set({0, 1}, BlockKind::Functional);
    EXPECT_THROW(assemble(into_square, "o"), AssemblyError);

    BlockGrid unfilled;
    unfilled.set({0, 0}, BlockKind::Functional);
    unfilled.set({1, 0}, BlockKind::XDent);
    EXPECT_THROW(assemble(unfilled, "u"), AssemblyError);

    BlockGrid apart;
    apart.set({0, 0}, BlockKind::Functional);
    apart.set({2, 0}, BlockKind::Functional);
    EXPECT_THROW(assemble(apart, "a"), AssemblyError);

    EXPECT_THROW(assemble(BlockGrid{}, "empty"), AssemblyError);
}

TEST(Compile, ThreeTileCounts)
{
    const auto set = compile(three_tile_example());
    const std::vector<std::size_t> expected{8872, 1776, 1776, 620, 620, 4096, 18};
    ASSERT_EQ(set.pieces().size(), 7U);
    for (std::size_t i = 0; i < 7; ++i) {
        EXPECT_EQ(set.pieces()[i].size(), expected[i]) << set.pieces()[i].name();
        EXPECT_TRUE(is_connected(set.pieces()[i].cells()));
        EXPECT_EQ(set.pieces()[i].name(), piece_name(kAllPieces[i]));
    }
    EXPECT_EQ(set.n(), 3);
    EXPECT_EQ(set.m(), 4);
    EXPECT_EQ(set.t(), 2);
}

TEST(Compile, ThreeTileBlockFrames)
{
    const auto example = three_tile_example();
    const EncoderLayout layout{3, 2};
    EXPECT_EQ(layout.width(), 30);
    EXPECT_EQ(encoder_grid(example).size(), 90U);
    EXPECT_EQ(linker_body_grid(3).size(), 18U);
    const auto conn = connector_grid(3);
    EXPECT_EQ(conn.size(), 6U * 9U - 4U * 3U);
    Coord max_col = 0, max_row = 0;
    for (const auto& [pos, entry] : conn.entries()) {
        max_col = std::max(max_col, pos.col);
        max_row = std::max(max_row, pos.row);
    }
    EXPECT_EQ(max_col + 1, 6);
    EXPECT_EQ(max_row + 1, 9);

    // The encoder's cells sit in its 300 x 30 block frame except for the
    // bumps sticking out: Y- below row 0, Y+ above row 2, B east of col 29.
    const auto enc = compile(example).encoder().cells();
    const auto frame = CellSet::rectangle(0, 0, 300, 30);
    const auto outside = set_difference(enc, frame);
    EXPECT_EQ(outside.size(), 15U * 10U * 2U + 17U);
    EXPECT_EQ(enc.bounds(), (BoundingBox{0, -4, 304, 34}));
}

TEST(Compile, SmallestSetWidth)
{
    const auto set = synthetic(2, 2);
    EXPECT_EQ(EncoderLayout(2, set.bit_width()).width(), 12);
    EXPECT_EQ(encoder_grid(set).size(), 36U);
}

TEST(Compile, CountsMatchBlockCountingOracle)
{
    for (int n : {2, 3, 4}) {
        for (int t : {1, 2, 3}) {
            const auto set = compile(synthetic(n, colors_for_bits(t)));
            EXPECT_EQ(static_cast<Coord>(set.encoder().size()), oracle::encoder_cells(n, t));
            EXPECT_EQ(static_cast<Coord>(set.encoder().size()), 4 + 1168 * n * t + 620 * n);
            EXPECT_EQ(static_cast<Coord>(set.l_linker().size()), oracle::linker_cells(n));
            EXPECT_EQ(static_cast<Coord>(set.r_linker().size()), 580 * n + 36);
            EXPECT_EQ(static_cast<Coord>(set.a_filler().size()), oracle::filler_cells(oracle::kABump, oracle::kABump));
            EXPECT_EQ(static_cast<Coord>(set.b_filler().size()), 620);
            EXPECT_EQ(static_cast<Coord>(set.connector().size()), oracle::connector_cells(n));
            EXPECT_EQ(static_cast<Coord>(set.connector().size()), 1160 * n + 616);
            EXPECT_EQ(set.t_filler().size(), 18U);
            for (const auto& p : set.pieces()) {
                EXPECT_TRUE(is_connected(p.cells()));
            }
        }
    }
}

TEST(Compile, AreaIdentity)
{
    for (int n : {2, 3, 4}) {
        for (int t : {1, 2, 3}) {
            const auto set = compile(synthetic(n, colors_for_bits(t)));
            const auto lhs = static_cast<Coord>(set.encoder().size() + set.connector().size()) +
                             (n - 1) * 620 + 2 * t * (580 * n + 36) + 4 * t * (n - 1) * 18;
            EXPECT_EQ(lhs, 2400 * n * (t + 1)) << n << " " << t;
        }
    }
}

TEST(Compile, LinkersDifferOnlyInTabPosition)
{
    const auto set = compile(three_tile_example());
    const auto l = set.l_linker().cells();
    const auto r = set.r_linker().cells();
    const auto shared = set_intersection(l, r);
    EXPECT_EQ(shared.size(), l.size() - 36U);
    EXPECT_EQ(translate(set_difference(l, shared), {5, 0}), set_difference(r, shared));
}

TEST(Compile, SwappingTilesKeepsCounts)
{
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto base = synthetic(3 + trial % 2, 4);
        auto tiles = base.labeled_tiles();
        std::shuffle(tiles.begin(), tiles.end(), rng);
        const auto a = compile(base);
        const auto b = compile(WangTileSet(tiles, base.colors()));
        for (std::size_t i = 0; i < 7; ++i) {
            EXPECT_EQ(a.pieces()[i].size(), b.pieces()[i].size());
        }
    }
}

TEST(Compile, RejectsDegenerateSets)
{
    EXPECT_THROW(compile(WangTileSet({{"a", "b", "a", "b"}})), CompileError);
    EXPECT_THROW(compile(WangTileSet({{"a", "a", "a", "a"}, {"a", "a", "a", "a"}})), CompileError);
}
