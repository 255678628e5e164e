// Runs each acceptance criterion once and prints one PASS/FAIL line per
// criterion. Exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "../oracles.hpp"
#include "polytile/polytile.hpp"

using namespace polytile;

namespace {

/// Collects failed checks for one criterion.
class Check {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            failures_.push_back(what);
        }
    }
    template <typename A, typename B>
    void equal(const A& actual, const B& expected, const std::string& what)
    {
        if (!(actual == expected)) {
            std::ostringstream s;
            s << what << ": got " << actual << ", expected " << expected;
            failures_.push_back(s.str());
        }
    }
    const std::vector<std::string>& failures() const { return failures_; }

private:
    std::vector<std::string> failures_;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Check&)> body;
};

std::size_t area_of(const std::vector<Polyomino>& pieces, const std::vector<Placement>& placements)
{
    std::map<std::string, std::size_t> size;
    for (const auto& p : pieces) {
        size[p.name()] = p.size();
    }
    std::size_t total = 0;
    for (const auto& p : placements) {
        total += size.at(p.piece);
    }
    return total;
}

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

void block_catalog(Check& c)
{
    const std::vector<std::pair<BlockKind, std::size_t>> table = {
        {BlockKind::Functional, 100}, {BlockKind::SlotLeft, 82},   {BlockKind::SlotRight, 82},
        {BlockKind::Tab, 18},         {BlockKind::YPlus, 110},     {BlockKind::YMinus, 110},
        {BlockKind::YPlusDent, 90},   {BlockKind::YMinusDent, 90}, {BlockKind::XBump, 109},
        {BlockKind::XDent, 91},       {BlockKind::ABump, 113},     {BlockKind::ADent, 87},
        {BlockKind::BBump, 117},      {BlockKind::BDent, 83},
    };
    for (auto [kind, size] : table) {
        c.equal(block_cells(kind).size(), size, "cells of " + std::string(to_string(kind)));
    }
    int matched = 0;
    for (auto bump : kBumpKinds) {
        ++matched;
        c.expect(complement_check(bump, partner(bump), canonical_offset(bump)),
                 "matched pair " + std::string(to_string(bump)));
    }
    for (auto slot : {BlockKind::SlotLeft, BlockKind::SlotRight}) {
        ++matched;
        c.expect(complement_check(slot, BlockKind::Tab, {0, 0}), "slot/tab pair " + std::string(to_string(slot)));
    }
    c.equal(matched, 7, "matched pairs checked");
    int mismatched = 0;
    for (auto bump : kBumpKinds) {
        for (auto dent : kDentKinds) {
            if (partner(bump) == dent) {
                continue;
            }
            ++mismatched;
            for (Vec2 off : {Vec2{10, 0}, Vec2{-10, 0}, Vec2{0, 10}, Vec2{0, -10}}) {
                c.expect(!complement_check(bump, dent, off),
                         std::string("mismatched ") + std::string(to_string(bump)) + "/" +
                             std::string(to_string(dent)));
            }
        }
    }
    c.equal(mismatched, 20, "mismatched pairings");
}

void compile_three_tiles(Check& c)
{
    const auto example = three_tile_example();
    const auto set = compile(example);
    const std::vector<std::size_t> expected{8872, 1776, 1776, 620, 620, 4096, 18};
    c.equal(set.pieces().size(), std::size_t{7}, "piece count");
    for (std::size_t i = 0; i < set.pieces().size() && i < expected.size(); ++i) {
        c.equal(set.pieces()[i].size(), expected[i], set.pieces()[i].name());
        c.expect(is_connected(set.pieces()[i].cells()), set.pieces()[i].name() + " connected");
    }
    const auto grid = encoder_grid(example);
    const EncoderLayout layout{3, 2};
    c.equal(layout.width(), 30, "encoder width");
    c.equal(grid.size(), std::size_t{90}, "encoder blocks");
    c.expect(grid.kind_at({0, 1}) == BlockKind::ADent, "aDent at (0,1)");
    c.expect(grid.kind_at({29, 1}) == BlockKind::BBump, "BBump at (29,1)");
    for (int col = 12; col < 18; ++col) {
        for (int row = 0; row < 3; ++row) {
            c.expect(!is_slot(grid.kind_at({col, row})), "structural segment slot-free");
        }
    }
}

void area_identity(Check& c)
{
    for (int n : {2, 3, 4}) {
        for (int t : {1, 2, 3}) {
            const auto source = synthetic(n, 1 << t);
            c.equal(source.bit_width(), t, "bit width");
            const auto set = compile(source);
            const auto lhs = static_cast<Coord>(set.encoder().size() + set.connector().size()) + (n - 1) * 620 +
                             2 * t * (580 * n + 36) + 72 * t * (n - 1);
            std::ostringstream label;
            label << "n=" << n << " t=" << t;
            c.equal(lhs, 2400 * n * (t + 1), "area identity " + label.str());
            c.equal(static_cast<Coord>(set.encoder().size()), oracle::encoder_cells(n, t), "encoder " + label.str());
            c.equal(static_cast<Coord>(set.connector().size()), oracle::connector_cells(n),
                    "connector " + label.str());
            c.equal(static_cast<Coord>(set.l_linker().size()), oracle::linker_cells(n), "linker " + label.str());
        }
    }
}

void wang_solver(Check& c)
{
    const auto example = three_tile_example();
    const auto first = solve_torus(example, 3, 1, SearchMode::First);
    c.equal(first.tilings.size(), std::size_t{1}, "3x1 tiling found");
    if (!first.tilings.empty()) {
        auto row = first.tilings[0].cells;
        bool cyclic = false;
        for (int k = 0; k < 3; ++k) {
            cyclic = cyclic || row == std::vector<int>{0, 1, 2};
            std::rotate(row.begin(), row.begin() + 1, row.end());
        }
        c.expect(cyclic, "3x1 tiling is a cyclic shift of T1 T2 T3");
    }
    c.equal(solve_torus(example, 3, 1, SearchMode::Count).count, std::uint64_t{3}, "3x1 count");
    c.equal(solve_torus(example, 1, 1, SearchMode::Count).count, std::uint64_t{0}, "1x1 count");
    const WangTileSet self({{"a", "a", "a", "a"}});
    c.expect(solve_torus(self, 1, 1, SearchMode::Count).count >= 1, "self-matching tile tiles 1x1");
}

void forward_simulation(Check& c)
{
    const auto example = three_tile_example();
    const auto pieces = compile(example).pieces();
    const WangTiling row{3, 1, true, {0, 1, 2}};
    const auto sim = emit_placements(example, row);
    c.equal(sim.placements.size(), std::size_t{72}, "placements");
    c.equal(area_of(pieces, sim.placements), std::size_t{64800}, "placement area");
    c.expect(sim.lattice == TorusLattice({540, -180}, {180, 60}), "lattice ((540,-180),(180,60))");
    const Region region(sim.lattice);
    c.equal(region.size(), std::size_t{64800}, "quotient size");
    const auto report = check_tiling(region, pieces, sim.placements);
    c.expect(report.exact(), "exact cover");

    auto minus = sim.placements;
    for (auto it = minus.begin(); it != minus.end(); ++it) {
        if (it->piece == "T-filler") {
            minus.erase(it);
            break;
        }
    }
    const auto gap = check_tiling(region, pieces, minus);
    c.equal(gap.uncovered.size(), std::size_t{18}, "uncovered after deleting a T-filler");
    c.expect(gap.overlaps.empty(), "no overlaps after deleting a T-filler");

    c.expect(linker_alignment_check(example, row).empty(), "alignment of the valid tiling");
    c.expect(!linker_alignment_check(example, {3, 1, true, {0, 2, 1}}).empty(), "alignment of a broken tiling");
}

void random_property(Check& c)
{
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(2, 4);
    int passed = 0;
    int attempts = 0;
    while (passed < 20 && attempts < 2000) {
        ++attempts;
        const int n = size(rng);
        const int m = size(rng);
        std::uniform_int_distribution<int> color(0, m - 1);
        std::vector<LabeledTile> tiles;
        for (int i = 0; i < n; ++i) {
            tiles.push_back({"c" + std::to_string(color(rng)), "c" + std::to_string(color(rng)),
                             "c" + std::to_string(color(rng)), "c" + std::to_string(color(rng))});
        }
        const WangTileSet set(tiles);
        if (set.m() < 2) {
            continue;
        }
        const auto found = find_periodic(set, 36);
        if (!found) {
            continue;
        }
        const auto pieces = compile(set).pieces();
        const auto sim = emit_placements(set, *found);
        const Region region(sim.lattice);
        c.equal(area_of(pieces, sim.placements), region.size(), "area of random set " + std::to_string(passed));
        const auto report = check_tiling(region, pieces, sim.placements);
        c.expect(report.exact(), "exact cover for random set " + std::to_string(passed));
        c.expect(linker_alignment_check(set, *found).empty(), "alignment for random set " + std::to_string(passed));
        ++passed;
    }
    c.expect(passed >= 20, "found 20 periodic random sets (found " + std::to_string(passed) + ")");
}

void solver_oracles(Check& c)
{
    const Polyomino h("h", CellSet{{0, 0}, {1, 0}});
    const Polyomino v("v", CellSet{{0, 0}, {0, 1}});
    const unsigned many = std::max(4U, std::thread::hardware_concurrency());
    const std::vector<std::uint64_t> expected{1, 2, 3, 5, 8, 13, 21, 34, 55, 89};
    for (int n = 1; n <= 10; ++n) {
        const PlacementUniverse u(Rectangle{n, 2}, {h, v});
        for (unsigned threads : {1U, 2U, many}) {
            SolveOptions o;
            o.threads = threads;
            c.equal(solve(u, o).count, expected[static_cast<std::size_t>(n - 1)],
                    "2x" + std::to_string(n) + " with " + std::to_string(threads) + " threads");
        }
        c.equal(oracle::fibonacci(n + 1), expected[static_cast<std::size_t>(n - 1)], "Fibonacci oracle");
    }
    const Polyomino tromino("L", CellSet{{0, 0}, {1, 0}, {0, 1}});
    for (unsigned threads : {1U, 2U, many}) {
        SolveOptions o;
        o.threads = threads;
        c.equal(solve(PlacementUniverse(Rectangle{3, 2}, {tromino}), o).count, std::uint64_t{0}, "L-tromino on 2x3");
    }
}

void slot_containment(Check& c)
{
    const auto pieces = compile(three_tile_example()).pieces();
    const auto square = CellSet::rectangle(0, 0, 10, 10);
    for (auto kind : {BlockKind::SlotLeft, BlockKind::SlotRight}) {
        const auto slot = set_difference(square, block_cells(kind));
        const auto found = contained_placements(slot, pieces);
        c.equal(found.size(), std::size_t{1}, std::string("placements inside ") + std::string(to_string(kind)));
        if (!found.empty()) {
            c.equal(found[0].piece, std::string("T-filler"), "the contained piece");
        }
    }
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "block catalog cardinalities and complement checks", 1.0, block_catalog},
        {2, "compile the three-tile set", 1.0, compile_three_tiles},
        {3, "area identity over n in {2,3,4}, t in {1,2,3}", 60.0, area_identity},
        {4, "Wang torus solver", 1.0, wang_solver},
        {5, "forward simulation of the 3x1 torus", 30.0, forward_simulation},
        {6, "random periodic sets simulate and verify", 300.0, random_property},
        {7, "solver oracle equivalence", 10.0, solver_oracles},
        {8, "slot containment uniqueness", 60.0, slot_containment},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        Check check;
        const auto start = std::chrono::steady_clock::now();
        try {
            cr.body(check);
        } catch (const std::exception& e) {
            check.expect(false, std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > cr.limit_seconds) {
            std::ostringstream s;
            s << "took " << seconds << " s, limit " << cr.limit_seconds << " s";
            check.expect(false, s.str());
        }
        const bool ok = check.failures().empty();
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << cr.id << ": " << cr.title << " ("
                  << static_cast<long>(seconds * 1000) << " ms)\n";
        for (const auto& f : check.failures()) {
            std::cout << "      " << f << "\n";
        }
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
              << " criteria passed\n";
    return failed;
}
