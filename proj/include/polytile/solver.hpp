#pragma once

// Translational exact-cover tiling of rectangles and torus quotients.
//
// solve() runs Algorithm X over dancing links: region cells are the items,
// piece translations are the options. The item with the fewest remaining
// options is branched on (ties go to the lowest cell in (y, x) order) and
// options are tried in universe order, so output is deterministic. The
// first branching level may be split across threads.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <variant>
#include <vector>

#include "polytile/geometry.hpp"
#include "polytile/search.hpp"

namespace polytile {

class SolverInputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class SearchLimitExceeded : public std::runtime_error {
public:
    SearchLimitExceeded(std::uint64_t partial_count, std::uint64_t nodes)
        : std::runtime_error("search node limit exceeded after " + std::to_string(nodes) + " nodes (" +
                             std::to_string(partial_count) + " tilings found so far)"),
          partial_count_(partial_count)
    {
    }
    std::uint64_t partial_count() const { return partial_count_; }

private:
    std::uint64_t partial_count_;
};

struct Rectangle {
    Coord width = 0;
    Coord height = 0;
    friend bool operator==(const Rectangle&, const Rectangle&) = default;
};

/// A finite tiling domain: an axis-aligned rectangle at the origin, or the
/// quotient of the plane by a lattice.
class Region {
public:
    Region(Rectangle rect) : shape_(rect) // NOLINT(google-explicit-constructor)
    {
        if (rect.width <= 0 || rect.height <= 0) {
            throw SolverInputError("rectangle dimensions must be positive");
        }
    }
    Region(TorusLattice lattice) : shape_(lattice) {} // NOLINT(google-explicit-constructor)

    bool is_torus() const { return std::holds_alternative<TorusLattice>(shape_); }
    const TorusLattice& lattice() const { return std::get<TorusLattice>(shape_); }
    const Rectangle& rectangle() const { return std::get<Rectangle>(shape_); }

    std::size_t size() const
    {
        if (is_torus()) {
            return lattice().size();
        }
        return static_cast<std::size_t>(rectangle().width * rectangle().height);
    }

    /// Dense index of a plane cell in the region, or nullopt when a
    /// rectangle does not contain it. Torus cells always resolve.
    std::optional<std::size_t> index(Cell c) const
    {
        if (is_torus()) {
            return lattice().index(c);
        }
        const auto& r = rectangle();
        if (c.x < 0 || c.y < 0 || c.x >= r.width || c.y >= r.height) {
            return std::nullopt;
        }
        return static_cast<std::size_t>(c.y * r.width + c.x);
    }

    /// Canonical representative for a dense index; ascending index order is
    /// (y, x) order.
    Cell cell(std::size_t index) const
    {
        if (is_torus()) {
            return lattice().representative(index);
        }
        const auto i = static_cast<Coord>(index);
        return {i % rectangle().width, i / rectangle().width};
    }

private:
    std::variant<Rectangle, TorusLattice> shape_;
};

struct Placement {
    std::string piece;
    Vec2 at;
    friend bool operator==(const Placement&, const Placement&) = default;
};

struct Overlap {
    Cell cell;
    std::size_t first = 0;  // placement index already covering the cell
    std::size_t second = 0; // placement index covering it again
    friend bool operator==(const Overlap&, const Overlap&) = default;
};

struct CoverReport {
    CellSet uncovered;
    std::vector<Overlap> overlaps;
    CellSet outside; // cells of placements that leave a rectangle region

    bool exact() const { return uncovered.empty() && overlaps.empty() && outside.empty(); }
};

namespace detail {

inline std::unordered_map<std::string, const Polyomino*> piece_index(const std::vector<Polyomino>& pieces)
{
    std::unordered_map<std::string, const Polyomino*> out;
    for (const auto& p : pieces) {
        if (!out.emplace(p.name(), &p).second) {
            throw SolverInputError("duplicate piece name '" + p.name() + "'");
        }
    }
    return out;
}

} // namespace detail

/// Single pass over all placement cells, counting coverage per region cell.
inline CoverReport check_tiling(const Region& region, const std::vector<Polyomino>& pieces,
                                const std::vector<Placement>& placements)
{
    const auto by_name = detail::piece_index(pieces);
    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> owner(region.size(), kNone);
    CoverReport report;
    std::vector<Cell> outside;
    for (std::size_t k = 0; k < placements.size(); ++k) {
        auto it = by_name.find(placements[k].piece);
        if (it == by_name.end()) {
            throw SolverInputError("placement references unknown piece '" + placements[k].piece + "'");
        }
        for (auto c : it->second->cells()) {
            const Cell at = c + placements[k].at;
            auto idx = region.index(at);
            if (!idx) {
                outside.push_back(at);
                continue;
            }
            if (owner[*idx] == kNone) {
                owner[*idx] = k;
            } else {
                report.overlaps.push_back({region.cell(*idx), owner[*idx], k});
            }
        }
    }
    std::vector<Cell> gaps;
    for (std::size_t i = 0; i < owner.size(); ++i) {
        if (owner[i] == kNone) {
            gaps.push_back(region.cell(i));
        }
    }
    report.uncovered = CellSet(std::move(gaps));
    report.outside = CellSet(std::move(outside));
    std::sort(report.overlaps.begin(), report.overlaps.end(), [](const Overlap& a, const Overlap& b) {
        if (a.cell != b.cell) {
            return a.cell < b.cell;
        }
        return a.second < b.second;
    });
    return report;
}

/// Every translation of every piece that lies entirely inside `container`,
/// ordered by piece and then by offset in (y, x) order.
inline std::vector<Placement> contained_placements(const CellSet& container, const std::vector<Polyomino>& pieces)
{
    std::vector<Placement> out;
    for (const auto& piece : pieces) {
        if (piece.size() > container.size()) {
            continue;
        }
        const Cell anchor = piece.cells().front();
        std::vector<Cell> offsets;
        for (auto target : container) {
            const Vec2 shift = target - anchor;
            bool inside = true;
            for (auto c : piece.cells()) {
                if (!container.contains(c + shift)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                offsets.push_back({shift.x, shift.y});
            }
        }
        std::sort(offsets.begin(), offsets.end());
        for (auto o : offsets) {
            out.push_back({piece.name(), {o.x, o.y}});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Placement universe

struct UniverseOption {
    std::size_t piece = 0;
    Vec2 at;
    std::vector<std::size_t> cells; // dense region indices, ascending
};

/// All admissible placements of the pieces in a region. Rectangle:
/// translations that stay inside. Torus: one translation per quotient cell
/// (the piece's lowest cell lands on that representative), skipping those
/// that wrap onto themselves.
class PlacementUniverse {
public:
    PlacementUniverse(Region region, std::vector<Polyomino> pieces)
        : region_(std::move(region)), pieces_(std::move(pieces))
    {
        if (pieces_.empty()) {
            throw SolverInputError("placement universe needs at least one piece");
        }
        detail::piece_index(pieces_);
        for (std::size_t p = 0; p < pieces_.size(); ++p) {
            const auto& cells = pieces_[p].cells();
            const Cell anchor = cells.front();
            std::vector<Vec2> shifts;
            if (region_.is_torus()) {
                for (std::size_t i = 0; i < region_.size(); ++i) {
                    shifts.push_back(region_.cell(i) - anchor);
                }
            } else {
                const auto box = cells.bounds();
                const auto& r = region_.rectangle();
                for (Coord dy = -box.min_y; dy + box.max_y <= r.height; ++dy) {
                    for (Coord dx = -box.min_x; dx + box.max_x <= r.width; ++dx) {
                        shifts.push_back({dx, dy});
                    }
                }
            }
            for (auto shift : shifts) {
                UniverseOption opt{p, shift, {}};
                bool ok = true;
                for (auto c : cells) {
                    auto idx = region_.index(c + shift);
                    if (!idx) {
                        ok = false;
                        break;
                    }
                    opt.cells.push_back(*idx);
                }
                if (!ok) {
                    continue;
                }
                std::sort(opt.cells.begin(), opt.cells.end());
                if (std::adjacent_find(opt.cells.begin(), opt.cells.end()) != opt.cells.end()) {
                    continue;
                }
                options_.push_back(std::move(opt));
            }
        }
    }

    const Region& region() const { return region_; }
    const std::vector<Polyomino>& pieces() const { return pieces_; }
    const std::vector<UniverseOption>& options() const { return options_; }

    Placement placement(std::size_t option) const
    {
        const auto& o = options_.at(option);
        return {pieces_[o.piece].name(), o.at};
    }

private:
    Region region_;
    std::vector<Polyomino> pieces_;
    std::vector<UniverseOption> options_;
};

/// True iff `total` is a sum of piece areas with nonnegative multiplicities.
inline bool area_representable(std::size_t total, const std::vector<Polyomino>& pieces)
{
    std::vector<char> reachable(total + 1, 0);
    reachable[0] = 1;
    for (std::size_t a = 1; a <= total; ++a) {
        for (const auto& p : pieces) {
            if (p.size() <= a && reachable[a - p.size()]) {
                reachable[a] = 1;
                break;
            }
        }
    }
    return reachable[total] != 0;
}

struct SolveOptions {
    SearchMode mode = SearchMode::Count;
    std::optional<std::uint64_t> node_limit; // search nodes across all threads
    unsigned threads = 1;
};

struct SolveResult {
    std::uint64_t count = 0;
    std::vector<std::vector<Placement>> tilings;
    std::uint64_t nodes = 0;
};

namespace detail {

/// Array-based dancing links. Node 0 is the root header, nodes 1..items are
/// column headers, option nodes follow.
class DancingLinks {
public:
    DancingLinks(std::size_t items, const std::vector<UniverseOption>& options)
        : size_(items + 1, 0)
    {
        const auto headers = items + 1;
        left_.resize(headers);
        right_.resize(headers);
        up_.resize(headers);
        down_.resize(headers);
        column_.resize(headers);
        option_.resize(headers, 0);
        for (std::size_t i = 0; i < headers; ++i) {
            left_[i] = i == 0 ? items : i - 1;
            right_[i] = i == items ? 0 : i + 1;
            up_[i] = down_[i] = i;
            column_[i] = i;
        }
        for (std::size_t r = 0; r < options.size(); ++r) {
            std::size_t first = 0;
            for (auto cell : options[r].cells) {
                const std::size_t col = cell + 1;
                const std::size_t node = left_.size();
                column_.push_back(col);
                option_.push_back(r);
                up_.push_back(up_[col]);
                down_.push_back(col);
                down_[up_[col]] = node;
                up_[col] = node;
                ++size_[col];
                if (first == 0) {
                    first = node;
                    left_.push_back(node);
                    right_.push_back(node);
                } else {
                    left_.push_back(left_[first]);
                    right_.push_back(first);
                    right_[left_[first]] = node;
                    left_[first] = node;
                }
            }
        }
    }

    bool solved() const { return right_[0] == 0; }

    /// Fewest-options column, lowest index on ties; 0 if a column is dead.
    std::size_t choose() const
    {
        std::size_t best = 0;
        std::size_t best_size = std::numeric_limits<std::size_t>::max();
        for (auto c = right_[0]; c != 0; c = right_[c]) {
            if (size_[c] < best_size) {
                best = c;
                best_size = size_[c];
                if (best_size == 0) {
                    break;
                }
            }
        }
        return best;
    }

    std::size_t size_of(std::size_t col) const { return size_[col]; }
    std::size_t first_in(std::size_t col) const { return down_[col]; }
    std::size_t next_in_column(std::size_t node) const { return down_[node]; }
    std::size_t option_of(std::size_t node) const { return option_[node]; }

    void cover(std::size_t c)
    {
        right_[left_[c]] = right_[c];
        left_[right_[c]] = left_[c];
        for (auto i = down_[c]; i != c; i = down_[i]) {
            for (auto j = right_[i]; j != i; j = right_[j]) {
                up_[down_[j]] = up_[j];
                down_[up_[j]] = down_[j];
                --size_[column_[j]];
            }
        }
    }

    void uncover(std::size_t c)
    {
        for (auto i = up_[c]; i != c; i = up_[i]) {
            for (auto j = left_[i]; j != i; j = left_[j]) {
                ++size_[column_[j]];
                up_[down_[j]] = j;
                down_[up_[j]] = j;
            }
        }
        right_[left_[c]] = c;
        left_[right_[c]] = c;
    }

    void select(std::size_t node)
    {
        for (auto j = right_[node]; j != node; j = right_[j]) {
            cover(column_[j]);
        }
    }

    void deselect(std::size_t node)
    {
        for (auto j = left_[node]; j != node; j = left_[j]) {
            uncover(column_[j]);
        }
    }

private:
    std::vector<std::size_t> left_, right_, up_, down_, column_, option_, size_;
};

struct SearchState {
    const PlacementUniverse* universe = nullptr;
    SearchMode mode = SearchMode::Count;
    std::optional<std::uint64_t> node_limit;
    std::atomic<std::uint64_t>* nodes = nullptr;
    std::atomic<bool>* aborted = nullptr;
};

struct BranchResult {
    std::uint64_t count = 0;
    std::vector<std::vector<std::size_t>> solutions;
};

/// Returns true when the search should stop (first solution in First mode).
inline bool search(DancingLinks& dl, const SearchState& state, std::vector<std::size_t>& chosen, BranchResult& out)
{
    if (state.aborted->load(std::memory_order_relaxed)) {
        return true;
    }
    const auto visited = state.nodes->fetch_add(1, std::memory_order_relaxed) + 1;
    if (state.node_limit && visited > *state.node_limit) {
        state.aborted->store(true, std::memory_order_relaxed);
        return true;
    }
    if (dl.solved()) {
        ++out.count;
        if (state.mode != SearchMode::Count) {
            out.solutions.push_back(chosen);
        }
        return state.mode == SearchMode::First;
    }
    const auto col = dl.choose();
    if (col == 0 || dl.size_of(col) == 0) {
        return false;
    }
    dl.cover(col);
    bool stop = false;
    for (auto node = dl.first_in(col); node != col && !stop; node = dl.next_in_column(node)) {
        chosen.push_back(dl.option_of(node));
        dl.select(node);
        stop = search(dl, state, chosen, out);
        dl.deselect(node);
        chosen.pop_back();
    }
    dl.uncover(col);
    return stop;
}

} // namespace detail

/// Exact covers of the universe's region by its placements (pieces may be
/// reused). Throws SearchLimitExceeded when the node budget runs out.
inline SolveResult solve(const PlacementUniverse& universe, const SolveOptions& options = {})
{
    SolveResult result;
    if (!area_representable(universe.region().size(), universe.pieces())) {
        return result;
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> aborted{false};
    detail::SearchState state{&universe, options.mode, options.node_limit, &nodes, &aborted};
    const auto items = universe.region().size();

    auto to_tiling = [&](const std::vector<std::size_t>& chosen) {
        auto sorted = chosen;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Placement> tiling;
        for (auto o : sorted) {
            tiling.push_back(universe.placement(o));
        }
        return tiling;
    };

    auto finish = [&](std::vector<detail::BranchResult>& branches) {
        for (auto& b : branches) {
            result.count += b.count;
            for (auto& s : b.solutions) {
                if (options.mode == SearchMode::First && !result.tilings.empty()) {
                    break;
                }
                result.tilings.push_back(to_tiling(s));
            }
        }
        if (options.mode == SearchMode::First) {
            result.count = result.tilings.empty() ? 0 : 1;
        }
        result.nodes = nodes.load();
        if (aborted.load()) {
            throw SearchLimitExceeded(result.count, result.nodes);
        }
        return result;
    };

    detail::DancingLinks root(items, universe.options());
    const unsigned threads = std::max(1U, options.threads);
    if (threads == 1 || root.solved()) {
        std::vector<detail::BranchResult> branches(1);
        std::vector<std::size_t> chosen;
        detail::search(root, state, chosen, branches[0]);
        return finish(branches);
    }

    // Split on the first branching item; each worker owns a private copy of
    // the link arrays and takes every threads-th branch. Branch results are
    // merged in branch order, so output does not depend on the thread count.
    nodes.fetch_add(1);
    const auto col = root.choose();
    std::vector<std::size_t> first_level;
    if (col != 0) {
        for (auto node = root.first_in(col); node != col; node = root.next_in_column(node)) {
            first_level.push_back(node);
        }
    }
    std::vector<detail::BranchResult> branches(first_level.size());
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
        workers.emplace_back([&, w] {
            detail::DancingLinks dl = root;
            dl.cover(col);
            for (std::size_t b = w; b < first_level.size(); b += threads) {
                std::vector<std::size_t> chosen{dl.option_of(first_level[b])};
                dl.select(first_level[b]);
                detail::search(dl, state, chosen, branches[b]);
                dl.deselect(first_level[b]);
            }
        });
    }
    for (auto& t : workers) {
        t.join();
    }
    return finish(branches);
}

} // namespace polytile
