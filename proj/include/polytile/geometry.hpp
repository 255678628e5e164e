#pragma once

// Integer-lattice cell sets, rectilinear polygons, and torus quotients.
//
// Coordinates follow the usual mathematical convention: x grows east and
// y grows north. Cell (x, y) is the unit square [x, x+1) x [y, y+1).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <queue>
#include <iterator>
#include <tuple>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polytile {

using Coord = std::int64_t;

class GeometryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Vec2 {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(Vec2, Vec2) = default;
    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
    friend constexpr Vec2 operator*(Coord k, Vec2 a) { return {k * a.x, k * a.y}; }
};

/// A unit cell. Ordered by (y, x), which is the canonical order used for
/// every serialized cell list.
struct Cell {
    Coord x = 0;
    Coord y = 0;

    friend constexpr bool operator==(Cell, Cell) = default;
    friend constexpr std::strong_ordering operator<=>(Cell a, Cell b)
    {
        if (auto c = a.y <=> b.y; c != 0) {
            return c;
        }
        return a.x <=> b.x;
    }
    friend constexpr Cell operator+(Cell c, Vec2 v) { return {c.x + v.x, c.y + v.y}; }
    friend constexpr Cell operator-(Cell c, Vec2 v) { return {c.x - v.x, c.y - v.y}; }
    friend constexpr Vec2 operator-(Cell a, Cell b) { return {a.x - b.x, a.y - b.y}; }
};

struct CellHash {
    std::size_t operator()(Cell c) const noexcept
    {
        auto h = static_cast<std::uint64_t>(c.x) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(c.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct BoundingBox {
    Coord min_x = 0;
    Coord min_y = 0;
    Coord max_x = 0; // exclusive
    Coord max_y = 0; // exclusive

    Coord width() const { return max_x - min_x; }
    Coord height() const { return max_y - min_y; }
    friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

/// Finite, duplicate-free set of cells kept sorted in canonical (y, x) order.
class CellSet {
public:
    using const_iterator = std::vector<Cell>::const_iterator;

    CellSet() = default;
    CellSet(std::initializer_list<Cell> cells) : cells_(cells) { normalize(); }
    explicit CellSet(std::vector<Cell> cells) : cells_(std::move(cells)) { normalize(); }

    static CellSet rectangle(Coord x0, Coord y0, Coord width, Coord height)
    {
        std::vector<Cell> cells;
        cells.reserve(static_cast<std::size_t>(std::max<Coord>(0, width * height)));
        for (Coord y = y0; y < y0 + height; ++y) {
            for (Coord x = x0; x < x0 + width; ++x) {
                cells.push_back({x, y});
            }
        }
        CellSet out;
        out.cells_ = std::move(cells);
        return out;
    }

    std::size_t size() const { return cells_.size(); }
    bool empty() const { return cells_.empty(); }
    const_iterator begin() const { return cells_.begin(); }
    const_iterator end() const { return cells_.end(); }
    const Cell& front() const { return cells_.front(); }
    const std::vector<Cell>& cells() const { return cells_; }

    bool contains(Cell c) const { return std::binary_search(cells_.begin(), cells_.end(), c); }

    BoundingBox bounds() const
    {
        if (cells_.empty()) {
            return {};
        }
        BoundingBox box{cells_.front().x, cells_.front().y, cells_.front().x + 1, cells_.front().y + 1};
        for (auto c : cells_) {
            box.min_x = std::min(box.min_x, c.x);
            box.min_y = std::min(box.min_y, c.y);
            box.max_x = std::max(box.max_x, c.x + 1);
            box.max_y = std::max(box.max_y, c.y + 1);
        }
        return box;
    }

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    void normalize()
    {
        std::sort(cells_.begin(), cells_.end());
        cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    }

    std::vector<Cell> cells_;
};

inline CellSet translate(const CellSet& s, Vec2 v)
{
    std::vector<Cell> out;
    out.reserve(s.size());
    for (auto c : s) {
        out.push_back(c + v);
    }
    return CellSet(std::move(out));
}

inline CellSet set_union(const CellSet& a, const CellSet& b)
{
    std::vector<Cell> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet(std::move(out));
}

inline CellSet set_difference(const CellSet& a, const CellSet& b)
{
    std::vector<Cell> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet(std::move(out));
}

inline CellSet set_intersection(const CellSet& a, const CellSet& b)
{
    std::vector<Cell> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return CellSet(std::move(out));
}

/// Edge-adjacency connectivity. The empty set is not connected.
inline bool is_connected(const CellSet& s)
{
    if (s.empty()) {
        return false;
    }
    const auto& cells = s.cells();
    std::vector<char> seen(cells.size(), 0);
    std::queue<std::size_t> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t reached = 1;
    constexpr Vec2 steps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    while (!frontier.empty()) {
        auto i = frontier.front();
        frontier.pop();
        for (auto d : steps) {
            auto n = cells[i] + d;
            auto it = std::lower_bound(cells.begin(), cells.end(), n);
            if (it == cells.end() || *it != n) {
                continue;
            }
            auto j = static_cast<std::size_t>(it - cells.begin());
            if (!seen[j]) {
                seen[j] = 1;
                ++reached;
                frontier.push(j);
            }
        }
    }
    return reached == cells.size();
}

/// A named, non-empty, edge-connected cell set.
class Polyomino {
public:
    Polyomino(std::string name, CellSet cells) : name_(std::move(name)), cells_(std::move(cells))
    {
        if (cells_.empty()) {
            throw GeometryError("polyomino '" + name_ + "' is empty");
        }
        if (!is_connected(cells_)) {
            throw GeometryError("polyomino '" + name_ + "' is not edge-connected");
        }
    }

    const std::string& name() const { return name_; }
    const CellSet& cells() const { return cells_; }
    std::size_t size() const { return cells_.size(); }

    friend bool operator==(const Polyomino&, const Polyomino&) = default;

private:
    std::string name_;
    CellSet cells_;
};

// ---------------------------------------------------------------------------
// Rectilinear polygons

struct RectilinearPolygon {
    std::vector<Vec2> vertices;
};

namespace detail {

struct Segment {
    Vec2 a;
    Vec2 b;
    bool horizontal() const { return a.y == b.y; }
    Coord lo_x() const { return std::min(a.x, b.x); }
    Coord hi_x() const { return std::max(a.x, b.x); }
    Coord lo_y() const { return std::min(a.y, b.y); }
    Coord hi_y() const { return std::max(a.y, b.y); }
};

inline bool segments_touch(const Segment& s, const Segment& t)
{
    return s.lo_x() <= t.hi_x() && t.lo_x() <= s.hi_x() && s.lo_y() <= t.hi_y() && t.lo_y() <= s.hi_y();
}

} // namespace detail

/// Throws GeometryError unless the polygon is simple, closed, and has
/// axis-parallel edges that alternate between horizontal and vertical.
inline void validate_polygon(const RectilinearPolygon& poly)
{
    const auto& v = poly.vertices;
    const auto n = v.size();
    if (n < 4 || n % 2 != 0) {
        throw GeometryError("rectilinear polygon needs an even number (>= 4) of vertices");
    }
    std::vector<detail::Segment> edges;
    edges.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        detail::Segment e{v[i], v[(i + 1) % n]};
        if (e.a == e.b) {
            throw GeometryError("rectilinear polygon has a zero-length edge");
        }
        if (e.a.x != e.b.x && e.a.y != e.b.y) {
            throw GeometryError("rectilinear polygon has a non axis-parallel edge");
        }
        edges.push_back(e);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (edges[i].horizontal() == edges[(i + 1) % n].horizontal()) {
            throw GeometryError("rectilinear polygon edges must alternate horizontal/vertical");
        }
    }
    // Adjacent edges share exactly one endpoint (guaranteed by alternation);
    // any other contact is a self-intersection.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) {
                continue;
            }
            if (detail::segments_touch(edges[i], edges[j])) {
                throw GeometryError("rectilinear polygon is not simple");
            }
        }
    }
}

inline Coord shoelace_area(const RectilinearPolygon& poly)
{
    const auto& v = poly.vertices;
    Coord twice = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& q = v[(i + 1) % v.size()];
        twice += p.x * q.y - q.x * p.y;
    }
    return (twice < 0 ? -twice : twice) / 2;
}

/// Cells whose centers lie inside the polygon under the even-odd rule.
inline CellSet rasterize(const RectilinearPolygon& poly)
{
    validate_polygon(poly);
    const auto& v = poly.vertices;
    Coord min_y = v.front().y;
    Coord max_y = v.front().y;
    for (auto p : v) {
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    std::vector<Cell> out;
    std::vector<Coord> crossings;
    for (Coord row = min_y; row < max_y; ++row) {
        // The scanline sits at row + 1/2, so a vertical edge [y0, y1)
        // crosses it iff y0 <= row < y1.
        crossings.clear();
        for (std::size_t i = 0; i < v.size(); ++i) {
            const auto& p = v[i];
            const auto& q = v[(i + 1) % v.size()];
            if (p.x != q.x) {
                continue;
            }
            if (std::min(p.y, q.y) <= row && row < std::max(p.y, q.y)) {
                crossings.push_back(p.x);
            }
        }
        std::sort(crossings.begin(), crossings.end());
        for (std::size_t k = 0; k + 1 < crossings.size(); k += 2) {
            for (Coord x = crossings[k]; x < crossings[k + 1]; ++x) {
                out.push_back({x, row});
            }
        }
    }
    return CellSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Torus quotients Z^2 / L

/// Integer lattice spanned by two vectors. Internally kept in Hermite form
/// {(A, 0), (B, D)} with A, D > 0 and 0 <= B < A, which gives the
/// fundamental domain [0, A) x [0, D).
class TorusLattice {
public:
    TorusLattice(Vec2 b1, Vec2 b2) : b1_(b1), b2_(b2)
    {
        const Coord det = b1.x * b2.y - b1.y * b2.x;
        if (det == 0) {
            throw GeometryError("degenerate torus lattice (determinant 0)");
        }
        // Extended gcd on the y components yields the basis vector with the
        // smallest positive y; the complementary combination has y = 0.
        auto [g, s, t] = ext_gcd(b1.y, b2.y);
        if (g == 0) {
            throw GeometryError("degenerate torus lattice");
        }
        Vec2 w2 = s * b1 + t * b2;
        if (w2.y < 0) {
            w2 = -w2;
            g = -g;
        }
        const Coord ay = g < 0 ? -g : g;
        Vec2 w1 = (b2.y / g) * b1 - (b1.y / g) * b2;
        a_ = w1.x < 0 ? -w1.x : w1.x;
        d_ = ay;
        b_ = floor_mod(w2.x, a_);
    }

    Vec2 b1() const { return b1_; }
    Vec2 b2() const { return b2_; }
    Coord determinant() const { return a_ * d_; }
    std::size_t size() const { return static_cast<std::size_t>(a_ * d_); }
    Coord period_x() const { return a_; }
    Coord period_y() const { return d_; }
    Coord shear() const { return b_; }

    Cell reduce(Cell c) const
    {
        const Coord k = floor_div(c.y, d_);
        const Coord y = c.y - k * d_;
        const Coord x = floor_mod(c.x - k * b_, a_);
        return {x, y};
    }

    std::size_t index(Cell c) const
    {
        auto r = reduce(c);
        return static_cast<std::size_t>(r.y * a_ + r.x);
    }

    Cell representative(std::size_t index) const
    {
        const auto i = static_cast<Coord>(index);
        return {i % a_, i / a_};
    }

    bool contains_vector(Vec2 v) const { return reduce(Cell{v.x, v.y}) == Cell{0, 0}; }

    /// Same lattice, regardless of the basis used to construct it.
    friend bool operator==(const TorusLattice& l, const TorusLattice& r)
    {
        return l.a_ == r.a_ && l.b_ == r.b_ && l.d_ == r.d_;
    }

private:
    static Coord floor_div(Coord a, Coord b)
    {
        Coord q = a / b;
        if ((a % b != 0) && ((a < 0) != (b < 0))) {
            --q;
        }
        return q;
    }
    static Coord floor_mod(Coord a, Coord b) { return a - floor_div(a, b) * b; }

    struct Gcd {
        Coord g, s, t;
    };
    static Gcd ext_gcd(Coord a, Coord b)
    {
        Coord old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
        while (r != 0) {
            const Coord q = old_r / r;
            std::tie(old_r, r) = std::pair{r, old_r - q * r};
            std::tie(old_s, s) = std::pair{s, old_s - q * s};
            std::tie(old_t, t) = std::pair{t, old_t - q * t};
        }
        return {old_r, old_s, old_t};
    }

    Vec2 b1_;
    Vec2 b2_;
    Coord a_ = 1;
    Coord b_ = 0;
    Coord d_ = 1;
};

inline Cell reduce_mod(Cell c, const TorusLattice& lattice) { return lattice.reduce(c); }

} // namespace polytile
