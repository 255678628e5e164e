#pragma once

// SVG and ASCII rendering of piece sets and tilings. Stored data keeps y
// growing north; the SVG writer flips it.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "polytile/blocks.hpp"
#include "polytile/geometry.hpp"
#include "polytile/solver.hpp"

namespace polytile {

class RenderError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Closed boundary loops of a cell set, interior on the left: outer
/// boundaries run counter-clockwise, holes clockwise. Collinear vertices
/// are merged.
inline std::vector<std::vector<Vec2>> outline(const CellSet& cells)
{
    struct Edge {
        Vec2 from;
        Vec2 to;
    };
    auto key = [](Vec2 v) { return Cell{v.x, v.y}; };
    std::map<Cell, std::vector<std::size_t>> outgoing;
    std::vector<Edge> edges;
    auto add = [&](Vec2 a, Vec2 b) {
        outgoing[key(a)].push_back(edges.size());
        edges.push_back({a, b});
    };
    for (auto c : cells) {
        const Vec2 p{c.x, c.y};
        if (!cells.contains({c.x, c.y - 1})) {
            add(p, p + Vec2{1, 0});
        }
        if (!cells.contains({c.x + 1, c.y})) {
            add(p + Vec2{1, 0}, p + Vec2{1, 1});
        }
        if (!cells.contains({c.x, c.y + 1})) {
            add(p + Vec2{1, 1}, p + Vec2{0, 1});
        }
        if (!cells.contains({c.x - 1, c.y})) {
            add(p + Vec2{0, 1}, p);
        }
    }

    std::vector<char> used(edges.size(), 0);
    std::vector<std::vector<Vec2>> loops;
    for (std::size_t start = 0; start < edges.size(); ++start) {
        if (used[start]) {
            continue;
        }
        std::vector<Vec2> loop;
        std::size_t e = start;
        while (!used[e]) {
            used[e] = 1;
            loop.push_back(edges[e].from);
            const Vec2 dir = edges[e].to - edges[e].from;
            const auto& next = outgoing[key(edges[e].to)];
            // At a pinch vertex, prefer the left turn so that diagonal
            // neighbours are traced as separate loops.
            std::size_t chosen = next.front();
            int best = 3;
            for (auto candidate : next) {
                if (used[candidate] && candidate != start) {
                    continue;
                }
                const Vec2 nd = edges[candidate].to - edges[candidate].from;
                const Coord cross = dir.x * nd.y - dir.y * nd.x;
                const int rank = cross > 0 ? 0 : (cross == 0 ? 1 : 2);
                if (rank < best) {
                    best = rank;
                    chosen = candidate;
                }
            }
            e = chosen;
        }
        std::vector<Vec2> merged;
        const auto k = loop.size();
        for (std::size_t i = 0; i < k; ++i) {
            const Vec2 prev = loop[(i + k - 1) % k];
            const Vec2 cur = loop[i];
            const Vec2 nxt = loop[(i + 1) % k];
            const Vec2 d1 = cur - prev;
            const Vec2 d2 = nxt - cur;
            if (d1.x * d2.y - d1.y * d2.x != 0) {
                merged.push_back(cur);
            }
        }
        loops.push_back(std::move(merged));
    }
    return loops;
}

/// Signed shoelace area of a closed loop (positive for counter-clockwise).
inline Coord signed_area(const std::vector<Vec2>& loop)
{
    Coord twice = 0;
    for (std::size_t i = 0; i < loop.size(); ++i) {
        const auto& a = loop[i];
        const auto& b = loop[(i + 1) % loop.size()];
        twice += a.x * b.y - b.x * a.y;
    }
    return twice / 2;
}

inline constexpr std::array<const char*, 7> kPalette = {
    "#cfcfcf", // encoder
    "#fdd0a2", // L-linker
    "#fdae6b", // R-linker
    "#c6dbef", // A-filler
    "#c7e9c0", // B-filler
    "#dadaeb", // connector
    "#fcbba1", // T-filler
};

struct RenderSpec {
    Coord cell_size = 4;
    bool grid = false; // block-scale (10 unit) grid lines
};

namespace detail {

struct SvgShape {
    std::string piece;
    std::size_t color = 0;
    CellSet cells; // already translated into drawing position
};

inline std::string svg_document(const RenderSpec& spec, const std::vector<SvgShape>& shapes,
                                const std::optional<BoundingBox>& domain)
{
    if (shapes.empty()) {
        throw RenderError("nothing to render");
    }
    if (spec.cell_size < 1) {
        throw RenderError("cell size must be positive");
    }
    BoundingBox box = shapes.front().cells.bounds();
    auto grow = [&](const BoundingBox& b) {
        box.min_x = std::min(box.min_x, b.min_x);
        box.min_y = std::min(box.min_y, b.min_y);
        box.max_x = std::max(box.max_x, b.max_x);
        box.max_y = std::max(box.max_y, b.max_y);
    };
    for (const auto& s : shapes) {
        grow(s.cells.bounds());
    }
    if (domain) {
        grow(*domain);
    }
    const Coord cs = spec.cell_size;
    const Coord margin = cs;
    auto sx = [&](Coord x) { return (x - box.min_x) * cs + margin; };
    auto sy = [&](Coord y) { return (box.max_y - y) * cs + margin; };
    const Coord width = box.width() * cs + 2 * margin;
    const Coord height = box.height() * cs + 2 * margin;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    out << "<rect width=\"" << width << "\" height=\"" << height << "\" fill=\"#ffffff\"/>\n";
    if (spec.grid) {
        out << "<g stroke=\"#eeeeee\" stroke-width=\"1\">\n";
        const Coord gx0 = box.min_x - ((box.min_x % kBlockSize) + kBlockSize) % kBlockSize;
        const Coord gy0 = box.min_y - ((box.min_y % kBlockSize) + kBlockSize) % kBlockSize;
        for (Coord x = gx0; x <= box.max_x; x += kBlockSize) {
            if (x >= box.min_x) {
                out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(box.min_y) << "\" x2=\"" << sx(x) << "\" y2=\""
                    << sy(box.max_y) << "\"/>\n";
            }
        }
        for (Coord y = gy0; y <= box.max_y; y += kBlockSize) {
            if (y >= box.min_y) {
                out << "<line x1=\"" << sx(box.min_x) << "\" y1=\"" << sy(y) << "\" x2=\"" << sx(box.max_x)
                    << "\" y2=\"" << sy(y) << "\"/>\n";
            }
        }
        out << "</g>\n";
    }
    out << "<g fill-rule=\"evenodd\" stroke=\"#333333\" stroke-width=\"" << std::max<Coord>(1, cs / 4)
        << "\" stroke-linejoin=\"miter\">\n";
    for (const auto& s : shapes) {
        out << "<path data-piece=\"" << s.piece << "\" fill=\"" << kPalette[s.color % kPalette.size()]
            << "\" d=\"";
        bool first_loop = true;
        for (const auto& loop : outline(s.cells)) {
            if (!first_loop) {
                out << ' ';
            }
            first_loop = false;
            for (std::size_t i = 0; i < loop.size(); ++i) {
                out << (i == 0 ? "M" : " L") << sx(loop[i].x) << ' ' << sy(loop[i].y);
            }
            out << " Z";
        }
        out << "\"/>\n";
    }
    out << "</g>\n";
    if (domain) {
        out << "<rect x=\"" << sx(domain->min_x) << "\" y=\"" << sy(domain->max_y) << "\" width=\""
            << domain->width() * cs << "\" height=\"" << domain->height() * cs
            << "\" fill=\"none\" stroke=\"#d62728\" stroke-dasharray=\"" << 2 * cs << ' ' << cs << "\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace detail

/// Pieces side by side in list order, bottoms aligned, one block apart.
inline std::string render_pieces_svg(const RenderSpec& spec, const std::vector<Polyomino>& pieces)
{
    std::vector<detail::SvgShape> shapes;
    Coord cursor = 0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto box = pieces[i].cells().bounds();
        shapes.push_back({pieces[i].name(), i, translate(pieces[i].cells(), {cursor - box.min_x, -box.min_y})});
        cursor += box.width() + kBlockSize;
    }
    return detail::svg_document(spec, shapes, std::nullopt);
}

/// Every placement drawn at its stored offset. For a torus region the
/// fundamental domain [0, A) x [0, D) is outlined.
inline std::string render_tiling_svg(const RenderSpec& spec, const std::vector<Polyomino>& pieces,
                                     const Region& region, const std::vector<Placement>& placements)
{
    std::map<std::string, std::size_t> color;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        color.emplace(pieces[i].name(), i);
    }
    std::vector<detail::SvgShape> shapes;
    for (const auto& p : placements) {
        auto it = color.find(p.piece);
        if (it == color.end()) {
            throw RenderError("placement references unknown piece '" + p.piece + "'");
        }
        shapes.push_back({p.piece, it->second, translate(pieces[it->second].cells(), p.at)});
    }
    BoundingBox domain;
    if (region.is_torus()) {
        domain = {0, 0, region.lattice().period_x(), region.lattice().period_y()};
    } else {
        domain = {0, 0, region.rectangle().width, region.rectangle().height};
    }
    return detail::svg_document(spec, shapes, domain);
}

/// One character per cell for small rectangle tilings: placement k is drawn
/// with the k-th symbol of A-Z a-z 0-9 (cycling), '.' marks gaps and '#'
/// overlaps. North is the first line.
inline std::string render_ascii(const std::vector<Polyomino>& pieces, const Rectangle& rect,
                                const std::vector<Placement>& placements)
{
    static constexpr std::string_view symbols = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789";
    std::vector<std::string> rows(static_cast<std::size_t>(rect.height),
                                  std::string(static_cast<std::size_t>(rect.width), '.'));
    for (std::size_t k = 0; k < placements.size(); ++k) {
        const Polyomino* piece = nullptr;
        for (const auto& p : pieces) {
            if (p.name() == placements[k].piece) {
                piece = &p;
            }
        }
        if (piece == nullptr) {
            throw RenderError("placement references unknown piece '" + placements[k].piece + "'");
        }
        for (auto c : piece->cells()) {
            const Cell at = c + placements[k].at;
            if (at.x < 0 || at.y < 0 || at.x >= rect.width || at.y >= rect.height) {
                continue;
            }
            char& slot = rows[static_cast<std::size_t>(rect.height - 1 - at.y)][static_cast<std::size_t>(at.x)];
            slot = slot == '.' ? symbols[k % symbols.size()] : '#';
        }
    }
    std::string out;
    for (const auto& r : rows) {
        out += r + "\n";
    }
    return out;
}

} // namespace polytile
