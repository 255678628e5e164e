#pragma once

// JSON file formats: Wang sets, Wang tilings, piece sets, polyomino tilings,
// and cover reports. Cells are always written in (y, x) order and object
// keys in a fixed order, so serialization is byte-stable.

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polytile/compiler.hpp"
#include "polytile/simulate.hpp"
#include "polytile/solver.hpp"
#include "polytile/wang.hpp"

namespace polytile::io {

using Json = nlohmann::ordered_json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw FormatError("cannot write '" + path + "'");
    }
    out << text;
}

inline Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
}

/// Pretty-printed with two-space indent, but every [x, y] pair on one line.
inline std::string dump(const Json& j)
{
    std::string out;
    std::function<void(const Json&, int)> emit = [&](const Json& v, int depth) {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        const std::string inner(static_cast<std::size_t>(depth + 1) * 2, ' ');
        const bool flat = v.is_primitive() ||
                          (v.is_array() && std::all_of(v.begin(), v.end(), [](const Json& e) {
                               return e.is_primitive();
                           })) ||
                          v.empty();
        if (flat) {
            out += v.dump();
            return;
        }
        if (v.is_array()) {
            out += "[\n";
            for (std::size_t i = 0; i < v.size(); ++i) {
                out += inner;
                emit(v[i], depth + 1);
                out += i + 1 < v.size() ? ",\n" : "\n";
            }
            out += pad + "]";
            return;
        }
        out += "{\n";
        std::size_t i = 0;
        for (auto it = v.begin(); it != v.end(); ++it, ++i) {
            out += inner + Json(it.key()).dump() + ": ";
            emit(it.value(), depth + 1);
            out += i + 1 < v.size() ? ",\n" : "\n";
        }
        out += pad + "}";
    };
    emit(j, 0);
    out += "\n";
    return out;
}

namespace detail {

template <typename T>
T get(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw FormatError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(std::string("bad field '") + key + "': " + e.what());
    }
}

inline Json cells_to_json(const CellSet& cells)
{
    Json arr = Json::array();
    for (auto c : cells) {
        arr.push_back(Json::array({c.x, c.y}));
    }
    return arr;
}

inline Vec2 vec_from_json(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
        throw FormatError("expected an integer pair [x, y]");
    }
    return {j[0].get<Coord>(), j[1].get<Coord>()};
}

inline CellSet cells_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw FormatError("expected an array of cells");
    }
    std::vector<Cell> cells;
    for (const auto& e : j) {
        auto v = vec_from_json(e);
        cells.push_back({v.x, v.y});
    }
    return CellSet(std::move(cells));
}

} // namespace detail

// --- Wang sets --------------------------------------------------------------

inline Json wang_set_to_json(const WangTileSet& set)
{
    Json tiles = Json::array();
    for (const auto& t : set.labeled_tiles()) {
        tiles.push_back(Json{{"n", t.north}, {"e", t.east}, {"s", t.south}, {"w", t.west}});
    }
    return Json{{"colors", set.colors()}, {"tiles", tiles}};
}

inline WangTileSet wang_set_from_json(const Json& j)
{
    std::vector<std::string> colors;
    if (j.is_object() && j.contains("colors")) {
        colors = detail::get<std::vector<std::string>>(j, "colors");
    }
    const auto tiles_json = detail::get<Json>(j, "tiles");
    if (!tiles_json.is_array()) {
        throw FormatError("'tiles' must be an array");
    }
    std::vector<LabeledTile> tiles;
    for (const auto& t : tiles_json) {
        tiles.push_back({detail::get<std::string>(t, "n"), detail::get<std::string>(t, "e"),
                         detail::get<std::string>(t, "s"), detail::get<std::string>(t, "w")});
    }
    try {
        return WangTileSet(tiles, colors);
    } catch (const WangError& e) {
        throw FormatError(e.what());
    }
}

// --- Wang tilings -----------------------------------------------------------

inline Json wang_tiling_to_json(const WangTiling& tiling)
{
    return Json{{"p", tiling.p}, {"q", tiling.q}, {"torus", tiling.torus}, {"cells", tiling.cells}};
}

inline WangTiling wang_tiling_from_json(const Json& j)
{
    WangTiling t;
    t.p = detail::get<int>(j, "p");
    t.q = detail::get<int>(j, "q");
    t.torus = j.contains("torus") ? detail::get<bool>(j, "torus") : true;
    t.cells = detail::get<std::vector<int>>(j, "cells");
    if (t.p < 1 || t.q < 1 || t.cells.size() != static_cast<std::size_t>(t.p) * static_cast<std::size_t>(t.q)) {
        throw FormatError("Wang tiling needs p*q cells");
    }
    return t;
}

// --- Piece sets -------------------------------------------------------------

struct PieceFile {
    std::optional<WangTileSet> source;
    std::optional<int> n;
    std::optional<int> m;
    std::optional<int> t;
    std::vector<Polyomino> pieces;
};

inline Json pieces_to_json(const std::vector<Polyomino>& pieces)
{
    Json arr = Json::array();
    for (const auto& p : pieces) {
        arr.push_back(Json{{"name", p.name()}, {"cells", detail::cells_to_json(p.cells())}});
    }
    return arr;
}

inline Json piece_set_to_json(const SevenPieceSet& set)
{
    return Json{{"source", wang_set_to_json(set.source())},
                {"n", set.n()},
                {"m", set.m()},
                {"t", set.t()},
                {"pieces", pieces_to_json(set.pieces())}};
}

inline Json piece_file_to_json(const PieceFile& file)
{
    Json j = Json::object();
    if (file.source) {
        j["source"] = wang_set_to_json(*file.source);
    }
    if (file.n) {
        j["n"] = *file.n;
    }
    if (file.m) {
        j["m"] = *file.m;
    }
    if (file.t) {
        j["t"] = *file.t;
    }
    j["pieces"] = pieces_to_json(file.pieces);
    return j;
}

/// Reads a piece-set file. Only "pieces" is required, which lets hand-made
/// piece lists (dominoes, trominoes) go through the same tools.
inline PieceFile piece_file_from_json(const Json& j)
{
    PieceFile file;
    if (j.is_object() && j.contains("source")) {
        file.source = wang_set_from_json(j.at("source"));
    }
    for (auto [key, field] : {std::pair{"n", &file.n}, std::pair{"m", &file.m}, std::pair{"t", &file.t}}) {
        if (j.contains(key)) {
            *field = detail::get<int>(j, key);
        }
    }
    const auto arr = detail::get<Json>(j, "pieces");
    if (!arr.is_array() || arr.empty()) {
        throw FormatError("'pieces' must be a non-empty array");
    }
    for (const auto& p : arr) {
        try {
            file.pieces.emplace_back(detail::get<std::string>(p, "name"),
                                     detail::cells_from_json(detail::get<Json>(p, "cells")));
        } catch (const GeometryError& e) {
            throw FormatError(e.what());
        }
    }
    return file;
}

// --- Polyomino tilings ------------------------------------------------------

struct TilingFile {
    std::optional<Region> region;
    std::vector<Placement> placements;
};

inline Json tiling_to_json(const Region& region, const std::vector<Placement>& placements)
{
    Json j = Json::object();
    if (region.is_torus()) {
        const auto& l = region.lattice();
        j["lattice"] = Json::array({Json::array({l.b1().x, l.b1().y}), Json::array({l.b2().x, l.b2().y})});
    } else {
        j["rectangle"] = Json::array({region.rectangle().width, region.rectangle().height});
    }
    Json arr = Json::array();
    for (const auto& p : placements) {
        arr.push_back(Json{{"piece", p.piece}, {"at", Json::array({p.at.x, p.at.y})}});
    }
    j["placements"] = arr;
    return j;
}

inline Json tiling_to_json(const SimulatedTiling& sim) { return tiling_to_json(Region(sim.lattice), sim.placements); }

inline TilingFile tiling_from_json(const Json& j)
{
    TilingFile file;
    try {
        if (j.contains("lattice")) {
            const auto& l = j.at("lattice");
            if (!l.is_array() || l.size() != 2) {
                throw FormatError("'lattice' must hold two vectors");
            }
            file.region = Region(TorusLattice(detail::vec_from_json(l[0]), detail::vec_from_json(l[1])));
        } else if (j.contains("rectangle")) {
            const auto r = detail::vec_from_json(j.at("rectangle"));
            file.region = Region(Rectangle{r.x, r.y});
        }
    } catch (const GeometryError& e) {
        throw FormatError(e.what());
    } catch (const SolverInputError& e) {
        throw FormatError(e.what());
    }
    const auto arr = detail::get<Json>(j, "placements");
    if (!arr.is_array()) {
        throw FormatError("'placements' must be an array");
    }
    for (const auto& p : arr) {
        file.placements.push_back({detail::get<std::string>(p, "piece"), detail::vec_from_json(p.at("at"))});
    }
    return file;
}

// --- Cover reports ----------------------------------------------------------

inline Json cover_report_to_json(const CoverReport& report)
{
    Json overlaps = Json::array();
    for (const auto& o : report.overlaps) {
        overlaps.push_back(Json{{"cell", Json::array({o.cell.x, o.cell.y})},
                                {"placements", Json::array({o.first, o.second})}});
    }
    Json j{{"exact", report.exact()},
           {"uncovered", detail::cells_to_json(report.uncovered)},
           {"overlaps", overlaps}};
    if (!report.outside.empty()) {
        j["outside"] = detail::cells_to_json(report.outside);
    }
    return j;
}

} // namespace polytile::io
