#pragma once

// Command-line front end. run() never calls exit(); it returns the process
// status and writes to the given streams, so it can be driven from tests.
//
// Exit codes: 0 success, 1 unsatisfiable or cover failure, 2 input error,
// 3 search limit exceeded.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "polytile/compiler.hpp"
#include "polytile/io.hpp"
#include "polytile/render.hpp"
#include "polytile/simulate.hpp"
#include "polytile/solver.hpp"
#include "polytile/wang.hpp"

namespace polytile::cli {

inline constexpr int kOk = 0;
inline constexpr int kUnsat = 1;
inline constexpr int kInputError = 2;
inline constexpr int kLimit = 3;

inline constexpr const char* kThreadsVariable = "POLYTILE_THREADS";

/// Worker count from POLYTILE_THREADS; 1 when unset, hardware concurrency
/// for "0" or "auto".
inline unsigned thread_count()
{
    const char* raw = std::getenv(kThreadsVariable);
    if (raw == nullptr || *raw == '\0') {
        return 1;
    }
    const std::string value(raw);
    if (value == "auto" || value == "0") {
        return std::max(1U, std::thread::hardware_concurrency());
    }
    try {
        const long parsed = std::stol(value);
        if (parsed < 1) {
            throw std::invalid_argument(value);
        }
        return static_cast<unsigned>(parsed);
    } catch (const std::exception&) {
        throw io::FormatError(std::string(kThreadsVariable) + " must be a positive integer or 'auto'");
    }
}

namespace detail {

class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline void emit(std::ostream& out, const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        out << text;
    } else {
        io::write_text(path, text);
    }
}

inline io::Json load(const std::string& path) { return io::parse(io::read_text(path)); }

inline std::vector<Polyomino> load_pieces(const std::string& path)
{
    return io::piece_file_from_json(load(path)).pieces;
}

struct Common {
    std::string output;
};

struct CompileArgs : Common {
    std::string wang;
};

struct SolveWangArgs : Common {
    std::string wang;
    std::vector<int> torus;
    bool count = false;
    bool all = false;
    int find_periodic = 0;
};

struct SolvePolyArgs : Common {
    std::string pieces;
    std::vector<Coord> rect;
    std::vector<Coord> lattice;
    bool count = false;
    bool all = false;
    std::uint64_t limit = 0;
    bool ascii = false;
};

struct SimulateArgs : Common {
    std::string wang;
    std::string tiling;
};

struct VerifyArgs : Common {
    std::string pieces;
    std::string tiling;
};

struct RenderArgs : Common {
    std::string input;
    std::string pieces;
    std::string wang;
    std::string target;
    Coord cell = 4;
    bool grid = false;
};

struct InfoArgs {
    std::string pieces;
};

inline int do_compile(const CompileArgs& a, std::ostream& out)
{
    const auto set = io::wang_set_from_json(load(a.wang));
    SevenPieceSet pieces = [&] {
        try {
            return compile(set);
        } catch (const CompileError& e) {
            throw InputError(e.what());
        }
    }();
    emit(out, a.output, io::dump(io::piece_set_to_json(pieces)));
    return kOk;
}

inline int do_solve_wang(const SolveWangArgs& a, std::ostream& out)
{
    const auto set = io::wang_set_from_json(load(a.wang));
    if (a.find_periodic > 0) {
        auto found = find_periodic(set, a.find_periodic);
        if (!found) {
            out << "UNSAT\n";
            return kUnsat;
        }
        emit(out, a.output, io::dump(io::wang_tiling_to_json(*found)));
        return kOk;
    }
    if (a.torus.size() != 2) {
        throw InputError("solve-wang needs --torus P Q or --find-periodic N");
    }
    const auto mode = a.count ? SearchMode::Count : (a.all ? SearchMode::Enumerate : SearchMode::First);
    const auto result = solve_torus(set, a.torus[0], a.torus[1], mode);
    if (result.count == 0) {
        out << (a.count ? "0\n" : "UNSAT\n");
        return kUnsat;
    }
    if (a.count) {
        out << result.count << "\n";
        return kOk;
    }
    if (a.all) {
        io::Json arr = io::Json::array();
        for (const auto& t : result.tilings) {
            arr.push_back(io::wang_tiling_to_json(t));
        }
        emit(out, a.output, io::dump(arr));
        return kOk;
    }
    emit(out, a.output, io::dump(io::wang_tiling_to_json(result.tilings.front())));
    return kOk;
}

inline int do_solve_poly(const SolvePolyArgs& a, std::ostream& out)
{
    auto pieces = load_pieces(a.pieces);
    if (a.rect.empty() == a.lattice.empty()) {
        throw InputError("solve-poly needs exactly one of --rect W H and --lattice X1 Y1 X2 Y2");
    }
    std::optional<Region> region;
    try {
        if (!a.rect.empty()) {
            region.emplace(Rectangle{a.rect[0], a.rect[1]});
        } else {
            region.emplace(TorusLattice({a.lattice[0], a.lattice[1]}, {a.lattice[2], a.lattice[3]}));
        }
    } catch (const GeometryError& e) {
        throw InputError(e.what());
    }
    const PlacementUniverse universe(*region, std::move(pieces));
    SolveOptions options;
    options.mode = a.count ? SearchMode::Count : (a.all ? SearchMode::Enumerate : SearchMode::First);
    if (a.limit > 0) {
        options.node_limit = a.limit;
    }
    options.threads = thread_count();
    const auto result = solve(universe, options);

    if (a.count) {
        out << result.count << "\n";
        return result.count == 0 ? kUnsat : kOk;
    }
    if (result.tilings.empty()) {
        out << "UNSAT\n";
        return kUnsat;
    }
    if (a.ascii) {
        if (region->is_torus()) {
            throw InputError("--ascii is only available for rectangles");
        }
        std::string text;
        for (std::size_t i = 0; i < result.tilings.size(); ++i) {
            if (i > 0) {
                text += "\n";
            }
            text += render_ascii(universe.pieces(), region->rectangle(), result.tilings[i]);
        }
        emit(out, a.output, text);
        return kOk;
    }
    if (a.all) {
        io::Json arr = io::Json::array();
        for (const auto& t : result.tilings) {
            arr.push_back(io::tiling_to_json(*region, t));
        }
        emit(out, a.output, io::dump(arr));
    } else {
        emit(out, a.output, io::dump(io::tiling_to_json(*region, result.tilings.front())));
    }
    return kOk;
}

inline SimulatedTiling simulate_files(const std::string& wang, const std::string& tiling)
{
    const auto set = io::wang_set_from_json(load(wang));
    const auto wt = io::wang_tiling_from_json(load(tiling));
    try {
        return emit_placements(set, wt);
    } catch (const WangError& e) {
        throw InputError(e.what());
    }
}

inline int do_simulate(const SimulateArgs& a, std::ostream& out)
{
    emit(out, a.output, io::dump(io::tiling_to_json(simulate_files(a.wang, a.tiling))));
    return kOk;
}

inline int do_verify(const VerifyArgs& a, std::ostream& out)
{
    const auto pieces = load_pieces(a.pieces);
    const auto tiling = io::tiling_from_json(load(a.tiling));
    if (!tiling.region) {
        throw InputError("tiling file has no 'lattice' or 'rectangle'");
    }
    const auto report = check_tiling(*tiling.region, pieces, tiling.placements);
    emit(out, a.output, io::dump(io::cover_report_to_json(report)));
    return report.exact() ? kOk : kUnsat;
}

inline int do_render(const RenderArgs& a, std::ostream& out)
{
    const auto j = load(a.input);
    if (!j.is_object()) {
        throw InputError("render input must be a JSON object");
    }
    const RenderSpec spec{a.cell, a.grid};
    std::string target = a.target;
    if (target.empty()) {
        target = j.contains("placements") || j.contains("cells") ? "tiling" : "pieces";
    }
    std::string svg;
    if (target == "pieces") {
        std::vector<Polyomino> pieces;
        if (j.contains("pieces")) {
            pieces = io::piece_file_from_json(j).pieces;
        } else if (j.contains("tiles")) {
            pieces = compile(io::wang_set_from_json(j)).pieces();
        } else {
            throw InputError("target 'pieces' needs a piece-set or Wang-set file");
        }
        svg = render_pieces_svg(spec, pieces);
    } else if (target == "tiling") {
        if (j.contains("placements")) {
            if (a.pieces.empty()) {
                throw InputError("rendering a tiling file needs --pieces");
            }
            const auto tiling = io::tiling_from_json(j);
            if (!tiling.region) {
                throw InputError("tiling file has no 'lattice' or 'rectangle'");
            }
            svg = render_tiling_svg(spec, load_pieces(a.pieces), *tiling.region, tiling.placements);
        } else if (j.contains("cells")) {
            if (a.wang.empty()) {
                throw InputError("rendering a Wang tiling needs --wang");
            }
            const auto set = io::wang_set_from_json(load(a.wang));
            const auto sim = emit_placements(set, io::wang_tiling_from_json(j));
            svg = render_tiling_svg(spec, compile(set).pieces(), Region(sim.lattice), sim.placements);
        } else {
            throw InputError("target 'tiling' needs a tiling file or a Wang tiling file");
        }
    } else {
        throw InputError("unknown render target '" + target + "'");
    }
    emit(out, a.output, svg);
    return kOk;
}

inline int do_info(const InfoArgs& a, std::ostream& out)
{
    const auto file = io::piece_file_from_json(load(a.pieces));
    if (file.n && file.m && file.t) {
        out << "n=" << *file.n << " m=" << *file.m << " t=" << *file.t << "\n";
    }
    std::size_t width = 5;
    for (const auto& p : file.pieces) {
        width = std::max(width, p.name().size());
    }
    out << std::left << std::setw(static_cast<int>(width)) << "piece" << std::right << std::setw(8) << "cells"
        << "  bbox" << std::setw(20) << "" << "connected\n";
    std::size_t total = 0;
    for (const auto& p : file.pieces) {
        const auto box = p.cells().bounds();
        std::ostringstream bbox;
        bbox << "[" << box.min_x << "," << box.max_x << ")x[" << box.min_y << "," << box.max_y << ")";
        out << std::left << std::setw(static_cast<int>(width)) << p.name() << std::right << std::setw(8)
            << p.size() << "  " << std::left << std::setw(24) << bbox.str()
            << (is_connected(p.cells()) ? "yes" : "no") << std::right << "\n";
        total += p.size();
    }
    out << std::left << std::setw(static_cast<int>(width)) << "total" << std::right << std::setw(8) << total
        << "\n";
    return kOk;
}

} // namespace detail

/// Runs one sub-command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Wang tile to polyomino compiler, tiling solver and verifier", "polytile"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all sub-commands");

    detail::CompileArgs compile_args;
    auto* compile_cmd = app.add_subcommand("compile", "Compile a Wang set into its seven polyominoes");
    compile_cmd->add_option("wang", compile_args.wang, "Wang-set JSON file")->required();
    compile_cmd->add_option("-o,--output", compile_args.output, "Piece-set output file (default stdout)");

    detail::SolveWangArgs wang_args;
    auto* wang_cmd = app.add_subcommand("solve-wang", "Search torus tilings of a Wang set");
    wang_cmd->add_option("wang", wang_args.wang, "Wang-set JSON file")->required();
    auto* torus_opt = wang_cmd->add_option("--torus", wang_args.torus, "Torus size P Q")->expected(2);
    auto* periodic_opt = wang_cmd->add_option("--find-periodic", wang_args.find_periodic,
                                              "Smallest torus with at most N cells");
    torus_opt->excludes(periodic_opt);
    auto* wang_count = wang_cmd->add_flag("--count", wang_args.count, "Print the number of tilings");
    wang_cmd->add_flag("--all", wang_args.all, "Print every tiling")->excludes(wang_count);
    wang_cmd->add_option("-o,--output", wang_args.output, "Output file (default stdout)");

    detail::SolvePolyArgs poly_args;
    auto* poly_cmd = app.add_subcommand("solve-poly", "Exact-cover tiling of a rectangle or torus");
    poly_cmd->add_option("pieces", poly_args.pieces, "Piece-set JSON file")->required();
    auto* rect_opt = poly_cmd->add_option("--rect", poly_args.rect, "Rectangle W H")->expected(2);
    auto* lattice_opt =
        poly_cmd->add_option("--lattice", poly_args.lattice, "Torus lattice basis X1 Y1 X2 Y2")->expected(4);
    rect_opt->excludes(lattice_opt);
    auto* poly_count = poly_cmd->add_flag("--count", poly_args.count, "Print the number of tilings");
    poly_cmd->add_flag("--all", poly_args.all, "Print every tiling")->excludes(poly_count);
    poly_cmd->add_option("--limit", poly_args.limit, "Search node budget (exit 3 when exceeded)");
    poly_cmd->add_flag("--ascii", poly_args.ascii, "Print rectangle tilings as text")->excludes(poly_count);
    poly_cmd->add_option("-o,--output", poly_args.output, "Output file (default stdout)");

    detail::SimulateArgs sim_args;
    auto* sim_cmd = app.add_subcommand("simulate", "Turn a torus Wang tiling into a polyomino tiling");
    sim_cmd->add_option("wang", sim_args.wang, "Wang-set JSON file")->required();
    sim_cmd->add_option("tiling", sim_args.tiling, "Wang tiling JSON file")->required();
    sim_cmd->add_option("-o,--output", sim_args.output, "Tiling output file (default stdout)");

    detail::VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Check that placements cover a region exactly once");
    verify_cmd->add_option("pieces", verify_args.pieces, "Piece-set JSON file")->required();
    verify_cmd->add_option("tiling", verify_args.tiling, "Tiling JSON file")->required();
    verify_cmd->add_option("-o,--output", verify_args.output, "Report output file (default stdout)");

    detail::RenderArgs render_args;
    auto* render_cmd = app.add_subcommand("render", "Draw a piece set or tiling as SVG");
    render_cmd->add_option("input", render_args.input, "Piece-set, Wang-set, tiling or Wang tiling file")
        ->required();
    render_cmd->add_option("--target", render_args.target, "pieces or tiling (guessed from the input)")
        ->check(CLI::IsMember({"pieces", "tiling"}));
    render_cmd->add_option("--pieces", render_args.pieces, "Piece set for a tiling file");
    render_cmd->add_option("--wang", render_args.wang, "Wang set for a Wang tiling file");
    render_cmd->add_option("--cell", render_args.cell, "Output units per cell")->check(CLI::PositiveNumber);
    render_cmd->add_flag("--grid", render_args.grid, "Draw block grid lines");
    render_cmd->add_option("-o,--output", render_args.output, "SVG output file (default stdout)");

    detail::InfoArgs info_args;
    auto* info_cmd = app.add_subcommand("info", "Cell counts, bounding boxes and connectivity of a piece set");
    info_cmd->add_option("pieces", info_args.pieces, "Piece-set JSON file")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kInputError;
    }

    try {
        if (*compile_cmd) {
            return detail::do_compile(compile_args, out);
        }
        if (*wang_cmd) {
            return detail::do_solve_wang(wang_args, out);
        }
        if (*poly_cmd) {
            return detail::do_solve_poly(poly_args, out);
        }
        if (*sim_cmd) {
            return detail::do_simulate(sim_args, out);
        }
        if (*verify_cmd) {
            return detail::do_verify(verify_args, out);
        }
        if (*render_cmd) {
            return detail::do_render(render_args, out);
        }
        return detail::do_info(info_args, out);
    } catch (const SearchLimitExceeded& e) {
        err << "error: " << e.what() << "\n";
        return kLimit;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

} // namespace polytile::cli
