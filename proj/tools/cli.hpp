#pragma once

// The surftopo command line. `run` takes the arguments without the program
// name and writes to the given streams, so tests can drive it in-process.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "surftopo/surftopo.hpp"

namespace surftopo::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kParse = 3, kNotSurface = 4 };

using Json = nlohmann::ordered_json;

/// A computed answer: structured fields plus their text rendering.
struct Report {
    Json json = Json::object();
    std::string text;
    int exit_code = kOk;
};

struct Source {
    std::string text;
    std::optional<FixtureKind> kind;
};

namespace detail {

inline constexpr std::string_view kCatalogPrefix = "catalog:";

/// "catalog:<name>", "-" for stdin, or a file path.
inline Source read_source(const std::string& arg) {
    if (arg.rfind(kCatalogPrefix, 0) == 0) {
        const auto& f = catalog_get(arg.substr(kCatalogPrefix.size()));
        return {f.source, f.kind};
    }
    if (arg == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return {ss.str(), std::nullopt};
    }
    std::ifstream in(arg);
    if (!in) throw ParseError("cannot read '" + arg + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return {ss.str(), std::nullopt};
}

/// Inline text unless the argument names a file or a fixture.
inline std::string read_inline_or_source(const std::string& arg) {
    if (arg.rfind(kCatalogPrefix, 0) == 0 || arg == "-") return read_source(arg).text;
    std::error_code ec;
    if (std::filesystem::is_regular_file(arg, ec)) return read_source(arg).text;
    return arg;
}

inline std::string detect_format(std::string_view text) {
    const auto t = surftopo::detail::trim(text);
    if (!t.empty() && t.front() == '{') return "json";
    for (const auto& [_, line] : surftopo::detail::content_lines(text)) {
        const auto head = line.substr(0, 2);
        if (head == "F:" || head == "E:" || head == "V:") return "cw2";
    }
    return "scx";
}

inline AnyComplex load_complex(const std::string& arg, const std::string& input) {
    const Source src = read_source(arg);
    std::string format = input;
    if (src.kind == FixtureKind::Simplicial)
        format = "scx";
    else if (src.kind == FixtureKind::CW2)
        format = "cw2";
    else if (src.kind)
        throw ParseError("fixture '" + arg + "' is not a cell complex");
    if (format == "auto") format = detect_format(src.text);
    if (format == "json") return parse_complex_json(src.text);
    if (format == "cw2") return parse_cw2(src.text);
    return parse_simplicial(src.text);
}

inline Json labels(const std::vector<Label>& xs) { return Json(xs); }

inline std::string spaced(const std::vector<Label>& xs) { return surftopo::detail::join(xs, " "); }

inline Json type_json(const SurfaceType& t) {
    return Json{{"name", surface_name(t)},
                {"orientable", t.orientable},
                {"genus", t.genus},
                {"boundary", t.boundary},
                {"euler", t.euler}};
}

inline Json failure_json(const NotLocallyPlanar& f) {
    Json j{{"message", f.message()}};
    if (f.edge) {
        j["edge"] = {f.edge->a, f.edge->b};
        j["face_count"] = f.face_count;
    }
    if (f.vertex) j["vertex"] = *f.vertex;
    if (f.branching) j["branching"] = {f.branching->a, f.branching->b};
    return j;
}

inline CWComplex2 as_cw2(const AnyComplex& c) {
    if (const auto* s = std::get_if<SimplicialComplex>(&c)) return to_cw2(*s);
    return std::get<CWComplex2>(c);
}

inline const SimplicialComplex* as_3d(const AnyComplex& c) {
    const auto* s = std::get_if<SimplicialComplex>(&c);
    return s && s->dimension() == 3 ? s : nullptr;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Commands

inline Report cmd_components(const AnyComplex& complex) {
    const auto part = std::visit([](const auto& c) { return components(c); }, complex);
    Report r;
    r.json["count"] = part.components.size();
    r.json["components"] = Json::array();
    for (std::size_t i = 0; i < part.components.size(); ++i) {
        r.json["components"].push_back(detail::labels(part.components[i]));
        r.text += "component " + std::to_string(i + 1) + ": {" +
                  surftopo::detail::join(part.components[i], ",") + "}\n";
    }
    return r;
}

inline Report cmd_surface_check(const AnyComplex& complex) {
    const auto cw = detail::as_cw2(complex);
    const auto check = is_surface(cw);
    Report r;
    r.json["surface"] = check.surface;
    Json edges = Json::array();
    for (const auto& e : check.edges) {
        edges.push_back({{"edge", {e.edge.a, e.edge.b}}, {"status", to_string(e.status)}, {"cells", e.incident_faces}});
        std::string cells;
        for (auto f : e.incident_faces) cells += (cells.empty() ? "" : " ") + std::to_string(f);
        r.text += "edge " + to_string(e.edge) + ": " + to_string(e.status) + " (cells " + cells + ")\n";
    }
    Json links = Json::array();
    for (const auto& l : check.links) {
        links.push_back({{"vertex", l.vertex}, {"kind", to_string(l.kind)}, {"walk", l.walk}});
        r.text += "vertex " + l.vertex + ": " + to_string(l.kind) + " " + detail::spaced(l.walk) + "\n";
    }
    r.json["edges"] = std::move(edges);
    r.json["links"] = std::move(links);
    if (!check.surface) {
        r.json["failure"] = detail::failure_json(*check.failure);
        r.text += "surface: no (" + check.failure->message() + ")\n";
        r.exit_code = kNotSurface;
        return r;
    }
    r.json["closed"] = check.closed;
    r.json["boundary_count"] = check.boundary_count;
    r.json["boundary"] = check.boundary.cycles;
    for (const auto& c : check.boundary.cycles) r.text += "boundary: " + detail::spaced(c) + "\n";
    r.text += "surface: yes\n";
    r.text += std::string("closed: ") + (check.closed ? "yes" : "no") + "\n";
    r.text += "boundary components: " + std::to_string(check.boundary_count) + "\n";
    return r;
}

inline Report cmd_orient(const AnyComplex& complex) {
    Report r;
    if (const auto* s3 = detail::as_3d(complex)) {
        const auto o = orient3(*s3);
        r.json["dimension"] = 3;
        r.json["orientable"] = o.orientable;
        if (o.orientable) {
            r.text += "orientable\n";
            Json w = Json::array();
            for (const auto& t : o.witness) {
                w.push_back(t);
                r.text += "(" + t[0] + "," + t[1] + "," + t[2] + "," + t[3] + ")\n";
            }
            r.json["witness"] = std::move(w);
        } else {
            r.json["conflict"] = o.conflict->vertices();
            r.json["conflict_cells"] = {o.conflict_cells->first, o.conflict_cells->second};
            r.text += "non-orientable (conflict on triangle " + to_string(*o.conflict) + ")\n";
            r.text += "conflicting cells: " + std::to_string(o.conflict_cells->first) + " " +
                      std::to_string(o.conflict_cells->second) + "\n";
        }
        return r;
    }

    const auto cw = detail::as_cw2(complex);
    r.json["dimension"] = 2;
    const auto check = is_surface(cw);
    if (!check.surface) {
        r.json["surface"] = false;
        r.json["failure"] = detail::failure_json(*check.failure);
        r.text += "not a surface: " + check.failure->message() + "\n";
        r.exit_code = kNotSurface;
        return r;
    }
    const auto o = orient2(cw);
    r.json["orientable"] = o.orientable;
    if (o.orientable) {
        r.json["witness"] = o.witness;
        r.text += "orientable\n";
        for (const auto& c : o.witness) r.text += "(" + surftopo::detail::join(c, ",") + ")\n";
    } else {
        r.json["conflict"] = {o.conflict->a, o.conflict->b};
        r.json["conflict_cells"] = {o.conflict_faces->first, o.conflict_faces->second};
        r.text += "non-orientable (conflict on edge " + to_string(*o.conflict) + ")\n";
        r.text += "conflicting cells: " + std::to_string(o.conflict_faces->first) + " " +
                  std::to_string(o.conflict_faces->second) + "\n";
    }
    return r;
}

inline Report cmd_classify(const AnyComplex& complex) {
    const auto reports = std::visit([](const auto& c) { return classify_components(c); }, complex);
    Report r;
    Json comps = Json::array();
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& rep = reports[i];
        Json j{{"vertices", rep.vertices}, {"euler", rep.euler}, {"surface", rep.type.has_value()}};
        std::string line;
        if (rep.type) {
            j["type"] = detail::type_json(*rep.type);
            line = describe(*rep.type);
        } else {
            j["failure"] = detail::failure_json(*rep.check.failure);
            line = "not a surface: " + rep.check.failure->message();
            r.exit_code = kNotSurface;
        }
        if (reports.size() > 1)
            line = "component " + std::to_string(i + 1) + " {" + surftopo::detail::join(rep.vertices, ",") + "}: " + line;
        r.text += line + "\n";
        comps.push_back(std::move(j));
    }
    r.json["components"] = std::move(comps);
    return r;
}

inline Report cmd_classify3(const AnyComplex& complex) {
    const auto* s = std::get_if<SimplicialComplex>(&complex);
    if (!s) throw UnsupportedDimension("classify3 needs a simplicial complex");
    const auto m = is_3manifold(*s);
    Report r;
    r.json["manifold"] = m.manifold;
    Json links = Json::array();
    for (const auto& l : m.links)
        links.push_back({{"vertex", l.vertex}, {"boundary_vertex", l.boundary_vertex}, {"ok", l.ok}});
    r.json["links"] = std::move(links);
    if (!m.manifold) {
        r.json["failure"] = m.failure->message();
        r.text += "3-manifold: no (" + m.failure->message() + ")\n";
        r.exit_code = kNotSurface;
        return r;
    }
    const auto o = orient3(*s);
    r.json["closed"] = m.closed;
    r.json["orientable"] = o.orientable;
    r.json["boundary"] = Json::array();
    r.text += "3-manifold: yes\n";
    r.text += std::string("closed: ") + (m.closed ? "yes" : "no") + "\n";
    r.text += std::string("orientable: ") + (o.orientable ? "yes" : "no") + "\n";
    for (const auto& t : m.boundary) {
        r.json["boundary"].push_back(detail::type_json(t));
        r.text += "boundary: " + describe(t) + "\n";
    }
    const auto ok = std::count_if(m.links.begin(), m.links.end(), [](const auto& l) { return l.ok; });
    r.text += "vertex links: " + std::to_string(ok) + "/" + std::to_string(m.links.size()) + " ok\n";
    return r;
}

inline LetterMap parse_letter_map(const std::string& text) {
    LetterMap m;
    std::string s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    for (const auto& item : surftopo::detail::split_ws(s)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw ParseError("letter map entries look like a=x, got '" + item + "'");
        m[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return m;
}

inline Report cmd_slw_equiv(const SLWGraph& a, const SLWGraph& b, const std::optional<LetterMap>& map) {
    Report r;
    const auto found = slw_equivalent(a, b, map);
    r.json["equivalent"] = found.has_value();
    if (!found) {
        r.text = "not equivalent\n";
        return r;
    }
    r.json["letter_map"] = *found;
    std::string pairs;
    for (const auto& [x, y] : *found) pairs += (pairs.empty() ? "" : ", ") + x + "->" + y;
    r.text = "equivalent\nletter map: " + pairs + "\n";
    return r;
}

inline Report cmd_slw_classify(const SLWGraph& s, bool allow_boundary) {
    Report r;
    try {
        const auto t = classify_slw(s, {allow_boundary});
        r.json["surface"] = true;
        r.json["type"] = detail::type_json(t);
        r.text = describe(t) + "\n";
    } catch (const NotSurface& e) {
        r.json["surface"] = false;
        r.json["failure"] = e.diagnostic();
        r.text = "not a surface: " + e.diagnostic() + "\n";
        r.exit_code = kNotSurface;
    }
    return r;
}

inline Report cmd_rot_classify(const RotationSystem& rs) {
    const auto faces = trace_faces(rs);
    const auto t = classify_embedding(rs);
    Report r;
    r.json["vertices"] = rs.vertex_count();
    r.json["edges"] = rs.edge_count();
    r.json["faces"] = faces.faces;
    r.json["type"] = detail::type_json(t);
    r.text = "V=" + std::to_string(rs.vertex_count()) + " E=" + std::to_string(rs.edge_count()) +
             " F=" + std::to_string(faces.faces) + "\n" + describe(t) + "\n";
    return r;
}

/// A chord code, or a permutation written as transpositions.
inline ChordCode parse_chord_arg(const std::string& arg) {
    const std::string text = detail::read_inline_or_source(arg);
    const auto t = surftopo::detail::trim(text);
    if (!t.empty() && t.front() == '(') return permutation_to_code(parse_permutation(t));
    return parse_chord(t);
}

inline Report cmd_chord_canon(const ChordCode& code) {
    const auto c = chord_canonical(code);
    Report r;
    r.json["code"] = to_string(code);
    r.json["canonical"] = to_string(c);
    r.json["genus"] = chord_genus(code);
    r.text = to_string(c) + "\n";
    return r;
}

inline Report cmd_chord_iso(const ChordCode& a, const ChordCode& b) {
    Report r;
    const bool iso = chord_isomorphic(a, b);
    r.json["isomorphic"] = iso;
    r.json["canonical"] = {to_string(chord_canonical(a)), to_string(chord_canonical(b))};
    r.text = iso ? "isomorphic\n" : "not isomorphic\n";
    return r;
}

inline Report cmd_chord_enum(int n, std::optional<long> genus) {
    const auto codes = enumerate_chords(n, genus);
    Report r;
    r.json["n"] = n;
    if (genus) r.json["genus_filter"] = *genus;
    r.json["count"] = codes.size();
    r.json["diagrams"] = Json::array();
    for (const auto& c : codes) {
        const long g = c.points.empty() ? 0 : chord_genus(c);
        r.json["diagrams"].push_back({{"code", to_string(c)}, {"genus", g}});
        r.text += to_string(c) + " genus " + std::to_string(g) + "\n";
    }
    return r;
}

inline Report cmd_catalog_list() {
    Report r;
    r.json["fixtures"] = Json::array();
    for (const auto& f : catalog()) {
        r.json["fixtures"].push_back({{"name", f.name}, {"kind", to_string(f.kind)}});
        r.text += f.name + "\n";
    }
    return r;
}

inline Report cmd_catalog_show(const std::string& name) {
    const auto& f = catalog_get(name);
    Report r;
    r.json["name"] = f.name;
    r.json["kind"] = to_string(f.kind);
    r.json["source"] = catalog_show(name);
    r.json["provenance"] = f.provenance;
    Json expected = Json::array();
    for (const auto& t : f.expected.surfaces) expected.push_back(detail::type_json(t));
    r.json["expected"] = std::move(expected);
    r.text = catalog_show(name);
    return r;
}

// ---------------------------------------------------------------------------
// Entry point

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Combinatorial surface topology: recognition, orientation and classification", "surftopo"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    std::string input = "auto";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--input", input, "Complex input format")->check(CLI::IsMember({"scx", "cw2", "json", "auto"}));

    std::string path, path_b, code_a, code_b, name, map_text;
    int n = 0;
    std::optional<long> genus;
    bool allow_boundary = false;

    const char* source_help = "Input file, '-' for stdin, or catalog:<fixture>";
    auto* components_cmd = app.add_subcommand("components", "Connected components of the 1-skeleton");
    auto* surface_cmd = app.add_subcommand("surface-check", "Edge, vertex-link and boundary report");
    auto* orient_cmd = app.add_subcommand("orient", "Orientability with a witness or a conflict");
    auto* classify_cmd = app.add_subcommand("classify", "Topological type of every component");
    auto* classify3_cmd = app.add_subcommand("classify3", "3-manifold recognition");
    for (auto* c : {components_cmd, surface_cmd, orient_cmd, classify_cmd, classify3_cmd})
        c->add_option("source", path, source_help)->required();

    auto* slw_cmd = app.add_subcommand("slw", "SLW-graphs")->require_subcommand(1);
    auto* slw_equiv = slw_cmd->add_subcommand("equiv", "Equivalence of two SLW-graphs");
    slw_equiv->add_option("a", path, source_help)->required();
    slw_equiv->add_option("b", path_b, source_help)->required();
    slw_equiv->add_option("--map", map_text, "Letter map to check, e.g. a=x,b=y");
    auto* slw_classify = slw_cmd->add_subcommand("classify", "Surface type of an SLW-graph");
    slw_classify->add_option("source", path, source_help)->required();
    slw_classify->add_flag("--allow-boundary", allow_boundary, "Edges used once are boundary");

    auto* rot_cmd = app.add_subcommand("rot", "Rotation systems")->require_subcommand(1);
    auto* rot_classify = rot_cmd->add_subcommand("classify", "Surface of the embedding");
    rot_classify->add_option("rotation", path, "Rotation text, file or catalog:<fixture>")->required();

    auto* chord_cmd = app.add_subcommand("chord", "Chord diagrams")->require_subcommand(1);
    auto* chord_canon = chord_cmd->add_subcommand("canon", "Canonical code");
    chord_canon->add_option("code", code_a, "Chord code or permutation")->required();
    auto* chord_iso = chord_cmd->add_subcommand("iso", "Isomorphism of two diagrams");
    chord_iso->add_option("a", code_a)->required();
    chord_iso->add_option("b", code_b)->required();
    auto* chord_enum = chord_cmd->add_subcommand("enum", "All diagrams with n chords");
    chord_enum->add_option("n", n, "Number of chords")->required()->check(CLI::NonNegativeNumber);
    chord_enum->add_option("--genus", genus, "Keep one embedding genus");

    auto* catalog_cmd = app.add_subcommand("catalog", "Built-in fixtures")->require_subcommand(1);
    auto* catalog_list_cmd = catalog_cmd->add_subcommand("list", "Fixture names");
    auto* catalog_show_cmd = catalog_cmd->add_subcommand("show", "Fixture payload");
    catalog_show_cmd->add_option("name", name)->required();

    for (auto* c : {slw_cmd, rot_cmd, chord_cmd, catalog_cmd}) c->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    std::string command;
    for (const auto* c = app.get_subcommands().front();; c = c->get_subcommands().front()) {
        command += (command.empty() ? "" : " ") + c->get_name();
        if (c->get_subcommands().empty()) break;
    }

    Report report;
    try {
        if (*components_cmd) report = cmd_components(detail::load_complex(path, input));
        else if (*surface_cmd) report = cmd_surface_check(detail::load_complex(path, input));
        else if (*orient_cmd) report = cmd_orient(detail::load_complex(path, input));
        else if (*classify_cmd) report = cmd_classify(detail::load_complex(path, input));
        else if (*classify3_cmd) report = cmd_classify3(detail::load_complex(path, input));
        else if (*slw_equiv) {
            std::optional<LetterMap> map;
            if (!map_text.empty()) map = parse_letter_map(map_text);
            report = cmd_slw_equiv(parse_slw(detail::read_source(path).text),
                                   parse_slw(detail::read_source(path_b).text), map);
        } else if (*slw_classify) report = cmd_slw_classify(parse_slw(detail::read_source(path).text), allow_boundary);
        else if (*rot_classify) report = cmd_rot_classify(parse_rotation(detail::read_inline_or_source(path)));
        else if (*chord_canon) report = cmd_chord_canon(parse_chord_arg(code_a));
        else if (*chord_iso) report = cmd_chord_iso(parse_chord_arg(code_a), parse_chord_arg(code_b));
        else if (*chord_enum) report = cmd_chord_enum(n, genus);
        else if (*catalog_list_cmd) report = cmd_catalog_list();
        else if (*catalog_show_cmd) report = cmd_catalog_show(name);
    } catch (const Error& e) {
        if (format == "json") {
            Json j{{"command", command}, {"error", e.what()}, {"exit_code", static_cast<int>(kParse)}};
            if (const auto* p = dynamic_cast<const ParseError*>(&e); p && p->line()) j["line"] = p->line();
            out << j.dump(2) << "\n";
        }
        err << "surftopo " << command << ": " << e.what() << "\n";
        return kParse;
    } catch (const nlohmann::json::exception& e) {
        err << "surftopo " << command << ": " << e.what() << "\n";
        return kParse;
    }

    if (format == "json") {
        Json j{{"command", command}};
        for (auto& [k, v] : report.json.items()) j[k] = v;
        j["exit_code"] = report.exit_code;
        out << j.dump(2) << "\n";
    } else {
        out << report.text;
    }
    return report.exit_code;
}

} // namespace surftopo::cli
