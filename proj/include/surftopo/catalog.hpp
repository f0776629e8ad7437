#pragma once

// Built-in named fixtures: the worked examples, the list of regular cell
// complexes of low-genus surfaces, the tables of small rotation systems and
// chord diagrams, a few SLW-graphs and 3-dimensional complexes, each with
// the classification it is expected to produce.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "surftopo/chord.hpp"
#include "surftopo/classification.hpp"
#include "surftopo/complex.hpp"
#include "surftopo/rotation.hpp"
#include "surftopo/slw.hpp"

namespace surftopo {

enum class FixtureKind { Simplicial, CW2, Rotation, Chord, Slw };

inline const char* to_string(FixtureKind k) {
    switch (k) {
    case FixtureKind::Simplicial: return "scx";
    case FixtureKind::CW2: return "cw2";
    case FixtureKind::Rotation: return "rotation";
    case FixtureKind::Chord: return "chord";
    default: return "slw";
    }
}

struct Expected {
    /// One entry per connected component when the input is a surface.
    std::vector<SurfaceType> surfaces;
    std::optional<std::size_t> components;
    std::optional<bool> orientable;
    std::optional<bool> is_surface;
    std::optional<bool> manifold3;
};

using Payload = std::variant<SimplicialComplex, CWComplex2, RotationSystem, ChordCode, SLWGraph>;

struct Fixture {
    std::string name;
    FixtureKind kind;
    std::string source;
    Expected expected;
    std::string provenance;

    Payload payload() const {
        switch (kind) {
        case FixtureKind::Simplicial: return parse_simplicial(source);
        case FixtureKind::CW2: return parse_cw2(source);
        case FixtureKind::Rotation: return parse_rotation(source);
        case FixtureKind::Chord: return parse_chord(source);
        default: return parse_slw(source);
        }
    }
};

namespace detail {

/// "012, 0154" -> "F: 0 1 2\nF: 0 1 5 4\n", one label per character.
inline std::string compact_cells(std::string_view cells) {
    std::string out;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        out += "F:";
        for (char c : cur) {
            out += ' ';
            out += c;
        }
        out += '\n';
        cur.clear();
    };
    for (char c : cells) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c)))
            flush();
        else
            cur += c;
    }
    flush();
    return out;
}

inline SurfaceType closed(bool orientable, long g) { return {orientable, g, 0, euler_of(orientable, g, 0)}; }
inline SurfaceType bounded(bool orientable, long g, long b) { return {orientable, g, b, euler_of(orientable, g, b)}; }

inline Expected surface(SurfaceType t) {
    Expected e;
    e.surfaces = {t};
    e.components = 1;
    e.orientable = t.orientable;
    e.is_surface = true;
    return e;
}

inline std::vector<Fixture> build_catalog() {
    const SurfaceType s2 = closed(true, 0), t2 = closed(true, 1), f2 = closed(true, 2);
    const SurfaceType rp2 = closed(false, 1), kl = closed(false, 2);
    std::vector<Fixture> out;

    // Worked examples.
    {
        Expected e;
        e.components = 3;
        e.is_surface = false;
        out.push_back({"example/sec1-components", FixtureKind::Simplicial, "1 2\n3 5\n2 4\n1 4\n6\n", e,
                       "worked example: connected components"});
    }
    out.push_back({"example/sec2-disk", FixtureKind::Simplicial, "0 1 2\n0 1 3\n", surface(bounded(true, 0, 1)),
                   "worked example: local planarity and boundary"});
    out.push_back({"example/sec3-tetrahedron", FixtureKind::Simplicial, "0 1 2\n0 1 3\n0 2 3\n1 2 3\n", surface(s2),
                   "worked example: orientation of a simplicial complex"});
    out.push_back({"example/sec3-cw", FixtureKind::CW2, "F: 0 1 2 3\nF: 2 3 4 5\nF: 0 1 4 5\n",
                   surface(bounded(false, 1, 1)), "worked example: non-orientable cell complex"});

    // Regular cell complexes.
    auto rcc = [&](std::string name, std::string_view cells, SurfaceType t) {
        out.push_back({"rcc/" + std::move(name), FixtureKind::CW2, compact_cells(cells), surface(t),
                       "regular cell complex list"});
    };
    rcc("sphere", "012, 023, 031, 132", s2);
    rcc("torus", "0153, 0284, 0362, 0471, 1265, 1782, 3486, 3574, 5687", t2);
    rcc("rp2", "013, 0154, 024, 0253, 125, 1243, 345", rp2);
    rcc("klein", "0153, 0184, 0362, 0472, 1265, 1278, 3486, 3574, 5687", kl);
    rcc("cylinder", "0154, 0231, 2453", bounded(true, 0, 2));
    rcc("mobius", "0132, 0154, 2354", bounded(false, 1, 1));
    // The cell list as printed above is a cylinder; reading the third cell as
    // 2345 gives the band with one boundary circle.
    rcc("mobius-2345", "0132, 0154, 2345", bounded(false, 1, 1));
    rcc("F03", "0123X5, 0671, 2893, 5X9876", bounded(true, 0, 3));
    rcc("F11", "01X523, 0671, 2893, 5X9876", bounded(true, 1, 1));

    // Rotation systems, one vertex token per rotation.
    auto rot = [&](int k, std::string text, SurfaceType t) {
        out.push_back({"rot/R" + std::to_string(k), FixtureKind::Rotation, std::move(text), surface(t),
                       "rotation system table"});
    };
    const char* on_sphere[] = {"11",       "1 1",      "12 12",      "1122",    "1 12 2",
                               "1 122",    "123 132",  "12 13 23",   "1123 23", "12 132 3",
                               "123321",   "1 12 23 3", "11232 3",   "112 23 3", "112 233",
                               "1213 2 3", "112233",   "123 1 2 3",  "11223 3", "1123 2 3"};
    for (int k = 0; k < 20; ++k) rot(k + 1, on_sphere[k], s2);
    const char* on_torus[] = {"1212", "123123", "123 123", "123132", "1213 23", "112323", "12123 3"};
    for (int k = 0; k < 7; ++k) rot(k + 21, on_torus[k], t2);
    const char* on_double_torus[] = {"12341234", "12312434", "12132434", "12123434"};
    for (int k = 0; k < 4; ++k) rot(k + 28, on_double_torus[k], f2);
    rot(32, "11 ; u=-", rp2);
    rot(33, "1212 ; u=--", rp2);
    rot(34, "12 12 ; u=-+", rp2);
    rot(35, "1122 ; u=+-", rp2);
    rot(36, "112 2 ; u=-+", rp2);
    rot(37, "1212 ; u=-+", kl);
    rot(38, "1122 ; u=--", kl);

    // Chord diagrams (all signs +).
    auto chord = [&](int k, std::string code, SurfaceType t) {
        out.push_back({"chord/Ch" + std::to_string(k), FixtureKind::Chord, std::move(code), surface(t),
                       "chord diagram table"});
    };
    const char* chords[] = {"11",     "1122",   "123321",   "112233",   "1212",     "123123",
                            "123132", "112323", "12341234", "12312434", "12132434", "12123434"};
    for (int k = 0; k < 12; ++k) chord(k + 1, chords[k], k < 4 ? s2 : (k < 8 ? t2 : f2));

    // SLW-graphs.
    out.push_back({"slw/torus", FixtureKind::Slw, "graph:\nv A\ne a A A\ne b A A\nlist n=0:\na b a^-1 b^-1\n",
                   surface(t2), "SLW-graph of a closed surface"});
    out.push_back({"slw/klein", FixtureKind::Slw, "graph:\nv A\ne a A A\ne b A A\nlist n=0:\na a b b\n",
                   surface(kl), "SLW-graph of a closed surface"});
    out.push_back({"slw/sphere-two-disks", FixtureKind::Slw, "graph:\nv A\ne a A A\nlist n=0:\na\nlist n=0:\na^-1\n",
                   surface(s2), "SLW-graph of a closed surface"});
    {
        Expected e;
        e.is_surface = false;
        out.push_back({"slw/wedge-two-spheres", FixtureKind::Slw,
                       "graph:\nv A\ne a A A\ne b A A\nlist n=0:\na a^-1\nlist n=0:\nb b^-1\n", e,
                       "SLW-graph failing the vertex condition"});
    }

    // 3-dimensional simplicial complexes.
    {
        Expected e;
        e.manifold3 = true;
        e.orientable = true;
        e.components = 1;
        out.push_back({"m3/boundary-4-simplex", FixtureKind::Simplicial,
                       "1 2 3 4\n0 2 3 4\n0 1 3 4\n0 1 2 4\n0 1 2 3\n", e, "3-manifold recognition"});
        Expected d = e;
        d.surfaces = {s2};
        out.push_back({"m3/tetrahedron", FixtureKind::Simplicial, "0 1 2 3\n", d, "3-manifold recognition"});
        Expected w;
        w.manifold3 = false;
        w.components = 1;
        out.push_back({"m3/edge-wedge", FixtureKind::Simplicial, "0 1 2 3\n0 1 4 5\n", w, "3-manifold recognition"});
    }

    std::sort(out.begin(), out.end(), [](const Fixture& a, const Fixture& b) { return a.name < b.name; });
    return out;
}

} // namespace detail

inline const std::vector<Fixture>& catalog() {
    static const std::vector<Fixture> fixtures = detail::build_catalog();
    return fixtures;
}

inline std::vector<std::string> catalog_list() {
    std::vector<std::string> out;
    for (const auto& f : catalog()) out.push_back(f.name);
    return out;
}

inline const Fixture& catalog_get(std::string_view name) {
    for (const auto& f : catalog())
        if (f.name == name) return f;
    throw UnknownFixture(std::string(name));
}

/// Payload in its module's canonical text format.
inline std::string catalog_show(std::string_view name) {
    return std::visit([](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, ChordCode>)
            return to_string(p) + "\n";
        else if constexpr (std::is_same_v<T, RotationSystem>)
            return to_text(p) + "\n";
        else
            return to_text(p);
    }, catalog_get(name).payload());
}

} // namespace surftopo
