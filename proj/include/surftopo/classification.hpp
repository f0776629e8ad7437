#pragma once

// Topological type of compact surfaces: orientability, genus and number of
// boundary components, with the genus recovered from the Euler characteristic
//   orientable:      chi = 2 - 2g - b
//   non-orientable:  chi = 2 - g - b,  g >= 1

#include <cstddef>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include "surftopo/complex.hpp"
#include "surftopo/connectivity.hpp"
#include "surftopo/orientation.hpp"
#include "surftopo/surface.hpp"

namespace surftopo {

struct SurfaceType {
    bool orientable = true;
    long genus = 0;
    long boundary = 0;
    long euler = 2;

    bool operator==(const SurfaceType&) const = default;
};

inline long genus(long euler, bool orientable, long boundary) {
    if (boundary < 0) throw InvalidSurfaceType("negative boundary count");
    const long twice_or_once = 2 - euler - boundary;
    if (orientable) {
        if (twice_or_once < 0) throw InvalidSurfaceType("orientable genus would be negative");
        if (twice_or_once % 2 != 0) throw InvalidSurfaceType("orientable surface needs 2 - chi - b even");
        return twice_or_once / 2;
    }
    if (twice_or_once < 1) throw InvalidSurfaceType("non-orientable genus must be at least 1");
    return twice_or_once;
}

inline SurfaceType surface_type(long euler, bool orientable, long boundary) {
    return {orientable, genus(euler, orientable, boundary), boundary, euler};
}

inline long euler_of(bool orientable, long genus, long boundary) {
    return orientable ? 2 - 2 * genus - boundary : 2 - genus - boundary;
}

/// S2, T2, RP2, Kl for the small closed surfaces, F_g / N_g for the other
/// closed ones, F_{g,b} / N_{g,b} with boundary.
inline std::string surface_name(const SurfaceType& t) {
    const std::string g = std::to_string(t.genus);
    if (t.boundary == 0) {
        if (t.orientable && t.genus == 0) return "S2";
        if (t.orientable && t.genus == 1) return "T2";
        if (!t.orientable && t.genus == 1) return "RP2";
        if (!t.orientable && t.genus == 2) return "Kl";
        return (t.orientable ? "F_" : "N_") + g;
    }
    return (t.orientable ? "F_{" : "N_{") + g + "," + std::to_string(t.boundary) + "}";
}

inline std::optional<SurfaceType> parse_surface_name(const std::string& name) {
    auto make = [](bool o, long g, long b) -> std::optional<SurfaceType> {
        if (!o && g < 1) return std::nullopt;
        return SurfaceType{o, g, b, euler_of(o, g, b)};
    };
    if (name == "S2") return make(true, 0, 0);
    if (name == "T2") return make(true, 1, 0);
    if (name == "RP2") return make(false, 1, 0);
    if (name == "Kl") return make(false, 2, 0);
    static const std::regex closed(R"(([FN])_(\d+))");
    static const std::regex bounded(R"(([FN])_\{(\d+),(\d+)\})");
    std::smatch m;
    if (std::regex_match(name, m, closed)) {
        const bool o = m[1] == "F";
        const long g = std::stol(m[2]);
        // The small cases have dedicated names.
        if ((o && g <= 1) || (!o && g <= 2)) return std::nullopt;
        return make(o, g, 0);
    }
    if (std::regex_match(name, m, bounded)) {
        const long b = std::stol(m[3]);
        if (b == 0) return std::nullopt;
        return make(m[1] == "F", std::stol(m[2]), b);
    }
    return std::nullopt;
}

inline std::string describe(const SurfaceType& t) {
    return surface_name(t) + ": " + (t.orientable ? "orientable" : "non-orientable") + " genus " +
           std::to_string(t.genus) + ", " + std::to_string(t.boundary) + " boundary, \xCF\x87=" +
           std::to_string(t.euler);
}

/// Outcome of the classification pipeline on one connected component.
struct ComponentReport {
    std::vector<Label> vertices;
    long euler = 0;
    SurfaceCheck check;
    std::optional<Orient2Result> orientation;
    std::optional<SurfaceType> type;
};

/// Per component: local planarity and boundary, orientability, then genus
/// from the Euler characteristic. Components that are not surfaces stop after
/// the planarity step.
inline std::vector<ComponentReport> classify_components(const CWComplex2& complex) {
    const auto partition = components(complex);
    const auto parts = split_components(complex, partition);
    std::vector<ComponentReport> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ComponentReport r;
        r.vertices = partition.components[i];
        r.euler = euler_characteristic(parts[i]);
        r.check = is_surface(parts[i]);
        if (r.check.surface) {
            r.orientation = orient2(parts[i]);
            r.type = surface_type(r.euler, r.orientation->orientable, static_cast<long>(r.check.boundary_count));
        }
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<ComponentReport> classify_components(const SimplicialComplex& complex) {
    return classify_components(to_cw2(complex));
}

/// One SurfaceType per connected component; throws NotSurface naming the
/// first component that fails local planarity.
template <class Complex>
std::vector<SurfaceType> classify_surface(const Complex& complex) {
    std::vector<SurfaceType> out;
    const auto reports = classify_components(complex);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        if (!reports[i].type) {
            const auto& f = reports[i].check.failure;
            throw NotSurface(i, f ? f->message() : "not locally planar");
        }
        out.push_back(*reports[i].type);
    }
    return out;
}

namespace detail {

inline bool connected_surface_with(const CWComplex2& complex, long euler, bool need_boundary) {
    if (complex.empty() || !is_connected(complex)) return false;
    const auto check = is_surface(complex);
    if (!check.surface) return false;
    if (need_boundary && check.closed) return false;
    return euler_characteristic(complex) == euler;
}

inline std::optional<CWComplex2> as_2complex(const SimplicialComplex& complex) {
    if (complex.empty() || complex.dimension() > 2) return std::nullopt;
    return to_cw2(complex);
}

} // namespace detail

/// Connected, locally planar, chi = 2.
inline bool is_sphere(const CWComplex2& complex) { return detail::connected_surface_with(complex, 2, false); }

/// Connected, locally planar, non-empty boundary, chi = 1.
inline bool is_disk(const CWComplex2& complex) { return detail::connected_surface_with(complex, 1, true); }

inline bool is_sphere(const SimplicialComplex& complex) {
    auto cw = detail::as_2complex(complex);
    return cw && is_sphere(*cw);
}

inline bool is_disk(const SimplicialComplex& complex) {
    auto cw = detail::as_2complex(complex);
    return cw && is_disk(*cw);
}

} // namespace surftopo
