#pragma once

// Local planarity of 2-dimensional complexes: every edge must lie on one or
// two 2-cells, and the cells around every vertex must close up into a single
// path (boundary vertex) or cycle (interior vertex).

#include <cstddef>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "surftopo/complex.hpp"

namespace surftopo {

enum class EdgeKind { Interior, Boundary };
enum class LinkKind { Cycle, Path };

inline const char* to_string(EdgeKind k) { return k == EdgeKind::Interior ? "interior" : "boundary"; }
inline const char* to_string(LinkKind k) { return k == LinkKind::Cycle ? "cycle" : "path"; }

struct EdgeStatus {
    Edge edge;
    EdgeKind status;
    std::vector<std::size_t> incident_faces;
};

/// Where local planarity breaks. Edge failures carry the face count (0 or
/// >= 3); vertex failures carry the vertex and, for a branching walk, the
/// edge from the vertex to the branch point.
struct NotLocallyPlanar {
    std::optional<Edge> edge;
    std::size_t face_count = 0;
    std::optional<Label> vertex;
    std::optional<Edge> branching;

    std::string message() const {
        if (edge) return "edge " + to_string(*edge) + " lies on " + std::to_string(face_count) + " 2-cells";
        std::string m = "vertex " + vertex.value_or("?") + " has a disconnected link";
        if (branching) m += " (branching at edge " + to_string(*branching) + ")";
        return m;
    }
};

struct EdgeCheck {
    std::vector<EdgeStatus> edges;
    std::optional<NotLocallyPlanar> failure;

    bool ok() const { return !failure.has_value(); }
};

struct VertexLink {
    Label vertex;
    std::vector<Label> walk;
    LinkKind kind = LinkKind::Path;
};

struct VertexCheck {
    std::optional<VertexLink> link;
    std::optional<NotLocallyPlanar> failure;

    bool ok() const { return link.has_value(); }
};

struct BoundaryDecomposition {
    std::vector<Cycle> cycles;
};

struct SurfaceCheck {
    bool surface = false;
    bool closed = false;
    std::size_t boundary_count = 0;
    std::optional<NotLocallyPlanar> failure;
    std::vector<EdgeStatus> edges;
    std::vector<VertexLink> links;
    BoundaryDecomposition boundary;
};

/// Indices of the 2-cells whose boundary contains each edge.
inline std::map<Edge, std::vector<std::size_t>> edge_faces(const CWComplex2& complex) {
    std::map<Edge, std::vector<std::size_t>> out;
    for (const auto& e : complex.edges()) out[e];
    for (std::size_t i = 0; i < complex.faces().size(); ++i)
        for (auto& e : cycle_edges(complex.faces()[i])) out[e].push_back(i);
    return out;
}

inline EdgeCheck edge_check(const CWComplex2& complex) {
    EdgeCheck out;
    for (const auto& [e, faces] : edge_faces(complex)) {
        if (faces.size() == 1 || faces.size() == 2) {
            out.edges.push_back({e, faces.size() == 2 ? EdgeKind::Interior : EdgeKind::Boundary, faces});
        } else if (!out.failure) {
            out.failure = NotLocallyPlanar{e, faces.size(), std::nullopt, std::nullopt};
        }
    }
    return out;
}

namespace detail {

/// Part of a face boundary that avoids `v`: the cycle read from the vertex
/// after `v` round to the vertex before it. Its ends are neighbours of `v`.
inline std::vector<Label> opposite_arc(const Cycle& face, std::size_t at) {
    std::vector<Label> arc;
    for (std::size_t k = 1; k < face.size(); ++k) arc.push_back(face[(at + k) % face.size()]);
    return arc;
}

} // namespace detail

/// Builds the walk through the cells around `v`. For a triangle the arc is
/// the opposite edge; for a larger cell it is every boundary 1-cell missing
/// `v`, so the walk lists those intermediate vertices too.
inline VertexCheck vertex_check(const CWComplex2& complex, const Label& v) {
    std::vector<std::vector<Label>> arcs;
    for (const auto& f : complex.faces()) {
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f[i] == v) arcs.push_back(detail::opposite_arc(f, i));
    }
    NotLocallyPlanar fail{std::nullopt, 0, v, std::nullopt};
    if (arcs.empty()) return {std::nullopt, fail};

    std::vector<bool> used(arcs.size(), false);
    std::deque<Label> seq;
    {
        auto first = arcs[0];
        if (first.back() < first.front()) std::reverse(first.begin(), first.end());
        seq.assign(first.begin(), first.end());
        used[0] = true;
    }

    // Unused arcs with an end at `u`.
    auto touching = [&](const Label& u) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < arcs.size(); ++i)
            if (!used[i] && (arcs[i].front() == u || arcs[i].back() == u)) hits.push_back(i);
        return hits;
    };

    bool closed = false;
    while (true) {
        if (seq.size() > 1 && seq.front() == seq.back()) {
            closed = true;
            break;
        }
        bool extended = false;
        for (bool right : {true, false}) {
            const Label end = right ? seq.back() : seq.front();
            const auto hits = touching(end);
            if (hits.empty()) continue;
            if (hits.size() > 1) {
                fail.branching = Edge(v, end);
                return {std::nullopt, fail};
            }
            auto arc = arcs[hits[0]];
            used[hits[0]] = true;
            if (arc.front() != end) std::reverse(arc.begin(), arc.end());
            if (right)
                seq.insert(seq.end(), arc.begin() + 1, arc.end());
            else
                seq.insert(seq.begin(), arc.rbegin(), arc.rend() - 1);
            extended = true;
            break;
        }
        if (!extended) break;
    }
    if (std::find(used.begin(), used.end(), false) != used.end()) return {std::nullopt, fail};

    VertexLink link{v, {seq.begin(), seq.end()}, closed ? LinkKind::Cycle : LinkKind::Path};
    if (closed) link.walk.pop_back();
    return {link, std::nullopt};
}

/// Closed walks along the one-cell edges. Each starts at its smallest vertex
/// and heads to the smaller neighbour; walks are sorted by start vertex.
inline BoundaryDecomposition boundary_components(const CWComplex2& complex) {
    std::map<Label, std::set<Label>> adjacent;
    for (const auto& [e, faces] : edge_faces(complex)) {
        if (faces.size() != 1) continue;
        adjacent[e.a].insert(e.b);
        adjacent[e.b].insert(e.a);
    }
    std::set<Edge> used;
    BoundaryDecomposition out;
    for (const auto& [start, _] : adjacent) {
        auto fresh = [&](const Label& from) -> std::optional<Label> {
            for (const auto& w : adjacent[from])
                if (!used.count(Edge(from, w))) return w;
            return std::nullopt;
        };
        while (auto next = fresh(start)) {
            Cycle cycle{start};
            Label at = start;
            while (next) {
                used.insert(Edge(at, *next));
                at = *next;
                if (at == start) break;
                cycle.push_back(at);
                next = fresh(at);
            }
            out.cycles.push_back(std::move(cycle));
        }
    }
    return out;
}

inline SurfaceCheck is_surface(const CWComplex2& complex) {
    SurfaceCheck out;
    auto edges = edge_check(complex);
    out.edges = std::move(edges.edges);
    if (edges.failure) {
        out.failure = edges.failure;
        return out;
    }
    for (const auto& v : complex.vertices()) {
        auto vc = vertex_check(complex, v);
        if (!vc.ok()) {
            out.failure = vc.failure;
            return out;
        }
        out.links.push_back(std::move(*vc.link));
    }
    out.surface = true;
    out.boundary = boundary_components(complex);
    out.boundary_count = out.boundary.cycles.size();
    out.closed = out.boundary.cycles.empty();
    return out;
}

inline EdgeCheck edge_check(const SimplicialComplex& complex) { return edge_check(to_cw2(complex)); }
inline VertexCheck vertex_check(const SimplicialComplex& complex, const Label& v) {
    return vertex_check(to_cw2(complex), v);
}
inline BoundaryDecomposition boundary_components(const SimplicialComplex& complex) {
    return boundary_components(to_cw2(complex));
}
inline SurfaceCheck is_surface(const SimplicialComplex& complex) { return is_surface(to_cw2(complex)); }

} // namespace surftopo
