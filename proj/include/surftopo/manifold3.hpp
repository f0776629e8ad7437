#pragma once

// 3-manifold recognition for simplicial complexes. Every triangle must lie on
// one or two tetrahedra, and the link of every vertex must be a 2-sphere
// (interior vertex) or a 2-disk (vertex on a boundary triangle). The link
// tests reuse the surface classifier.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "surftopo/classification.hpp"
#include "surftopo/complex.hpp"

namespace surftopo {

enum class TriangleKind { Interior, Boundary };

inline const char* to_string(TriangleKind k) { return k == TriangleKind::Interior ? "interior" : "boundary"; }

struct TriangleStatus {
    Simplex triangle;
    TriangleKind status;
    std::size_t incident_tetrahedra;
};

struct NotManifold {
    std::optional<Simplex> triangle;
    std::size_t count = 0;
    std::optional<Label> vertex;
    std::string reason;

    std::string message() const {
        if (triangle)
            return "triangle " + to_string(*triangle) + " lies on " + std::to_string(count) + " tetrahedra";
        if (vertex) return "vertex " + *vertex + ": " + reason;
        return reason;
    }
};

struct FaceCheck3 {
    std::vector<TriangleStatus> triangles;
    std::optional<NotManifold> failure;

    bool ok() const { return !failure.has_value(); }
};

inline FaceCheck3 face_check3(const SimplicialComplex& complex) {
    if (complex.dimension() != 3) throw UnsupportedDimension("expected a 3-dimensional complex");
    std::map<Simplex, std::size_t> count;
    for (const auto& tri : complex.of_dimension(2)) count[tri] = 0;
    for (const auto& tet : complex.of_dimension(3))
        for (const auto& v : tet.vertices()) ++count[tet.without(v)];
    FaceCheck3 out;
    for (const auto& [tri, n] : count) {
        if (n == 1 || n == 2)
            out.triangles.push_back({tri, n == 2 ? TriangleKind::Interior : TriangleKind::Boundary, n});
        else if (!out.failure)
            out.failure = NotManifold{tri, n, std::nullopt, "triangle is not on one or two tetrahedra"};
    }
    return out;
}

/// Closure of the faces opposite `v` in the simplices containing it.
inline SimplicialComplex vertex_link3(const SimplicialComplex& complex, const Label& v) {
    std::vector<Simplex> opposite;
    for (const auto& s : complex.simplices())
        if (s.size() > 1 && s.contains(v)) opposite.push_back(s.without(v));
    return close(opposite);
}

struct VertexLinkReport {
    Label vertex;
    bool boundary_vertex = false;
    bool ok = false;
};

struct Manifold3Report {
    bool manifold = false;
    bool closed = false;
    std::vector<SurfaceType> boundary;
    std::vector<TriangleStatus> triangles;
    std::vector<VertexLinkReport> links;
    std::optional<NotManifold> failure;
};

inline Manifold3Report is_3manifold(const SimplicialComplex& complex) {
    if (complex.dimension() != 3)
        throw UnsupportedDimension("3-manifold recognition needs a 3-dimensional complex, got dimension " +
                                   std::to_string(complex.dimension()));
    Manifold3Report out;
    for (const auto& s : complex.maximal()) {
        if (s.dimension() != 3) {
            out.failure = NotManifold{std::nullopt, 0, std::nullopt,
                                      "mixed dimension: " + to_string(s) + " is not a face of any tetrahedron"};
            return out;
        }
    }
    auto faces = face_check3(complex);
    out.triangles = faces.triangles;
    if (faces.failure) {
        out.failure = faces.failure;
        return out;
    }

    std::vector<Simplex> boundary_triangles;
    std::set<Label> boundary_vertices;
    for (const auto& t : faces.triangles) {
        if (t.status != TriangleKind::Boundary) continue;
        boundary_triangles.push_back(t.triangle);
        boundary_vertices.insert(t.triangle.vertices().begin(), t.triangle.vertices().end());
    }

    for (const auto& v : complex.vertices()) {
        const bool on_boundary = boundary_vertices.count(v) != 0;
        const auto link = vertex_link3(complex, v);
        VertexLinkReport r{v, on_boundary, on_boundary ? is_disk(link) : is_sphere(link)};
        out.links.push_back(r);
        if (!r.ok && !out.failure)
            out.failure = NotManifold{std::nullopt, 0, v,
                                      on_boundary ? "link is not a disk" : "link is not a sphere"};
    }
    if (out.failure) return out;

    out.manifold = true;
    out.closed = boundary_triangles.empty();
    if (!out.closed) out.boundary = classify_surface(close(boundary_triangles));
    if (out.closed && euler_characteristic(complex) != 0)
        throw std::logic_error("closed 3-manifold with non-zero Euler characteristic");
    return out;
}

} // namespace surftopo
