#pragma once

// Orientability by propagation. A cell's orientation is the direction of its
// vertex sequence; two cells sharing an edge (or, one dimension up, a
// triangle) agree when they induce opposite orientations on it.

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "surftopo/complex.hpp"
#include "surftopo/surface.hpp"

namespace surftopo {

using DirectedEdge = std::pair<Label, Label>;

/// Directed edges induced by an oriented cell (v0, v1, ..., vk): (v0,v1), ..., (vk,v0).
inline std::vector<DirectedEdge> induced_edges(const Cycle& cell) {
    std::vector<DirectedEdge> out;
    for (std::size_t i = 0; i < cell.size(); ++i) out.emplace_back(cell[i], cell[(i + 1) % cell.size()]);
    return out;
}

inline bool traverses(const Cycle& cell, const Label& from, const Label& to) {
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (cell[i] == from && cell[(i + 1) % cell.size()] == to) return true;
    return false;
}

/// Opposite orientation, written starting from the old second vertex:
/// (v0, v1, v2, ..., vk) becomes (v1, v0, vk, ..., v2).
inline Cycle reversed_cell(const Cycle& cell) {
    if (cell.size() < 2) return cell;
    Cycle out{cell[1], cell[0]};
    for (std::size_t k = cell.size() - 1; k >= 2; --k) out.push_back(cell[k]);
    return out;
}

struct Orient2Result {
    bool orientable = false;
    /// One oriented cycle per 2-cell, in the complex's face order.
    std::vector<Cycle> witness;
    std::optional<Edge> conflict;
    std::optional<std::pair<std::size_t, std::size_t>> conflict_faces;
};

/// True when every edge shared by two cells is traversed in opposite directions.
inline bool is_consistent(const std::vector<Cycle>& cells) {
    std::map<DirectedEdge, int> seen;
    for (const auto& c : cells)
        for (const auto& d : induced_edges(c))
            if (++seen[d] > 1) return false;
    return true;
}

/// Breadth-first propagation over the face-adjacency graph starting from the
/// first 2-cell, which keeps its stored orientation. Each further component
/// restarts from its first cell.
inline Orient2Result orient2(const CWComplex2& complex) {
    const auto& faces = complex.faces();
    const auto incident = edge_faces(complex);
    std::vector<std::optional<Cycle>> oriented(faces.size());
    Orient2Result out;

    for (std::size_t root = 0; root < faces.size(); ++root) {
        if (oriented[root]) continue;
        oriented[root] = faces[root];
        std::queue<std::size_t> pending;
        pending.push(root);
        while (!pending.empty()) {
            const std::size_t i = pending.front();
            pending.pop();
            for (const auto& [from, to] : induced_edges(*oriented[i])) {
                for (std::size_t j : incident.at(Edge(from, to))) {
                    if (j == i) continue;
                    if (!oriented[j]) {
                        oriented[j] = traverses(faces[j], from, to) ? reversed_cell(faces[j]) : faces[j];
                        pending.push(j);
                    } else if (!traverses(*oriented[j], to, from)) {
                        out.conflict = Edge(from, to);
                        out.conflict_faces = std::make_pair(std::min(i, j), std::max(i, j));
                        return out;
                    }
                }
            }
        }
    }
    out.orientable = true;
    for (auto& c : oriented) out.witness.push_back(std::move(*c));
    return out;
}

inline Orient2Result orient2(const SimplicialComplex& complex) { return orient2(to_cw2(complex)); }

struct Orient3Result {
    bool orientable = false;
    /// One ordered quadruple per tetrahedron, in sorted tetrahedron order.
    std::vector<std::array<Label, 4>> witness;
    std::optional<Simplex> conflict;
    std::optional<std::pair<std::size_t, std::size_t>> conflict_cells;
};

namespace detail {

/// Sign of the orientation a tetrahedron with sign `sign` (relative to its
/// sorted vertex order) induces on the face omitting sorted position `omit`,
/// relative to that face's sorted order.
inline int induced_face_sign(int sign, std::size_t omit) { return (omit % 2 == 0) ? sign : -sign; }

} // namespace detail

inline Orient3Result orient3(const SimplicialComplex& complex) {
    if (complex.dimension() != 3) throw UnsupportedDimension("orient3 needs a 3-dimensional complex");
    const auto tets = complex.of_dimension(3);

    // triangle -> (tetrahedron index, omitted position)
    std::map<Simplex, std::vector<std::pair<std::size_t, std::size_t>>> around;
    for (std::size_t t = 0; t < tets.size(); ++t)
        for (std::size_t k = 0; k < 4; ++k) around[tets[t].without(tets[t][k])].emplace_back(t, k);

    std::vector<int> sign(tets.size(), 0);
    Orient3Result out;
    for (std::size_t root = 0; root < tets.size(); ++root) {
        if (sign[root]) continue;
        sign[root] = 1;
        std::queue<std::size_t> pending;
        pending.push(root);
        while (!pending.empty()) {
            const std::size_t t = pending.front();
            pending.pop();
            for (std::size_t k = 0; k < 4; ++k) {
                const Simplex tri = tets[t].without(tets[t][k]);
                const int mine = detail::induced_face_sign(sign[t], k);
                for (const auto& [u, omit] : around.at(tri)) {
                    if (u == t) continue;
                    if (!sign[u]) {
                        // The neighbour must induce -mine on the shared triangle.
                        sign[u] = detail::induced_face_sign(1, omit) == -mine ? 1 : -1;
                        pending.push(u);
                    } else if (detail::induced_face_sign(sign[u], omit) != -mine) {
                        out.conflict = tri;
                        out.conflict_cells = std::make_pair(std::min(t, u), std::max(t, u));
                        return out;
                    }
                }
            }
        }
    }
    out.orientable = true;
    for (std::size_t t = 0; t < tets.size(); ++t) {
        const auto& v = tets[t].vertices();
        if (sign[t] > 0)
            out.witness.push_back({v[0], v[1], v[2], v[3]});
        else
            out.witness.push_back({v[1], v[0], v[2], v[3]});
    }
    return out;
}

} // namespace surftopo
