#pragma once

// Connected components of a complex, computed on its 1-skeleton: a cell
// complex is connected exactly when its 1-skeleton is.

#include <cstddef>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "surftopo/complex.hpp"

namespace surftopo {

struct ComponentPartition {
    /// Vertex sets, each sorted; ordered by their smallest label.
    std::vector<std::vector<Label>> components;
    std::map<Label, std::size_t> assignment;

    std::size_t size() const { return components.size(); }
};

/// Grows one vertex list at a time: seed it with an unvisited vertex, then
/// sweep the list appending every neighbour not yet seen.
inline ComponentPartition components(const Skeleton1& graph) {
    if (graph.vertices.empty()) throw EmptyComplex();

    std::map<Label, std::vector<Label>> adjacent;
    for (const auto& v : graph.vertices) adjacent[v];
    for (const auto& e : graph.edges) {
        adjacent[e.a].push_back(e.b);
        adjacent[e.b].push_back(e.a);
    }

    ComponentPartition out;
    // Seeds are taken in sorted order, so component i's smallest label is
    // smaller than component i+1's.
    for (const auto& [seed, _] : adjacent) {
        if (out.assignment.count(seed)) continue;
        const std::size_t index = out.components.size();
        std::vector<Label> list{seed};
        out.assignment[seed] = index;
        for (std::size_t cursor = 0; cursor < list.size(); ++cursor) {
            for (const auto& w : adjacent[list[cursor]]) {
                if (out.assignment.emplace(w, index).second) list.push_back(w);
            }
        }
        std::sort(list.begin(), list.end());
        out.components.push_back(std::move(list));
    }
    return out;
}

inline ComponentPartition components(const SimplicialComplex& complex) { return components(skeleton1(complex)); }
inline ComponentPartition components(const CWComplex2& complex) { return components(skeleton1(complex)); }

template <class Complex>
bool is_connected(const Complex& complex) {
    return components(complex).size() == 1;
}

/// Splits a complex into one subcomplex per component, in partition order.
inline std::vector<SimplicialComplex> split_components(const SimplicialComplex& complex,
                                                       const ComponentPartition& partition) {
    std::vector<std::vector<Simplex>> parts(partition.size());
    for (const auto& s : complex.simplices()) parts[partition.assignment.at(s[0])].push_back(s);
    std::vector<SimplicialComplex> out;
    for (const auto& p : parts) out.push_back(close(p));
    return out;
}

inline std::vector<CWComplex2> split_components(const CWComplex2& complex, const ComponentPartition& partition) {
    const std::size_t k = partition.size();
    std::vector<std::vector<Cycle>> faces(k);
    std::vector<std::vector<Edge>> edges(k);
    std::vector<std::vector<Label>> vertices(k);
    for (const auto& f : complex.faces()) faces[partition.assignment.at(f.front())].push_back(f);
    for (const auto& e : complex.edges()) edges[partition.assignment.at(e.a)].push_back(e);
    for (const auto& v : complex.vertices()) vertices[partition.assignment.at(v)].push_back(v);
    std::vector<CWComplex2> out;
    for (std::size_t i = 0; i < k; ++i) out.push_back(CWComplex2::make(faces[i], edges[i], vertices[i]));
    return out;
}

} // namespace surftopo
