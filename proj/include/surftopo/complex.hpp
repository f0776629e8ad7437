#pragma once

// Data model for finite simplicial complexes (dimension <= 3) and regular
// 2-dimensional CW complexes, their text formats, 1-skeleta and Euler
// characteristics.
//
// Vertex labels are opaque whitespace-free strings ordered lexicographically,
// so "10" < "2" and "X" sorts after the digits.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surftopo/error.hpp"

namespace surftopo {

using Label = std::string;
using Cycle = std::vector<Label>;

inline constexpr std::size_t kMaxSimplexVertices = 4;

namespace detail {

inline bool valid_label(std::string_view s) {
    if (s.empty()) return false;
    return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
        if (j > i) out.emplace_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

/// Non-empty lines with '#' comments removed, paired with their 1-based
/// line numbers.
inline std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> out;
    std::size_t lineno = 0;
    while (!text.empty()) {
        ++lineno;
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line = trim(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        out.emplace_back(lineno, line);
    }
    return out;
}

inline std::string join(const std::vector<Label>& xs, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += sep;
        out += xs[i];
    }
    return out;
}

} // namespace detail

/// Unordered vertex pair stored with the smaller label first.
struct Edge {
    Label a;
    Label b;

    Edge() = default;
    Edge(Label x, Label y) : a(std::move(x)), b(std::move(y)) {
        if (b < a) std::swap(a, b);
    }

    bool contains(const Label& v) const { return a == v || b == v; }
    const Label& other(const Label& v) const { return a == v ? b : a; }

    auto operator<=>(const Edge&) const = default;
    bool operator==(const Edge&) const = default;
};

inline std::string to_string(const Edge& e) { return "{" + e.a + "," + e.b + "}"; }

/// Edges traversed by a closed cycle, consecutive pairs with wraparound.
inline std::vector<Edge> cycle_edges(const Cycle& cycle) {
    std::vector<Edge> out;
    out.reserve(cycle.size());
    for (std::size_t i = 0; i < cycle.size(); ++i) out.emplace_back(cycle[i], cycle[(i + 1) % cycle.size()]);
    return out;
}

/// Rotation of `cycle` that starts at its smallest label and continues
/// toward the smaller of that label's two neighbours.
inline Cycle canonical_cycle(const Cycle& cycle) {
    if (cycle.empty()) return cycle;
    const std::size_t n = cycle.size();
    const std::size_t start = std::min_element(cycle.begin(), cycle.end()) - cycle.begin();
    const bool forward = cycle[(start + 1) % n] <= cycle[(start + n - 1) % n];
    Cycle out;
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        out.push_back(forward ? cycle[(start + k) % n] : cycle[(start + n - k) % n]);
    return out;
}

class Simplex {
public:
    Simplex() = default;

    explicit Simplex(std::vector<Label> vertices) : vertices_(std::move(vertices)) {
        if (vertices_.empty()) throw ParseError("simplex has no vertices");
        if (vertices_.size() > kMaxSimplexVertices)
            throw ParseError("simplex has " + std::to_string(vertices_.size()) + " vertices (at most 4 allowed)");
        for (const auto& v : vertices_)
            if (!detail::valid_label(v)) throw ParseError("invalid vertex label '" + v + "'");
        std::sort(vertices_.begin(), vertices_.end());
        if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
            throw ParseError("simplex repeats a vertex");
    }

    Simplex(std::initializer_list<Label> vertices) : Simplex(std::vector<Label>(vertices)) {}

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Label>& vertices() const { return vertices_; }
    const Label& operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(const Label& v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

    /// The simplex with `v` removed; `v` must be a vertex and the simplex not a point.
    Simplex without(const Label& v) const {
        std::vector<Label> rest;
        for (const auto& x : vertices_)
            if (x != v) rest.push_back(x);
        return Simplex(std::move(rest));
    }

    /// All non-empty faces, including the simplex itself.
    std::vector<Simplex> faces() const {
        std::vector<Simplex> out;
        const unsigned n = static_cast<unsigned>(vertices_.size());
        for (unsigned mask = 1; mask < (1u << n); ++mask) {
            Simplex f;
            for (unsigned i = 0; i < n; ++i)
                if (mask & (1u << i)) f.vertices_.push_back(vertices_[i]);
            out.push_back(std::move(f));
        }
        return out;
    }

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;

private:
    std::vector<Label> vertices_;
};

inline std::string to_string(const Simplex& s) { return "{" + detail::join(s.vertices(), ",") + "}"; }

/// Face-closed set of simplices.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    const std::set<Simplex>& simplices() const { return simplices_; }
    bool empty() const { return simplices_.empty(); }
    bool contains(const Simplex& s) const { return simplices_.count(s) != 0; }

    int dimension() const {
        int d = -1;
        for (const auto& s : simplices_) d = std::max(d, s.dimension());
        return d;
    }

    std::size_t count(int dim) const {
        return static_cast<std::size_t>(std::count_if(simplices_.begin(), simplices_.end(),
                                                      [dim](const Simplex& s) { return s.dimension() == dim; }));
    }

    std::vector<Simplex> of_dimension(int dim) const {
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (s.dimension() == dim) out.push_back(s);
        return out;
    }

    std::vector<Label> vertices() const {
        std::vector<Label> out;
        for (const auto& s : simplices_)
            if (s.dimension() == 0) out.push_back(s[0]);
        return out;
    }

    /// Simplices that are not a proper face of another simplex.
    std::vector<Simplex> maximal() const {
        std::set<Simplex> covered;
        for (const auto& s : simplices_)
            for (auto& f : s.faces())
                if (f != s) covered.insert(std::move(f));
        std::vector<Simplex> out;
        for (const auto& s : simplices_)
            if (!covered.count(s)) out.push_back(s);
        return out;
    }

    bool operator==(const SimplicialComplex&) const = default;

    template <class Range>
    friend SimplicialComplex close(const Range& simplices);

private:
    std::set<Simplex> simplices_;
};

/// Smallest face-closed superset of `simplices`.
template <class Range>
SimplicialComplex close(const Range& simplices) {
    SimplicialComplex out;
    for (const Simplex& s : simplices)
        for (auto& f : s.faces()) out.simplices_.insert(std::move(f));
    return out;
}

inline SimplicialComplex close(std::initializer_list<Simplex> simplices) {
    return close(std::vector<Simplex>(simplices));
}

inline SimplicialComplex close(const SimplicialComplex& complex) { return close(complex.simplices()); }

/// Regular 2-dimensional CW complex. Each 2-cell is a cycle of distinct
/// vertices; 1-cells are identified by their endpoint pairs.
class CWComplex2 {
public:
    CWComplex2() = default;

    /// Builds and validates a complex. Vertices and edges are the union of
    /// what the face cycles use and the explicit declarations.
    static CWComplex2 make(std::vector<Cycle> faces, const std::vector<Edge>& extra_edges = {},
                           const std::vector<Label>& extra_vertices = {}) {
        CWComplex2 cw;
        for (const auto& f : faces) {
            if (f.size() < 3) throw MalformedFace("face cycle has fewer than 3 vertices");
            std::vector<Label> sorted = f;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw NotRegular("face cycle repeats a vertex");
            for (const auto& v : f) {
                if (!detail::valid_label(v)) throw ParseError("invalid vertex label '" + v + "'");
                cw.vertices_.insert(v);
            }
            for (auto& e : cycle_edges(f)) cw.edges_.insert(std::move(e));
        }
        for (const auto& e : extra_edges) {
            if (e.a == e.b) throw ParseError("edge joins a vertex to itself");
            if (!detail::valid_label(e.a) || !detail::valid_label(e.b)) throw ParseError("invalid edge endpoint");
            cw.vertices_.insert(e.a);
            cw.vertices_.insert(e.b);
            cw.edges_.insert(e);
        }
        for (const auto& v : extra_vertices) {
            if (!detail::valid_label(v)) throw ParseError("invalid vertex label '" + v + "'");
            cw.vertices_.insert(v);
        }
        cw.faces_ = std::move(faces);
        return cw;
    }

    const std::set<Label>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }
    const std::vector<Cycle>& faces() const { return faces_; }
    bool empty() const { return vertices_.empty(); }

    bool operator==(const CWComplex2&) const = default;

private:
    std::set<Label> vertices_;
    std::set<Edge> edges_;
    std::vector<Cycle> faces_;
};

/// A simplicial complex of dimension <= 2 viewed as a regular CW complex;
/// triangles become 3-cycles in sorted vertex order.
inline CWComplex2 to_cw2(const SimplicialComplex& complex) {
    if (complex.dimension() > 2)
        throw UnsupportedDimension("expected a complex of dimension <= 2, got dimension " +
                                   std::to_string(complex.dimension()));
    std::vector<Cycle> faces;
    std::vector<Edge> edges;
    std::vector<Label> vertices;
    for (const auto& s : complex.simplices()) {
        switch (s.dimension()) {
        case 0: vertices.push_back(s[0]); break;
        case 1: edges.emplace_back(s[0], s[1]); break;
        default: faces.push_back(s.vertices()); break;
        }
    }
    return CWComplex2::make(std::move(faces), edges, vertices);
}

struct Skeleton1 {
    std::set<Label> vertices;
    std::set<Edge> edges;
};

inline Skeleton1 skeleton1(const SimplicialComplex& complex) {
    Skeleton1 g;
    for (const auto& s : complex.simplices()) {
        if (s.dimension() == 0) g.vertices.insert(s[0]);
        if (s.dimension() == 1) g.edges.emplace(s[0], s[1]);
    }
    return g;
}

inline Skeleton1 skeleton1(const CWComplex2& complex) { return {complex.vertices(), complex.edges()}; }

inline long euler_characteristic(const SimplicialComplex& complex) {
    long chi = 0;
    for (const auto& s : complex.simplices()) chi += (s.dimension() % 2 == 0) ? 1 : -1;
    return chi;
}

inline long euler_characteristic(const CWComplex2& complex) {
    return static_cast<long>(complex.vertices().size()) - static_cast<long>(complex.edges().size()) +
           static_cast<long>(complex.faces().size());
}

// ---------------------------------------------------------------------------
// Text formats

/// One simplex per line, labels separated by whitespace. Listing only the
/// maximal simplices is enough; the result is face-closed.
inline SimplicialComplex parse_simplicial(std::string_view text) {
    std::vector<Simplex> listed;
    for (const auto& [lineno, line] : detail::content_lines(text)) {
        try {
            listed.emplace_back(detail::split_ws(line));
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno);
        }
    }
    if (listed.empty()) throw ParseError("no simplices in input");
    return close(listed);
}

/// Lines `F: v1 ... vk` (2-cells), `E: a b` (extra 1-cells), `V: v` (isolated vertices).
inline CWComplex2 parse_cw2(std::string_view text) {
    std::vector<Cycle> faces;
    std::vector<Edge> edges;
    std::vector<Label> vertices;
    for (const auto& [lineno, line] : detail::content_lines(text)) {
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected 'F:', 'E:' or 'V:'", lineno);
        const std::string_view tag = detail::trim(line.substr(0, colon));
        auto items = detail::split_ws(line.substr(colon + 1));
        if (tag == "F") {
            if (items.size() < 3) throw MalformedFace("face cycle has fewer than 3 vertices", lineno);
            std::vector<Label> sorted = items;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw NotRegular("face cycle repeats a vertex", lineno);
            faces.push_back(std::move(items));
        } else if (tag == "E") {
            if (items.size() != 2 || items[0] == items[1])
                throw ParseError("edge line needs two distinct endpoints", lineno);
            edges.emplace_back(items[0], items[1]);
        } else if (tag == "V") {
            if (items.empty()) throw ParseError("vertex line is empty", lineno);
            for (auto& v : items) vertices.push_back(std::move(v));
        } else {
            throw ParseError("unknown record tag '" + std::string(tag) + "'", lineno);
        }
    }
    if (faces.empty() && edges.empty() && vertices.empty()) throw ParseError("no cells in input");
    return CWComplex2::make(std::move(faces), edges, vertices);
}

/// Canonical text: maximal simplices, sorted, one per line.
inline std::string to_text(const SimplicialComplex& complex) {
    std::string out;
    for (const auto& s : complex.maximal()) {
        out += detail::join(s.vertices(), " ");
        out += '\n';
    }
    return out;
}

/// Canonical text: canonical face cycles sorted, then edges outside every
/// face, then vertices outside every edge.
inline std::string to_text(const CWComplex2& complex) {
    std::vector<Cycle> faces;
    std::set<Edge> face_edges;
    for (const auto& f : complex.faces()) {
        faces.push_back(canonical_cycle(f));
        for (auto& e : cycle_edges(f)) face_edges.insert(std::move(e));
    }
    std::sort(faces.begin(), faces.end());
    std::set<Label> touched;
    std::string out;
    for (const auto& f : faces) out += "F: " + detail::join(f, " ") + "\n";
    for (const auto& e : complex.edges()) {
        touched.insert(e.a);
        touched.insert(e.b);
        if (!face_edges.count(e)) out += "E: " + e.a + " " + e.b + "\n";
    }
    for (const auto& v : complex.vertices())
        if (!touched.count(v)) out += "V: " + v + "\n";
    return out;
}

/// Returns a copy with every vertex label replaced through `relabel`.
inline SimplicialComplex relabeled(const SimplicialComplex& complex, const std::map<Label, Label>& relabel) {
    std::vector<Simplex> out;
    for (const auto& s : complex.maximal()) {
        std::vector<Label> vs;
        for (const auto& v : s.vertices()) vs.push_back(relabel.at(v));
        out.emplace_back(std::move(vs));
    }
    return close(out);
}

inline CWComplex2 relabeled(const CWComplex2& complex, const std::map<Label, Label>& relabel) {
    std::vector<Cycle> faces;
    for (const auto& f : complex.faces()) {
        Cycle c;
        for (const auto& v : f) c.push_back(relabel.at(v));
        faces.push_back(std::move(c));
    }
    std::vector<Edge> edges;
    for (const auto& e : complex.edges()) edges.emplace_back(relabel.at(e.a), relabel.at(e.b));
    std::vector<Label> vertices;
    for (const auto& v : complex.vertices()) vertices.push_back(relabel.at(v));
    return CWComplex2::make(std::move(faces), edges, vertices);
}

} // namespace surftopo
