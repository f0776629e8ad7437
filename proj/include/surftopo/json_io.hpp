#pragma once

// Structured-document form of the complex formats:
//   {"simplices": [["0","1","2"], ...]}
//   {"faces": [["0","1","2"], ...], "edges": [["3","4"]], "vertices": ["5"]}
// Labels may be given as JSON strings or integers.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "surftopo/complex.hpp"

namespace surftopo {

using AnyComplex = std::variant<SimplicialComplex, CWComplex2>;

namespace detail {

inline Label json_label(const nlohmann::json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_number_integer()) return std::to_string(j.get<long long>());
    throw ParseError("vertex label must be a string or an integer");
}

inline std::vector<Label> json_labels(const nlohmann::json& j) {
    if (!j.is_array()) throw ParseError("expected an array of labels");
    std::vector<Label> out;
    for (const auto& x : j) out.push_back(json_label(x));
    return out;
}

} // namespace detail

inline AnyComplex parse_complex_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("JSON complex must be an object");
    if (doc.contains("simplices")) {
        std::vector<Simplex> listed;
        for (const auto& s : doc.at("simplices")) listed.emplace_back(detail::json_labels(s));
        if (listed.empty()) throw ParseError("no simplices in input");
        return close(listed);
    }
    if (doc.contains("faces") || doc.contains("edges") || doc.contains("vertices")) {
        std::vector<Cycle> faces;
        std::vector<Edge> edges;
        std::vector<Label> vertices;
        if (doc.contains("faces"))
            for (const auto& f : doc.at("faces")) faces.push_back(detail::json_labels(f));
        if (doc.contains("edges"))
            for (const auto& e : doc.at("edges")) {
                auto ends = detail::json_labels(e);
                if (ends.size() != 2 || ends[0] == ends[1]) throw ParseError("edge needs two distinct endpoints");
                edges.emplace_back(ends[0], ends[1]);
            }
        if (doc.contains("vertices")) vertices = detail::json_labels(doc.at("vertices"));
        if (faces.empty() && edges.empty() && vertices.empty()) throw ParseError("no cells in input");
        return CWComplex2::make(std::move(faces), edges, vertices);
    }
    throw ParseError("JSON complex needs \"simplices\" or \"faces\"/\"edges\"/\"vertices\"");
}

inline nlohmann::json to_json(const SimplicialComplex& complex) {
    nlohmann::json simplices = nlohmann::json::array();
    for (const auto& s : complex.maximal()) simplices.push_back(s.vertices());
    return {{"simplices", simplices}};
}

inline nlohmann::json to_json(const CWComplex2& complex) {
    // Reuse the canonical text ordering so both forms agree.
    const CWComplex2 canon = parse_cw2(to_text(complex));
    nlohmann::json faces = nlohmann::json::array();
    nlohmann::json edges = nlohmann::json::array();
    nlohmann::json vertices = nlohmann::json::array();
    std::set<Edge> face_edges;
    std::set<Label> touched;
    for (const auto& f : canon.faces()) {
        faces.push_back(f);
        for (auto& e : cycle_edges(f)) face_edges.insert(std::move(e));
    }
    for (const auto& e : canon.edges()) {
        touched.insert(e.a);
        touched.insert(e.b);
        if (!face_edges.count(e)) edges.push_back({e.a, e.b});
    }
    for (const auto& v : canon.vertices())
        if (!touched.count(v)) vertices.push_back(v);
    return {{"faces", faces}, {"edges", edges}, {"vertices", vertices}};
}

} // namespace surftopo
