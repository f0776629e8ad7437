#pragma once

// Rotation systems of cellularly embedded graphs: for every vertex the cyclic
// order of edge-ends around it, plus a consistency sign per edge (- when the
// local orientations at the two ends disagree).
//
// Text forms accepted by parse_rotation:
//   {1,1,2},{2,3,3}           one brace group per vertex, comma separated
//   {{1,1,2},{2,3,3}}         the same with an enclosing pair of braces
//   {1122}  {12},{12}         a group without commas: one edge per character
//   112 233   or  12,12       bare tokens: one vertex each, one edge per character
// optionally followed by "; u=+-" (or "u={+ -}"), one sign per edge in order
// of first appearance. Signs default to +.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "surftopo/classification.hpp"
#include "surftopo/disjoint_sets.hpp"

namespace surftopo {

struct Dart {
    std::size_t vertex = 0;
    std::size_t position = 0;

    bool operator==(const Dart&) const = default;
};

class RotationSystem {
public:
    RotationSystem() = default;

    /// `signs` lists +1/-1 per edge in order of first appearance; empty means all +.
    RotationSystem(std::vector<std::vector<std::string>> rotations, const std::vector<int>& signs = {})
        : rotations_(std::move(rotations)) {
        std::map<std::string, std::size_t> count;
        for (const auto& rot : rotations_) {
            if (rot.empty()) throw ParseError("vertex with an empty rotation");
            for (const auto& e : rot) {
                if (!detail::valid_label(e)) throw ParseError("invalid edge label '" + e + "'");
                if (count[e]++ == 0) order_.push_back(e);
            }
        }
        if (rotations_.empty()) throw ParseError("rotation system has no vertices");
        for (const auto& [e, n] : count)
            if (n != 2) throw ParseError("edge '" + e + "' appears " + std::to_string(n) + " times (expected 2)");
        if (!signs.empty() && signs.size() != order_.size())
            throw ParseError("sign list has " + std::to_string(signs.size()) + " entries for " +
                             std::to_string(order_.size()) + " edges");
        for (std::size_t i = 0; i < order_.size(); ++i) {
            const int s = signs.empty() ? 1 : signs[i];
            if (s != 1 && s != -1) throw ParseError("sign must be + or -");
            signs_[order_[i]] = s;
        }
        for (std::size_t v = 0; v < rotations_.size(); ++v)
            for (std::size_t p = 0; p < rotations_[v].size(); ++p) darts_[rotations_[v][p]].push_back({v, p});
    }

    const std::vector<std::vector<std::string>>& rotations() const { return rotations_; }
    /// Edge labels in order of first appearance.
    const std::vector<std::string>& edges() const { return order_; }
    int sign(const std::string& edge) const { return signs_.at(edge); }
    std::size_t vertex_count() const { return rotations_.size(); }
    std::size_t edge_count() const { return order_.size(); }

    bool all_positive() const {
        return std::all_of(signs_.begin(), signs_.end(), [](const auto& kv) { return kv.second == 1; });
    }

    const std::string& edge_at(const Dart& d) const { return rotations_[d.vertex][d.position]; }

    /// The other end of the dart's edge.
    Dart other(const Dart& d) const {
        const auto& pair = darts_.at(edge_at(d));
        return pair[0] == d ? pair[1] : pair[0];
    }

    Dart succ(const Dart& d) const { return {d.vertex, (d.position + 1) % rotations_[d.vertex].size()}; }
    Dart pred(const Dart& d) const {
        const std::size_t n = rotations_[d.vertex].size();
        return {d.vertex, (d.position + n - 1) % n};
    }

    /// Endpoints of an edge (equal for a loop).
    std::pair<std::size_t, std::size_t> ends(const std::string& edge) const {
        const auto& pair = darts_.at(edge);
        return {pair[0].vertex, pair[1].vertex};
    }

private:
    std::vector<std::vector<std::string>> rotations_;
    std::vector<std::string> order_;
    std::map<std::string, int> signs_;
    std::map<std::string, std::vector<Dart>> darts_;
};

namespace detail {

inline std::vector<std::string> rotation_group(std::string_view inner) {
    std::vector<std::string> out;
    inner = trim(inner);
    if (inner.find(',') != std::string_view::npos) {
        std::size_t start = 0;
        while (true) {
            const auto comma = inner.find(',', start);
            const auto tok = trim(inner.substr(start, comma == std::string_view::npos ? inner.npos : comma - start));
            if (tok.empty()) throw ParseError("empty edge label in rotation");
            out.emplace_back(tok);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    } else if (split_ws(inner).size() > 1) {
        out = split_ws(inner);
    } else {
        for (char c : inner) out.emplace_back(1, c);
    }
    return out;
}

inline std::vector<int> parse_signs(std::string_view text) {
    std::vector<int> out;
    for (char c : text) {
        if (c == '+')
            out.push_back(1);
        else if (c == '-')
            out.push_back(-1);
        else if (!(std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '{' || c == '}'))
            throw ParseError(std::string("unexpected character '") + c + "' in sign list");
    }
    return out;
}

} // namespace detail

inline RotationSystem parse_rotation(std::string_view text) {
    text = detail::trim(text);
    std::vector<int> signs;
    if (const auto u = text.find("u="); u != std::string_view::npos) {
        signs = detail::parse_signs(text.substr(u + 2));
        text = text.substr(0, u);
        text = detail::trim(text);
        while (!text.empty() && (text.back() == ';' || text.back() == ',')) {
            text.remove_suffix(1);
            text = detail::trim(text);
        }
    }
    if (text.empty()) throw ParseError("empty rotation system");

    std::vector<std::vector<std::string>> rotations;
    if (text.front() == '{') {
        // Drop one enclosing pair of braces around nested groups.
        const auto inner = detail::trim(text.substr(1));
        if (!inner.empty() && inner.front() == '{') {
            if (text.back() != '}') throw ParseError("unbalanced braces in rotation system");
            text = detail::trim(text.substr(1, text.size() - 2));
        }
        std::size_t i = 0;
        while (i < text.size()) {
            const char c = text[i];
            if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
                ++i;
                continue;
            }
            if (c != '{') throw ParseError(std::string("unexpected '") + c + "' between rotation groups");
            const auto close = text.find('}', i);
            if (close == std::string_view::npos) throw ParseError("unbalanced braces in rotation system");
            const auto inner_group = text.substr(i + 1, close - i - 1);
            if (inner_group.find('{') != std::string_view::npos) throw ParseError("nested braces in rotation group");
            rotations.push_back(detail::rotation_group(inner_group));
            i = close + 1;
        }
    } else {
        std::string bare(text);
        std::replace(bare.begin(), bare.end(), ',', ' ');
        for (const auto& tok : detail::split_ws(bare)) {
            std::vector<std::string> rot;
            for (char c : tok) rot.emplace_back(1, c);
            rotations.push_back(std::move(rot));
        }
    }
    return RotationSystem(std::move(rotations), signs);
}

inline std::string to_text(const RotationSystem& rs) {
    std::string out;
    for (std::size_t v = 0; v < rs.vertex_count(); ++v) {
        if (v) out += ',';
        out += '{' + detail::join(rs.rotations()[v], ",") + '}';
    }
    out += " ; u=";
    for (const auto& e : rs.edges()) out += rs.sign(e) > 0 ? '+' : '-';
    return out;
}

/// One step of a face walk: leave `dart` along its edge, reading the
/// rotation backwards when `flipped`.
struct FaceStep {
    Dart dart;
    std::string edge;
    bool flipped = false;
};

using FaceWalk = std::vector<FaceStep>;

struct FaceTrace {
    std::size_t faces = 0;
    std::vector<FaceWalk> walks;
};

/// Face tracing over traversal flags (dart, side). Crossing an edge flips
/// the side when the edge sign is -, and the next dart is the successor in
/// the rotation on side + or the predecessor on side -. Every face shows up
/// as a pair of mirror orbits (its two directions); one walk per face is
/// reported, so the walk lengths add up to twice the edge count.
inline FaceTrace trace_faces(const RotationSystem& rs) {
    std::vector<Dart> darts;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> id;
    for (std::size_t v = 0; v < rs.vertex_count(); ++v)
        for (std::size_t p = 0; p < rs.rotations()[v].size(); ++p) {
            id[{v, p}] = darts.size();
            darts.push_back({v, p});
        }
    const std::size_t n = darts.size();
    auto state = [&](const Dart& d, bool flipped) { return 2 * id.at({d.vertex, d.position}) + (flipped ? 1 : 0); };

    auto step = [&](std::size_t s) {
        const Dart d = darts[s / 2];
        const bool flipped = s % 2 == 1;
        const Dart arrive = rs.other(d);
        const bool now = (rs.sign(rs.edge_at(d)) < 0) ? !flipped : flipped;
        return state(now ? rs.pred(arrive) : rs.succ(arrive), now);
    };
    // The same edge side read in the opposite direction.
    auto mirror = [&](std::size_t s) {
        const Dart d = darts[s / 2];
        const bool flipped = s % 2 == 1;
        const bool back = (rs.sign(rs.edge_at(d)) < 0) ? flipped : !flipped;
        return state(rs.other(d), back);
    };

    std::vector<int> orbit_of(2 * n, -1);
    int orbits = 0;
    FaceTrace out;
    for (std::size_t start = 0; start < 2 * n; ++start) {
        if (orbit_of[start] >= 0) continue;
        std::vector<std::size_t> orbit;
        for (std::size_t s = start; orbit_of[s] < 0; s = step(s)) {
            orbit_of[s] = orbits;
            orbit.push_back(s);
        }
        const int mine = orbits++;

        const std::size_t m0 = mirror(orbit.front());
        if (orbit_of[m0] == mine) throw std::logic_error("face orbit is its own mirror");
        std::size_t mirror_len = 0;
        for (std::size_t s = m0; orbit_of[s] < 0; s = step(s)) {
            orbit_of[s] = orbits;
            ++mirror_len;
        }
        ++orbits;
        if (mirror_len != orbit.size()) throw std::logic_error("mirror orbit has a different length");

        FaceWalk walk;
        for (auto s : orbit) {
            const Dart d = darts[s / 2];
            walk.push_back({d, rs.edge_at(d), s % 2 == 1});
        }
        out.walks.push_back(std::move(walk));
    }
    out.faces = out.walks.size();
    return out;
}

inline bool is_connected(const RotationSystem& rs) {
    DisjointSets g(rs.vertex_count());
    for (const auto& e : rs.edges()) {
        const auto [a, b] = rs.ends(e);
        g.merge(a, b);
    }
    return g.count_sets() == 1;
}

/// Orientable exactly when some set of vertex-rotation reversals makes every
/// sign +: a two-colouring of the vertices with sign(e) = colour(tail) *
/// colour(head), so no loop may be negative.
inline bool rs_orientable(const RotationSystem& rs) {
    if (!is_connected(rs)) throw Disconnected();
    DisjointSets side(2 * rs.vertex_count());
    for (const auto& e : rs.edges()) {
        const auto [a, b] = rs.ends(e);
        if (rs.sign(e) > 0) {
            side.merge(2 * a, 2 * b);
            side.merge(2 * a + 1, 2 * b + 1);
        } else {
            side.merge(2 * a, 2 * b + 1);
            side.merge(2 * a + 1, 2 * b);
        }
    }
    for (std::size_t v = 0; v < rs.vertex_count(); ++v)
        if (side.find(2 * v) == side.find(2 * v + 1)) return false;
    return true;
}

/// Closed surface of the embedding: chi = V - E + F from face tracing.
inline SurfaceType classify_embedding(const RotationSystem& rs) {
    if (!is_connected(rs)) throw Disconnected();
    const long chi = static_cast<long>(rs.vertex_count()) - static_cast<long>(rs.edge_count()) +
                     static_cast<long>(trace_faces(rs).faces);
    return surface_type(chi, rs_orientable(rs), 0);
}

} // namespace surftopo
