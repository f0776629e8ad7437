#pragma once

// SLW-graphs: a directed multigraph together with a set of lists of words.
// Each list describes one 2-stratum: its genus number n (negative for a
// non-orientable stratum) and the words read along its boundary circles,
// one letter per graph edge crossed, with exponent -1 when the edge runs
// against the direction of reading.
//
// Text format:
//
//   graph:
//   v A
//   e a A A          # edge label, tail, head
//   list n=0:
//   a b a^-1 b^-1    # one word per line
//
// Also here: list/set equivalence, the test whether a graph isomorphism
// extends to a homeomorphism of the stratified sets, the surface conditions
// and the resulting classification.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surftopo/classification.hpp"
#include "surftopo/complex.hpp"
#include "surftopo/disjoint_sets.hpp"

namespace surftopo {

struct Letter {
    std::string edge;
    int exponent = 1;

    bool operator==(const Letter&) const = default;
    auto operator<=>(const Letter&) const = default;
};

using Word = std::vector<Letter>;
using LetterMap = std::map<std::string, std::string>;

struct WordList {
    long n = 0;
    std::vector<Word> words;
};

struct SlwEdge {
    std::string label;
    std::string tail;
    std::string head;

    bool is_loop() const { return tail == head; }
};

struct SLWGraph {
    std::vector<std::string> vertices;
    std::vector<SlwEdge> edges;
    std::vector<WordList> lists;

    std::optional<std::size_t> edge_index(const std::string& label) const {
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].label == label) return i;
        return std::nullopt;
    }
};

inline std::string to_string(const Letter& l) { return l.exponent == 1 ? l.edge : l.edge + "^-1"; }

inline std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += to_string(w[i]);
    }
    return out;
}

/// Parses "a b^-1 c" into letters; `^1` and `^+1` are accepted as well.
inline Word parse_word(std::string_view text) {
    Word w;
    for (const auto& tok : detail::split_ws(text)) {
        const auto caret = tok.find('^');
        if (caret == std::string::npos) {
            w.push_back({tok, 1});
            continue;
        }
        const std::string exp = tok.substr(caret + 1);
        const std::string name = tok.substr(0, caret);
        if (name.empty()) throw ParseError("letter without an edge name: '" + tok + "'");
        if (exp == "-1")
            w.push_back({name, -1});
        else if (exp == "1" || exp == "+1")
            w.push_back({name, 1});
        else
            throw ParseError("exponent must be 1 or -1: '" + tok + "'");
    }
    if (w.empty()) throw ParseError("empty word");
    return w;
}

// ---------------------------------------------------------------------------
// Word algebra

/// True when `b` is a cyclic shift of `a`.
inline bool word_equivalent(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    const std::size_t n = a.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool same = true;
        for (std::size_t i = 0; i < n && same; ++i) same = a[(i + shift) % n] == b[i];
        if (same) return true;
    }
    return n == 0;
}

/// Letters in reverse order with exponents negated.
inline Word word_reverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (auto& l : out) l.exponent = -l.exponent;
    return out;
}

inline Word substitute(const Word& w, const LetterMap& map) {
    Word out = w;
    for (auto& l : out) l.edge = map.at(l.edge);
    return out;
}

namespace detail {

enum class Mode { Equivalent, Reverse, Either };

inline bool related(const Word& a, const Word& b, Mode mode) {
    switch (mode) {
    case Mode::Equivalent: return word_equivalent(a, b);
    case Mode::Reverse: return word_equivalent(word_reverse(a), b);
    default: return word_equivalent(a, b) || word_equivalent(word_reverse(a), b);
    }
}

/// Backtracking search for a bijection `from[i] -> to[pick[i]]` with every
/// pair satisfying `fits(i, j)`.
inline bool find_matching(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& fits,
                          std::vector<std::size_t>* picked = nullptr) {
    std::vector<std::size_t> pick(count);
    std::vector<bool> taken(count, false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
        if (i == count) return true;
        for (std::size_t j = 0; j < count; ++j) {
            if (taken[j] || !fits(i, j)) continue;
            taken[j] = true;
            pick[i] = j;
            if (place(i + 1)) return true;
            taken[j] = false;
        }
        return false;
    };
    if (!place(0)) return false;
    if (picked) *picked = pick;
    return true;
}

} // namespace detail

/// Same genus number and a pairing of words where each substituted word of
/// `a` is equivalent or reverse to its partner. In an orientable stratum
/// (n >= 0) the pairs must be all equivalent or all reverse.
inline bool list_equivalent(const WordList& a, const WordList& b, const LetterMap& letter_map) {
    if (a.n != b.n || a.words.size() != b.words.size()) return false;
    std::vector<Word> mapped;
    for (const auto& w : a.words) {
        for (const auto& l : w)
            if (!letter_map.count(l.edge)) return false;
        mapped.push_back(substitute(w, letter_map));
    }
    auto try_mode = [&](detail::Mode mode) {
        return detail::find_matching(mapped.size(), [&](std::size_t i, std::size_t j) {
            return detail::related(mapped[i], b.words[j], mode);
        });
    };
    if (a.n < 0) return try_mode(detail::Mode::Either);
    return try_mode(detail::Mode::Equivalent) || try_mode(detail::Mode::Reverse);
}

/// Pairing of the lists of `a` with those of `b` under `letter_map`.
inline bool lists_equivalent(const std::vector<WordList>& a, const std::vector<WordList>& b,
                             const LetterMap& letter_map) {
    if (a.size() != b.size()) return false;
    return detail::find_matching(a.size(), [&](std::size_t i, std::size_t j) {
        return list_equivalent(a[i], b[j], letter_map);
    });
}

// ---------------------------------------------------------------------------
// Graph structure

inline void validate(const SLWGraph& s) {
    std::set<std::string> vs(s.vertices.begin(), s.vertices.end());
    if (vs.size() != s.vertices.size()) throw ParseError("duplicate vertex in SLW graph");
    std::set<std::string> labels;
    for (const auto& e : s.edges) {
        if (!labels.insert(e.label).second) throw ParseError("duplicate edge label '" + e.label + "'");
        if (!vs.count(e.tail) || !vs.count(e.head))
            throw ParseError("edge '" + e.label + "' has an undeclared endpoint");
    }
    for (const auto& list : s.lists) {
        for (const auto& w : list.words) {
            if (w.empty()) throw ParseError("empty word");
            for (std::size_t i = 0; i < w.size(); ++i) {
                const auto x = s.edge_index(w[i].edge);
                if (!x) throw ParseError("letter '" + w[i].edge + "' names no edge");
                if (w[i].exponent != 1 && w[i].exponent != -1) throw ParseError("exponent must be +1 or -1");
                const auto& next = w[(i + 1) % w.size()];
                const auto y = s.edge_index(next.edge);
                if (!y) throw ParseError("letter '" + next.edge + "' names no edge");
                const auto& ex = s.edges[*x];
                const auto& ey = s.edges[*y];
                const auto& arrive = w[i].exponent == 1 ? ex.head : ex.tail;
                const auto& leave = next.exponent == 1 ? ey.tail : ey.head;
                if (arrive != leave) throw ParseError("word '" + to_string(w) + "' is not a closed walk in the graph");
            }
        }
    }
}

/// Vertex and edge bijections between two SLW-graphs.
struct GraphMap {
    std::map<std::string, std::string> vertices;
    LetterMap edges;
};

namespace detail {

inline bool is_bijection(const std::map<std::string, std::string>& m, const std::vector<std::string>& domain,
                         const std::vector<std::string>& codomain) {
    if (m.size() != domain.size() || domain.size() != codomain.size()) return false;
    std::set<std::string> image;
    for (const auto& x : domain) {
        auto it = m.find(x);
        if (it == m.end()) return false;
        image.insert(it->second);
    }
    return image == std::set<std::string>(codomain.begin(), codomain.end());
}

inline std::vector<std::string> edge_labels(const SLWGraph& s) {
    std::vector<std::string> out;
    for (const auto& e : s.edges) out.push_back(e.label);
    return out;
}

/// Extends `letter_map` to a vertex bijection if it respects tails and heads.
inline std::optional<std::map<std::string, std::string>> induced_vertex_map(const SLWGraph& a, const SLWGraph& b,
                                                                           const LetterMap& letter_map) {
    if (a.vertices.size() != b.vertices.size()) return std::nullopt;
    std::map<std::string, std::string> fwd, back;
    auto bind = [&](const std::string& x, const std::string& y) {
        auto f = fwd.emplace(x, y);
        auto r = back.emplace(y, x);
        return f.first->second == y && r.first->second == x;
    };
    for (const auto& e : a.edges) {
        const auto it = letter_map.find(e.label);
        if (it == letter_map.end()) return std::nullopt;
        const auto j = b.edge_index(it->second);
        if (!j) return std::nullopt;
        if (!bind(e.tail, b.edges[*j].tail) || !bind(e.head, b.edges[*j].head)) return std::nullopt;
    }
    // Isolated vertices pair up in order.
    std::vector<std::string> free_b;
    for (const auto& v : b.vertices)
        if (!back.count(v)) free_b.push_back(v);
    std::size_t k = 0;
    for (const auto& v : a.vertices)
        if (!fwd.count(v)) {
            if (k >= free_b.size()) return std::nullopt;
            bind(v, free_b[k++]);
        }
    return fwd;
}

inline std::map<std::string, std::size_t> letter_counts(const SLWGraph& s) {
    std::map<std::string, std::size_t> out;
    for (const auto& e : s.edges) out[e.label] = 0;
    for (const auto& l : s.lists)
        for (const auto& w : l.words)
            for (const auto& x : w) ++out[x.edge];
    return out;
}

/// Sorted (n, sorted word lengths) per list; equal signatures are necessary
/// for equivalence.
inline std::vector<std::pair<long, std::vector<std::size_t>>> list_signature(const SLWGraph& s) {
    std::vector<std::pair<long, std::vector<std::size_t>>> out;
    for (const auto& l : s.lists) {
        std::vector<std::size_t> lens;
        for (const auto& w : l.words) lens.push_back(w.size());
        std::sort(lens.begin(), lens.end());
        out.emplace_back(l.n, std::move(lens));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Decides whether `a` and `b` are isomorphic SLW-graphs. With a letter map
/// only that map is checked; without one, edge bijections compatible with a
/// directed-graph isomorphism are searched. Returns the witness letter map.
inline std::optional<LetterMap> slw_equivalent(const SLWGraph& a, const SLWGraph& b,
                                               const std::optional<LetterMap>& letter_map = std::nullopt) {
    if (a.edges.size() != b.edges.size())
        throw SizeMismatch("edge counts differ: " + std::to_string(a.edges.size()) + " vs " +
                           std::to_string(b.edges.size()));
    if (a.lists.size() != b.lists.size())
        throw SizeMismatch("list counts differ: " + std::to_string(a.lists.size()) + " vs " +
                           std::to_string(b.lists.size()));

    const auto la = detail::edge_labels(a);
    const auto lb = detail::edge_labels(b);
    auto accept = [&](const LetterMap& m) {
        return detail::induced_vertex_map(a, b, m).has_value() && lists_equivalent(a.lists, b.lists, m);
    };

    if (letter_map) {
        if (!detail::is_bijection(*letter_map, la, lb)) return std::nullopt;
        return accept(*letter_map) ? letter_map : std::nullopt;
    }

    if (a.vertices.size() != b.vertices.size()) return std::nullopt;
    if (detail::list_signature(a) != detail::list_signature(b)) return std::nullopt;

    const auto count_a = detail::letter_counts(a);
    const auto count_b = detail::letter_counts(b);
    LetterMap current;
    std::map<std::string, std::string> vfwd, vback;
    std::vector<bool> used(b.edges.size(), false);
    std::optional<LetterMap> found;

    std::function<void(std::size_t)> assign = [&](std::size_t i) {
        if (found) return;
        if (i == a.edges.size()) {
            if (accept(current)) found = current;
            return;
        }
        const auto& e = a.edges[i];
        for (std::size_t j = 0; j < b.edges.size() && !found; ++j) {
            const auto& f = b.edges[j];
            if (used[j] || e.is_loop() != f.is_loop() || count_a.at(e.label) != count_b.at(f.label)) continue;
            // Tentatively bind endpoints, remembering what to undo.
            std::vector<std::pair<std::string, std::string>> added;
            bool ok = true;
            for (const auto& [x, y] : {std::pair{e.tail, f.tail}, std::pair{e.head, f.head}}) {
                auto fi = vfwd.find(x);
                auto bi = vback.find(y);
                if (fi == vfwd.end() && bi == vback.end()) {
                    vfwd[x] = y;
                    vback[y] = x;
                    added.emplace_back(x, y);
                } else if (fi == vfwd.end() || bi == vback.end() || fi->second != y) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                used[j] = true;
                current[e.label] = f.label;
                assign(i + 1);
                current.erase(e.label);
                used[j] = false;
            }
            for (const auto& [x, y] : added) {
                vfwd.erase(x);
                vback.erase(y);
            }
        }
    };
    assign(0);
    return found;
}

/// Whether the graph isomorphism `g` extends to a homeomorphism of the
/// stratified sets: substituting edge labels through `g` must turn the lists
/// of `k` into a set equivalent to the lists of `k2`.
inline bool extends_to_homeomorphism(const SLWGraph& k, const SLWGraph& k2, const GraphMap& g) {
    if (!detail::is_bijection(g.vertices, k.vertices, k2.vertices))
        throw NotIsomorphism("vertex map is not a bijection");
    if (!detail::is_bijection(g.edges, detail::edge_labels(k), detail::edge_labels(k2)))
        throw NotIsomorphism("edge map is not a bijection");
    for (const auto& e : k.edges) {
        const auto& f = k2.edges[*k2.edge_index(g.edges.at(e.label))];
        if (g.vertices.at(e.tail) != f.tail || g.vertices.at(e.head) != f.head)
            throw NotIsomorphism("edge '" + e.label + "' is not mapped tail-to-tail and head-to-head");
    }
    return lists_equivalent(k.lists, k2.lists, g.edges);
}

// ---------------------------------------------------------------------------
// Surface conditions and classification

struct SlwSurfaceCheck {
    /// Every edge occurs exactly twice across all words.
    bool edges_ok = false;
    /// At every vertex the corners join all incident edge-ends into one class.
    bool vertices_ok = false;
    std::map<std::string, std::size_t> occurrences;
    std::map<std::string, std::size_t> vertex_classes;
};

/// Corners: consecutive letters x, y of a word (cyclically) meet at a vertex
/// and join the edge-end where x arrives with the edge-end where y leaves.
/// Edge-ends are numbered 2i (tail of edge i) and 2i+1 (head of edge i).
inline SlwSurfaceCheck slw_surface_check(const SLWGraph& s) {
    validate(s);
    SlwSurfaceCheck out;
    out.occurrences = detail::letter_counts(s);
    out.edges_ok = std::all_of(out.occurrences.begin(), out.occurrences.end(),
                               [](const auto& kv) { return kv.second == 2; });

    DisjointSets ends(2 * s.edges.size());
    for (const auto& list : s.lists)
        for (const auto& w : list.words)
            for (std::size_t i = 0; i < w.size(); ++i) {
                const std::size_t x = *s.edge_index(w[i].edge);
                const auto& next = w[(i + 1) % w.size()];
                const std::size_t y = *s.edge_index(next.edge);
                const std::size_t arrive = 2 * x + (w[i].exponent == 1 ? 1 : 0);
                const std::size_t leave = 2 * y + (next.exponent == 1 ? 0 : 1);
                ends.merge(arrive, leave);
            }

    out.vertices_ok = true;
    for (const auto& v : s.vertices) {
        std::set<std::size_t> classes;
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            if (s.edges[i].tail == v) classes.insert(ends.find(2 * i));
            if (s.edges[i].head == v) classes.insert(ends.find(2 * i + 1));
        }
        out.vertex_classes[v] = classes.size();
        if (classes.size() != 1) out.vertices_ok = false;
    }
    return out;
}

/// chi(graph) plus chi of every stratum, a stratum with b words being a
/// surface of genus |n| with b boundary circles.
inline long slw_euler(const SLWGraph& s) {
    long chi = static_cast<long>(s.vertices.size()) - static_cast<long>(s.edges.size());
    for (const auto& l : s.lists) {
        const long b = static_cast<long>(l.words.size());
        chi += l.n >= 0 ? 2 - 2 * l.n - b : 2 + l.n - b;
    }
    return chi;
}

struct SlwOptions {
    /// Treat edges that occur once as free boundary.
    bool allow_boundary = false;
};

/// Orientable when no stratum is non-orientable and the strata can be
/// oriented (each list read forwards or backwards as a whole) so that every
/// edge shared by two words is crossed once with each exponent.
inline bool slw_orientable(const SLWGraph& s) {
    for (const auto& l : s.lists)
        if (l.n < 0) return false;
    // Parity union-find over lists: node 2i = list i forwards, 2i+1 = backwards.
    DisjointSets side(2 * s.lists.size());
    std::map<std::string, std::vector<std::pair<std::size_t, int>>> seen;
    for (std::size_t i = 0; i < s.lists.size(); ++i)
        for (const auto& w : s.lists[i].words)
            for (const auto& x : w) seen[x.edge].emplace_back(i, x.exponent);
    for (const auto& [_, occ] : seen) {
        if (occ.size() != 2) continue;
        const auto [i, p] = occ[0];
        const auto [j, q] = occ[1];
        // Need sign_i * p == -(sign_j * q), i.e. sign_i * sign_j == -p*q.
        if (-p * q == 1) {
            side.merge(2 * i, 2 * j);
            side.merge(2 * i + 1, 2 * j + 1);
        } else {
            side.merge(2 * i, 2 * j + 1);
            side.merge(2 * i + 1, 2 * j);
        }
    }
    for (std::size_t i = 0; i < s.lists.size(); ++i)
        if (side.find(2 * i) == side.find(2 * i + 1)) return false;
    return true;
}

inline SurfaceType classify_slw(const SLWGraph& s, const SlwOptions& options = {}) {
    const auto check = slw_surface_check(s);
    for (const auto& [label, n] : check.occurrences)
        if (n != 2 && !(options.allow_boundary && n == 1))
            throw NotSurface(0, "edge '" + label + "' occurs " + std::to_string(n) + " times");
    if (!check.vertices_ok) throw NotSurface(0, "a vertex neighbourhood is a bouquet of planes");

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < s.vertices.size(); ++i) index[s.vertices[i]] = i;
    DisjointSets graph(s.vertices.size());
    for (const auto& e : s.edges) graph.merge(index[e.tail], index[e.head]);
    if (graph.count_sets() != 1) throw NotSurface(0, "graph is disconnected");
    for (const auto& l : s.lists)
        if (l.words.empty()) throw NotSurface(0, "a stratum is not attached to the graph");

    DisjointSets rim(s.vertices.size());
    std::set<std::size_t> on_rim;
    for (const auto& e : s.edges) {
        if (check.occurrences.at(e.label) != 1) continue;
        rim.merge(index[e.tail], index[e.head]);
        on_rim.insert(index[e.tail]);
        on_rim.insert(index[e.head]);
    }
    std::set<std::size_t> rim_roots;
    for (auto v : on_rim) rim_roots.insert(rim.find(v));

    return surface_type(slw_euler(s), slw_orientable(s), static_cast<long>(rim_roots.size()));
}

/// Each 2-cell becomes a disk stratum {0, boundary word}. Edge {a,b} with
/// a < b is labelled "a~b" and directed from a to b.
inline SLWGraph slw_from_cw2(const CWComplex2& complex) {
    SLWGraph s;
    s.vertices.assign(complex.vertices().begin(), complex.vertices().end());
    for (const auto& e : complex.edges()) s.edges.push_back({e.a + "~" + e.b, e.a, e.b});
    for (const auto& f : complex.faces()) {
        Word w;
        for (std::size_t i = 0; i < f.size(); ++i) {
            const Edge e(f[i], f[(i + 1) % f.size()]);
            w.push_back({e.a + "~" + e.b, f[i] == e.a ? 1 : -1});
        }
        s.lists.push_back({0, {std::move(w)}});
    }
    return s;
}

// ---------------------------------------------------------------------------
// Text format

inline SLWGraph parse_slw(std::string_view text) {
    SLWGraph s;
    enum class Section { None, Graph, List } section = Section::None;
    for (const auto& [lineno, line] : detail::content_lines(text)) {
        try {
            if (line == "graph:") {
                section = Section::Graph;
                continue;
            }
            if (line.substr(0, 5) == "list ") {
                auto rest = detail::trim(line.substr(5));
                if (rest.size() < 4 || rest.substr(0, 2) != "n=" || rest.back() != ':')
                    throw ParseError("expected 'list n=<int>:'");
                const std::string num(detail::trim(rest.substr(2, rest.size() - 3)));
                std::size_t used = 0;
                long n = 0;
                try {
                    n = std::stol(num, &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (num.empty() || used != num.size()) throw ParseError("bad genus number '" + num + "'");
                s.lists.push_back({n, {}});
                section = Section::List;
                continue;
            }
            if (section == Section::Graph) {
                const auto items = detail::split_ws(line);
                if (items.size() == 2 && items[0] == "v")
                    s.vertices.push_back(items[1]);
                else if (items.size() == 4 && items[0] == "e")
                    s.edges.push_back({items[1], items[2], items[3]});
                else
                    throw ParseError("expected 'v <name>' or 'e <label> <tail> <head>'");
            } else if (section == Section::List) {
                s.lists.back().words.push_back(parse_word(line));
            } else {
                throw ParseError("content before 'graph:' or 'list n=..:'");
            }
        } catch (const ParseError& e) {
            if (e.line()) throw;
            throw ParseError(e.what(), lineno);
        }
    }
    validate(s);
    return s;
}

inline std::string to_text(const SLWGraph& s) {
    std::string out = "graph:\n";
    for (const auto& v : s.vertices) out += "v " + v + "\n";
    for (const auto& e : s.edges) out += "e " + e.label + " " + e.tail + " " + e.head + "\n";
    for (const auto& l : s.lists) {
        out += "list n=" + std::to_string(l.n) + ":\n";
        for (const auto& w : l.words) out += to_string(w) + "\n";
    }
    return out;
}

} // namespace surftopo
