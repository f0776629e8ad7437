#pragma once

// Chord diagrams: 2n points on a circle matched by n chords, written as the
// sequence of chord labels met going round the circle. A chord diagram is
// the same thing as a one-vertex rotation system with all signs +.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "surftopo/rotation.hpp"

namespace surftopo {

inline constexpr int kDefaultChordBound = 8;

struct ChordCode {
    std::vector<int> points;

    std::size_t chords() const { return points.size() / 2; }

    auto operator<=>(const ChordCode&) const = default;
    bool operator==(const ChordCode&) const = default;
};

inline void validate(const ChordCode& code) {
    if (code.points.size() % 2 != 0) throw ParseError("chord code has odd length");
    std::map<int, int> count;
    for (int x : code.points) ++count[x];
    for (const auto& [label, n] : count)
        if (n != 2) throw ParseError("chord " + std::to_string(label) + " appears " + std::to_string(n) + " times");
}

/// "112233", "{1,1,2,2}" or "1,1,2,2" (comma lists allow labels above 9).
inline ChordCode parse_chord(std::string_view text) {
    std::string s(detail::trim(text));
    if (!s.empty() && s.front() == '{') {
        if (s.back() != '}') throw ParseError("unbalanced braces in chord code");
        s = s.substr(1, s.size() - 2);
    }
    ChordCode code;
    if (s.find(',') != std::string::npos) {
        std::replace(s.begin(), s.end(), ',', ' ');
        for (const auto& tok : detail::split_ws(s)) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size()) throw ParseError("chord label '" + tok + "' is not an integer");
            code.points.push_back(v);
        }
    } else {
        for (char c : s) {
            if (std::isspace(static_cast<unsigned char>(c))) continue;
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError(std::string("bad chord label '") + c + "'");
            code.points.push_back(c - '0');
        }
    }
    validate(code);
    return code;
}

inline std::string to_string(const ChordCode& code) {
    const bool compact = std::all_of(code.points.begin(), code.points.end(), [](int x) { return x >= 0 && x <= 9; });
    std::string out;
    for (std::size_t i = 0; i < code.points.size(); ++i) {
        if (!compact && i) out += ',';
        out += std::to_string(code.points[i]);
    }
    return out;
}

inline RotationSystem chord_to_rotation(const ChordCode& code) {
    validate(code);
    std::vector<std::string> rot;
    for (int x : code.points) rot.push_back(std::to_string(x));
    return RotationSystem({rot});
}

namespace detail {

/// Chords renumbered 1, 2, ... in order of first appearance.
inline std::vector<int> first_occurrence(const std::vector<int>& seq) {
    std::map<int, int> rename;
    std::vector<int> out;
    out.reserve(seq.size());
    for (int x : seq) {
        auto [it, fresh] = rename.emplace(x, static_cast<int>(rename.size()) + 1);
        out.push_back(it->second);
    }
    return out;
}

/// Reading of the circle starting at `start`, forwards or backwards.
inline std::vector<int> reading(const std::vector<int>& seq, std::size_t start, bool backwards) {
    const std::size_t n = seq.size();
    std::vector<int> out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = backwards ? seq[(start + n - k) % n] : seq[(start + k) % n];
    return out;
}

/// Compares the first-occurrence relabelling of a reading with `best`,
/// stopping at the first difference. Returns <0, 0, >0 like strcmp.
inline int compare_reading(const std::vector<int>& seq, std::size_t start, bool backwards,
                           const std::vector<int>& best, std::vector<int>& rename) {
    const std::size_t n = seq.size();
    std::fill(rename.begin(), rename.end(), 0);
    int next = 1;
    for (std::size_t k = 0; k < n; ++k) {
        const int x = backwards ? seq[(start + n - k) % n] : seq[(start + k) % n];
        if (!rename[x]) rename[x] = next++;
        if (rename[x] != best[k]) return rename[x] < best[k] ? -1 : 1;
    }
    return 0;
}

} // namespace detail

/// Lexicographically least first-occurrence code over all 2n starting
/// points and both directions of reading.
inline ChordCode chord_canonical(const ChordCode& code) {
    validate(code);
    const auto base = detail::first_occurrence(code.points);
    std::vector<int> best = base;
    for (std::size_t start = 0; start < base.size(); ++start)
        for (bool backwards : {false, true}) {
            auto candidate = detail::first_occurrence(detail::reading(base, start, backwards));
            if (candidate < best) best = std::move(candidate);
        }
    return {best};
}

inline bool chord_isomorphic(const ChordCode& a, const ChordCode& b) {
    return a.points.size() == b.points.size() && chord_canonical(a) == chord_canonical(b);
}

/// Fixed-point-free involution on 1..2n as its transpositions.
struct ChordPermutation {
    std::vector<std::pair<int, int>> transpositions;

    bool operator==(const ChordPermutation&) const = default;
};

inline void validate(const ChordPermutation& alpha) {
    const std::size_t n2 = 2 * alpha.transpositions.size();
    std::vector<int> seen(n2 + 1, 0);
    for (const auto& [a, b] : alpha.transpositions) {
        if (a == b) throw ParseError("transposition fixes point " + std::to_string(a));
        for (int x : {a, b}) {
            if (x < 1 || static_cast<std::size_t>(x) > n2)
                throw ParseError("point " + std::to_string(x) + " outside 1.." + std::to_string(n2));
            if (seen[x]++) throw ParseError("point " + std::to_string(x) + " is moved twice; not an involution");
        }
    }
}

/// "(1,6)(2,8)(3,7)(4,5)"
inline ChordPermutation parse_permutation(std::string_view text) {
    ChordPermutation alpha;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[i]))) {
            ++i;
            continue;
        }
        if (text[i] != '(') throw ParseError("expected '(' in permutation");
        const auto close = text.find(')', i);
        if (close == std::string_view::npos) throw ParseError("unbalanced parentheses in permutation");
        std::string body(text.substr(i + 1, close - i - 1));
        std::replace(body.begin(), body.end(), ',', ' ');
        const auto parts = detail::split_ws(body);
        if (parts.size() != 2) throw ParseError("each cycle must be a transposition");
        try {
            alpha.transpositions.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
        } catch (const std::exception&) {
            throw ParseError("non-numeric point in permutation");
        }
        i = close + 1;
    }
    validate(alpha);
    return alpha;
}

inline std::string to_string(const ChordPermutation& alpha) {
    std::string out;
    for (const auto& [a, b] : alpha.transpositions) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return out;
}

/// Point p carries the label of the chord through it; chords are numbered by
/// first appearance.
inline ChordCode permutation_to_code(const ChordPermutation& alpha) {
    validate(alpha);
    std::vector<int> seq(2 * alpha.transpositions.size());
    for (std::size_t j = 0; j < alpha.transpositions.size(); ++j) {
        seq[alpha.transpositions[j].first - 1] = static_cast<int>(j);
        seq[alpha.transpositions[j].second - 1] = static_cast<int>(j);
    }
    return {detail::first_occurrence(seq)};
}

/// Numbers the points 1..2n starting at code position `start` (0-based) and
/// returns the chords as transpositions sorted by their smaller point.
inline ChordPermutation code_to_permutation(const ChordCode& code, std::size_t start = 0) {
    validate(code);
    const std::size_t n = code.points.size();
    std::map<int, std::vector<int>> where;
    for (std::size_t k = 0; k < n; ++k) where[code.points[(start + k) % n]].push_back(static_cast<int>(k) + 1);
    ChordPermutation alpha;
    for (const auto& [_, pts] : where) alpha.transpositions.emplace_back(pts[0], pts[1]);
    std::sort(alpha.transpositions.begin(), alpha.transpositions.end());
    return alpha;
}

inline long chord_genus(const ChordCode& code) { return classify_embedding(chord_to_rotation(code)).genus; }

/// Every chord diagram with n chords up to rotation and reflection, as sorted
/// canonical codes, optionally only those of one embedding genus.
inline std::vector<ChordCode> enumerate_chords(int n, std::optional<long> genus_filter = std::nullopt,
                                               int bound = kDefaultChordBound) {
    if (n < 0) throw BoundExceeded("chord count must be non-negative");
    if (n > bound)
        throw BoundExceeded("n = " + std::to_string(n) + " exceeds the enumeration bound " + std::to_string(bound));
    const std::size_t len = 2 * static_cast<std::size_t>(n);
    std::vector<int> seq(len, 0);
    std::vector<int> rename(static_cast<std::size_t>(n) + 1);
    std::vector<ChordCode> out;

    // Matchings built in first-occurrence form: the first empty point opens
    // the next chord, closed at any later empty point.
    auto is_canonical = [&] {
        for (std::size_t start = 0; start < len; ++start)
            for (bool backwards : {false, true})
                if (detail::compare_reading(seq, start, backwards, seq, rename) < 0) return false;
        return true;
    };
    auto fill = [&](auto&& self, int label) -> void {
        const auto open = std::find(seq.begin(), seq.end(), 0);
        if (open == seq.end()) {
            if (!is_canonical()) return;
            ChordCode code{seq};
            const long g = code.points.empty() ? 0 : chord_genus(code);
            if (!genus_filter || g == *genus_filter) out.push_back(std::move(code));
            return;
        }
        *open = label;
        for (auto partner = open + 1; partner != seq.end(); ++partner) {
            if (*partner) continue;
            *partner = label;
            self(self, label + 1);
            *partner = 0;
        }
        *open = 0;
    };
    fill(fill, 1);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace surftopo
