#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "surftopo/catalog.hpp"
#include "surftopo/connectivity.hpp"

using namespace surftopo;

namespace {

std::vector<std::set<std::string>> as_sets(const ComponentPartition& p) {
    std::vector<std::set<std::string>> out;
    for (const auto& c : p.components) out.emplace_back(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Components, WorkedExample) {
    const auto p = components(parse_simplicial("1 2\n3 5\n2 4\n1 4\n6"));
    ASSERT_EQ(p.components.size(), 3u);
    EXPECT_EQ(p.components[0], (std::vector<Label>{"1", "2", "4"}));
    EXPECT_EQ(p.components[1], (std::vector<Label>{"3", "5"}));
    EXPECT_EQ(p.components[2], (std::vector<Label>{"6"}));
    EXPECT_EQ(p.assignment.at("4"), 0u);
    EXPECT_EQ(p.assignment.at("6"), 2u);
}

TEST(Components, SphereAndTwoTetrahedra) {
    EXPECT_EQ(components(parse_cw2("F: 0 1 2\nF: 0 2 3\nF: 0 3 1\nF: 1 3 2")).components.size(), 1u);
    EXPECT_EQ(components(parse_simplicial("0 1 2 3\n4 5 6 7")).components.size(), 2u);
}

TEST(Components, EmptyInputThrows) { EXPECT_THROW(components(Skeleton1{}), EmptyComplex); }

TEST(IsConnected, Examples) {
    EXPECT_FALSE(is_connected(parse_simplicial("1 2\n3 5\n2 4\n1 4\n6")));
    EXPECT_TRUE(is_connected(std::get<CWComplex2>(catalog_get("rcc/torus").payload())));
    EXPECT_TRUE(is_connected(parse_simplicial("7")));
}

TEST(Components, InputOrderDoesNotMatter) {
    const auto a = components(parse_simplicial("6\n1 4\n2 4\n3 5\n1 2"));
    const auto b = components(parse_simplicial("1 2\n3 5\n2 4\n1 4\n6"));
    EXPECT_EQ(a.components, b.components);
}

TEST(Components, SplitKeepsCells) {
    const auto k = parse_cw2("F: 0 1 2\nF: 3 4 5\nV: 9\n");
    const auto parts = split_components(k, components(k));
    ASSERT_EQ(parts.size(), 3u);
    EXPECT_EQ(parts[0].faces().size(), 1u);
    EXPECT_EQ(parts[2].vertices().size(), 1u);
}

TEST(Components, AgreesWithUnionFindOnRandomGraphs) {
    std::mt19937 rng(11);
    for (int round = 0; round < 300; ++round) {
        Skeleton1 g;
        const int n = 1 + static_cast<int>(rng() % 12);
        for (int v = 0; v < n; ++v) g.vertices.insert("v" + std::to_string(v));
        std::vector<std::pair<std::string, std::string>> raw;
        const int m = static_cast<int>(rng() % 14);
        for (int i = 0; i < m; ++i) {
            const auto a = "v" + std::to_string(rng() % n), b = "v" + std::to_string(rng() % n);
            if (a == b) continue;
            g.edges.emplace(a, b);
            raw.emplace_back(a, b);
        }
        const auto p = components(g);
        EXPECT_EQ(as_sets(p), oracle::components(g.vertices, raw));
        std::size_t total = 0;
        for (const auto& c : p.components) total += c.size();
        EXPECT_EQ(total, g.vertices.size());
    }
}
