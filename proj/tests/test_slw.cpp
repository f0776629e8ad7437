#include <gtest/gtest.h>

#include "surftopo/catalog.hpp"
#include "surftopo/slw.hpp"

using namespace surftopo;

namespace {

Word w(const std::string& text) { return parse_word(text); }

SLWGraph one_vertex(std::vector<std::string> loops, std::vector<WordList> lists) {
    SLWGraph s;
    s.vertices = {"A"};
    for (auto& l : loops) s.edges.push_back({l, "A", "A"});
    s.lists = std::move(lists);
    return s;
}

const SLWGraph kTorus = one_vertex({"a", "b"}, {{0, {w("a b a^-1 b^-1")}}});
const SLWGraph kTorusXY = one_vertex({"x", "y"}, {{0, {w("x y x^-1 y^-1")}}});
const SLWGraph kKlein = one_vertex({"x", "y"}, {{-2, {w("x x y y")}}});

} // namespace

TEST(Words, ParseAndPrint) {
    const auto x = w("a b^-1 c^+1");
    ASSERT_EQ(x.size(), 3u);
    EXPECT_EQ(x[1], (Letter{"b", -1}));
    EXPECT_EQ(to_string(x), "a b^-1 c");
    EXPECT_THROW(w("a^2"), ParseError);
}

TEST(Words, Equivalence) {
    EXPECT_TRUE(word_equivalent(w("a b^-1 c"), w("b^-1 c a")));
    EXPECT_FALSE(word_equivalent(w("a b"), w("b a^-1")));
    EXPECT_TRUE(word_equivalent(w("a b a^-1 b^-1"), w("a^-1 b^-1 a b")));
}

TEST(Words, Reverse) {
    EXPECT_EQ(word_reverse(w("a b c")), w("c^-1 b^-1 a^-1"));
    EXPECT_EQ(word_reverse(word_reverse(w("a b^-1 c"))), w("a b^-1 c"));
    EXPECT_EQ(word_reverse(w("a a")), w("a^-1 a^-1"));
    // Reversal maps equivalent words to equivalent words.
    EXPECT_TRUE(word_equivalent(word_reverse(w("a b^-1 c")), word_reverse(w("c a b^-1"))));
}

TEST(Lists, Equivalence) {
    const LetterMap id{{"a", "a"}, {"b", "b"}, {"c", "c"}};
    EXPECT_TRUE(list_equivalent({0, {w("a b")}}, {0, {w("a b")}}, id));
    EXPECT_TRUE(list_equivalent({0, {w("a b")}}, {0, {w("b^-1 a^-1")}}, id));
    // Each word matches on its own, but not with one common reading.
    EXPECT_FALSE(list_equivalent({0, {w("a b"), w("a^-1 c")}}, {0, {w("a b"), w("c^-1 a")}}, id));
    EXPECT_FALSE(list_equivalent({0, {w("a b")}}, {1, {w("a b")}}, id));
}

TEST(SlwEquivalent, ReflexiveAndWitness) {
    const auto self = slw_equivalent(kTorus, kTorus);
    ASSERT_TRUE(self);
    const auto m = slw_equivalent(kTorus, kTorusXY);
    ASSERT_TRUE(m);
    // Re-check the witness by substitution.
    EXPECT_TRUE(lists_equivalent(kTorus.lists, kTorusXY.lists, *m));
    const auto back = slw_equivalent(kTorusXY, kTorus);
    EXPECT_TRUE(back);
    EXPECT_FALSE(slw_equivalent(kTorus, kKlein));
}

TEST(SlwEquivalent, GivenMap) {
    EXPECT_TRUE(slw_equivalent(kTorus, kTorusXY, LetterMap{{"a", "x"}, {"b", "y"}}));
    EXPECT_TRUE(slw_equivalent(kTorus, kTorusXY, LetterMap{{"a", "y"}, {"b", "x"}}));
    EXPECT_FALSE(slw_equivalent(kTorus, kTorusXY, LetterMap{{"a", "x"}, {"b", "x"}}));
}

TEST(SlwEquivalent, SizeMismatch) {
    EXPECT_THROW(slw_equivalent(kTorus, one_vertex({"a"}, {{0, {w("a")}}, {0, {w("a^-1")}}})), SizeMismatch);
}

TEST(Extends, Examples) {
    const GraphMap id{{{"A", "A"}}, {{"a", "a"}, {"b", "b"}}};
    EXPECT_TRUE(extends_to_homeomorphism(kTorus, kTorus, id));
    const GraphMap to_xy{{{"A", "A"}}, {{"a", "x"}, {"b", "y"}}};
    EXPECT_FALSE(extends_to_homeomorphism(kTorus, kKlein, to_xy));

    const auto cyl1 = one_vertex({"a"}, {{0, {w("a")}}, {0, {w("a^-1")}}});
    const auto cyl2 = one_vertex({"z"}, {{0, {w("z^-1")}}, {0, {w("z")}}});
    EXPECT_TRUE(extends_to_homeomorphism(cyl1, cyl2, {{{"A", "A"}}, {{"a", "z"}}}));
    EXPECT_THROW(extends_to_homeomorphism(cyl1, cyl2, {{{"A", "B"}}, {{"a", "z"}}}), NotIsomorphism);
}

TEST(SurfaceCheck, Examples) {
    const auto t = slw_surface_check(kTorus);
    EXPECT_TRUE(t.edges_ok);
    EXPECT_TRUE(t.vertices_ok);

    const auto wedge = slw_surface_check(one_vertex({"a", "b"}, {{0, {w("a a^-1")}}, {0, {w("b b^-1")}}}));
    EXPECT_TRUE(wedge.edges_ok);
    EXPECT_FALSE(wedge.vertices_ok);
    EXPECT_GT(wedge.vertex_classes.at("A"), 1u);

    const auto triple = slw_surface_check(one_vertex({"a"}, {{0, {w("a")}}, {0, {w("a")}}, {0, {w("a")}}}));
    EXPECT_FALSE(triple.edges_ok);
}

TEST(SlwEuler, Examples) {
    EXPECT_EQ(slw_euler(one_vertex({"a"}, {{0, {w("a")}}, {0, {w("a^-1")}}})), 2);
    EXPECT_EQ(slw_euler(kTorus), 0);
    EXPECT_EQ(slw_euler(one_vertex({"a", "b"}, {{0, {w("a a b b")}}})), 0);
}

TEST(ClassifySlw, Examples) {
    EXPECT_EQ(surface_name(classify_slw(kTorus)), "T2");
    EXPECT_EQ(surface_name(classify_slw(one_vertex({"a", "b"}, {{0, {w("a a b b")}}}))), "Kl");
    EXPECT_EQ(surface_name(classify_slw(one_vertex({"a"}, {{0, {w("a")}}, {0, {w("a^-1")}}}))), "S2");
    EXPECT_EQ(surface_name(classify_slw(kKlein)), "N_4");
    EXPECT_THROW(classify_slw(one_vertex({"a", "b"}, {{0, {w("a a^-1")}}, {0, {w("b b^-1")}}})), NotSurface);
}

TEST(ClassifySlw, BoundaryEdges) {
    // A single disk bounded by a loop: edges used once are its rim.
    const auto disk = one_vertex({"a"}, {{0, {w("a")}}});
    EXPECT_THROW(classify_slw(disk), NotSurface);
    EXPECT_EQ(surface_name(classify_slw(disk, {true})), "F_{0,1}");
    const auto band = one_vertex({"a", "b"}, {{0, {w("a a b")}}});
    EXPECT_THROW(classify_slw(band), NotSurface);
    EXPECT_EQ(surface_name(classify_slw(band, {true})), "N_{1,1}");
}

TEST(SlwFromCw2, SphereTriangulation) {
    const auto s = slw_from_cw2(parse_cw2("F: 0 1 2\nF: 0 2 3\nF: 0 3 1\nF: 1 3 2"));
    EXPECT_EQ(s.vertices.size(), 4u);
    EXPECT_EQ(s.edges.size(), 6u);
    EXPECT_EQ(s.lists.size(), 4u);
    EXPECT_EQ(slw_euler(s), 2);
    EXPECT_EQ(surface_name(classify_slw(s)), "S2");
}

TEST(TextFormat, RoundTrip) {
    const auto s = parse_slw(catalog_get("slw/torus").source);
    EXPECT_EQ(to_text(parse_slw(to_text(s))), to_text(s));
    try {
        parse_slw("graph:\nv A\nbogus\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
    EXPECT_THROW(parse_slw("graph:\nv A\ne a A B\n"), ParseError);
}
