#include <gtest/gtest.h>

#include "oracles.hpp"
#include "surftopo/catalog.hpp"
#include "surftopo/rotation.hpp"

using namespace surftopo;

TEST(ParseRotation, BraceGroups) {
    const auto rs = parse_rotation("{1,1,2},{2,3,3}");
    ASSERT_EQ(rs.vertex_count(), 2u);
    EXPECT_EQ(rs.edge_count(), 3u);
    EXPECT_EQ(rs.ends("1"), (std::pair<std::size_t, std::size_t>{0, 0}));
    EXPECT_EQ(rs.ends("2"), (std::pair<std::size_t, std::size_t>{0, 1}));
    EXPECT_TRUE(rs.all_positive());
}

TEST(ParseRotation, SignsAndShapes) {
    const auto rs = parse_rotation("{1,1} ; u=-");
    EXPECT_EQ(rs.vertex_count(), 1u);
    EXPECT_EQ(rs.sign("1"), -1);
    EXPECT_EQ(parse_rotation("{{1,1,2},{2,3,3}}").rotations(), parse_rotation("{1,1,2},{2,3,3}").rotations());
    EXPECT_EQ(parse_rotation("112 233").rotations(), parse_rotation("{112},{233}").rotations());
    EXPECT_EQ(parse_rotation("12,12 ; u=-+").sign("2"), 1);
}

TEST(ParseRotation, Errors) {
    EXPECT_THROW(parse_rotation("{1,2},{1}"), ParseError);
    EXPECT_THROW(parse_rotation("1212 ; u=+"), ParseError);
    EXPECT_THROW(parse_rotation("{1,1"), ParseError);
    EXPECT_THROW(parse_rotation(""), ParseError);
}

TEST(ParseRotation, TextRoundTrip) {
    const auto rs = parse_rotation("12 12 ; u=-+");
    EXPECT_EQ(to_text(rs), "{1,2},{1,2} ; u=-+");
    EXPECT_EQ(to_text(parse_rotation(to_text(rs))), to_text(rs));
}

TEST(TraceFaces, Examples) {
    EXPECT_EQ(trace_faces(parse_rotation("{1,1,2},{2,3,3}")).faces, 3u);
    EXPECT_EQ(trace_faces(parse_rotation("1212")).faces, 1u);
    EXPECT_EQ(trace_faces(parse_rotation("1122")).faces, 3u);
}

TEST(TraceFaces, WalkLengthsCoverEveryEdgeSideOnce) {
    for (const auto& f : catalog()) {
        if (f.kind != FixtureKind::Rotation) continue;
        const auto rs = std::get<RotationSystem>(f.payload());
        const auto t = trace_faces(rs);
        std::size_t total = 0;
        for (const auto& w : t.walks) total += w.size();
        EXPECT_EQ(total, 2 * rs.edge_count()) << f.name;
        if (rs.all_positive()) {
            EXPECT_EQ(t.faces, oracle::orientable_faces(rs.rotations())) << f.name;
        }
    }
}

TEST(RsOrientable, Examples) {
    EXPECT_TRUE(rs_orientable(parse_rotation("{1,1,2},{2,3,3}")));
    EXPECT_FALSE(rs_orientable(parse_rotation("11 ; u=-")));
    EXPECT_FALSE(rs_orientable(parse_rotation("12 12 ; u=-+")));
    // A negative edge between two vertices can be switched away.
    EXPECT_TRUE(rs_orientable(parse_rotation("12 12 ; u=--")));
    EXPECT_THROW(rs_orientable(parse_rotation("11 22")), Disconnected);
}

TEST(ClassifyEmbedding, Examples) {
    EXPECT_EQ(surface_name(classify_embedding(parse_rotation("1212"))), "T2");
    EXPECT_EQ(surface_name(classify_embedding(parse_rotation("11 ; u=-"))), "RP2");
    EXPECT_EQ(surface_name(classify_embedding(parse_rotation("12341234"))), "F_2");
}

TEST(ClassifyEmbedding, SwitchingAVertexKeepsTheSurface) {
    // Reversing vertex 0 and flipping the signs of its non-loop edges.
    const auto a = classify_embedding(parse_rotation("{1,2,3},{1,3,2} ; u=+-+"));
    const auto b = classify_embedding(parse_rotation("{3,2,1},{1,3,2} ; u=-+-"));
    EXPECT_EQ(a, b);
}

TEST(ClassifyEmbedding, OrientableEulerIsEven) {
    for (const auto& f : catalog()) {
        if (f.kind != FixtureKind::Rotation) continue;
        const auto rs = std::get<RotationSystem>(f.payload());
        const auto t = classify_embedding(rs);
        if (rs_orientable(rs)) {
            EXPECT_EQ(t.euler % 2, 0) << f.name;
        }
    }
}
