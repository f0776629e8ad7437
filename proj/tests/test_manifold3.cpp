#include <gtest/gtest.h>

#include "oracles.hpp"
#include "surftopo/manifold3.hpp"

using namespace surftopo;

namespace {

const auto kBoundary4Simplex = parse_simplicial("1 2 3 4\n0 2 3 4\n0 1 3 4\n0 1 2 4\n0 1 2 3");

std::vector<oracle::Tet> tets(const SimplicialComplex& k) {
    std::vector<oracle::Tet> out;
    for (const auto& t : k.of_dimension(3)) out.push_back(t.vertices());
    return out;
}

} // namespace

TEST(FaceCheck3, Boundary4SimplexAllInterior) {
    const auto c = face_check3(kBoundary4Simplex);
    ASSERT_TRUE(c.ok());
    ASSERT_EQ(c.triangles.size(), 10u);
    for (const auto& t : c.triangles) EXPECT_EQ(t.status, TriangleKind::Interior);
}

TEST(FaceCheck3, TetrahedronAllBoundary) {
    const auto c = face_check3(parse_simplicial("0 1 2 3"));
    ASSERT_EQ(c.triangles.size(), 4u);
    for (const auto& t : c.triangles) EXPECT_EQ(t.status, TriangleKind::Boundary);
}

TEST(FaceCheck3, ThreeTetrahedraOnATriangle) {
    const auto c = face_check3(parse_simplicial("0 1 2 3\n0 1 2 4\n0 1 2 5"));
    ASSERT_TRUE(c.failure);
    EXPECT_EQ(*c.failure->triangle, (Simplex{"0", "1", "2"}));
    EXPECT_EQ(c.failure->count, 3u);
}

TEST(VertexLink3, Examples) {
    EXPECT_EQ(vertex_link3(kBoundary4Simplex, "0"),
              close({Simplex{"1", "2", "3"}, Simplex{"1", "2", "4"}, Simplex{"1", "3", "4"}, Simplex{"2", "3", "4"}}));
    EXPECT_EQ(vertex_link3(parse_simplicial("0 1 2 3"), "0"), close({Simplex{"1", "2", "3"}}));
    const auto wedge = vertex_link3(parse_simplicial("0 1 2 3\n0 1 4 5"), "0");
    EXPECT_EQ(wedge, close({Simplex{"1", "2", "3"}, Simplex{"1", "4", "5"}}));
    EXPECT_FALSE(is_surface(wedge).surface);
}

TEST(VertexLink3, LinksMatchEnumerationOracle) {
    for (const auto& v : kBoundary4Simplex.vertices()) {
        const auto triangles = oracle::link_triangles(tets(kBoundary4Simplex), v);
        EXPECT_TRUE(oracle::is_sphere_link(triangles)) << v;
        EXPECT_TRUE(is_sphere(vertex_link3(kBoundary4Simplex, v))) << v;
    }
}

TEST(Is3Manifold, Boundary4SimplexClosed) {
    const auto r = is_3manifold(kBoundary4Simplex);
    EXPECT_TRUE(r.manifold);
    EXPECT_TRUE(r.closed);
    EXPECT_TRUE(r.boundary.empty());
    EXPECT_EQ(euler_characteristic(kBoundary4Simplex), 0);
}

TEST(Is3Manifold, BallHasSphereBoundary) {
    const auto r = is_3manifold(parse_simplicial("0 1 2 3"));
    EXPECT_TRUE(r.manifold);
    EXPECT_FALSE(r.closed);
    ASSERT_EQ(r.boundary.size(), 1u);
    EXPECT_EQ(surface_name(r.boundary[0]), "S2");
    for (const auto& l : r.links) EXPECT_TRUE(l.boundary_vertex);
}

TEST(Is3Manifold, EdgeWedgeFailsAtVertex) {
    const auto r = is_3manifold(parse_simplicial("0 1 2 3\n0 1 4 5"));
    EXPECT_FALSE(r.manifold);
    ASSERT_TRUE(r.failure);
    EXPECT_EQ(*r.failure->vertex, "0");
}

TEST(Is3Manifold, TwoBallsGluedAlongATriangle) {
    const auto r = is_3manifold(parse_simplicial("0 1 2 3\n1 2 3 4"));
    EXPECT_TRUE(r.manifold);
    ASSERT_EQ(r.boundary.size(), 1u);
    EXPECT_EQ(surface_name(r.boundary[0]), "S2");
}

TEST(Is3Manifold, RejectsLowerDimensionAndMixedInput) {
    EXPECT_THROW(is_3manifold(parse_simplicial("0 1 2")), UnsupportedDimension);
    const auto r = is_3manifold(parse_simplicial("0 1 2 3\n4 5"));
    EXPECT_FALSE(r.manifold);
}

TEST(Is3Manifold, BoundaryVertexIffOnBoundaryTriangle) {
    const auto k = parse_simplicial("0 1 2 3\n1 2 3 4\n0 1 2 5");
    const auto r = is_3manifold(k);
    ASSERT_TRUE(r.manifold);
    for (const auto& l : r.links) EXPECT_TRUE(l.boundary_vertex);
}
