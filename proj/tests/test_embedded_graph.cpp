#include <doctest.h>

#include "zigzag/embedded_graph.hpp"
#include "zigzag/generators.hpp"

using namespace zigzag;

namespace {

EmbeddedGraph k4() {
    return EmbeddedGraph::from_faces({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
}

bool has_violation(const ValidationReport& r, const std::string& rule) {
    for (const auto& v : r.violations)
        if (v.rule == rule) return true;
    return false;
}

}  // namespace

TEST_CASE("token order is numeric-aware") {
    CHECK(token_less("2", "10"));
    CHECK(token_less("9", "10"));
    CHECK(!token_less("10", "2"));
    CHECK(token_less("1", "a"));  // numbers before names
    CHECK(token_less("a", "b"));
    CHECK(token_less("a", "a'"));
    CHECK(token_less("01", "1"));  // equal value, lexicographic tiebreak
}

TEST_CASE("building K4 derives vertices, edges and adjacency") {
    const auto g = k4();
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 6);
    CHECK(g.face_count() == 4);
    CHECK(euler_characteristic(g) == 2);
    CHECK(g.is_triangulation());
    for (int v = 0; v < 4; ++v) {
        CHECK(g.edges_at(v).size() == 3);
        CHECK(g.faces_at(v).size() == 3);
    }
    CHECK(g.edge_index(g.vertex_index("1"), g.vertex_index("2")) >= 0);
    CHECK(g.vertex_index("5") == -1);
}

TEST_CASE("building the 3-bipyramid face list") {
    const auto g = EmbeddedGraph::from_faces({{"a", "1", "2"},
                                              {"a", "2", "3"},
                                              {"a", "3", "1"},
                                              {"b", "1", "2"},
                                              {"b", "2", "3"},
                                              {"b", "3", "1"}});
    CHECK(g.vertex_count() == 5);
    CHECK(g.edge_count() == 9);
    CHECK(g.face_count() == 6);
    CHECK(validate_embedding(g).ok);
}

TEST_CASE("build rejects malformed faces") {
    CHECK_THROWS_AS(EmbeddedGraph::from_faces({{"1", "1", "2"}}), build_error);
    CHECK_THROWS_AS(EmbeddedGraph::from_faces({{"1", "2"}}), build_error);
    CHECK_THROWS_AS(EmbeddedGraph::from_faces({}), build_error);
}

TEST_CASE("face identity ignores rotation and reflection") {
    const auto g = k4();
    CHECK(g.find_face({"1", "2", "3"}) == g.find_face({"2", "3", "1"}));
    CHECK(g.find_face({"1", "2", "3"}) == g.find_face({"3", "2", "1"}));
    CHECK(g.find_face({"1", "2", "3"}) >= 0);
    CHECK(g.find_face_by_vertex_set({"3", "1", "2"}) == g.find_face({"1", "2", "3"}));
}

TEST_CASE("validation accepts the sphere examples") {
    CHECK(validate_embedding(k4()).ok);
    CHECK(validate_embedding(cube()).ok);
    CHECK(validate_embedding(bipyramid(7)).ok);
}

TEST_CASE("an edge in three faces is flagged") {
    const auto g = EmbeddedGraph::from_faces({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "2", "5"}});
    const auto rep = validate_embedding(g);
    CHECK(!rep.ok);
    CHECK(has_violation(rep, "edge-face-count"));
}

TEST_CASE("duplicate faces are flagged as an intersection violation") {
    const auto g = EmbeddedGraph::from_faces({{"1", "2", "3"}, {"1", "2", "3"}});
    const auto rep = validate_embedding(g);
    CHECK(!rep.ok);
    CHECK(has_violation(rep, "face-intersection"));
}

TEST_CASE("two spheres pinched at a vertex are not a surface") {
    // two tetrahedra sharing vertex 1: every edge is in two faces and every
    // face pair meets in at most an edge, but the star of 1 is two discs
    const auto g = EmbeddedGraph::from_faces({{"1", "2", "3"},
                                              {"1", "2", "4"},
                                              {"1", "3", "4"},
                                              {"2", "3", "4"},
                                              {"1", "5", "6"},
                                              {"1", "5", "7"},
                                              {"1", "6", "7"},
                                              {"5", "6", "7"}});
    const auto rep = validate_embedding(g);
    CHECK(!rep.ok);
    CHECK(has_violation(rep, "vertex-disc"));
}

TEST_CASE("disconnected input is flagged") {
    const auto g = EmbeddedGraph::from_faces({{"1", "2", "3"},
                                              {"1", "2", "4"},
                                              {"1", "3", "4"},
                                              {"2", "3", "4"},
                                              {"5", "6", "7"},
                                              {"5", "6", "8"},
                                              {"5", "7", "8"},
                                              {"6", "7", "8"}});
    const auto rep = validate_embedding(g);
    CHECK(!rep.ok);
    CHECK(has_violation(rep, "connected"));
}

TEST_CASE("every edge of a valid graph lies in exactly two faces") {
    for (const auto& g : {k4(), cube(), bipyramid(6), bipyramid(9)}) {
        for (int e = 0; e < g.edge_count(); ++e) CHECK(g.faces_of_edge(e).size() == 2);
        if (g.is_triangulation()) CHECK(3 * g.face_count() == 2 * g.edge_count());
    }
}

TEST_CASE("euler characteristic of the examples") {
    CHECK(euler_characteristic(k4()) == 2);
    CHECK(euler_characteristic(bipyramid(7)) == 2);  // 9 - 21 + 14
    CHECK(bipyramid(7).vertex_count() == 9);
    CHECK(bipyramid(7).edge_count() == 21);
    CHECK(bipyramid(7).face_count() == 14);
}
