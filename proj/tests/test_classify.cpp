#include <doctest.h>

#include <map>

#include "zigzag/classify.hpp"
#include "zigzag/generators.hpp"
#include "zigzag/graph_io.hpp"

using namespace zigzag;

namespace {

EdgeType type_of(const EmbeddedGraph& g, const ZigzagSet& zs, const char* u, const char* v) {
    const int e = g.edge_index(g.vertex_index(u), g.vertex_index(v));
    REQUIRE(e >= 0);
    return edge_type(g, zs, e);
}

// rename every vertex token; the result is the same embedding with a
// different labeling (and possibly different canonical zigzag directions)
EmbeddedGraph renamed(const EmbeddedGraph& g, const std::map<std::string, std::string>& ren) {
    std::vector<std::vector<std::string>> faces;
    for (const auto& f : g.faces()) {
        std::vector<std::string> cyc;
        for (int v : f) {
            const auto it = ren.find(g.token(v));
            cyc.push_back(it == ren.end() ? g.token(v) : it->second);
        }
        faces.push_back(std::move(cyc));
    }
    return EmbeddedGraph::from_faces(faces);
}

}  // namespace

TEST_CASE("z-knottedness of the named graphs") {
    CHECK(is_z_knotted(bipyramid(3)));
    CHECK(!is_z_knotted(bipyramid(4)));
    CHECK(!is_z_knotted(tetrahedron()));
}

TEST_CASE("edge types in the 7-bipyramid: spokes first, rim second") {
    const auto g = bipyramid(7);
    const auto zs = enumerate_zigzags(g);
    for (int i = 1; i <= 7; ++i) {
        const auto v = std::to_string(i);
        CHECK(type_of(g, zs, "a", v.c_str()) == EdgeType::First);
        CHECK(type_of(g, zs, "b", v.c_str()) == EdgeType::First);
        const auto w = std::to_string(i % 7 + 1);
        CHECK(type_of(g, zs, v.c_str(), w.c_str()) == EdgeType::Second);
    }
}

TEST_CASE("edge types are undefined without z-knottedness") {
    const auto g = bipyramid(4);
    const auto zs = enumerate_zigzags(g);
    CHECK_THROWS_AS(edge_type(g, zs, 0), precondition_error);
    CHECK_THROWS_AS(classify_face(g, zs, 0), precondition_error);
}

TEST_CASE("every face of a z-knotted triangulation is passed three times") {
    for (int n : {3, 5, 7, 9}) {
        const auto g = bipyramid(n);
        const auto zs = enumerate_zigzags(g);
        for (int f = 0; f < g.face_count(); ++f) {
            const auto ps = face_passages(g, zs, f);
            CHECK(ps.size() == 3);
            for (const auto& p : ps) CHECK(p.zigzag == 0);
        }
    }
}

TEST_CASE("passages split 2+1 over the two zigzags of the 6-bipyramid") {
    const auto g = bipyramid(6);
    const auto zs = enumerate_zigzags(g);
    REQUIRE(zs.size() == 2);
    const int f = g.find_face({"a", "1", "2"});
    const auto ps = face_passages(g, zs, f);
    REQUIRE(ps.size() == 3);
    std::map<int, int> per_zigzag;
    for (const auto& p : ps) ++per_zigzag[p.zigzag];
    CHECK(per_zigzag.size() == 2);
    CHECK((per_zigzag[0] + per_zigzag[1]) == 3);
    CHECK((per_zigzag[0] == 1 || per_zigzag[0] == 2));
}

TEST_CASE("odd bipyramids classify odd or even by the parity of k") {
    for (int k = 1; k <= 7; ++k) {
        const int n = 2 * k + 1;
        const auto g = bipyramid(n);
        const auto zs = enumerate_zigzags(g);
        const auto want = k % 2 == 1 ? FaceClass::OneOneTwoOdd : FaceClass::OneOneTwoEven;
        for (int f = 0; f < g.face_count(); ++f) {
            const auto c = classify_face(g, zs, f);
            CHECK(c.cls == want);
            // the apex label is the vertex off the rim edge
            const auto apex = g.token(c.labels[0]);
            CHECK((apex == "a" || apex == "b"));
        }
    }
}

TEST_CASE("the two-zigzag construction produces a (2,2,2)-face of second type") {
    const auto g = twisted_bipyramid_sum(3, 3);
    const auto zs = enumerate_zigzags(g);
    REQUIRE(is_z_knotted(zs));
    const int f = g.find_face_by_vertex_set({"a", "2", "3"});
    REQUIRE(f >= 0);
    CHECK(classify_face(g, zs, f).cls == FaceClass::TwoTwoTwoSecond);
}

TEST_CASE("classification is stable under relabeling") {
    const auto g = bipyramid(5);
    const auto zs = enumerate_zigzags(g);
    // reverse the rim numbering and swap the apexes; token order changes,
    // so the canonical zigzag direction may flip
    std::map<std::string, std::string> ren{{"a", "b"}, {"b", "a"}};
    for (int i = 1; i <= 5; ++i) ren[std::to_string(i)] = std::to_string(6 - i);
    const auto h = renamed(g, ren);
    const auto hzs = enumerate_zigzags(h);
    REQUIRE(is_z_knotted(hzs));

    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        const int hu = h.vertex_index(ren.at(g.token(ed.u)));
        const int hv = h.vertex_index(ren.at(g.token(ed.v)));
        CHECK(edge_type(g, zs, e) == edge_type(h, hzs, h.edge_index(hu, hv)));
    }
    for (int f = 0; f < g.face_count(); ++f) {
        std::vector<std::string> img;
        for (int v : g.face(f)) img.push_back(ren.at(g.token(v)));
        const int hf = h.find_face_by_vertex_set(img);
        REQUIRE(hf >= 0);
        CHECK(classify_face(g, zs, f).cls == classify_face(h, hzs, hf).cls);
    }
}

TEST_CASE("duality swaps edge types and preserves z-vectors") {
    SUBCASE("z-knotted bipyramid") {
        const auto rep = verify_duality(bipyramid(7));
        CHECK(rep.ok);
        CHECK(rep.z_vector == rep.dual_z_vector);
    }
    SUBCASE("multi-zigzag graphs still match z-vectors") {
        CHECK(verify_duality(tetrahedron()).ok);
        CHECK(verify_duality(bipyramid(4)).ok);
        CHECK(verify_duality(cube()).ok);
    }
}
