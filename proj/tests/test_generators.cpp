#include <doctest.h>

#include <set>

#include "zigzag/generators.hpp"
#include "zigzag/graph_io.hpp"
#include "zigzag/isomorphism.hpp"

using namespace zigzag;

TEST_CASE("tetrahedron and cube are the standard sphere embeddings") {
    const auto t = tetrahedron();
    CHECK(t.vertex_count() == 4);
    CHECK(t.edge_count() == 6);
    CHECK(t.face_count() == 4);
    CHECK(euler_characteristic(t) == 2);
    CHECK(validate_embedding(t).ok);

    const auto q = cube();
    CHECK(q.vertex_count() == 8);
    CHECK(q.edge_count() == 12);
    CHECK(q.face_count() == 6);
    CHECK(euler_characteristic(q) == 2);
    CHECK(validate_embedding(q).ok);
    CHECK(!q.is_triangulation());
}

TEST_CASE("bipyramid counts and validity") {
    for (int n = 3; n <= 12; ++n) {
        const auto g = bipyramid(n);
        CHECK(g.vertex_count() == n + 2);
        CHECK(g.edge_count() == 3 * n);
        CHECK(g.face_count() == 2 * n);
        CHECK(validate_embedding(g).ok);
        CHECK(g.is_triangulation());
    }
    CHECK_THROWS_AS(bipyramid(2), precondition_error);
}

TEST_CASE("bipyramids are z-knotted exactly for odd n") {
    for (int n = 3; n <= 15; ++n) {
        const auto zs = enumerate_zigzags(bipyramid(n));
        CHECK(is_z_knotted(zs) == (n % 2 == 1));
        if (n % 2 == 1) CHECK(zs[0].length() == 6 * n);
    }
}

TEST_CASE("the two-zigzag construction sums to a z-knotted triangulation") {
    const auto g = twisted_bipyramid_sum(3, 3);
    CHECK(g.vertex_count() == 13);  // 8 + 8 - 3
    CHECK(g.edge_count() == 33);    // 18 + 18 - 3
    CHECK(g.face_count() == 22);    // 12 + 12 - 2
    CHECK(validate_embedding(g).ok);
    const auto zs = enumerate_zigzags(g);
    REQUIRE(is_z_knotted(zs));
    CHECK(zs[0].length() == 66);  // 2 * 33

    CHECK_THROWS_AS(twisted_bipyramid_sum(2, 3), precondition_error);
    CHECK_THROWS_AS(twisted_bipyramid_sum(3, 4), precondition_error);
    CHECK_THROWS_AS(twisted_bipyramid_sum(1, 3), precondition_error);
}

TEST_CASE("generator dispatch") {
    CHECK(are_isomorphic(generate("k4", {}), tetrahedron()).has_value());
    CHECK(are_isomorphic(generate("q3", {}), cube()).has_value());
    CHECK(generate("bipyramid", {"5"}).vertex_count() == 7);
    CHECK_THROWS_AS(generate("nonesuch", {}), precondition_error);
    CHECK_THROWS_AS(generate("bipyramid", {"x"}), precondition_error);
    CHECK_THROWS_AS(generate("bipyramid", {}), precondition_error);
}

TEST_CASE("the corpus builds, validates, and covers all four face classes") {
    const auto corpus = build_corpus();
    CHECK(corpus.size() >= 16);

    std::set<FaceClass> classes;
    int z_knotted_with_class = 0;
    for (const auto& e : corpus) {
        CHECK(validate_embedding(e.graph).ok);
        if (e.face_class) {
            classes.insert(e.face_class->cls);
            ++z_knotted_with_class;
        }
        if (!e.designated_face.empty()) CHECK(e.designated_face_id >= 0);
    }
    CHECK(classes.size() == 4);
    CHECK(z_knotted_with_class >= 12);
}

TEST_CASE("corpus recipes replay deterministically") {
    const auto corpus = build_corpus();
    std::vector<CorpusEntry> rebuilt;
    for (const auto& r : corpus_recipes()) {
        const auto g = build_recipe(r, rebuilt);
        const auto* e = find_entry(corpus, r.id);
        REQUIRE(e != nullptr);
        CHECK(serialize_graph(g) == serialize_graph(e->graph));
        CHECK(are_isomorphic(g, e->graph).has_value());
        CorpusEntry copy;
        copy.id = r.id;
        copy.graph = g;
        rebuilt.push_back(std::move(copy));
    }
}

TEST_CASE("the expected corpus entries are present") {
    const auto corpus = build_corpus();
    for (const char* id : {"K4", "Q3", "BP_3", "BP_15", "K4K4", "ex4a", "ex4b", "ex5a", "ex5b",
                           "TS_33", "TS_35", "gen2a", "gen2b"})
        CHECK(find_entry(corpus, id) != nullptr);

    const auto* k4k4 = find_entry(corpus, "K4K4");
    CHECK(are_isomorphic(k4k4->graph, bipyramid(3)).has_value());

    // the produced (2,2,2)-faces carry the classes their recipes promise
    CHECK(find_entry(corpus, "ex4a")->face_class->cls == FaceClass::TwoTwoTwoFirst);
    CHECK(find_entry(corpus, "ex4b")->face_class->cls == FaceClass::TwoTwoTwoFirst);
    CHECK(find_entry(corpus, "ex5a")->face_class->cls == FaceClass::TwoTwoTwoFirst);
    CHECK(find_entry(corpus, "ex5b")->face_class->cls == FaceClass::TwoTwoTwoFirst);
    CHECK(find_entry(corpus, "TS_33")->face_class->cls == FaceClass::TwoTwoTwoSecond);
    CHECK(find_entry(corpus, "TS_35")->face_class->cls == FaceClass::TwoTwoTwoSecond);

    // second-generation sums are z-knotted as the verdict table promises
    CHECK(find_entry(corpus, "gen2a")->z_knotted);
    CHECK(find_entry(corpus, "gen2b")->z_knotted);
}
