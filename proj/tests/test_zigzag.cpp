#include <doctest.h>

#include <set>

#include "oracle.hpp"
#include "zigzag/generators.hpp"
#include "zigzag/zigzag.hpp"

using namespace zigzag;

namespace {

std::vector<std::string> tokens_of(const EmbeddedGraph& g, const std::vector<int>& seq) {
    std::vector<std::string> out;
    for (int v : seq) out.push_back(g.token(v));
    return out;
}

oracle::Faces token_faces(const EmbeddedGraph& g) {
    oracle::Faces fs;
    for (const auto& f : g.faces()) fs.push_back(tokens_of(g, f));
    return fs;
}

// canonical forms of the library's zigzags under the oracle's ordering,
// so both sides are normalized by the same independent function
std::vector<oracle::Seq> engine_zigzags_oracle_canon(const EmbeddedGraph& g) {
    std::vector<oracle::Seq> out;
    const auto zs = enumerate_zigzags(g);
    for (const auto& z : zs.zigzags()) out.push_back(oracle::canon(tokens_of(g, z.seq)));
    std::sort(out.begin(), out.end());
    return out;
}

ZigzagStepState state(const EmbeddedGraph& g, const char* x, const char* y, const char* z) {
    return make_step_state(g, g.vertex_index(x), g.vertex_index(y), g.vertex_index(z));
}

}  // namespace

TEST_CASE("one step in K4 crosses to the adjacent face") {
    const auto g = tetrahedron();
    const auto s = zigzag_step(g, state(g, "1", "2", "3"));
    CHECK(g.token(s.x) == "2");
    CHECK(g.token(s.y) == "3");
    CHECK(g.token(s.z) == "4");
    CHECK(s.face == g.find_face({"2", "3", "4"}));
}

TEST_CASE("one step in the 3-bipyramid") {
    const auto g = bipyramid(3);
    const auto s = zigzag_step(g, state(g, "a", "1", "2"));
    CHECK(g.token(s.x) == "1");
    CHECK(g.token(s.y) == "2");
    CHECK(g.token(s.z) == "b");
    CHECK(s.face == g.find_face({"b", "1", "2"}));
}

TEST_CASE("stepping the reversed output returns the reversed input") {
    for (const auto& g : {tetrahedron(), cube(), bipyramid(5)}) {
        for (int f = 0; f < g.face_count(); ++f) {
            const auto& cyc = g.face(f);
            const int n = static_cast<int>(cyc.size());
            for (int i = 0; i < n; ++i) {
                const auto s = make_step_state(g, cyc[(i + n - 1) % n], cyc[i], cyc[(i + 1) % n]);
                const auto t = zigzag_step(g, s);
                const auto back = zigzag_step(g, make_step_state(g, t.z, t.y, t.x));
                CHECK(back.x == s.z);
                CHECK(back.y == s.y);
                CHECK(back.z == s.x);
            }
        }
    }
}

TEST_CASE("invalid seeds are rejected") {
    const auto g = tetrahedron();
    CHECK_THROWS_AS(state(g, "1", "2", "1"), precondition_error);
    const auto q = cube();
    // 1 and 3 are opposite corners of a square face: not consecutive
    CHECK_THROWS_AS(state(q, "1", "3", "2"), precondition_error);
}

TEST_CASE("tracing K4 from 1,2,3 gives the 4-cycle") {
    const auto g = tetrahedron();
    const auto z = trace_zigzag(g, state(g, "1", "2", "3"));
    CHECK(z.length() == 4);
    CHECK(tokens_of(g, z.seq) == std::vector<std::string>{"1", "2", "3", "4"});
}

TEST_CASE("the 3-bipyramid zigzag is the known 18-cycle") {
    const auto g = bipyramid(3);
    const auto z = trace_zigzag(g, state(g, "a", "1", "2"));
    CHECK(z.length() == 18);
    const std::vector<std::string> toks = {"a", "1", "2", "b", "3", "1", "a", "2", "3",
                                           "b", "1", "2", "a", "3", "1", "b", "2", "3"};
    std::vector<int> expected;
    for (const auto& t : toks) expected.push_back(g.vertex_index(t));
    CHECK(z.seq == canonical_cycle(expected));
}

TEST_CASE("re-seeding from any window reproduces the same zigzag") {
    const auto g = bipyramid(5);
    const auto z = trace_zigzag(g, state(g, "a", "1", "2"));
    const int n = z.length();
    for (int i = 0; i < n; ++i) {
        const auto again = trace_zigzag(
            g, make_step_state(g, z.seq[i], z.seq[(i + 1) % n], z.seq[(i + 2) % n]));
        CHECK(again.seq == z.seq);
    }
}

TEST_CASE("canonical form ignores rotation and reversal") {
    CHECK(canonical_cycle({1, 2, 3, 4}) == canonical_cycle({3, 4, 1, 2}));
    CHECK(canonical_cycle({1, 2, 3, 4}) == canonical_cycle({4, 3, 2, 1}));
    CHECK(canonical_cycle({2, 1, 4, 3}) == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("enumeration matches the reference tracer") {
    for (const auto& g : {tetrahedron(), cube(), bipyramid(3), bipyramid(4), bipyramid(6),
                          bipyramid(7), twisted_bipyramid_sum(3, 3)}) {
        const auto expected = oracle::enumerate(token_faces(g));
        CHECK(engine_zigzags_oracle_canon(g) == expected);
    }
}

TEST_CASE("K4 has three zigzags of length 4 with distinct canonical forms") {
    const auto zs = enumerate_zigzags(tetrahedron());
    CHECK(z_vector_string(zs) == "4^3");
    std::set<std::vector<int>> forms;
    for (const auto& z : zs.zigzags()) forms.insert(z.seq);
    CHECK(forms.size() == 3);
}

TEST_CASE("z-vectors of the named graphs") {
    CHECK(z_vector_string(enumerate_zigzags(cube())) == "6^4");
    CHECK(z_vector_string(enumerate_zigzags(bipyramid(7))) == "42");
    CHECK(z_vector_string(enumerate_zigzags(bipyramid(3))) == "18");
}

TEST_CASE("z-vector formatting") {
    CHECK(z_vector_string(std::vector<int>{4, 4, 4}) == "4^3");
    CHECK(z_vector_string(std::vector<int>{42}) == "42");
    CHECK(z_vector_string(std::vector<int>{6, 4, 6}) == "4,6^2");
}

TEST_CASE("total zigzag length is twice the edge count") {
    for (const auto& g : {tetrahedron(), cube(), bipyramid(4), bipyramid(8), bipyramid(11)}) {
        const auto zs = enumerate_zigzags(g);
        int total = 0;
        for (int l : zs.z_vector()) total += l;
        CHECK(total == 2 * g.edge_count());
        // and exactly two passes per edge
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto& p = zs.passes(e);
            const auto a = zs.pass_pair(p[0]);
            const auto b = zs.pass_pair(p[1]);
            const Edge ed = g.edge(e);
            for (const auto& pr : {a, b})
                CHECK(((pr.first == ed.u && pr.second == ed.v) ||
                       (pr.first == ed.v && pr.second == ed.u)));
        }
    }
}

TEST_CASE("no four consecutive zigzag vertices lie on one face") {
    for (const auto& g : {tetrahedron(), cube(), bipyramid(6)}) {
        const auto zs = enumerate_zigzags(g);
        for (const auto& z : zs.zigzags()) {
            const int n = z.length();
            for (int i = 0; i < n; ++i) {
                const auto f1 = g.face_of_triple(z.seq[i], z.seq[(i + 1) % n], z.seq[(i + 2) % n]);
                const auto f2 = g.face_of_triple(z.seq[(i + 1) % n], z.seq[(i + 2) % n],
                                                 z.seq[(i + 3) % n]);
                REQUIRE(f1.has_value());
                REQUIRE(f2.has_value());
                CHECK(*f1 != *f2);
            }
        }
    }
}
