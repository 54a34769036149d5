#include "zigzag/generators.hpp"

#include <algorithm>
#include <sstream>

#include "zigzag/graph_io.hpp"
#include "zigzag/surgery.hpp"

namespace zigzag {

EmbeddedGraph tetrahedron() {
    return EmbeddedGraph::from_faces({{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
}

EmbeddedGraph cube() {
    return EmbeddedGraph::from_faces({{"1", "2", "3", "4"},
                                      {"5", "6", "7", "8"},
                                      {"1", "2", "6", "5"},
                                      {"2", "3", "7", "6"},
                                      {"3", "4", "8", "7"},
                                      {"4", "1", "5", "8"}});
}

EmbeddedGraph bipyramid(int n) {
    if (n < 3) throw precondition_error("bipyramid needs n >= 3 (smaller would force multi-edges)");
    std::vector<std::vector<std::string>> faces;
    for (int i = 1; i <= n; ++i) {
        const std::string u = std::to_string(i), v = std::to_string(i % n + 1);
        faces.push_back({"a", u, v});
        faces.push_back({"b", u, v});
    }
    return EmbeddedGraph::from_faces(faces);
}

EmbeddedGraph twisted_bipyramid_sum(int k, int k2) {
    if (k < 3 || k % 2 == 0 || k2 < 3 || k2 % 2 == 0)
        throw precondition_error("twisted_bipyramid_sum needs odd k, k' >= 3");
    const auto l = bipyramid(2 * k);
    const auto r = bipyramid(2 * k2);
    const int lf = l.find_face({"a", "1", "2"});
    const int rf = r.find_face({"a", "1", "2"});
    const auto g = make_gluing(l, lf, r, rf, {{"a", "2"}, {"1", "a"}, {"2", "1"}});
    auto sum = connected_sum(l, lf, r, rf, g);
    if (!sum.validation.ok) throw internal_error("twisted_bipyramid_sum glued to an invalid embedding");
    return sum.graph;
}

namespace {

int want_int(const std::vector<std::string>& args, size_t i, const std::string& what) {
    if (i >= args.size()) throw precondition_error("missing argument: " + what);
    try {
        return std::stoi(args[i]);
    } catch (const std::exception&) {
        throw precondition_error("argument '" + args[i] + "' is not an integer (" + what + ")");
    }
}

}  // namespace

EmbeddedGraph generate(const std::string& name, const std::vector<std::string>& args) {
    if (name == "tetrahedron" || name == "k4") return tetrahedron();
    if (name == "cube" || name == "q3") return cube();
    if (name == "bipyramid") return bipyramid(want_int(args, 0, "n"));
    if (name == "twisted-sum") return twisted_bipyramid_sum(want_int(args, 0, "k"), want_int(args, 1, "k'"));
    const auto corpus = build_corpus();
    if (const auto* e = find_entry(corpus, name)) return e->graph;
    throw precondition_error("unknown generator '" + name +
                             "' (try: tetrahedron, cube, bipyramid N, twisted-sum K K', or a corpus id)");
}

namespace {

CorpusRecipe gen_recipe(std::string id, std::string gen_name, std::vector<std::string> args,
                        std::string face) {
    CorpusRecipe r;
    r.id = std::move(id);
    r.kind = "gen";
    r.gen_name = std::move(gen_name);
    r.gen_args = std::move(args);
    r.designated_face = std::move(face);
    return r;
}

CorpusRecipe sum_recipe(std::string id, std::string left, std::string left_face, std::string right,
                        std::string right_face,
                        std::vector<std::pair<std::string, std::string>> map, std::string face) {
    CorpusRecipe r;
    r.id = std::move(id);
    r.kind = "sum";
    r.left = std::move(left);
    r.left_face = std::move(left_face);
    r.right = std::move(right);
    r.right_face = std::move(right_face);
    r.map = std::move(map);
    r.designated_face = std::move(face);
    return r;
}

std::string render_provenance(const CorpusRecipe& r) {
    std::ostringstream os;
    if (r.kind == "gen") {
        os << r.gen_name;
        for (const auto& a : r.gen_args) os << " " << a;
    } else {
        os << r.left << " # " << r.right << " at (" << r.left_face << ")~(" << r.right_face
           << ") via";
        for (const auto& [s, t] : r.map) os << " " << s << ":" << t;
    }
    return os.str();
}

}  // namespace

const std::vector<CorpusRecipe>& corpus_recipes() {
    static const std::vector<CorpusRecipe> recipes = [] {
        std::vector<CorpusRecipe> rs;
        rs.push_back(gen_recipe("K4", "tetrahedron", {}, "2,3,4"));
        rs.push_back(gen_recipe("Q3", "cube", {}, ""));
        for (int n = 3; n <= 15; ++n)
            rs.push_back(gen_recipe("BP_" + std::to_string(n), "bipyramid", {std::to_string(n)},
                                    "1,2,a"));
        // Any gluing of two tetrahedra gives the 3-gonal bipyramid.
        rs.push_back(sum_recipe("K4K4", "K4", "2,3,4", "K4", "2,3,4",
                                {{"2", "2"}, {"3", "3"}, {"4", "4"}}, "1,2,3"));
        // odd+odd, apex on apex, both orders of the base edge: the sums are
        // z-knotted and their (b,1,2) faces are (2,2,2)-faces of first type
        rs.push_back(sum_recipe("ex4a", "BP_7", "1,2,a", "BP_3", "1,2,a",
                                {{"a", "a"}, {"1", "1"}, {"2", "2"}}, "1,2,b"));
        rs.push_back(sum_recipe("ex4b", "BP_7", "1,2,a", "BP_3", "1,2,a",
                                {{"a", "a"}, {"1", "2"}, {"2", "1"}}, "1,2,b"));
        // even+even, apex off apex: z-knotted with (b,4,5) of first type
        rs.push_back(sum_recipe("ex5a", "BP_5", "1,2,a", "BP_9", "1,2,a",
                                {{"a", "1"}, {"1", "2"}, {"2", "a"}}, "4,5,b"));
        rs.push_back(sum_recipe("ex5b", "BP_5", "1,2,a", "BP_9", "1,2,a",
                                {{"a", "2"}, {"1", "1"}, {"2", "a"}}, "4,5,b"));
        // two-zigzag bipyramid construction: (a,2,3) is (2,2,2)-second
        rs.push_back(gen_recipe("TS_33", "twisted-sum", {"3", "3"}, "2,3,a"));
        rs.push_back(gen_recipe("TS_35", "twisted-sum", {"3", "5"}, "2,3,a"));
        // second generation: glue over the produced (2,2,2)-faces
        rs.push_back(sum_recipe("gen2a", "ex4a", "1,2,b", "BP_3", "1,2,a",
                                {{"b", "a"}, {"1", "1"}, {"2", "2"}}, "3,4,a"));
        rs.push_back(sum_recipe("gen2b", "TS_33", "2,3,a", "BP_3", "1,2,a",
                                {{"a", "a"}, {"2", "1"}, {"3", "2"}}, "4,5,a"));
        return rs;
    }();
    return recipes;
}

EmbeddedGraph build_recipe(const CorpusRecipe& r, const std::vector<CorpusEntry>& built) {
    if (r.kind == "gen") return generate(r.gen_name, r.gen_args);
    const auto* l = find_entry(built, r.left);
    const auto* rt = find_entry(built, r.right);
    if (!l || !rt)
        throw precondition_error("recipe '" + r.id + "' references an entry not built yet");
    const int lf = face_by_ref(l->graph, r.left_face);
    const int rf = face_by_ref(rt->graph, r.right_face);
    if (lf < 0 || rf < 0) throw precondition_error("recipe '" + r.id + "' names a missing face");
    const auto g = make_gluing(l->graph, lf, rt->graph, rf, r.map);
    auto sum = connected_sum(l->graph, lf, rt->graph, rf, g);
    if (!sum.validation.ok)
        throw precondition_error("recipe '" + r.id + "' glued to an invalid embedding");
    return sum.graph;
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> corpus;
    for (const auto& r : corpus_recipes()) {
        CorpusEntry e;
        e.id = r.id;
        e.provenance = render_provenance(r);
        e.graph = build_recipe(r, corpus);
        e.designated_face = r.designated_face;
        e.zigzags = enumerate_zigzags(e.graph);
        e.z_knotted = is_z_knotted(e.zigzags);
        if (!r.designated_face.empty()) {
            e.designated_face_id = face_by_ref(e.graph, r.designated_face);
            if (e.designated_face_id < 0)
                throw internal_error("corpus entry " + e.id + " lost its designated face");
            if (e.z_knotted && e.graph.is_triangulation())
                e.face_class = classify_face(e.graph, e.zigzags, e.designated_face_id);
        }
        corpus.push_back(std::move(e));
    }
    return corpus;
}

const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, const std::string& id) {
    for (const auto& e : corpus)
        if (e.id == id) return &e;
    return nullptr;
}

}  // namespace zigzag
