#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zigzag/classify.hpp"
#include "zigzag/embedded_graph.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

// Sphere embeddings of the standard examples.
EmbeddedGraph tetrahedron();
EmbeddedGraph cube();

// The n-gonal bipyramid: cycle 1..n joined to apexes a and b.
// z-knotted exactly when n is odd.  Requires n >= 3.
EmbeddedGraph bipyramid(int n);

// The connected sum of BP_2k and BP_2k' at their (a,1,2) faces with the
// identification a,1,2 -> 2',a',1'.  z-knotted, with face (a,2,3) a
// (2,2,2)-face of second type.  Requires k, k' odd and >= 3.
EmbeddedGraph twisted_bipyramid_sum(int k, int k2);

// Generator dispatch for the CLI: "tetrahedron"/"k4", "cube"/"q3",
// "bipyramid n", "twisted-sum k k'", or a corpus id.
EmbeddedGraph generate(const std::string& name, const std::vector<std::string>& args);

// A corpus graph built from a declarative recipe, with its zigzag data
// precomputed.  designated_face uses the CLI's sorted-token reference.
struct CorpusEntry {
    std::string id;
    std::string provenance;
    EmbeddedGraph graph;
    std::string designated_face;
    int designated_face_id = -1;
    ZigzagSet zigzags;
    bool z_knotted = false;
    std::optional<FaceClassification> face_class;  // of the designated face
};

struct CorpusRecipe {
    std::string id;
    // kind "gen": gen_name + gen_args; kind "sum": left/right corpus ids,
    // face references and the token map
    std::string kind;
    std::string gen_name;
    std::vector<std::string> gen_args;
    std::string left, left_face, right, right_face;
    std::vector<std::pair<std::string, std::string>> map;
    std::string designated_face;
};

// The standard corpus: bipyramids 3..15, K4#K4, the odd+odd and even+even
// example sums carrying (2,2,2)-faces of first type, the two-zigzag
// construction sums carrying (2,2,2)-faces of second type, and
// second-generation sums over produced faces.
const std::vector<CorpusRecipe>& corpus_recipes();
std::vector<CorpusEntry> build_corpus();

EmbeddedGraph build_recipe(const CorpusRecipe& r, const std::vector<CorpusEntry>& built);
const CorpusEntry* find_entry(const std::vector<CorpusEntry>& corpus, const std::string& id);

}  // namespace zigzag
