#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zigzag/classify.hpp"
#include "zigzag/embedded_graph.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

// An ordered identification of one triangular face's vertices with
// another's: the gluing homeomorphism restricted to vertices.
struct GluingMap {
    int source_face = -1;  // face id in the left graph
    int target_face = -1;  // face id in the right graph
    std::array<std::pair<int, int>, 3> images{};  // (left vertex, right vertex), sorted by left

    int image_of(int left_vertex) const;
    int preimage_of(int right_vertex) const;
};

// All 6 bijections between the vertex triples of two triangular faces,
// ordered by image triple.  Throws precondition_error on non-triangles.
std::vector<GluingMap> enumerate_identifications(const EmbeddedGraph& left, int face,
                                                 const EmbeddedGraph& right, int right_face);

// Gluing built from token pairs {left_token, right_token}.
GluingMap make_gluing(const EmbeddedGraph& left, int face, const EmbeddedGraph& right,
                      int right_face,
                      const std::vector<std::pair<std::string, std::string>>& images);

// The glued graph plus the vertex correspondences into it.  Left vertices
// keep their tokens; right vertices get apostrophes appended until unique,
// with the three glued vertices taking the left-side names.
struct ConnectedSum {
    EmbeddedGraph graph;
    ValidationReport validation;        // of the glued object
    std::vector<int> left_vertex_map;   // left vertex id  -> sum vertex id
    std::vector<int> right_vertex_map;  // right vertex id -> sum vertex id
};

ConnectedSum connected_sum(const EmbeddedGraph& left, int face, const EmbeddedGraph& right,
                           int right_face, const GluingMap& g);

// A maximal run of a zigzag between two passages through the cut face:
// the first and last vertex pairs are directed traversals of the face's
// edges and the interior avoids them.
struct Segment {
    std::vector<int> verts;  // host-graph vertex indices
    int host_zigzag = -1;

    std::pair<int, int> first_pair() const { return {verts[0], verts[1]}; }
    std::pair<int, int> last_pair() const {
        return {verts[verts.size() - 2], verts[verts.size() - 1]};
    }
};

// The three segments obtained by cutting all zigzags at their passages
// through one face.  When an anchor window (x,y,z) is supplied the
// zigzag containing it is cut starting there and in its direction, so
// segments[0..2] play the roles A, B, C; zigzags that never meet the
// face pass through unchanged and are listed in untouched_zigzags.
struct SegmentDecomposition {
    int face = -1;
    std::vector<Segment> segments;
    std::vector<int> untouched_zigzags;
    bool anchored = false;
};

SegmentDecomposition segment_decomposition(const EmbeddedGraph& g, const ZigzagSet& zs, int face,
                                           std::optional<std::array<int, 3>> anchor = std::nullopt);

// One letter of a zigzag word in the glued graph: a segment of either
// side, possibly reversed.
struct WordLetter {
    bool primed = false;  // right-side segment
    int index = -1;       // into the side's SegmentDecomposition::segments
    bool inverted = false;
    friend bool operator==(const WordLetter&, const WordLetter&) = default;
};

using SegmentWord = std::vector<WordLetter>;

// "A,C'^-1,B,A',C^-1,B'" with segments[0..2] printed A,B,C.
std::string word_to_string(const SegmentWord& w);
SegmentWord word_from_string(const std::string& s);

struct Composition {
    std::vector<SegmentWord> words;
    // zigzags untouched by the cut faces, carried into the sum unchanged
    std::vector<std::pair<bool, int>> untouched;  // (primed side?, zigzag id)

    int zigzag_count() const {
        return static_cast<int>(words.size() + untouched.size());
    }
};

// Matches segment boundary pairs across the gluing until every word
// closes.  Words come out with shape X,X' or X,X',Y,Y' or X,X',Y,Y',Z,Z';
// a single six-letter word means the sum is z-knotted.
Composition compose_zigzags(const SegmentDecomposition& left, const SegmentDecomposition& right,
                            const GluingMap& g);

// Concatenates a word's segments into a genuine zigzag of the glued graph,
// merging the two shared vertices at every junction.  Returns the cyclic
// vertex sequence in sum indices (canonical form).
std::vector<int> expand_segment_word(const SegmentWord& w, const SegmentDecomposition& left,
                                     const SegmentDecomposition& right, const ConnectedSum& sum);

// The full predicted zigzag multiset of the glued graph: every expanded
// word plus every untouched zigzag, canonicalized and sorted.
std::vector<std::vector<int>> predicted_zigzags(const Composition& c,
                                                const SegmentDecomposition& left,
                                                const SegmentDecomposition& right,
                                                const ZigzagSet& left_zs,
                                                const ZigzagSet& right_zs,
                                                const ConnectedSum& sum);

// Table-driven z-knottedness prediction from the two face classes and the
// identification, with the expected zigzag count and the deciding rule.
struct Theorem1Verdict {
    bool z_knotted = false;
    int zigzag_count = 0;
    std::string reason;
};

Theorem1Verdict predict_z_knotted(const FaceClassification& left_class,
                                  const FaceClassification& right_class, const GluingMap& g);

// One gluing of the audit: the prediction, the segment-word construction
// and the direct enumeration of the glued graph, with agreement flags.
struct AuditRow {
    GluingMap gluing;
    bool sum_valid = false;
    Theorem1Verdict predicted;
    int composed_count = 0;
    bool actual_z_knotted = false;
    std::string actual_z_vector;
    bool oracle_match = false;  // predicted multiset == enumerated multiset
    bool agree = false;
};

struct AuditReport {
    std::vector<AuditRow> rows;
    bool all_agree = true;
};

// Runs all six gluings of (face, right_face).  Requires both graphs to be
// z-knotted triangulations.  Disagreements are report content, not errors.
AuditReport theorem1_audit(const EmbeddedGraph& left, int face, const EmbeddedGraph& right,
                           int right_face);

}  // namespace zigzag
