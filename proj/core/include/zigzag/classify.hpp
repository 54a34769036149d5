#pragma once

#include <array>
#include <string>
#include <vector>

#include "zigzag/embedded_graph.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

// In a z-knotted graph the unique zigzag passes every edge twice: in
// opposite directions (First) or in the same direction (Second).
enum class EdgeType { First, Second };

enum class FaceClass {
    OneOneTwoOdd,     // one second-type edge, passages x,y,z .. y,x,z .. y,z,x
    OneOneTwoEven,    // one second-type edge, passages x,y,z .. y,z,x .. y,x,z
    TwoTwoTwoFirst,   // all second-type, passages x,y,z .. z,x,y .. y,z,x
    TwoTwoTwoSecond,  // all second-type, passages x,y,z .. y,z,x .. z,x,y
};

std::string to_string(EdgeType t);
std::string to_string(FaceClass c);

bool is_z_knotted(const ZigzagSet& zs);
bool is_z_knotted(const EmbeddedGraph& g);

// Requires a z-knotted zigzag set; throws precondition_error otherwise.
EdgeType edge_type(const EmbeddedGraph& g, const ZigzagSet& zs, int edge);

// A window of a zigzag whose containing face is the face under study.
struct Passage {
    int zigzag = -1;
    int pos = -1;
    std::array<int, 3> triple{};
};

// All passages of all zigzags through `face`, ordered by (zigzag, pos).
// On a valid triangulation every face has exactly three in total.
std::vector<Passage> face_passages(const EmbeddedGraph& g, const ZigzagSet& zs, int face);

// Face class plus the role assignment behind it: for (1,1,2) faces labels
// = (apex, y, z) with the zigzag passing y->z twice; for (2,2,2) faces an
// oriented triple starting at the least vertex.  The labeled triple always
// occurs as a passage window of the (canonical-direction) zigzag.
struct FaceClassification {
    FaceClass cls{};
    std::array<int, 3> labels{};
};

// Requires g a z-knotted triangulation.
FaceClassification classify_face(const EmbeddedGraph& g, const ZigzagSet& zs, int face);

struct DualityReport {
    bool ok = true;
    std::vector<std::string> failures;
    std::string z_vector;       // of g
    std::string dual_z_vector;  // of g*
};

// Checks that g and its dual have equal z-vectors and, when g is z-knotted,
// that every edge's type is swapped under the edge correspondence.
DualityReport verify_duality(const EmbeddedGraph& g);

}  // namespace zigzag
