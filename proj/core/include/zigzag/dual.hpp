#pragma once

#include <vector>

#include "zigzag/embedded_graph.hpp"

namespace zigzag {

// The dual embedding: one vertex per face, one edge per edge, one face per
// vertex (the disc of faces around it, read in embedding order).
struct DualCorrespondence {
    EmbeddedGraph dual;
    std::vector<int> face_to_dual_vertex;  // face id in g  -> vertex id in dual
    std::vector<int> edge_to_dual_edge;    // edge id in g  -> edge id in dual
    std::vector<int> vertex_to_dual_face;  // vertex id in g -> face id in dual
};

// Requires g valid.  Dual vertex tokens are the source face boundaries
// joined with '.', e.g. "1.2.a".
DualCorrespondence dual_graph(const EmbeddedGraph& g);

}  // namespace zigzag
