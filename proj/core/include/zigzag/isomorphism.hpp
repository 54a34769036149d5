#pragma once

#include <optional>
#include <vector>

#include "zigzag/embedded_graph.hpp"

namespace zigzag {

// Embedded-graph isomorphism: a vertex bijection carrying edges to edges
// and faces to faces (faces up to rotation and reflection).  Backtracking
// seeded by degree / incident-face-size profiles; fine at desk scale.
// Returns the mapping g1 vertex index -> g2 vertex index, or nullopt.
std::optional<std::vector<int>> are_isomorphic(const EmbeddedGraph& g1, const EmbeddedGraph& g2);

}  // namespace zigzag
