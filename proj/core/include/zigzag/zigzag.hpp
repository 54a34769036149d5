#pragma once

#include <array>
#include <string>
#include <vector>

#include "zigzag/embedded_graph.hpp"

namespace zigzag {

// One position of a zigzag traversal: three consecutive vertices and the
// unique face containing them with xy, yz boundary edges.
struct ZigzagStepState {
    int x = -1, y = -1, z = -1;
    int face = -1;
    friend bool operator==(const ZigzagStepState&, const ZigzagStepState&) = default;
};

// Resolves the face for a vertex triple; throws precondition_error when the
// triple is not three distinct vertices lying consecutively on a face.
ZigzagStepState make_step_state(const EmbeddedGraph& g, int x, int y, int z);

// The zigzag advance rule: from (x,y,z) move to (y,z,w) where w follows z
// on the boundary of the other face containing edge yz.
ZigzagStepState zigzag_step(const EmbeddedGraph& g, const ZigzagStepState& s);

// A zigzag as the canonical cyclic vertex sequence: the lexicographically
// least rotation over the sequence and its reversal, under vertex-index
// order (which is token order).
struct Zigzag {
    std::vector<int> seq;

    int length() const { return static_cast<int>(seq.size()); }
    // directed traversal i: seq[i] -> seq[(i+1) % n]
    std::pair<int, int> traversal(int i) const {
        return {seq[i], seq[(i + 1) % seq.size()]};
    }
};

// Least rotation of cyc over both directions.
std::vector<int> canonical_cycle(const std::vector<int>& cyc);

// Follows the step rule from seed until the state repeats and returns the
// canonical cyclic sequence between repeats.
Zigzag trace_zigzag(const EmbeddedGraph& g, const ZigzagStepState& seed);

// One directed pass of a zigzag over an edge.
struct EdgePass {
    int zigzag = -1;  // index into ZigzagSet::zigzags()
    int pos = -1;     // traversal position within that zigzag
};

// All zigzags of a graph, one canonical representative per {Z, Z^-1} pair,
// sorted by (length, sequence), plus the per-edge traversal record.
class ZigzagSet {
public:
    ZigzagSet() = default;
    ZigzagSet(const EmbeddedGraph& g, std::vector<Zigzag> zs);

    const std::vector<Zigzag>& zigzags() const { return zigzags_; }
    const Zigzag& operator[](int i) const { return zigzags_[i]; }
    int size() const { return static_cast<int>(zigzags_.size()); }

    // multiset of lengths, ascending
    const std::vector<int>& z_vector() const { return z_vector_; }

    // exactly two passes per edge in a valid embedding
    const std::array<EdgePass, 2>& passes(int edge) const { return passes_[edge]; }

    // the directed vertex pair of a pass
    std::pair<int, int> pass_pair(const EdgePass& p) const {
        return zigzags_[p.zigzag].traversal(p.pos);
    }

private:
    std::vector<Zigzag> zigzags_;
    std::vector<int> z_vector_;
    std::vector<std::array<EdgePass, 2>> passes_;
};

// Partitions every traversal state into zigzag orbits.  Each zigzag is
// reported once, merged with its reversal at canonicalization.
ZigzagSet enumerate_zigzags(const EmbeddedGraph& g);

// "4^3", "42", "6^4": lengths ascending, multiplicities after '^'.
std::string z_vector_string(const ZigzagSet& zs);
std::string z_vector_string(const std::vector<int>& lengths);

// Comma-joined vertex tokens of a cycle.
std::string cycle_string(const EmbeddedGraph& g, const std::vector<int>& cyc);

}  // namespace zigzag
