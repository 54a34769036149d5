#pragma once

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zigzag {

// Thrown when a face list cannot even be assembled into a graph
// (structural defects; semantic defects go through validate_embedding).
struct build_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation is called outside its stated preconditions.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown on structural impossibilities that indicate a bug in the engine
// itself rather than bad input.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Total order on vertex tokens: all-digit tokens compare numerically
// (ties broken lexicographically so "01" and "1" stay distinct), numeric
// tokens sort before non-numeric ones, everything else lexicographically.
bool token_less(const std::string& a, const std::string& b);

// Undirected edge, endpoints stored as vertex indices with u < v.
struct Edge {
    int u = -1;
    int v = -1;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// A graph cellularly embedded in a closed surface, given by its face list.
// Vertices are dense indices 0..V-1 assigned in token order; faces store
// boundary cycles canonicalized to the least rotation over both directions;
// edges and adjacency are derived.  Instances are immutable once built.
class EmbeddedGraph {
public:
    EmbeddedGraph() = default;

    // build_graph: assembles the derived structure without validating the
    // embedding conditions (so that invalid inputs can still be reported).
    // Throws build_error for faces shorter than 3 or with repeated vertices.
    static EmbeddedGraph from_faces(const std::vector<std::vector<std::string>>& face_list);

    int vertex_count() const { return static_cast<int>(tokens_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::string& token(int v) const { return tokens_[v]; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    // -1 when the token names no vertex.
    int vertex_index(const std::string& token) const;

    const std::vector<std::vector<int>>& faces() const { return faces_; }
    const std::vector<int>& face(int f) const { return faces_[f]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }
    // -1 when the vertex pair spans no edge.
    int edge_index(int u, int v) const;

    const std::vector<int>& faces_of_edge(int e) const { return faces_of_edge_[e]; }
    const std::vector<int>& edges_at(int v) const { return edges_at_[v]; }
    const std::vector<int>& faces_at(int v) const { return faces_at_[v]; }

    // All faces of length 3.
    bool is_triangulation() const { return triangulation_; }

    // The face on the other side of edge e relative to face f.
    // Requires e to lie in exactly two faces, one of them f.
    int other_face_of_edge(int e, int f) const;

    // The boundary neighbor of v on face f distinct from `exclude`.
    // Requires v on f; returns -1 if no such neighbor exists.
    int boundary_neighbor(int f, int v, int exclude) const;

    // The unique face containing x,y,z with xy and yz boundary edges,
    // i.e. faces(xy) ∩ faces(yz).  Empty if none; for graphs that pass
    // validation the intersection never holds more than one face.
    std::optional<int> face_of_triple(int x, int y, int z) const;

    // Face lookup by canonical boundary (tokens, any rotation/direction).
    // -1 when absent.
    int find_face(const std::vector<std::string>& boundary) const;

    // Face lookup by vertex set, the CLI's "sorted tokens" convention.
    // -1 when absent or ambiguous.
    int find_face_by_vertex_set(const std::vector<std::string>& verts) const;

    // Canonical key of an index cycle: least rotation over both directions.
    static std::vector<int> canonical_cycle_key(const std::vector<int>& cycle);

private:
    std::vector<std::string> tokens_;
    std::map<std::string, int, bool (*)(const std::string&, const std::string&)> index_{token_less};
    std::vector<std::vector<int>> faces_;
    std::vector<Edge> edges_;
    std::map<std::pair<int, int>, int> edge_index_;
    std::vector<std::vector<int>> faces_of_edge_;
    std::vector<std::vector<int>> edges_at_;
    std::vector<std::vector<int>> faces_at_;
    bool triangulation_ = false;
};

struct Violation {
    std::string rule;    // "connected", "edge-face-count", "face-intersection", "vertex-disc"
    std::string detail;  // offending elements, rendered with vertex tokens
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks the closed-2-cell-embedding conditions: connectivity, every edge
// in exactly two distinct faces, pairwise face intersections no larger
// than an edge, and a single disc of faces around every vertex.
ValidationReport validate_embedding(const EmbeddedGraph& g);

// Throws precondition_error carrying the first violations if g is invalid.
void require_valid(const EmbeddedGraph& g, const std::string& context);

// |V| - |E| + |F|.
int euler_characteristic(const EmbeddedGraph& g);

}  // namespace zigzag
