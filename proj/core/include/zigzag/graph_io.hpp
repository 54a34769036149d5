#pragma once

#include <stdexcept>
#include <string>

#include "zigzag/embedded_graph.hpp"
#include "zigzag/zigzag.hpp"

namespace zigzag {

struct parse_error : std::runtime_error {
    int line;
    parse_error(int line_, const std::string& what)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

// Plain-text graph format: '#' starts a comment, one face per line as
//   f <tok> <tok> <tok> ...
// Vertex tokens are any whitespace-free strings; vertices are implied.
EmbeddedGraph parse_graph(const std::string& text);

// Canonical form: each face in its least rotation/direction, faces sorted.
std::string serialize_graph(const EmbeddedGraph& g);

// Face lookup by the CLI reference convention: sorted tokens joined with
// commas, e.g. "1,2,a".  Returns -1 when absent.
int face_by_ref(const EmbeddedGraph& g, const std::string& ref);
std::string face_ref(const EmbeddedGraph& g, int face);

// DOT output.  With a zigzag set: a z-knotted graph styles every edge by
// its type (second-type edges bold); otherwise every edge is colored by
// the zigzags passing it, one color per zigzag.
std::string export_dot(const EmbeddedGraph& g, const ZigzagSet* zs = nullptr);

}  // namespace zigzag
