#include "zigzag/graph_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "zigzag/classify.hpp"

namespace zigzag {

EmbeddedGraph parse_graph(const std::string& text) {
    std::vector<std::vector<std::string>> faces;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        if (toks[0] != "f")
            throw parse_error(lineno, "expected a face line starting with 'f', got '" + toks[0] + "'");
        toks.erase(toks.begin());
        if (toks.size() < 3)
            throw parse_error(lineno, "face needs at least 3 vertices, got " +
                                          std::to_string(toks.size()));
        std::set<std::string> seen;
        for (const auto& v : toks)
            if (!seen.insert(v).second)
                throw parse_error(lineno, "vertex '" + v + "' repeated within one face");
        faces.push_back(std::move(toks));
    }
    if (faces.empty()) throw parse_error(lineno, "no faces found");
    return EmbeddedGraph::from_faces(faces);
}

std::string serialize_graph(const EmbeddedGraph& g) {
    std::ostringstream os;
    for (const auto& f : g.faces()) {
        os << "f";
        for (int v : f) os << " " << g.token(v);
        os << "\n";
    }
    return os.str();
}

int face_by_ref(const EmbeddedGraph& g, const std::string& ref) {
    std::vector<std::string> toks;
    std::stringstream ss(ref);
    std::string t;
    while (std::getline(ss, t, ','))
        if (!t.empty()) toks.push_back(t);
    return g.find_face_by_vertex_set(toks);
}

std::string face_ref(const EmbeddedGraph& g, int face) {
    std::vector<std::string> toks;
    for (int v : g.face(face)) toks.push_back(g.token(v));
    std::sort(toks.begin(), toks.end(), token_less);
    std::string out;
    for (size_t i = 0; i < toks.size(); ++i) {
        if (i) out += ",";
        out += toks[i];
    }
    return out;
}

std::string export_dot(const EmbeddedGraph& g, const ZigzagSet* zs) {
    static const char* palette[] = {"#1b6ca8", "#c23b22", "#2e8540", "#8a2be2",
                                    "#d2691e", "#008b8b", "#9b870c", "#555555"};
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v) os << "  \"" << g.token(v) << "\";\n";

    const bool knotted = zs && is_z_knotted(*zs);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edge(e);
        os << "  \"" << g.token(ed.u) << "\" -- \"" << g.token(ed.v) << "\"";
        if (knotted) {
            const auto t = edge_type(g, *zs, e);
            if (t == EdgeType::Second)
                os << " [style=bold, color=\"#c23b22\", tooltip=\"second type\"]";
            else
                os << " [color=\"#1b6ca8\", tooltip=\"first type\"]";
        } else if (zs) {
            const auto& p = zs->passes(e);
            std::vector<int> zids{p[0].zigzag, p[1].zigzag};
            std::sort(zids.begin(), zids.end());
            zids.erase(std::unique(zids.begin(), zids.end()), zids.end());
            os << " [color=\"";
            for (size_t i = 0; i < zids.size(); ++i) {
                if (i) os << ":";
                os << palette[zids[i] % 8];
            }
            os << "\"]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace zigzag
