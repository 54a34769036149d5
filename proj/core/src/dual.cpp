#include "zigzag/dual.hpp"

#include <algorithm>

namespace zigzag {

namespace {

std::string dual_token(const EmbeddedGraph& g, int f) {
    std::string t;
    for (size_t i = 0; i < g.face(f).size(); ++i) {
        if (i) t += ".";
        t += g.token(g.face(f)[i]);
    }
    return t;
}

// faces around v in embedding order (validation guarantees a single disc)
std::vector<int> star_cycle(const EmbeddedGraph& g, int v) {
    const auto& fs = g.faces_at(v);
    const int f0 = fs[0];
    int e0 = -1;
    for (int e : g.edges_at(v)) {
        const auto& fe = g.faces_of_edge(e);
        if (std::count(fe.begin(), fe.end(), f0)) {
            e0 = e;
            break;
        }
    }
    std::vector<int> cyc;
    int f = f0, e = e0;
    do {
        cyc.push_back(f);
        const int a = g.boundary_neighbor(f, v, -1);
        const int b = g.boundary_neighbor(f, v, a);
        const int ea = g.edge_index(v, a);
        const int eb = g.edge_index(v, b);
        const int enext = (ea == e) ? eb : ea;
        f = g.other_face_of_edge(enext, f);
        e = enext;
    } while (!(f == f0 && e == e0));
    if (cyc.size() != fs.size())
        throw internal_error("star of vertex " + g.token(v) + " is not a single disc");
    return cyc;
}

}  // namespace

DualCorrespondence dual_graph(const EmbeddedGraph& g) {
    require_valid(g, "dual_graph");

    DualCorrespondence d;

    std::vector<std::vector<std::string>> dual_faces;
    dual_faces.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::string> cyc;
        for (int f : star_cycle(g, v)) cyc.push_back(dual_token(g, f));
        dual_faces.push_back(std::move(cyc));
    }
    d.dual = EmbeddedGraph::from_faces(dual_faces);
    require_valid(d.dual, "dual_graph (result)");

    d.face_to_dual_vertex.resize(g.face_count());
    for (int f = 0; f < g.face_count(); ++f) {
        d.face_to_dual_vertex[f] = d.dual.vertex_index(dual_token(g, f));
        if (d.face_to_dual_vertex[f] < 0) throw internal_error("dual vertex lookup failed");
    }
    d.edge_to_dual_edge.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& fs = g.faces_of_edge(e);
        const int de = d.dual.edge_index(d.face_to_dual_vertex[fs[0]], d.face_to_dual_vertex[fs[1]]);
        if (de < 0) throw internal_error("dual edge lookup failed");
        d.edge_to_dual_edge[e] = de;
    }
    d.vertex_to_dual_face.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::string> cyc;
        for (int f : star_cycle(g, v)) cyc.push_back(dual_token(g, f));
        d.vertex_to_dual_face[v] = d.dual.find_face(cyc);
        if (d.vertex_to_dual_face[v] < 0) throw internal_error("dual face lookup failed");
    }
    return d;
}

}  // namespace zigzag
