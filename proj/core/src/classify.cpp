#include "zigzag/classify.hpp"

#include <algorithm>

#include "zigzag/dual.hpp"

namespace zigzag {

std::string to_string(EdgeType t) { return t == EdgeType::First ? "first" : "second"; }

std::string to_string(FaceClass c) {
    switch (c) {
        case FaceClass::OneOneTwoOdd: return "(1,1,2)-odd";
        case FaceClass::OneOneTwoEven: return "(1,1,2)-even";
        case FaceClass::TwoTwoTwoFirst: return "(2,2,2)-first";
        case FaceClass::TwoTwoTwoSecond: return "(2,2,2)-second";
    }
    return "?";
}

bool is_z_knotted(const ZigzagSet& zs) { return zs.size() == 1; }

bool is_z_knotted(const EmbeddedGraph& g) { return is_z_knotted(enumerate_zigzags(g)); }

EdgeType edge_type(const EmbeddedGraph& g, const ZigzagSet& zs, int edge) {
    if (!is_z_knotted(zs))
        throw precondition_error("edge types are defined only for z-knotted graphs (z-vector " +
                                 z_vector_string(zs) + ")");
    const auto& p = zs.passes(edge);
    const auto a = zs.pass_pair(p[0]);
    const auto b = zs.pass_pair(p[1]);
    if (a == b) return EdgeType::Second;
    if (a.first == b.second && a.second == b.first) return EdgeType::First;
    throw internal_error("edge passes do not traverse the edge: " +
                         g.token(g.edge(edge).u) + "," + g.token(g.edge(edge).v));
}

std::vector<Passage> face_passages(const EmbeddedGraph& g, const ZigzagSet& zs, int face) {
    std::vector<Passage> out;
    for (int zi = 0; zi < zs.size(); ++zi) {
        const auto& z = zs[zi];
        const int n = z.length();
        for (int i = 0; i < n; ++i) {
            const int a = z.seq[i], b = z.seq[(i + 1) % n], c = z.seq[(i + 2) % n];
            const auto f = g.face_of_triple(a, b, c);
            if (!f) throw internal_error("zigzag window lies on no face");
            if (*f == face) out.push_back({zi, i, {a, b, c}});
        }
    }
    return out;
}

namespace {

// passages of the unique zigzag in cyclic order starting from the one whose
// window equals `anchor`
std::vector<Passage> order_from(const std::vector<Passage>& ps, const std::array<int, 3>& anchor) {
    const int n = static_cast<int>(ps.size());
    for (int i = 0; i < n; ++i) {
        if (ps[i].triple == anchor) {
            std::vector<Passage> out;
            for (int k = 0; k < n; ++k) out.push_back(ps[(i + k) % n]);
            return out;
        }
    }
    throw internal_error("anchor passage not found on the zigzag");
}

}  // namespace

FaceClassification classify_face(const EmbeddedGraph& g, const ZigzagSet& zs, int face) {
    if (!g.is_triangulation())
        throw precondition_error("face classification requires a triangulation");
    if (!is_z_knotted(zs))
        throw precondition_error("face classification requires a z-knotted graph");

    const auto& fb = g.face(face);
    std::vector<int> second_edges;
    for (int i = 0; i < 3; ++i) {
        const int e = g.edge_index(fb[i], fb[(i + 1) % 3]);
        if (edge_type(g, zs, e) == EdgeType::Second) second_edges.push_back(e);
    }

    auto ps = face_passages(g, zs, face);
    if (ps.size() != 3)
        throw internal_error("face has " + std::to_string(ps.size()) + " passages, expected 3");

    if (second_edges.size() == 1) {
        // apex = the vertex off the second-type edge; y,z ordered by the
        // pass direction (both passes run y -> z)
        const Edge se = g.edge(second_edges[0]);
        const auto dir = zs.pass_pair(zs.passes(second_edges[0])[0]);
        const int y = dir.first, z = dir.second;
        int x = -1;
        for (int v : fb)
            if (v != se.u && v != se.v) x = v;
        const auto ordered = order_from(ps, {x, y, z});
        const std::array<int, 3> yxz{y, x, z}, yzx{y, z, x};
        FaceClass cls;
        if (ordered[1].triple == yxz && ordered[2].triple == yzx)
            cls = FaceClass::OneOneTwoOdd;
        else if (ordered[1].triple == yzx && ordered[2].triple == yxz)
            cls = FaceClass::OneOneTwoEven;
        else
            throw internal_error("(1,1,2)-face passages are not a permutation of the expected windows");
        return {cls, {x, y, z}};
    }

    if (second_edges.size() == 3) {
        // the three passages are the rotations of one directed triangle;
        // start the labels at the least vertex
        const int x = *std::min_element(fb.begin(), fb.end());
        std::array<int, 3> xyz{};
        bool found = false;
        for (const auto& p : ps) {
            if (p.triple[0] == x) {
                xyz = p.triple;
                found = true;
            }
        }
        if (!found) throw internal_error("(2,2,2)-face has no passage starting at its least vertex");
        const int y = xyz[1], z = xyz[2];
        const auto ordered = order_from(ps, xyz);
        const std::array<int, 3> zxy{z, x, y}, yzx{y, z, x};
        FaceClass cls;
        if (ordered[1].triple == zxy && ordered[2].triple == yzx)
            cls = FaceClass::TwoTwoTwoFirst;
        else if (ordered[1].triple == yzx && ordered[2].triple == zxy)
            cls = FaceClass::TwoTwoTwoSecond;
        else
            throw internal_error("(2,2,2)-face passages are not rotations of one orientation");
        return {cls, {x, y, z}};
    }

    throw internal_error("face with " + std::to_string(second_edges.size()) +
                         " second-type edges contradicts the 1-or-3 law");
}

DualityReport verify_duality(const EmbeddedGraph& g) {
    DualityReport rep;
    const auto zs = enumerate_zigzags(g);
    const auto d = dual_graph(g);
    const auto zsd = enumerate_zigzags(d.dual);

    rep.z_vector = z_vector_string(zs);
    rep.dual_z_vector = z_vector_string(zsd);
    if (rep.z_vector != rep.dual_z_vector) {
        rep.ok = false;
        rep.failures.push_back("z-vectors differ: " + rep.z_vector + " vs " + rep.dual_z_vector);
    }

    if (is_z_knotted(zs)) {
        if (!is_z_knotted(zsd)) {
            rep.ok = false;
            rep.failures.push_back("graph is z-knotted but its dual is not");
            return rep;
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            const auto t = edge_type(g, zs, e);
            const auto td = edge_type(d.dual, zsd, d.edge_to_dual_edge[e]);
            if (t == td) {
                rep.ok = false;
                rep.failures.push_back("edge {" + g.token(g.edge(e).u) + "," +
                                       g.token(g.edge(e).v) + "} keeps type " + to_string(t) +
                                       " in the dual");
            }
        }
    }
    return rep;
}

}  // namespace zigzag
