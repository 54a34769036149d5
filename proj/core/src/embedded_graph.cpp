#include "zigzag/embedded_graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace zigzag {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

bool token_less(const std::string& a, const std::string& b) {
    const bool na = all_digits(a), nb = all_digits(b);
    if (na != nb) return na;  // numeric tokens first
    if (na && nb) {
        // compare as integers without overflow: strip leading zeros, then
        // shorter digit string is smaller
        auto strip = [](const std::string& s) {
            size_t i = s.find_first_not_of('0');
            return i == std::string::npos ? std::string("0") : s.substr(i);
        };
        const std::string sa = strip(a), sb = strip(b);
        if (sa.size() != sb.size()) return sa.size() < sb.size();
        if (sa != sb) return sa < sb;
        return a < b;  // "01" vs "1"
    }
    return a < b;
}

std::vector<int> EmbeddedGraph::canonical_cycle_key(const std::vector<int>& cycle) {
    const size_t n = cycle.size();
    std::vector<int> best = cycle;
    std::vector<int> cand(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t r = 0; r < n; ++r) {
            for (size_t i = 0; i < n; ++i) {
                const size_t j = dir == 0 ? (r + i) % n : (r + n - i) % n;
                cand[i] = cycle[j];
            }
            if (cand < best) best = cand;
        }
    }
    return best;
}

EmbeddedGraph EmbeddedGraph::from_faces(const std::vector<std::vector<std::string>>& face_list) {
    if (face_list.empty()) throw build_error("face list is empty");

    EmbeddedGraph g;

    std::set<std::string, bool (*)(const std::string&, const std::string&)> toks(token_less);
    for (const auto& f : face_list) {
        if (f.size() < 3) {
            std::ostringstream os;
            os << "face of length " << f.size() << " (need at least 3 vertices)";
            throw build_error(os.str());
        }
        std::set<std::string> seen;
        for (const auto& t : f) {
            if (t.empty()) throw build_error("empty vertex token");
            if (!seen.insert(t).second)
                throw build_error("repeated vertex '" + t + "' within a face");
            toks.insert(t);
        }
    }
    g.tokens_.assign(toks.begin(), toks.end());
    for (int i = 0; i < static_cast<int>(g.tokens_.size()); ++i) g.index_[g.tokens_[i]] = i;

    for (const auto& f : face_list) {
        std::vector<int> cyc;
        cyc.reserve(f.size());
        for (const auto& t : f) cyc.push_back(g.index_.at(t));
        g.faces_.push_back(canonical_cycle_key(cyc));
    }
    std::sort(g.faces_.begin(), g.faces_.end());

    g.triangulation_ = std::all_of(g.faces_.begin(), g.faces_.end(),
                                   [](const auto& f) { return f.size() == 3; });

    // derived edges: every consecutive boundary pair, deduplicated
    for (const auto& f : g.faces_) {
        const size_t n = f.size();
        for (size_t i = 0; i < n; ++i) {
            int u = f[i], v = f[(i + 1) % n];
            if (u > v) std::swap(u, v);
            g.edge_index_.emplace(std::make_pair(u, v), -1);
        }
    }
    int e = 0;
    for (auto& [uv, idx] : g.edge_index_) {
        idx = e++;
        g.edges_.push_back({uv.first, uv.second});
    }

    g.faces_of_edge_.resize(g.edges_.size());
    g.edges_at_.resize(g.tokens_.size());
    g.faces_at_.resize(g.tokens_.size());
    for (int fi = 0; fi < static_cast<int>(g.faces_.size()); ++fi) {
        const auto& f = g.faces_[fi];
        const size_t n = f.size();
        for (size_t i = 0; i < n; ++i) {
            g.faces_at_[f[i]].push_back(fi);
            const int ei = g.edge_index(f[i], f[(i + 1) % n]);
            g.faces_of_edge_[ei].push_back(fi);
        }
    }
    for (int ei = 0; ei < static_cast<int>(g.edges_.size()); ++ei) {
        g.edges_at_[g.edges_[ei].u].push_back(ei);
        g.edges_at_[g.edges_[ei].v].push_back(ei);
    }
    return g;
}

int EmbeddedGraph::vertex_index(const std::string& token) const {
    auto it = index_.find(token);
    return it == index_.end() ? -1 : it->second;
}

int EmbeddedGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = edge_index_.find({u, v});
    return it == edge_index_.end() ? -1 : it->second;
}

int EmbeddedGraph::other_face_of_edge(int e, int f) const {
    const auto& fs = faces_of_edge_[e];
    if (fs.size() != 2)
        throw precondition_error("edge {" + tokens_[edges_[e].u] + "," + tokens_[edges_[e].v] +
                                 "} lies in " + std::to_string(fs.size()) +
                                 " faces, not 2 (invalid embedding)");
    if (fs[0] == f) return fs[1];
    if (fs[1] == f) return fs[0];
    throw internal_error("other_face_of_edge: face does not contain the edge");
}

int EmbeddedGraph::boundary_neighbor(int f, int v, int exclude) const {
    const auto& cyc = faces_[f];
    const size_t n = cyc.size();
    for (size_t i = 0; i < n; ++i) {
        if (cyc[i] != v) continue;
        const int a = cyc[(i + 1) % n];
        const int b = cyc[(i + n - 1) % n];
        if (a != exclude) return a;
        if (b != exclude) return b;
        return -1;
    }
    return -1;
}

std::optional<int> EmbeddedGraph::face_of_triple(int x, int y, int z) const {
    const int exy = edge_index(x, y);
    const int eyz = edge_index(y, z);
    if (exy < 0 || eyz < 0) return std::nullopt;
    for (int f : faces_of_edge_[exy])
        for (int f2 : faces_of_edge_[eyz])
            if (f == f2) return f;
    return std::nullopt;
}

int EmbeddedGraph::find_face(const std::vector<std::string>& boundary) const {
    std::vector<int> cyc;
    cyc.reserve(boundary.size());
    for (const auto& t : boundary) {
        const int v = vertex_index(t);
        if (v < 0) return -1;
        cyc.push_back(v);
    }
    const auto key = canonical_cycle_key(cyc);
    const auto it = std::lower_bound(faces_.begin(), faces_.end(), key);
    if (it != faces_.end() && *it == key) return static_cast<int>(it - faces_.begin());
    return -1;
}

int EmbeddedGraph::find_face_by_vertex_set(const std::vector<std::string>& verts) const {
    std::set<int> want;
    for (const auto& t : verts) {
        const int v = vertex_index(t);
        if (v < 0) return -1;
        want.insert(v);
    }
    int found = -1;
    for (int f = 0; f < face_count(); ++f) {
        if (faces_[f].size() != want.size()) continue;
        if (std::set<int>(faces_[f].begin(), faces_[f].end()) == want) {
            if (found >= 0) return -1;  // ambiguous
            found = f;
        }
    }
    return found;
}

namespace {

std::string face_str(const EmbeddedGraph& g, int f) {
    std::string s = "(";
    const auto& cyc = g.face(f);
    for (size_t i = 0; i < cyc.size(); ++i) {
        if (i) s += ",";
        s += g.token(cyc[i]);
    }
    return s + ")";
}

std::string edge_str(const EmbeddedGraph& g, int u, int v) {
    return "{" + g.token(u) + "," + g.token(v) + "}";
}

}  // namespace

ValidationReport validate_embedding(const EmbeddedGraph& g) {
    ValidationReport rep;
    auto fail = [&rep](const std::string& rule, const std::string& detail) {
        rep.ok = false;
        rep.violations.push_back({rule, detail});
    };

    // connectivity over edges
    {
        std::vector<char> seen(g.vertex_count(), 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int e : g.edges_at(v)) {
                const auto& ed = g.edge(e);
                const int w = ed.u == v ? ed.v : ed.u;
                if (!seen[w]) {
                    seen[w] = 1;
                    ++reached;
                    stack.push_back(w);
                }
            }
        }
        if (reached != g.vertex_count())
            fail("connected", std::to_string(g.vertex_count() - reached) +
                                  " vertices unreachable from " + g.token(0));
    }

    // every edge in exactly two distinct faces
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& fs = g.faces_of_edge(e);
        if (fs.size() != 2)
            fail("edge-face-count", "edge " + edge_str(g, g.edge(e).u, g.edge(e).v) + " lies in " +
                                        std::to_string(fs.size()) + " faces");
    }

    // pairwise intersections: at most two common vertices, and two common
    // vertices only when they form a boundary edge of both faces
    for (int f1 = 0; f1 < g.face_count(); ++f1) {
        std::set<int> s1(g.face(f1).begin(), g.face(f1).end());
        for (int f2 = f1 + 1; f2 < g.face_count(); ++f2) {
            std::vector<int> common;
            for (int v : g.face(f2))
                if (s1.count(v)) common.push_back(v);
            if (common.size() > 2) {
                fail("face-intersection", "faces " + face_str(g, f1) + " and " + face_str(g, f2) +
                                              " share " + std::to_string(common.size()) +
                                              " vertices");
            } else if (common.size() == 2) {
                const int e = g.edge_index(common[0], common[1]);
                bool edge_of_both = false;
                if (e >= 0) {
                    const auto& fs = g.faces_of_edge(e);
                    edge_of_both = std::count(fs.begin(), fs.end(), f1) &&
                                   std::count(fs.begin(), fs.end(), f2);
                }
                if (!edge_of_both)
                    fail("face-intersection",
                         "faces " + face_str(g, f1) + " and " + face_str(g, f2) +
                             " share two vertices " + edge_str(g, common[0], common[1]) +
                             " that are not a common boundary edge");
            }
        }
    }

    // single disc of faces around every vertex: the incident (edge,face)
    // pairs must close into one cycle, otherwise the "surface" is pinched
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& fs = g.faces_at(v);
        const auto& es = g.edges_at(v);
        if (fs.empty() || es.size() < 3) {
            fail("vertex-disc", "vertex " + g.token(v) + " has degree " +
                                    std::to_string(es.size()) + " (need at least 3)");
            continue;
        }
        bool local_ok = true;
        for (int e : es)
            if (g.faces_of_edge(e).size() != 2) local_ok = false;
        if (!local_ok) continue;  // already reported by edge-face-count

        // walk face -> other edge at v -> other face
        const int f0 = fs[0];
        int e0 = -1;
        for (int e : es) {
            const auto& fe = g.faces_of_edge(e);
            if (std::count(fe.begin(), fe.end(), f0)) {
                e0 = e;
                break;
            }
        }
        int f = f0, e = e0;
        size_t steps = 0;
        do {
            // the other boundary edge of f at v
            const int a = g.boundary_neighbor(f, v, -1);
            const int b = g.boundary_neighbor(f, v, a);
            const int ea = g.edge_index(v, a);
            const int eb = b >= 0 ? g.edge_index(v, b) : -1;
            const int enext = (ea == e) ? eb : ea;
            if (enext < 0) {
                local_ok = false;
                break;
            }
            f = g.other_face_of_edge(enext, f);
            e = enext;
            if (++steps > fs.size() * 2 + 2) {
                local_ok = false;
                break;
            }
        } while (!(f == f0 && e == e0));
        if (!local_ok || steps != fs.size())
            fail("vertex-disc", "faces around vertex " + g.token(v) +
                                    " do not close into a single disc");
    }

    return rep;
}

void require_valid(const EmbeddedGraph& g, const std::string& context) {
    const auto rep = validate_embedding(g);
    if (rep.ok) return;
    std::string msg = context + ": invalid embedding:";
    for (const auto& v : rep.violations) msg += "\n  [" + v.rule + "] " + v.detail;
    throw precondition_error(msg);
}

int euler_characteristic(const EmbeddedGraph& g) {
    return g.vertex_count() - g.edge_count() + g.face_count();
}

}  // namespace zigzag
