#include "zigzag/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace zigzag {

namespace {

// (degree, sorted incident face lengths) — invariant under isomorphism
using Profile = std::pair<int, std::vector<int>>;

std::vector<Profile> profiles(const EmbeddedGraph& g) {
    std::vector<Profile> p(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> sizes;
        for (int f : g.faces_at(v)) sizes.push_back(static_cast<int>(g.face(f).size()));
        std::sort(sizes.begin(), sizes.end());
        p[v] = {static_cast<int>(g.edges_at(v).size()), std::move(sizes)};
    }
    return p;
}

bool adjacent(const EmbeddedGraph& g, int u, int v) { return g.edge_index(u, v) >= 0; }

struct Search {
    const EmbeddedGraph& g1;
    const EmbeddedGraph& g2;
    std::vector<Profile> p1, p2;
    std::vector<int> order;    // g1 vertices, most-constrained-first, connected
    std::vector<int> mapping;  // g1 -> g2, -1 while unassigned
    std::vector<char> used;    // g2 side

    bool faces_match() const {
        for (const auto& f : g1.faces()) {
            std::vector<int> img(f.size());
            for (size_t i = 0; i < f.size(); ++i) img[i] = mapping[f[i]];
            const auto key = EmbeddedGraph::canonical_cycle_key(img);
            if (!std::binary_search(g2.faces().begin(), g2.faces().end(), key)) return false;
        }
        return true;
    }

    bool extend(size_t k) {
        if (k == order.size()) return faces_match();
        const int v = order[k];
        for (int w = 0; w < g2.vertex_count(); ++w) {
            if (used[w] || p1[v] != p2[w]) continue;
            bool ok = true;
            for (int e : g1.edges_at(v)) {
                const auto& ed = g1.edge(e);
                const int u = ed.u == v ? ed.v : ed.u;
                if (mapping[u] >= 0 && !adjacent(g2, mapping[u], w)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            mapping[v] = w;
            used[w] = 1;
            if (extend(k + 1)) return true;
            mapping[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic(const EmbeddedGraph& g1, const EmbeddedGraph& g2) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
        g1.face_count() != g2.face_count())
        return std::nullopt;

    Search s{g1, g2, profiles(g1), profiles(g2), {}, {}, {}};
    {
        auto m1 = s.p1, m2 = s.p2;
        std::sort(m1.begin(), m1.end());
        std::sort(m2.begin(), m2.end());
        if (m1 != m2) return std::nullopt;
    }

    // visit order: rarest profile first, then grow along adjacency
    std::map<Profile, int> freq;
    for (const auto& p : s.p1) ++freq[p];
    std::vector<char> placed(g1.vertex_count(), 0);
    int start = 0;
    for (int v = 1; v < g1.vertex_count(); ++v)
        if (freq[s.p1[v]] < freq[s.p1[start]]) start = v;
    s.order.push_back(start);
    placed[start] = 1;
    while (static_cast<int>(s.order.size()) < g1.vertex_count()) {
        int best = -1;
        for (int v = 0; v < g1.vertex_count(); ++v) {
            if (placed[v]) continue;
            bool touches = false;
            for (int e : g1.edges_at(v)) {
                const auto& ed = g1.edge(e);
                if (placed[ed.u == v ? ed.v : ed.u]) {
                    touches = true;
                    break;
                }
            }
            if (!touches) continue;
            if (best < 0 || freq[s.p1[v]] < freq[s.p1[best]]) best = v;
        }
        if (best < 0) {  // disconnected input; just take anything left
            for (int v = 0; v < g1.vertex_count() && best < 0; ++v)
                if (!placed[v]) best = v;
        }
        s.order.push_back(best);
        placed[best] = 1;
    }

    s.mapping.assign(g1.vertex_count(), -1);
    s.used.assign(g2.vertex_count(), 0);
    if (s.extend(0)) return s.mapping;
    return std::nullopt;
}

}  // namespace zigzag
