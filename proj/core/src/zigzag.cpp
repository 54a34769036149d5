#include "zigzag/zigzag.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zigzag {

ZigzagStepState make_step_state(const EmbeddedGraph& g, int x, int y, int z) {
    if (x == y || y == z || x == z)
        throw precondition_error("zigzag state needs three distinct vertices");
    const auto f = g.face_of_triple(x, y, z);
    if (!f)
        throw precondition_error("no face contains " + g.token(x) + "," + g.token(y) + "," +
                                 g.token(z) + " with consecutive boundary edges");
    return {x, y, z, *f};
}

ZigzagStepState zigzag_step(const EmbeddedGraph& g, const ZigzagStepState& s) {
    const int eyz = g.edge_index(s.y, s.z);
    if (eyz < 0) throw precondition_error("zigzag state has a non-edge");
    const int nf = g.other_face_of_edge(eyz, s.face);
    const int w = g.boundary_neighbor(nf, s.z, s.y);
    if (w < 0) throw internal_error("zigzag_step: no boundary neighbor on the far face");
    return {s.y, s.z, w, nf};
}

std::vector<int> canonical_cycle(const std::vector<int>& cyc) {
    return EmbeddedGraph::canonical_cycle_key(cyc);
}

namespace {

// least rotation without direction change (canonical_cycle also flips)
std::vector<int> min_rotation(const std::vector<int>& cyc) {
    const size_t n = cyc.size();
    std::vector<int> best = cyc, cand(n);
    for (size_t r = 1; r < n; ++r) {
        for (size_t i = 0; i < n; ++i) cand[i] = cyc[(r + i) % n];
        if (cand < best) best = cand;
    }
    return best;
}

// raw orbit of the step rule starting at seed, as the vertex sequence
std::vector<int> trace_raw(const EmbeddedGraph& g, const ZigzagStepState& seed) {
    std::vector<int> seq;
    ZigzagStepState s = seed;
    do {
        seq.push_back(s.x);
        s = zigzag_step(g, s);
        if (seq.size() > 8 * g.edge_count() + 8u)
            throw internal_error("zigzag trace failed to close");
    } while (!(s == seed));
    if (seq.size() <= 3)
        throw internal_error("closed trace of length " + std::to_string(seq.size()) +
                             " (zigzags must be longer than 3)");
    return seq;
}

}  // namespace

Zigzag trace_zigzag(const EmbeddedGraph& g, const ZigzagStepState& seed) {
    return {canonical_cycle(trace_raw(g, seed))};
}

ZigzagSet::ZigzagSet(const EmbeddedGraph& g, std::vector<Zigzag> zs) : zigzags_(std::move(zs)) {
    std::sort(zigzags_.begin(), zigzags_.end(), [](const Zigzag& a, const Zigzag& b) {
        if (a.seq.size() != b.seq.size()) return a.seq.size() < b.seq.size();
        return a.seq < b.seq;
    });
    for (const auto& z : zigzags_) z_vector_.push_back(z.length());

    passes_.assign(g.edge_count(), {EdgePass{}, EdgePass{}});
    std::vector<int> count(g.edge_count(), 0);
    int total = 0;
    for (int zi = 0; zi < size(); ++zi) {
        const auto& z = zigzags_[zi];
        for (int i = 0; i < z.length(); ++i) {
            const auto [u, v] = z.traversal(i);
            const int e = g.edge_index(u, v);
            if (e < 0) throw internal_error("zigzag traverses a non-edge");
            if (count[e] >= 2)
                throw internal_error("edge {" + g.token(g.edge(e).u) + "," + g.token(g.edge(e).v) +
                                     "} traversed more than twice");
            passes_[e][count[e]++] = {zi, i};
            ++total;
        }
    }
    if (total != 2 * g.edge_count())
        throw internal_error("zigzag traversals cover " + std::to_string(total) +
                             " edge passes, expected " + std::to_string(2 * g.edge_count()));
}

ZigzagSet enumerate_zigzags(const EmbeddedGraph& g) {
    // Every traversal state is an ordered triple consecutive on a face;
    // visiting an orbit marks the states of the zigzag and of its reversal,
    // so each {Z, Z^-1} pair is traced exactly once.
    std::set<std::array<int, 3>> visited;
    std::vector<Zigzag> out;

    for (int fi = 0; fi < g.face_count(); ++fi) {
        const auto& f = g.face(fi);
        const int n = static_cast<int>(f.size());
        for (int i = 0; i < n; ++i) {
            for (int dir = 0; dir < 2; ++dir) {
                const int x = f[(i + n - 1) % n], y = f[i], z = f[(i + 1) % n];
                const std::array<int, 3> key =
                    dir == 0 ? std::array<int, 3>{x, y, z} : std::array<int, 3>{z, y, x};
                if (visited.count(key)) continue;

                const auto seq = trace_raw(g, make_step_state(g, key[0], key[1], key[2]));
                const int len = static_cast<int>(seq.size());
                for (int p = 0; p < len; ++p) {
                    const int a = seq[p], b = seq[(p + 1) % len], c = seq[(p + 2) % len];
                    visited.insert({a, b, c});
                    visited.insert({c, b, a});
                }
                const std::vector<int> rev(seq.rbegin(), seq.rend());
                if (min_rotation(seq) == min_rotation(rev))
                    throw internal_error("zigzag equals its own reversal: " +
                                         cycle_string(g, seq));
                out.push_back({canonical_cycle(seq)});
            }
        }
    }
    return ZigzagSet(g, std::move(out));
}

std::string z_vector_string(const std::vector<int>& lengths) {
    std::map<int, int> mult;
    for (int l : lengths) ++mult[l];
    std::ostringstream os;
    bool first = true;
    for (const auto& [len, m] : mult) {
        if (!first) os << ",";
        first = false;
        os << len;
        if (m > 1) os << "^" << m;
    }
    return os.str();
}

std::string z_vector_string(const ZigzagSet& zs) { return z_vector_string(zs.z_vector()); }

std::string cycle_string(const EmbeddedGraph& g, const std::vector<int>& cyc) {
    std::string s;
    for (size_t i = 0; i < cyc.size(); ++i) {
        if (i) s += ",";
        s += g.token(cyc[i]);
    }
    return s;
}

}  // namespace zigzag
