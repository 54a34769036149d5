// Test-only reference tracer.  Works directly on token face lists with
// linear scans and string comparisons so it shares no code path with the
// library; used to cross-check traces and enumerations on small inputs.
#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Seq = std::vector<std::string>;
using Faces = std::vector<Seq>;

inline bool face_has_edge(const Seq& f, const std::string& a, const std::string& b) {
    const size_t n = f.size();
    for (size_t i = 0; i < n; ++i) {
        const auto& u = f[i];
        const auto& v = f[(i + 1) % n];
        if ((u == a && v == b) || (u == b && v == a)) return true;
    }
    return false;
}

inline int face_of_triple(const Faces& fs, const std::string& x, const std::string& y,
                          const std::string& z) {
    int found = -1;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (face_has_edge(fs[i], x, y) && face_has_edge(fs[i], y, z)) {
            if (found >= 0) throw std::runtime_error("oracle: triple on two faces");
            found = static_cast<int>(i);
        }
    }
    if (found < 0) throw std::runtime_error("oracle: triple on no face");
    return found;
}

inline std::array<std::string, 3> step(const Faces& fs, const std::array<std::string, 3>& s) {
    const auto& [x, y, z] = s;
    const int cur = face_of_triple(fs, x, y, z);
    int other = -1;
    for (size_t i = 0; i < fs.size(); ++i) {
        if (static_cast<int>(i) != cur && face_has_edge(fs[i], y, z)) {
            if (other >= 0) throw std::runtime_error("oracle: edge in three faces");
            other = static_cast<int>(i);
        }
    }
    if (other < 0) throw std::runtime_error("oracle: edge in one face");
    const Seq& f = fs[other];
    const size_t n = f.size();
    for (size_t i = 0; i < n; ++i) {
        if (f[i] != z) continue;
        const std::string& a = f[(i + 1) % n];
        const std::string& b = f[(i + n - 1) % n];
        return {y, z, a != y ? a : b};
    }
    throw std::runtime_error("oracle: z not on the far face");
}

inline Seq trace(const Faces& fs, std::array<std::string, 3> seed) {
    Seq out;
    auto s = seed;
    do {
        out.push_back(s[0]);
        s = step(fs, s);
        if (out.size() > 100000) throw std::runtime_error("oracle: trace does not close");
    } while (s != seed);
    return out;
}

// least rotation over both directions, plain string order
inline Seq canon(const Seq& cyc) {
    const size_t n = cyc.size();
    Seq best = cyc, cand(n);
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t r = 0; r < n; ++r) {
            for (size_t i = 0; i < n; ++i)
                cand[i] = cyc[dir == 0 ? (r + i) % n : (r + n - i) % n];
            if (cand < best) best = cand;
        }
    }
    return best;
}

inline std::vector<Seq> enumerate(const Faces& fs) {
    std::set<Seq> out;
    for (const auto& f : fs) {
        const size_t n = f.size();
        for (size_t i = 0; i < n; ++i) {
            const std::string x = f[(i + n - 1) % n], y = f[i], z = f[(i + 1) % n];
            out.insert(canon(trace(fs, {x, y, z})));
            out.insert(canon(trace(fs, {z, y, x})));
        }
    }
    return {out.begin(), out.end()};
}

}  // namespace oracle
