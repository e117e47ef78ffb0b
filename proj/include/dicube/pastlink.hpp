#pragma once

// Past links: the simplicial complex on directions j in {0,1}^n with
// [v-j, v] contained in K and in the box [w, v]. The family of qualifying
// masks is downward closed, so it is enumerated by growing masks one bit
// at a time above the highest set bit.

#include <map>
#include <set>
#include <thread>
#include <vector>

#include "dicube/cube.hpp"
#include "dicube/simplicial.hpp"

namespace dicube {

inline SimplicialComplex past_link(const CubicalComplex& K, const Vertex& w,
                                   const Vertex& v) {
    if (static_cast<int>(w.size()) != K.dim() || static_cast<int>(v.size()) != K.dim())
        throw DimensionMismatch("past link endpoints must match the ambient dimension");
    if (!K.has_vertex(v))
        throw NotAVertex("past link requested at " + format_vertex(v) +
                         " which is not a vertex of the complex");

    const int n = K.dim();
    if (!vertex_leq(w, v)) return SimplicialComplex(n);

    // Candidate directions: single steps into v that stay in [w, v].
    std::vector<int> dirs;
    for (int i = 0; i < n; ++i) {
        if (w[i] > v[i] - 1) continue;
        Cube edge{v, 1u << i};
        --edge.base[i];
        if (K.contains(edge)) dirs.push_back(i);
    }

    std::set<SimplexMask> members;
    std::vector<SimplexMask> frontier;
    for (int i : dirs) {
        members.insert(1u << i);
        frontier.push_back(1u << i);
    }
    while (!frontier.empty()) {
        std::vector<SimplexMask> next;
        for (SimplexMask m : frontier) {
            for (int b : dirs) {
                const SimplexMask bit = 1u << b;
                if (bit <= m) continue; // only grow above the highest set bit
                const SimplexMask j = m | bit;
                Cube c{v, j};
                for (int i = 0; i < n; ++i)
                    if (j & (1u << i)) --c.base[i];
                if (K.contains(c)) {
                    members.insert(j);
                    next.push_back(j);
                }
            }
        }
        frontier = std::move(next);
    }
    return SimplicialComplex::from_closed(n, members);
}

// Past link of every vertex of K; vertices at or below/incomparable to w
// come out empty. Vertices are processed in sorted order, optionally split
// across threads (results are merged back deterministically).
inline std::map<Vertex, SimplicialComplex>
past_links_all(const CubicalComplex& K, const Vertex& w, unsigned threads = 1) {
    const std::vector<Vertex> verts = K.vertices();
    std::vector<SimplicialComplex> links(verts.size());

    auto run = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) links[i] = past_link(K, w, verts[i]);
    };

    if (threads <= 1 || verts.size() < 2 * threads) {
        run(0, verts.size());
    } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (verts.size() + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            const std::size_t b = t * chunk;
            if (b >= verts.size()) break;
            pool.emplace_back(run, b, std::min(verts.size(), b + chunk));
        }
        for (auto& th : pool) th.join();
    }

    std::map<Vertex, SimplicialComplex> out;
    for (std::size_t i = 0; i < verts.size(); ++i) out.emplace(verts[i], std::move(links[i]));
    return out;
}

} // namespace dicube
