#pragma once

// Vertex reachability along directed edges, the reachable subcomplex of
// Def-6 type, and the stuck/source vertices reported as deadlocks and
// unreachable states.

#include <climits>
#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "dicube/cube.hpp"

namespace dicube {

namespace detail {

inline void require_vertex(const CubicalComplex& K, const Vertex& v, const char* role) {
    if (static_cast<int>(v.size()) != K.dim())
        throw DimensionMismatch(std::string(role) + " vertex has the wrong dimension");
    if (!K.has_vertex(v))
        throw NotAVertex(std::string(role) + " vertex " + format_vertex(v) +
                         " is not in the complex");
}

} // namespace detail

inline bool has_out_edge(const CubicalComplex& K, const Vertex& v) {
    for (int i = 0; i < K.dim(); ++i)
        if (K.contains(Cube{v, 1u << i})) return true;
    return false;
}

inline bool has_in_edge(const CubicalComplex& K, const Vertex& v) {
    for (int i = 0; i < K.dim(); ++i) {
        Cube e{v, 1u << i};
        --e.base[i];
        if (K.contains(e)) return true;
    }
    return false;
}

// Vertices reachable from w by sequences of directed edges [u, u+e_i];
// includes w.
inline std::set<Vertex> reachable_vertices(const CubicalComplex& K, const Vertex& w) {
    detail::require_vertex(K, w, "start");
    std::set<Vertex> seen{w};
    std::deque<Vertex> work{w};
    while (!work.empty()) {
        Vertex u = std::move(work.front());
        work.pop_front();
        for (int i = 0; i < K.dim(); ++i) {
            if (!K.contains(Cube{u, 1u << i})) continue;
            Vertex next = u;
            ++next[i];
            if (seen.insert(next).second) work.push_back(std::move(next));
        }
    }
    return seen;
}

// Vertices from which f is reachable (reverse edge BFS); includes f.
inline std::set<Vertex> coreachable_vertices(const CubicalComplex& K, const Vertex& f) {
    detail::require_vertex(K, f, "final");
    std::set<Vertex> seen{f};
    std::deque<Vertex> work{f};
    while (!work.empty()) {
        Vertex u = std::move(work.front());
        work.pop_front();
        for (int i = 0; i < K.dim(); ++i) {
            Cube e{u, 1u << i};
            --e.base[i];
            if (!K.contains(e)) continue;
            Vertex prev = u;
            --prev[i];
            if (seen.insert(prev).second) work.push_back(std::move(prev));
        }
    }
    return seen;
}

// Subcomplex of cubes whose minimal vertex is reachable from w. Every vertex
// of such a cube is reachable through the cube's own edges, so the result is
// face-closed.
inline CubicalComplex reachable_subcomplex(const CubicalComplex& K, const Vertex& w) {
    const std::set<Vertex> reach = reachable_vertices(K, w);
    CubicalComplex out(K.dim());
    for (const Cube& c : K.cubes())
        if (reach.count(c.base)) out.insert(c);
    return out;
}

// Stuck states: no action is enabled (no outgoing edge). The designated
// final vertex is exempt; when none is given, the complex's maximal vertex
// (if it has one) plays that role.
inline std::set<Vertex> deadlock_vertices(const CubicalComplex& K,
                                          const std::optional<Vertex>& final_vertex) {
    std::optional<Vertex> final = final_vertex;
    if (final) {
        detail::require_vertex(K, *final, "final");
    } else if (!K.empty()) {
        Vertex mx(K.dim(), INT_MIN);
        for (const Vertex& v : K.vertices())
            for (int i = 0; i < K.dim(); ++i) mx[i] = std::max(mx[i], v[i]);
        if (K.has_vertex(mx)) final = mx;
    }
    std::set<Vertex> out;
    for (const Vertex& v : K.vertices()) {
        if (final && v == *final) continue;
        if (!has_out_edge(K, v)) out.insert(v);
    }
    return out;
}

// Source states other than the start: no action produces them (no incoming
// edge), so no execution from w ever visits them.
inline std::set<Vertex> unreachable_vertices(const CubicalComplex& K, const Vertex& w) {
    detail::require_vertex(K, w, "start");
    std::set<Vertex> out;
    for (const Vertex& v : K.vertices()) {
        if (v == w) continue;
        if (!has_in_edge(K, v)) out.insert(v);
    }
    return out;
}

struct ReachabilityReport {
    std::set<Vertex> reachable;
    std::set<Vertex> coreachable; // populated when a final vertex is given
    std::set<Vertex> deadlocks;
    std::set<Vertex> unreachable;
};

inline ReachabilityReport reachability_report(const CubicalComplex& K, const Vertex& w,
                                              const std::optional<Vertex>& final_vertex) {
    ReachabilityReport r;
    r.reachable = reachable_vertices(K, w);
    if (final_vertex) r.coreachable = coreachable_vertices(K, *final_vertex);
    r.deadlocks = deadlock_vertices(K, final_vertex);
    r.unreachable = unreachable_vertices(K, w);
    return r;
}

// Coordinate reversal about the componentwise maximum of all vertices:
// deadlocks and unreachable states trade places under this map.
inline CubicalComplex reverse_complex(const CubicalComplex& K) {
    CubicalComplex out(K.dim());
    if (K.empty()) return out;
    Vertex mx(K.dim(), INT_MIN);
    for (const Cube& c : K.cubes()) {
        const Vertex t = c.top();
        for (int i = 0; i < K.dim(); ++i) mx[i] = std::max(mx[i], t[i]);
    }
    for (const Cube& c : K.cubes()) {
        Cube rc{Vertex(K.dim()), c.extent};
        const Vertex t = c.top();
        for (int i = 0; i < K.dim(); ++i) rc.base[i] = mx[i] - t[i];
        out.insert(std::move(rc));
    }
    return out;
}

inline Vertex reverse_vertex(const CubicalComplex& K, const Vertex& v) {
    Vertex mx(K.dim(), INT_MIN);
    for (const Cube& c : K.cubes()) {
        const Vertex t = c.top();
        for (int i = 0; i < K.dim(); ++i) mx[i] = std::max(mx[i], t[i]);
    }
    Vertex out(K.dim());
    for (int i = 0; i < K.dim(); ++i) out[i] = mx[i] - v[i];
    return out;
}

} // namespace dicube
