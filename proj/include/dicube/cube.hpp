#pragma once

// Euclidean cubical complexes in Z^n. An elementary cube [p, p+e] with
// e in {0,1}^n is keyed by its base vertex p and the extent bitmask e;
// a complex stores every cube explicitly so face and membership queries
// are plain hash lookups. Ambient dimension is capped at 32 so extents
// fit in one machine word.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "dicube/errors.hpp"

namespace dicube {

inline constexpr int kMaxDim = 32;

using Vertex = std::vector<int>;
using ExtentMask = std::uint32_t;

inline bool vertex_leq(const Vertex& a, const Vertex& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline std::string format_vertex(const Vertex& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

struct Cube {
    Vertex base;
    ExtentMask extent = 0;

    int ambient_dim() const { return static_cast<int>(base.size()); }
    int dim() const { return std::popcount(extent); }

    Vertex top() const {
        Vertex t = base;
        for (int i = 0; i < ambient_dim(); ++i)
            if (extent & (1u << i)) ++t[i];
        return t;
    }

    bool is_vertex() const { return extent == 0; }

    friend bool operator==(const Cube& a, const Cube& b) {
        return a.extent == b.extent && a.base == b.base;
    }
};

// Lexicographic: base coordinates first, then extent as a 0/1 vector
// (coordinate 0 is the most significant position, matching the JSON layout).
inline bool extent_vec_less(ExtentMask a, ExtentMask b, int n) {
    for (int i = 0; i < n; ++i) {
        const unsigned ai = (a >> i) & 1u, bi = (b >> i) & 1u;
        if (ai != bi) return ai < bi;
    }
    return false;
}

inline bool cube_less(const Cube& a, const Cube& b) {
    if (a.base != b.base) return a.base < b.base;
    return extent_vec_less(a.extent, b.extent, a.ambient_dim());
}

struct CubeLess {
    bool operator()(const Cube& a, const Cube& b) const { return cube_less(a, b); }
};

struct VertexHash {
    std::size_t operator()(const Vertex& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct CubeHash {
    std::size_t operator()(const Cube& c) const {
        std::size_t h = VertexHash{}(c.base);
        h ^= c.extent + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return h;
    }
};

// [inner] is contained in [outer] as a closed box.
inline bool cube_contains(const Cube& outer, const Cube& inner) {
    if (outer.ambient_dim() != inner.ambient_dim()) return false;
    for (int i = 0; i < outer.ambient_dim(); ++i) {
        const int olo = outer.base[i], ohi = olo + ((outer.extent >> i) & 1);
        const int ilo = inner.base[i], ihi = ilo + ((inner.extent >> i) & 1);
        if (ilo < olo || ihi > ohi) return false;
    }
    return true;
}

// All 3^dim(c) - 1 proper faces: per spanned coordinate keep it, drop it
// at the base, or drop it at base+1.
inline std::vector<Cube> faces(const Cube& c) {
    std::vector<int> dirs;
    for (int i = 0; i < c.ambient_dim(); ++i)
        if (c.extent & (1u << i)) dirs.push_back(i);

    std::vector<Cube> out;
    const int k = static_cast<int>(dirs.size());
    std::vector<int> choice(dirs.size(), 0); // 0 keep, 1 drop at base, 2 drop at top
    while (true) {
        int pos = k - 1;
        while (pos >= 0 && choice[pos] == 2) { choice[pos] = 0; --pos; }
        if (pos < 0) break;
        ++choice[pos];

        Cube f = c;
        for (int d = 0; d < k; ++d) {
            if (choice[d] == 0) continue;
            f.extent &= ~(1u << dirs[d]);
            if (choice[d] == 2) ++f.base[dirs[d]];
        }
        out.push_back(std::move(f));
    }
    return out;
}

class CubicalComplex {
public:
    CubicalComplex() = default;
    explicit CubicalComplex(int dim) : dim_(dim) {
        if (dim < 0 || dim > kMaxDim)
            throw DimensionMismatch("ambient dimension must be in [0, 32], got " +
                                    std::to_string(dim));
    }

    int dim() const { return dim_; }
    std::size_t size() const { return cubes_.size(); }
    bool empty() const { return cubes_.empty(); }

    bool contains(const Cube& c) const { return cubes_.count(c) != 0; }
    bool has_vertex(const Vertex& v) const { return contains(Cube{v, 0}); }

    const std::unordered_set<Cube, CubeHash>& cubes() const { return cubes_; }

    void insert(Cube c) {
        check_cube(c);
        cubes_.insert(std::move(c));
    }

    void erase(const Cube& c) { cubes_.erase(c); }

    std::vector<Cube> sorted_cubes() const {
        std::vector<Cube> v(cubes_.begin(), cubes_.end());
        std::sort(v.begin(), v.end(), CubeLess{});
        return v;
    }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> v;
        for (const Cube& c : cubes_)
            if (c.is_vertex()) v.push_back(c.base);
        std::sort(v.begin(), v.end());
        return v;
    }

    void check_cube(const Cube& c) const {
        if (c.ambient_dim() != dim_)
            throw DimensionMismatch("cube of ambient dimension " +
                                    std::to_string(c.ambient_dim()) +
                                    " in complex of dimension " + std::to_string(dim_));
        if (dim_ < kMaxDim && (c.extent >> dim_) != 0)
            throw DimensionMismatch("extent uses coordinates beyond the ambient dimension");
    }

private:
    int dim_ = 0;
    std::unordered_set<Cube, CubeHash> cubes_;
};

// Face closure of the given cubes; idempotent.
inline CubicalComplex complex_from_maximal(int n, const std::vector<Cube>& cubes) {
    CubicalComplex K(n);
    std::deque<Cube> work(cubes.begin(), cubes.end());
    for (const Cube& c : work) K.check_cube(c);
    while (!work.empty()) {
        Cube c = std::move(work.front());
        work.pop_front();
        if (K.contains(c)) continue;
        for (Cube f : faces(c))
            if (!K.contains(f)) work.push_back(std::move(f));
        K.insert(std::move(c));
    }
    return K;
}

// Cofaces of c of dimension dim(c)+1 that belong to K.
inline std::vector<Cube> immediate_cofaces(const CubicalComplex& K, const Cube& c) {
    std::vector<Cube> out;
    for (int i = 0; i < K.dim(); ++i) {
        if (c.extent & (1u << i)) continue;
        Cube up = c;
        up.extent |= 1u << i;
        if (K.contains(up)) out.push_back(up);
        --up.base[i];
        if (K.contains(up)) out.push_back(std::move(up));
    }
    return out;
}

inline bool is_maximal(const CubicalComplex& K, const Cube& c) {
    return immediate_cofaces(K, c).empty();
}

inline std::vector<Cube> maximal_cubes(const CubicalComplex& K) {
    std::vector<Cube> out;
    for (const Cube& c : K.cubes())
        if (is_maximal(K, c)) out.push_back(c);
    std::sort(out.begin(), out.end(), CubeLess{});
    return out;
}

// All maximal cubes of K containing t (t itself when t is maximal).
// Walks up through immediate cofaces; face closure guarantees every
// containing cube is reached this way.
inline std::vector<Cube> maximal_cofaces(const CubicalComplex& K, const Cube& t) {
    if (!K.contains(t)) throw NotInComplex("cube not in complex");
    std::vector<Cube> out;
    std::unordered_set<Cube, CubeHash> seen{t};
    std::deque<Cube> work{t};
    while (!work.empty()) {
        Cube c = std::move(work.front());
        work.pop_front();
        auto up = immediate_cofaces(K, c);
        if (up.empty()) {
            out.push_back(std::move(c));
            continue;
        }
        for (Cube& u : up)
            if (seen.insert(u).second) work.push_back(std::move(u));
    }
    std::sort(out.begin(), out.end(), CubeLess{});
    return out;
}

// Subcomplex of cubes lying entirely inside the box [w, v].
inline CubicalComplex interval_restrict(const CubicalComplex& K, const Vertex& w,
                                        const Vertex& v) {
    if (static_cast<int>(w.size()) != K.dim() || static_cast<int>(v.size()) != K.dim())
        throw DimensionMismatch("interval endpoints must match the ambient dimension");
    if (!vertex_leq(w, v))
        throw OrderViolation("interval [w, v] requires w ⪯ v");
    CubicalComplex out(K.dim());
    for (const Cube& c : K.cubes()) {
        bool inside = true;
        for (int i = 0; i < K.dim() && inside; ++i) {
            const int lo = c.base[i], hi = lo + ((c.extent >> i) & 1);
            if (lo < w[i] || hi > v[i]) inside = false;
        }
        if (inside) out.insert(c);
    }
    return out;
}

inline bool is_face_closed(const CubicalComplex& K) {
    for (const Cube& c : K.cubes())
        for (const Cube& f : faces(c))
            if (!K.contains(f)) return false;
    return true;
}

} // namespace dicube
