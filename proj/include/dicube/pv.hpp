#pragma once

// State-space cubical complexes of PV programs: processes are ordered lists
// of lock (P) and release (V) actions on capacity-limited resources. The
// complex is the ambient grid minus every cube meeting the interior of the
// forbidden region, computed combinatorially on the unit-cell grid.

#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "dicube/cube.hpp"

namespace dicube {

struct Action {
    bool lock = true; // P when true, V when false
    std::string resource;
};

struct PVProgram {
    std::vector<std::pair<std::string, int>> resources; // (name, capacity)
    std::vector<std::vector<Action>> processes;
};

struct ForbiddenBox {
    Vertex lo, hi;
};

inline void validate_program(const PVProgram& p) {
    std::map<std::string, int> capacity;
    for (const auto& [name, cap] : p.resources) {
        if (name.empty()) throw InvalidProgram("resource with empty name");
        if (cap <= 0) throw InvalidProgram("resource " + name + " has non-positive capacity");
        if (!capacity.emplace(name, cap).second)
            throw InvalidProgram("duplicate resource " + name);
    }
    if (p.processes.empty()) throw InvalidProgram("program has no processes");
    if (p.processes.size() > static_cast<std::size_t>(kMaxDim))
        throw InvalidProgram("more than 32 processes");
    for (std::size_t i = 0; i < p.processes.size(); ++i) {
        std::map<std::string, bool> held;
        for (const Action& a : p.processes[i]) {
            if (!capacity.count(a.resource))
                throw InvalidProgram("process " + std::to_string(i) +
                                     " references unknown resource " + a.resource);
            if (a.lock) {
                if (held[a.resource])
                    throw InvalidProgram("process " + std::to_string(i) + " re-locks held resource " +
                                         a.resource);
                held[a.resource] = true;
            } else {
                if (!held[a.resource])
                    throw InvalidProgram("process " + std::to_string(i) + " releases unheld resource " +
                                         a.resource);
                held[a.resource] = false;
            }
        }
        for (const auto& [res, h] : held)
            if (h)
                throw InvalidProgram("process " + std::to_string(i) + " never releases " + res);
    }
}

namespace detail {

// Hold intervals of `resource` per process: [position of P, position of V],
// positions 1-based in the action list.
inline std::vector<std::vector<std::pair<int, int>>>
hold_intervals(const PVProgram& p, const std::string& resource) {
    std::vector<std::vector<std::pair<int, int>>> out(p.processes.size());
    for (std::size_t i = 0; i < p.processes.size(); ++i) {
        int open = -1;
        for (std::size_t k = 0; k < p.processes[i].size(); ++k) {
            const Action& a = p.processes[i][k];
            if (a.resource != resource) continue;
            if (a.lock) open = static_cast<int>(k) + 1;
            else {
                out[i].emplace_back(open, static_cast<int>(k) + 1);
                open = -1;
            }
        }
    }
    return out;
}

inline void subsets_of_size(int n, int k, std::vector<int>& cur,
                            const std::function<void(const std::vector<int>&)>& fn,
                            int from = 0) {
    if (static_cast<int>(cur.size()) == k) {
        fn(cur);
        return;
    }
    for (int i = from; i <= n - (k - static_cast<int>(cur.size())); ++i) {
        cur.push_back(i);
        subsets_of_size(n, k, cur, fn, i + 1);
        cur.pop_back();
    }
}

} // namespace detail

// One box per capacity violation: for each resource of capacity c and each
// (c+1)-subset of processes holding it, the product of the chosen hold
// intervals with the full axis range elsewhere.
inline std::vector<ForbiddenBox> forbidden_boxes(const PVProgram& p) {
    validate_program(p);
    const int n = static_cast<int>(p.processes.size());
    std::vector<int> axis_len(n);
    for (int i = 0; i < n; ++i) axis_len[i] = static_cast<int>(p.processes[i].size()) + 1;

    std::vector<ForbiddenBox> boxes;
    for (const auto& [resource, cap] : p.resources) {
        const auto holds = detail::hold_intervals(p, resource);
        std::vector<int> holders;
        for (int i = 0; i < n; ++i)
            if (!holds[i].empty()) holders.push_back(i);
        if (static_cast<int>(holders.size()) <= cap) continue;

        std::vector<int> cur;
        detail::subsets_of_size(static_cast<int>(holders.size()), cap + 1, cur,
                                [&](const std::vector<int>& pick) {
            // one box per combination of hold intervals of the chosen processes
            std::vector<std::size_t> choice(pick.size(), 0);
            while (true) {
                ForbiddenBox b;
                b.lo.assign(n, 0);
                b.hi = Vertex(axis_len.begin(), axis_len.end());
                for (std::size_t s = 0; s < pick.size(); ++s) {
                    const int proc = holders[pick[s]];
                    const auto [from, to] = holds[proc][choice[s]];
                    b.lo[proc] = from;
                    b.hi[proc] = to;
                }
                boxes.push_back(std::move(b));

                std::size_t pos = 0;
                while (pos < choice.size() && ++choice[pos] == holds[holders[pick[pos]]].size()) {
                    choice[pos] = 0;
                    ++pos;
                }
                if (pos == choice.size()) break;
            }
        });
    }
    return boxes;
}

namespace detail {

inline bool cell_in_box(const Vertex& cell, const ForbiddenBox& b) {
    for (std::size_t i = 0; i < cell.size(); ++i)
        if (cell[i] < b.lo[i] || cell[i] + 1 > b.hi[i]) return false;
    return true;
}

inline bool cell_in_forbidden(const Vertex& cell, const std::vector<ForbiddenBox>& boxes) {
    for (const ForbiddenBox& b : boxes)
        if (cell_in_box(cell, b)) return true;
    return false;
}

// The relative interior of grid face g lies in the interior of the union of
// boxes iff every incident top-dimensional unit cell is inside some box.
// Cells outside the ambient grid are never forbidden.
inline bool face_is_interior(const Cube& g, const std::vector<ForbiddenBox>& boxes) {
    const int n = g.ambient_dim();
    std::vector<int> loose;
    for (int i = 0; i < n; ++i)
        if (!(g.extent & (1u << i))) loose.push_back(i);
    const std::size_t count = 1ull << loose.size();
    for (std::size_t pick = 0; pick < count; ++pick) {
        Vertex cell = g.base;
        for (std::size_t d = 0; d < loose.size(); ++d)
            if (pick & (1ull << d)) --cell[loose[d]];
        if (!cell_in_forbidden(cell, boxes)) return false;
    }
    return true;
}

inline bool cube_meets_interior(const Cube& c, const std::vector<ForbiddenBox>& boxes) {
    if (face_is_interior(c, boxes)) return true;
    for (const Cube& f : faces(c))
        if (face_is_interior(f, boxes)) return true;
    return false;
}

} // namespace detail

// The grid complex on [0, N_1] x ... x [0, N_n] minus every cube meeting the
// interior of the forbidden region.
inline CubicalComplex complex_from_forbidden(const std::vector<int>& axis_len,
                                             const std::vector<ForbiddenBox>& boxes) {
    const int n = static_cast<int>(axis_len.size());
    CubicalComplex K(n);

    Vertex base(n, 0);
    const auto enumerate = [&](auto&& self, int coord) -> void {
        if (coord == n) {
            ExtentMask allowed = 0;
            for (int i = 0; i < n; ++i)
                if (base[i] < axis_len[i]) allowed |= 1u << i;
            for (ExtentMask e = allowed;; e = (e - 1) & allowed) {
                Cube c{base, e};
                if (!detail::cube_meets_interior(c, boxes)) K.insert(std::move(c));
                if (e == 0) break;
            }
            return;
        }
        for (base[coord] = 0; base[coord] <= axis_len[coord]; ++base[coord])
            self(self, coord + 1);
        base[coord] = 0;
    };
    enumerate(enumerate, 0);
    return K;
}

inline CubicalComplex state_space_complex(const PVProgram& p) {
    const std::vector<ForbiddenBox> boxes = forbidden_boxes(p);
    std::vector<int> axis_len(p.processes.size());
    for (std::size_t i = 0; i < p.processes.size(); ++i)
        axis_len[i] = static_cast<int>(p.processes[i].size()) + 1;
    return complex_from_forbidden(axis_len, boxes);
}

inline PVProgram swiss_flag_program() {
    PVProgram p;
    p.resources = {{"a", 1}, {"b", 1}};
    p.processes = {
        {{true, "a"}, {true, "b"}, {false, "b"}, {false, "a"}},
        {{true, "b"}, {true, "a"}, {false, "a"}, {false, "b"}},
    };
    return p;
}

// n philosophers all running PaPbVbVa against two resources of the given
// capacity.
inline PVProgram dining_program(int n, int capacity) {
    if (n < 1 || n > kMaxDim) throw InvalidProgram("process count out of range");
    PVProgram p;
    p.resources = {{"a", capacity}, {"b", capacity}};
    const std::vector<Action> prog = {{true, "a"}, {true, "b"}, {false, "b"}, {false, "a"}};
    p.processes.assign(static_cast<std::size_t>(n), prog);
    return p;
}

inline CubicalComplex builtin(const std::string& name) {
    if (name == "open_top_box") {
        // all faces of the unit 3-cube except the top square and the solid cube
        std::vector<Cube> squares;
        const Vertex o{0, 0, 0};
        squares.push_back({o, 0b011});            // bottom  z=0
        squares.push_back({o, 0b101});            // side    y=0
        squares.push_back({o, 0b110});            // side    x=0
        squares.push_back({{1, 0, 0}, 0b110});    // side    x=1
        squares.push_back({{0, 1, 0}, 0b101});    // side    y=1
        return complex_from_maximal(3, squares);
    }
    if (name == "grid3") {
        std::vector<Cube> squares;
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) squares.push_back({{x, y}, 0b11});
        return complex_from_maximal(2, squares);
    }
    if (name == "boundary333_plus_top") {
        std::vector<Cube> cubes;
        for (int fixed = 0; fixed < 3; ++fixed)
            for (int side = 0; side <= 3; side += 3)
                for (int a = 0; a < 3; ++a)
                    for (int b = 0; b < 3; ++b) {
                        Vertex base(3);
                        base[fixed] = side;
                        base[(fixed + 1) % 3] = a;
                        base[(fixed + 2) % 3] = b;
                        cubes.push_back({base, static_cast<ExtentMask>(~(1u << fixed) & 0b111)});
                    }
        cubes.push_back({{2, 2, 2}, 0b111});
        return complex_from_maximal(3, cubes);
    }
    if (name == "swiss_flag") return state_space_complex(swiss_flag_program());

    int n = 0, cap = 0;
    if (std::sscanf(name.c_str(), "dining(%d,%d)", &n, &cap) == 2)
        return state_space_complex(dining_program(n, cap));

    throw UnknownBuiltin("unknown builtin complex: " + name);
}

} // namespace dicube
