#include <catch2/catch_amalgamated.hpp>

#include "dicube/pv.hpp"

#include <random>

using namespace dicube;

namespace {

bool box_equals(const ForbiddenBox& b, const Vertex& lo, const Vertex& hi) {
    return b.lo == lo && b.hi == hi;
}

// Exact interior test at a rational point: x lies in the interior of the box
// union iff all 2^n corner perturbations by eps stay inside some box.
bool point_in_interior(const std::vector<double>& x, const std::vector<ForbiddenBox>& boxes) {
    const double eps = 0.125; // safe: all coordinates are quarter-integers
    const int n = static_cast<int>(x.size());
    for (unsigned pick = 0; pick < (1u << n); ++pick) {
        std::vector<double> p = x;
        for (int i = 0; i < n; ++i) p[i] += (pick & (1u << i)) ? eps : -eps;
        bool inside = false;
        for (const ForbiddenBox& b : boxes) {
            bool in = true;
            for (int i = 0; i < n; ++i)
                if (p[i] < b.lo[i] || p[i] > b.hi[i]) in = false;
            if (in) { inside = true; break; }
        }
        if (!inside) return false;
    }
    return true;
}

// Samples every quarter-integer point of the cube; the interior of a box
// union meets a cube iff it contains such a point.
bool cube_meets_interior_oracle(const Cube& c, const std::vector<ForbiddenBox>& boxes) {
    const int n = c.ambient_dim();
    std::vector<int> steps(n);
    for (int i = 0; i < n; ++i) steps[i] = (c.extent >> i) & 1 ? 4 : 0;

    std::vector<int> idx(n, 0);
    while (true) {
        std::vector<double> x(n);
        for (int i = 0; i < n; ++i) x[i] = c.base[i] + idx[i] * 0.25;
        if (point_in_interior(x, boxes)) return true;
        int pos = 0;
        while (pos < n && ++idx[pos] > steps[pos]) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == n) break;
    }
    return false;
}

CubicalComplex complex_via_oracle(const std::vector<int>& axis_len,
                                  const std::vector<ForbiddenBox>& boxes) {
    const int n = static_cast<int>(axis_len.size());
    CubicalComplex K(n);
    Vertex base(n, 0);
    const auto enumerate = [&](auto&& self, int coord) -> void {
        if (coord == n) {
            for (ExtentMask e = 0; e < (1u << n); ++e) {
                bool fits = true;
                for (int i = 0; i < n; ++i)
                    if ((e >> i & 1) && base[i] + 1 > axis_len[i]) fits = false;
                if (!fits) continue;
                Cube c{base, e};
                if (!cube_meets_interior_oracle(c, boxes)) K.insert(std::move(c));
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

} // namespace

TEST_CASE("program validation") {
    PVProgram p = swiss_flag_program();
    CHECK_NOTHROW(validate_program(p));

    PVProgram unreleased = p;
    unreleased.processes[0].pop_back();
    CHECK_THROWS_AS(validate_program(unreleased), InvalidProgram);

    PVProgram relock = p;
    relock.processes[0].insert(relock.processes[0].begin() + 1, Action{true, "a"});
    CHECK_THROWS_AS(validate_program(relock), InvalidProgram);

    PVProgram stray_release = p;
    stray_release.processes[0].insert(stray_release.processes[0].begin(), Action{false, "b"});
    CHECK_THROWS_AS(validate_program(stray_release), InvalidProgram);

    PVProgram unknown = p;
    unknown.processes[0][0].resource = "zzz";
    CHECK_THROWS_AS(validate_program(unknown), InvalidProgram);

    PVProgram bad_cap = p;
    bad_cap.resources[0].second = 0;
    CHECK_THROWS_AS(validate_program(bad_cap), InvalidProgram);
}

TEST_CASE("swiss flag forbidden boxes") {
    const auto boxes = forbidden_boxes(swiss_flag_program());
    REQUIRE(boxes.size() == 2);
    CHECK(box_equals(boxes[0], {1, 2}, {4, 3}));
    CHECK(box_equals(boxes[1], {2, 1}, {3, 4}));
}

TEST_CASE("dining philosophers forbidden boxes") {
    const auto boxes = forbidden_boxes(dining_program(3, 2));
    REQUIRE(boxes.size() == 2);
    CHECK(box_equals(boxes[0], {1, 1, 1}, {4, 4, 4}));
    CHECK(box_equals(boxes[1], {2, 2, 2}, {3, 3, 3}));
}

TEST_CASE("ample capacity never forbids anything") {
    CHECK(forbidden_boxes(dining_program(3, 3)).empty());
    CHECK(forbidden_boxes(dining_program(2, 5)).empty());
}

TEST_CASE("swiss flag state space") {
    const auto K = builtin("swiss_flag");
    CHECK(K.dim() == 2);

    int squares = 0;
    for (const Cube& c : K.cubes())
        if (c.dim() == 2) ++squares;
    CHECK(squares == 20);

    CHECK(K.contains(Cube{{1, 1}, 0b11}));       // boundary square of the forbidden region
    CHECK_FALSE(K.contains(Cube{{2, 2}, 0b01})); // edge [2,3]x{2} meets the interior
    CHECK_FALSE(K.contains(Cube{{2, 2}, 0b11}));
    CHECK(K.has_vertex({2, 2}));
    CHECK(K.has_vertex({3, 3}));
    CHECK(is_face_closed(K));
}

TEST_CASE("swiss flag matches the dense-sample oracle") {
    const auto boxes = forbidden_boxes(swiss_flag_program());
    const auto K = builtin("swiss_flag");
    const auto O = complex_via_oracle({5, 5}, boxes);
    CHECK(K.size() == O.size());
    for (const Cube& c : O.cubes()) CHECK(K.contains(c));
}

TEST_CASE("dining philosophers state space matches the dense-sample oracle") {
    const auto boxes = forbidden_boxes(dining_program(3, 2));
    const auto K = builtin("dining(3,2)");
    int solid = 0;
    for (const Cube& c : K.cubes())
        if (c.dim() == 3) ++solid;
    CHECK(solid == 125 - 27);

    const auto O = complex_via_oracle({5, 5, 5}, boxes);
    CHECK(K.size() == O.size());
    for (const Cube& c : O.cubes()) CHECK(K.contains(c));
}

TEST_CASE("empty forbidden region gives the full grid") {
    const auto K = complex_from_forbidden({2, 2}, {});
    // 3x3 vertices, 2*3*2 edges, 4 squares
    CHECK(K.size() == 9 + 12 + 4);
    CHECK(is_face_closed(K));
}

TEST_CASE("swiss flag is transpose-symmetric") {
    const auto K = builtin("swiss_flag");
    for (const Cube& c : K.cubes()) {
        Cube t;
        t.base = {c.base[1], c.base[0]};
        t.extent = ((c.extent & 1u) << 1) | ((c.extent >> 1) & 1u);
        CHECK(K.contains(t));
    }
}

TEST_CASE("adding a forbidden box never adds cubes") {
    std::mt19937 rng(53);
    std::uniform_int_distribution<int> lo(0, 2), len(1, 3);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ForbiddenBox> boxes;
        for (int b = 0; b < 2; ++b) {
            ForbiddenBox fb;
            fb.lo = {lo(rng), lo(rng)};
            fb.hi = {fb.lo[0] + len(rng), fb.lo[1] + len(rng)};
            boxes.push_back(fb);
        }
        const auto small = complex_from_forbidden({5, 5}, boxes);
        boxes.pop_back();
        const auto big = complex_from_forbidden({5, 5}, boxes);
        for (const Cube& c : small.cubes()) CHECK(big.contains(c));

        const auto O = complex_via_oracle({5, 5}, boxes);
        CHECK(O.size() == big.size());
    }
}

TEST_CASE("builtin fixtures") {
    CHECK(builtin("grid3").size() == 9 + 24 + 16);
    const auto B = builtin("boundary333_plus_top");
    int solid = 0, squares = 0;
    for (const Cube& c : B.cubes()) {
        if (c.dim() == 3) ++solid;
        if (c.dim() == 2) ++squares;
    }
    CHECK(solid == 1);
    // 54 boundary squares plus the three lower faces of the added cube
    CHECK(squares == 57);
    CHECK_THROWS_AS(builtin("no_such_thing"), UnknownBuiltin);
}

TEST_CASE("dining builtin parses its arguments") {
    const auto K = builtin("dining(2,1)");
    CHECK(K.dim() == 2);
    const auto S = builtin("swiss_flag");
    // two philosophers at capacity 1 is not the swiss flag: same program on
    // both axes, so the forbidden boxes are [1,4]^2 and [2,3]^2
    const auto boxes = forbidden_boxes(dining_program(2, 1));
    REQUIRE(boxes.size() == 2);
    CHECK(box_equals(boxes[0], {1, 1}, {4, 4}));
    CHECK(box_equals(boxes[1], {2, 2}, {3, 3}));
    CHECK(K.size() != S.size());
}
