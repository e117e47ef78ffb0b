#include <catch2/catch_amalgamated.hpp>

#include "property_checks.hpp"

using namespace dicube;

TEST_CASE("face closure holds after every operation") {
    std::mt19937 rng(101);
    CHECK_NOTHROW(props::check_face_closure(rng, 40));
}

TEST_CASE("past link closure and locality on random complexes") {
    std::mt19937 rng(103);
    CHECK_NOTHROW(props::check_past_link_properties(rng, 200));
}

TEST_CASE("Euler/Betti consistency on computed past links") {
    CHECK_NOTHROW(props::check_euler_consistency(builtin("swiss_flag"), {0, 0}));
    CHECK_NOTHROW(props::check_euler_consistency(builtin("dining(3,2)"), {0, 0, 0}));
    CHECK_NOTHROW(props::check_euler_consistency(builtin("open_top_box"), {0, 0, 0}));

    std::mt19937 rng(107);
    for (int t = 0; t < 10; ++t)
        CHECK_NOTHROW(props::check_euler_consistency(props::random_complex(rng, 3, 15),
                                                     Vertex{0, 0, 0}));
}

TEST_CASE("collapsibility implies acyclicity") {
    std::mt19937 rng(109);
    CHECK_NOTHROW(props::check_collapsible_implies_acyclic(rng, 60));
}

TEST_CASE("reversal duality on random complexes") {
    std::mt19937 rng(113);
    CHECK_NOTHROW(props::check_reversal_duality(rng, 30));
}

TEST_CASE("affected-vertex optimization agrees with full recomputation") {
    std::mt19937 rng(127);
    CHECK_NOTHROW(props::check_affected_vertices_cover_changes(rng, 40));
}

TEST_CASE("obstruction invariance along accepted collapse sequences") {
    CHECK_NOTHROW(props::check_collapse_invariance(builtin("grid3"), {0, 0},
                                                   CollapseMode::Homotopy, {{0, 0}, {3, 3}}));
    CHECK_NOTHROW(props::check_collapse_invariance(builtin("swiss_flag"), {0, 0},
                                                   CollapseMode::Zero, {{0, 0}, {5, 5}}));
}
