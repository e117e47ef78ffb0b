#include <catch2/catch_amalgamated.hpp>

#include "dicube/analysis.hpp"
#include "dicube/pv.hpp"

using namespace dicube;

TEST_CASE("full grid passes both sufficient conditions") {
    const auto K = builtin("grid3");
    const auto ob = find_obstructions(K, {0, 0});
    CHECK(ob.type0.empty());
    CHECK(ob.typeinf.empty());
    CHECK(ob.unknown.empty());

    const auto r = theorem_verdicts(K, {0, 0});
    CHECK(r.verdict_contractible == ContractibilityVerdict::AllContractible);
    CHECK(r.verdict_connected == ConnectednessVerdict::AllConnected);
    CHECK(r.realized_disconnections.empty());
    CHECK_FALSE(r.restricted);
}

TEST_CASE("dining philosophers: connected but inconclusive for contractibility") {
    const auto K = builtin("dining(3,2)");
    const auto ob = find_obstructions(K, {0, 0, 0});
    CHECK(ob.type0.empty());
    bool far_corner = false;
    for (const Vertex& v : ob.typeinf)
        if (v == Vertex{4, 4, 4}) far_corner = true;
    CHECK(far_corner);

    const auto r = theorem_verdicts(K, {0, 0, 0});
    CHECK(r.verdict_connected == ConnectednessVerdict::AllConnected);
    CHECK(r.verdict_contractible == ContractibilityVerdict::Inconclusive);
}

TEST_CASE("swiss flag: both verdicts inconclusive, one realized obstruction") {
    const auto K = builtin("swiss_flag");
    const auto r = theorem_verdicts(K, {0, 0});
    CHECK(r.verdict_connected == ConnectednessVerdict::Inconclusive);
    CHECK(r.verdict_contractible == ContractibilityVerdict::Inconclusive);
    CHECK(r.obstructions_type0 == std::vector<Vertex>{{3, 4}, {4, 3}});
    CHECK(r.realized_disconnections == std::vector<Vertex>{{4, 4}});
}

TEST_CASE("unreachable disconnections are not realized") {
    const auto K = builtin("boundary333_plus_top");
    const auto ob = find_obstructions(K, {0, 0, 0});
    bool at322 = false;
    for (const Vertex& v : ob.type0)
        if (v == Vertex{3, 2, 2}) at322 = true;
    CHECK(at322);

    CHECK(realize_obstructions(K, {0, 0, 0}).empty());
}

TEST_CASE("realized obstructions agree with obstructions of the reachable part") {
    for (const char* name : {"swiss_flag", "grid3", "boundary333_plus_top"}) {
        const auto K = builtin(name);
        const Vertex w(K.dim(), 0);
        const auto realized = realize_obstructions(K, w);
        const auto direct = find_obstructions(reachable_subcomplex(K, w), w);
        CHECK(realized == direct.type0);
    }
}

TEST_CASE("AllConnected forces an empty realized set") {
    for (const char* name : {"grid3", "dining(3,2)", "open_top_box"}) {
        const auto K = builtin(name);
        const Vertex w(K.dim(), 0);
        const auto r = theorem_verdicts(K, w);
        if (r.verdict_connected == ConnectednessVerdict::AllConnected)
            CHECK(r.realized_disconnections.empty());
    }
}

TEST_CASE("strict mode rejects a non-minimal start") {
    const auto K = builtin("grid3");
    CHECK_THROWS_AS(theorem_verdicts(K, {1, 1}, /*strict=*/true), NotMinimal);

    const auto r = theorem_verdicts(K, {1, 1}, /*strict=*/false);
    CHECK(r.restricted);
    // above (1,1) everything still looks like a grid from its corner
    CHECK(r.verdict_contractible == ContractibilityVerdict::AllContractible);
}

TEST_CASE("per-vertex records track the link classification") {
    const auto K = builtin("swiss_flag");
    const auto r = theorem_verdicts(K, {0, 0});
    CHECK(r.per_vertex.at({0, 0}).connectivity == LinkConnectivity::Empty);
    CHECK(r.per_vertex.at({4, 3}).connectivity == LinkConnectivity::Disconnected);
    CHECK(r.per_vertex.at({4, 3}).status.kind ==
          ContractibilityStatus::Kind::NotContractible);
    CHECK(r.per_vertex.at({1, 1}).connectivity == LinkConnectivity::Connected);
    CHECK(r.per_vertex.at({3, 3}).connectivity == LinkConnectivity::Empty);
    // the isolated-from-below vertex (3,3) is neither w nor incomparable, so
    // its empty link blocks the connectedness verdict
    CHECK(r.verdict_connected == ConnectednessVerdict::Inconclusive);
}

TEST_CASE("start must be a vertex") {
    const auto K = builtin("grid3");
    CHECK_THROWS_AS(find_obstructions(K, {7, 7}), NotAVertex);
    CHECK_THROWS_AS(theorem_verdicts(K, {7, 7}), NotAVertex);
    CHECK_THROWS_AS(realize_obstructions(K, {7, 7}), NotAVertex);
}

TEST_CASE("dining philosophers generalization: four processes at capacity three") {
    const auto K = builtin("dining(4,3)");
    const auto r = theorem_verdicts(K, {0, 0, 0, 0});
    CHECK(r.obstructions_type0.empty());
    CHECK(r.verdict_connected == ConnectednessVerdict::AllConnected);
}
