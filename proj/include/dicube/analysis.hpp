#pragma once

// Global verdicts about directed path spaces from an initial vertex, read
// off the past links of all vertices: contractible/connected sufficient
// conditions, past-link obstructions, and obstructions realized in the
// reachable subcomplex.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "dicube/cube.hpp"
#include "dicube/pastlink.hpp"
#include "dicube/reachability.hpp"
#include "dicube/simplicial.hpp"

namespace dicube {

enum class LinkConnectivity { Empty, Connected, Disconnected };

inline std::string to_string(LinkConnectivity c) {
    switch (c) {
        case LinkConnectivity::Empty: return "empty";
        case LinkConnectivity::Connected: return "connected";
        default: return "disconnected";
    }
}

struct VertexLinkInfo {
    ContractibilityStatus status;
    LinkConnectivity connectivity = LinkConnectivity::Empty;
};

struct ObstructionSets {
    std::vector<Vertex> type0;   // nonempty disconnected past link
    std::vector<Vertex> typeinf; // past link known not contractible
    std::vector<Vertex> unknown; // contractibility undecided
};

enum class ContractibilityVerdict { AllContractible, Inconclusive };
enum class ConnectednessVerdict { AllConnected, Inconclusive };

inline std::string to_string(ContractibilityVerdict v) {
    return v == ContractibilityVerdict::AllContractible ? "AllContractible" : "Inconclusive";
}
inline std::string to_string(ConnectednessVerdict v) {
    return v == ConnectednessVerdict::AllConnected ? "AllConnected" : "Inconclusive";
}

struct AnalysisReport {
    Vertex initial;
    std::map<Vertex, VertexLinkInfo> per_vertex;
    std::vector<Vertex> obstructions_type0;
    std::vector<Vertex> obstructions_typeinf;
    std::vector<Vertex> obstructions_unknown;
    ContractibilityVerdict verdict_contractible = ContractibilityVerdict::Inconclusive;
    ConnectednessVerdict verdict_connected = ConnectednessVerdict::Inconclusive;
    std::vector<Vertex> realized_disconnections;
    bool restricted = false; // claims limited to vertices above a non-minimal start
};

namespace detail {

inline std::map<Vertex, VertexLinkInfo> link_infos(const CubicalComplex& K, const Vertex& w,
                                                   std::uint64_t budget, unsigned threads) {
    std::map<Vertex, VertexLinkInfo> out;
    for (auto& [v, lk] : past_links_all(K, w, threads)) {
        VertexLinkInfo info;
        info.status = contractibility_status(lk, budget);
        info.connectivity = lk.empty() ? LinkConnectivity::Empty
                            : is_connected(lk) ? LinkConnectivity::Connected
                                               : LinkConnectivity::Disconnected;
        out.emplace(v, std::move(info));
    }
    return out;
}

} // namespace detail

inline ObstructionSets find_obstructions(const CubicalComplex& K, const Vertex& w,
                                         std::uint64_t budget = kDefaultCollapseBudget,
                                         unsigned threads = 1) {
    detail::require_vertex(K, w, "start");
    ObstructionSets out;
    for (const auto& [v, info] : detail::link_infos(K, w, budget, threads)) {
        if (info.connectivity == LinkConnectivity::Disconnected) out.type0.push_back(v);
        switch (info.status.kind) {
            case ContractibilityStatus::Kind::NotContractible: out.typeinf.push_back(v); break;
            case ContractibilityStatus::Kind::Unknown: out.unknown.push_back(v); break;
            default: break;
        }
    }
    return out;
}

// Vertices of the reachable subcomplex whose past link there is nonempty and
// disconnected; each witnesses a disconnected path space from w.
inline std::vector<Vertex> realize_obstructions(const CubicalComplex& K, const Vertex& w,
                                                unsigned threads = 1) {
    detail::require_vertex(K, w, "start");
    const CubicalComplex hat = reachable_subcomplex(K, w);
    std::vector<Vertex> out;
    for (const auto& [v, lk] : past_links_all(hat, w, threads))
        if (!lk.empty() && !is_connected(lk)) out.push_back(v);
    return out;
}

// Sufficient-condition verdicts. In strict mode w must be minimal; otherwise
// the verdicts only cover vertices above w and the report says so.
inline AnalysisReport theorem_verdicts(const CubicalComplex& K, const Vertex& w,
                                       bool strict = true,
                                       std::uint64_t budget = kDefaultCollapseBudget,
                                       unsigned threads = 1) {
    detail::require_vertex(K, w, "start");

    bool minimal = true;
    for (const Vertex& v : K.vertices())
        if (!vertex_leq(w, v)) { minimal = false; break; }
    if (!minimal && strict)
        throw NotMinimal("start vertex " + format_vertex(w) +
                         " is not minimal; rerun without strict mode to restrict "
                         "claims to vertices above it");

    AnalysisReport r;
    r.initial = w;
    r.restricted = !minimal;
    r.per_vertex = detail::link_infos(K, w, budget, threads);

    bool all_connected = true, any_unknown = false;
    for (const auto& [v, info] : r.per_vertex) {
        switch (info.status.kind) {
            case ContractibilityStatus::Kind::NotContractible:
                r.obstructions_typeinf.push_back(v);
                break;
            case ContractibilityStatus::Kind::Unknown:
                r.obstructions_unknown.push_back(v);
                any_unknown = true;
                break;
            default: break;
        }
        switch (info.connectivity) {
            case LinkConnectivity::Disconnected:
                r.obstructions_type0.push_back(v);
                all_connected = false;
                break;
            case LinkConnectivity::Empty:
                // lk(w) is always empty, as is every link below or beside w;
                // an empty link elsewhere breaks the connectedness hypothesis.
                if (v != w && vertex_leq(w, v)) all_connected = false;
                break;
            default: break;
        }
    }

    r.verdict_contractible = (r.obstructions_typeinf.empty() && !any_unknown)
                                 ? ContractibilityVerdict::AllContractible
                                 : ContractibilityVerdict::Inconclusive;
    r.verdict_connected =
        all_connected ? ConnectednessVerdict::AllConnected : ConnectednessVerdict::Inconclusive;
    r.realized_disconnections = realize_obstructions(K, w, threads);
    return r;
}

} // namespace dicube
