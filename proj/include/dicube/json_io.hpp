#pragma once

// JSON formats: complexes as {"dim": n, "cubes": [{"base": [...], "extent":
// [0|1,...]}, ...]} (maximal cubes on write, face closure on read), PV
// programs, analysis and reachability reports, and collapse step logs.
// All output orderings are deterministic.

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dicube/analysis.hpp"
#include "dicube/collapse.hpp"
#include "dicube/cube.hpp"
#include "dicube/pv.hpp"
#include "dicube/reachability.hpp"

namespace dicube {

using nlohmann::json;

inline json cube_to_json(const Cube& c) {
    json j;
    j["base"] = c.base;
    std::vector<int> extent(c.ambient_dim());
    for (int i = 0; i < c.ambient_dim(); ++i) extent[i] = (c.extent >> i) & 1;
    j["extent"] = extent;
    return j;
}

inline json complex_to_json(const CubicalComplex& K) {
    json j;
    j["dim"] = K.dim();
    j["cubes"] = json::array();
    for (const Cube& c : maximal_cubes(K)) j["cubes"].push_back(cube_to_json(c));
    return j;
}

inline Cube cube_from_json(const json& j, int dim) {
    if (!j.contains("base") || !j.contains("extent"))
        throw Error("cube entry must have 'base' and 'extent'");
    Cube c;
    c.base = j.at("base").get<std::vector<int>>();
    const auto extent = j.at("extent").get<std::vector<int>>();
    if (static_cast<int>(c.base.size()) != dim || static_cast<int>(extent.size()) != dim)
        throw DimensionMismatch("cube arrays must have length dim");
    for (int i = 0; i < dim; ++i) {
        if (extent[i] != 0 && extent[i] != 1) throw Error("extent entries must be 0 or 1");
        if (extent[i]) c.extent |= 1u << i;
    }
    return c;
}

// The cube list may hold only maximal cubes; faces are filled in here.
inline CubicalComplex complex_from_json(const json& j) {
    if (!j.contains("dim") || !j.contains("cubes"))
        throw Error("complex JSON must have 'dim' and 'cubes'");
    const int dim = j.at("dim").get<int>();
    if (dim < 1 || dim > kMaxDim)
        throw DimensionMismatch("dim must be in [1, 32]");
    std::vector<Cube> cubes;
    for (const json& cj : j.at("cubes")) cubes.push_back(cube_from_json(cj, dim));
    return complex_from_maximal(dim, cubes);
}

inline PVProgram program_from_json(const json& j) {
    if (!j.contains("resources") || !j.contains("processes"))
        throw InvalidProgram("program JSON must have 'resources' and 'processes'");
    PVProgram p;
    for (const json& r : j.at("resources"))
        p.resources.emplace_back(r.at("name").get<std::string>(), r.at("capacity").get<int>());
    for (const json& proc : j.at("processes")) {
        std::vector<Action> actions;
        for (const json& tok : proc) {
            const std::string t = tok.get<std::string>();
            if (t.size() < 2 || (t[0] != 'P' && t[0] != 'V'))
                throw InvalidProgram("action token must be P<resource> or V<resource>: " + t);
            actions.push_back({t[0] == 'P', t.substr(1)});
        }
        p.processes.push_back(std::move(actions));
    }
    validate_program(p);
    return p;
}

inline json vertices_to_json(const std::vector<Vertex>& vs) {
    json a = json::array();
    for (const Vertex& v : vs) a.push_back(v);
    return a;
}

template <typename Set>
inline json vertex_set_to_json(const Set& vs) {
    json a = json::array();
    for (const Vertex& v : vs) a.push_back(v);
    return a;
}

inline json reachability_report_to_json(const ReachabilityReport& r) {
    json j;
    j["reachable"] = vertex_set_to_json(r.reachable);
    j["unreachable"] = vertex_set_to_json(r.unreachable);
    j["deadlocks"] = vertex_set_to_json(r.deadlocks);
    return j;
}

inline json analysis_report_to_json(const AnalysisReport& r) {
    json j;
    j["initial"] = r.initial;
    j["verdict_contractible"] = to_string(r.verdict_contractible);
    j["verdict_connected"] = to_string(r.verdict_connected);
    j["obstructions_type0"] = vertices_to_json(r.obstructions_type0);
    j["obstructions_typeinf"] = vertices_to_json(r.obstructions_typeinf);
    j["obstructions_unknown"] = vertices_to_json(r.obstructions_unknown);
    j["realized_disconnections"] = vertices_to_json(r.realized_disconnections);
    j["restricted"] = r.restricted;
    j["per_vertex"] = json::array();
    for (const auto& [v, info] : r.per_vertex) {
        json e;
        e["vertex"] = v;
        e["link_status"] = to_string(info.status.kind);
        if (info.status.kind == ContractibilityStatus::Kind::NotContractible)
            e["nonzero_betti"] = info.status.nonzero_betti;
        if (info.connectivity == LinkConnectivity::Empty) e["link_connected"] = "empty";
        else e["link_connected"] = info.connectivity == LinkConnectivity::Connected;
        j["per_vertex"].push_back(std::move(e));
    }
    return j;
}

inline json step_to_json(const CollapseStep& s) {
    json j;
    j["tau"] = cube_to_json(s.pair.tau);
    j["sigma"] = cube_to_json(s.pair.sigma);
    j["mode"] = to_string(s.pair.mode);
    j["verdict"] = to_string(s.verdict);
    if (!s.reason.empty()) j["reason"] = s.reason;
    j["removed"] = json::array();
    for (const Cube& c : s.removed) j["removed"].push_back(cube_to_json(c));
    j["checks"] = json::array();
    for (const AffectedVertexCheck& c : s.checks) {
        json e;
        e["vertex"] = c.vertex;
        e["before"] = c.before_empty ? "empty" : c.before_connected ? "connected" : "disconnected";
        e["after"] = c.after_empty ? "empty" : c.after_connected ? "connected" : "disconnected";
        if (s.pair.mode == CollapseMode::Homotopy) e["homotopy"] = to_string(c.homotopy);
        e["ok"] = c.ok;
        j["checks"].push_back(std::move(e));
    }
    return j;
}

inline json step_log_to_json(const CubicalComplex& initial, const GreedyResult& result,
                             const Vertex& start, CollapseMode mode,
                             const std::set<Vertex>& preserve) {
    json j;
    j["mode"] = to_string(mode);
    j["start"] = start;
    j["preserve"] = vertex_set_to_json(preserve);
    j["initial_cube_count"] = initial.size();
    j["final_cube_count"] = result.final_complex.size();
    j["steps"] = json::array();
    for (const CollapseStep& s : result.steps) j["steps"].push_back(step_to_json(s));
    return j;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    json j;
    in >> j;
    return j;
}

inline void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

// Comma-separated integer coordinates, e.g. "0,0,1".
inline Vertex parse_vertex(const std::string& text) {
    Vertex v;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            v.push_back(std::stoi(part));
        } catch (const std::exception&) {
            throw Error("invalid vertex coordinate '" + part + "' in '" + text + "'");
        }
    }
    if (v.empty()) throw Error("empty vertex '" + text + "'");
    return v;
}

// "base:extent" with both comma-separated, e.g. "1,3:1,0".
inline Cube parse_cube(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw Error("cube must be written base:extent, e.g. 1,3:1,0");
    Cube c;
    c.base = parse_vertex(text.substr(0, colon));
    const Vertex bits = parse_vertex(text.substr(colon + 1));
    if (bits.size() != c.base.size())
        throw Error("cube base and extent must have the same length");
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] != 0 && bits[i] != 1) throw Error("extent entries must be 0 or 1");
        if (bits[i]) c.extent |= 1u << i;
    }
    return c;
}

} // namespace dicube
