#pragma once

// Directed collapse of Euclidean cubical complexes. A collapsing candidate
// is a pair (tau, sigma) with sigma maximal and no other maximal cube
// containing tau; applying it removes every cube between tau and sigma.
// A candidate is accepted when the past links of the surviving vertices
// keep their homotopy class (Homotopy mode) or their connectedness status
// (Zero mode). Only vertices of the form top(sigma) - j' with j' a proper
// submask of sigma's extent can see their past link change; all others are
// untouched by the removal.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "dicube/cube.hpp"
#include "dicube/pastlink.hpp"
#include "dicube/simplicial.hpp"

namespace dicube {

enum class CollapseMode { Homotopy, Zero };

inline std::string to_string(CollapseMode m) {
    return m == CollapseMode::Zero ? "zero" : "homotopy";
}

struct CollapsingPair {
    Cube tau;
    Cube sigma;
    CollapseMode mode = CollapseMode::Homotopy;
};

enum class StepVerdict { Accepted, Rejected, Unknown };

inline std::string to_string(StepVerdict v) {
    switch (v) {
        case StepVerdict::Accepted: return "Accepted";
        case StepVerdict::Rejected: return "Rejected";
        default: return "Unknown";
    }
}

struct AffectedVertexCheck {
    Vertex vertex;
    bool before_empty = false, after_empty = false;
    bool before_connected = false, after_connected = false; // empty counts as not connected
    HomotopyVerdict homotopy = HomotopyVerdict::Equivalent; // Homotopy mode only
    bool ok = true;
};

struct CollapseStep {
    CollapsingPair pair;
    std::vector<Cube> removed;
    StepVerdict verdict = StepVerdict::Accepted;
    std::string reason; // set when not Accepted
    std::vector<AffectedVertexCheck> checks;
};

inline bool is_free_pair(const CubicalComplex& K, const Cube& tau, const Cube& sigma) {
    if (!K.contains(tau) || !K.contains(sigma)) return false;
    if (tau == sigma || !cube_contains(sigma, tau)) return false;
    const std::vector<Cube> mc = maximal_cofaces(K, tau);
    return mc.size() == 1 && mc.front() == sigma;
}

// All pairs (tau, sigma) with tau a proper face of the maximal cube sigma and
// no other maximal cube containing tau, sorted by (sigma, tau).
inline std::vector<std::pair<Cube, Cube>> candidate_pairs(const CubicalComplex& K) {
    std::vector<std::pair<Cube, Cube>> out;
    for (const Cube& sigma : maximal_cubes(K)) {
        std::vector<Cube> fs = faces(sigma);
        std::sort(fs.begin(), fs.end(), CubeLess{});
        for (const Cube& tau : fs) {
            const std::vector<Cube> mc = maximal_cofaces(K, tau);
            if (mc.size() == 1 && mc.front() == sigma) out.emplace_back(tau, sigma);
        }
    }
    return out;
}

// The interval {gamma : tau <= gamma <= sigma}: 2^(dim sigma - dim tau)
// cubes, one per subset of the coordinates spanned by sigma but not tau.
inline std::vector<Cube> collapse_interval(const Cube& tau, const Cube& sigma) {
    std::vector<int> freeDirs;
    for (int i = 0; i < sigma.ambient_dim(); ++i)
        if ((sigma.extent & (1u << i)) && !(tau.extent & (1u << i))) freeDirs.push_back(i);

    std::vector<Cube> out;
    const std::size_t count = 1ull << freeDirs.size();
    for (std::size_t pick = 0; pick < count; ++pick) {
        Cube g = tau;
        for (std::size_t d = 0; d < freeDirs.size(); ++d) {
            if (!(pick & (1ull << d))) continue; // leave at tau's corner
            const int i = freeDirs[d];
            g.extent |= 1u << i;
            g.base[i] = sigma.base[i];
        }
        out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end(), CubeLess{});
    return out;
}

inline CubicalComplex apply_collapse(const CubicalComplex& K, const Cube& tau,
                                     const Cube& sigma) {
    if (!is_free_pair(K, tau, sigma))
        throw NotFreePair("not a free pair: sigma must be the unique maximal cube containing tau");
    CubicalComplex out = K;
    for (const Cube& g : collapse_interval(tau, sigma)) out.erase(g);
    return out;
}

// Surviving vertices whose past link can differ between K and K':
// top(sigma) - j' for proper submasks j' of sigma's extent.
inline std::vector<Vertex> affected_vertices(const CubicalComplex& after, const Cube& sigma) {
    const Vertex t = sigma.top();
    std::vector<Vertex> out;
    const ExtentMask j = sigma.extent;
    for (ExtentMask sub = 0;; sub = (sub - j) & j) {
        if (sub != j) {
            Vertex v = t;
            for (int i = 0; i < sigma.ambient_dim(); ++i)
                if (sub & (1u << i)) --v[i];
            if (after.has_vertex(v)) out.push_back(std::move(v));
        }
        if (sub == j) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Verifies the past-link condition of a collapse K -> K' at every affected
// surviving vertex. Zero mode compares connectedness exactly; Homotopy mode
// compares homotopy class and treats Unknown as non-acceptance.
inline CollapseStep check_directed_collapse(const CubicalComplex& before,
                                            const CubicalComplex& after, const Vertex& w,
                                            const CollapsingPair& pair,
                                            std::uint64_t budget = kDefaultCollapseBudget) {
    CollapseStep step;
    step.pair = pair;
    step.removed = collapse_interval(pair.tau, pair.sigma);

    bool any_reject = false, any_unknown = false;
    for (const Vertex& v : affected_vertices(after, pair.sigma)) {
        AffectedVertexCheck c;
        c.vertex = v;
        const SimplicialComplex lkB = past_link(before, w, v);
        const SimplicialComplex lkA = past_link(after, w, v);
        c.before_empty = lkB.empty();
        c.after_empty = lkA.empty();
        c.before_connected = is_connected(lkB);
        c.after_connected = is_connected(lkA);
        if (pair.mode == CollapseMode::Zero) {
            c.ok = c.before_connected == c.after_connected;
            if (!c.ok) any_reject = true;
        } else {
            c.homotopy = same_homotopy_class(lkB, lkA, budget);
            c.ok = c.homotopy == HomotopyVerdict::Equivalent;
            if (c.homotopy == HomotopyVerdict::NotEquivalent) any_reject = true;
            else if (c.homotopy == HomotopyVerdict::Unknown) any_unknown = true;
        }
        step.checks.push_back(std::move(c));
    }

    if (any_reject) step.verdict = StepVerdict::Rejected;
    else if (any_unknown) step.verdict = StepVerdict::Unknown;
    else step.verdict = StepVerdict::Accepted;

    if (step.verdict != StepVerdict::Accepted) {
        // Prefer naming a vertex whose link becomes disconnected: that is the
        // obstruction a collapse must not create.
        const AffectedVertexCheck* primary = nullptr;
        for (const auto& c : step.checks)
            if (!c.ok && !c.after_empty && !c.after_connected &&
                (c.before_empty || c.before_connected)) { primary = &c; break; }
        if (!primary)
            for (const auto& c : step.checks)
                if (!c.ok) { primary = &c; break; }
        if (primary) {
            const std::string at = format_vertex(primary->vertex);
            if (!primary->after_empty && !primary->after_connected &&
                (primary->before_empty || primary->before_connected))
                step.reason = "would produce a disconnected past link at " + at;
            else if (step.verdict == StepVerdict::Unknown)
                step.reason = "homotopy equivalence of the past link at " + at + " is undecided";
            else if (primary->after_empty != primary->before_empty)
                step.reason = "past link at " + at +
                              (primary->after_empty ? " would become empty" : " would become nonempty");
            else if (pair.mode == CollapseMode::Zero)
                step.reason = "would reconnect the disconnected past link at " + at;
            else
                step.reason = "past link at " + at + " would change homotopy class";
        }
    }
    return step;
}

// Convenience: validate, apply and check a pair in one call.
inline CollapseStep check_pair(const CubicalComplex& K, const Vertex& w, const Cube& tau,
                               const Cube& sigma, CollapseMode mode,
                               std::uint64_t budget = kDefaultCollapseBudget) {
    const CubicalComplex after = apply_collapse(K, tau, sigma);
    return check_directed_collapse(K, after, w, CollapsingPair{tau, sigma, mode}, budget);
}

struct GreedyResult {
    std::vector<CollapseStep> steps;
    CubicalComplex final_complex;
};

namespace detail {

inline bool removes_preserved(const std::vector<Cube>& removed,
                              const std::set<Vertex>& preserve) {
    for (const Cube& c : removed)
        if (c.is_vertex() && preserve.count(c.base)) return true;
    return false;
}

} // namespace detail

// First acceptable pair of K in candidate order, if any. Zero mode admits
// only vertex free faces; edge-and-higher free faces can erase a square
// whose absence the surviving connectedness checks cannot see.
inline std::optional<CollapseStep>
find_acceptable_step(const CubicalComplex& K, const Vertex& w, CollapseMode mode,
                     const std::set<Vertex>& preserve,
                     std::uint64_t budget = kDefaultCollapseBudget) {
    for (const auto& [tau, sigma] : candidate_pairs(K)) {
        if (mode == CollapseMode::Zero && tau.dim() != 0) continue;
        const std::vector<Cube> removed = collapse_interval(tau, sigma);
        if (detail::removes_preserved(removed, preserve)) continue;
        CubicalComplex after = K;
        for (const Cube& g : removed) after.erase(g);
        CollapseStep step = check_directed_collapse(K, after, w, {tau, sigma, mode}, budget);
        if (step.verdict == StepVerdict::Accepted) return step;
    }
    return std::nullopt;
}

// Applies the first acceptable pair until none remains. Deterministic:
// candidates are scanned in (sigma, tau) order each round.
inline GreedyResult greedy_collapse(const CubicalComplex& K, const Vertex& w,
                                    CollapseMode mode, const std::set<Vertex>& preserve,
                                    std::uint64_t budget = kDefaultCollapseBudget) {
    for (const Vertex& p : preserve)
        if (!K.has_vertex(p))
            throw NotAVertex("preserved vertex " + format_vertex(p) + " is not in the complex");

    GreedyResult result;
    result.final_complex = K;
    while (auto step = find_acceptable_step(result.final_complex, w, mode, preserve, budget)) {
        for (const Cube& g : step->removed) result.final_complex.erase(g);
        result.steps.push_back(std::move(*step));
    }
    return result;
}

} // namespace dicube
