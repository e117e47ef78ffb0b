#pragma once

// Simplicial complexes on the vertex set {1..n}, encoded as downward-closed
// sets of nonzero n-bit masks. These arise here as past links, so they stay
// small; homology is over GF(2) and contractibility is decided soundly but
// not completely (free-face collapse search plus cone detection).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "dicube/errors.hpp"

namespace dicube {

using SimplexMask = std::uint32_t;

inline constexpr std::uint64_t kDefaultCollapseBudget = 1'000'000;

class SimplicialComplex {
public:
    SimplicialComplex() = default;
    explicit SimplicialComplex(int n) : n_(n) {
        if (n < 0 || n > 32)
            throw DimensionMismatch("vertex count must be in [0, 32]");
    }

    // Downward closure of the given simplices.
    static SimplicialComplex closure_of(int n, const std::vector<SimplexMask>& simplices) {
        SimplicialComplex S(n);
        for (SimplexMask m : simplices) S.insert_with_faces(m);
        return S;
    }

    // For families already known to be downward closed (e.g. past links).
    static SimplicialComplex from_closed(int n, const std::set<SimplexMask>& simplices) {
        SimplicialComplex S(n);
        for (SimplexMask m : simplices) {
            S.check_mask(m);
            S.simplices_.insert(m);
        }
        return S;
    }

    int n() const { return n_; }
    bool empty() const { return simplices_.empty(); }
    std::size_t size() const { return simplices_.size(); }
    bool contains(SimplexMask m) const { return simplices_.count(m) != 0; }
    const std::unordered_set<SimplexMask>& simplices() const { return simplices_; }

    // Sorted by (dimension, mask value): deterministic iteration order.
    std::vector<SimplexMask> sorted_simplices() const {
        std::vector<SimplexMask> v(simplices_.begin(), simplices_.end());
        std::sort(v.begin(), v.end(), [](SimplexMask a, SimplexMask b) {
            const int pa = std::popcount(a), pb = std::popcount(b);
            if (pa != pb) return pa < pb;
            return a < b;
        });
        return v;
    }

    std::vector<SimplexMask> vertices() const {
        std::vector<SimplexMask> v;
        for (SimplexMask m : simplices_)
            if (std::popcount(m) == 1) v.push_back(m);
        std::sort(v.begin(), v.end());
        return v;
    }

    int max_dim() const {
        int d = -1;
        for (SimplexMask m : simplices_) d = std::max(d, std::popcount(m) - 1);
        return d;
    }

    bool is_downward_closed() const {
        for (SimplexMask m : simplices_)
            for (int i = 0; i < n_; ++i) {
                const SimplexMask f = m & ~(1u << i);
                if (f != 0 && f != m && !contains(f)) return false;
            }
        return true;
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.simplices_ == b.simplices_;
    }

private:
    void check_mask(SimplexMask m) const {
        if (m == 0) throw Error("the empty simplex is not stored");
        if (n_ < 32 && (m >> n_) != 0)
            throw DimensionMismatch("simplex uses vertices beyond n");
    }

    void insert_with_faces(SimplexMask m) {
        check_mask(m);
        if (!simplices_.insert(m).second) return;
        for (int i = 0; i < n_; ++i) {
            const SimplexMask f = m & ~(1u << i);
            if (f != 0 && f != m) insert_with_faces(f);
        }
    }

    int n_ = 0;
    std::unordered_set<SimplexMask> simplices_;
};

// One simplex per line as a sorted vertex list, e.g. "{1,3}".
inline std::string to_debug_string(const SimplicialComplex& S) {
    std::ostringstream os;
    for (SimplexMask m : S.sorted_simplices()) {
        os << '{';
        bool first = true;
        for (int i = 0; i < S.n(); ++i)
            if (m & (1u << i)) {
                if (!first) os << ',';
                os << (i + 1);
                first = false;
            }
        os << "}\n";
    }
    return os.str();
}

// True iff S is nonempty and its 1-skeleton has a single component.
// The empty complex reports false; callers branch on emptiness first.
inline bool is_connected(const SimplicialComplex& S) {
    if (S.empty()) return false;
    std::unordered_map<SimplexMask, SimplexMask> parent;
    auto find = [&](SimplexMask x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (SimplexMask v : S.vertices()) parent[v] = v;
    for (SimplexMask m : S.simplices()) {
        if (std::popcount(m) != 2) continue;
        const SimplexMask a = m & (~m + 1); // lowest set bit
        const SimplexMask b = m ^ a;
        const SimplexMask ra = find(a), rb = find(b);
        if (ra != rb) parent[ra] = rb;
    }
    SimplexMask root = 0;
    bool first = true;
    for (auto& [v, p] : parent) {
        (void)p;
        const SimplexMask r = find(v);
        if (first) { root = r; first = false; }
        else if (r != root) return false;
    }
    return true;
}

namespace detail {

// Rank over GF(2); columns are bitsets packed into 64-bit words.
inline int gf2_rank(std::vector<std::vector<std::uint64_t>> cols) {
    std::vector<std::pair<std::size_t, std::vector<std::uint64_t>*>> pivots;
    std::vector<std::vector<std::uint64_t>> store;
    store.reserve(cols.size());
    int rank = 0;
    for (auto& col : cols) {
        for (auto& [row, pcol] : pivots) {
            const std::size_t word = row / 64, bit = row % 64;
            if (word < col.size() && (col[word] >> bit) & 1)
                for (std::size_t w = 0; w < col.size(); ++w) col[w] ^= (*pcol)[w];
        }
        std::size_t lead = SIZE_MAX;
        for (std::size_t w = 0; w < col.size() && lead == SIZE_MAX; ++w)
            if (col[w]) lead = w * 64 + std::countr_zero(col[w]);
        if (lead == SIZE_MAX) continue;
        store.push_back(std::move(col));
        pivots.emplace_back(lead, &store.back());
        ++rank;
    }
    return rank;
}

} // namespace detail

// Reduced Betti numbers (beta~_0, ..., beta~_dmax) of the augmented chain
// complex over GF(2). Empty complex yields an empty vector.
inline std::vector<int> reduced_betti_gf2(const SimplicialComplex& S) {
    if (S.empty()) return {};
    const int dmax = S.max_dim();

    std::vector<std::vector<SimplexMask>> by_dim(dmax + 1);
    for (SimplexMask m : S.sorted_simplices()) by_dim[std::popcount(m) - 1].push_back(m);

    std::vector<std::unordered_map<SimplexMask, int>> index(dmax + 1);
    for (int d = 0; d <= dmax; ++d)
        for (std::size_t i = 0; i < by_dim[d].size(); ++i) index[d][by_dim[d][i]] = static_cast<int>(i);

    // ranks[d] = rank of boundary C_d -> C_{d-1}; ranks[0] is the augmentation.
    std::vector<int> ranks(dmax + 2, 0);
    ranks[0] = by_dim[0].empty() ? 0 : 1;
    for (int d = 1; d <= dmax; ++d) {
        const std::size_t rows = by_dim[d - 1].size();
        const std::size_t words = (rows + 63) / 64;
        std::vector<std::vector<std::uint64_t>> cols;
        cols.reserve(by_dim[d].size());
        for (SimplexMask m : by_dim[d]) {
            std::vector<std::uint64_t> col(words, 0);
            for (int i = 0; i < S.n(); ++i) {
                if (!(m & (1u << i))) continue;
                const int r = index[d - 1].at(m & ~(1u << i));
                col[static_cast<std::size_t>(r) / 64] |= 1ull << (r % 64);
            }
            cols.push_back(std::move(col));
        }
        ranks[d] = detail::gf2_rank(std::move(cols));
    }

    std::vector<int> betti(dmax + 1, 0);
    for (int d = 0; d <= dmax; ++d)
        betti[d] = static_cast<int>(by_dim[d].size()) - ranks[d] - ranks[d + 1];
    return betti;
}

enum class CollapseSearch { Collapsible, NotCollapsible, Exhausted };

struct CollapseWitness {
    CollapseSearch outcome = CollapseSearch::NotCollapsible;
    std::vector<std::pair<SimplexMask, SimplexMask>> sequence; // (free face, coface)
};

namespace detail {

struct StateHash {
    std::size_t operator()(const std::vector<SimplexMask>& s) const {
        std::size_t h = 1469598103934665603ull;
        for (SimplexMask m : s) {
            h ^= m;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct CollapseSearchCtx {
    std::uint64_t budget = kDefaultCollapseBudget;
    std::uint64_t explored = 0;
    bool exhausted = false;
    std::unordered_set<std::vector<SimplexMask>, StateHash> dead;
};

// Free pairs of the current state: tau with exactly one proper coface sigma.
inline std::vector<std::pair<SimplexMask, SimplexMask>>
free_pairs(const std::vector<SimplexMask>& state) {
    std::vector<std::pair<SimplexMask, SimplexMask>> out;
    for (SimplexMask tau : state) {
        SimplexMask coface = 0;
        int count = 0;
        for (SimplexMask s : state) {
            if (s != tau && (s & tau) == tau) {
                coface = s;
                if (++count > 1) break;
            }
        }
        if (count == 1) out.emplace_back(tau, coface);
    }
    return out;
}

inline bool collapse_dfs(std::vector<SimplexMask>& state, CollapseSearchCtx& ctx,
                         std::vector<std::pair<SimplexMask, SimplexMask>>& seq) {
    if (state.size() == 1 && std::popcount(state[0]) == 1) return true;
    if (ctx.dead.count(state)) return false;
    if (++ctx.explored > ctx.budget) {
        ctx.exhausted = true;
        return false;
    }
    for (auto [tau, sigma] : free_pairs(state)) {
        std::vector<SimplexMask> child;
        child.reserve(state.size() - 2);
        for (SimplexMask m : state)
            if (m != tau && m != sigma) child.push_back(m);
        seq.emplace_back(tau, sigma);
        if (collapse_dfs(child, ctx, seq)) return true;
        seq.pop_back();
        if (ctx.exhausted) return false;
    }
    ctx.dead.insert(state);
    return false;
}

} // namespace detail

// Exhaustive backtracking over free-face collapses with memoization of dead
// states; gives up with Exhausted once `budget` states have been explored.
inline CollapseWitness find_collapse_sequence(const SimplicialComplex& S,
                                              std::uint64_t budget = kDefaultCollapseBudget) {
    CollapseWitness w;
    if (S.empty()) return w;
    std::vector<SimplexMask> state = S.sorted_simplices();
    detail::CollapseSearchCtx ctx;
    ctx.budget = budget;
    if (detail::collapse_dfs(state, ctx, w.sequence)) {
        w.outcome = CollapseSearch::Collapsible;
    } else {
        w.sequence.clear();
        w.outcome = ctx.exhausted ? CollapseSearch::Exhausted : CollapseSearch::NotCollapsible;
    }
    return w;
}

inline CollapseSearch is_collapsible(const SimplicialComplex& S,
                                     std::uint64_t budget = kDefaultCollapseBudget) {
    return find_collapse_sequence(S, budget).outcome;
}

// Apex vertex v with (m | v) in S for every simplex m, if any.
inline std::optional<SimplexMask> cone_apex(const SimplicialComplex& S) {
    for (SimplexMask v : S.vertices()) {
        bool apex = true;
        for (SimplexMask m : S.simplices())
            if (!S.contains(m | v)) { apex = false; break; }
        if (apex) return v;
    }
    return std::nullopt;
}

// Collapse sequence of a cone onto its apex: pair each simplex not containing
// the apex with its extension by the apex, largest simplices first.
inline std::vector<std::pair<SimplexMask, SimplexMask>>
cone_collapse_sequence(const SimplicialComplex& S, SimplexMask apex) {
    std::vector<SimplexMask> rest;
    for (SimplexMask m : S.simplices())
        if (!(m & apex)) rest.push_back(m);
    std::sort(rest.begin(), rest.end(), [](SimplexMask a, SimplexMask b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        if (pa != pb) return pa > pb;
        return a < b;
    });
    std::vector<std::pair<SimplexMask, SimplexMask>> seq;
    seq.reserve(rest.size());
    for (SimplexMask m : rest) seq.emplace_back(m, m | apex);
    return seq;
}

struct ContractibilityStatus {
    enum class Kind { Empty, Contractible, NotContractible, Unknown };
    Kind kind = Kind::Empty;
    // Contractible: a replayable free-face collapse sequence down to a vertex.
    std::vector<std::pair<SimplexMask, SimplexMask>> collapse_witness;
    // NotContractible: an index i with reduced beta_i != 0 over GF(2).
    int nonzero_betti = -1;

    friend bool operator==(const ContractibilityStatus& a, const ContractibilityStatus& b) {
        return a.kind == b.kind;
    }
};

inline std::string to_string(ContractibilityStatus::Kind k) {
    switch (k) {
        case ContractibilityStatus::Kind::Empty: return "Empty";
        case ContractibilityStatus::Kind::Contractible: return "Contractible";
        case ContractibilityStatus::Kind::NotContractible: return "NotContractible";
        default: return "Unknown";
    }
}

// Sound three-valued classifier: never claims Contractible or NotContractible
// falsely. Unknown covers complexes that are acyclic but not collapsed within
// budget (or genuinely non-collapsible yet contractible).
inline ContractibilityStatus
contractibility_status(const SimplicialComplex& S,
                       std::uint64_t budget = kDefaultCollapseBudget) {
    ContractibilityStatus st;
    if (S.empty()) return st;

    const std::vector<int> betti = reduced_betti_gf2(S);
    for (std::size_t i = 0; i < betti.size(); ++i)
        if (betti[i] != 0) {
            st.kind = ContractibilityStatus::Kind::NotContractible;
            st.nonzero_betti = static_cast<int>(i);
            return st;
        }

    if (auto apex = cone_apex(S)) {
        st.kind = ContractibilityStatus::Kind::Contractible;
        st.collapse_witness = cone_collapse_sequence(S, *apex);
        return st;
    }

    CollapseWitness w = find_collapse_sequence(S, budget);
    if (w.outcome == CollapseSearch::Collapsible) {
        st.kind = ContractibilityStatus::Kind::Contractible;
        st.collapse_witness = std::move(w.sequence);
    } else {
        st.kind = ContractibilityStatus::Kind::Unknown;
    }
    return st;
}

enum class HomotopyVerdict { Equivalent, NotEquivalent, Unknown };

inline std::string to_string(HomotopyVerdict v) {
    switch (v) {
        case HomotopyVerdict::Equivalent: return "Equivalent";
        case HomotopyVerdict::NotEquivalent: return "NotEquivalent";
        default: return "Unknown";
    }
}

// Sound in both definite answers; Unknown otherwise.
inline HomotopyVerdict same_homotopy_class(const SimplicialComplex& a,
                                           const SimplicialComplex& b,
                                           std::uint64_t budget = kDefaultCollapseBudget) {
    if (a.empty() && b.empty()) return HomotopyVerdict::Equivalent;
    if (a.empty() != b.empty()) return HomotopyVerdict::NotEquivalent;
    if (a == b) return HomotopyVerdict::Equivalent;

    std::vector<int> ba = reduced_betti_gf2(a), bb = reduced_betti_gf2(b);
    const std::size_t len = std::max(ba.size(), bb.size());
    ba.resize(len, 0);
    bb.resize(len, 0);
    if (ba != bb) return HomotopyVerdict::NotEquivalent;

    const auto sa = contractibility_status(a, budget);
    const auto sb = contractibility_status(b, budget);
    if (sa.kind == ContractibilityStatus::Kind::Contractible &&
        sb.kind == ContractibilityStatus::Kind::Contractible)
        return HomotopyVerdict::Equivalent;
    return HomotopyVerdict::Unknown;
}

} // namespace dicube
