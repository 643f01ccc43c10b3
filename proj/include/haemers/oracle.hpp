#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "haemers/representation.hpp"

namespace haemers {

struct SearchConfig {
    std::uint64_t node_budget = 1000000000ull;
    std::size_t max_candidates = 100000;
    bool symmetry_pruning = false;
};

inline BigInt gaussian_binomial(const BigInt& p, int n, int d) {
    if (d < 0 || d > n) return 0;
    BigInt num = 1, den = 1;
    for (int i = 0; i < d; ++i) {
        num *= bigint_pow(p, n - i) - 1;
        den *= bigint_pow(p, d - i) - 1;
    }
    return num / den;
}

// All d-dimensional subspaces of GF(p)^n, generated in deterministic order:
// pivot-column sets lexicographically, free entries in mixed-radix order.
inline std::vector<Subspace<Gf>> enumerate_subspaces(const Gf& field, int n, int d,
                                                     std::size_t cap = 100000) {
    if (d < 0 || n < 0 || d > n) throw BadParameter("enumerate_subspaces: d > n");
    const BigInt count = gaussian_binomial(field.modulus(), n, d);
    if (count > cap)
        throw TooLarge("subspace pool " + count.str() + " exceeds cap " +
                       std::to_string(cap));
    std::vector<Subspace<Gf>> out;
    if (d == 0) {
        out.push_back(Subspace<Gf>::zero(field, n));
        return out;
    }
    std::vector<int> pivots(d);
    for (int i = 0; i < d; ++i) pivots[i] = i;
    const std::uint32_t p = field.modulus();
    while (true) {
        // free positions: (i, j) with j > pivots[i], j not a pivot column
        std::vector<std::pair<int, int>> free_pos;
        std::vector<bool> is_piv(n, false);
        for (const int c : pivots) is_piv[c] = true;
        for (int i = 0; i < d; ++i)
            for (int j = pivots[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        std::vector<std::uint32_t> vals(free_pos.size(), 0);
        while (true) {
            Matrix<Gf> m(field, d, n);
            for (int i = 0; i < d; ++i) m.at(i, pivots[i]) = 1;
            for (std::size_t t = 0; t < free_pos.size(); ++t)
                m.at(free_pos[t].first, free_pos[t].second) = vals[t];
            out.push_back(Subspace<Gf>::span(m));
            // mixed-radix increment
            std::size_t t = 0;
            while (t < vals.size() && ++vals[t] == p) vals[t++] = 0;
            if (t == vals.size() && !vals.empty()) break;
            if (vals.empty()) break;
        }
        // next pivot combination, lexicographic
        int i = d - 1;
        while (i >= 0 && pivots[i] == n - d + i) --i;
        if (i < 0) break;
        ++pivots[i];
        for (int j = i + 1; j < d; ++j) pivots[j] = pivots[j - 1] + 1;
    }
    return out;
}

enum class SearchOutcome { Found, NotFound, BudgetExhausted };

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::NotFound;
    std::optional<DualRepresentation<Gf>> witness;
    std::uint64_t nodes = 0;
};

namespace detail {

struct RepSearch {
    const Graph& g;
    const std::vector<Subspace<Gf>>& pool;
    const Gf& field;
    std::size_t ambient;
    const SearchConfig& cfg;
    std::vector<std::size_t> order;          // search order -> vertex index
    std::vector<const Subspace<Gf>*> chosen; // by vertex index, null = unassigned
    std::uint64_t nodes = 0;
    bool budget_hit = false;

    bool consistent_at(std::size_t v) const {
        Matrix<Gf> stacked(field, 0, ambient);
        for (const std::size_t w : g.neighbors(v))
            if (chosen[w]) stacked = stacked.vstack(chosen[w]->basis());
        const auto nsum = Subspace<Gf>::span(stacked);
        return subspace_intersect(*chosen[v], nsum).dim() == 0;
    }

    bool search(std::size_t depth) {
        if (depth == order.size()) return true;
        const std::size_t v = order[depth];
        const bool fix_first = cfg.symmetry_pruning && depth == 0;
        for (std::size_t c = 0; c < (fix_first ? std::size_t(1) : pool.size()); ++c) {
            if (++nodes > cfg.node_budget) {
                budget_hit = true;
                return false;
            }
            chosen[v] = &pool[c];
            bool ok = consistent_at(v);
            for (const std::size_t w : g.neighbors(v))
                if (ok && chosen[w]) ok = consistent_at(w);
            if (ok && search(depth + 1)) return true;
            chosen[v] = nullptr;
            if (budget_hit) return false;
        }
        return false;
    }
};

// Descending degree with a preference for vertices attached to the already
// ordered prefix; maximizes early pruning on Mycielski-type graphs.
inline std::vector<std::size_t> search_order(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<bool> used(n, false);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        std::size_t best_deg = 0;
        bool best_conn = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (used[v]) continue;
            bool conn = false;
            for (const std::size_t w : g.neighbors(v)) conn = conn || used[w];
            const std::size_t deg = g.degree(v);
            const bool better =
                best == n || deg > best_deg || (deg == best_deg && conn && !best_conn);
            if (better) {
                best = v;
                best_deg = deg;
                best_conn = conn;
            }
        }
        used[best] = true;
        order.push_back(best);
    }
    return order;
}

}  // namespace detail

// Exact decision: does g have a dual (n,d)-representation over GF(p)?
// Backtracking over the full candidate pool; NotFound is reported only on
// exhaustive completion.
inline SearchResult exists_representation(const Graph& g, const Gf& field, int n,
                                          int d, const SearchConfig& cfg = {}) {
    const auto pool = enumerate_subspaces(field, n, d, cfg.max_candidates);
    detail::RepSearch s{g, pool, field, std::size_t(n), cfg,
                        detail::search_order(g),
                        std::vector<const Subspace<Gf>*>(g.num_vertices(), nullptr)};
    const bool found = s.search(0);
    SearchResult res;
    res.nodes = s.nodes;
    if (found) {
        res.outcome = SearchOutcome::Found;
        DualRepresentation<Gf> rep;
        rep.graph = g;
        rep.field = field;
        rep.ambient = std::size_t(n);
        rep.local_dim = std::size_t(d);
        for (std::size_t v = 0; v < g.num_vertices(); ++v)
            rep.spaces.push_back(*s.chosen[v]);
        res.witness = std::move(rep);
    } else {
        res.outcome = s.budget_hit ? SearchOutcome::BudgetExhausted
                                   : SearchOutcome::NotFound;
    }
    return res;
}

// Least n <= n_max admitting a dual (n,d)-representation over GF(p).
// Throws BudgetExhausted if a level is inconclusive before a witness shows up.
inline std::optional<int> min_ambient(const Graph& g, const Gf& field, int d,
                                      int n_max, const SearchConfig& cfg = {}) {
    for (int n = d; n <= n_max; ++n) {
        const auto res = exists_representation(g, field, n, d, cfg);
        if (res.outcome == SearchOutcome::Found) return n;
        if (res.outcome == SearchOutcome::BudgetExhausted)
            throw BudgetExhausted("min_ambient inconclusive at n = " +
                                  std::to_string(n));
    }
    return std::nullopt;
}

}  // namespace haemers
