#pragma once

#include <algorithm>
#include <vector>

#include "haemers/graph.hpp"

namespace haemers {

// All maximal independent sets of g (Bron-Kerbosch with pivoting on the
// complement), as sorted vertex-index sets in deterministic order.
inline std::vector<std::vector<std::size_t>> maximal_independent_sets(
    const Graph& g, std::size_t cap = 20) {
    const std::size_t n = g.num_vertices();
    if (n > cap || n > 64)
        throw TooLarge("maximal_independent_sets: " + std::to_string(n) +
                       " vertices exceeds cap " + std::to_string(cap));
    // cliques of the complement
    std::vector<std::uint64_t> cadj(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && !g.adjacent(u, v)) cadj[u] |= 1ull << v;
    std::vector<std::vector<std::size_t>> out;
    auto bk = [&](auto&& self, std::uint64_t R, std::uint64_t P, std::uint64_t X) -> void {
        if (!P && !X) {
            std::vector<std::size_t> set;
            for (std::uint64_t m = R; m; m &= m - 1)
                set.push_back(std::size_t(std::countr_zero(m)));
            out.push_back(std::move(set));
            return;
        }
        // pivot: vertex of P|X with most neighbors in P
        int pivot = -1, best = -1;
        for (std::uint64_t m = P | X; m; m &= m - 1) {
            const int u = std::countr_zero(m);
            const int cnt = std::popcount(P & cadj[u]);
            if (cnt > best) { best = cnt; pivot = u; }
        }
        for (std::uint64_t m = P & ~cadj[pivot]; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const std::uint64_t bit = 1ull << v;
            self(self, R | bit, P & cadj[v], X & cadj[v]);
            P &= ~bit;
            X |= bit;
        }
    };
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    bk(bk, 0, all, 0);
    std::sort(out.begin(), out.end());
    return out;
}

struct ChiFractional {
    Rational optimum;
    // covering weight per maximal independent set, aligned with the
    // maximal_independent_sets order; sums to the optimum
    std::vector<Rational> weights;
    std::vector<std::vector<std::size_t>> columns;
};

namespace detail {

// Exact primal simplex with Bland's anti-cycling rule on
//   max 1^T y   s.t.  sum_{v in S} y_v <= 1 per column S,  y >= 0,
// the LP dual of the fractional covering program; the covering weights are
// read off the optimal reduced costs of the slack variables.
struct RationalSimplex {
    std::size_t rows, vars;  // constraints, structural variables
    std::vector<std::vector<Rational>> tab;  // rows x (vars+rows+1), last = rhs
    std::vector<Rational> obj;               // reduced costs, vars+rows
    std::vector<std::size_t> basis;          // per row: variable index
    Rational objval = 0;

    RationalSimplex(const std::vector<std::vector<std::size_t>>& cols, std::size_t nvars)
        : rows(cols.size()), vars(nvars) {
        tab.assign(rows, std::vector<Rational>(vars + rows + 1, Rational(0)));
        obj.assign(vars + rows, Rational(0));
        basis.resize(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            for (const std::size_t v : cols[i]) tab[i][v] = 1;
            tab[i][vars + i] = 1;
            tab[i].back() = 1;
            basis[i] = vars + i;
        }
        for (std::size_t j = 0; j < vars; ++j) obj[j] = 1;
    }

    void pivot(std::size_t pr, std::size_t pc) {
        const Rational inv = 1 / tab[pr][pc];
        for (auto& x : tab[pr]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr || tab[i][pc] == 0) continue;
            const Rational f = tab[i][pc];
            for (std::size_t j = 0; j < tab[i].size(); ++j)
                tab[i][j] -= f * tab[pr][j];
        }
        const Rational fo = obj[pc];
        if (fo != 0) {
            for (std::size_t j = 0; j < obj.size(); ++j)
                obj[j] -= fo * tab[pr][j];
            objval += fo * tab[pr].back();
        }
        basis[pr] = pc;
    }

    void solve() {
        for (;;) {
            // Bland: smallest improving column
            std::size_t pc = obj.size();
            for (std::size_t j = 0; j < obj.size(); ++j)
                if (obj[j] > 0) { pc = j; break; }
            if (pc == obj.size()) return;
            std::size_t pr = rows;
            Rational best;
            for (std::size_t i = 0; i < rows; ++i) {
                if (tab[i][pc] <= 0) continue;
                const Rational ratio = tab[i].back() / tab[i][pc];
                if (pr == rows || ratio < best ||
                    (ratio == best && basis[i] < basis[pr])) {
                    pr = i;
                    best = ratio;
                }
            }
            if (pr == rows) throw Error("simplex: unbounded (internal)");
            pivot(pr, pc);
        }
    }
};

}  // namespace detail

// Exact fractional chromatic number via the independent-set covering LP.
inline ChiFractional fractional_chromatic_full(const Graph& g, std::size_t cap = 20) {
    ChiFractional res;
    res.columns = maximal_independent_sets(g, cap);
    detail::RationalSimplex sx(res.columns, g.num_vertices());
    sx.solve();
    res.optimum = sx.objval;
    for (std::size_t i = 0; i < res.columns.size(); ++i)
        res.weights.push_back(-sx.obj[sx.vars + i]);
    return res;
}

inline Rational fractional_chromatic(const Graph& g, std::size_t cap = 20) {
    return fractional_chromatic_full(g, cap).optimum;
}

}  // namespace haemers
