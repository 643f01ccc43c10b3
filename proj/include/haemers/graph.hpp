#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "haemers/base.hpp"

namespace haemers {

// Vertex labels carry Mycielski provenance: Base("v"), Level("v", k)
// printed as v@k, and the apex printed as z. Nested constructions flatten
// the inner label into the name string.
struct VertexLabel {
    enum class Kind { Base, Level, Apex };
    Kind kind = Kind::Base;
    std::string name;
    int level = 0;

    static VertexLabel base(std::string n) { return {Kind::Base, std::move(n), 0}; }
    static VertexLabel lvl(std::string n, int k) { return {Kind::Level, std::move(n), k}; }
    static VertexLabel apex() { return {Kind::Apex, "", 0}; }

    std::string str() const {
        switch (kind) {
            case Kind::Base: return name;
            case Kind::Level: return name + "@" + std::to_string(level);
            case Kind::Apex: return "z";
        }
        return {};
    }
    static VertexLabel parse(const std::string& s) {
        if (s == "z") return apex();
        const auto at = s.rfind('@');
        if (at != std::string::npos && at + 1 < s.size()) {
            const std::string tail = s.substr(at + 1);
            if (tail.find_first_not_of("0123456789") == std::string::npos)
                return lvl(s.substr(0, at), std::stoi(tail));
        }
        return base(s);
    }

    auto operator<=>(const VertexLabel&) const = default;
};

// Finite simple graph with labeled vertices. Immutable once built through
// the named constructors below; the mutating methods are for builders.
class Graph {
public:
    std::size_t add_vertex(VertexLabel l) {
        if (index_.count(l))
            throw BadParameter("duplicate vertex label " + l.str());
        index_[l] = labels_.size();
        labels_.push_back(std::move(l));
        for (auto& row : adj_) row.push_back(0);
        adj_.emplace_back(labels_.size(), 0);
        return labels_.size() - 1;
    }
    void add_edge(std::size_t u, std::size_t v) {
        if (u >= labels_.size() || v >= labels_.size() || u == v)
            throw BadParameter("bad edge endpoints");
        adj_[u][v] = adj_[v][u] = 1;
    }
    void add_edge(const VertexLabel& u, const VertexLabel& v) {
        add_edge(index(u), index(v));
    }

    std::size_t num_vertices() const { return labels_.size(); }
    std::size_t num_edges() const {
        std::size_t e = 0;
        for (std::size_t u = 0; u < labels_.size(); ++u)
            for (std::size_t v = u + 1; v < labels_.size(); ++v) e += adj_[u][v];
        return e;
    }
    const VertexLabel& label(std::size_t i) const { return labels_[i]; }
    const std::vector<VertexLabel>& labels() const { return labels_; }
    bool has_vertex(const VertexLabel& l) const { return index_.count(l) != 0; }
    std::size_t index(const VertexLabel& l) const {
        const auto it = index_.find(l);
        if (it == index_.end()) throw UnknownVertex("unknown vertex " + l.str());
        return it->second;
    }
    bool adjacent(std::size_t u, std::size_t v) const { return adj_[u][v] != 0; }
    std::vector<std::size_t> neighbors(std::size_t u) const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < labels_.size(); ++v)
            if (adj_[u][v]) out.push_back(v);
        return out;
    }
    std::size_t degree(std::size_t u) const { return neighbors(u).size(); }

    bool operator==(const Graph& o) const {
        return labels_ == o.labels_ && adj_ == o.adj_;
    }

private:
    std::vector<VertexLabel> labels_;
    std::map<VertexLabel, std::size_t> index_;
    std::vector<std::vector<std::uint8_t>> adj_;
};

inline Graph complete_graph(std::size_t m) {
    if (m < 1) throw BadParameter("complete graph needs m >= 1");
    Graph g;
    for (std::size_t i = 1; i <= m; ++i) g.add_vertex(VertexLabel::base(std::to_string(i)));
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

inline Graph cycle_graph(std::size_t n) {
    if (n < 3) throw BadParameter("cycle graph needs n >= 3");
    Graph g;
    for (std::size_t i = 1; i <= n; ++i) g.add_vertex(VertexLabel::base(std::to_string(i)));
    for (std::size_t u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
    return g;
}

inline Graph empty_graph(std::size_t n) {
    if (n < 1) throw BadParameter("empty graph needs n >= 1");
    Graph g;
    for (std::size_t i = 1; i <= n; ++i) g.add_vertex(VertexLabel::base(std::to_string(i)));
    return g;
}

inline Graph path_graph(std::size_t n) {
    if (n < 1) throw BadParameter("path graph needs n >= 1");
    Graph g;
    for (std::size_t i = 1; i <= n; ++i) g.add_vertex(VertexLabel::base(std::to_string(i)));
    for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
    return g;
}

inline Graph petersen_graph() {
    Graph g;
    for (int i = 1; i <= 10; ++i) g.add_vertex(VertexLabel::base(std::to_string(i)));
    for (std::size_t u = 0; u < 5; ++u) {
        g.add_edge(u, (u + 1) % 5);          // outer C5
        g.add_edge(u, u + 5);                // spokes
        g.add_edge(u + 5, (u + 2) % 5 + 5);  // inner pentagram
    }
    return g;
}

// V(M_r(G)) = V(G) x {0..r-1} union {z}; level-0 copy of E(G), cross-level
// edges for |i-j| = 1, and the apex joined to level r-1.
inline Graph generalized_mycielski(const Graph& g, int r) {
    if (r < 1) throw BadParameter("mycielski needs r >= 1");
    Graph m;
    const std::size_t nv = g.num_vertices();
    for (int k = 0; k < r; ++k)
        for (std::size_t v = 0; v < nv; ++v)
            m.add_vertex(VertexLabel::lvl(g.label(v).str(), k));
    const std::size_t apex = m.add_vertex(VertexLabel::apex());
    auto id = [nv](std::size_t v, int k) { return std::size_t(k) * nv + v; };
    for (std::size_t u = 0; u < nv; ++u)
        for (std::size_t v = u + 1; v < nv; ++v) {
            if (!g.adjacent(u, v)) continue;
            m.add_edge(id(u, 0), id(v, 0));
            for (int k = 0; k + 1 < r; ++k) {
                m.add_edge(id(u, k), id(v, k + 1));
                m.add_edge(id(v, k), id(u, k + 1));
            }
        }
    for (std::size_t v = 0; v < nv; ++v) m.add_edge(id(v, r - 1), apex);
    return m;
}

// Disjoint union plus all cross edges. Labels are prefixed to stay unique.
inline Graph join(const Graph& g, const Graph& h) {
    Graph j;
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        j.add_vertex(VertexLabel::base("a." + g.label(v).str()));
    for (std::size_t v = 0; v < h.num_vertices(); ++v)
        j.add_vertex(VertexLabel::base("b." + h.label(v).str()));
    const std::size_t off = g.num_vertices();
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (std::size_t v = u + 1; v < g.num_vertices(); ++v)
            if (g.adjacent(u, v)) j.add_edge(u, v);
    for (std::size_t u = 0; u < h.num_vertices(); ++u)
        for (std::size_t v = u + 1; v < h.num_vertices(); ++v)
            if (h.adjacent(u, v)) j.add_edge(off + u, off + v);
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (std::size_t v = 0; v < h.num_vertices(); ++v) j.add_edge(u, off + v);
    return j;
}

// OR-product: (g,h) ~ (g',h') iff g ~ g' or h ~ h'.
inline Graph or_product(const Graph& g, const Graph& h) {
    Graph p;
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (std::size_t v = 0; v < h.num_vertices(); ++v)
            p.add_vertex(VertexLabel::base(g.label(u).str() + "," + h.label(v).str()));
    const std::size_t nh = h.num_vertices();
    for (std::size_t a = 0; a < p.num_vertices(); ++a)
        for (std::size_t b = a + 1; b < p.num_vertices(); ++b) {
            const std::size_t gu = a / nh, hu = a % nh, gv = b / nh, hv = b % nh;
            if ((gu != gv && g.adjacent(gu, gv)) || (hu != hv && h.adjacent(hu, hv)))
                p.add_edge(a, b);
        }
    return p;
}

namespace detail {

struct CliqueSearch {
    const std::vector<std::uint64_t>& adj;
    std::size_t best = 0;

    // greedy coloring upper bound on the candidate set
    std::size_t color_bound(std::uint64_t cand) const {
        std::size_t colors = 0;
        while (cand) {
            std::uint64_t cls = cand;
            ++colors;
            while (cls) {
                const int v = std::countr_zero(cls);
                cand &= ~(1ull << v);
                cls &= ~adj[v];
                cls &= ~(1ull << v);
            }
        }
        return colors;
    }

    void run(std::uint64_t cand, std::size_t depth) {
        if (depth > best) best = depth;
        if (!cand || depth + color_bound(cand) <= best) return;
        while (cand) {
            if (depth + std::size_t(std::popcount(cand)) <= best) return;
            const int v = std::countr_zero(cand);
            cand &= ~(1ull << v);
            run(cand & adj[v], depth + 1);
        }
    }
};

}  // namespace detail

// Exact clique number by branch and bound with a greedy coloring bound.
inline std::size_t clique_number(const Graph& g, std::size_t cap = 40) {
    const std::size_t n = g.num_vertices();
    if (n > cap || n > 64)
        throw TooLarge("clique_number: " + std::to_string(n) +
                       " vertices exceeds cap " + std::to_string(cap));
    std::vector<std::uint64_t> adj(n, 0);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
            if (u != v && g.adjacent(u, v)) adj[u] |= 1ull << v;
    detail::CliqueSearch s{adj};
    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    s.run(all, 0);
    return s.best;
}

// Special-case isomorphism checks used by the test suite.
inline bool is_cycle_of_length(const Graph& g, std::size_t len) {
    if (g.num_vertices() != len || g.num_edges() != len || len < 3) return false;
    for (std::size_t v = 0; v < len; ++v)
        if (g.degree(v) != 2) return false;
    // single cycle: walk it
    std::size_t prev = 0, cur = g.neighbors(0)[0], steps = 1;
    while (cur != 0 && steps <= len) {
        const auto nb = g.neighbors(cur);
        const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        ++steps;
    }
    return cur == 0 && steps == len;
}

inline bool is_star_plus_isolated(const Graph& g, std::size_t leaves) {
    std::size_t centers = 0, leaf = 0;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
        const auto d = g.degree(v);
        if (d == leaves && leaves > 1) ++centers;
        else if (d == 1) ++leaf;
        else if (d != 0) return false;
    }
    return centers == 1 && leaf == leaves && g.num_edges() == leaves;
}

inline void write_graph(std::ostream& os, const Graph& g) {
    os << "vertices " << g.num_vertices() << "\n";
    for (std::size_t v = 0; v < g.num_vertices(); ++v)
        os << "vertex " << g.label(v).str() << "\n";
    for (std::size_t u = 0; u < g.num_vertices(); ++u)
        for (std::size_t v = u + 1; v < g.num_vertices(); ++v)
            if (g.adjacent(u, v))
                os << "edge " << g.label(u).str() << " " << g.label(v).str() << "\n";
}

inline Graph read_graph(std::istream& is) {
    std::string kw;
    std::size_t n;
    if (!(is >> kw >> n) || kw != "vertices")
        throw ParseError("graph: expected 'vertices N'");
    Graph g;
    std::string a, b;
    while (is >> kw) {
        if (kw == "vertex") {
            if (!(is >> a)) throw ParseError("graph: truncated vertex line");
            g.add_vertex(VertexLabel::parse(a));
        } else if (kw == "edge") {
            if (!(is >> a >> b)) throw ParseError("graph: truncated edge line");
            // vertices may be declared implicitly by their first edge
            auto l1 = VertexLabel::parse(a), l2 = VertexLabel::parse(b);
            if (!g.has_vertex(l1)) g.add_vertex(l1);
            if (!g.has_vertex(l2)) g.add_vertex(l2);
            g.add_edge(l1, l2);
        } else {
            throw ParseError("graph: unknown keyword '" + kw + "'");
        }
    }
    if (g.num_vertices() != n)
        throw ParseError("graph: vertex count mismatch");
    return g;
}

}  // namespace haemers
