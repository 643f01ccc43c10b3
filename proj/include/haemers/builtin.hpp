#pragma once

#include <fstream>
#include <string>

#include "haemers/lift.hpp"

namespace haemers {

// Built-in graph specs: kN, cN, pN, eN, petersen, groetzsch,
// mycielski:<base>:<r>. Anything else is treated as a file path.
inline Graph graph_for_spec(const std::string& spec) {
    auto num_after = [&](std::size_t off) -> long {
        const std::string t = spec.substr(off);
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos)
            return -1;
        return std::stol(t);
    };
    if (spec.size() > 1 && !spec.empty()) {
        const long nv = num_after(1);
        if (nv > 0) {
            switch (spec[0]) {
                case 'k': return complete_graph(std::size_t(nv));
                case 'c': return cycle_graph(std::size_t(nv));
                case 'p': return path_graph(std::size_t(nv));
                case 'e': return empty_graph(std::size_t(nv));
                default: break;
            }
        }
    }
    if (spec == "petersen") return petersen_graph();
    if (spec == "groetzsch") return graph_for_spec("mycielski:c5:2");
    if (spec.rfind("mycielski:", 0) == 0) {
        const auto colon = spec.rfind(':');
        const std::string base = spec.substr(10, colon - 10);
        const int r = std::stoi(spec.substr(colon + 1));
        return generalized_mycielski(graph_for_spec(base), r);
    }
    std::ifstream in(spec);
    if (!in) throw BadParameter("unknown graph spec or unreadable file: " + spec);
    return read_graph(in);
}

// Relabel a representation whose graph is a cycle onto the canonical
// cycle_graph labels 1..n, walking the cycle from vertex 0.
template <class F>
DualRepresentation<F> relabel_as_cycle(const DualRepresentation<F>& rep) {
    const Graph& g = rep.graph;
    const std::size_t n = g.num_vertices();
    if (!is_cycle_of_length(g, n))
        throw GraphMismatch("representation graph is not a cycle");
    std::vector<std::size_t> walk{0};
    std::size_t prev = 0, cur = std::min(g.neighbors(0)[0], g.neighbors(0)[1]);
    while (cur != 0) {
        walk.push_back(cur);
        const auto nb = g.neighbors(cur);
        const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    DualRepresentation<F> out;
    out.graph = cycle_graph(n);
    out.field = rep.field;
    out.ambient = rep.ambient;
    out.local_dim = rep.local_dim;
    for (const std::size_t v : walk) out.spaces.push_back(rep.spaces[v]);
    return out;
}

// Built-in representations: kN via the standard basis, odd cN via lifting
// K_2, groetzsch and mycielski:<base>:<r> via the lift construction.
// The result's graph always equals graph_for_spec(spec).
template <class F>
DualRepresentation<F> rep_for_spec(const std::string& spec, F field) {
    if (spec.size() > 1 && spec[0] == 'k' &&
        spec.find_first_not_of("0123456789", 1) == std::string::npos)
        return standard_complete_rep(std::stoul(spec.substr(1)), field);
    if (spec.size() > 1 && spec[0] == 'c' &&
        spec.find_first_not_of("0123456789", 1) == std::string::npos) {
        const long n = std::stol(spec.substr(1));
        if (n < 3 || n % 2 == 0)
            throw BadParameter("no builtin representation for " + spec);
        const auto lifted = lift(standard_complete_rep(2, field), int((n - 1) / 2));
        return relabel_as_cycle(lifted);
    }
    if (spec == "groetzsch") return rep_for_spec("mycielski:c5:2", field);
    if (spec.rfind("mycielski:", 0) == 0) {
        const auto colon = spec.rfind(':');
        const std::string base = spec.substr(10, colon - 10);
        const int r = std::stoi(spec.substr(colon + 1));
        return lift(rep_for_spec(base, field), r);
    }
    throw BadParameter("no builtin representation for spec: " + spec);
}

}  // namespace haemers
