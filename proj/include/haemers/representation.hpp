#pragma once

#include <functional>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "haemers/graph.hpp"
#include "haemers/subspace.hpp"

namespace haemers {

// Dual (n,d)-representation: one subspace per vertex, all with the shared
// ambient dimension; valid iff every X_v has dim d and meets the span of its
// neighbors' subspaces only in {0}. Spaces are stored in graph vertex order.
template <class F>
struct DualRepresentation {
    Graph graph;
    F field;
    std::size_t ambient = 0;
    std::size_t local_dim = 0;
    std::vector<Subspace<F>> spaces;

    const Subspace<F>& space(const VertexLabel& l) const {
        return spaces[graph.index(l)];
    }
};

struct VertexCheck {
    VertexLabel vertex;
    std::size_t dim = 0;
    std::size_t intersection_dim = 0;
    bool ok = false;
};

struct VerificationReport {
    bool valid = false;
    std::size_t expected_dim = 0;
    std::size_t total_span_dim = 0;
    std::vector<VertexCheck> checks;
};

template <class F>
Subspace<F> neighbor_sum(const DualRepresentation<F>& rep, std::size_t v) {
    auto s = Subspace<F>::zero(rep.field, rep.ambient);
    Matrix<F> stacked = s.basis();
    for (const std::size_t w : rep.graph.neighbors(v))
        stacked = stacked.vstack(rep.spaces[w].basis());
    return Subspace<F>::span(stacked);
}

template <class F>
VerificationReport verify(const DualRepresentation<F>& rep) {
    VerificationReport rpt;
    rpt.expected_dim = rep.local_dim;
    rpt.valid = true;
    Matrix<F> all(rep.field, 0, rep.ambient);
    for (std::size_t v = 0; v < rep.graph.num_vertices(); ++v) {
        VertexCheck c;
        c.vertex = rep.graph.label(v);
        c.dim = rep.spaces[v].dim();
        c.intersection_dim =
            subspace_intersect(rep.spaces[v], neighbor_sum(rep, v)).dim();
        c.ok = c.dim == rep.local_dim && c.intersection_dim == 0;
        rpt.valid = rpt.valid && c.ok;
        rpt.checks.push_back(std::move(c));
        all = all.vstack(rep.spaces[v].basis());
    }
    rpt.total_span_dim = Subspace<F>::span(all).dim();
    return rpt;
}

template <class F>
Rational value(const DualRepresentation<F>& rep) {
    if (rep.local_dim == 0) throw BadParameter("representation with d = 0");
    return Rational(rep.ambient, rep.local_dim);
}

// K_m with X_i = span(e_i) in F^m: the (m,1)-representation realizing m.
template <class F>
DualRepresentation<F> standard_complete_rep(std::size_t m, F field) {
    if (m < 1) throw BadParameter("standard_complete_rep needs m >= 1");
    DualRepresentation<F> rep;
    rep.graph = complete_graph(m);
    rep.field = field;
    rep.ambient = m;
    rep.local_dim = 1;
    for (std::size_t i = 0; i < m; ++i)
        rep.spaces.push_back(gamma_interval(field, m, i + 1, i + 1));
    return rep;
}

// Tensor every X_v with the full space F^t; validity is preserved.
template <class F>
DualRepresentation<F> scale_d(const DualRepresentation<F>& rep, std::size_t t) {
    if (t < 1) throw BadParameter("scale_d needs t >= 1");
    if (t == 1) return rep;
    DualRepresentation<F> out;
    out.graph = rep.graph;
    out.field = rep.field;
    out.ambient = rep.ambient * t;
    out.local_dim = rep.local_dim * t;
    const auto full = Subspace<F>::full(rep.field, t);
    for (const auto& s : rep.spaces) out.spaces.push_back(subspace_tensor(s, full));
    return out;
}

// Representation of join(G_a, G_b) in block-disjoint coordinates, after
// equalizing d to lcm(d_a, d_b). value = value(a) + value(b).
template <class F>
DualRepresentation<F> join_reps(const DualRepresentation<F>& a,
                                const DualRepresentation<F>& b) {
    if (a.field.spec() != b.field.spec())
        throw FieldMismatch("join_reps over different fields");
    const std::size_t d = std::lcm(a.local_dim, b.local_dim);
    const auto sa = scale_d(a, d / a.local_dim);
    const auto sb = scale_d(b, d / b.local_dim);
    DualRepresentation<F> out;
    out.graph = join(a.graph, b.graph);
    out.field = a.field;
    out.ambient = sa.ambient + sb.ambient;
    out.local_dim = d;
    auto embed = [&](const Subspace<F>& s, std::size_t offset) {
        Matrix<F> m(out.field, s.dim(), out.ambient);
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.ambient(); ++j)
                m.at(i, offset + j) = s.basis().at(i, j);
        return Subspace<F>::span(m);
    };
    for (const auto& s : sa.spaces) out.spaces.push_back(embed(s, 0));
    for (const auto& s : sb.spaces) out.spaces.push_back(embed(s, sa.ambient));
    return out;
}

// Change of basis onto the span of all X_v. The total span is in RREF, so
// a vector inside it has coordinates given by its entries at the pivot
// columns; restriction to those columns is a linear isomorphism of the span.
template <class F>
DualRepresentation<F> compress(const DualRepresentation<F>& rep) {
    Matrix<F> all(rep.field, 0, rep.ambient);
    for (const auto& s : rep.spaces) all = all.vstack(s.basis());
    const auto total = Subspace<F>::span(all);
    const std::size_t s = total.dim();
    if (s == rep.ambient) return rep;
    std::vector<std::size_t> pivots;
    for (std::size_t i = 0, j = 0; i < s; ++i) {
        while (rep.field.is_zero(total.basis().at(i, j))) ++j;
        pivots.push_back(j);
    }
    DualRepresentation<F> out;
    out.graph = rep.graph;
    out.field = rep.field;
    out.ambient = s;
    out.local_dim = rep.local_dim;
    for (const auto& sp : rep.spaces) {
        Matrix<F> m(rep.field, sp.dim(), s);
        for (std::size_t i = 0; i < sp.dim(); ++i)
            for (std::size_t j = 0; j < s; ++j)
                m.at(i, j) = sp.basis().at(i, pivots[j]);
        out.spaces.push_back(Subspace<F>::span(m));
    }
    return out;
}

// dim of the intersection over groups, where each group contributes the sum
// of its members' subspaces. Singleton groups give the plain chains of the
// recursion audit; mixed groups cover terms like Sum_j(...) + X_(1,k).
template <class F>
std::size_t intersection_dim(const DualRepresentation<F>& rep,
                             const std::vector<std::vector<VertexLabel>>& groups) {
    if (groups.empty()) throw BadParameter("intersection_dim needs >= 1 group");
    std::optional<Subspace<F>> acc;
    for (const auto& grp : groups) {
        Matrix<F> m(rep.field, 0, rep.ambient);
        for (const auto& l : grp) m = m.vstack(rep.space(l).basis());
        auto s = Subspace<F>::span(m);
        acc = acc ? subspace_intersect(*acc, s) : std::move(s);
    }
    return acc->dim();
}

// --- text format -----------------------------------------------------------
//
//   graph <spec-or-path>
//   field <p|Q>
//   n <int>
//   d <int>
//   vertex <label>
//   <d rows of n scalars>           (basis of X_v, canonical RREF)
//   ...

struct RepHeader {
    std::string graph_ref;
    FieldSpec field;
    std::size_t n = 0, d = 0;
};

template <class F>
void write_representation(std::ostream& os, const DualRepresentation<F>& rep,
                          const std::string& graph_ref) {
    os << "graph " << graph_ref << "\n";
    os << "field " << rep.field.spec().str() << "\n";
    os << "n " << rep.ambient << "\n";
    os << "d " << rep.local_dim << "\n";
    for (std::size_t v = 0; v < rep.graph.num_vertices(); ++v) {
        os << "vertex " << rep.graph.label(v).str() << "\n";
        const auto& b = rep.spaces[v].basis();
        for (std::size_t i = 0; i < b.rows(); ++i) {
            for (std::size_t j = 0; j < b.cols(); ++j)
                os << (j ? " " : "") << rep.field.str(b.at(i, j));
            os << "\n";
        }
    }
}

inline RepHeader read_rep_header(std::istream& is) {
    RepHeader h;
    std::string kw, val;
    if (!(is >> kw >> h.graph_ref) || kw != "graph")
        throw ParseError("representation: expected 'graph <ref>'");
    if (!(is >> kw >> val) || kw != "field")
        throw ParseError("representation: expected 'field <p|Q>'");
    h.field = FieldSpec::parse(val);
    if (!(is >> kw >> h.n) || kw != "n")
        throw ParseError("representation: expected 'n <int>'");
    if (!(is >> kw >> h.d) || kw != "d")
        throw ParseError("representation: expected 'd <int>'");
    return h;
}

template <class F>
DualRepresentation<F> read_representation_body(std::istream& is, const RepHeader& h,
                                               Graph graph, F field) {
    DualRepresentation<F> rep;
    rep.graph = std::move(graph);
    rep.field = field;
    rep.ambient = h.n;
    rep.local_dim = h.d;
    std::vector<std::optional<Subspace<F>>> spaces(rep.graph.num_vertices());
    std::string kw, lbl;
    while (is >> kw) {
        if (kw != "vertex") throw ParseError("representation: expected 'vertex'");
        if (!(is >> lbl)) throw ParseError("representation: truncated vertex");
        const std::size_t v = rep.graph.index(VertexLabel::parse(lbl));
        Matrix<F> m(field, h.d, h.n);
        for (std::size_t i = 0; i < h.d; ++i)
            for (std::size_t j = 0; j < h.n; ++j) {
                std::string tok;
                if (!(is >> tok)) throw ParseError("representation: truncated basis");
                m.at(i, j) = field.parse(tok);
            }
        spaces[v] = Subspace<F>::span(m);
    }
    for (std::size_t v = 0; v < spaces.size(); ++v) {
        if (!spaces[v])
            throw ParseError("representation: missing vertex " +
                             rep.graph.label(v).str());
        rep.spaces.push_back(std::move(*spaces[v]));
    }
    return rep;
}

}  // namespace haemers
