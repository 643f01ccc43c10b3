#pragma once

#include <limits>
#include <string>
#include <vector>

#include "haemers/representation.hpp"

namespace haemers {

// Index data of the Mycielski lifting construction. All quantities are
// exact integers; a_{-1} = 0 is stored explicitly in front of a_0..a_{r-1}.
struct LiftPlan {
    int r = 0;
    BigInt n, d;
    std::vector<BigInt> a;  // a[i+1] holds a_i, a[0] = a_{-1} = 0
    BigInt M, N, D;
    BigInt tail_lo, tail_hi;  // 1-based interval [a_{r-1}+1, a_{r-1}+d^{2r-1}]

    const BigInt& ai(int i) const { return a[std::size_t(i) + 1]; }

    Rational ratio() const { return Rational(N, D); }

    std::string summary() const {
        std::string s = "r=" + std::to_string(r) + " n=" + n.str() +
                        " d=" + d.str() + " M=" + M.str() + " N=" + N.str() +
                        " D=" + D.str() + " a=";
        for (std::size_t i = 1; i < a.size(); ++i)
            s += (i > 1 ? "," : "") + a[i].str();
        return s;
    }
};

// a_i = sum_{j=0}^{i} d^{2r-2-j} (n-d)^j, M = a_{r-1} + d^{2r-1},
// N = n a_{r-1} + d^{2r-1}, D = sum_{i=0}^{r-1} d^{2r-1-i} (n-d)^i.
inline LiftPlan lift_plan(const BigInt& n, const BigInt& d, int r) {
    if (r < 2) throw BadParameter("lift_plan needs r >= 2");
    if (d < 1 || n <= d) throw BadParameter("lift_plan needs n > d >= 1");
    LiftPlan p;
    p.r = r;
    p.n = n;
    p.d = d;
    p.a.push_back(0);
    BigInt acc = 0;
    for (int j = 0; j <= r - 1; ++j) {
        acc += bigint_pow(d, 2 * r - 2 - j) * bigint_pow(n - d, j);
        p.a.push_back(acc);
    }
    const BigInt tail = bigint_pow(d, 2 * r - 1);
    p.M = p.ai(r - 1) + tail;
    p.N = n * p.ai(r - 1) + tail;
    p.D = 0;
    for (int i = 0; i <= r - 1; ++i)
        p.D += bigint_pow(d, 2 * r - 1 - i) * bigint_pow(n - d, i);
    p.tail_lo = p.ai(r - 1) + 1;
    p.tail_hi = p.ai(r - 1) + tail;
    // N/D = n/d + 1/sum_{i<r} (n/d - 1)^i, as exact rationals
    const Rational h(n, d);
    if (p.ratio() != h + 1 / geometric_sum(h - 1, r))
        throw Error("lift_plan: ratio identity violated (internal)");
    return p;
}

namespace detail {

inline std::size_t to_index(const BigInt& v, const char* what) {
    if (v < 0 || v > std::numeric_limits<std::size_t>::max())
        throw TooLarge(std::string(what) + " does not fit an index");
    return v.convert_to<std::size_t>();
}

// r = 1: M_1(G) = G + K_1 realized directly with Mycielski labels.
template <class F>
DualRepresentation<F> lift_r1(const DualRepresentation<F>& rep) {
    DualRepresentation<F> out;
    out.graph = generalized_mycielski(rep.graph, 1);
    out.field = rep.field;
    out.ambient = rep.ambient + rep.local_dim;
    out.local_dim = rep.local_dim;
    for (const auto& s : rep.spaces) {
        Matrix<F> m(rep.field, s.dim(), out.ambient);
        for (std::size_t i = 0; i < s.dim(); ++i)
            for (std::size_t j = 0; j < s.ambient(); ++j)
                m.at(i, j) = s.basis().at(i, j);
        out.spaces.push_back(Subspace<F>::span(m));
    }
    out.spaces.push_back(
        gamma_interval(rep.field, out.ambient, rep.ambient + 1, out.ambient));
    return compress(out);
}

// G edgeless: M_r(G) is a star plus isolated vertices; a (2,1)-representation
// realizes value 2 (apex on e1, star leaves on e2, isolated vertices on e1).
template <class F>
DualRepresentation<F> lift_edgeless(const DualRepresentation<F>& rep, int r) {
    DualRepresentation<F> out;
    out.graph = generalized_mycielski(rep.graph, r);
    out.field = rep.field;
    out.ambient = 2;
    out.local_dim = 1;
    const auto e1 = gamma_interval(rep.field, 2, 1, 1);
    const auto e2 = gamma_interval(rep.field, 2, 2, 2);
    for (std::size_t v = 0; v < out.graph.num_vertices(); ++v) {
        const auto& l = out.graph.label(v);
        out.spaces.push_back(
            l.kind == VertexLabel::Kind::Level && l.level == r - 1 ? e2 : e1);
    }
    return out;
}

}  // namespace detail

// The explicit (N,D)-representation of M_r(G) built from a valid dual
// (n,d)-representation of G. Assembled in ambient F^{n*M}, compressed to
// its total span (dimension <= N) before returning.
template <class F>
DualRepresentation<F> lift(const DualRepresentation<F>& rep, int r) {
    if (r < 1) throw BadParameter("lift needs r >= 1");
    if (!verify(rep).valid)
        throw InvalidInput("lift: input representation is not valid");
    if (r == 1) return detail::lift_r1(rep);
    if (rep.graph.num_edges() == 0) return detail::lift_edgeless(rep, r);

    const std::size_t n = rep.ambient;
    const LiftPlan plan = lift_plan(BigInt(n), BigInt(rep.local_dim), r);
    const std::size_t M = detail::to_index(plan.M, "plan M");
    const F field = rep.field;
    check_cells(detail::to_index(plan.D, "plan D"), n * M);

    // shared pieces
    Matrix<F> all(field, 0, n);
    for (const auto& s : rep.spaces) all = all.vstack(s.basis());
    const auto sum_all = Subspace<F>::span(all);
    auto gam = [&](const BigInt& lo, const BigInt& hi) {
        return gamma_interval(field, M, detail::to_index(lo, "gamma lo"),
                              detail::to_index(hi, "gamma hi"));
    };
    // union of the alternating block intervals used by even/odd levels
    auto gamma_union = [&](int count, bool odd_family) {
        Matrix<F> rows(field, 0, M);
        for (int i = 0; i < count; ++i) {
            const BigInt lo = odd_family ? plan.ai(2 * i) + 1 : plan.ai(2 * i - 1) + 1;
            const BigInt hi = odd_family ? plan.ai(2 * i + 1) : plan.ai(2 * i);
            rows = rows.vstack(gam(lo, hi).basis());
        }
        return Subspace<F>::span(rows);
    };
    // The paper's tail term lives in F^M; inside F^{n*M} it is realized as a
    // fixed coordinate subspace supported on the tail blocks: e_1 (x) e^(j)
    // for j in [a_{r-1}+1, M]. Only block-interval disjointness matters.
    const auto tail =
        subspace_tensor(gamma_interval(field, n, 1, 1), gam(plan.tail_lo, plan.tail_hi));

    DualRepresentation<F> out;
    out.graph = generalized_mycielski(rep.graph, r);
    out.field = field;
    out.ambient = n * M;
    out.local_dim = detail::to_index(plan.D, "plan D");

    const std::size_t nv = rep.graph.num_vertices();
    for (int k = 0; k < r; ++k) {
        const bool odd = k % 2 == 1;
        const int ell = k / 2;
        const auto shared = subspace_tensor(sum_all, gamma_union(ell, odd));
        const auto vtail = gam(plan.ai(k - 1) + 1, plan.ai(r - 1));
        for (std::size_t v = 0; v < nv; ++v) {
            Matrix<F> rows = shared.basis();
            rows = rows.vstack(subspace_tensor(rep.spaces[v], vtail).basis());
            if (odd) rows = rows.vstack(tail.basis());
            out.spaces.push_back(Subspace<F>::span(rows));
        }
    }
    {  // apex
        const bool odd = r % 2 == 1;
        const int t = r / 2;
        Matrix<F> rows = subspace_tensor(sum_all, gamma_union(t, odd)).basis();
        if (odd) rows = rows.vstack(tail.basis());
        out.spaces.push_back(Subspace<F>::span(rows));
    }
    return compress(out);
}

// Per-vertex dimension law of the construction: every lifted subspace has
// dim exactly D and the total span is at most N.
template <class F>
VerificationReport assert_lift_dimensions(const DualRepresentation<F>& lifted,
                                          const LiftPlan& plan) {
    VerificationReport rpt;
    rpt.expected_dim = detail::to_index(plan.D, "plan D");
    rpt.valid = true;
    Matrix<F> all(lifted.field, 0, lifted.ambient);
    for (std::size_t v = 0; v < lifted.graph.num_vertices(); ++v) {
        VertexCheck c;
        c.vertex = lifted.graph.label(v);
        c.dim = lifted.spaces[v].dim();
        c.ok = c.dim == rpt.expected_dim;
        rpt.valid = rpt.valid && c.ok;
        rpt.checks.push_back(std::move(c));
        all = all.vstack(lifted.spaces[v].basis());
    }
    rpt.total_span_dim = Subspace<F>::span(all).dim();
    rpt.valid = rpt.valid && BigInt(rpt.total_span_dim) <= plan.N;
    return rpt;
}

}  // namespace haemers
