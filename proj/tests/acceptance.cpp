// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "test_util.hpp"

using namespace haemers;
using namespace testutil;

namespace {

int failures = 0;

template <class Fn>
void criterion(int num, const char* what, Fn fn) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string note;
    try {
        ok = fn();
    } catch (const std::exception& e) {
        note = std::string(" [exception: ") + e.what() + "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!ok) ++failures;
    std::printf("criterion %d: %s - %s (%.2fs)%s\n", num, ok ? "PASS" : "FAIL",
                what, secs, note.c_str());
    std::fflush(stdout);
}

bool criterion1() {
    bool ok = true;
    for (const std::uint32_t p : {2u, 3u})
        for (int m = 2; m <= 4; ++m)
            for (int r = 2; r <= 5; ++r) {
                const auto plan = lift_plan(m, 1, r);
                const auto lifted = lift(standard_complete_rep(m, Gf(p)), r);
                ok = ok && verify(lifted).valid;
                ok = ok && assert_lift_dimensions(lifted, plan).valid;
                for (const auto& s : lifted.spaces)
                    ok = ok && BigInt(s.dim()) == plan.D;
                const Rational h(m);
                ok = ok && plan.ratio() == h + 1 / geometric_sum(h - 1, r);
                ok = ok && value(lifted) == plan.ratio();
            }
    return ok;
}

bool criterion2() {
    const auto c5 = lift(standard_complete_rep(2, Gf(2)), 2);
    const auto grz = lift(c5, 2);
    const auto plan = lift_plan(5, 2, 2);
    return plan.N == 58 && plan.D == 20 && grz.ambient == 58 &&
           grz.local_dim == 20 && value(grz) == Rational(29, 10) &&
           verify(grz).valid &&
           grz.graph == generalized_mycielski(c5.graph, 2);
}

bool criterion3() {
    const Graph c5 = cycle_graph(5);
    const Gf f2(2);
    const auto yes = exists_representation(c5, f2, 5, 2);
    const auto no = exists_representation(c5, f2, 4, 2);
    return yes.outcome == SearchOutcome::Found && yes.witness &&
           verify(*yes.witness).valid &&
           no.outcome == SearchOutcome::NotFound &&
           min_ambient(c5, f2, 1, 5) == 3;
}

bool criterion4() {
    for (int m = 2; m <= 6; ++m)
        for (int r = 4; r <= 10; ++r) {
            for (const auto& res : lemma2_residual(recursion_table(m, r)))
                if (!res.is_zero()) return false;
            if (!lemma3_identity_check(m, r)) return false;
        }
    return true;
}

bool criterion5() {
    for (const std::uint32_t p : {2u, 3u})
        for (int m = 2; m <= 4; ++m)
            for (int r = 2; r <= 5; ++r) {
                const auto rep = lift(standard_complete_rep(m, Gf(p)), r);
                if (audit_against_table(rep, recursion_table(m, r)).violations != 0)
                    return false;
            }
    return true;
}

bool criterion6() {
    for (int m = 2; m <= 6; ++m)
        for (int r = 4; r <= 10; ++r) {
            const auto lb = clique_lower_bound(m, r);
            if (lb != lift_upper_bound(m, r) || lb != tardif_chi(m, r))
                return false;
        }
    return lift_upper_bound(7, 2) == Rational(50, 7);
}

bool criterion7() {
    return fractional_chromatic(cycle_graph(5)) == Rational(5, 2) &&
           fractional_chromatic(graph_for_spec("groetzsch")) == Rational(29, 10);
}

bool criterion8() {
    return std::fabs(theta_mycielski2(1.0L) - 2.0L) < 1e-12L &&
           std::fabs(theta_mycielski2(2.0L) - std::sqrt(5.0L)) < 1e-9L;
}

// --- criterion 9: property suites, >= 1000 random cases each ---------------

template <class F>
bool grassmann_cases(const F& f, std::uint64_t seed, int cases) {
    auto rng = make_rng(seed);
    for (int it = 0; it < cases; ++it) {
        const auto a = random_subspace(f, rng, 6, 4);
        const auto b = random_subspace(f, rng, 6, 4);
        if (a.dim() + b.dim() !=
            subspace_sum(a, b).dim() + subspace_intersect(a, b).dim())
            return false;
    }
    return true;
}

template <class F>
bool tensor_cases(const F& f, std::uint64_t seed, int cases) {
    auto rng = make_rng(seed);
    for (int it = 0; it < cases; ++it) {
        const auto u = random_subspace(f, rng, 3, 3);
        const auto v = random_subspace(f, rng, 3, 3);
        const auto w = random_subspace(f, rng, 3, 3);
        if (subspace_tensor(u, v).dim() != u.dim() * v.dim()) return false;
        if (subspace_tensor(subspace_sum(u, v), w) !=
            subspace_sum(subspace_tensor(u, w), subspace_tensor(v, w)))
            return false;
        if (subspace_intersect(u, v).dim() == 0 &&
            subspace_intersect(subspace_tensor(u, w), subspace_tensor(v, w)).dim() != 0)
            return false;
    }
    return true;
}

template <class F>
bool interval_cases(const F& f, std::uint64_t seed, int cases) {
    auto rng = make_rng(seed);
    auto rnd = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    for (int it = 0; it < cases; ++it) {
        const std::size_t M = rnd(2, 6), m = rnd(2, 3);
        const std::size_t c = rnd(1, M), d = rnd(c, M);
        Matrix<F> left(f, 0, m * M);
        for (std::size_t i = 0, k = rnd(0, 2); i < k; ++i) {
            std::size_t a = rnd(1, M), b = rnd(a, M);
            bool found = false;
            for (int tries = 0; tries < 20 && !found; ++tries) {
                a = rnd(1, M);
                b = rnd(a, M);
                found = b < c || a > d;
            }
            if (!found) continue;
            left = left.vstack(
                subspace_tensor(random_subspace(f, rng, m, m),
                                gamma_interval(f, M, a, b))
                    .basis());
        }
        Matrix<F> right(f, 0, m * M);
        for (std::size_t j = 0, l = rnd(0, 2); j < l; ++j) {
            const std::size_t a = rnd(1, M), b = rnd(a, M);
            right = right.vstack(subspace_tensor(random_subspace(f, rng, m, m),
                                                 gamma_interval(f, M, a, b))
                                     .basis());
        }
        const auto y = subspace_tensor(random_subspace(f, rng, m, m),
                                       gamma_interval(f, M, c, d));
        const auto ls = Subspace<F>::span(left);
        if (subspace_intersect(ls, Subspace<F>::span(right.vstack(y.basis()))) !=
            subspace_intersect(ls, Subspace<F>::span(right)))
            return false;
    }
    return true;
}

template <class F>
bool clique_sum_cases(const F& f, std::uint64_t seed, int cases) {
    std::vector<DualRepresentation<F>> pool;
    for (std::size_t m = 1; m <= 4; ++m) pool.push_back(standard_complete_rep(m, f));
    pool.push_back(rep_for_spec("c5", f));
    auto rng = make_rng(seed);
    for (int it = 0; it < cases; ++it) {
        auto pick = [&] {
            const auto& r =
                pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
            return scale_d(r, std::uniform_int_distribution<std::size_t>(1, 2)(rng));
        };
        const auto a = pick(), b = pick();
        const auto j = join_reps(a, b);
        if (value(j) != value(a) + value(b) || !verify(j).valid) return false;
    }
    return true;
}

bool omega_mycielski_cases(std::uint64_t seed, int cases) {
    auto rng = make_rng(seed);
    for (int it = 0; it < cases; ++it) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 8)(rng);
        const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
        Graph g = random_graph(rng, n, p);
        if (g.num_edges() == 0) g.add_edge(0, 1);  // the identity needs an edge
        if (clique_number(generalized_mycielski(g, 2)) != clique_number(g))
            return false;
    }
    return true;
}

bool criterion9() {
    bool ok = true;
    ok = ok && grassmann_cases(Gf(2), 9101, 300) && grassmann_cases(Gf(3), 9102, 300) &&
         grassmann_cases(Gf(5), 9103, 300) && grassmann_cases(Rat{}, 9104, 300);
    ok = ok && tensor_cases(Gf(2), 9201, 300) && tensor_cases(Gf(3), 9202, 300) &&
         tensor_cases(Gf(5), 9203, 300) && tensor_cases(Rat{}, 9204, 300);
    ok = ok && interval_cases(Gf(2), 9301, 300) && interval_cases(Gf(3), 9302, 300) &&
         interval_cases(Gf(5), 9303, 300) && interval_cases(Rat{}, 9304, 300);
    ok = ok && clique_sum_cases(Gf(2), 9401, 400) && clique_sum_cases(Gf(3), 9402, 300) &&
         clique_sum_cases(Gf(5), 9403, 300);
    ok = ok && omega_mycielski_cases(9501, 1000);
    ok = ok && clique_number(or_product(cycle_graph(5), cycle_graph(5))) == 5;
    return ok;
}

}  // namespace

int main() {
    setenv("HAEMERS_MAX_CELLS", "200000000", 0);
    std::printf("acceptance suite, library version %s\n", kVersion);
    criterion(1, "lift grid (m,r) in {2,3,4}x{2..5} over GF(2)/GF(3): valid, dims = D, ratio closed form", criterion1);
    criterion(2, "double lift of K_2 gives the Groetzsch graph at (58,20), value 29/10", criterion2);
    criterion(3, "oracle: exists(C5,2,5,2), not exists(C5,2,4,2), min_ambient(C5,2,1,5) = 3", criterion3);
    criterion(4, "Lemma 2 and Lemma 3 identities for m in 2..6, r in 4..10", criterion4);
    criterion(5, "audit: zero violated table inequalities on every lifted M_r(K_m)", criterion5);
    criterion(6, "formula concordance on the grid; lift_upper_bound(7,2) = 50/7", criterion6);
    criterion(7, "chi_f(C5) = 5/2 and chi_f(Groetzsch) = 29/10, exactly", criterion7);
    criterion(8, "theta evaluator: theta(1) = 2, theta(2) = sqrt(5) within 1e-9", criterion8);
    criterion(9, "property suites, >= 1000 random cases each; omega(C5.C5) = 5", criterion9);
    if (failures == 0) {
        std::printf("acceptance: all 9 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
