#include <doctest.h>

#include <sstream>

#include "test_util.hpp"

using namespace haemers;
using namespace testutil;

TEST_CASE("field specs parse and validate") {
    CHECK(FieldSpec::parse("2") == FieldSpec::prime(2));
    CHECK(FieldSpec::parse("Q") == FieldSpec::rationals());
    CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
    CHECK_THROWS_AS(FieldSpec::prime(4), BadParameter);
    CHECK_THROWS_AS(FieldSpec::prime(1), BadParameter);
    CHECK_THROWS_AS(FieldSpec::prime(1ull << 31), BadParameter);
    CHECK_THROWS_AS(FieldSpec::parse("abc"), ParseError);
    CHECK(FieldSpec::prime((1u << 31) - 1).p == 2147483647u);  // Mersenne prime
}

TEST_CASE("GF(p) arithmetic axioms at random") {
    for (const std::uint32_t p : {2u, 3u, 5u, 7u, 65537u, 2147483647u}) {
        const Gf f(p);
        auto rng = make_rng(10 + p);
        for (int it = 0; it < 200; ++it) {
            const auto a = random_elem(f, rng), b = random_elem(f, rng),
                       c = random_elem(f, rng);
            CHECK(f.add(a, b) == f.add(b, a));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.sub(f.add(a, b), b) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (!f.is_zero(a)) {
                CHECK(f.mul(a, f.inv(a)) == f.one());
            }
        }
        CHECK_THROWS_AS(f.inv(0), DomainError);
    }
}

TEST_CASE("rational parsing round trips") {
    CHECK(parse_rational("5/2") == Rational(5, 2));
    CHECK(parse_rational("-3") == Rational(-3));
    CHECK(to_string(Rational(29, 10)) == "29/10");
    CHECK(to_string(Rational(4, 2)) == "2");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("matrix shape guards and cell cap") {
    Gf f2(2);
    Matrix<Gf> m(f2, 2, 3);
    CHECK_THROWS_AS(m.vstack(Matrix<Gf>(f2, 1, 4)), AmbientMismatch);
    CHECK_THROWS_AS(Matrix<Gf>(f2, 1u << 20, 1u << 20), TooLarge);
}

TEST_CASE("rref rank agrees with the span-counting oracle over GF(p)") {
    for (const std::uint32_t p : {2u, 3u, 5u}) {
        const Gf f(p);
        auto rng = make_rng(100 + p);
        const std::size_t max_rows = p == 2 ? 7 : p == 3 ? 5 : 4;
        for (int it = 0; it < 150; ++it) {
            const auto rows = std::uniform_int_distribution<std::size_t>(0, max_rows)(rng);
            const auto cols = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
            const auto m = random_matrix(f, rng, rows, cols);
            CHECK(rref(m).second == rank_by_span_count(m));
        }
    }
}

TEST_CASE("rref rank agrees with the minor-rank oracle over Q") {
    const Rat f;
    auto rng = make_rng(321);
    for (int it = 0; it < 150; ++it) {
        const auto rows = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
        const auto cols = std::uniform_int_distribution<std::size_t>(1, 5)(rng);
        const auto m = random_matrix(f, rng, rows, cols);
        CHECK(rref(m).second == rank_by_minors(m));
    }
}

TEST_CASE("rref is idempotent and strictly reduced") {
    const Gf f3(3);
    auto rng = make_rng(7);
    for (int it = 0; it < 300; ++it) {
        const auto m = random_matrix(f3, rng, 4, 6);
        auto [r, rank] = rref(m);
        CHECK(rref(r).first == r);
        // pivot structure: strictly increasing pivot columns, unit pivots,
        // zero elsewhere in pivot columns
        std::size_t prev = 0;
        bool first = true;
        for (std::size_t i = 0; i < rank; ++i) {
            std::size_t j = 0;
            while (j < r.cols() && f3.is_zero(r.at(i, j))) ++j;
            REQUIRE(j < r.cols());
            CHECK(r.at(i, j) == f3.one());
            if (!first) CHECK(j > prev);
            prev = j;
            first = false;
            for (std::size_t k = 0; k < r.rows(); ++k)
                if (k != i) CHECK(f3.is_zero(r.at(k, j)));
        }
    }
}

TEST_CASE("canonical bases: any basis change yields the same subspace object") {
    const Gf f2(2);
    const Rat fq;
    auto rng = make_rng(42);
    for (int it = 0; it < 200; ++it) {
        const auto a = random_subspace(f2, rng, 5, 3);
        if (a.dim() == 0) continue;
        const auto t = random_invertible(f2, rng, a.dim());
        Matrix<Gf> mixed(f2, a.dim(), 5);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                auto acc = f2.zero();
                for (std::size_t k = 0; k < a.dim(); ++k)
                    acc = f2.add(acc, f2.mul(t.at(i, k), a.basis().at(k, j)));
                mixed.at(i, j) = acc;
            }
        CHECK(Subspace<Gf>::span(mixed) == a);
    }
    // a rational spot check with non-integer entries
    Matrix<Rat> m(fq, 2, 3);
    m.at(0, 0) = Rational(1, 2);
    m.at(0, 1) = Rational(3);
    m.at(1, 0) = Rational(1, 2);
    m.at(1, 1) = Rational(3);
    m.at(1, 2) = Rational(7, 5);
    const auto s = Subspace<Rat>::span(m);
    CHECK(s.dim() == 2);
    CHECK(s.basis().at(0, 0) == Rational(1));
    CHECK(s.basis().at(0, 1) == Rational(6));
}

TEST_CASE("zero and full subspaces") {
    const Gf f5(5);
    CHECK(Subspace<Gf>::zero(f5, 4).dim() == 0);
    CHECK(Subspace<Gf>::full(f5, 4).dim() == 4);
    CHECK(subspace_sum(Subspace<Gf>::zero(f5, 4), Subspace<Gf>::full(f5, 4)) ==
          Subspace<Gf>::full(f5, 4));
    CHECK_THROWS_AS(
        subspace_sum(Subspace<Gf>::zero(f5, 4), Subspace<Gf>::zero(f5, 3)),
        AmbientMismatch);
    CHECK_THROWS_AS(subspace_sum(Subspace<Gf>::zero(f5, 4),
                                 Subspace<Gf>::zero(Gf(3), 4)),
                    FieldMismatch);
}

template <class F>
static void grassmann_suite(const F& f, std::uint64_t seed, int cases,
                            std::size_t ambient, std::size_t max_rows) {
    auto rng = make_rng(seed);
    for (int it = 0; it < cases; ++it) {
        const auto a = random_subspace(f, rng, ambient, max_rows);
        const auto b = random_subspace(f, rng, ambient, max_rows);
        const auto sum = subspace_sum(a, b);
        const auto inter = subspace_intersect(a, b);
        CHECK(a.dim() + b.dim() == sum.dim() + inter.dim());
        CHECK(contains(a, inter));
        CHECK(contains(b, inter));
        CHECK(contains(sum, a));
        CHECK(contains(sum, b));
    }
}

TEST_CASE("Grassmann identity, 1200 random cases over four fields") {
    grassmann_suite(Gf(2), 1001, 300, 6, 4);
    grassmann_suite(Gf(3), 1002, 300, 6, 4);
    grassmann_suite(Gf(5), 1003, 300, 5, 3);
    grassmann_suite(Rat{}, 1004, 300, 5, 3);
}

template <class F>
static void tensor_suite(const F& f, std::uint64_t seed, int cases) {
    auto rng = make_rng(seed);
    for (int it = 0; it < cases; ++it) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
        const auto u = random_subspace(f, rng, n, n);
        const auto v = random_subspace(f, rng, n, n);
        const auto w = random_subspace(f, rng, n, n);
        CHECK(subspace_tensor(u, v).dim() == u.dim() * v.dim());
        CHECK(subspace_tensor(subspace_sum(u, v), w) ==
              subspace_sum(subspace_tensor(u, w), subspace_tensor(v, w)));
        if (subspace_intersect(u, v).dim() == 0 && w.dim() > 0)
            CHECK(subspace_intersect(subspace_tensor(u, w), subspace_tensor(v, w))
                      .dim() == 0);
    }
}

TEST_CASE("tensor identities, 1200 random cases over four fields") {
    tensor_suite(Gf(2), 2001, 300);
    tensor_suite(Gf(3), 2002, 300);
    tensor_suite(Gf(5), 2003, 300);
    tensor_suite(Rat{}, 2004, 300);
}

TEST_CASE("gamma intervals") {
    const Gf f2(2);
    CHECK(gamma_interval(f2, 5, 2, 4).dim() == 3);
    CHECK(gamma_interval(f2, 5, 1, 5) == Subspace<Gf>::full(f2, 5));
    CHECK(subspace_intersect(gamma_interval(f2, 6, 1, 2), gamma_interval(f2, 6, 3, 6))
              .dim() == 0);
    CHECK(subspace_intersect(gamma_interval(f2, 6, 1, 4), gamma_interval(f2, 6, 3, 6)) ==
          gamma_interval(f2, 6, 3, 4));
    CHECK_THROWS_AS(gamma_interval(f2, 5, 0, 3), IndexOutOfRange);
    CHECK_THROWS_AS(gamma_interval(f2, 5, 3, 6), IndexOutOfRange);
    CHECK_THROWS_AS(gamma_interval(f2, 5, 4, 3), IndexOutOfRange);
}

// the structural interval lemma behind the lift's disjointness arguments:
// if the X-side intervals avoid [c,d], the Y (x) Gamma[c,d] term contributes
// nothing to the intersection
template <class F>
static void interval_lemma_suite(const F& f, std::uint64_t seed, int cases) {
    auto rng = make_rng(seed);
    auto rnd = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    for (int it = 0; it < cases; ++it) {
        const std::size_t M = rnd(2, 6);
        const std::size_t m = rnd(2, 3);  // ambient of the X/Y factors
        // [c,d] plus k X-intervals packed inside [1,M] \ [c,d]
        const std::size_t c = rnd(1, M), d = rnd(c, M);
        auto disjoint_interval = [&]() -> std::pair<std::size_t, std::size_t> {
            for (;;) {
                const std::size_t a = rnd(1, M), b = rnd(a, M);
                if (b < c || a > d) return {a, b};
                if (c == 1 && d == M) return {0, 0};  // no room
            }
        };
        const std::size_t k = rnd(0, 2), l = rnd(0, 2);
        Matrix<F> lhs_left(f, 0, m * M);
        for (std::size_t i = 0; i < k; ++i) {
            const auto [a, b] = disjoint_interval();
            if (a == 0) continue;
            lhs_left = lhs_left.vstack(
                subspace_tensor(random_subspace(f, rng, m, m), gamma_interval(f, M, a, b))
                    .basis());
        }
        Matrix<F> right_short(f, 0, m * M);
        for (std::size_t j = 0; j < l; ++j) {
            const std::size_t a = rnd(1, M), b = rnd(a, M);
            right_short = right_short.vstack(
                subspace_tensor(random_subspace(f, rng, m, m), gamma_interval(f, M, a, b))
                    .basis());
        }
        const auto y_term =
            subspace_tensor(random_subspace(f, rng, m, m), gamma_interval(f, M, c, d));
        const auto left = Subspace<F>::span(lhs_left);
        const auto rs = Subspace<F>::span(right_short);
        const auto rl = Subspace<F>::span(right_short.vstack(y_term.basis()));
        CHECK(subspace_intersect(left, rl) == subspace_intersect(left, rs));
    }
}

TEST_CASE("interval lemma, 1200 random cases over four fields") {
    interval_lemma_suite(Gf(2), 3001, 300);
    interval_lemma_suite(Gf(3), 3002, 300);
    interval_lemma_suite(Gf(5), 3003, 300);
    interval_lemma_suite(Rat{}, 3004, 300);
}

TEST_CASE("matrix text format round trips bit-exactly") {
    const Gf f7(7);
    const Rat fq;
    auto rng = make_rng(55);
    for (int it = 0; it < 20; ++it) {
        const auto m = random_matrix(f7, rng, 3, 4);
        std::stringstream ss;
        write_matrix(ss, m);
        CHECK(read_matrix(ss, f7) == m);
    }
    const auto q = random_matrix(fq, rng, 3, 4);
    std::stringstream ss;
    write_matrix(ss, q);
    CHECK(read_matrix(ss, fq) == q);
    std::stringstream bad("field 5\nrows 1 1\n3\n");
    CHECK_THROWS_AS(read_matrix(bad, f7), FieldMismatch);
    std::stringstream trunc("field 7\nrows 2 2\n1 2 3\n");
    CHECK_THROWS_AS(read_matrix(trunc, f7), ParseError);
}
