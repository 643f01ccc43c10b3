#pragma once

#include <utility>

#include "haemers/matrix.hpp"

namespace haemers {

// Subspace of F^n in canonical form: the basis matrix is a strict RREF with
// no zero rows, so set equality of subspaces is equality of basis matrices.
template <class F>
class Subspace {
public:
    using Elem = typename F::Elem;

    static Subspace zero(F field, std::size_t ambient) {
        return Subspace(Matrix<F>(std::move(field), 0, ambient));
    }
    static Subspace full(F field, std::size_t ambient) {
        return Subspace(Matrix<F>::identity(std::move(field), ambient));
    }
    // Row space of an arbitrary matrix.
    static Subspace span(const Matrix<F>& m) {
        auto [r, rank] = rref(m);
        Matrix<F> b(r.field(), rank, r.cols());
        for (std::size_t i = 0; i < rank; ++i)
            for (std::size_t j = 0; j < r.cols(); ++j) b.at(i, j) = r.at(i, j);
        return Subspace(std::move(b));
    }

    const F& field() const { return basis_.field(); }
    std::size_t ambient() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix<F>& basis() const { return basis_; }

    bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

private:
    explicit Subspace(Matrix<F> b) : basis_(std::move(b)) {}
    Matrix<F> basis_;

    template <class G>
    friend Subspace<G> subspace_intersect(const Subspace<G>&, const Subspace<G>&);
};

template <class F>
void require_same_ambient(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.field().spec() != b.field().spec())
        throw FieldMismatch("subspaces over different fields");
    if (a.ambient() != b.ambient())
        throw AmbientMismatch("subspaces with ambient " +
                              std::to_string(a.ambient()) + " vs " +
                              std::to_string(b.ambient()));
}

template <class F>
Subspace<F> subspace_sum(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b);
    return Subspace<F>::span(a.basis().vstack(b.basis()));
}

// Zassenhaus: eliminate the stacked matrix [A|A; B|0]; rows whose left half
// vanished carry a basis of A cap B in their right half.
template <class F>
Subspace<F> subspace_intersect(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b);
    const F& f = a.field();
    const std::size_t n = a.ambient();
    const std::size_t ka = a.dim(), kb = b.dim();
    Matrix<F> st(f, ka + kb, 2 * n);
    for (std::size_t i = 0; i < ka; ++i)
        for (std::size_t j = 0; j < n; ++j)
            st.at(i, j) = st.at(i, n + j) = a.basis().at(i, j);
    for (std::size_t i = 0; i < kb; ++i)
        for (std::size_t j = 0; j < n; ++j) st.at(ka + i, j) = b.basis().at(i, j);
    auto [red, rank] = rref(std::move(st));
    // rows with zero left half start after the rank of [A;B]
    std::size_t sum_rank = 0;
    while (sum_rank < rank) {
        bool left_zero = true;
        for (std::size_t j = 0; j < n && left_zero; ++j)
            left_zero = f.is_zero(red.at(sum_rank, j));
        if (left_zero) break;
        ++sum_rank;
    }
    Matrix<F> inter(f, rank - sum_rank, n);
    for (std::size_t i = sum_rank; i < rank; ++i)
        for (std::size_t j = 0; j < n; ++j)
            inter.at(i - sum_rank, j) = red.at(i, n + j);
    return Subspace<F>::span(inter);
}

// Tensor product with the coordinate convention v (x) w = (w_1 v,...,w_m v):
// coordinate ((j-1)*n + i) of the product carries v_i w_j.
template <class F>
Subspace<F> subspace_tensor(const Subspace<F>& a, const Subspace<F>& b) {
    if (a.field().spec() != b.field().spec())
        throw FieldMismatch("tensor of subspaces over different fields");
    const F& f = a.field();
    const std::size_t n = a.ambient(), m = b.ambient();
    check_cells(a.dim() * b.dim() + 1, n * m);
    Matrix<F> prod(f, a.dim() * b.dim(), n * m);
    std::size_t r = 0;
    for (std::size_t ia = 0; ia < a.dim(); ++ia)
        for (std::size_t ib = 0; ib < b.dim(); ++ib, ++r)
            for (std::size_t j = 0; j < m; ++j) {
                const auto& wj = b.basis().at(ib, j);
                if (f.is_zero(wj)) continue;
                for (std::size_t i = 0; i < n; ++i)
                    prod.at(r, j * n + i) = f.mul(wj, a.basis().at(ia, i));
            }
    return Subspace<F>::span(prod);
}

// Coordinate subspace span{e^(a),...,e^(b)} of F^M, 1-based inclusive.
template <class F>
Subspace<F> gamma_interval(F field, std::size_t M, std::size_t a, std::size_t b) {
    if (a < 1 || a > b || b > M)
        throw IndexOutOfRange("gamma interval [" + std::to_string(a) + "," +
                              std::to_string(b) + "] outside [1," +
                              std::to_string(M) + "]");
    Matrix<F> m(field, b - a + 1, M);
    for (std::size_t i = 0; i < b - a + 1; ++i)
        m.at(i, a - 1 + i) = m.field().one();
    return Subspace<F>::span(m);
}

template <class F>
bool subspace_equal(const Subspace<F>& a, const Subspace<F>& b) {
    require_same_ambient(a, b);
    return a == b;
}

}  // namespace haemers
