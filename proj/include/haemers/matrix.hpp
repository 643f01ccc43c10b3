#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "haemers/field.hpp"

namespace haemers {

// Dense row-major matrix over a field F (Gf or Rat). Immutable in spirit:
// operations return new values.
template <class F>
class Matrix {
public:
    using Elem = typename F::Elem;

    Matrix(F field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols) {
        check_cells(rows, cols);
        e_.assign(rows * cols, field_.zero());
    }

    const F& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    Elem* row(std::size_t i) { return e_.data() + i * cols_; }
    const Elem* row(std::size_t i) const { return e_.data() + i * cols_; }

    bool operator==(const Matrix& o) const {
        return field_.spec() == o.field_.spec() && rows_ == o.rows_ &&
               cols_ == o.cols_ && e_ == o.e_;
    }

    static Matrix identity(F field, std::size_t n) {
        Matrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = m.field_.one();
        return m;
    }

    // Rows of this stacked above rows of o.
    Matrix vstack(const Matrix& o) const {
        if (cols_ != o.cols_) throw AmbientMismatch("vstack: column mismatch");
        Matrix m(field_, rows_ + o.rows_, cols_);
        m.e_ = e_;
        m.e_.insert(m.e_.end(), o.e_.begin(), o.e_.end());
        return m;
    }

private:
    F field_;
    std::size_t rows_, cols_;
    std::vector<Elem> e_;
};

// In-place Gauss-Jordan to strict reduced row echelon form.
// Returns (RREF of m with original shape, rank).
template <class F>
std::pair<Matrix<F>, std::size_t> rref(Matrix<F> m) {
    const F& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t piv = rank;
        while (piv < rows && f.is_zero(m.at(piv, col))) ++piv;
        if (piv == rows) continue;
        if (piv != rank)
            for (std::size_t j = col; j < cols; ++j)
                std::swap(m.at(piv, j), m.at(rank, j));
        const auto s = f.inv(m.at(rank, col));
        for (std::size_t j = col; j < cols; ++j)
            m.at(rank, j) = f.mul(s, m.at(rank, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == rank || f.is_zero(m.at(i, col))) continue;
            const auto c = m.at(i, col);
            auto* ri = m.row(i);
            const auto* rr = m.row(rank);
            for (std::size_t j = col; j < cols; ++j)
                ri[j] = f.sub(ri[j], f.mul(c, rr[j]));
        }
        ++rank;
    }
    return {std::move(m), rank};
}

template <class F>
void write_matrix(std::ostream& os, const Matrix<F>& m) {
    os << "field " << m.field().spec().str() << "\n";
    os << "rows " << m.rows() << " " << m.cols() << "\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << (j ? " " : "") << m.field().str(m.at(i, j));
        os << "\n";
    }
}

template <class F>
Matrix<F> read_matrix(std::istream& is, const F& field) {
    std::string kw, fs;
    if (!(is >> kw >> fs) || kw != "field")
        throw ParseError("matrix: expected 'field <p|Q>'");
    if (FieldSpec::parse(fs) != field.spec())
        throw FieldMismatch("matrix file field " + fs + " does not match");
    std::size_t rows, cols;
    if (!(is >> kw >> rows >> cols) || kw != "rows")
        throw ParseError("matrix: expected 'rows <r> <c>'");
    Matrix<F> m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::string tok;
            if (!(is >> tok)) throw ParseError("matrix: truncated entries");
            m.at(i, j) = field.parse(tok);
        }
    return m;
}

}  // namespace haemers
