#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace nchilb {

/// Dense row-major matrix over an exact field. Dimensions here are tiny
/// (enumeration-bound), so no sparse or blocked variants.
template <class Fld>
class Matrix {
public:
    using Value = typename Fld::Value;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Value fill = Value{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Value& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Value& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Value> column(std::size_t c) const {
        std::vector<Value> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
        return v;
    }

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Value> a_;
};

template <class Fld>
std::vector<typename Fld::Value> matVec(const Fld& field, const Matrix<Fld>& a,
                                        const std::vector<typename Fld::Value>& x) {
    if (a.cols() != x.size()) throw std::invalid_argument("matVec: dimension mismatch");
    std::vector<typename Fld::Value> y(a.rows(), field.zero());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            if (!field.isZero(a.at(r, c)))
                y[r] = field.add(y[r], field.mul(a.at(r, c), x[c]));
    return y;
}

/// Incremental row-echelon basis used for rank and span-membership queries.
template <class Fld>
class EchelonBasis {
public:
    using Value = typename Fld::Value;

    explicit EchelonBasis(const Fld& field, std::size_t dim) : field_(field), dim_(dim) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t dimension() const { return dim_; }

    /// Reduces v against the basis; returns the residual.
    std::vector<Value> reduce(std::vector<Value> v) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Value& lead = v[pivots_[i]];
            if (field_.isZero(lead)) continue;
            const Value factor = lead; // rows are normalized to pivot 1
            for (std::size_t c = 0; c < dim_; ++c)
                v[c] = field_.sub(v[c], field_.mul(factor, rows_[i][c]));
        }
        return v;
    }

    bool inSpan(const std::vector<Value>& v) const {
        std::vector<Value> r = reduce(v);
        for (const Value& x : r)
            if (!field_.isZero(x)) return false;
        return true;
    }

    /// Inserts v if independent; returns true when the rank grew.
    bool insert(const std::vector<Value>& v) {
        std::vector<Value> r = reduce(v);
        std::size_t pivot = dim_;
        for (std::size_t c = 0; c < dim_; ++c)
            if (!field_.isZero(r[c])) {
                pivot = c;
                break;
            }
        if (pivot == dim_) return false;
        const Value inv = field_.inv(r[pivot]);
        for (std::size_t c = 0; c < dim_; ++c) r[c] = field_.mul(r[c], inv);
        rows_.push_back(std::move(r));
        pivots_.push_back(pivot);
        return true;
    }

private:
    Fld field_;
    std::size_t dim_;
    std::vector<std::vector<Value>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Solves A X = B for square A by Gauss-Jordan; returns nullopt when A is
/// singular.
template <class Fld>
std::optional<Matrix<Fld>> solveColumns(const Fld& field, Matrix<Fld> a, Matrix<Fld> b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw std::invalid_argument("solveColumns: shape mismatch");
    const std::size_t k = b.cols();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && field.isZero(a.at(pivot, col))) ++pivot;
        if (pivot == n) return std::nullopt;
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
            for (std::size_t c = 0; c < k; ++c) std::swap(b.at(pivot, c), b.at(col, c));
        }
        const auto inv = field.inv(a.at(col, col));
        for (std::size_t c = 0; c < n; ++c) a.at(col, c) = field.mul(a.at(col, c), inv);
        for (std::size_t c = 0; c < k; ++c) b.at(col, c) = field.mul(b.at(col, c), inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || field.isZero(a.at(r, col))) continue;
            const auto f = a.at(r, col);
            for (std::size_t c = 0; c < n; ++c)
                a.at(r, c) = field.sub(a.at(r, c), field.mul(f, a.at(col, c)));
            for (std::size_t c = 0; c < k; ++c)
                b.at(r, c) = field.sub(b.at(r, c), field.mul(f, b.at(col, c)));
        }
    }
    return b;
}

} // namespace nchilb
