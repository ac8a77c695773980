#pragma once

// Dense integer matrices and the Smith normal form.
//
// The element type is a template parameter so the same code serves small
// action matrices (std::int64_t) and homology reductions that need
// arbitrary precision (boost::multiprecision::cpp_int).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <utility>
#include <vector>

#include "rdq/errors.hpp"

namespace rdq {

template <class Int>
class BasicMatrix {
public:
    BasicMatrix() = default;
    BasicMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}

    BasicMatrix(std::initializer_list<std::initializer_list<Int>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Int(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const BasicMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    BasicMatrix transpose() const {
        BasicMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    BasicMatrix operator*(const BasicMatrix& o) const {
        if (cols_ != o.rows_) throw DimensionError("matrix product shape mismatch");
        BasicMatrix r(rows_, o.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
            }
        return r;
    }

    std::vector<Int> operator*(const std::vector<Int>& v) const {
        if (cols_ != v.size()) throw DimensionError("matrix-vector shape mismatch");
        std::vector<Int> r(rows_, Int(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
        return r;
    }

    BasicMatrix operator-(const BasicMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
        BasicMatrix r = *this;
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
        return r;
    }

    BasicMatrix operator-() const {
        BasicMatrix r = *this;
        for (auto& x : r.data_) x = -x;
        return r;
    }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Int& x) { return x == 0; });
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }
    /// row[dst] += factor * row[src]
    void add_row(std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
    }
    void add_col(std::size_t dst, std::size_t src, const Int& factor) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
    }
    void negate_row(std::size_t r) {
        for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

using IntMatrix = BasicMatrix<std::int64_t>;

template <class Int>
std::ostream& operator<<(std::ostream& os, const BasicMatrix<Int>& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        os << (i ? ",[" : "[");
        for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j);
        os << ']';
    }
    return os << ']';
}

namespace detail {
template <class Int>
Int abs_value(const Int& x) {
    return x < 0 ? Int(-x) : x;
}
}  // namespace detail

/// Fraction-free (Bareiss) determinant; exact for any integral Int.
template <class Int>
Int determinant(BasicMatrix<Int> m) {
    if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Int(1);
    Int sign(1);
    Int prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == 0) ++p;
            if (p == n) return Int(0);
            m.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

template <class Int>
BasicMatrix<Int> matrix_power(const BasicMatrix<Int>& m, unsigned exponent) {
    if (!m.is_square()) throw DimensionError("power of a non-square matrix");
    BasicMatrix<Int> result = BasicMatrix<Int>::identity(m.rows());
    BasicMatrix<Int> base = m;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        base = base * base;
        exponent >>= 1u;
    }
    return result;
}

template <class Int>
bool is_skew_symmetric(const BasicMatrix<Int>& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != -m(j, i)) return false;
    return true;
}

/// left * input * right == diagonal, with left and right unimodular.
template <class Int>
struct SmithDecomposition {
    BasicMatrix<Int> left;
    BasicMatrix<Int> diagonal;
    BasicMatrix<Int> right;

    /// Nonzero diagonal entries; each divides the next.
    std::vector<Int> invariant_factors() const {
        std::vector<Int> f;
        const std::size_t n = std::min(diagonal.rows(), diagonal.cols());
        for (std::size_t i = 0; i < n && diagonal(i, i) != 0; ++i) f.push_back(diagonal(i, i));
        return f;
    }
};

namespace detail {

// Shared elimination loop; transforms are tracked only when the pointers are set.
template <class Int>
void smith_reduce(BasicMatrix<Int>& a, BasicMatrix<Int>* left, BasicMatrix<Int>* right) {
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    auto swap_rows = [&](std::size_t i, std::size_t j) {
        a.swap_rows(i, j);
        if (left) left->swap_rows(i, j);
    };
    auto swap_cols = [&](std::size_t i, std::size_t j) {
        a.swap_cols(i, j);
        if (right) right->swap_cols(i, j);
    };
    auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {
        a.add_row(dst, src, f);
        if (left) left->add_row(dst, src, f);
    };
    auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
        a.add_col(dst, src, f);
        if (right) right->add_col(dst, src, f);
    };

    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        // smallest nonzero entry of the trailing block becomes the pivot
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best(0);
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (a(i, j) == 0) continue;
                Int v = abs_value(a(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        swap_rows(t, pi);
        swap_cols(t, pj);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                add_row(i, t, Int(-q));
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                add_col(j, t, Int(-q));
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) {
                // a remainder is now smaller than the pivot; move it in
                Int v = abs_value(a(t, t));
                std::size_t bi = t, bj = t;
                for (std::size_t i = t + 1; i < rows; ++i)
                    if (a(i, t) != 0 && abs_value(a(i, t)) < v) {
                        v = abs_value(a(i, t));
                        bi = i;
                        bj = t;
                    }
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(t, j) != 0 && abs_value(a(t, j)) < v) {
                        v = abs_value(a(t, j));
                        bi = t;
                        bj = j;
                    }
                swap_rows(t, bi);
                swap_cols(t, bj);
                continue;
            }
            // divisibility of the trailing block by the pivot
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        add_row(t, i, Int(1));
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            if (left) left->negate_row(t);
        }
    }
}

}  // namespace detail

template <class Int>
SmithDecomposition<Int> smith_decompose(const BasicMatrix<Int>& input) {
    SmithDecomposition<Int> out;
    out.diagonal = input;
    out.left = BasicMatrix<Int>::identity(input.rows());
    out.right = BasicMatrix<Int>::identity(input.cols());
    detail::smith_reduce(out.diagonal, &out.left, &out.right);
    return out;
}

template <class Int>
struct SmithForm {
    std::vector<Int> invariant_factors;
    std::size_t rank = 0;
};

/// Invariant factors only, without building the transforms.
template <class Int>
SmithForm<Int> smith_normal_form(BasicMatrix<Int> m) {
    detail::smith_reduce<Int>(m, nullptr, nullptr);
    SmithForm<Int> out;
    const std::size_t n = std::min(m.rows(), m.cols());
    for (std::size_t i = 0; i < n && m(i, i) != 0; ++i) out.invariant_factors.push_back(m(i, i));
    out.rank = out.invariant_factors.size();
    return out;
}

}  // namespace rdq
