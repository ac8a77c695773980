#pragma once

// Simplicial boundary operators, ranks by sparse elimination and Betti numbers.
//
// Two rank routes are provided:
//   * modular: elimination over Z/p, p = 2^31 - 1, pivoting deterministically
//     (column order, shortest row first);
//   * exact: elimination over Z with unit pivots only; whatever is left once no
//     +-1 pivot remains goes through a dense arbitrary-precision Smith form.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rdq/errors.hpp"
#include "rdq/int_matrix.hpp"
#include "rdq/simplicial.hpp"

namespace rdq {

using BigInt = boost::multiprecision::cpp_int;

/// Column-major sparse integer matrix; each column sorted by row.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> columns;

    BasicMatrix<BigInt> to_dense() const {
        BasicMatrix<BigInt> d(rows, cols);
        for (std::size_t j = 0; j < cols; ++j)
            for (const auto& [i, v] : columns[j]) d(static_cast<std::size_t>(i), j) = v;
        return d;
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& c : columns) n += c.size();
        return n;
    }
};

/// this * other, exact
inline SparseIntMatrix multiply(const SparseIntMatrix& a, const SparseIntMatrix& b) {
    if (a.cols != b.rows) throw DimensionError("sparse product shape mismatch");
    SparseIntMatrix c{a.rows, b.cols, std::vector<std::vector<std::pair<int, std::int64_t>>>(b.cols)};
    std::vector<std::int64_t> acc(a.rows, 0);
    std::vector<int> touched;
    for (std::size_t j = 0; j < b.cols; ++j) {
        touched.clear();
        for (const auto& [k, bv] : b.columns[j])
            for (const auto& [i, av] : a.columns[static_cast<std::size_t>(k)]) {
                if (acc[static_cast<std::size_t>(i)] == 0) touched.push_back(i);
                acc[static_cast<std::size_t>(i)] += av * bv;
            }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int i : touched) {
            if (acc[static_cast<std::size_t>(i)] != 0) c.columns[j].emplace_back(i, acc[static_cast<std::size_t>(i)]);
            acc[static_cast<std::size_t>(i)] = 0;
        }
    }
    return c;
}

/// d_k : C_k -> C_{k-1} for k = 1..dim; face i of [v0..vk] carries sign (-1)^i.
inline std::vector<SparseIntMatrix> boundary_matrices(const SimplicialComplex& k) {
    std::vector<SparseIntMatrix> out;
    for (int d = 1; d <= k.dimension(); ++d) {
        SparseIntMatrix m{k.count(d - 1), k.count(d), {}};
        m.columns.resize(m.cols);
        for (std::size_t j = 0; j < m.cols; ++j) {
            const Simplex& s = k.simplices(d)[j];
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                m.columns[j].emplace_back(static_cast<int>(*k.index_of(face)), i % 2 == 0 ? 1 : -1);
            }
            std::sort(m.columns[j].begin(), m.columns[j].end());
        }
        out.push_back(std::move(m));
    }
    return out;
}

namespace detail {

struct ModularRing {
    using value_type = std::uint64_t;
    static constexpr std::uint64_t kPrime = 2147483647ULL;

    static value_type from(std::int64_t v) {
        const auto p = static_cast<std::int64_t>(kPrime);
        return static_cast<value_type>(((v % p) + p) % p);
    }
    static bool is_zero(value_type v) { return v == 0; }
    static bool usable_pivot(value_type v) { return v != 0; }
    static value_type inverse(value_type a) {
        value_type result = 1, e = kPrime - 2;
        while (e) {
            if (e & 1) result = result * a % kPrime;
            a = a * a % kPrime;
            e >>= 1;
        }
        return result;
    }
    static value_type factor(value_type target, value_type pivot) { return target * inverse(pivot) % kPrime; }
    /// a - f * b
    static value_type sub_mul(value_type a, value_type f, value_type b) {
        return (a + kPrime - f * b % kPrime) % kPrime;
    }
};

struct IntegerRing {
    using value_type = BigInt;

    static value_type from(std::int64_t v) { return v; }
    static bool is_zero(const value_type& v) { return v == 0; }
    static bool usable_pivot(const value_type& v) { return v == 1 || v == -1; }
    static value_type factor(const value_type& target, const value_type& pivot) { return target * pivot; }
    static value_type sub_mul(const value_type& a, const value_type& f, const value_type& b) { return a - f * b; }
};

template <class Ring>
class SparseEliminator {
public:
    using T = typename Ring::value_type;
    using Row = std::vector<std::pair<int, T>>;

    explicit SparseEliminator(const SparseIntMatrix& m) : cols_(m.cols), rows_(m.rows), col_rows_(m.cols) {
        for (std::size_t j = 0; j < m.cols; ++j)
            for (const auto& [i, v] : m.columns[j]) {
                T x = Ring::from(v);
                if (Ring::is_zero(x)) continue;
                rows_[static_cast<std::size_t>(i)].emplace_back(static_cast<int>(j), std::move(x));
                col_rows_[j].push_back(i);
            }
        active_.assign(rows_.size(), 1);
    }

    /// Number of pivots found; rows left active afterwards only touch deferred columns.
    std::size_t run() {
        std::size_t rank = 0;
        std::vector<int> holders;
        for (std::size_t c = 0; c < cols_; ++c) {
            holders.clear();
            int pivot = -1;
            for (int r : col_rows_[c]) {
                if (!active_[static_cast<std::size_t>(r)] || !has(r, static_cast<int>(c))) continue;
                holders.push_back(r);
                const T& v = *value(r, static_cast<int>(c));
                if (Ring::usable_pivot(v) &&
                    (pivot < 0 || rows_[static_cast<std::size_t>(r)].size() < rows_[static_cast<std::size_t>(pivot)].size() ||
                     (rows_[static_cast<std::size_t>(r)].size() == rows_[static_cast<std::size_t>(pivot)].size() && r < pivot)))
                    pivot = r;
            }
            std::sort(holders.begin(), holders.end());
            holders.erase(std::unique(holders.begin(), holders.end()), holders.end());
            col_rows_[c] = holders;
            if (pivot < 0) continue;
            ++rank;
            active_[static_cast<std::size_t>(pivot)] = 0;
            const T pv = *value(pivot, static_cast<int>(c));
            for (int r : holders) {
                if (r == pivot) continue;
                const T f = Ring::factor(*value(r, static_cast<int>(c)), pv);
                eliminate(r, pivot, f);
            }
            col_rows_[c].clear();
        }
        return rank;
    }

    /// Active rows restricted to their (deferred) columns, as a dense matrix.
    BasicMatrix<T> residual() const {
        std::vector<int> rows;
        std::vector<int> cols;
        for (std::size_t r = 0; r < rows_.size(); ++r)
            if (active_[r] && !rows_[r].empty()) {
                rows.push_back(static_cast<int>(r));
                for (const auto& e : rows_[r]) cols.push_back(e.first);
            }
        std::sort(cols.begin(), cols.end());
        cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
        BasicMatrix<T> d(rows.size(), cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (const auto& [c, v] : rows_[static_cast<std::size_t>(rows[i])]) {
                const auto j = static_cast<std::size_t>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
                d(i, j) = v;
            }
        return d;
    }

private:
    const T* value(int r, int c) const {
        const Row& row = rows_[static_cast<std::size_t>(r)];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const auto& e, int col) { return e.first < col; });
        if (it == row.end() || it->first != c) return nullptr;
        return &it->second;
    }
    bool has(int r, int c) const { return value(r, c) != nullptr; }

    // row[target] -= f * row[source]
    void eliminate(int target, int source, const T& f) {
        const Row& src = rows_[static_cast<std::size_t>(source)];
        Row& dst = rows_[static_cast<std::size_t>(target)];
        Row merged;
        merged.reserve(dst.size() + src.size());
        std::size_t i = 0, j = 0;
        while (i < dst.size() || j < src.size()) {
            if (j == src.size() || (i < dst.size() && dst[i].first < src[j].first)) {
                merged.push_back(std::move(dst[i++]));
            } else if (i == dst.size() || src[j].first < dst[i].first) {
                T v = Ring::sub_mul(Ring::from(0), f, src[j].second);
                if (!Ring::is_zero(v)) {
                    col_rows_[static_cast<std::size_t>(src[j].first)].push_back(target);
                    merged.emplace_back(src[j].first, std::move(v));
                }
                ++j;
            } else {
                T v = Ring::sub_mul(dst[i].second, f, src[j].second);
                if (!Ring::is_zero(v)) merged.emplace_back(dst[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        dst = std::move(merged);
    }

    std::size_t cols_;
    std::vector<Row> rows_;
    std::vector<std::vector<int>> col_rows_;
    std::vector<char> active_;
};

}  // namespace detail

inline constexpr std::uint64_t kModularRankPrime = detail::ModularRing::kPrime;

/// Rank over Z/(2^31 - 1).
inline std::size_t modular_rank(const SparseIntMatrix& m) {
    detail::SparseEliminator<detail::ModularRing> e(m);
    const std::size_t r = e.run();
    if (e.residual().rows() != 0) throw IntegrityError("modular elimination left unreduced rows");
    return r;
}

/// Invariant factors of a sparse integer matrix, exact.
inline SmithForm<BigInt> sparse_smith_form(const SparseIntMatrix& m) {
    detail::SparseEliminator<detail::IntegerRing> e(m);
    const std::size_t units = e.run();
    SmithForm<BigInt> rest = smith_normal_form(e.residual());
    SmithForm<BigInt> out;
    out.invariant_factors.assign(units, BigInt(1));
    out.invariant_factors.insert(out.invariant_factors.end(), rest.invariant_factors.begin(),
                                 rest.invariant_factors.end());
    out.rank = out.invariant_factors.size();
    return out;
}

inline std::size_t exact_rank(const SparseIntMatrix& m) { return sparse_smith_form(m).rank; }

enum class RankMethod { kExact, kModular };

inline std::string to_string(RankMethod m) { return m == RankMethod::kExact ? "exact" : "modular"; }

inline RankMethod parse_rank_method(const std::string& s) {
    if (s == "exact") return RankMethod::kExact;
    if (s == "modular") return RankMethod::kModular;
    throw ParameterError("unknown rank method '" + s + "' (expected exact or modular)");
}

inline std::size_t rank(const SparseIntMatrix& m, RankMethod method) {
    return method == RankMethod::kExact ? exact_rank(m) : modular_rank(m);
}

struct BettiVector {
    std::vector<std::int64_t> values;  // b_0 .. b_dim

    std::int64_t operator[](std::size_t k) const { return k < values.size() ? values[k] : 0; }
    std::size_t size() const noexcept { return values.size(); }
    bool operator==(const BettiVector&) const = default;
};

/// Rational Betti numbers b_k = dim C_k - rank d_k - rank d_{k+1}. With
/// `audit` set both rank methods run and must agree.
inline BettiVector betti_numbers(const SimplicialComplex& k, RankMethod method = RankMethod::kModular,
                                 bool audit = false) {
    const auto boundaries = boundary_matrices(k);
    std::vector<std::int64_t> ranks(static_cast<std::size_t>(k.dimension() + 2), 0);
    for (std::size_t d = 0; d < boundaries.size(); ++d) {
        const std::size_t r = rank(boundaries[d], method);
        if (audit) {
            const auto other = method == RankMethod::kExact ? RankMethod::kModular : RankMethod::kExact;
            if (rank(boundaries[d], other) != r)
                throw IntegrityError("exact and modular ranks disagree in degree " + std::to_string(d + 1));
        }
        ranks[d + 1] = static_cast<std::int64_t>(r);
    }
    BettiVector b;
    std::int64_t chi = 0;
    for (int d = 0; d <= k.dimension(); ++d) {
        const auto du = static_cast<std::size_t>(d);
        b.values.push_back(static_cast<std::int64_t>(k.count(d)) - ranks[du] - ranks[du + 1]);
        chi += (d % 2 == 0 ? 1 : -1) * b.values.back();
    }
    if (chi != k.euler_characteristic()) throw IntegrityError("Betti numbers violate the Euler characteristic");
    return b;
}

struct KRanks {
    std::int64_t even = 0;
    std::int64_t odd = 0;
    bool operator==(const KRanks&) const = default;
};

/// Rational K-theory ranks: even and odd Betti sums.
inline KRanks k_ranks(const BettiVector& b) {
    KRanks r;
    for (std::size_t k = 0; k < b.size(); ++k) (k % 2 == 0 ? r.even : r.odd) += b.values[k];
    return r;
}

inline KRanks k_ranks(const SimplicialComplex& k, RankMethod method = RankMethod::kModular) {
    return k_ranks(betti_numbers(k, method));
}

}  // namespace rdq
