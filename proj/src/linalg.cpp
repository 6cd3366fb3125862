#include "sdt/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace sdt {

std::vector<std::uint32_t> Rng::subset(std::uint32_t n, std::uint32_t k) {
    std::vector<std::uint32_t> pool(n);
    std::iota(pool.begin(), pool.end(), 0u);
    for (std::uint32_t i = 0; i < k; ++i) {
        std::uint32_t j = i + static_cast<std::uint32_t>(below(n - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(k);
    std::sort(pool.begin(), pool.end());
    return pool;
}

FqVector::FqVector(FieldCtx ctx, std::vector<std::uint32_t> entries)
    : ctx_(ctx), v_(std::move(entries)) {
    for (auto& x : v_) x %= ctx_.q();
}

FqVector FqVector::operator+(const FqVector& o) const {
    FqVector r(ctx_, v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = ctx_.add(v_[i], o.v_[i]);
    return r;
}

FqVector FqVector::operator-(const FqVector& o) const {
    FqVector r(ctx_, v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = ctx_.sub(v_[i], o.v_[i]);
    return r;
}

FqVector FqVector::scaled(std::uint32_t c) const {
    FqVector r(ctx_, v_.size());
    for (std::size_t i = 0; i < v_.size(); ++i) r.v_[i] = ctx_.mul(v_[i], c);
    return r;
}

bool FqVector::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](std::uint32_t x) { return x == 0; });
}

FqVector FqVector::restrict_to(const std::vector<std::uint32_t>& positions) const {
    FqVector r(ctx_, positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) r.v_[i] = v_[positions[i]];
    return r;
}

std::string FqVector::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ' ';
        os << v_[i];
    }
    return os.str();
}

FqMatrix::FqMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols,
                   std::vector<std::uint32_t> entries)
    : ctx_(ctx), rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DomainError("FqMatrix: entry count mismatch");
    for (auto& x : a_) x %= ctx_.q();
}

FqMatrix FqMatrix::identity(FieldCtx ctx, std::size_t n) {
    FqMatrix m(ctx, n, n);
    for (std::size_t i = 0; i < n; ++i) m.a_[i * n + i] = 1;
    return m;
}

FqMatrix FqMatrix::transpose() const {
    FqMatrix r(ctx_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.a_[j * rows_ + i] = a_[i * cols_ + j];
    return r;
}

FqMatrix FqMatrix::operator*(const FqMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("FqMatrix::mul: dimension mismatch");
    FqMatrix r(ctx_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < o.cols_; ++j) {
            std::uint64_t acc = 0;
            for (std::size_t k = 0; k < cols_; ++k)
                acc += static_cast<std::uint64_t>(a_[i * cols_ + k]) * o.a_[k * o.cols_ + j];
            r.a_[i * o.cols_ + j] = ctx_.reduce(acc);
        }
    return r;
}

FqMatrix FqMatrix::operator-(const FqMatrix& o) const {
    FqMatrix r(ctx_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ctx_.sub(a_[i], o.a_[i]);
    return r;
}

bool FqMatrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

FqVector FqMatrix::mul_vec_t(const FqVector& x) const {
    if (x.size() != cols_) throw DomainError("mul_vec_t: dimension mismatch");
    FqVector r(ctx_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            acc += static_cast<std::uint64_t>(a_[i * cols_ + j]) * x[j];
        r.set(i, ctx_.reduce(acc));
    }
    return r;
}

FqMatrix FqMatrix::columns(const std::vector<std::uint32_t>& idx) const {
    FqMatrix r(ctx_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) r.a_[i * idx.size() + j] = a_[i * cols_ + idx[j]];
    return r;
}

FqVector FqMatrix::row(std::size_t i) const {
    FqVector r(ctx_, cols_);
    for (std::size_t j = 0; j < cols_; ++j) r.set(j, a_[i * cols_ + j]);
    return r;
}

void FqMatrix::set_row(std::size_t i, const FqVector& v) {
    for (std::size_t j = 0; j < cols_; ++j) a_[i * cols_ + j] = v[j];
}

std::string FqMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) os << '\n';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << a_[i * cols_ + j];
        }
    }
    return os.str();
}

FqVector vec_mul(const FqVector& x, const FqMatrix& m) {
    if (x.size() != m.rows()) throw DomainError("vec_mul: dimension mismatch");
    FqVector r(m.ctx(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            acc += static_cast<std::uint64_t>(x[i]) * m(i, j);
        r.set(j, m.ctx().reduce(acc));
    }
    return r;
}

std::size_t hamming_weight(const FqVector& v) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < v.size(); ++i) w += v[i] != 0;
    return w;
}

std::size_t hamming_distance(const FqVector& a, const FqVector& b) {
    return hamming_weight(a - b);
}

namespace {

// Reduced echelon form computed on a flat copy of the matrix; row swaps only
// permute an index table. at(i, j) reads logical row i.
struct Echelon {
    std::size_t cols = 0;
    std::vector<std::uint32_t> data;    // physical row-major storage
    std::vector<std::uint32_t> order;   // logical row -> physical row
    std::vector<std::size_t> pivot_cols;

    const std::uint32_t* row(std::size_t i) const { return data.data() + order[i] * cols; }
    std::uint32_t* row(std::size_t i) { return data.data() + order[i] * cols; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return row(i)[j]; }
};

Echelon echelonize(const FqMatrix& m) {
    const FieldCtx& f = m.ctx();
    const std::size_t rows = m.rows(), cols = m.cols();
    Echelon e;
    e.cols = cols;
    e.data.resize(rows * cols);
    e.order.resize(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        e.order[i] = static_cast<std::uint32_t>(i);
        for (std::size_t j = 0; j < cols; ++j) e.data[i * cols + j] = m(i, j);
    }

    const bool binary = f.q() == 2;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && e.at(p, c) == 0) ++p;
        if (p == rows) continue;
        std::swap(e.order[p], e.order[r]);
        std::uint32_t* pivot = e.row(r);
        if (!binary && pivot[c] != 1) {
            const std::uint32_t pinv = f.inv(pivot[c]);
            for (std::size_t j = c; j < cols; ++j) pivot[j] = f.mul(pivot[j], pinv);
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            std::uint32_t* row = e.row(i);
            if (row[c] == 0) continue;
            if (binary) {
                for (std::size_t j = c; j < cols; ++j) row[j] ^= pivot[j];
            } else {
                const std::uint32_t factor = row[c];
                for (std::size_t j = c; j < cols; ++j)
                    row[j] = f.sub(row[j], f.mul(factor, pivot[j]));
            }
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

}  // namespace

std::size_t rank(const FqMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return echelonize(m).pivot_cols.size();
}

SystematicForm row_reduce_systematic(const FqMatrix& m) {
    // Work on [M | I] so the row transform comes out alongside.
    const FieldCtx& f = m.ctx();
    FqMatrix aug(f, m.rows(), m.cols() + m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.set(i, j, m(i, j));
        aug.set(i, m.cols() + i, 1);
    }
    Echelon e = echelonize(aug);
    std::vector<std::size_t> pivots;
    for (std::size_t c : e.pivot_cols)
        if (c < m.cols()) pivots.push_back(c);
    if (pivots.size() < m.rows())
        throw RankDeficientError("row_reduce_systematic: rank " + std::to_string(pivots.size()) +
                                 " < rows " + std::to_string(m.rows()));

    std::vector<std::uint32_t> colperm;
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) {
        colperm.push_back(static_cast<std::uint32_t>(c));
        is_pivot[c] = true;
    }
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) colperm.push_back(static_cast<std::uint32_t>(c));

    FqMatrix s(f, m.rows(), m.rows());
    FqMatrix reduced(f, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) s.set(i, j, e.at(i, m.cols() + j));
        for (std::size_t j = 0; j < m.cols(); ++j) reduced.set(i, j, e.at(i, colperm[j]));
    }
    return SystematicForm{std::move(s), std::move(colperm), std::move(reduced)};
}

std::optional<FqVector> solve_linear(const FqMatrix& a, const FqVector& b) {
    if (b.size() != a.rows()) throw DomainError("solve_linear: rhs length mismatch");
    const FieldCtx& f = a.ctx();
    FqMatrix aug(f, a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.set(i, j, a(i, j));
        aug.set(i, a.cols(), b[i]);
    }
    Echelon e = echelonize(aug);
    FqVector x(f, a.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
        std::size_t c = e.pivot_cols[r];
        if (c == a.cols()) return std::nullopt;  // 0 = nonzero row
        x.set(c, e.at(r, a.cols()));
    }
    return x;
}

std::optional<FqMatrix> left_reduce_to_identity(const FqMatrix& m) {
    const std::size_t r = m.rows(), c = m.cols();
    if (c > r) throw DomainError("left_reduce_to_identity: more columns than rows");
    const FieldCtx& f = m.ctx();
    FqMatrix aug(f, r, c + r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug.set(i, j, m(i, j));
        aug.set(i, c + i, 1);
    }
    Echelon e = echelonize(aug);
    // Need every data column to be a pivot column, in order.
    for (std::size_t j = 0; j < c; ++j)
        if (j >= e.pivot_cols.size() || e.pivot_cols[j] != j) return std::nullopt;
    FqMatrix s(f, r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) s.set(i, j, e.at(i, c + j));
    return s;
}

FqMatrix row_basis(const FqMatrix& m) {
    Echelon e = echelonize(m);
    const std::size_t r = e.pivot_cols.size();
    FqMatrix basis(m.ctx(), r, m.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) basis.set(i, j, e.at(i, j));
    return basis;
}

bool same_row_space(const FqMatrix& a, const FqMatrix& b) {
    if (a.cols() != b.cols() || a.ctx().q() != b.ctx().q()) return false;
    return row_basis(a) == row_basis(b);
}

FqVector random_vector(FieldCtx ctx, std::size_t n, Rng& rng) {
    FqVector v(ctx, n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, static_cast<std::uint32_t>(rng.below(ctx.q())));
    return v;
}

FqMatrix random_matrix(FieldCtx ctx, std::size_t rows, std::size_t cols, Rng& rng) {
    FqMatrix m(ctx, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.set(i, j, static_cast<std::uint32_t>(rng.below(ctx.q())));
    return m;
}

FqVector random_weight_vector(FieldCtx ctx, std::size_t n, std::size_t t, Rng& rng) {
    if (t > n) throw DomainError("random_weight_vector: t > n");
    FqVector v(ctx, n);
    auto support = rng.subset(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(t));
    for (auto pos : support)
        v.set(pos, 1 + static_cast<std::uint32_t>(rng.below(ctx.q() - 1)));
    return v;
}

}  // namespace sdt
