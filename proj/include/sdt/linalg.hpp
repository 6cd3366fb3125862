#ifndef SDT_LINALG_HPP
#define SDT_LINALG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sdt/field.hpp"
#include "sdt/rng.hpp"

namespace sdt {

/// Row vector over F_q. Entries are residues in [0, q).
class FqVector {
  public:
    FqVector(FieldCtx ctx, std::size_t n) : ctx_(ctx), v_(n, 0) {}
    FqVector(FieldCtx ctx, std::vector<std::uint32_t> entries);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t size() const { return v_.size(); }
    std::uint32_t operator[](std::size_t i) const { return v_[i]; }
    void set(std::size_t i, std::uint32_t value) { v_[i] = value % ctx_.q(); }
    const std::vector<std::uint32_t>& entries() const { return v_; }

    FqVector operator+(const FqVector& o) const;
    FqVector operator-(const FqVector& o) const;
    FqVector scaled(std::uint32_t c) const;
    bool operator==(const FqVector& o) const { return ctx_.q() == o.ctx_.q() && v_ == o.v_; }
    bool is_zero() const;

    /// Entries restricted to `positions`, in the given order.
    FqVector restrict_to(const std::vector<std::uint32_t>& positions) const;

    std::string str() const;

  private:
    FieldCtx ctx_;
    std::vector<std::uint32_t> v_;
};

/// Dense row-major matrix over F_q.
class FqMatrix {
  public:
    FqMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols)
        : ctx_(ctx), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
    FqMatrix(FieldCtx ctx, std::size_t rows, std::size_t cols, std::vector<std::uint32_t> entries);

    const FieldCtx& ctx() const { return ctx_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, std::uint32_t value) {
        a_[i * cols_ + j] = value % ctx_.q();
    }

    static FqMatrix identity(FieldCtx ctx, std::size_t n);

    FqMatrix transpose() const;
    FqMatrix operator*(const FqMatrix& o) const;
    FqMatrix operator-(const FqMatrix& o) const;
    bool operator==(const FqMatrix& o) const {
        return ctx_.q() == o.ctx_.q() && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool is_zero() const;

    /// this * x^T, returned as a vector of length rows().
    FqVector mul_vec_t(const FqVector& x) const;
    /// Submatrix made of the listed columns, in the given order.
    FqMatrix columns(const std::vector<std::uint32_t>& idx) const;
    FqVector row(std::size_t i) const;
    void set_row(std::size_t i, const FqVector& v);

    std::string str() const;

  private:
    FieldCtx ctx_;
    std::size_t rows_, cols_;
    std::vector<std::uint32_t> a_;
};

/// x * M for a row vector x of length M.rows(); result has length M.cols().
FqVector vec_mul(const FqVector& x, const FqMatrix& m);

std::size_t hamming_weight(const FqVector& v);
std::size_t hamming_distance(const FqVector& a, const FqVector& b);

std::size_t rank(const FqMatrix& m);

struct SystematicForm {
    FqMatrix s;                          // nonsingular row transform
    std::vector<std::uint32_t> colperm;  // reduced column j came from input column colperm[j]
    FqMatrix reduced;                    // s * m with columns permuted = (I | A)
};

/// Gaussian elimination to systematic form (I | A) up to the recorded column
/// permutation. Pivots are chosen deterministically, scanning left to right.
/// Throws RankDeficientError if the matrix has fewer than rows() independent rows.
SystematicForm row_reduce_systematic(const FqMatrix& m);

/// Any x with A x^T = b^T, or nullopt when b is outside the column span.
/// Deterministic pivoting makes the returned representative reproducible.
std::optional<FqVector> solve_linear(const FqMatrix& a, const FqVector& b);

/// Nonsingular S with S * M = (I_m ; 0) where M is r x m, m <= r, of full
/// column rank. Returns nullopt when the columns are dependent.
std::optional<FqMatrix> left_reduce_to_identity(const FqMatrix& m);

/// Full-row-rank matrix with the same row space (the nonzero rows of the
/// reduced echelon form).
FqMatrix row_basis(const FqMatrix& m);

/// Row spaces compared via reduced echelon forms.
bool same_row_space(const FqMatrix& a, const FqMatrix& b);

FqVector random_vector(FieldCtx ctx, std::size_t n, Rng& rng);
FqMatrix random_matrix(FieldCtx ctx, std::size_t rows, std::size_t cols, Rng& rng);
/// Uniform over vectors of Hamming weight exactly t: Fisher-Yates support,
/// independent uniform nonzero values.
FqVector random_weight_vector(FieldCtx ctx, std::size_t n, std::size_t t, Rng& rng);

}  // namespace sdt

#endif
