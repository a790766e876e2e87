#pragma once

#include "findom/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace findom {

/// Dense matrix over a prime field, row-major. Elimination is deterministic
/// Gaussian elimination with first-nonzero pivoting; no randomization.
class Matrix {
public:
    Matrix() = default;
    Matrix(PrimeField f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), e_(rows * cols, 0u) {}

    static Matrix identity(PrimeField f, std::size_t n) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    const PrimeField& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint32_t& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    std::uint32_t at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    void set_reduced(std::size_t r, std::size_t c, std::int64_t v) { at(r, c) = field_.reduce(v); }

    bool is_zero() const {
        for (auto x : e_)
            if (x)
                return false;
        return true;
    }

    bool operator==(const Matrix& o) const {
        return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    Matrix scaled(std::uint32_t c) const;

    /// Columns [c0, c1) as a new matrix.
    Matrix columns(std::size_t c0, std::size_t c1) const;
    Matrix rows_slice(std::size_t r0, std::size_t r1) const;

    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);
    static Matrix block_diag(const Matrix& a, const Matrix& b);

    std::string str() const;

private:
    PrimeField field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> e_;
};

struct Echelon {
    Matrix reduced;                  // RREF of the input
    std::vector<std::size_t> pivots; // pivot column per nonzero row
};

Echelon rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

/// Some x with m x = b (free variables set to zero), or absent when the
/// system is inconsistent. b may have several columns.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

/// Subset of columns of m forming a basis of the column space.
Matrix column_space_basis(const Matrix& m);

/// Row-reduce the columns of `sub` against `space`: true iff every column of
/// `sub` lies in the column space of `space`.
bool columns_contained(const Matrix& sub, const Matrix& space);

} // namespace findom
