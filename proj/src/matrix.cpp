#include "findom/matrix.hpp"

#include <sstream>

namespace findom {

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_))
        throw ContractViolation("matrix product shape mismatch");
    Matrix r(field_, rows_, o.cols_);
    const std::uint64_t p = field_.p;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t aik = at(i, k);
            if (!aik)
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                std::uint64_t v = r.at(i, j) + aik * o.at(k, j) % p;
                r.at(i, j) = std::uint32_t(v >= p ? v - p : v);
            }
        }
    }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw ContractViolation("matrix sum shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = field_.add(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_))
        throw ContractViolation("matrix difference shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = field_.sub(e_[i], o.e_[i]);
    return r;
}

Matrix Matrix::transpose() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    Matrix r = *this;
    for (auto& x : r.e_)
        x = field_.mul(x, c);
    return r;
}

Matrix Matrix::columns(std::size_t c0, std::size_t c1) const {
    Matrix r(field_, rows_, c1 - c0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = c0; j < c1; ++j)
            r.at(i, j - c0) = at(i, j);
    return r;
}

Matrix Matrix::rows_slice(std::size_t r0, std::size_t r1) const {
    Matrix r(field_, r1 - r0, cols_);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(i - r0, j) = at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_)
        throw ContractViolation("hstack row mismatch");
    Matrix r(a.field_, a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t j = 0; j < a.cols_; ++j)
            r.at(i, j) = a.at(i, j);
        for (std::size_t j = 0; j < b.cols_; ++j)
            r.at(i, a.cols_ + j) = b.at(i, j);
    }
    return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_)
        throw ContractViolation("vstack column mismatch");
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            r.at(a.rows_ + i, j) = b.at(i, j);
    return r;
}

Matrix Matrix::block_diag(const Matrix& a, const Matrix& b) {
    Matrix r(a.field_, a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j)
            r.at(i, j) = a.at(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            r.at(a.rows_ + i, a.cols_ + j) = b.at(i, j);
    return r;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j);
        os << "]";
    }
    return os.str();
}

Echelon rref(const Matrix& m) {
    Echelon out{m, {}};
    Matrix& a = out.reduced;
    const PrimeField f = m.field();
    std::size_t pr = 0; // next pivot row
    for (std::size_t c = 0; c < a.cols() && pr < a.rows(); ++c) {
        std::size_t sel = a.rows();
        for (std::size_t r = pr; r < a.rows(); ++r)
            if (a.at(r, c)) {
                sel = r;
                break;
            }
        if (sel == a.rows())
            continue;
        if (sel != pr)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(sel, j), a.at(pr, j));
        std::uint32_t piv = f.inv(a.at(pr, c));
        for (std::size_t j = c; j < a.cols(); ++j)
            a.at(pr, j) = f.mul(a.at(pr, j), piv);
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == pr)
                continue;
            std::uint32_t v = a.at(r, c);
            if (!v)
                continue;
            for (std::size_t j = c; j < a.cols(); ++j)
                a.at(r, j) = f.sub(a.at(r, j), f.mul(v, a.at(pr, j)));
        }
        out.pivots.push_back(c);
        ++pr;
    }
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    Echelon e = rref(m);
    const PrimeField f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : e.pivots)
        is_pivot[c] = true;
    std::size_t nullity = m.cols() - e.pivots.size();
    Matrix k(f, m.cols(), nullity);
    std::size_t col = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        k.at(free, col) = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            k.at(e.pivots[r], col) = f.neg(e.reduced.at(r, free));
        ++col;
    }
    return k;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
    if (m.rows() != b.rows())
        throw ContractViolation("solve: row count mismatch");
    Echelon e = rref(Matrix::hstack(m, b));
    // inconsistent iff some pivot lands in the b-part
    for (auto c : e.pivots)
        if (c >= m.cols())
            return std::nullopt;
    Matrix x(m.field(), m.cols(), b.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        for (std::size_t j = 0; j < b.cols(); ++j)
            x.at(e.pivots[r], j) = e.reduced.at(r, m.cols() + j);
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols())
        return std::nullopt;
    Echelon e = rref(Matrix::hstack(m, Matrix::identity(m.field(), m.rows())));
    if (e.pivots.size() < m.rows() || (e.pivots.size() && e.pivots.back() >= m.cols()))
        return std::nullopt;
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        if (e.pivots[r] != r)
            return std::nullopt;
    return e.reduced.columns(m.cols(), 2 * m.cols());
}

Matrix column_space_basis(const Matrix& m) {
    Echelon e = rref(m);
    Matrix r(m.field(), m.rows(), e.pivots.size());
    for (std::size_t j = 0; j < e.pivots.size(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i)
            r.at(i, j) = m.at(i, e.pivots[j]);
    return r;
}

bool columns_contained(const Matrix& sub, const Matrix& space) {
    if (sub.cols() == 0)
        return true;
    return rank(Matrix::hstack(space, sub)) == rank(space);
}

} // namespace findom
