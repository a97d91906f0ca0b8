#include "superwedge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace superwedge {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols, Scalar(0)) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) m.set_column(c, columns[c]);
    return m;
}

Vector Matrix::row(std::size_t r) const {
    return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
    if (v.size() != cols_) throw std::invalid_argument("set_row: dimension mismatch");
    std::copy(v.begin(), v.end(), entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

void Matrix::set_column(std::size_t c, const Vector& v) {
    if (v.size() != rows_) throw std::invalid_argument("set_column: dimension mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Vector Matrix::apply(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply: dimension mismatch");
    Vector out(rows_, Scalar(0));
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0) continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar& a = (*this)(r, c);
            if (sgn(a) != 0) out[r] += a * v[c];
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(r, k);
            if (sgn(a) == 0) continue;
            for (std::size_t c = 0; c < other.cols_; ++c) {
                const Scalar& b = other(k, c);
                if (sgn(b) != 0) out(r, c) += a * b;
            }
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

bool Matrix::operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RrefResult rref(Matrix m) {
    RrefResult out;
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && sgn(m(pivot, c)) == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            for (std::size_t k = c; k < cols; ++k) std::swap(m(pivot, k), m(r, k));
        }
        Scalar inv = 1 / m(r, c);
        for (std::size_t k = c; k < cols; ++k) {
            if (sgn(m(r, k)) != 0) m(r, k) *= inv;
        }
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            Scalar f = m(i, c);
            for (std::size_t k = c; k < cols; ++k) {
                if (sgn(m(r, k)) != 0) m(i, k) -= f * m(r, k);
            }
        }
        out.pivots.push_back(c);
        ++r;
    }
    out.rank = r;
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vector>& vectors) {
    Subspace s(ambient_dim);
    for (const auto& v : vectors) s.insert(v);
    return s;
}

Subspace Subspace::row_space(const Matrix& m) {
    RrefResult r = rref(m);
    Subspace s(m.cols());
    for (std::size_t i = 0; i < r.rank; ++i) s.rows_.push_back(r.reduced.row(i));
    s.pivots_ = r.pivots;
    return s;
}

Subspace Subspace::full(std::size_t n) {
    Subspace s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s.rows_.push_back(unit_vector(n, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(rows_, ambient_dim_); }

Vector Subspace::reduce(Vector v) const {
    if (v.size() != ambient_dim_) throw std::invalid_argument("subspace: dimension mismatch");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const std::size_t p = pivots_[r];
        if (sgn(v[p]) == 0) continue;
        Scalar f = v[p];
        add_scaled(v, -f, rows_[r]);
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim_ != ambient_dim_) return false;
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vector& v) { return contains(v); });
}

Vector Subspace::coordinates(const Vector& v) const {
    Vector out(rows_.size());
    for (std::size_t r = 0; r < rows_.size(); ++r) out[r] = v.at(pivots_[r]);
    return out;
}

bool Subspace::insert(Vector v) {
    v = reduce(std::move(v));
    std::size_t p = 0;
    while (p < v.size() && sgn(v[p]) == 0) ++p;
    if (p == v.size()) return false;
    Scalar inv = 1 / v[p];
    for (auto& x : v) {
        if (sgn(x) != 0) x *= inv;
    }
    for (auto& row : rows_) {
        if (sgn(row[p]) == 0) continue;
        Scalar f = row[p];
        add_scaled(row, -f, v);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
    auto offset = pos - pivots_.begin();
    pivots_.insert(pos, p);
    rows_.insert(rows_.begin() + offset, std::move(v));
    return true;
}

bool Subspace::operator==(const Subspace& other) const {
    return ambient_dim_ == other.ambient_dim_ && pivots_ == other.pivots_ && rows_ == other.rows_;
}

Subspace kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots) is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        Vector v(n, Scalar(0));
        v[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(n, basis);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspace_sum: dimension mismatch");
    Subspace s = a;
    for (const auto& v : b.basis()) s.insert(v);
    return s;
}

Subspace intersection(const Subspace& a, const Subspace& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("intersection: dimension mismatch");
    const std::size_t n = a.ambient_dim();
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    // Solve sum_i s_i a_i - sum_j t_j b_j = 0.
    Matrix m(n, da + db);
    for (std::size_t i = 0; i < da; ++i) m.set_column(i, a.basis()[i]);
    for (std::size_t j = 0; j < db; ++j) m.set_column(da + j, scaled(Scalar(-1), b.basis()[j]));
    Subspace k = kernel_basis(m);
    std::vector<Vector> vectors;
    for (const auto& sol : k.basis()) {
        Vector v(n, Scalar(0));
        for (std::size_t i = 0; i < da; ++i) add_scaled(v, sol[i], a.basis()[i]);
        vectors.push_back(std::move(v));
    }
    return Subspace::span(n, vectors);
}

QuotientMap::QuotientMap(Subspace kernel) : kernel_(std::move(kernel)) {
    std::vector<bool> is_pivot(kernel_.ambient_dim(), false);
    for (auto p : kernel_.pivots()) is_pivot[p] = true;
    for (std::size_t c = 0; c < is_pivot.size(); ++c) {
        if (!is_pivot[c]) complement_.push_back(c);
    }
}

Vector QuotientMap::apply(const Vector& v) const {
    Vector residual = kernel_.reduce(v);
    Vector out(complement_.size());
    for (std::size_t t = 0; t < complement_.size(); ++t) out[t] = residual[complement_[t]];
    return out;
}

Vector QuotientMap::lift(const Vector& q) const {
    if (q.size() != complement_.size()) throw std::invalid_argument("lift: dimension mismatch");
    Vector v(source_dim(), Scalar(0));
    for (std::size_t t = 0; t < complement_.size(); ++t) v[complement_[t]] = q[t];
    return v;
}

Matrix QuotientMap::matrix() const {
    Matrix m(target_dim(), source_dim());
    for (std::size_t c = 0; c < source_dim(); ++c) m.set_column(c, apply(unit_vector(source_dim(), c)));
    return m;
}

QuotientMap quotient_coords(std::size_t ambient_dim, const Subspace& s) {
    if (s.ambient_dim() != ambient_dim) throw std::invalid_argument("quotient_coords: dimension mismatch");
    return QuotientMap(s);
}

}  // namespace superwedge
