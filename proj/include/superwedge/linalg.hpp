#pragma once

#include <cstddef>
#include <vector>

#include "superwedge/rational.hpp"

namespace superwedge {

// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
    static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    void set_column(std::size_t c, const Vector& v);

    Vector apply(const Vector& v) const;
    Matrix operator*(const Matrix& other) const;
    Matrix transpose() const;

    bool operator==(const Matrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;                   // same shape as the input, zero rows last
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
    std::size_t rank = 0;
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

// A subspace of Q^n held as the nonzero rows of its reduced row echelon form.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim) {}

    static Subspace span(std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);
    static Subspace full(std::size_t n);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return rows_.size(); }

    const std::vector<Vector>& basis() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Matrix basis_matrix() const;

    // Residual of v after eliminating the pivot columns; zero iff v is inside.
    Vector reduce(Vector v) const;
    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    // Coordinates of v (assumed inside) in the echelon basis.
    Vector coordinates(const Vector& v) const;

    // Adds v to the span, keeping the basis reduced. Returns true if the
    // dimension grew.
    bool insert(Vector v);

    bool operator==(const Subspace& other) const;

private:
    std::size_t ambient_dim_ = 0;
    std::vector<Vector> rows_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace intersection(const Subspace& a, const Subspace& b);

// Linear map Q^n -> Q^n / S. The complement coordinates are the non-pivot
// columns of S in increasing order, so the map is deterministic.
class QuotientMap {
public:
    QuotientMap() = default;
    explicit QuotientMap(Subspace kernel);

    std::size_t source_dim() const { return kernel_.ambient_dim(); }
    std::size_t target_dim() const { return complement_.size(); }
    const Subspace& kernel() const { return kernel_; }
    const std::vector<std::size_t>& complement() const { return complement_; }

    Vector apply(const Vector& v) const;
    // Section of the map: quotient coordinates to a representative supported
    // on the complement columns.
    Vector lift(const Vector& q) const;
    Matrix matrix() const;

private:
    Subspace kernel_;
    std::vector<std::size_t> complement_;
};

QuotientMap quotient_coords(std::size_t ambient_dim, const Subspace& s);

}  // namespace superwedge
