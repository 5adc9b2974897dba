#pragma once

// Dense exact matrices and vectors over one backend field.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlogic/scalar.hpp"

namespace qlogic {

class Vector {
public:
    Vector(FieldTag field, std::size_t dim);
    Vector(FieldTag field, std::vector<Scalar> coords);

    static Vector unit(FieldTag field, std::size_t dim, std::size_t index);
    /// Integer coordinates embedded in `field`.
    static Vector from_ints(FieldTag field, std::initializer_list<long> values);

    FieldTag field() const { return field_; }
    std::size_t dim() const { return coords_.size(); }
    bool is_zero() const;

    const Scalar& operator[](std::size_t i) const { return coords_[i]; }
    Scalar& operator[](std::size_t i) { return coords_[i]; }
    std::span<const Scalar> coords() const { return coords_; }

    Vector conj() const;

    Vector& operator+=(const Vector& o);
    Vector& operator-=(const Vector& o);
    friend Vector operator+(Vector a, const Vector& b) { return a += b; }
    friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
    friend Vector operator*(const Scalar& s, const Vector& v);

    friend bool operator==(const Vector& a, const Vector& b) {
        return a.field_ == b.field_ && a.coords_ == b.coords_;
    }

    std::string to_string() const;

private:
    void check_compatible(const Vector& o) const;

    FieldTag field_;
    std::vector<Scalar> coords_;
};

class Matrix {
public:
    Matrix(FieldTag field, std::size_t rows, std::size_t cols);
    /// Row-major entries; size must equal rows * cols.
    Matrix(FieldTag field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(FieldTag field, std::size_t n);
    static Matrix from_rows(FieldTag field, std::size_t cols, std::span<const Vector> rows);
    static Matrix from_ints(FieldTag field, std::initializer_list<std::initializer_list<long>> rows);
    static Matrix diagonal(std::span<const Scalar> diag);

    FieldTag field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_zero() const;
    bool is_identity() const;

    const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const std::vector<Scalar>& entries() const { return entries_; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    std::vector<Vector> row_vectors() const;

    Matrix transpose() const;
    /// Entry (i, j) = conj(M(j, i)): the adjoint for the standard Hermitian form.
    /// Raises FieldMismatch over prime fields.
    Matrix conj_transpose() const;
    Matrix conj() const;
    /// Rows of `this` followed by rows of `other`.
    Matrix stack(const Matrix& other) const;

    Matrix operator-() const;
    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& x);
    friend Matrix operator*(const Scalar& s, const Matrix& m);

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend std::strong_ordering operator<=>(const Matrix& a, const Matrix& b);

    std::string to_string() const;

private:
    FieldTag field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> entries_;
};

struct RrefResult {
    Matrix reduced;                    // zero rows removed
    std::vector<std::size_t> pivots;   // strictly increasing pivot columns
};

/// Reduced row echelon form. The pivot in each column is the first nonzero
/// entry at or below the current row; the output is canonical.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Rows form a basis (in RREF) of {v : M v = 0}; row count = cols - rank.
Matrix kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

}  // namespace qlogic
