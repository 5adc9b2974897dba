#include "qlogic/matrix.hpp"

#include <sstream>

namespace qlogic {

// ------------------------------------------------------------------ Vector

Vector::Vector(FieldTag field, std::size_t dim) : field_(field), coords_(dim, Scalar::zero(field)) {}

Vector::Vector(FieldTag field, std::vector<Scalar> coords) : field_(field), coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (!(c.field() == field_))
            throw Error(ErrorKind::FieldMismatch, "vector coordinate outside " + field_.to_string());
}

Vector Vector::unit(FieldTag field, std::size_t dim, std::size_t index) {
    if (index >= dim) throw Error(ErrorKind::IndexOutOfRange, "unit vector index");
    Vector v(field, dim);
    v[index] = Scalar::one(field);
    return v;
}

Vector Vector::from_ints(FieldTag field, std::initializer_list<long> values) {
    std::vector<Scalar> coords;
    coords.reserve(values.size());
    for (long x : values) coords.push_back(Scalar::from_int(field, x));
    return {field, std::move(coords)};
}

bool Vector::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Vector Vector::conj() const {
    Vector out = *this;
    for (auto& c : out.coords_) c = c.conj();
    return out;
}

void Vector::check_compatible(const Vector& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorKind::FieldMismatch, "vectors over different fields");
    if (dim() != o.dim()) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
}

Vector& Vector::operator+=(const Vector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Vector& Vector::operator-=(const Vector& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < dim(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Vector operator*(const Scalar& s, const Vector& v) {
    Vector out = v;
    for (auto& c : out.coords_) c = s * c;
    return out;
}

std::string Vector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < dim(); ++i) os << (i ? ", " : "") << coords_[i].to_string();
    os << ')';
    return os.str();
}

// ------------------------------------------------------------------ Matrix

Matrix::Matrix(FieldTag field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix::Matrix(FieldTag field, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(field), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix entry count does not match shape");
    for (const auto& e : entries_)
        if (!(e.field() == field_)) throw Error(ErrorKind::FieldMismatch, "matrix entry outside " + field_.to_string());
}

Matrix Matrix::identity(FieldTag field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

Matrix Matrix::from_rows(FieldTag field, std::size_t cols, std::span<const Vector> rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols) throw Error(ErrorKind::DimensionMismatch, "row length differs from column count");
        if (!(rows[r].field() == field)) throw Error(ErrorKind::FieldMismatch, "row over a different field");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_ints(FieldTag field, std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(field, rows.size(), cols);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged integer matrix");
        std::size_t c = 0;
        for (long x : row) m(r, c++) = Scalar::from_int(field, x);
        ++r;
    }
    return m;
}

Matrix Matrix::diagonal(std::span<const Scalar> diag) {
    if (diag.empty()) throw Error(ErrorKind::InvalidArgument, "empty diagonal");
    Matrix m(diag.front().field(), diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

bool Matrix::is_identity() const { return is_square() && *this == identity(field_, rows_); }

Vector Matrix::row(std::size_t r) const {
    std::vector<Scalar> coords(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                               entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
    return {field_, std::move(coords)};
}

Vector Matrix::column(std::size_t c) const {
    Vector v(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

std::vector<Vector> Matrix::row_vectors() const {
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = e.conj();
    return out;
}

Matrix Matrix::conj_transpose() const {
    if (field_.is_finite())
        throw Error(ErrorKind::FieldMismatch, "conjugate transpose needs a Hermitian backend, got " + field_.to_string());
    return transpose().conj();
}

Matrix Matrix::stack(const Matrix& other) const {
    if (!(field_ == other.field_)) throw Error(ErrorKind::FieldMismatch, "stacking matrices over different fields");
    if (cols_ != other.cols_) throw Error(ErrorKind::DimensionMismatch, "stacking matrices with different widths");
    Matrix out(field_, rows_ + other.rows_, cols_);
    std::copy(entries_.begin(), entries_.end(), out.entries_.begin());
    std::copy(other.entries_.begin(), other.entries_.end(),
              out.entries_.begin() + static_cast<std::ptrdiff_t>(entries_.size()));
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out = *this;
    for (auto& e : out.entries_) e = -e;
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::FieldMismatch, "matrix product over different fields");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Scalar& bkj = b(k, j);
                if (!bkj.is_zero()) out(i, j) += aik * bkj;
            }
        }
    }
    return out;
}

Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols_ != x.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
    Vector out(a.field_, a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k)
            if (!a(i, k).is_zero() && !x[k].is_zero()) out[i] += a(i, k) * x[k];
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
    Matrix out = m;
    for (auto& e : out.entries_) e = s * e;
    return out;
}

std::strong_ordering operator<=>(const Matrix& a, const Matrix& b) {
    if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
    if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        if (auto c = a.entries_[i] <=> b.entries_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).to_string();
        os << ']';
    }
    os << ']';
    return os.str();
}

// ----------------------------------------------------------- elimination

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = r;
        while (pr < rows && a(pr, c).is_zero()) ++pr;
        if (pr == rows) continue;
        if (pr != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(pr, j), a(r, j));
        const Scalar inv = a(r, c).inverse();
        for (std::size_t j = c; j < cols; ++j)
            if (!a(r, j).is_zero()) a(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a(i, c).is_zero()) continue;
            const Scalar factor = a(i, c);
            for (std::size_t j = c; j < cols; ++j)
                if (!a(r, j).is_zero()) a(i, j) -= factor * a(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<Scalar> kept(a.entries().begin(), a.entries().begin() + static_cast<std::ptrdiff_t>(r * cols));
    return {Matrix(m.field(), r, cols, std::move(kept)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    const auto [reduced, pivots] = rref(m);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Vector> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.field(), cols);
        v[f] = Scalar::one(m.field());
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
        basis.push_back(std::move(v));
    }
    return rref(Matrix::from_rows(m.field(), cols, basis)).reduced;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.is_square()) throw Error(ErrorKind::DimensionMismatch, "inverse of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return m;
    Matrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = Scalar::one(m.field());
    }
    const auto [reduced, pivots] = rref(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = reduced(i, n + j);
    return inv;
}

bool is_invertible(const Matrix& m) { return m.is_square() && rank(m) == m.rows(); }

}  // namespace qlogic
