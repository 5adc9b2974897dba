#include <algorithm>
#include <bit>

#include "helpers.hpp"
#include "qlogic/random.hpp"
#include "qlogic/subspace.hpp"

using namespace qlogic;

namespace {

Matrix submatrix(const Matrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    Matrix out(m.field(), rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = m(rows[r], cols[c]);
    return out;
}

// Laplace expansion along the first row.
Scalar determinant(const Matrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) return Scalar::one(m.field());
    Scalar det = Scalar::zero(m.field());
    std::vector<std::size_t> rest_rows;
    for (std::size_t r = 1; r < n; ++r) rest_rows.push_back(r);
    for (std::size_t c = 0; c < n; ++c) {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < n; ++j)
            if (j != c) cols.push_back(j);
        const Scalar term = m(0, c) * determinant(submatrix(m, rest_rows, cols));
        det = c % 2 == 0 ? det + term : det - term;
    }
    return det;
}

std::vector<std::vector<std::size_t>> combinations(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != r) continue;
        std::vector<std::size_t> pick;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1) pick.push_back(i);
        out.push_back(pick);
    }
    return out;
}

// The largest r with a nonzero r x r minor.
std::size_t rank_by_minors(const Matrix& m) {
    for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r)
        for (const auto& rows : combinations(m.rows(), r))
            for (const auto& cols : combinations(m.cols(), r))
                if (!determinant(submatrix(m, rows, cols)).is_zero()) return r;
    return 0;
}

// Random matrix of a prescribed low rank, so ranks below full are exercised.
Matrix random_low_rank(SplitMix64& rng, FieldTag f, std::size_t rows, std::size_t cols) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(std::min(rows, cols))));
    if (r == 0) return Matrix(f, rows, cols);
    return random_matrix(rng, f, rows, r) * random_matrix(rng, f, r, cols);
}

}  // namespace

TEST_CASE("rref examples") {
    const FieldTag q = FieldTag::rationals();
    CHECK(rref(Matrix::identity(q, 3)).reduced == Matrix::identity(q, 3));
    CHECK(rref(Matrix::from_ints(q, {{2, 4}, {1, 2}})).reduced == Matrix::from_ints(q, {{1, 2}}));
    CHECK(rref(Matrix::from_ints(q, {{2, 4}, {1, 2}})).pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rank agrees with the largest nonzero minor") {
    SplitMix64 rng(17);
    for (FieldTag f : {FieldTag::rationals(), FieldTag::gaussian(), FieldTag::prime(2), FieldTag::prime(3)}) {
        for (int s = 0; s < 60; ++s) {
            const auto rows = static_cast<std::size_t>(rng.uniform(1, 4));
            const auto cols = static_cast<std::size_t>(rng.uniform(1, 4));
            const Matrix m = s % 2 ? random_matrix(rng, f, rows, cols) : random_low_rank(rng, f, rows, cols);
            CHECK(rank(m) == rank_by_minors(m));
            const auto r = rref(m);
            CHECK(rref(r.reduced).reduced == r.reduced);
            CHECK(r.reduced.rows() == rank(m));
        }
    }
}

TEST_CASE("kernel over GF(2) matches exhaustive search") {
    const FieldTag f2 = FieldTag::prime(2);
    CHECK(kernel(Matrix::from_ints(f2, {{1, 1}})) == Subspace::span(Vector::from_ints(f2, {1, 1})));
    CHECK(kernel(Matrix::identity(f2, 3)).is_zero());
    CHECK(kernel(Matrix(f2, 1, 4)).is_full());

    SplitMix64 rng(23);
    for (int s = 0; s < 40; ++s) {
        const std::size_t n = 5;
        const Matrix m = random_matrix(rng, f2, static_cast<std::size_t>(rng.uniform(1, 4)), n);
        const Subspace k = kernel(m);
        std::size_t count = 0;
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<Scalar> coords;
            for (std::size_t i = 0; i < n; ++i) coords.push_back(Scalar::from_int(f2, bits >> i & 1));
            const Vector v(f2, coords);
            const bool in_kernel = (m * v).is_zero();
            count += in_kernel ? 1 : 0;
            CHECK(k.contains(v) == in_kernel);
        }
        CHECK(count == (std::size_t{1} << k.dim()));
    }
}

TEST_CASE("inverse and adjoint") {
    const FieldTag qi = FieldTag::gaussian();
    CHECK(Matrix::identity(qi, 3).conj_transpose() == Matrix::identity(qi, 3));
    const Matrix i1(qi, 1, 1, {Scalar::parse("i")});
    CHECK(i1.conj_transpose() == Matrix(qi, 1, 1, {Scalar::parse("-i")}));
    CHECK(!inverse(Matrix::from_ints(qi, {{1, 2}, {2, 4}})).has_value());

    SplitMix64 rng(29);
    for (int s = 0; s < 50; ++s) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const Matrix a = random_invertible(rng, qi, n);
        const Matrix inv = *inverse(a);
        CHECK((a * inv).is_identity());
        CHECK((inv * a).is_identity());
        CHECK(!determinant(a).is_zero());
        const Matrix b = random_matrix(rng, qi, n, n);
        CHECK((a * b).conj_transpose() == b.conj_transpose() * a.conj_transpose());
    }
    CHECK_RAISES(Matrix::identity(qi, 2) * Matrix::identity(qi, 3), DimensionMismatch);
}
