#pragma once

// The lattice of subspaces of F^n. A subspace is identified with its
// canonical RREF basis, so equality of subspaces is equality of matrices.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qlogic/matrix.hpp"

namespace qlogic {

class Subspace {
public:
    static Subspace zero(FieldTag field, std::size_t n);
    static Subspace full(FieldTag field, std::size_t n);
    static Subspace span(FieldTag field, std::size_t n, std::span<const Vector> vectors);
    static Subspace span(const Vector& v) { return span(v.field(), v.dim(), std::span(&v, 1)); }
    /// Row space of `m`.
    static Subspace row_space(const Matrix& m);
    /// Adopts `basis` as-is; it must already be in RREF without zero rows.
    static Subspace from_canonical_basis(Matrix basis);

    FieldTag field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_dim(); }

    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
        if (auto c = a.basis_.cols() <=> b.basis_.cols(); c != 0) return c;
        return a.basis_ <=> b.basis_;
    }

    /// "span{(1, 0), (0, 1)}" style rendering for diagnostics.
    std::string to_string() const;

private:
    explicit Subspace(Matrix basis) : basis_(std::move(basis)) {}

    Matrix basis_;
};

Subspace sum(const Subspace& x, const Subspace& y);
/// Computed as the common kernel of both subspaces' annihilator constraints.
Subspace intersect(const Subspace& x, const Subspace& y);
/// contains(x, y): y is a subspace of x.
bool contains(const Subspace& x, const Subspace& y);

/// Null space of `m` as a subspace of F^cols.
Subspace kernel(const Matrix& m);

/// X^0 in dual coordinates: all f with sum_i f_i x_i = 0 for every x in X.
/// dim = n - dim X, the map is inclusion-reversing and X^00 = X.
Subspace annihilator(const Subspace& x);

/// Number of k-subspaces of GF(q)^n (Gaussian binomial coefficient), via the
/// Pascal-type recurrence. Saturates at UINT64_MAX.
std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q);

inline constexpr std::uint64_t kEnumerationCap = 1'000'000;

/// Visits every k-subspace of GF(p)^n exactly once: pivot-column sets in
/// lexicographic order, then free RREF entries in odometer order (last entry
/// fastest). Raises SizeCapExceeded when the count exceeds `cap`.
void for_each_subspace(std::uint32_t n, std::uint32_t k, std::uint32_t p,
                       const std::function<void(const Subspace&)>& visit,
                       std::uint64_t cap = kEnumerationCap);

std::vector<Subspace> enumerate_subspaces(std::uint32_t n, std::uint32_t k, std::uint32_t p,
                                          std::uint64_t cap = kEnumerationCap);

}  // namespace qlogic
