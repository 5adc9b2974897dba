#include "qlogic/subspace.hpp"

#include <limits>
#include <sstream>

namespace qlogic {

Subspace Subspace::zero(FieldTag field, std::size_t n) { return Subspace(Matrix(field, 0, n)); }

Subspace Subspace::full(FieldTag field, std::size_t n) { return Subspace(Matrix::identity(field, n)); }

Subspace Subspace::span(FieldTag field, std::size_t n, std::span<const Vector> vectors) {
    return Subspace(rref(Matrix::from_rows(field, n, vectors)).reduced);
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(rref(m).reduced); }

Subspace Subspace::from_canonical_basis(Matrix basis) { return Subspace(std::move(basis)); }

bool Subspace::contains(const Vector& v) const {
    if (v.dim() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "vector outside the ambient space");
    if (!(v.field() == field())) throw Error(ErrorKind::FieldMismatch, "vector over a different field");
    // Reduce v against the RREF rows; v is a member iff nothing survives.
    Vector residual = v;
    const std::size_t n = ambient_dim();
    std::size_t col = 0;
    for (std::size_t r = 0; r < dim(); ++r) {
        while (basis_(r, col).is_zero()) ++col;
        if (residual[col].is_zero()) continue;
        const Scalar factor = residual[col];
        for (std::size_t j = col; j < n; ++j)
            if (!basis_(r, j).is_zero()) residual[j] -= factor * basis_(r, j);
    }
    return residual.is_zero();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "different ambient spaces");
    if (other.dim() > dim()) return false;
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_.row(r))) return false;
    return true;
}

std::string Subspace::to_string() const {
    std::ostringstream os;
    os << "span{";
    for (std::size_t r = 0; r < dim(); ++r) os << (r ? ", " : "") << basis_.row(r).to_string();
    os << "} in " << field().to_string() << "^" << ambient_dim();
    return os.str();
}

namespace {

void check_same_space(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
    if (!(x.field() == y.field())) throw Error(ErrorKind::FieldMismatch, "subspaces over different fields");
}

}  // namespace

Subspace sum(const Subspace& x, const Subspace& y) {
    check_same_space(x, y);
    if (x.is_zero() || y.is_full()) return y;
    if (y.is_zero() || x.is_full()) return x;
    return Subspace::row_space(x.basis().stack(y.basis()));
}

Subspace intersect(const Subspace& x, const Subspace& y) {
    check_same_space(x, y);
    if (x.is_full() || y.is_zero()) return y;
    if (y.is_full() || x.is_zero()) return x;
    const Subspace constraints = sum(annihilator(x), annihilator(y));
    return kernel(constraints.basis());
}

bool contains(const Subspace& x, const Subspace& y) {
    check_same_space(x, y);
    return x.contains(y);
}

Subspace kernel(const Matrix& m) { return Subspace::from_canonical_basis(kernel_basis(m)); }

Subspace annihilator(const Subspace& x) { return kernel(x.basis()); }

std::uint64_t gaussian_binomial(std::uint32_t n, std::uint32_t k, std::uint32_t q) {
    if (k > n) return 0;
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    // row[j] holds [m, j]_q while m runs up to n.
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (std::uint32_t m = 1; m <= n; ++m) {
        for (std::uint32_t j = std::min(m, k); j >= 1; --j) {
            // [m, j] = [m-1, j-1] + q^j [m-1, j]
            unsigned __int128 qj = 1;
            for (std::uint32_t t = 0; t < j && qj <= kMax; ++t) qj *= q;
            unsigned __int128 value = static_cast<unsigned __int128>(row[j - 1]) +
                                      (qj > kMax ? static_cast<unsigned __int128>(kMax) : qj) * row[j];
            row[j] = value > kMax ? kMax : static_cast<std::uint64_t>(value);
        }
    }
    return row[k];
}

void for_each_subspace(std::uint32_t n, std::uint32_t k, std::uint32_t p,
                       const std::function<void(const Subspace&)>& visit, std::uint64_t cap) {
    const FieldTag field = FieldTag::prime(p);
    if (k > n) throw Error(ErrorKind::InvalidArgument, "k must not exceed n");
    const std::uint64_t count = gaussian_binomial(n, k, p);
    if (count > cap)
        throw Error(ErrorKind::SizeCapExceeded,
                    "Gr(" + std::to_string(k) + ", GF(" + std::to_string(p) + ")^" + std::to_string(n) + ") has " +
                        std::to_string(count) + " members, cap is " + std::to_string(cap));

    std::vector<std::uint32_t> pivots(k);
    for (std::uint32_t i = 0; i < k; ++i) pivots[i] = i;

    while (true) {
        // Free slots: (row r, column c) with c > pivot r and c not a pivot.
        std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
        std::vector<bool> is_pivot(n, false);
        for (auto c : pivots) is_pivot[c] = true;
        for (std::uint32_t r = 0; r < k; ++r)
            for (std::uint32_t c = pivots[r] + 1; c < n; ++c)
                if (!is_pivot[c]) slots.emplace_back(r, c);

        std::vector<std::uint32_t> digits(slots.size(), 0);
        while (true) {
            Matrix basis(field, k, n);
            for (std::uint32_t r = 0; r < k; ++r) basis(r, pivots[r]) = Scalar::one(field);
            for (std::size_t s = 0; s < slots.size(); ++s)
                if (digits[s] != 0)
                    basis(slots[s].first, slots[s].second) = PrimeFieldElement(static_cast<long>(digits[s]), p);
            visit(Subspace::from_canonical_basis(std::move(basis)));

            std::size_t pos = digits.size();
            while (pos > 0 && digits[pos - 1] == p - 1) digits[--pos] = 0;
            if (pos == 0) break;
            ++digits[pos - 1];
        }

        // Next pivot combination in lexicographic order.
        std::int64_t i = static_cast<std::int64_t>(k) - 1;
        while (i >= 0 && pivots[static_cast<std::size_t>(i)] == n - k + static_cast<std::uint32_t>(i)) --i;
        if (i < 0) break;
        ++pivots[static_cast<std::size_t>(i)];
        for (auto j = static_cast<std::size_t>(i) + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
}

std::vector<Subspace> enumerate_subspaces(std::uint32_t n, std::uint32_t k, std::uint32_t p, std::uint64_t cap) {
    std::vector<Subspace> out;
    out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(gaussian_binomial(n, k, p), cap)));
    for_each_subspace(n, k, p, [&](const Subspace& s) { out.push_back(s); }, cap);
    return out;
}

}  // namespace qlogic
