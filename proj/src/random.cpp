#include "qlogic/random.hpp"

#include "qlogic/hilbert.hpp"

namespace qlogic {

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw Error(ErrorKind::InvalidArgument, "empty sampling range");
    const auto width = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % width);
}

Scalar random_scalar(SplitMix64& rng, FieldTag field) {
    switch (field.kind) {
        case FieldKind::Gaussian: {
            const long re = rng.uniform(-kEntryBound, kEntryBound);
            const long im = rng.uniform(-kEntryBound, kEntryBound);
            return GaussianRational(Rational(re), Rational(im));
        }
        case FieldKind::Rational:
            return Rational(static_cast<long>(rng.uniform(-kEntryBound, kEntryBound)));
        case FieldKind::Prime:
            return PrimeFieldElement(rng.uniform(0, field.modulus - 1), field.modulus);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown field");
}

Vector random_vector(SplitMix64& rng, FieldTag field, std::size_t n) {
    std::vector<Scalar> coords;
    coords.reserve(n);
    for (std::size_t i = 0; i < n; ++i) coords.push_back(random_scalar(rng, field));
    return Vector(field, std::move(coords));
}

Matrix random_matrix(SplitMix64& rng, FieldTag field, std::size_t rows, std::size_t cols) {
    std::vector<Scalar> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(random_scalar(rng, field));
    return Matrix(field, rows, cols, std::move(entries));
}

Matrix random_invertible(SplitMix64& rng, FieldTag field, std::size_t n) {
    while (true) {
        Matrix m = random_matrix(rng, field, n, n);
        if (is_invertible(m)) return m;
    }
}

Subspace random_subspace(SplitMix64& rng, FieldTag field, std::size_t n, std::size_t d) {
    if (d > n) throw Error(ErrorKind::InvalidArgument, "subspace dimension exceeds ambient dimension");
    while (true) {
        Subspace s = Subspace::row_space(random_matrix(rng, field, d, n));
        if (s.dim() == d) return s;
    }
}

Subspace random_subspace(SplitMix64& rng, FieldTag field, std::size_t n) {
    const auto d = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n)));
    return random_subspace(rng, field, n, d);
}

std::vector<Vector> random_orthogonal_frame(SplitMix64& rng, std::size_t n) {
    const Matrix m = random_invertible(rng, FieldTag::gaussian(), n);
    const auto rows = m.row_vectors();
    return gram_schmidt(rows);
}

Subspace frame_span(std::span<const Vector> frame, std::uint64_t mask) {
    if (frame.empty()) throw Error(ErrorKind::InvalidArgument, "empty frame");
    std::vector<Vector> chosen;
    for (std::size_t i = 0; i < frame.size(); ++i)
        if (mask & (std::uint64_t{1} << i)) chosen.push_back(frame[i]);
    return Subspace::span(frame[0].field(), frame[0].dim(), chosen);
}

std::pair<Subspace, Subspace> random_compatible_pair(SplitMix64& rng, std::size_t n) {
    const auto frame = random_orthogonal_frame(rng, n);
    const auto full = (std::uint64_t{1} << n) - 1;
    const auto a = static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(full)));
    const auto b = static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>(full)));
    return {frame_span(frame, a), frame_span(frame, b)};
}

}  // namespace qlogic
