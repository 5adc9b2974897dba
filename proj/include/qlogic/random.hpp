#pragma once

// Seeded sample generators. The bit stream is SplitMix64 so that other
// implementations can reproduce samples from the algorithm alone:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// uniform(lo, hi) = lo + next() % (hi - lo + 1). Gaussian entries draw the
// real part then the imaginary part, each uniform in [-4, 4].

#include <cstdint>
#include <utility>
#include <vector>

#include "qlogic/subspace.hpp"

namespace qlogic {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    /// Inclusive range; requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);
    std::size_t index(std::size_t size) { return static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(size) - 1)); }

private:
    std::uint64_t state_;
};

inline constexpr long kEntryBound = 4;

/// One entry of `field`: a Gaussian integer with parts in [-4, 4], an
/// integer in [-4, 4] over Q, or a uniform residue over GF(p).
Scalar random_scalar(SplitMix64& rng, FieldTag field);
Vector random_vector(SplitMix64& rng, FieldTag field, std::size_t n);
Matrix random_matrix(SplitMix64& rng, FieldTag field, std::size_t rows, std::size_t cols);
/// Redraws until the matrix is invertible.
Matrix random_invertible(SplitMix64& rng, FieldTag field, std::size_t n);

/// Random subspace of dimension d: d random vectors, redrawn until independent.
Subspace random_subspace(SplitMix64& rng, FieldTag field, std::size_t n, std::size_t d);
/// Dimension uniform in [0, n].
Subspace random_subspace(SplitMix64& rng, FieldTag field, std::size_t n);

/// Orthogonal (not normalised) basis of Q(i)^n: Gram-Schmidt applied to the
/// rows of a random invertible matrix.
std::vector<Vector> random_orthogonal_frame(SplitMix64& rng, std::size_t n);

/// Span of the frame vectors selected by `mask` (bit i selects frame[i]).
Subspace frame_span(std::span<const Vector> frame, std::uint64_t mask);

/// Two subspaces spanned by random subsets of one random orthogonal frame,
/// hence compatible.
std::pair<Subspace, Subspace> random_compatible_pair(SplitMix64& rng, std::size_t n);

}  // namespace qlogic
