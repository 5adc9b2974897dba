#pragma once

// The Grassmann graph Gamma_k(V) for V = GF(p)^n: vertices are the
// k-subspaces in enumeration order, X ~ Y iff dim(X∩Y) = k-1.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "qlogic/subspace.hpp"

namespace qlogic {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kGraphVertexCap = 100'000;
inline constexpr std::size_t kStoredAdjacencyCap = 10'000;

class GrassmannGraph {
public:
    /// Requires 1 <= k < n. Adjacency is stored as a bit matrix when there
    /// are at most 10^4 vertices and recomputed on demand otherwise.
    static GrassmannGraph build(std::uint32_t n, std::uint32_t k, std::uint32_t p,
                                std::size_t cap = kGraphVertexCap);

    std::uint32_t n() const { return n_; }
    std::uint32_t k() const { return k_; }
    std::uint32_t p() const { return p_; }
    FieldTag field() const { return FieldTag::prime(p_); }

    std::size_t size() const { return vertices_.size(); }
    const Subspace& vertex(std::size_t i) const { return vertices_.at(i); }
    const std::vector<Subspace>& vertices() const { return vertices_; }
    std::optional<std::size_t> index_of(const Subspace& x) const;

    bool has_stored_adjacency() const { return !adjacency_.empty(); }
    bool adjacent(std::size_t i, std::size_t j) const;
    /// Stored mode only.
    const VertexSet& neighbours(std::size_t i) const;
    std::size_t edge_count() const;

    /// k - dim(X∩Y); asserted equal to dim(X+Y) - k.
    std::size_t distance(std::size_t i, std::size_t j) const;
    /// Path distances from `source`; unreachable vertices get SIZE_MAX.
    std::vector<std::size_t> bfs_distances(std::size_t source) const;

    /// min(k, n-k)
    std::size_t diameter() const { return std::min(k_, n_ - k_); }
    /// Largest BFS eccentricity over all vertices.
    std::size_t diameter_by_bfs() const;

    bool is_opposite(std::size_t i, std::size_t j) const { return distance(i, j) == diameter(); }
    /// Vertices opposite to i, stored mode only.
    const VertexSet& opposites(std::size_t i) const;

    /// Vertices containing the (k-1)-subspace s.
    std::vector<std::size_t> star(const Subspace& s) const;
    /// Vertices inside the (k+1)-subspace u.
    std::vector<std::size_t> top(const Subspace& u) const;

private:
    GrassmannGraph() = default;
    bool adjacent_computed(std::size_t i, std::size_t j) const;

    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::uint32_t p_ = 2;
    std::vector<Subspace> vertices_;
    std::map<Subspace, std::size_t> index_;
    std::vector<std::vector<std::uint8_t>> packed_;  // residues of each basis, row-major
    std::vector<VertexSet> adjacency_;
    std::vector<VertexSet> opposite_;
};

/// The three descriptions of "opposite" in Gamma_k: maximal distance, zero
/// meet (meaningful when n >= 2k) and full join (meaningful when n <= 2k).
struct OppositeCriteria {
    bool by_distance = false;
    std::optional<bool> by_meet;
    std::optional<bool> by_join;

    bool consistent() const {
        return (!by_meet || *by_meet == by_distance) && (!by_join || *by_join == by_distance);
    }
};

OppositeCriteria opposite_criteria(const GrassmannGraph& g, std::size_t i, std::size_t j);

enum class CliqueKind { Star, Top };

struct MaximalClique {
    CliqueKind kind;
    Subspace anchor;                    // centre (dim k-1) or cover (dim k+1)
    std::vector<std::size_t> members;   // sorted vertex indices
};

inline constexpr std::size_t kCliqueVertexCap = 10'000;

/// Every maximal clique, found by Bron-Kerbosch with pivoting and classified
/// by the meet and join of its members. Requires 1 < k < n-1 and stored
/// adjacency. Output is sorted by member lists. Raises UnclassifiableClique
/// if a clique is neither a star nor a top.
std::vector<MaximalClique> maximal_cliques(const GrassmannGraph& g);

/// X ~ Y iff some Z outside {X, Y} has every vertex opposite to Z opposite
/// to X or to Y. Exhaustive over Z; requires X != Y and stored adjacency.
bool adjacency_via_opposites(const GrassmannGraph& g, std::size_t i, std::size_t j);

struct DualityReport {
    bool bijective = false;
    std::size_t pairs_checked = 0;
    std::vector<std::pair<std::size_t, std::size_t>> adjacency_failures;
    std::size_t stars_checked = 0;
    std::size_t tops_checked = 0;
    std::vector<Subspace> star_failures;  // centres whose star is not sent onto a top
    std::vector<Subspace> top_failures;   // covers whose top is not sent onto a star

    bool passed() const {
        return bijective && adjacency_failures.empty() && star_failures.empty() && top_failures.empty();
    }
};

/// X -> X^0 from Gamma_k(V) to Gamma_{n-k}(V*): bijectivity, adjacency in
/// both directions, and stars <-> tops. `dual` must be built for (n, n-k, p).
DualityReport dual_isomorphism_check(const GrassmannGraph& g, const GrassmannGraph& dual);

/// Vertex permutation X -> A(X) for invertible A over GF(p).
std::vector<std::size_t> induced_permutation(const GrassmannGraph& g, const Matrix& a);
/// Vertex permutation X -> X^0 (coordinates of V* identified with V); needs n = 2k.
std::vector<std::size_t> duality_permutation(const GrassmannGraph& g);
/// Bijective and adjacency-preserving in both directions.
bool is_automorphism(const GrassmannGraph& g, const std::vector<std::size_t>& perm);

}  // namespace qlogic
