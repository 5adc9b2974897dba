#include "qlogic/grassmann.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace qlogic {

namespace {

/// Rank over GF(p) of the rows in `rows` (each of length n), destroying them.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>>& rows, std::size_t n, std::uint32_t p) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pivot], rows[rank]);
        // Scale the pivot row to 1 via Fermat inversion.
        std::uint32_t inv = 1;
        for (std::uint32_t e = p - 2, b = rows[rank][col]; e; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (std::size_t c = col; c < n; ++c) rows[rank][c] = rows[rank][c] * inv % p;
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const std::uint32_t f = rows[r][col];
            if (f == 0) continue;
            for (std::size_t c = col; c < n; ++c) rows[r][c] = (rows[r][c] + (p - f) * rows[rank][c]) % p;
        }
        ++rank;
    }
    return rank;
}

std::vector<std::uint8_t> pack(const Subspace& x) {
    std::vector<std::uint8_t> out;
    out.reserve(x.dim() * x.ambient_dim());
    for (const auto& s : x.basis().entries()) out.push_back(static_cast<std::uint8_t>(s.as_prime()->residue()));
    return out;
}

std::vector<std::size_t> sorted_indices(const VertexSet& set) {
    std::vector<std::size_t> out;
    for (auto v = set.find_first(); v != VertexSet::npos; v = set.find_next(v)) out.push_back(v);
    return out;
}

}  // namespace

GrassmannGraph GrassmannGraph::build(std::uint32_t n, std::uint32_t k, std::uint32_t p, std::size_t cap) {
    if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "Grassmann graph needs 1 <= k < n");
    if (!is_prime(p) || p > PrimeFieldElement::kMaxModulus)
        throw Error(ErrorKind::InvalidArgument, "p must be a prime <= 97");

    GrassmannGraph g;
    g.n_ = n;
    g.k_ = k;
    g.p_ = p;
    g.vertices_ = enumerate_subspaces(n, k, p, cap);
    const std::size_t v = g.vertices_.size();
    g.packed_.reserve(v);
    for (std::size_t i = 0; i < v; ++i) {
        g.index_.emplace(g.vertices_[i], i);
        g.packed_.push_back(pack(g.vertices_[i]));
    }

    if (v <= kStoredAdjacencyCap) {
        g.adjacency_.assign(v, VertexSet(v));
        g.opposite_.assign(v, VertexSet(v));
        const std::size_t far = k + g.diameter();
        std::vector<std::vector<std::uint32_t>> rows(2 * k, std::vector<std::uint32_t>(n));
        for (std::size_t i = 0; i < v; ++i) {
            for (std::size_t j = i + 1; j < v; ++j) {
                for (std::size_t r = 0; r < k; ++r)
                    for (std::size_t c = 0; c < n; ++c) {
                        rows[r][c] = g.packed_[i][r * n + c];
                        rows[k + r][c] = g.packed_[j][r * n + c];
                    }
                const std::size_t join = rank_mod_p(rows, n, p);
                if (join == k + 1) {
                    g.adjacency_[i].set(j);
                    g.adjacency_[j].set(i);
                }
                if (join == far) {
                    g.opposite_[i].set(j);
                    g.opposite_[j].set(i);
                }
            }
        }
    }
    return g;
}

std::optional<std::size_t> GrassmannGraph::index_of(const Subspace& x) const {
    const auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

bool GrassmannGraph::adjacent_computed(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    std::vector<std::vector<std::uint32_t>> rows(2 * k_, std::vector<std::uint32_t>(n_));
    for (std::size_t r = 0; r < k_; ++r)
        for (std::size_t c = 0; c < n_; ++c) {
            rows[r][c] = packed_[i][r * n_ + c];
            rows[k_ + r][c] = packed_[j][r * n_ + c];
        }
    return rank_mod_p(rows, n_, p_) == k_ + 1;
}

bool GrassmannGraph::adjacent(std::size_t i, std::size_t j) const {
    if (i >= size() || j >= size()) throw Error(ErrorKind::IndexOutOfRange, "vertex index out of range");
    return has_stored_adjacency() ? adjacency_[i].test(j) : adjacent_computed(i, j);
}

const VertexSet& GrassmannGraph::neighbours(std::size_t i) const {
    if (!has_stored_adjacency()) throw Error(ErrorKind::SizeCapExceeded, "adjacency is not stored for this graph");
    return adjacency_.at(i);
}

const VertexSet& GrassmannGraph::opposites(std::size_t i) const {
    if (!has_stored_adjacency()) throw Error(ErrorKind::SizeCapExceeded, "adjacency is not stored for this graph");
    return opposite_.at(i);
}

std::size_t GrassmannGraph::edge_count() const {
    std::size_t twice = 0;
    if (has_stored_adjacency()) {
        for (const auto& row : adjacency_) twice += row.count();
    } else {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j) twice += adjacent_computed(i, j) ? 1 : 0;
    }
    return twice / 2;
}

std::size_t GrassmannGraph::distance(std::size_t i, std::size_t j) const {
    const Subspace& x = vertex(i);
    const Subspace& y = vertex(j);
    const std::size_t by_meet = k_ - intersect(x, y).dim();
    const std::size_t by_join = sum(x, y).dim() - k_;
    if (by_meet != by_join)
        throw Error(ErrorKind::CriterionDisagreement, "k - dim(X∩Y) differs from dim(X+Y) - k");
    return by_meet;
}

std::vector<std::size_t> GrassmannGraph::bfs_distances(std::size_t source) const {
    constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(size(), kUnreached);
    std::deque<std::size_t> queue{source};
    dist.at(source) = 0;
    while (!queue.empty()) {
        const std::size_t u = queue.front();
        queue.pop_front();
        auto visit = [&](std::size_t w) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        };
        if (has_stored_adjacency()) {
            const auto& row = adjacency_[u];
            for (auto w = row.find_first(); w != VertexSet::npos; w = row.find_next(w)) visit(w);
        } else {
            for (std::size_t w = 0; w < size(); ++w)
                if (adjacent_computed(u, w)) visit(w);
        }
    }
    return dist;
}

std::size_t GrassmannGraph::diameter_by_bfs() const {
    std::size_t best = 0;
    for (std::size_t s = 0; s < size(); ++s) {
        const auto dist = bfs_distances(s);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

std::vector<std::size_t> GrassmannGraph::star(const Subspace& s) const {
    if (s.dim() + 1 != k_ || s.ambient_dim() != n_) throw Error(ErrorKind::DimensionMismatch, "star centre must have dimension k-1");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (vertices_[i].contains(s)) out.push_back(i);
    return out;
}

std::vector<std::size_t> GrassmannGraph::top(const Subspace& u) const {
    if (u.dim() != k_ + 1 || u.ambient_dim() != n_) throw Error(ErrorKind::DimensionMismatch, "top cover must have dimension k+1");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (u.contains(vertices_[i])) out.push_back(i);
    return out;
}

OppositeCriteria opposite_criteria(const GrassmannGraph& g, std::size_t i, std::size_t j) {
    OppositeCriteria c;
    c.by_distance = g.is_opposite(i, j);
    const Subspace& x = g.vertex(i);
    const Subspace& y = g.vertex(j);
    if (g.n() >= 2 * g.k()) c.by_meet = intersect(x, y).is_zero();
    if (g.n() <= 2 * g.k()) c.by_join = sum(x, y).is_full();
    return c;
}

// ----------------------------------------------------------------- cliques

namespace {

class BronKerbosch {
public:
    explicit BronKerbosch(const GrassmannGraph& g) : g_(g) {}

    std::vector<VertexSet> run() {
        const std::size_t v = g_.size();
        VertexSet p(v);
        p.set();
        VertexSet x(v);
        VertexSet r(v);
        expand(r, p, x);
        return std::move(found_);
    }

private:
    void expand(VertexSet& r, VertexSet p, VertexSet x) {
        if (p.none()) {
            if (x.none()) found_.push_back(r);
            return;
        }
        // Pivot on the vertex of P ∪ X with the most neighbours in P.
        const VertexSet candidates = p | x;
        std::size_t pivot = candidates.find_first();
        std::size_t best = (p & g_.neighbours(pivot)).count();
        for (auto u = candidates.find_next(pivot); u != VertexSet::npos; u = candidates.find_next(u)) {
            const std::size_t c = (p & g_.neighbours(u)).count();
            if (c > best) {
                best = c;
                pivot = u;
            }
        }
        const VertexSet branch = p - g_.neighbours(pivot);
        for (auto v = branch.find_first(); v != VertexSet::npos; v = branch.find_next(v)) {
            r.set(v);
            expand(r, p & g_.neighbours(v), x & g_.neighbours(v));
            r.reset(v);
            p.reset(v);
            x.set(v);
        }
    }

    const GrassmannGraph& g_;
    std::vector<VertexSet> found_;
};

}  // namespace

std::vector<MaximalClique> maximal_cliques(const GrassmannGraph& g) {
    if (!(1 < g.k() && g.k() + 1 < g.n()))
        throw Error(ErrorKind::InvalidArgument, "clique classification needs 1 < k < n-1");
    if (g.size() > kCliqueVertexCap || !g.has_stored_adjacency())
        throw Error(ErrorKind::SizeCapExceeded, "clique enumeration needs at most 10^4 vertices");

    std::vector<MaximalClique> out;
    for (const auto& set : BronKerbosch(g).run()) {
        const auto members = sorted_indices(set);
        Subspace meet = g.vertex(members.front());
        Subspace join = meet;
        for (auto m : members) {
            meet = intersect(meet, g.vertex(m));
            join = sum(join, g.vertex(m));
        }
        if (meet.dim() + 1 == g.k() && g.star(meet) == members) {
            out.push_back({CliqueKind::Star, meet, members});
        } else if (join.dim() == g.k() + 1 && g.top(join) == members) {
            out.push_back({CliqueKind::Top, join, members});
        } else {
            throw Error(ErrorKind::UnclassifiableClique,
                        "maximal clique of size " + std::to_string(members.size()) + " is neither a star nor a top");
        }
    }
    std::sort(out.begin(), out.end(), [](const MaximalClique& a, const MaximalClique& b) { return a.members < b.members; });
    return out;
}

bool adjacency_via_opposites(const GrassmannGraph& g, std::size_t i, std::size_t j) {
    if (i == j) throw Error(ErrorKind::InvalidArgument, "adjacency_via_opposites needs X != Y");
    const VertexSet covered = g.opposites(i) | g.opposites(j);
    for (std::size_t z = 0; z < g.size(); ++z) {
        if (z == i || z == j) continue;
        if (g.opposites(z).is_subset_of(covered)) return true;
    }
    return false;
}

// ----------------------------------------------------------------- duality

DualityReport dual_isomorphism_check(const GrassmannGraph& g, const GrassmannGraph& dual) {
    if (dual.n() != g.n() || dual.p() != g.p() || dual.k() != g.n() - g.k())
        throw Error(ErrorKind::DimensionMismatch, "dual graph must be Gamma_{n-k} over the same field");

    DualityReport report;
    std::vector<std::size_t> image(g.size());
    std::vector<bool> hit(dual.size(), false);
    report.bijective = g.size() == dual.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto target = dual.index_of(annihilator(g.vertex(i)));
        if (!target || hit[*target]) {
            report.bijective = false;
            continue;
        }
        hit[*target] = true;
        image[i] = *target;
    }
    if (!report.bijective) return report;

    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            ++report.pairs_checked;
            if (g.adjacent(i, j) != dual.adjacent(image[i], image[j])) report.adjacency_failures.emplace_back(i, j);
        }

    auto mapped = [&](const std::vector<std::size_t>& members) {
        std::vector<std::size_t> out;
        out.reserve(members.size());
        for (auto m : members) out.push_back(image[m]);
        std::sort(out.begin(), out.end());
        return out;
    };
    for (const auto& s : enumerate_subspaces(g.n(), g.k() - 1, g.p())) {
        ++report.stars_checked;
        if (mapped(g.star(s)) != dual.top(annihilator(s))) report.star_failures.push_back(s);
    }
    for (const auto& u : enumerate_subspaces(g.n(), g.k() + 1, g.p())) {
        ++report.tops_checked;
        if (mapped(g.top(u)) != dual.star(annihilator(u))) report.top_failures.push_back(u);
    }
    return report;
}

std::vector<std::size_t> induced_permutation(const GrassmannGraph& g, const Matrix& a) {
    if (!(a.field() == g.field()) || a.rows() != g.n() || !a.is_square())
        throw Error(ErrorKind::DimensionMismatch, "matrix must be n x n over GF(p)");
    if (!is_invertible(a)) throw Error(ErrorKind::NotInvertible, "induced map needs an invertible matrix");
    const Matrix at = a.transpose();
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        // Basis rows are vectors x; their images A x are the rows of B A^T.
        const auto target = g.index_of(Subspace::row_space(g.vertex(i).basis() * at));
        if (!target) throw Error(ErrorKind::AssumptionViolated, "image of a vertex is not a vertex");
        perm[i] = *target;
    }
    return perm;
}

std::vector<std::size_t> duality_permutation(const GrassmannGraph& g) {
    if (g.n() != 2 * g.k()) throw Error(ErrorKind::InvalidArgument, "duality acts on Gamma_k only when n = 2k");
    std::vector<std::size_t> perm(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const auto target = g.index_of(annihilator(g.vertex(i)));
        if (!target) throw Error(ErrorKind::AssumptionViolated, "annihilator of a vertex is not a vertex");
        perm[i] = *target;
    }
    return perm;
}

bool is_automorphism(const GrassmannGraph& g, const std::vector<std::size_t>& perm) {
    if (perm.size() != g.size()) return false;
    std::vector<bool> hit(g.size(), false);
    for (auto t : perm) {
        if (t >= g.size() || hit[t]) return false;
        hit[t] = true;
    }
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (g.adjacent(i, j) != g.adjacent(perm[i], perm[j])) return false;
    return true;
}

}  // namespace qlogic
