#include <queue>
#include <set>

#include "helpers.hpp"
#include "qlogic/grassmann.hpp"
#include "qlogic/random.hpp"

using namespace qlogic;

namespace {

// Vectors of a subspace of GF(p)^n, coded base p.
std::set<std::uint32_t> vectors_of(const Subspace& x, std::uint32_t p) {
    const auto basis = x.basis_vectors();
    std::set<std::uint32_t> out;
    std::uint32_t total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) total *= p;
    for (std::uint32_t t = 0; t < total; ++t) {
        std::vector<std::uint32_t> v(x.ambient_dim(), 0);
        std::uint32_t digits = t;
        for (const auto& b : basis) {
            const std::uint32_t c = digits % p;
            digits /= p;
            for (std::size_t j = 0; j < v.size(); ++j) v[j] = (v[j] + c * b.coords()[j].as_prime()->residue()) % p;
        }
        std::uint32_t code = 0;
        for (auto it = v.rbegin(); it != v.rend(); ++it) code = code * p + *it;
        out.insert(code);
    }
    return out;
}

// dim(X∩Y) from |X∩Y| = p^d.
std::size_t meet_dim(const std::set<std::uint32_t>& a, const std::set<std::uint32_t>& b, std::uint32_t p) {
    std::size_t common = 0;
    for (auto v : a) common += b.count(v);
    std::size_t d = 0;
    while (common > 1) {
        common /= p;
        ++d;
    }
    return d;
}

struct Oracle {
    std::vector<std::vector<bool>> adjacent;
    std::vector<std::vector<std::size_t>> distance;
};

Oracle oracle_for(const GrassmannGraph& g) {
    const std::size_t n = g.size();
    std::vector<std::set<std::uint32_t>> vs;
    for (const auto& v : g.vertices()) vs.push_back(vectors_of(v, g.p()));
    Oracle o{std::vector<std::vector<bool>>(n, std::vector<bool>(n)), {}};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) o.adjacent[i][j] = i != j && meet_dim(vs[i], vs[j], g.p()) == g.k() - 1;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> dist(n, SIZE_MAX);
        std::queue<std::size_t> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            const auto u = q.front();
            q.pop();
            for (std::size_t v = 0; v < n; ++v)
                if (o.adjacent[u][v] && dist[v] == SIZE_MAX) {
                    dist[v] = dist[u] + 1;
                    q.push(v);
                }
        }
        o.distance.push_back(dist);
    }
    return o;
}

}  // namespace

TEST_CASE("vertex counts and lines") {
    CHECK(GrassmannGraph::build(4, 2, 2).size() == 35);
    CHECK(GrassmannGraph::build(5, 2, 2).size() == 155);
    CHECK(GrassmannGraph::build(4, 2, 3).size() == 130);
    const auto lines = GrassmannGraph::build(3, 1, 3);
    CHECK(lines.size() == 13);
    CHECK(lines.edge_count() == 13 * 12 / 2);
    CHECK_RAISES(GrassmannGraph::build(3, 3, 2), InvalidArgument);
    CHECK_RAISES(GrassmannGraph::build(3, 0, 2), InvalidArgument);
}

TEST_CASE("adjacency, distance and opposites against an independent oracle") {
    for (const auto& [n, k, p] : std::vector<std::array<std::uint32_t, 3>>{{4, 2, 2}, {5, 2, 2}, {4, 2, 3}, {5, 3, 2}}) {
        const auto g = GrassmannGraph::build(n, k, p);
        const Oracle o = oracle_for(g);
        std::size_t diameter = 0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = 0; j < g.size(); ++j) {
                CHECK(g.adjacent(i, j) == o.adjacent[i][j]);
                CHECK(g.distance(i, j) == o.distance[i][j]);
                diameter = std::max(diameter, o.distance[i][j]);
            }
            CHECK(g.bfs_distances(i) == o.distance[i]);
        }
        CHECK(g.diameter() == diameter);
        CHECK(g.diameter_by_bfs() == diameter);
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                CHECK(g.is_opposite(i, j) == (o.distance[i][j] == diameter));
                CHECK(opposite_criteria(g, i, j).consistent());
            }
    }
}

TEST_CASE("opposite example") {
    const auto g = GrassmannGraph::build(4, 2, 2);
    const FieldTag f2 = FieldTag::prime(2);
    const Matrix x = Matrix::from_ints(f2, {{1, 0, 0, 0}, {0, 1, 0, 0}});
    const Matrix y = Matrix::from_ints(f2, {{0, 0, 1, 0}, {0, 0, 0, 1}});
    const auto i = *g.index_of(Subspace::row_space(x));
    const auto j = *g.index_of(Subspace::row_space(y));
    CHECK(g.is_opposite(i, j));
    CHECK(g.distance(i, i) == 0);
}

TEST_CASE("maximal cliques are stars and tops") {
    const auto g = GrassmannGraph::build(4, 2, 2);
    const auto cliques = maximal_cliques(g);
    std::size_t stars = 0;
    std::size_t tops = 0;
    for (const auto& c : cliques) {
        CHECK(c.members.size() == 7);
        (c.kind == CliqueKind::Star ? stars : tops) += 1;
        if (c.kind == CliqueKind::Star) CHECK(c.members == g.star(c.anchor));
        else CHECK(c.members == g.top(c.anchor));
    }
    CHECK(stars == 15);
    CHECK(tops == 15);

    // A clique is maximal iff no vertex outside it is adjacent to all members.
    for (const auto& c : cliques) {
        for (std::size_t v = 0; v < g.size(); ++v) {
            if (std::find(c.members.begin(), c.members.end(), v) != c.members.end()) continue;
            bool all = true;
            for (auto m : c.members) all = all && g.adjacent(v, m);
            CHECK(!all);
        }
    }
    CHECK_RAISES(maximal_cliques(GrassmannGraph::build(3, 1, 2)), InvalidArgument);
}

TEST_CASE("adjacency through opposite vertices") {
    const auto g = GrassmannGraph::build(4, 2, 2);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) CHECK(adjacency_via_opposites(g, i, j) == g.adjacent(i, j));
}

TEST_CASE("annihilator duality") {
    const auto lines = GrassmannGraph::build(3, 1, 2);
    const auto planes = GrassmannGraph::build(3, 2, 2);
    const auto d = dual_isomorphism_check(lines, planes);
    CHECK(d.bijective);
    CHECK(d.adjacency_failures.empty());
    CHECK(d.pairs_checked == 7 * 6 / 2);

    const auto g = GrassmannGraph::build(4, 2, 2);
    const auto dd = dual_isomorphism_check(g, g);
    CHECK(dd.passed());
    CHECK(dd.stars_checked == 15);
    CHECK(dd.tops_checked == 15);
}

TEST_CASE("induced permutations are automorphisms") {
    const auto g = GrassmannGraph::build(4, 2, 3);
    SplitMix64 rng(67);
    for (int s = 0; s < 5; ++s) {
        const auto perm = induced_permutation(g, random_invertible(rng, g.field(), 4));
        CHECK(is_automorphism(g, perm));
        CHECK(std::set<std::size_t>(perm.begin(), perm.end()).size() == g.size());
    }
    const auto dual = duality_permutation(g);
    CHECK(is_automorphism(g, dual));
    std::vector<std::size_t> swap(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) swap[i] = i;
    // Exchanging an adjacent and a non-adjacent neighbour of vertex 0 breaks adjacency.
    std::size_t a = 1;
    while (!g.adjacent(0, a)) ++a;
    std::size_t b = 1;
    while (g.adjacent(0, b) || b == 0) ++b;
    std::swap(swap[a], swap[b]);
    CHECK(!is_automorphism(g, swap));
}
