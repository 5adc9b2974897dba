#include <algorithm>
#include <array>

#include "qlogic/grassmann.hpp"
#include "qlogic/random.hpp"
#include "suite_support.hpp"

namespace qlogic::detail {

namespace {

struct GraphParams {
    std::uint32_t n;
    std::uint32_t k;
    std::uint32_t p;

    std::string tag() const {
        return "Gr(" + std::to_string(k) + ",GF(" + std::to_string(p) + ")^" + std::to_string(n) + ")";
    }
};

std::vector<GraphParams> graphs_for(const SuiteConfig& config) {
    if (config.n || config.k || config.p) return {{config.n.value_or(4), config.k.value_or(2), config.p.value_or(2)}};
    return {{4, 2, 2}, {5, 2, 2}, {4, 2, 3}};
}

std::size_t count(std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    return static_cast<std::size_t>(gaussian_binomial(n, k, p));
}

}  // namespace

SuiteReport suite_grassmann(const SuiteConfig& config) {
    SuiteReport report("grassmann",
                       {"Grassmann graph distance formula", "Grassmann graph diameter", "opposite vertices",
                        "adjacency through opposite vertices", "annihilator duality of Grassmann graphs",
                        "automorphisms induced by semilinear maps"},
                       config_to_json(config));

    for (const auto& gp : graphs_for(config)) {
        const std::string tag = gp.tag();
        section(report, tag, [&] {
            const auto g = GrassmannGraph::build(gp.n, gp.k, gp.p);
            Check& vertices = report.check(tag + "/vertex-count");
            vertices.expect(g.size() == count(gp.n, gp.k, gp.p),
                            [&] { return Json{{"vertices", g.size()}, {"expected", count(gp.n, gp.k, gp.p)}}; });
            vertices.details()["vertices"] = g.size();
            vertices.details()["edges"] = g.edge_count();

            Check& dist = report.check(tag + "/distance-formula-matches-bfs");
            Check& opp = report.check(tag + "/opposite-criteria-agree");
            std::size_t eccentricity = 0;
            for (std::size_t i = 0; i < g.size(); ++i) {
                const auto bfs = g.bfs_distances(i);
                for (std::size_t j = i + 1; j < g.size(); ++j) {
                    dist.expect(g.distance(i, j) == bfs[j], [&] { return pair_json(g.vertex(i), g.vertex(j)); });
                    opp.expect(opposite_criteria(g, i, j).consistent() && g.is_opposite(i, j) == g.opposites(i).test(j),
                               [&] { return pair_json(g.vertex(i), g.vertex(j)); });
                }
                eccentricity = std::max(eccentricity, *std::max_element(bfs.begin(), bfs.end()));
            }
            Check& diameter = report.check(tag + "/diameter-is-min(k,n-k)");
            diameter.expect(eccentricity == g.diameter() && g.diameter_by_bfs() == g.diameter(),
                            [&] { return Json{{"bfs", eccentricity}, {"formula", g.diameter()}}; });

            if (g.size() <= 200) {
                Check& via = report.check(tag + "/adjacency-via-opposites");
                for (std::size_t i = 0; i < g.size(); ++i)
                    for (std::size_t j = i + 1; j < g.size(); ++j)
                        via.expect(adjacency_via_opposites(g, i, j) == g.adjacent(i, j),
                                   [&] { return pair_json(g.vertex(i), g.vertex(j)); });
            }

            Check& autos = report.check(tag + "/linear-maps-are-automorphisms");
            SplitMix64 rng(derive_seed(config.seed, "grassmann/automorphisms", gp.n * 100 + gp.k * 10 + gp.p));
            for (std::size_t s = 0; s < scaled(config, 20); ++s) {
                const Matrix a = random_invertible(rng, g.field(), gp.n);
                autos.expect(is_automorphism(g, induced_permutation(g, a)), [&] { return to_json(a); });
            }
            if (gp.n == 2 * gp.k) {
                Check& dual_auto = report.check(tag + "/duality-is-automorphism");
                const auto perm = duality_permutation(g);
                bool involution = true;
                for (std::size_t i = 0; i < g.size(); ++i) involution = involution && perm[perm[i]] == i;
                dual_auto.expect(is_automorphism(g, perm) && involution);
                for (std::size_t s = 0; s < scaled(config, 20); ++s) {
                    const auto lin = induced_permutation(g, random_invertible(rng, g.field(), gp.n));
                    std::vector<std::size_t> composed(g.size());
                    for (std::size_t i = 0; i < g.size(); ++i) composed[i] = perm[lin[i]];
                    dual_auto.expect(is_automorphism(g, composed));
                }
            }
        });
    }

    const std::vector<GraphParams> dual_cases = config.n ? std::vector<GraphParams>{graphs_for(config).front()}
                                                         : std::vector<GraphParams>{{4, 2, 2}, {3, 1, 2}};
    for (const auto& gp : dual_cases) {
        const std::string tag = gp.tag() + "/annihilator";
        section(report, tag, [&] {
            const auto g = GrassmannGraph::build(gp.n, gp.k, gp.p);
            const auto dual = GrassmannGraph::build(gp.n, gp.n - gp.k, gp.p);
            const DualityReport d = dual_isomorphism_check(g, dual);
            report.check(tag + "/bijective").expect(d.bijective);
            Check& adj = report.check(tag + "/adjacency-preserved");
            for (std::size_t i = d.adjacency_failures.size(); i < d.pairs_checked; ++i) adj.pass();
            for (const auto& [i, j] : d.adjacency_failures) adj.fail(pair_json(g.vertex(i), g.vertex(j)));
            Check& stars = report.check(tag + "/stars-to-tops");
            for (std::size_t i = d.star_failures.size(); i < d.stars_checked; ++i) stars.pass();
            for (const auto& s : d.star_failures) stars.fail(to_json(s));
            Check& tops = report.check(tag + "/tops-to-stars");
            for (std::size_t i = d.top_failures.size(); i < d.tops_checked; ++i) tops.pass();
            for (const auto& u : d.top_failures) tops.fail(to_json(u));
        });
    }
    return report;
}

SuiteReport suite_cliques(const SuiteConfig& config) {
    SuiteReport report("cliques", {"maximal cliques of Grassmann graphs are stars or tops", "star-top intersections are lines"},
                       config_to_json(config));
    for (const auto& gp : graphs_for(config)) {
        const std::string tag = gp.tag();
        section(report, tag, [&] {
            const auto g = GrassmannGraph::build(gp.n, gp.k, gp.p);
            const auto cliques = maximal_cliques(g);
            std::size_t stars = 0;
            std::size_t tops = 0;
            Check& sizes = report.check(tag + "/clique-sizes");
            Check& pairwise = report.check(tag + "/members-pairwise-adjacent");
            const std::size_t star_size = count(gp.n - gp.k + 1, 1, gp.p);
            const std::size_t top_size = count(gp.k + 1, gp.k, gp.p);
            for (const auto& c : cliques) {
                const bool star = c.kind == CliqueKind::Star;
                (star ? stars : tops) += 1;
                sizes.expect(c.members.size() == (star ? star_size : top_size),
                             [&] { return Json{{"anchor", to_json(c.anchor)}, {"size", c.members.size()}}; });
                bool ok = true;
                for (std::size_t a = 0; a < c.members.size(); ++a)
                    for (std::size_t b = a + 1; b < c.members.size(); ++b) ok = ok && g.adjacent(c.members[a], c.members[b]);
                pairwise.expect(ok, [&] { return to_json(c.anchor); });
            }
            Check& counts = report.check(tag + "/stars-and-tops");
            const std::size_t want_stars = count(gp.n, gp.k - 1, gp.p);
            const std::size_t want_tops = count(gp.n, gp.k + 1, gp.p);
            counts.expect(stars == want_stars && tops == want_tops, [&] {
                return Json{{"stars", stars}, {"tops", tops}, {"expected_stars", want_stars}, {"expected_tops", want_tops}};
            });
            counts.details() = Json{{"stars", stars}, {"tops", tops}, {"star_size", star_size}, {"top_size", top_size}};

            if (g.size() <= 200) {
                // star(S) ∩ top(U) is nonempty iff S ⊆ U, and is then a line of
                // the graph: the k-spaces between S and U.
                Check& lines = report.check(tag + "/star-top-intersections");
                const auto centres = enumerate_subspaces(gp.n, gp.k - 1, gp.p);
                const auto covers = enumerate_subspaces(gp.n, gp.k + 1, gp.p);
                const std::size_t line_size = count(2, 1, gp.p);
                for (const auto& s : centres) {
                    const auto st = g.star(s);
                    for (const auto& u : covers) {
                        const auto tp = g.top(u);
                        std::vector<std::size_t> both;
                        std::set_intersection(st.begin(), st.end(), tp.begin(), tp.end(), std::back_inserter(both));
                        const bool nested = u.contains(s);
                        lines.expect(nested ? both.size() == line_size : both.empty(), [&] { return pair_json(s, u); });
                    }
                }
            }
        });
    }
    return report;
}

}  // namespace qlogic::detail
