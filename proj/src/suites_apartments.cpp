#include <algorithm>
#include <bit>
#include <set>

#include "qlogic/apartments.hpp"
#include "qlogic/hilbert.hpp"
#include "qlogic/random.hpp"
#include "suite_support.hpp"

namespace qlogic::detail {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

Json members_json(const MemberSet& set) {
    Json out = Json::array();
    for (auto s : set) out.push_back(index_set_to_string(s));
    return out;
}

/// Bit m of the result is set iff member m of `a` lies in `subset`.
std::uint64_t as_mask(const Apartment& a, const MemberSet& subset) {
    std::uint64_t mask = 0;
    const auto& all = a.all_members();
    for (auto s : subset)
        mask |= std::uint64_t{1} << (std::lower_bound(all.begin(), all.end(), s) - all.begin());
    return mask;
}

MemberSet from_mask(const Apartment& a, std::uint64_t mask) {
    MemberSet out;
    for (std::size_t m = 0; m < a.all_members().size(); ++m)
        if (mask & (std::uint64_t{1} << m)) out.push_back(a.all_members()[m]);
    return out;
}

bool witness_valid(const Apartment& a, const InexactnessCertificate& cert, const MemberSet& subset, bool ortho) {
    if (cert.exact || !cert.witness) return false;
    const Apartment& w = *cert.witness;
    bool ok = !(w == a) && (!ortho || w.is_ortho());
    for (auto s : subset) ok = ok && w.index_of(a.member(s)).has_value();
    return ok;
}

}  // namespace

SuiteReport suite_apartments(const SuiteConfig& config) {
    SuiteReport report("apartments",
                       {"apartments of Grassmannians", "inexact subsets of an apartment",
                        "maximal inexact subsets", "complementary subsets and opposite members"},
                       config_to_json(config));
    const auto ns = dims_or(config, {4, 5, 6});
    const std::uint32_t k = config.k.value_or(2);
    const std::uint32_t p = config.p.value_or(2);
    const FieldTag field = FieldTag::prime(p);

    section(report, "selectors", [&] {
        Check& sizes = report.check("selectors/sizes");
        for (auto n : ns) {
            const Apartment a = Apartment::standard(field, n, k);
            sizes.expect(a.all_members().size() == binomial(n, k));
            for (std::size_t i = 0; i < n; ++i) {
                const MemberSet in = select(a, {plus(i)});
                const MemberSet out = select(a, {minus(i)});
                sizes.expect(member_union(in, out) == a.all_members() && in.size() + out.size() == a.all_members().size());
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j) sizes.expect(select(a, {plus(i), minus(j)}).size() == binomial(n - 2, k - 1));
            }
        }
    });

    section(report, "johnson", [&] {
        Check& johnson = report.check("johnson/adjacency-is-index-overlap");
        for (auto n : ns) {
            const Apartment a = Apartment::standard(field, n, k);
            for (auto x : a.all_members())
                for (auto y : a.all_members()) {
                    if (x >= y) continue;
                    const bool adjacent = intersect(a.member(x), a.member(y)).dim() + 1 == k;
                    johnson.expect(adjacent == (std::popcount(x & y) + 1 == static_cast<int>(k)));
                }
        }
    });

    const bool exhaustive = !config.n && !config.k && !config.p;
    if (exhaustive) {
        section(report, "exhaustive", [&] {
            const auto found = enumerate_apartments(4, 2, 2, config.cache_dir);
            const Apartment a = Apartment::standard(FieldTag::prime(2), 4, 2);
            Check& counted = report.check("exhaustive/apartment-count");
            // |GL(4,2)| ordered bases; each apartment has 4! orderings of its lines.
            counted.expect(found.ordered_bases == 20160 && found.apartments.size() == 20160 / 24,
                           [&] { return Json{{"bases", found.ordered_bases}, {"apartments", found.apartments.size()}}; });
            counted.details() = Json{{"ordered_bases", found.ordered_bases}, {"apartments", found.apartments.size()}};

            std::set<std::uint64_t> masks;
            bool saw_self = false;
            for (const auto& b : found.apartments) {
                if (b == a) {
                    saw_self = true;
                    continue;
                }
                masks.insert(as_mask(a, common_members(a, b)));
            }
            report.check("exhaustive/standard-apartment-found").expect(saw_self);

            const std::size_t m = a.all_members().size();
            auto inexact_by_enumeration = [&](std::uint64_t subset) {
                return std::any_of(masks.begin(), masks.end(), [&](auto mask) { return (subset & ~mask) == 0; });
            };
            Check& agree = report.check("exhaustive/certificate-matches-enumeration");
            for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << m); ++subset) {
                const MemberSet members = from_mask(a, subset);
                const auto cert = inexactness_certificate_linear(a, members);
                const bool inexact = inexact_by_enumeration(subset);
                agree.expect(cert.exact != inexact && (cert.exact || witness_valid(a, cert, members, false)),
                             [&] { return Json{{"subset", members_json(members)}, {"enumeration_inexact", inexact}}; });
            }

            std::set<std::uint64_t> maximal;
            for (auto mask : masks) {
                const bool dominated = std::any_of(masks.begin(), masks.end(),
                                                   [&](auto other) { return other != mask && (mask & ~other) == 0; });
                if (!dominated) maximal.insert(mask);
            }
            std::set<std::uint64_t> predicted;
            for (const auto& mi : maximal_inexact_subsets_linear(a)) predicted.insert(as_mask(a, mi.members));
            Check& maximal_check = report.check("exhaustive/maximal-inexact-subsets");
            maximal_check.expect(maximal == predicted && predicted.size() == 12, [&] {
                Json got = Json::array();
                for (auto mask : maximal) got.push_back(members_json(from_mask(a, mask)));
                return Json{{"enumerated", got}};
            });
            maximal_check.details() = Json{{"maximal", maximal.size()}};
        });
    }

    section(report, "maximal", [&] {
        Check& maximal = report.check("maximal/inexact-and-maximal");
        Check& complement = report.check("maximal/complement-is-complementary-subset");
        for (auto n : ns) {
            if (n < 2 * k) continue;
            const Apartment a = Apartment::standard(field, n, k);
            const auto subsets = maximal_inexact_subsets_linear(a);
            maximal.expect(subsets.size() == n * (n - 1));
            for (const auto& mi : subsets) {
                maximal.expect(mi.certified_inexact && mi.every_extension_exact,
                               [&] { return Json{{"n", n}, {"i", mi.i}, {"j", mi.j}}; });
                complement.expect(member_difference(a.all_members(), mi.members) == select(a, {plus(mi.i), minus(mi.j)}));
            }
        }
        bool threw = false;
        try {
            maximal_inexact_subsets_linear(Apartment::standard(field, 5, 3));
        } catch (const Error& e) {
            threw = e.kind() == ErrorKind::AssumptionViolated;
        }
        report.check("maximal/rejects-n-below-2k").expect(threw);
    });

    section(report, "random-subsets", [&] {
        Check& sound = report.check("random-subsets/inexact-verdicts-carry-witnesses");
        SplitMix64 rng(derive_seed(config.seed, "apartments/random-subsets"));
        for (std::size_t s = 0; s < scaled(config, 200); ++s) {
            const std::uint32_t n = ns[s % ns.size()];
            const Apartment a = Apartment::standard(field, n, k);
            MemberSet subset;
            for (auto member : a.all_members())
                if (rng.uniform(0, 3) != 0) subset.push_back(member);
            const auto cert = inexactness_certificate_linear(a, subset);
            sound.expect(cert.exact || witness_valid(a, cert, subset, false),
                         [&] { return Json{{"n", n}, {"subset", members_json(subset)}}; });
        }
    });

    section(report, "opposite", [&] {
        Check& opp = report.check("opposite/complementary-subsets-detect-opposites");
        for (auto n : ns) {
            if (n < 2 * k) continue;
            const Apartment a = Apartment::standard(field, n, k);
            for (auto x : a.all_members())
                for (auto y : a.all_members()) {
                    if (x >= y) continue;
                    const bool disjoint = (x & y) == 0;
                    const bool meet_zero = intersect(a.member(x), a.member(y)).is_zero();
                    opp.expect(opposite_via_complementary(a, x, y) == disjoint && disjoint == meet_zero,
                               [&] { return Json{{"n", n}, {"X", index_set_to_string(x)}, {"Y", index_set_to_string(y)}}; });
                }
        }
    });
    return report;
}

SuiteReport suite_ortho_apartments(const SuiteConfig& config) {
    SuiteReport report("ortho-apartments",
                       {"orthogonal apartments", "orthogonally inexact subsets", "orthocomplementary subsets"},
                       config_to_json(config));

    section(report, "certificates", [&] {
        SplitMix64 rng(derive_seed(config.seed, "ortho-apartments"));
        const auto ns = dims_or(config, {4, 5, 6, 7, 8});
        Check& pairs = report.check("certificates/rotated-pair-witness");
        Check& exact = report.check("certificates/whole-apartment-exact");
        Check& sampled = report.check("certificates/random-subset-witnesses");
        Check& singles = report.check("certificates/singletons-inexact");
        const std::size_t apartments = scaled(config, 100);
        for (std::size_t s = 0; s < apartments; ++s) {
            const std::uint32_t n = ns[s % ns.size()];
            const std::uint32_t k = config.k.value_or(2 + static_cast<std::uint32_t>((s / ns.size()) % 2));
            if (k >= n) continue;
            const Apartment a(random_orthogonal_frame(rng, n), k);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) {
                    const MemberSet t = member_union(select(a, {plus(i), plus(j)}), select(a, {minus(i), minus(j)}));
                    const auto cert = inexactness_certificate_ortho(a, t);
                    pairs.expect(witness_valid(a, cert, t, true) && common_members(a, *cert.witness) == t,
                                 [&] { return Json{{"frame", to_json(Matrix::from_rows(a.field(), n, a.frame()))},
                                                   {"k", k}, {"i", i}, {"j", j}}; });
                }
            exact.expect(inexactness_certificate_ortho(a, a.all_members()).exact);
            const IndexSet one = a.all_members()[rng.index(a.all_members().size())];
            const auto single = inexactness_certificate_ortho(a, {one});
            singles.expect(witness_valid(a, single, {one}, true));
            MemberSet subset;
            for (auto member : a.all_members())
                if (rng.uniform(0, 1) == 1) subset.push_back(member);
            const auto cert = inexactness_certificate_ortho(a, subset);
            sampled.expect(cert.exact || witness_valid(a, cert, subset, true),
                           [&] { return Json{{"k", k}, {"subset", members_json(subset)}}; });
        }
    });

    section(report, "compatible", [&] {
        // Members of an orthogonal apartment are pairwise compatible, and a
        // random k-space from outside breaks compatibility with some member.
        SplitMix64 rng(derive_seed(config.seed, "ortho-apartments/compatible"));
        Check& inside = report.check("compatible/members-pairwise-compatible");
        Check& outside = report.check("compatible/outsider-breaks-compatibility");
        for (std::size_t s = 0; s < scaled(config, 20); ++s) {
            const std::uint32_t n = 4 + static_cast<std::uint32_t>(s % 2);
            const Apartment a(random_orthogonal_frame(rng, n), 2);
            std::vector<Subspace> members;
            for (auto m : a.all_members()) members.push_back(a.member(m));
            inside.expect(is_compatible_set(members));
            const Subspace extra = random_subspace(rng, a.field(), n, 2);
            if (a.index_of(extra)) continue;
            members.push_back(extra);
            outside.expect(!is_compatible_set(members), [&] { return to_json(extra); });
        }
    });

    section(report, "counts", [&] {
        Check& counts = report.check("counts/closed-form-matches-scan");
        Check& orth = report.check("counts/type2-zero-iff-orthogonal");
        const std::uint32_t max_n = config.n.value_or(config.quick ? 7 : 10);
        for (std::uint32_t n = 2; n <= max_n; ++n)
            for (std::uint32_t k = 1; k <= 4 && k < n; ++k) {
                if (config.k && k != *config.k) continue;
                const Apartment a = Apartment::standard(FieldTag::gaussian(), n, k);
                const auto subsets = orthocomplementary_subsets(a);
                std::vector<Subspace> members;
                std::vector<Subspace> complements;
                for (auto m : a.all_members()) {
                    members.push_back(a.member(m));
                    complements.push_back(orthocomplement(members.back()));
                }
                const auto& all = a.all_members();
                for (std::size_t x = 0; x < all.size(); ++x)
                    for (std::size_t y = x + 1; y < all.size(); ++y) {
                        const ContainingCounts scan = count_containing(a, subsets, all[x], all[y]);
                        counts.expect(scan == containing_counts_closed_form(n, all[x], all[y]), [&] {
                            return Json{{"n", n}, {"X", index_set_to_string(all[x])}, {"Y", index_set_to_string(all[y])},
                                        {"type1", scan.type1}, {"type2", scan.type2}};
                        });
                        if (n > 2 * k) {
                            const bool orthogonal = complements[y].contains(members[x]);
                            orth.expect((scan.type2 == 0) == orthogonal, [&] {
                                return Json{{"n", n}, {"X", index_set_to_string(all[x])}, {"Y", index_set_to_string(all[y])}};
                            });
                        }
                    }
            }
    });
    return report;
}

}  // namespace qlogic::detail
