#include "qlogic/hilbert.hpp"
#include "qlogic/random.hpp"
#include "qlogic/transforms.hpp"
#include "suite_support.hpp"

namespace qlogic::detail {

namespace {

const FieldTag kQi = FieldTag::gaussian();

struct ScaledUnitary {
    SemilinearMap map;
    Rational scale;  // c with A*A = c·Id, known by construction
};

Scalar gaussian(long re, long im) { return GaussianRational(Rational(re), Rational(im)); }

/// A = r · D · P · G_2 · G_1 with G_t a real rotation-like block
/// [[a, b], [-b, a]] on two coordinates and a + bi elsewhere on the diagonal
/// (so G_t* G_t = (a^2 + b^2) Id), P a permutation, D unit phases and r a
/// nonzero integer. Then A*A = r^2 · prod(a^2 + b^2) · Id.
ScaledUnitary random_scaled_unitary(SplitMix64& rng, std::size_t n, Twist sigma) {
    Matrix a = Matrix::identity(kQi, n);
    Rational scale(1);
    for (int round = 0; round < 2 && n >= 2; ++round) {
        const std::size_t i = rng.index(n);
        std::size_t j = rng.index(n - 1);
        if (j >= i) ++j;
        long x = 0;
        long y = 0;
        while (x == 0 && y == 0) {
            x = rng.uniform(-kEntryBound, kEntryBound);
            y = rng.uniform(-kEntryBound, kEntryBound);
        }
        Matrix g(kQi, n, n);
        for (std::size_t d = 0; d < n; ++d) g(d, d) = gaussian(x, y);
        g(i, i) = gaussian(x, 0);
        g(j, j) = gaussian(x, 0);
        g(i, j) = gaussian(y, 0);
        g(j, i) = gaussian(-y, 0);
        a = g * a;
        scale *= Rational(x * x + y * y);
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    for (std::size_t i = n; i-- > 1;) std::swap(perm[i], perm[rng.index(i + 1)]);
    Matrix dp(kQi, n, n);
    const Scalar phases[] = {gaussian(1, 0), gaussian(0, 1), gaussian(-1, 0), gaussian(0, -1)};
    for (std::size_t i = 0; i < n; ++i) dp(i, perm[i]) = phases[rng.index(4)];
    long r = 0;
    while (r == 0) r = rng.uniform(-3, 3);
    scale *= Rational(r * r);
    return {SemilinearMap(gaussian(r, 0) * (dp * a), sigma), scale};
}

Twist random_twist(SplitMix64& rng) { return rng.uniform(0, 1) ? Twist::Conjugation : Twist::Identity; }

SemilinearMap inverse_of(const SemilinearMap& g) {
    // x -> A sigma(x) is undone by y -> sigma(A^-1) sigma(y).
    const Matrix inv = *inverse(g.matrix());
    return SemilinearMap(g.sigma() == Twist::Conjugation ? inv.conj() : inv, g.sigma());
}

Subspace random_proper_subspace(SplitMix64& rng, std::size_t n) {
    return random_subspace(rng, kQi, n, static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(n) - 1)));
}

/// Random pairs mixed with orthogonal, nested and adjacent ones.
std::vector<std::pair<Subspace, Subspace>> relation_pairs(SplitMix64& rng, std::size_t n, std::size_t count) {
    std::vector<std::pair<Subspace, Subspace>> out;
    for (std::size_t s = 0; s < count; ++s) {
        const Subspace x = random_proper_subspace(rng, n);
        switch (s % 4) {
            case 0: out.emplace_back(x, random_subspace(rng, kQi, n)); break;
            case 1: out.emplace_back(x, random_subspace(rng, kQi, n, 1) == x ? x : intersect(orthocomplement(x), sum(orthocomplement(x), random_subspace(rng, kQi, n)))); break;
            case 2: out.emplace_back(x, sum(x, random_subspace(rng, kQi, n, 1))); break;
            default: {
                auto rows = x.basis_vectors();
                rows.back() = random_vector(rng, kQi, n);
                out.emplace_back(x, Subspace::span(kQi, n, rows));
                break;
            }
        }
    }
    return out;
}

Json map_json(const SemilinearMap& g) {
    return Json{{"matrix", to_json(g.matrix())}, {"sigma", g.sigma() == Twist::Conjugation ? "conj" : "id"}};
}

}  // namespace

SuiteReport suite_transforms(const SuiteConfig& config) {
    SuiteReport report("transforms",
                       {"lattice isomorphisms induced by semilinear maps", "unitary and anti-unitary operators",
                        "orthogonality preservers are scalar multiples of (anti-)unitaries",
                        "dual action of the inverse adjoint", "orthocomplement flips on complement-closed families",
                        "factorisation of compatibility preservers"},
                       config_to_json(config));
    const auto ns = dims_or(config, {2, 3, 4, 5});

    section(report, "apply", [&] {
        SplitMix64 rng(derive_seed(config.seed, "transforms/apply"));
        Check& lattice = report.check("apply/meet-and-join-commute");
        for (std::size_t s = 0; s < scaled(config, 300); ++s) {
            const std::size_t n = ns[s % ns.size()];
            const SemilinearMap l(random_invertible(rng, kQi, n), random_twist(rng));
            const Subspace x = random_subspace(rng, kQi, n);
            const Subspace y = random_subspace(rng, kQi, n);
            lattice.expect(apply(l, intersect(x, y)) == intersect(apply(l, x), apply(l, y)) &&
                               apply(l, sum(x, y)) == sum(apply(l, x), apply(l, y)) && apply(l, x).dim() == x.dim(),
                           [&] { return Json{{"map", map_json(l)}, {"pair", pair_json(x, y)}}; });
        }
        Check& conj = report.check("apply/conjugation-only");
        const SemilinearMap c(Matrix::identity(kQi, 2), Twist::Conjugation);
        const Subspace moved = Subspace::span(Vector(kQi, {gaussian(1, 0), gaussian(0, 1)}));
        conj.expect(apply(c, moved) == Subspace::span(Vector(kQi, {gaussian(1, 0), gaussian(0, -1)})));
        for (std::size_t s = 0; s < scaled(config, 50); ++s) {
            const Matrix real = random_matrix(rng, FieldTag::rationals(), 2, 3);
            std::vector<Scalar> entries;
            for (const auto& e : real.entries()) entries.push_back(Scalar::from_rational(kQi, *e.as_rational()));
            const Subspace x = Subspace::row_space(Matrix(kQi, 2, 3, entries));
            conj.expect(apply(SemilinearMap(Matrix::identity(kQi, 3), Twist::Conjugation), x) == x,
                        [&] { return to_json(x); });
        }
    });

    section(report, "unitary", [&] {
        Check& kinds = report.check("unitary/classification");
        const Matrix perm = Matrix::from_ints(kQi, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}});
        kinds.expect(is_unitary(SemilinearMap(perm)) && !is_antiunitary(SemilinearMap(perm)));
        const SemilinearMap cb(Matrix::identity(kQi, 3), Twist::Conjugation);
        kinds.expect(is_antiunitary(cb) && !is_unitary(cb));
        const SemilinearMap d(Matrix::from_ints(kQi, {{2, 0}, {0, 1}}));
        kinds.expect(!is_unitary(d) && !is_antiunitary(d));

        SplitMix64 rng(derive_seed(config.seed, "transforms/unitary"));
        Check& certified = report.check("unitary/scaled-unitaries-certified");
        Check& rejected = report.check("unitary/non-examples-rejected-with-witness");
        Check& preserved = report.check("unitary/certified-maps-preserve-orthogonality");
        std::size_t low_dimension = 0;
        std::size_t conjugation = 0;
        for (std::size_t s = 0; s < scaled(config, 100); ++s) {
            const std::size_t n = ns[s % ns.size()];
            const auto u = random_scaled_unitary(rng, n, random_twist(rng));
            conjugation += u.map.sigma() == Twist::Conjugation ? 1 : 0;
            const auto verdict = unitary_up_to_scalar(u.map);
            low_dimension += verdict.low_dimension ? 1 : 0;
            certified.expect(verdict.scale && *verdict.scale == u.scale,
                             [&] { return Json{{"map", map_json(u.map)}, {"expected_scale", u.scale.to_string()}}; });
            const auto pairs = relation_pairs(rng, n, 8);
            std::vector<Subspace> domain;
            for (const auto& [x, y] : pairs) {
                domain.push_back(x);
                domain.push_back(y);
            }
            preserved.expect(preserves(Relation::Orthogonality, induced_map(u.map, domain), pairs).both_directions(),
                             [&] { return map_json(u.map); });

            // Shear a scaled unitary: A*A picks up an off-diagonal term.
            Matrix shear = Matrix::identity(kQi, n);
            const std::size_t i = rng.index(n);
            std::size_t j = rng.index(n - 1);
            if (j >= i) ++j;
            Scalar t;
            do t = random_scalar(rng, kQi); while (t.is_zero());
            shear(i, j) = t;
            const SemilinearMap bad(u.map.matrix() * shear, u.map.sigma());
            const auto no = unitary_up_to_scalar(bad);
            bool ok = !no.scale && no.witness.has_value();
            if (ok) {
                const auto& [x, y] = *no.witness;
                const Subspace sx = Subspace::span(x);
                const Subspace sy = Subspace::span(y);
                ok = inner(x, y).is_zero() && !inner(bad.apply(x), bad.apply(y)).is_zero() && is_orthogonal(sx, sy) &&
                     !is_orthogonal(apply(bad, sx), apply(bad, sy));
            }
            rejected.expect(ok, [&] { return map_json(bad); });
        }
        certified.details()["two_dimensional_cases_flagged"] = low_dimension;
        certified.details()["conjugation_cases"] = conjugation;
    });

    section(report, "dual", [&] {
        SplitMix64 rng(derive_seed(config.seed, "transforms/dual"));
        Check& dual = report.check("dual/inverse-adjoint-action");
        for (auto n : ns) {
            for (std::size_t s = 0; s < scaled(config, 200); ++s) {
                const Matrix a = random_invertible(rng, kQi, n);
                const Subspace x = random_subspace(rng, kQi, n);
                const auto r = dual_action_check(a, std::span(&x, 1));
                dual.expect(r.passed(), [&] { return Json{{"A", to_json(a)}, {"X", to_json(x)}}; });
            }
        }
        const Matrix d = Matrix::from_ints(kQi, {{2, 0}, {0, 1}});
        const Subspace x = Subspace::span(Vector::from_ints(kQi, {1, 1}));
        dual.expect(orthocomplement(apply(SemilinearMap(d), orthocomplement(x))) ==
                    Subspace::span(Vector::from_ints(kQi, {1, 2})));
    });

    section(report, "pi", [&] {
        SplitMix64 rng(derive_seed(config.seed, "transforms/pi"));
        const std::size_t n = config.n.value_or(3);
        const Subspace x = random_proper_subspace(rng, n);
        const std::vector<Subspace> flip{x, orthocomplement(x)};
        std::vector<std::pair<Subspace, Subspace>> pairs;
        std::vector<Subspace> domain = flip;
        for (std::size_t s = 0; s < scaled(config, 300); ++s) {
            Subspace y = random_subspace(rng, kQi, n);
            if (s % 3 == 1) y = sum(intersect(x, random_subspace(rng, kQi, n)), intersect(orthocomplement(x), random_subspace(rng, kQi, n)));
            if (s % 3 == 2) y = Subspace::row_space(random_matrix(rng, kQi, 1, x.dim()) * x.basis());
            domain.push_back(y);
            if (s % 3 == 2) pairs.emplace_back(y, x);
            else pairs.emplace_back(flip[s % 2], y);
        }
        const SubspaceMap pi = pi_transform(flip, domain);
        const auto compat = preserves(Relation::Compatibility, pi, pairs);
        Check& c = report.check("pi/single-flip-preserves-compatibility");
        for (std::size_t i = 0; i < compat.pairs; ++i) c.pass();
        for (const auto& [a, b] : compat.forward_failures) c.fail(pair_json(a, b));
        for (const auto& [a, b] : compat.backward_failures) c.fail(pair_json(a, b));
        const auto incl = preserves(Relation::Inclusion, pi, pairs);
        Check& broken = report.check("pi/single-flip-breaks-inclusion");
        broken.expect(!incl.forward_failures.empty() || !incl.backward_failures.empty());
        broken.details()["inclusion_failures"] = incl.forward_failures.size() + incl.backward_failures.size();

        Check& identity = report.check("pi/empty-family-is-identity");
        const SubspaceMap id = pi_transform({}, domain);
        for (const auto& y : domain) identity.expect(id.at(y) == y);

        Check& closed = report.check("pi/requires-complement-closed");
        bool threw = false;
        try {
            pi_transform(std::span(&x, 1), domain);
        } catch (const Error& e) {
            threw = e.kind() == ErrorKind::NotComplementClosed;
        }
        closed.expect(threw);

        // Global orthocomplementation on a complement-closed family.
        std::vector<Subspace> family;
        for (std::size_t s = 0; s < 6; ++s) {
            const Subspace y = random_proper_subspace(rng, n);
            family.push_back(y);
            family.push_back(orthocomplement(y));
        }
        family.push_back(x);
        family.push_back(sum(x, random_subspace(rng, kQi, n, 1)));
        family.push_back(orthocomplement(family.back()));
        family.push_back(orthocomplement(x));
        const SubspaceMap global = pi_transform(family, family);
        std::vector<std::pair<Subspace, Subspace>> all_pairs;
        for (const auto& a : family)
            for (const auto& b : family) all_pairs.emplace_back(a, b);
        Check& g = report.check("pi/global-flip-preserves-compatibility");
        g.expect(preserves(Relation::Compatibility, global, all_pairs).both_directions());
        g.details()["inclusion_failures"] = preserves(Relation::Inclusion, global, all_pairs).forward_failures.size();
    });

    section(report, "swap", [&] {
        // Swapping two non-orthogonal lines in Q(i)^3 breaks orthogonality.
        const Vector e1 = Vector::unit(kQi, 3, 0);
        const Vector e2 = Vector::unit(kQi, 3, 1);
        const Vector e3 = Vector::unit(kQi, 3, 2);
        const std::vector<Subspace> lines{Subspace::span(e1), Subspace::span(e1 + e2), Subspace::span(e2), Subspace::span(e3)};
        SubspaceMap f;
        for (const auto& l : lines) f.set(l, l);
        f.set(lines[0], lines[1]);
        f.set(lines[1], lines[0]);
        std::vector<std::pair<Subspace, Subspace>> pairs;
        for (const auto& a : lines)
            for (const auto& b : lines) pairs.emplace_back(a, b);
        const auto r = preserves(Relation::Orthogonality, f, pairs);
        Check& c = report.check("swap/non-orthogonal-line-swap-detected");
        c.expect(!r.forward_failures.empty(), [] { return Json(); });
        if (!r.forward_failures.empty()) c.details()["witness"] = pair_json(r.forward_failures[0].first, r.forward_failures[0].second);

        // In Q(i)^2 any permutation of the pairs {P, P^perp} preserves
        // orthogonality and compatibility among lines.
        SplitMix64 rng(derive_seed(config.seed, "transforms/pair-swap"));
        Check& pair_swap = report.check("swap/two-dimensional-pair-permutation");
        for (std::size_t s = 0; s < scaled(config, 20); ++s) {
            std::vector<Subspace> family;
            while (family.size() < 8) {
                const Subspace l = random_subspace(rng, kQi, 2, 1);
                if (std::find(family.begin(), family.end(), l) != family.end()) continue;
                if (std::find(family.begin(), family.end(), orthocomplement(l)) != family.end()) continue;
                family.push_back(l);
                family.push_back(orthocomplement(l));
            }
            SubspaceMap g;
            for (const auto& l : family) g.set(l, l);
            g.set(family[0], family[2]);
            g.set(family[1], family[3]);
            g.set(family[2], family[0]);
            g.set(family[3], family[1]);
            std::vector<std::pair<Subspace, Subspace>> all;
            for (const auto& a : family)
                for (const auto& b : family) all.emplace_back(a, b);
            pair_swap.expect(g.is_injective() && preserves(Relation::Orthogonality, g, all).both_directions() &&
                             preserves(Relation::Compatibility, g, all).both_directions());
        }
    });

    section(report, "factor", [&] {
        SplitMix64 rng(derive_seed(config.seed, "transforms/factor"));
        Check& shape = report.check("factor/flip-composed-with-automorphism");
        Check& plain = report.check("factor/automorphism-all-as-is");
        Check& all_flip = report.check("factor/complemented-automorphism-all-flipped");
        Check& relations = report.check("factor/scaled-unitary-preserves-relations");
        std::size_t flipped = 0;
        for (std::size_t s = 0; s < scaled(config, 100); ++s) {
            const std::size_t n = ns[s % ns.size()];
            const auto g = random_scaled_unitary(rng, n, random_twist(rng)).map;
            const SemilinearMap g_inv = inverse_of(g);

            std::vector<Subspace> family;
            for (int t = 0; t < 2; ++t) {
                const Subspace y = random_proper_subspace(rng, n);
                family.push_back(y);
                family.push_back(orthocomplement(y));
            }
            std::vector<Subspace> domain;
            for (const auto& y : family) domain.push_back(apply(g_inv, y));
            for (int t = 0; t < 4; ++t) domain.push_back(random_subspace(rng, kQi, n));

            const SubspaceMap induced = induced_map(g, domain);
            std::vector<Subspace> images;
            for (const auto& x : domain) images.push_back(induced.at(x));
            const SubspaceMap f = compose(pi_transform(family, images), induced);
            const auto r = factor_flip_check(f, g);
            bool expected = r.passed();
            for (const auto& [x, v] : r.verdicts) {
                const bool inside = std::find(family.begin(), family.end(), apply(g, x)) != family.end();
                expected = expected && v == (inside ? FlipVerdict::Flipped : FlipVerdict::AsIs);
            }
            flipped += r.flipped;
            shape.expect(expected, [&] { return map_json(g); });

            plain.expect(factor_flip_check(induced, g).as_is == induced.size());
            SubspaceMap complemented;
            for (const auto& x : domain) complemented.set(x, orthocomplement(induced.at(x)));
            all_flip.expect(factor_flip_check(complemented, g).flipped == complemented.size());

            const auto pairs = relation_pairs(rng, n, 8);
            std::vector<Subspace> pair_domain;
            for (const auto& [x, y] : pairs) {
                pair_domain.push_back(x);
                pair_domain.push_back(y);
            }
            const SubspaceMap h = induced_map(g, pair_domain);
            bool all_kept = true;
            for (auto rel : {Relation::Orthogonality, Relation::Compatibility, Relation::Inclusion, Relation::Adjacency})
                all_kept = all_kept && preserves(rel, h, pairs).both_directions();
            relations.expect(all_kept, [&] { return map_json(g); });
        }
        shape.details()["flipped_verdicts"] = flipped;
    });
    return report;
}

}  // namespace qlogic::detail
