#include <bit>

#include "qlogic/hilbert.hpp"
#include "qlogic/random.hpp"
#include "suite_support.hpp"

namespace qlogic::detail {

namespace {

const FieldTag kQi = FieldTag::gaussian();

std::uint64_t random_mask(SplitMix64& rng, std::size_t n) {
    return static_cast<std::uint64_t>(rng.uniform(0, static_cast<std::int64_t>((std::uint64_t{1} << n) - 1)));
}

/// A random subspace of `x`: random combinations of its basis.
Subspace random_subspace_of(SplitMix64& rng, const Subspace& x) {
    if (x.is_zero()) return x;
    const auto d = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(x.dim())));
    const Matrix coeffs = random_matrix(rng, x.field(), d, x.dim());
    return Subspace::row_space(coeffs * x.basis());
}

/// x is the span of the frame vectors it contains.
bool spanned_by_frame(const Subspace& x, std::span<const Vector> frame) {
    std::vector<Vector> inside;
    for (const auto& v : frame)
        if (x.contains(v)) inside.push_back(v);
    return Subspace::span(x.field(), x.ambient_dim(), inside) == x;
}

}  // namespace

SuiteReport suite_logic(const SuiteConfig& config) {
    SuiteReport report("logic", {"orthocomplementation axioms", "orthomodular law", "De Morgan laws"},
                       config_to_json(config));
    const std::size_t samples = scaled(config, 500);
    for (auto n : dims_or(config, {2, 3, 4, 5, 6})) {
        const std::string tag = "n=" + std::to_string(n);
        section(report, tag, [&] {
            SplitMix64 rng(derive_seed(config.seed, "logic", n));
            AxiomSample sample;
            for (std::size_t s = 0; s < samples; ++s) {
                sample.singles.push_back(random_subspace(rng, kQi, n));
                sample.pairs.emplace_back(random_subspace(rng, kQi, n), random_subspace(rng, kQi, n));
                const Subspace x = random_subspace(rng, kQi, n);
                sample.nested_pairs.emplace_back(x, sum(x, random_subspace(rng, kQi, n)));
            }
            for (const auto& result : verify_logic_axioms(sample)) {
                Check& c = report.check(tag + "/" + result.axiom);
                for (std::size_t i = result.failures.size(); i < result.samples; ++i) c.pass();
                for (const auto& w : result.failures) {
                    Json witness = Json::array();
                    for (const auto& x : w) witness.push_back(to_json(x));
                    c.fail(witness);
                }
            }

            Check& modular = report.check(tag + "/modular-law");
            for (const auto& [x, z] : sample.nested_pairs) {
                const Subspace& y = sample.singles[modular.samples() % sample.singles.size()];
                modular.expect(sum(x, intersect(y, z)) == intersect(sum(x, y), z), [&] { return pair_json(x, z); });
            }

            Check& positive = report.check(tag + "/positive-definite");
            Check& symmetric = report.check(tag + "/hermitian-symmetry");
            for (std::size_t s = 0; s < samples; ++s) {
                const Vector x = random_vector(rng, kQi, n);
                const Vector y = random_vector(rng, kQi, n);
                if (!x.is_zero()) {
                    const Scalar xx = inner(x, x);
                    positive.expect(xx.real_value() && xx.real_value()->sign() > 0, [&] { return to_json(x); });
                }
                symmetric.expect(inner(x, y).conj() == inner(y, x),
                                 [&] { return Json{{"x", to_json(x)}, {"y", to_json(y)}}; });
            }
        });
    }
    return report;
}

SuiteReport suite_compat(const SuiteConfig& config) {
    SuiteReport report("compat",
                       {"compatibility via orthogonal decomposition", "compatibility via commuting projections",
                        "compatible families lie in an orthogonal apartment"},
                       config_to_json(config));
    const std::size_t pairs = scaled(config, 1000);
    for (auto n : dims_or(config, {3, 4, 5, 6})) {
        const std::string tag = "n=" + std::to_string(n);
        section(report, tag, [&] {
            SplitMix64 rng(derive_seed(config.seed, "compat", n));
            Check& agree = report.check(tag + "/criteria-agree");
            Check& complement = report.check(tag + "/compatible-with-complement");
            Check& orth = report.check(tag + "/orthogonal-iff-projection-product-zero");
            Check& meet = report.check(tag + "/meet-projection-is-product");
            Check& pieces = report.check(tag + "/decomposition-reassembles");
            std::size_t compatible_count = 0;
            for (std::size_t s = 0; s < pairs; ++s) {
                Subspace x = random_subspace(rng, kQi, n);
                Subspace y = Subspace::zero(kQi, n);
                switch (s % 4) {
                    case 0: y = random_subspace(rng, kQi, n); break;
                    case 1: std::tie(x, y) = random_compatible_pair(rng, n); break;
                    case 2: y = sum(x, random_subspace(rng, kQi, n)); break;
                    default: y = sum(random_subspace_of(rng, x), random_subspace_of(rng, orthocomplement(x))); break;
                }
                const bool by_decomposition = compatible_by_decomposition(x, y);
                const bool by_projections = compatible_by_projections(x, y);
                agree.expect(by_decomposition == by_projections, [&] { return pair_json(x, y); });
                complement.expect(by_projections == compatible_by_projections(x, orthocomplement(y)),
                                  [&] { return pair_json(x, y); });
                const Matrix px = projection_of(x).matrix();
                const Matrix py = projection_of(y).matrix();
                orth.expect(is_orthogonal(x, y) == (px * py).is_zero(), [&] { return pair_json(x, y); });
                if (by_projections) {
                    ++compatible_count;
                    meet.expect(projection_of(intersect(x, y)).matrix() == px * py, [&] { return pair_json(x, y); });
                    const CompatDecomposition d = decompose(x, y);
                    pieces.expect(d.total_dim() == n && x == sum(d.z[0], d.z[2]) && y == sum(d.z[0], d.z[1]),
                                  [&] { return pair_json(x, y); });
                }
            }
            agree.details()["compatible"] = compatible_count;
            agree.details()["incompatible"] = pairs - compatible_count;
        });
    }

    section(report, "frame", [&] {
        const std::size_t families = scaled(config, 200);
        const auto ns = dims_or(config, {3, 4, 5, 6});
        SplitMix64 rng(derive_seed(config.seed, "compat/frame"));
        Check& built = report.check("frame/orthogonal-and-spanning");
        for (std::size_t s = 0; s < families; ++s) {
            const std::size_t n = ns[s % ns.size()];
            const auto source = random_orthogonal_frame(rng, n);
            std::vector<Subspace> family;
            const auto count = rng.uniform(1, 5);
            for (std::int64_t m = 0; m < count; ++m) family.push_back(frame_span(source, random_mask(rng, n)));
            // Perturb: drop one member, then add a fresh one from the same frame.
            if (rng.uniform(0, 1) == 1 && family.size() > 1) family.erase(family.begin() + static_cast<std::ptrdiff_t>(rng.index(family.size())));
            if (rng.uniform(0, 1) == 1) family.push_back(frame_span(source, random_mask(rng, n)));

            const auto frame = extend_to_orthogonal_frame(family, n);
            bool ok = frame.size() == n;
            for (std::size_t i = 0; ok && i < n; ++i)
                for (std::size_t j = i + 1; ok && j < n; ++j) ok = inner(frame[i], frame[j]).is_zero();
            for (const auto& x : family) ok = ok && spanned_by_frame(x, frame);
            built.expect(ok, [&] {
                Json members = Json::array();
                for (const auto& x : family) members.push_back(to_json(x));
                return Json{{"family", members}};
            });
        }

        Check& rejected = report.check("frame/incompatible-family-rejected");
        for (auto n : ns) {
            const Vector e0 = Vector::unit(kQi, n, 0);
            const std::vector<Subspace> family{Subspace::span(e0), Subspace::span(e0 + Vector::unit(kQi, n, 1))};
            bool threw = false;
            try {
                extend_to_orthogonal_frame(family, n);
            } catch (const Error& e) {
                threw = e.kind() == ErrorKind::NotCompatibleSet;
            }
            rejected.expect(threw, [&] { return Json{{"n", n}}; });
        }
    });
    return report;
}

SuiteReport suite_cc(const SuiteConfig& config) {
    SuiteReport report("cc",
                       {"double commutant of a compatible pair", "size of {X,Y}^cc",
                        "{X,Y}^cc restricted to a Grassmannian"},
                       config_to_json(config));
    const std::size_t samples = scaled(config, 200);

    for (auto n : dims_or(config, {3, 4, 5, 6})) {
        const std::string tag = "n=" + std::to_string(n);
        section(report, tag, [&] {
            SplitMix64 rng(derive_seed(config.seed, "cc", n));
            const std::uint64_t full = (std::uint64_t{1} << n) - 1;
            Check& size_law = report.check(tag + "/size-is-power-of-two");
            Check& line_or_hyperplane = report.check(tag + "/line-or-hyperplane-gives-4-or-8");
            Check* generic = n >= 4 ? &report.check(tag + "/middle-dimension-gives-16") : nullptr;
            Check& definition = report.check(tag + "/members-commute-with-common-commutant");

            for (std::size_t s = 0; s < samples; ++s) {
                const auto frame = random_orthogonal_frame(rng, n);
                const std::uint64_t single = std::uint64_t{1} << rng.index(n);
                const std::uint64_t a = rng.uniform(0, 1) ? single : full & ~single;
                std::uint64_t b = 0;
                while (b == 0 || b == full || b == a) b = random_mask(rng, n);
                const Subspace x = frame_span(frame, a);
                const Subspace y = frame_span(frame, b);
                const auto cc = double_commutant_set(x, y);
                const CompatDecomposition d = decompose(x, y);
                size_law.expect(cc.size() == (std::size_t{1} << d.nonzero_count()), [&] { return pair_json(x, y); });
                const bool is_complement = y == orthocomplement(x);
                line_or_hyperplane.expect((cc.size() == 4 || cc.size() == 8) && ((cc.size() == 4) == is_complement),
                                          [&] { return Json{{"pair", pair_json(x, y)}, {"size", cc.size()}}; });

                // W built inside the Z-pieces commutes with X and Y, so every
                // member of {X,Y}^cc must be compatible with it.
                Subspace w = Subspace::zero(kQi, n);
                for (const auto& z : d.z) w = sum(w, random_subspace_of(rng, z));
                for (const auto& member : cc)
                    definition.expect(is_compatible(member, w), [&] { return pair_json(member, w); });

                if (n >= 4) {
                    // 2 <= |a| <= n-2; b meets a and its complement and misses both.
                    std::vector<std::size_t> order(n);
                    for (std::size_t i = 0; i < n; ++i) order[i] = i;
                    for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[rng.index(i + 1)]);
                    const auto size_a = static_cast<std::size_t>(rng.uniform(2, static_cast<std::int64_t>(n) - 2));
                    std::uint64_t mid = 0;
                    for (std::size_t i = 0; i < size_a; ++i) mid |= std::uint64_t{1} << order[i];
                    const std::uint64_t other = (std::uint64_t{1} << order[0]) | (std::uint64_t{1} << order[size_a]);
                    const Subspace xm = frame_span(frame, mid);
                    const Subspace ym = frame_span(frame, other);
                    const auto big = double_commutant_set(xm, ym);
                    generic->expect(big.size() == 16, [&] { return Json{{"pair", pair_json(xm, ym)}, {"size", big.size()}}; });
                }
            }
        });
    }

    std::vector<std::uint32_t> ks = {2, 3, 4};
    if (config.k) ks = {*config.k};
    else if (config.quick) ks = {2, 3};
    for (auto k : ks) {
        const std::uint32_t n = 3 * k + 1;
        const std::string tag = "k=" + std::to_string(k) + ",n=" + std::to_string(n);
        section(report, tag, [&] {
            SplitMix64 rng(derive_seed(config.seed, "cc/grassmann", k));
            Check& dichotomy = report.check(tag + "/grassmann-members");
            std::size_t three = 0;
            std::vector<Vector> frame;
            for (std::size_t s = 0; s < samples; ++s) {
                // A fresh frame every 20 pairs keeps the coefficient size in check.
                if (s % 20 == 0) frame = random_orthogonal_frame(rng, n);
                std::vector<std::size_t> order(n);
                for (std::size_t i = 0; i < n; ++i) order[i] = i;
                for (std::size_t i = n; i-- > 1;) std::swap(order[i], order[rng.index(i + 1)]);
                const auto m = static_cast<std::size_t>(rng.uniform(0, k - 1));
                std::uint64_t a = 0;
                std::uint64_t b = 0;
                for (std::size_t i = 0; i < k; ++i) a |= std::uint64_t{1} << order[i];
                for (std::size_t i = 0; i < m; ++i) b |= std::uint64_t{1} << order[i];
                for (std::size_t i = 0; i < k - m; ++i) b |= std::uint64_t{1} << order[k + i];

                const Subspace x = frame_span(frame, a);
                const Subspace y = frame_span(frame, b);
                std::set<Subspace> expected{x, y};
                if (2 * m == k) expected.insert(frame_span(frame, a ^ b));
                const auto got = cc_grassmann_members(x, y, k);
                three += got.size() == 3 ? 1 : 0;
                dichotomy.expect(got == expected, [&] {
                    return Json{{"pair", pair_json(x, y)}, {"meet_dim", m}, {"members", got.size()}};
                });
            }
            dichotomy.details()["three_member_cases"] = three;
        });
    }
    return report;
}

}  // namespace qlogic::detail
