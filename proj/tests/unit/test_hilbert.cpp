#include <set>

#include "helpers.hpp"
#include "qlogic/hilbert.hpp"
#include "qlogic/random.hpp"

using namespace qlogic;

namespace {

const FieldTag kQi = FieldTag::gaussian();

Vector e(std::size_t n, std::size_t i) { return Vector::unit(kQi, n, i); }

Subspace coord(std::size_t n, std::uint32_t mask) {
    std::vector<Vector> vs;
    for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) vs.push_back(e(n, i));
    return Subspace::span(kQi, n, vs);
}

Matrix half(std::initializer_list<std::initializer_list<long>> rows) {
    return Scalar::from_rational(kQi, Rational(1, 2)) * Matrix::from_ints(kQi, rows);
}

}  // namespace

TEST_CASE("inner product and orthocomplement") {
    CHECK(inner(e(2, 0), e(2, 1)).is_zero());
    const Vector v(kQi, {Scalar::parse("1+i", kQi), Scalar::parse("0", kQi)});
    CHECK(inner(v, v) == Scalar::from_int(kQi, 2));
    CHECK(orthocomplement(Subspace::zero(kQi, 3)).is_full());
    CHECK(orthocomplement(Subspace::span(Vector::from_ints(kQi, {1, 1}))) ==
          Subspace::span(Vector::from_ints(kQi, {1, -1})));
    // <x, y> is conjugate-linear in y.
    const Vector w(kQi, {Scalar::parse("2", kQi), Scalar::parse("i", kQi)});
    CHECK(inner(w, Scalar::parse("i", kQi) * v) == Scalar::parse("-i", kQi) * inner(w, v));

    SplitMix64 rng(41);
    for (int s = 0; s < 100; ++s) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const Subspace x = random_subspace(rng, kQi, n);
        const Subspace xp = orthocomplement(x);
        CHECK(x.dim() + xp.dim() == n);
        for (const auto& a : x.basis_vectors())
            for (const auto& b : xp.basis_vectors()) CHECK(inner(a, b).is_zero());
    }
}

TEST_CASE("gram-schmidt") {
    SplitMix64 rng(43);
    for (int s = 0; s < 50; ++s) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        std::vector<Vector> vs;
        for (int t = 0; t < rng.uniform(1, 5); ++t) vs.push_back(random_vector(rng, kQi, n));
        const auto out = gram_schmidt(vs);
        CHECK(Subspace::span(kQi, n, out) == Subspace::span(kQi, n, vs));
        CHECK(out.size() == Subspace::span(kQi, n, vs).dim());
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = i + 1; j < out.size(); ++j) CHECK(inner(out[i], out[j]).is_zero());
    }
}

TEST_CASE("projections") {
    CHECK(projection_of(Subspace::full(kQi, 3)).matrix().is_identity());
    CHECK(projection_of(Subspace::zero(kQi, 3)).matrix().is_zero());
    CHECK(projection_of(Subspace::span(Vector::from_ints(kQi, {1, 1}))).matrix() == half({{1, 1}, {1, 1}}));

    SplitMix64 rng(47);
    for (int s = 0; s < 60; ++s) {
        const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
        const Subspace x = random_subspace(rng, kQi, n);
        const Matrix p = projection_of(x).matrix();
        CHECK(p * p == p);
        CHECK(p.conj_transpose() == p);
        // Image is X: P fixes X and kills X^perp.
        for (const auto& v : x.basis_vectors()) CHECK(p * v == v);
        for (const auto& v : orthocomplement(x).basis_vectors()) CHECK((p * v).is_zero());
    }
}

TEST_CASE("involutions") {
    const Matrix s = involution_of(projection_of(Subspace::span(e(2, 0))));
    CHECK(s == Matrix::from_ints(kQi, {{-1, 0}, {0, 1}}));
    CHECK(involution_of(projection_of(Subspace::full(kQi, 2))) == Matrix::from_ints(kQi, {{-1, 0}, {0, -1}}));
    CHECK_RAISES(involution_of(projection_of(Subspace::zero(kQi, 2))), InvalidArgument);
    CHECK((s * s).is_identity());
}

TEST_CASE("orthogonality and compatibility") {
    CHECK(is_orthogonal(Subspace::span(e(2, 0)), Subspace::span(e(2, 1))));
    CHECK(!is_orthogonal(Subspace::span(e(2, 0)), Subspace::span(e(2, 0) + e(2, 1))));

    const Subspace x = Subspace::span(e(2, 0) + e(2, 1));
    const Subspace y = Subspace::span(e(2, 0));
    const Matrix px = projection_of(x).matrix();
    const Matrix py = projection_of(y).matrix();
    CHECK(px * py == half({{1, 0}, {1, 0}}));
    CHECK(py * px == half({{1, 1}, {0, 0}}));
    CHECK(!is_compatible(x, y));
    CHECK(!compatible_by_decomposition(x, y));

    SplitMix64 rng(53);
    for (int s = 0; s < 60; ++s) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
        const Subspace a = random_subspace(rng, kQi, n);
        const Subspace b = sum(a, random_subspace(rng, kQi, n));
        CHECK(is_compatible(a, b));
        CHECK(is_compatible(a, intersect(orthocomplement(a), random_subspace(rng, kQi, n))));
        const auto [c, d] = random_compatible_pair(rng, n);
        CHECK(is_compatible(c, d));
        CHECK(compatible_by_projections(c, d));
    }
}

TEST_CASE("Z decomposition") {
    const Subspace x = coord(3, 0b011);
    const auto same = decompose(x, x);
    CHECK(same.z[0] == x);
    CHECK(same.z[1].is_zero());
    CHECK(same.z[2].is_zero());
    CHECK(same.z[3] == orthocomplement(x));

    const auto d = decompose(coord(3, 0b001), coord(3, 0b010));
    CHECK(d.z[0].dim() == 0);
    CHECK(d.z[1].dim() == 1);
    CHECK(d.z[2].dim() == 1);
    CHECK(d.z[3].dim() == 1);
}

TEST_CASE("double commutant sets of coordinate subspaces") {
    CHECK(double_commutant_set(coord(3, 0b001), coord(3, 0b110)).size() == 4);
    CHECK(double_commutant_set(coord(3, 0b001), coord(3, 0b011)).size() == 8);
    CHECK(double_commutant_set(coord(5, 0b00011), coord(5, 0b00110)).size() == 16);

    // For coordinate subspaces the pieces are index sets, so every sum of
    // pieces is a union of index sets.
    for (std::size_t n = 2; n <= 4; ++n) {
        const std::uint32_t full = (1u << n) - 1;
        for (std::uint32_t a = 1; a < full; ++a) {
            for (std::uint32_t b = 1; b < full; ++b) {
                if (a == b) continue;
                const std::uint32_t pieces[] = {a & b, b & ~a, a & ~b, full & ~(a | b)};
                std::set<Subspace> expected;
                for (std::uint32_t pick = 0; pick < 16; ++pick) {
                    std::uint32_t mask = 0;
                    for (int t = 0; t < 4; ++t)
                        if (pick >> t & 1) mask |= pieces[t];
                    expected.insert(coord(n, mask));
                }
                CHECK(double_commutant_set(coord(n, a), coord(n, b)) == expected);
            }
        }
    }
    CHECK_RAISES(double_commutant_set(coord(2, 0b01), coord(2, 0b01)), DegeneratePair);
    CHECK_RAISES(double_commutant_set(Subspace::span(e(2, 0)), Subspace::span(e(2, 0) + e(2, 1))), NotCompatible);
}

TEST_CASE("double commutant restricted to a Grassmannian") {
    // k = 3, n = 10: always {X, Y}.
    const Subspace x3 = coord(10, 0b0000000111);
    const Subspace y3 = coord(10, 0b0000001011);
    CHECK(cc_grassmann_members(x3, y3, 3) == std::set<Subspace>{x3, y3});
    // k = 2, n = 7, dim(X∩Y) = 1: the third member is (X∩Y^perp) + (Y∩X^perp).
    const Subspace x = coord(7, 0b0000011);
    const Subspace y = coord(7, 0b0000101);
    CHECK(cc_grassmann_members(x, y, 2) == std::set<Subspace>{x, y, coord(7, 0b0000110)});
    // dim(X∩Y) = 0: no third member of dimension 2 among the 16 sums.
    const Subspace z = coord(7, 0b0001100);
    CHECK(cc_grassmann_members(x, z, 2) == std::set<Subspace>{x, z});
    CHECK_RAISES(cc_grassmann_members(x, coord(7, 0b111), 2), InvalidArgument);
}

TEST_CASE("compatible sets and orthogonal frames") {
    const std::vector<Subspace> members{coord(3, 0b001), coord(3, 0b110)};
    CHECK(is_compatible_set(members));
    const std::vector<Subspace> bad{Subspace::span(e(2, 0) + e(2, 1)), Subspace::span(e(2, 0))};
    CHECK(!is_compatible_set(bad));
    CHECK(is_compatible_set(std::span<const Subspace>()));
    CHECK_RAISES(extend_to_orthogonal_frame(bad, 2), NotCompatibleSet);

    auto valid = [](const std::vector<Vector>& frame, std::span<const Subspace> family, std::size_t n) {
        bool ok = frame.size() == n && Subspace::span(kQi, n, frame).is_full();
        for (std::size_t i = 0; i < frame.size(); ++i)
            for (std::size_t j = i + 1; j < frame.size(); ++j) ok = ok && inner(frame[i], frame[j]).is_zero();
        for (const auto& x : family) {
            std::vector<Vector> inside;
            for (const auto& v : frame)
                if (x.contains(v)) inside.push_back(v);
            ok = ok && Subspace::span(kQi, n, inside) == x;
        }
        return ok;
    };
    CHECK(valid(extend_to_orthogonal_frame(members, 3), members, 3));
    const auto empty = extend_to_orthogonal_frame({}, 4);
    CHECK(valid(empty, {}, 4));

    SplitMix64 rng(59);
    for (int s = 0; s < 20; ++s) {
        const auto frame = random_orthogonal_frame(rng, 6);
        std::vector<Subspace> family;
        for (int t = 0; t < 5; ++t) family.push_back(frame_span(frame, rng.uniform(0, 63)));
        CHECK(valid(extend_to_orthogonal_frame(family, 6), family, 6));
    }
}

TEST_CASE("logic axioms hold on random samples") {
    SplitMix64 rng(61);
    AxiomSample sample;
    for (int s = 0; s < 40; ++s) {
        const auto n = static_cast<std::size_t>(rng.uniform(2, 5));
        const Subspace x = random_subspace(rng, kQi, n);
        const Subspace y = random_subspace(rng, kQi, n);
        sample.singles.push_back(x);
        sample.pairs.emplace_back(x, y);
        sample.nested_pairs.emplace_back(x, sum(x, y));
    }
    const auto results = verify_logic_axioms(sample);
    CHECK(results.size() == 6);
    for (const auto& r : results) {
        CHECK_MESSAGE(r.passed(), r.axiom);
        CHECK(r.samples > 0);
    }
    // The lattice is not distributive: three lines in a plane.
    const Subspace a = Subspace::span(e(2, 0));
    const Subspace b = Subspace::span(e(2, 1));
    const Subspace c = Subspace::span(e(2, 0) + e(2, 1));
    CHECK(intersect(c, sum(a, b)) != sum(intersect(c, a), intersect(c, b)));
}
