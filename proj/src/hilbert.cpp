#include "qlogic/hilbert.hpp"

namespace qlogic {

namespace {

void require_hermitian(FieldTag field) {
    if (field.is_finite())
        throw Error(ErrorKind::FieldMismatch, "Hermitian operations need Q or Q(i), got " + field.to_string());
}

void require_same_space(const Subspace& x, const Subspace& y) {
    if (x.ambient_dim() != y.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "subspaces of different spaces");
    if (!(x.field() == y.field())) throw Error(ErrorKind::FieldMismatch, "subspaces over different fields");
}

/// Scales v by a nonzero rational so that all coordinates become Gaussian
/// integers with no common rational factor.
Vector make_primitive(const Vector& v) {
    mpz_class lcm = 1;
    auto each_part = [&](auto&& fn) {
        for (const auto& c : v.coords()) {
            if (const auto* g = c.as_gaussian()) {
                fn(g->re());
                fn(g->im());
            } else if (const auto* q = c.as_rational()) {
                fn(*q);
            }
        }
    };
    each_part([&](const Rational& q) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.denominator().get_mpz_t()); });
    mpz_class gcd = 0;
    each_part([&](const Rational& q) {
        mpz_class num = q.numerator() * (lcm / q.denominator());
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), num.get_mpz_t());
    });
    if (gcd == 0) return v;
    const Scalar factor = Scalar::from_rational(v.field(), Rational(mpq_class(lcm, gcd)));
    return factor * v;
}

}  // namespace

Scalar inner(const Vector& x, const Vector& y) {
    if (x.dim() != y.dim()) throw Error(ErrorKind::DimensionMismatch, "inner product of different lengths");
    if (!(x.field() == y.field())) throw Error(ErrorKind::FieldMismatch, "inner product over different fields");
    require_hermitian(x.field());
    Scalar acc = Scalar::zero(x.field());
    for (std::size_t i = 0; i < x.dim(); ++i)
        if (!x[i].is_zero() && !y[i].is_zero()) acc += x[i] * y[i].conj();
    return acc;
}

Rational norm_squared(const Vector& x) { return *inner(x, x).real_value(); }

Subspace orthocomplement(const Subspace& x) {
    require_hermitian(x.field());
    return kernel(x.basis().conj());
}

std::vector<Vector> gram_schmidt(std::span<const Vector> vectors) {
    std::vector<Vector> out;
    for (const auto& v : vectors) {
        require_hermitian(v.field());
        Vector w = v;
        for (const auto& u : out) {
            const Scalar coeff = inner(v, u) / inner(u, u);
            if (!coeff.is_zero()) w -= coeff * u;
        }
        if (!w.is_zero()) out.push_back(make_primitive(w));
    }
    return out;
}

// -------------------------------------------------------------- projections

Projection::Projection(const Subspace& image) : image_(image), matrix_(image.field(), image.ambient_dim(), image.ambient_dim()) {
    require_hermitian(image.field());
    if (image.is_zero()) return;
    // Columns of C span X; P = C (C* C)^-1 C*.
    const Matrix c = image.basis().transpose();
    const Matrix c_star = c.conj_transpose();
    const auto gram_inv = inverse(c_star * c);
    if (!gram_inv) throw Error(ErrorKind::NotInvertible, "Gram matrix of a basis is singular");
    matrix_ = c * *gram_inv * c_star;
}

Projection projection_of(const Subspace& x) { return Projection(x); }

Matrix involution_of(const Projection& p) {
    if (p.image().is_zero()) throw Error(ErrorKind::InvalidArgument, "Id - 2P is the identity for P = 0");
    const FieldTag f = p.matrix().field();
    const std::size_t n = p.matrix().rows();
    return Matrix::identity(f, n) - Scalar::from_int(f, 2) * p.matrix();
}

// ------------------------------------------------- orthogonality/compatibility

bool is_orthogonal(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    return orthocomplement(y).contains(x);
}

bool compatible_by_decomposition(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    const Subspace meet_perp = orthocomplement(intersect(x, y));
    return is_orthogonal(intersect(meet_perp, x), intersect(meet_perp, y));
}

bool compatible_by_projections(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    const Matrix px = projection_of(x).matrix();
    const Matrix py = projection_of(y).matrix();
    return px * py == py * px;
}

bool is_compatible(const Subspace& x, const Subspace& y) {
    const bool by_decomposition = compatible_by_decomposition(x, y);
    const bool by_projections = compatible_by_projections(x, y);
    if (by_decomposition != by_projections)
        throw Error(ErrorKind::CriterionDisagreement,
                    "compatibility criteria disagree on " + x.to_string() + " and " + y.to_string());
    return by_decomposition;
}

std::size_t CompatDecomposition::nonzero_count() const {
    std::size_t count = 0;
    for (const auto& zi : z) count += zi.is_zero() ? 0 : 1;
    return count;
}

std::size_t CompatDecomposition::total_dim() const {
    std::size_t total = 0;
    for (const auto& zi : z) total += zi.dim();
    return total;
}

CompatDecomposition decompose(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    const Subspace xp = orthocomplement(x);
    const Subspace yp = orthocomplement(y);
    return {{intersect(x, y), intersect(xp, y), intersect(x, yp), intersect(xp, yp)}};
}

std::set<Subspace> double_commutant_set(const Subspace& x, const Subspace& y) {
    require_same_space(x, y);
    if (x.is_zero() || x.is_full() || y.is_zero() || y.is_full() || x == y)
        throw Error(ErrorKind::DegeneratePair, "{X,Y}^cc needs distinct X, Y outside {0, H}");
    if (!is_compatible(x, y)) throw Error(ErrorKind::NotCompatible, x.to_string() + " and " + y.to_string());

    const CompatDecomposition d = decompose(x, y);
    std::set<Subspace> out;
    for (unsigned mask = 0; mask < 16; ++mask) {
        Subspace acc = Subspace::zero(x.field(), x.ambient_dim());
        for (unsigned i = 0; i < 4; ++i)
            if (mask & (1U << i)) acc = sum(acc, d.z[i]);
        out.insert(std::move(acc));
    }
    return out;
}

std::set<Subspace> cc_grassmann_members(const Subspace& x, const Subspace& y, std::size_t k) {
    if (x.dim() != k || y.dim() != k)
        throw Error(ErrorKind::InvalidArgument, "both subspaces must have dimension " + std::to_string(k));
    std::set<Subspace> out;
    for (auto& s : double_commutant_set(x, y))
        if (s.dim() == k) out.insert(s);
    return out;
}

bool is_compatible_set(std::span<const Subspace> family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!is_compatible(family[i], family[j])) return false;
    return true;
}

std::vector<Vector> extend_to_orthogonal_frame(std::span<const Subspace> family, std::size_t n, FieldTag field) {
    require_hermitian(field);
    for (const auto& x : family)
        if (x.ambient_dim() != n || !(x.field() == field))
            throw Error(ErrorKind::DimensionMismatch, "family member outside " + field.to_string() + "^" + std::to_string(n));
    if (!is_compatible_set(family)) throw Error(ErrorKind::NotCompatibleSet, "family is not pairwise compatible");

    // Depth-first sign-pattern refinement; zero branches are pruned as soon
    // as they appear.
    std::vector<Subspace> atoms{Subspace::full(field, n)};
    for (const auto& x : family) {
        const Subspace xp = orthocomplement(x);
        std::vector<Subspace> next;
        for (const auto& atom : atoms) {
            for (const Subspace* side : {&x, &xp}) {
                Subspace piece = intersect(atom, *side);
                if (!piece.is_zero()) next.push_back(std::move(piece));
            }
        }
        atoms = std::move(next);
    }

    std::size_t total = 0;
    for (const auto& atom : atoms) total += atom.dim();
    if (total != n) throw Error(ErrorKind::NotCompatibleSet, "atoms do not span the space");

    std::vector<Vector> frame;
    frame.reserve(n);
    for (const auto& atom : atoms) {
        const auto basis = atom.basis_vectors();
        for (auto& v : gram_schmidt(basis)) frame.push_back(std::move(v));
    }
    return frame;
}

// ---------------------------------------------------------------- axioms

std::vector<AxiomResult> verify_logic_axioms(const AxiomSample& sample) {
    AxiomResult order{"order-reversal", 0, {}};
    AxiomResult involution{"double-complement", 0, {}};
    AxiomResult noncontradiction{"meet-with-complement-is-zero", 0, {}};
    AxiomResult orthomodular{"orthomodularity", 0, {}};
    AxiomResult de_morgan_meet{"de-morgan-meet", 0, {}};
    AxiomResult de_morgan_join{"de-morgan-join", 0, {}};

    for (const auto& x : sample.singles) {
        const Subspace xp = orthocomplement(x);
        ++involution.samples;
        if (!(orthocomplement(xp) == x)) involution.failures.push_back({x});
        ++noncontradiction.samples;
        if (!intersect(x, xp).is_zero()) noncontradiction.failures.push_back({x});
    }
    for (const auto& [x, y] : sample.nested_pairs) {
        if (!y.contains(x)) throw Error(ErrorKind::InvalidArgument, "nested pair is not nested");
        ++order.samples;
        if (!orthocomplement(x).contains(orthocomplement(y))) order.failures.push_back({x, y});
        ++orthomodular.samples;
        if (!(y == sum(x, intersect(orthocomplement(x), y)))) orthomodular.failures.push_back({x, y});
    }
    for (const auto& [x, y] : sample.pairs) {
        const Subspace xp = orthocomplement(x);
        const Subspace yp = orthocomplement(y);
        ++de_morgan_meet.samples;
        if (!(orthocomplement(intersect(x, y)) == sum(xp, yp))) de_morgan_meet.failures.push_back({x, y});
        ++de_morgan_join.samples;
        if (!(orthocomplement(sum(x, y)) == intersect(xp, yp))) de_morgan_join.failures.push_back({x, y});
    }
    return {order, involution, noncontradiction, orthomodular, de_morgan_meet, de_morgan_join};
}

}  // namespace qlogic
