#include "qlogic/transforms.hpp"

#include <set>

#include "qlogic/hilbert.hpp"

namespace qlogic {

SemilinearMap::SemilinearMap(Matrix a, Twist sigma) : a_(std::move(a)), sigma_(sigma) {
    if (!a_.is_square()) throw Error(ErrorKind::DimensionMismatch, "semilinear map needs a square matrix");
    if (sigma_ == Twist::Conjugation && !a_.field().has_conjugation())
        throw Error(ErrorKind::FieldMismatch, "conjugation needs Q(i)");
    if (!is_invertible(a_)) throw Error(ErrorKind::NotInvertible, "semilinear map needs an invertible matrix");
}

Vector SemilinearMap::apply(const Vector& x) const {
    return a_ * (sigma_ == Twist::Conjugation ? x.conj() : x);
}

Subspace apply(const SemilinearMap& map, const Subspace& x) {
    if (x.ambient_dim() != map.dim()) throw Error(ErrorKind::DimensionMismatch, "subspace outside the map's space");
    std::vector<Vector> images;
    for (const auto& row : x.basis_vectors()) images.push_back(map.apply(row));
    return Subspace::span(x.field(), x.ambient_dim(), images);
}

namespace {

Matrix gram(const SemilinearMap& map) { return map.matrix().conj_transpose() * map.matrix(); }

}  // namespace

bool is_unitary(const SemilinearMap& map) { return map.sigma() == Twist::Identity && gram(map).is_identity(); }

bool is_antiunitary(const SemilinearMap& map) { return map.sigma() == Twist::Conjugation && gram(map).is_identity(); }

ScalarUnitarity unitary_up_to_scalar(const SemilinearMap& map) {
    const FieldTag f = map.matrix().field();
    if (f.is_finite()) throw Error(ErrorKind::FieldMismatch, "unitarity needs Q or Q(i)");
    const std::size_t n = map.dim();
    ScalarUnitarity out;
    out.low_dimension = n == 2;

    const Matrix g = gram(map);
    if (n > 0 && g == g(0, 0) * Matrix::identity(f, n)) {
        out.scale = g(0, 0).real_value();
        return out;
    }

    auto violates = [&](const Vector& x, const Vector& y) {
        return inner(x, y).is_zero() && !inner(map.apply(x), map.apply(y)).is_zero();
    };
    for (std::size_t i = 0; i < n && !out.witness; ++i)
        for (std::size_t j = i + 1; j < n && !out.witness; ++j) {
            const Vector ei = Vector::unit(f, n, i);
            const Vector ej = Vector::unit(f, n, j);
            if (violates(ei, ej)) out.witness = {ei, ej};
            else if (violates(ei + ej, ei - ej)) out.witness = {ei + ej, ei - ej};
        }
    if (!out.witness) throw Error(ErrorKind::AssumptionViolated, "no orthogonality violation found for a non-scalar Gram matrix");
    return out;
}

DualActionReport dual_action_check(const Matrix& a, std::span<const Subspace> samples) {
    const auto a_inv = inverse(a);
    const Matrix a_star = a.conj_transpose();
    const auto a_star_inv = inverse(a_star);
    if (!a_inv || !a_star_inv) throw Error(ErrorKind::NotInvertible, "dual action needs an invertible matrix");

    DualActionReport report;
    report.adjoint_inverse_commute = a_inv->conj_transpose() == *a_star_inv;
    const SemilinearMap forward(a);
    const SemilinearMap dual(*a_star_inv);
    for (const auto& x : samples) {
        ++report.samples;
        const Subspace lhs = orthocomplement(apply(forward, orthocomplement(x)));
        const Subspace rhs = apply(dual, x);
        if (!(lhs == rhs)) report.failures.push_back(x);
    }
    return report;
}

// ------------------------------------------------------------- finite maps

void SubspaceMap::set(const Subspace& from, const Subspace& to) {
    if (from.ambient_dim() != to.ambient_dim()) throw Error(ErrorKind::DimensionMismatch, "map must stay in one space");
    table_.insert_or_assign(from, to);
}

const Subspace& SubspaceMap::at(const Subspace& x) const {
    const auto it = table_.find(x);
    if (it == table_.end()) throw Error(ErrorKind::InvalidArgument, "subspace outside the map's domain: " + x.to_string());
    return it->second;
}

std::vector<Subspace> SubspaceMap::domain() const {
    std::vector<Subspace> out;
    out.reserve(table_.size());
    for (const auto& [from, to] : table_) out.push_back(from);
    return out;
}

bool SubspaceMap::is_injective() const {
    std::set<Subspace> images;
    for (const auto& [from, to] : table_)
        if (!images.insert(to).second) return false;
    return true;
}

SubspaceMap induced_map(const SemilinearMap& g, std::span<const Subspace> domain) {
    SubspaceMap out;
    for (const auto& x : domain) out.set(x, apply(g, x));
    return out;
}

SubspaceMap compose(const SubspaceMap& outer, const SubspaceMap& inner) {
    SubspaceMap out;
    for (const auto& x : inner.domain()) out.set(x, outer.at(inner.at(x)));
    return out;
}

SubspaceMap pi_transform(std::span<const Subspace> flip, std::span<const Subspace> domain) {
    const std::set<Subspace> flipped(flip.begin(), flip.end());
    for (const auto& x : flipped)
        if (!flipped.count(orthocomplement(x)))
            throw Error(ErrorKind::NotComplementClosed, "orthocomplement of " + x.to_string() + " is missing");
    SubspaceMap out;
    for (const auto& x : domain) out.set(x, flipped.count(x) ? orthocomplement(x) : x);
    return out;
}

std::string to_string(Relation r) {
    switch (r) {
        case Relation::Orthogonality: return "orthogonality";
        case Relation::Compatibility: return "compatibility";
        case Relation::Inclusion: return "inclusion";
        case Relation::Adjacency: return "adjacency";
    }
    return "unknown";
}

bool holds(Relation r, const Subspace& x, const Subspace& y) {
    switch (r) {
        case Relation::Orthogonality: return is_orthogonal(x, y);
        case Relation::Compatibility: return is_compatible(x, y);
        case Relation::Inclusion: return y.contains(x);
        case Relation::Adjacency: return x.dim() == y.dim() && intersect(x, y).dim() + 1 == x.dim();
    }
    return false;
}

PreservationReport preserves(Relation r, const SubspaceMap& f, std::span<const std::pair<Subspace, Subspace>> pairs) {
    PreservationReport report{r, 0, {}, {}};
    for (const auto& [x, y] : pairs) {
        ++report.pairs;
        const bool before = holds(r, x, y);
        const bool after = holds(r, f.at(x), f.at(y));
        if (before && !after) report.forward_failures.emplace_back(x, y);
        if (!before && after) report.backward_failures.emplace_back(x, y);
    }
    return report;
}

std::string to_string(FlipVerdict v) {
    switch (v) {
        case FlipVerdict::AsIs: return "as-is";
        case FlipVerdict::Flipped: return "flipped";
        case FlipVerdict::Neither: return "neither";
    }
    return "unknown";
}

FactorFlipReport factor_flip_check(const SubspaceMap& f, const SemilinearMap& g) {
    if (!unitary_up_to_scalar(g).scale)
        throw Error(ErrorKind::AssumptionViolated, "g is not a scalar multiple of a unitary or anti-unitary map");
    FactorFlipReport report;
    for (const auto& x : f.domain()) {
        const Subspace gx = apply(g, x);
        const Subspace& fx = f.at(x);
        FlipVerdict v = FlipVerdict::Neither;
        if (fx == gx) v = FlipVerdict::AsIs;
        else if (fx == orthocomplement(gx)) v = FlipVerdict::Flipped;
        (v == FlipVerdict::AsIs ? report.as_is : v == FlipVerdict::Flipped ? report.flipped : report.neither) += 1;
        report.verdicts.emplace_back(x, v);
    }
    return report;
}

}  // namespace qlogic
