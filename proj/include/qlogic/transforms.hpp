#pragma once

// Semilinear maps x -> A·sigma(x) and explicit finite maps on subspaces,
// with checkers for which relations such maps preserve.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qlogic/subspace.hpp"

namespace qlogic {

enum class Twist { Identity, Conjugation };

class SemilinearMap {
public:
    /// A must be square and invertible; Conjugation needs Q(i).
    explicit SemilinearMap(Matrix a, Twist sigma = Twist::Identity);

    const Matrix& matrix() const { return a_; }
    Twist sigma() const { return sigma_; }
    std::size_t dim() const { return a_.rows(); }

    Vector apply(const Vector& x) const;

private:
    Matrix a_;
    Twist sigma_;
};

/// Span of the images of the basis rows.
Subspace apply(const SemilinearMap& map, const Subspace& x);

/// sigma = Identity and A*A = Id.
bool is_unitary(const SemilinearMap& map);
/// sigma = Conjugation and A*A = Id.
bool is_antiunitary(const SemilinearMap& map);

struct ScalarUnitarity {
    /// c > 0 with A*A = c·Id, when it exists.
    std::optional<Rational> scale;
    /// Otherwise an orthogonal pair (x, y) whose images are not orthogonal.
    std::optional<std::pair<Vector, Vector>> witness;
    /// Set for n = 2, where the criterion is reported but not relied upon.
    bool low_dimension = false;
};

/// Certifies orthogonality preservation by the exact equation A*A = c·Id;
/// otherwise searches (e_i, e_j) and (e_i + e_j, e_i - e_j) for a violation.
ScalarUnitarity unitary_up_to_scalar(const SemilinearMap& map);

struct DualActionReport {
    bool adjoint_inverse_commute = false;  // (A^-1)* == (A*)^-1
    std::size_t samples = 0;
    std::vector<Subspace> failures;        // X with A(X^perp)^perp != (A*)^-1 X

    bool passed() const { return adjoint_inverse_commute && failures.empty(); }
};

DualActionReport dual_action_check(const Matrix& a, std::span<const Subspace> samples);

/// A finite table X -> f(X).
class SubspaceMap {
public:
    void set(const Subspace& from, const Subspace& to);
    /// Raises InvalidArgument outside the domain.
    const Subspace& at(const Subspace& x) const;
    bool contains(const Subspace& x) const { return table_.count(x) != 0; }
    std::vector<Subspace> domain() const;
    std::size_t size() const { return table_.size(); }
    bool is_injective() const;

private:
    std::map<Subspace, Subspace> table_;
};

SubspaceMap induced_map(const SemilinearMap& g, std::span<const Subspace> domain);
SubspaceMap compose(const SubspaceMap& outer, const SubspaceMap& inner);

/// X -> X^perp for X in `flip`, X -> X otherwise, tabulated on `domain`
/// (which should include `flip`). Raises NotComplementClosed.
SubspaceMap pi_transform(std::span<const Subspace> flip, std::span<const Subspace> domain);

enum class Relation { Orthogonality, Compatibility, Inclusion, Adjacency };

std::string to_string(Relation r);
/// X ~ Y iff dim X = dim Y and dim(X∩Y) = dim X - 1.
bool holds(Relation r, const Subspace& x, const Subspace& y);

struct PreservationReport {
    Relation relation;
    std::size_t pairs = 0;
    std::vector<std::pair<Subspace, Subspace>> forward_failures;   // R(X,Y) but not R(fX,fY)
    std::vector<std::pair<Subspace, Subspace>> backward_failures;  // R(fX,fY) but not R(X,Y)

    bool forward() const { return forward_failures.empty(); }
    bool both_directions() const { return forward_failures.empty() && backward_failures.empty(); }
};

/// Sample-scoped: only the given pairs are examined.
PreservationReport preserves(Relation r, const SubspaceMap& f, std::span<const std::pair<Subspace, Subspace>> pairs);

enum class FlipVerdict { AsIs, Flipped, Neither };

std::string to_string(FlipVerdict v);

struct FactorFlipReport {
    std::vector<std::pair<Subspace, FlipVerdict>> verdicts;
    std::size_t as_is = 0;
    std::size_t flipped = 0;
    std::size_t neither = 0;

    bool passed() const { return neither == 0; }
};

/// For each X in the domain of f: f(X) = g(X) (AsIs), f(X) = g(X)^perp
/// (Flipped) or neither. g must be unitary up to a scalar, otherwise
/// AssumptionViolated.
FactorFlipReport factor_flip_check(const SubspaceMap& f, const SemilinearMap& g);

}  // namespace qlogic
