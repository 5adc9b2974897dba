#pragma once

// The Hermitian structure on Q(i)^n and the logic it induces on subspaces:
// orthocomplement, projections, orthogonality, compatibility, the
// Z-decomposition of a compatible pair and its double commutant.

#include <array>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "qlogic/subspace.hpp"

namespace qlogic {

/// <x, y> = sum_i x_i conj(y_i): linear in x, conjugate-linear in y.
Scalar inner(const Vector& x, const Vector& y);

/// <x, x> as a rational; positive for x != 0.
Rational norm_squared(const Vector& x);

/// X^perp = { v : <v, b> = 0 for every b in X }.
Subspace orthocomplement(const Subspace& x);

/// Orthogonalises `vectors` in order without normalising (coefficients
/// <v, u>/<u, u> stay in Q(i)); dependent inputs are dropped. Each output is
/// rescaled to a primitive Gaussian-integer vector to curb coefficient growth.
std::vector<Vector> gram_schmidt(std::span<const Vector> vectors);

/// Orthogonal projection onto X.
class Projection {
public:
    explicit Projection(const Subspace& image);

    const Matrix& matrix() const { return matrix_; }
    const Subspace& image() const { return image_; }

private:
    Subspace image_;
    Matrix matrix_;
};

Projection projection_of(const Subspace& x);

/// S = Id - 2P. Requires P != 0, so S is a non-identity involution.
Matrix involution_of(const Projection& p);

bool is_orthogonal(const Subspace& x, const Subspace& y);

/// ((X∩Y)^perp ∩ X) ⟂ ((X∩Y)^perp ∩ Y)
bool compatible_by_decomposition(const Subspace& x, const Subspace& y);
/// P_X P_Y == P_Y P_X
bool compatible_by_projections(const Subspace& x, const Subspace& y);
/// Evaluates both criteria; raises CriterionDisagreement if they differ.
bool is_compatible(const Subspace& x, const Subspace& y);

/// Z1 = X∩Y, Z2 = X^perp∩Y, Z3 = X∩Y^perp, Z4 = X^perp∩Y^perp.
struct CompatDecomposition {
    std::array<Subspace, 4> z;

    std::size_t nonzero_count() const;
    std::size_t total_dim() const;
};

CompatDecomposition decompose(const Subspace& x, const Subspace& y);

/// {X,Y}^cc for distinct compatible X, Y outside {0, H}: every sum of a
/// subfamily of Z1..Z4, deduplicated. Its size is 2^(nonzero Z count).
std::set<Subspace> double_commutant_set(const Subspace& x, const Subspace& y);

/// Members of {X,Y}^cc of dimension k, for distinct compatible X, Y of dimension k.
std::set<Subspace> cc_grassmann_members(const Subspace& x, const Subspace& y, std::size_t k);

bool is_compatible_set(std::span<const Subspace> family);

/// An orthogonal basis of Q(i)^n such that every member of the compatible
/// family is spanned by a subset of it. The family is refined into the
/// nonzero atoms ∩ X^{±} (X^+ = X, X^- = X^perp) and each atom is
/// orthogonalised. Raises NotCompatibleSet.
std::vector<Vector> extend_to_orthogonal_frame(std::span<const Subspace> family, std::size_t n,
                                               FieldTag field = FieldTag::gaussian());

// ------------------------------------------------------------ logic axioms

struct AxiomResult {
    std::string axiom;
    std::size_t samples = 0;
    std::vector<std::vector<Subspace>> failures;  // counterexample witnesses

    bool passed() const { return failures.empty(); }
};

struct AxiomSample {
    std::vector<Subspace> singles;                            // X
    std::vector<std::pair<Subspace, Subspace>> pairs;         // arbitrary (X, Y)
    std::vector<std::pair<Subspace, Subspace>> nested_pairs;  // X ⊆ Y
};

/// Checks, per sample, the logic laws on L(Q(i)^n):
///   order reversal  X ⊆ Y ⇒ Y^perp ⊆ X^perp
///   involution      X^perp perp = X
///   non-contradiction X ∩ X^perp = 0
///   orthomodularity X ⊆ Y ⇒ Y = X + (X^perp ∩ Y)
///   De Morgan       (X∩Y)^perp = X^perp + Y^perp and (X+Y)^perp = X^perp ∩ Y^perp
std::vector<AxiomResult> verify_logic_axioms(const AxiomSample& sample);

}  // namespace qlogic
