#pragma once

// Apartments of G_k: the k-subspaces spanned by subsets of a frame of n
// independent lines. Frame indices are 0-based; a member is named by the
// bit mask of the frame indices it uses.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlogic/subspace.hpp"

namespace qlogic {

using IndexSet = std::uint32_t;
/// A subset of an apartment: sorted, duplicate-free member index sets.
using MemberSet = std::vector<IndexSet>;

inline constexpr std::size_t kMaxFrameSize = 20;

class Apartment {
public:
    /// `frame` must be n <= 20 independent vectors of length n; 1 <= k < n.
    Apartment(std::vector<Vector> frame, std::size_t k);
    static Apartment standard(FieldTag field, std::size_t n, std::size_t k);

    std::size_t n() const { return frame_.size(); }
    std::size_t k() const { return k_; }
    FieldTag field() const { return frame_.front().field(); }
    const std::vector<Vector>& frame() const { return frame_; }
    /// Frame vectors pairwise orthogonal (always false over GF(p)).
    bool is_ortho() const { return ortho_; }

    /// All k-element index sets, increasing as integers.
    const MemberSet& all_members() const { return members_; }
    Subspace member(IndexSet set) const;
    /// Span of the frame vectors selected by an arbitrary mask.
    Subspace span_of(IndexSet set) const;
    /// The index set of x if x is a member.
    std::optional<IndexSet> index_of(const Subspace& x) const;

    /// The frame lines, each a canonical 1-dimensional subspace (scaled so the
    /// first nonzero coordinate is 1), sorted. Two apartments are equal iff
    /// these lists and k agree.
    const std::vector<Subspace>& lines() const { return lines_; }
    friend bool operator==(const Apartment& a, const Apartment& b) { return a.k_ == b.k_ && a.lines_ == b.lines_; }

private:
    std::vector<Vector> frame_;
    std::size_t k_;
    bool ortho_ = false;
    MemberSet members_;
    std::vector<Subspace> lines_;
};

/// One condition of a selector: frame index i inside (+i) or outside (-i).
struct SelectorTerm {
    std::size_t index;
    bool inside;
};

inline SelectorTerm plus(std::size_t i) { return {i, true}; }
inline SelectorTerm minus(std::size_t i) { return {i, false}; }

/// Members meeting every term, e.g. {plus(i), minus(j)} for A(+i,-j).
/// Raises IndexOutOfRange, and InvalidArgument on a repeated index.
MemberSet select(const Apartment& a, std::initializer_list<SelectorTerm> terms);
MemberSet select(const Apartment& a, std::span<const SelectorTerm> terms);

MemberSet member_union(const MemberSet& a, const MemberSet& b);
MemberSet member_difference(const MemberSet& a, const MemberSet& b);
/// Members of `a` that are also members of `b`.
MemberSet common_members(const Apartment& a, const Apartment& b);

struct InexactnessCertificate {
    bool exact = false;
    std::size_t index = 0;              // the frame index i with a defective S_i
    std::size_t partner = 0;            // the frame index j used by the witness
    std::optional<Apartment> witness;   // distinct apartment containing the subset
    std::vector<Subspace> s;            // S_0 .. S_{n-1}
};

/// Linear case. S_i is the meet of the subset members containing e_i (0 if
/// none). Exact iff every S_i is the frame line i; otherwise the witness
/// replaces e_i by e_i + e_j, where e_j lies in S_i (any j if S_i = 0).
/// The witness is validated. Raises NotMembers.
InexactnessCertificate inexactness_certificate_linear(const Apartment& a, const MemberSet& subset);

struct MaximalInexactSubset {
    std::size_t i;
    std::size_t j;
    MemberSet members;           // A(+i,+j) ∪ A(-i)
    bool certified_inexact;      // certificate returns Inexact
    bool every_extension_exact;  // adding any missing member gives Exact
};

/// The n(n-1) sets A(+i,+j) ∪ A(-i) over ordered pairs, each checked for
/// inexactness and maximality. Raises AssumptionViolated unless n >= 2k, k > 1.
std::vector<MaximalInexactSubset> maximal_inexact_subsets_linear(const Apartment& a);

/// Frames of every apartment of GF(p)^n, found by running through all
/// ordered bases and deduplicating by line set. Results are cached under
/// `cache_dir` when it is given.
struct ApartmentEnumeration {
    std::uint64_t ordered_bases = 0;
    std::vector<Apartment> apartments;
    bool from_cache = false;
};

inline constexpr std::uint64_t kBasisSearchCap = 1ULL << 24;

ApartmentEnumeration enumerate_apartments(std::uint32_t n, std::uint32_t k, std::uint32_t p,
                                          const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

/// X and Y (index sets) are opposite iff no complementary subset A(+i,-j)
/// contains both. Requires n >= 2k.
bool opposite_via_complementary(const Apartment& a, IndexSet x, IndexSet y);

/// Orthogonal case over Q(i). S_i meets the members containing e_i and the
/// orthocomplements of the other members (Q(i)^n if there are none). Exact
/// iff every S_i is a line; otherwise e_j in S_i with j != i exists and the
/// witness replaces (e_i, e_j) by u = e_i + e_j, v = <e_j,e_j> e_i - <e_i,e_i> e_j.
/// Raises NotMembers, NotOrthoApartment.
InexactnessCertificate inexactness_certificate_ortho(const Apartment& a, const MemberSet& subset);

struct OrthocomplementarySubset {
    std::size_t i;
    std::size_t j;          // i < j
    MemberSet members;      // A(+i,-j) ∪ A(+j,-i)
};

std::vector<OrthocomplementarySubset> orthocomplementary_subsets(const Apartment& a);

struct ContainingCounts {
    std::size_t type1 = 0;  // one of e_i, e_j in X\Y, the other in Y\X
    std::size_t type2 = 0;  // one of e_i, e_j in X∩Y, the other outside X+Y

    friend bool operator==(const ContainingCounts&, const ContainingCounts&) = default;
};

/// Scans every C_ij containing both X and Y and sorts it by the position of
/// e_i, e_j relative to X and Y. Requires X != Y.
ContainingCounts count_containing(const Apartment& a, IndexSet x, IndexSet y);
/// Same, reusing a precomputed orthocomplementary_subsets(a).
ContainingCounts count_containing(const Apartment& a, std::span<const OrthocomplementarySubset> subsets, IndexSet x,
                                  IndexSet y);
/// (|I_X\I_Y|·|I_Y\I_X|, |I_X∩I_Y|·(n - |I_X∪I_Y|))
ContainingCounts containing_counts_closed_form(std::size_t n, IndexSet x, IndexSet y);

std::string index_set_to_string(IndexSet set);

}  // namespace qlogic
