#include "qlogic/apartments.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>

#include <json.hpp>

#include "qlogic/hilbert.hpp"

namespace qlogic {

namespace {

constexpr int kCacheSchemaVersion = 1;

std::size_t popcount(IndexSet s) { return static_cast<std::size_t>(std::popcount(s)); }

void require_member(const Apartment& a, IndexSet set) {
    if (popcount(set) != a.k() || (set >> a.n()) != 0)
        throw Error(ErrorKind::NotMembers, "index set " + index_set_to_string(set) + " is not a member");
}

void require_members(const Apartment& a, const MemberSet& subset) {
    for (auto s : subset) require_member(a, s);
    if (!std::is_sorted(subset.begin(), subset.end()) ||
        std::adjacent_find(subset.begin(), subset.end()) != subset.end())
        throw Error(ErrorKind::InvalidArgument, "member set must be sorted and duplicate-free");
}

void validate_witness(const Apartment& a, const Apartment& witness, const MemberSet& subset) {
    bool ok = !(witness == a);
    for (auto s : subset) ok = ok && witness.index_of(a.member(s)).has_value();
    if (!ok) throw Error(ErrorKind::AssumptionViolated, "witness apartment failed validation");
}

}  // namespace

Apartment::Apartment(std::vector<Vector> frame, std::size_t k) : frame_(std::move(frame)), k_(k) {
    const std::size_t n = frame_.size();
    if (n < 2 || n > kMaxFrameSize) throw Error(ErrorKind::InvalidArgument, "frame size must be in [2, 20]");
    if (k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "apartment needs 1 <= k < n");
    const FieldTag f = frame_.front().field();
    for (const auto& v : frame_) {
        if (v.dim() != n) throw Error(ErrorKind::DimensionMismatch, "frame vectors must have length n");
        if (!(v.field() == f)) throw Error(ErrorKind::FieldMismatch, "frame vectors over different fields");
    }
    if (rank(Matrix::from_rows(f, n, frame_)) != n) throw Error(ErrorKind::InvalidArgument, "frame vectors are dependent");

    ortho_ = !f.is_finite();
    for (std::size_t i = 0; ortho_ && i < n; ++i)
        for (std::size_t j = i + 1; ortho_ && j < n; ++j) ortho_ = inner(frame_[i], frame_[j]).is_zero();

    for (IndexSet s = 0; s < (IndexSet{1} << n); ++s)
        if (popcount(s) == k) members_.push_back(s);
    for (const auto& v : frame_) lines_.push_back(Subspace::span(v));
    std::sort(lines_.begin(), lines_.end());
}

Apartment Apartment::standard(FieldTag field, std::size_t n, std::size_t k) {
    std::vector<Vector> frame;
    for (std::size_t i = 0; i < n; ++i) frame.push_back(Vector::unit(field, n, i));
    return Apartment(std::move(frame), k);
}

Subspace Apartment::span_of(IndexSet set) const {
    if ((set >> n()) != 0) throw Error(ErrorKind::IndexOutOfRange, "index set exceeds the frame");
    std::vector<Vector> chosen;
    for (std::size_t i = 0; i < n(); ++i)
        if (set & (IndexSet{1} << i)) chosen.push_back(frame_[i]);
    return Subspace::span(field(), n(), chosen);
}

Subspace Apartment::member(IndexSet set) const {
    require_member(*this, set);
    return span_of(set);
}

std::optional<IndexSet> Apartment::index_of(const Subspace& x) const {
    if (x.ambient_dim() != n() || !(x.field() == field()) || x.dim() != k_) return std::nullopt;
    // k independent frame vectors inside a k-space span it.
    IndexSet set = 0;
    for (std::size_t i = 0; i < n(); ++i)
        if (x.contains(frame_[i])) set |= IndexSet{1} << i;
    if (popcount(set) != k_) return std::nullopt;
    return set;
}

MemberSet select(const Apartment& a, std::initializer_list<SelectorTerm> terms) {
    return select(a, std::span<const SelectorTerm>(terms.begin(), terms.size()));
}

MemberSet select(const Apartment& a, std::span<const SelectorTerm> terms) {
    IndexSet required = 0;
    IndexSet forbidden = 0;
    for (const auto& t : terms) {
        if (t.index >= a.n()) throw Error(ErrorKind::IndexOutOfRange, "selector index " + std::to_string(t.index));
        const IndexSet bit = IndexSet{1} << t.index;
        if ((required | forbidden) & bit) throw Error(ErrorKind::InvalidArgument, "selector repeats an index");
        (t.inside ? required : forbidden) |= bit;
    }
    MemberSet out;
    for (auto s : a.all_members())
        if ((s & required) == required && (s & forbidden) == 0) out.push_back(s);
    return out;
}

MemberSet member_union(const MemberSet& a, const MemberSet& b) {
    MemberSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MemberSet member_difference(const MemberSet& a, const MemberSet& b) {
    MemberSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MemberSet common_members(const Apartment& a, const Apartment& b) {
    MemberSet out;
    for (auto s : a.all_members())
        if (b.index_of(a.member(s))) out.push_back(s);
    return out;
}

// -------------------------------------------------------------- linear case

InexactnessCertificate inexactness_certificate_linear(const Apartment& a, const MemberSet& subset) {
    require_members(a, subset);
    const std::size_t n = a.n();
    InexactnessCertificate cert;
    std::vector<Subspace> members;
    for (auto s : subset) members.push_back(a.member(s));

    std::optional<std::size_t> defective;
    for (std::size_t i = 0; i < n; ++i) {
        std::optional<Subspace> meet;
        for (std::size_t m = 0; m < subset.size(); ++m)
            if (subset[m] & (IndexSet{1} << i)) meet = meet ? intersect(*meet, members[m]) : members[m];
        cert.s.push_back(meet ? *meet : Subspace::zero(a.field(), n));
        if (!defective && !(cert.s.back() == a.span_of(IndexSet{1} << i))) defective = i;
    }
    if (!defective) {
        cert.exact = true;
        return cert;
    }

    const std::size_t i = *defective;
    std::size_t j = i == 0 ? 1 : 0;
    if (!cert.s[i].is_zero()) {
        for (j = 0; j < n; ++j)
            if (j != i && cert.s[i].contains(a.frame()[j])) break;
        if (j == n) throw Error(ErrorKind::AssumptionViolated, "S_i contains no second frame vector");
    }
    std::vector<Vector> frame = a.frame();
    frame[i] = frame[i] + frame[j];
    Apartment witness(std::move(frame), a.k());
    validate_witness(a, witness, subset);
    cert.index = i;
    cert.partner = j;
    cert.witness = std::move(witness);
    return cert;
}

std::vector<MaximalInexactSubset> maximal_inexact_subsets_linear(const Apartment& a) {
    if (a.n() < 2 * a.k()) throw Error(ErrorKind::AssumptionViolated, "maximal inexact subsets need n >= 2k");
    if (a.k() < 2) throw Error(ErrorKind::AssumptionViolated, "maximal inexact subsets need k > 1");
    std::vector<MaximalInexactSubset> out;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            if (i == j) continue;
            MaximalInexactSubset m{i, j, member_union(select(a, {plus(i), plus(j)}), select(a, {minus(i)})), false, true};
            m.certified_inexact = !inexactness_certificate_linear(a, m.members).exact;
            for (auto extra : member_difference(a.all_members(), m.members)) {
                const MemberSet bigger = member_union(m.members, {extra});
                if (!inexactness_certificate_linear(a, bigger).exact) {
                    m.every_extension_exact = false;
                    break;
                }
            }
            out.push_back(std::move(m));
        }
    return out;
}

// -------------------------------------------------------------- enumeration

namespace {

/// GF(p)^n vectors as base-p integers, coordinate 0 most significant.
struct SmallSpace {
    std::uint32_t n;
    std::uint32_t p;

    std::vector<std::uint32_t> decode(std::uint64_t code) const {
        std::vector<std::uint32_t> v(n);
        for (std::size_t c = n; c-- > 0;) {
            v[c] = static_cast<std::uint32_t>(code % p);
            code /= p;
        }
        return v;
    }

    std::uint64_t encode(const std::vector<std::uint32_t>& v) const {
        std::uint64_t code = 0;
        for (auto x : v) code = code * p + x;
        return code;
    }

    /// Code of the line through v, scaled so its first nonzero coordinate is 1.
    std::uint64_t line_code(std::vector<std::uint32_t> v) const {
        const auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        std::uint32_t inv = 1;
        for (std::uint32_t e = p - 2, b = *lead; e; e >>= 1, b = b * b % p)
            if (e & 1) inv = inv * b % p;
        for (auto& x : v) x = x * inv % p;
        return encode(v);
    }

    Vector to_vector(std::uint64_t code) const {
        const FieldTag f = FieldTag::prime(p);
        std::vector<Scalar> coords;
        for (auto x : decode(code)) coords.emplace_back(PrimeFieldElement(x, p));
        return Vector(f, std::move(coords));
    }
};

/// Row-reduced basis supporting incremental membership tests.
class Echelon {
public:
    Echelon(std::uint32_t n, std::uint32_t p) : n_(n), p_(p) {}

    /// Reduces v; returns true (and keeps it) if it was independent.
    bool insert(std::vector<std::uint32_t> v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const std::uint32_t f = v[pivots_[r]];
            if (f == 0) continue;
            for (std::size_t c = 0; c < n_; ++c) v[c] = (v[c] + (p_ - f) * rows_[r][c]) % p_;
        }
        const auto lead = std::find_if(v.begin(), v.end(), [](auto x) { return x != 0; });
        if (lead == v.end()) return false;
        std::uint32_t inv = 1;
        for (std::uint32_t e = p_ - 2, b = *lead; e; e >>= 1, b = b * b % p_)
            if (e & 1) inv = inv * b % p_;
        for (auto& x : v) x = x * inv % p_;
        pivots_.push_back(static_cast<std::size_t>(lead - v.begin()));
        rows_.push_back(std::move(v));
        return true;
    }

    void pop() {
        rows_.pop_back();
        pivots_.pop_back();
    }

private:
    std::uint32_t n_;
    std::uint32_t p_;
    std::vector<std::vector<std::uint32_t>> rows_;
    std::vector<std::size_t> pivots_;
};

std::filesystem::path cache_file(const std::filesystem::path& dir, std::uint32_t n, std::uint32_t k, std::uint32_t p) {
    return dir / ("apartments-n" + std::to_string(n) + "-k" + std::to_string(k) + "-p" + std::to_string(p) + "-v" +
                  std::to_string(kCacheSchemaVersion) + ".json");
}

}  // namespace

ApartmentEnumeration enumerate_apartments(std::uint32_t n, std::uint32_t k, std::uint32_t p,
                                          const std::optional<std::filesystem::path>& cache_dir) {
    if (!is_prime(p) || p > PrimeFieldElement::kMaxModulus) throw Error(ErrorKind::InvalidArgument, "p must be a prime <= 97");
    if (n < 2 || n > kMaxFrameSize || k < 1 || k >= n) throw Error(ErrorKind::InvalidArgument, "need 1 <= k < n <= 20");

    // |GL(n, p)| = prod_i (p^n - p^i)
    unsigned __int128 order = 1;
    unsigned __int128 pn = 1;
    for (std::uint32_t i = 0; i < n; ++i) pn *= p;
    for (unsigned __int128 pi = 1; pi < pn; pi *= p) {
        order *= pn - pi;
        if (order > kBasisSearchCap)
            throw Error(ErrorKind::SizeCapExceeded, "too many ordered bases of GF(" + std::to_string(p) + ")^" + std::to_string(n));
    }

    const SmallSpace space{n, p};
    ApartmentEnumeration result;
    auto materialise = [&](const std::vector<std::vector<std::uint64_t>>& frames) {
        for (const auto& codes : frames) {
            std::vector<Vector> frame;
            for (auto c : codes) frame.push_back(space.to_vector(c));
            result.apartments.emplace_back(std::move(frame), k);
        }
    };

    std::optional<std::filesystem::path> path;
    if (cache_dir) path = cache_file(*cache_dir, n, k, p);
    if (path && std::filesystem::exists(*path)) {
        std::ifstream in(*path);
        const auto doc = nlohmann::json::parse(in, nullptr, false);
        if (!doc.is_discarded() && doc.value("schema_version", 0) == kCacheSchemaVersion && doc.value("n", 0U) == n &&
            doc.value("k", 0U) == k && doc.value("p", 0U) == p) {
            result.ordered_bases = doc.at("ordered_bases").get<std::uint64_t>();
            materialise(doc.at("frames").get<std::vector<std::vector<std::uint64_t>>>());
            result.from_cache = true;
            return result;
        }
    }

    const auto total = static_cast<std::uint64_t>(pn);
    std::set<std::vector<std::uint64_t>> frames;
    std::vector<std::uint64_t> lines;
    Echelon echelon(n, p);
    // Depth-first over ordered bases: position t takes every nonzero vector
    // independent of positions 0..t-1.
    auto extend = [&](auto&& self) -> void {
        if (lines.size() == n) {
            ++result.ordered_bases;
            auto key = lines;
            std::sort(key.begin(), key.end());
            frames.insert(std::move(key));
            return;
        }
        for (std::uint64_t code = 1; code < total; ++code) {
            auto v = space.decode(code);
            if (!echelon.insert(v)) continue;
            lines.push_back(space.line_code(std::move(v)));
            self(self);
            lines.pop_back();
            echelon.pop();
        }
    };
    extend(extend);

    const std::vector<std::vector<std::uint64_t>> ordered(frames.begin(), frames.end());
    materialise(ordered);

    if (path) {
        std::error_code ec;
        std::filesystem::create_directories(*cache_dir, ec);
        nlohmann::json doc{{"schema_version", kCacheSchemaVersion}, {"n", n}, {"k", k}, {"p", p},
                           {"ordered_bases", result.ordered_bases}, {"frames", ordered}};
        const auto tmp = path->string() + ".tmp";
        std::ofstream(tmp) << doc.dump() << '\n';
        std::filesystem::rename(tmp, *path, ec);
    }
    return result;
}

bool opposite_via_complementary(const Apartment& a, IndexSet x, IndexSet y) {
    if (a.n() < 2 * a.k()) throw Error(ErrorKind::AssumptionViolated, "complementary subsets need n >= 2k");
    require_member(a, x);
    require_member(a, y);
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = 0; j < a.n(); ++j) {
            if (i == j) continue;
            const MemberSet c = select(a, {plus(i), minus(j)});
            if (std::binary_search(c.begin(), c.end(), x) && std::binary_search(c.begin(), c.end(), y)) return false;
        }
    return true;
}

// ---------------------------------------------------------- orthogonal case

InexactnessCertificate inexactness_certificate_ortho(const Apartment& a, const MemberSet& subset) {
    if (!a.is_ortho()) throw Error(ErrorKind::NotOrthoApartment, "frame is not pairwise orthogonal");
    require_members(a, subset);
    const std::size_t n = a.n();
    std::vector<Subspace> members;
    for (auto s : subset) members.push_back(a.member(s));
    std::vector<std::optional<Subspace>> complements(subset.size());

    InexactnessCertificate cert;
    std::optional<std::size_t> defective;
    for (std::size_t i = 0; i < n; ++i) {
        // Every constraint contains e_i, so a line cannot shrink further.
        Subspace meet = Subspace::full(a.field(), n);
        for (std::size_t m = 0; m < subset.size() && meet.dim() > 1; ++m) {
            if (subset[m] & (IndexSet{1} << i)) {
                meet = intersect(meet, members[m]);
            } else {
                if (!complements[m]) complements[m] = orthocomplement(members[m]);
                meet = intersect(meet, *complements[m]);
            }
        }
        if (!defective && meet.dim() != 1) defective = i;
        cert.s.push_back(std::move(meet));
    }
    if (!defective) {
        cert.exact = true;
        return cert;
    }

    const std::size_t i = *defective;
    std::size_t j = 0;
    for (; j < n; ++j)
        if (j != i && cert.s[i].contains(a.frame()[j])) break;
    if (j == n) throw Error(ErrorKind::AssumptionViolated, "S_i contains no second frame vector");

    const Vector& ei = a.frame()[i];
    const Vector& ej = a.frame()[j];
    std::vector<Vector> frame = a.frame();
    frame[i] = ei + ej;
    frame[j] = inner(ej, ej) * ei - inner(ei, ei) * ej;
    Apartment witness(std::move(frame), a.k());
    if (!witness.is_ortho()) throw Error(ErrorKind::AssumptionViolated, "rotated pair is not orthogonal");
    validate_witness(a, witness, subset);
    cert.index = i;
    cert.partner = j;
    cert.witness = std::move(witness);
    return cert;
}

std::vector<OrthocomplementarySubset> orthocomplementary_subsets(const Apartment& a) {
    std::vector<OrthocomplementarySubset> out;
    for (std::size_t i = 0; i < a.n(); ++i)
        for (std::size_t j = i + 1; j < a.n(); ++j)
            out.push_back({i, j, member_union(select(a, {plus(i), minus(j)}), select(a, {plus(j), minus(i)}))});
    return out;
}

ContainingCounts count_containing(const Apartment& a, IndexSet x, IndexSet y) {
    return count_containing(a, orthocomplementary_subsets(a), x, y);
}

ContainingCounts count_containing(const Apartment& a, std::span<const OrthocomplementarySubset> subsets, IndexSet x,
                                  IndexSet y) {
    require_member(a, x);
    require_member(a, y);
    if (x == y) throw Error(ErrorKind::InvalidArgument, "count_containing needs X != Y");

    const Subspace sx = a.member(x);
    const Subspace sy = a.member(y);
    std::optional<Subspace> meet;
    std::optional<Subspace> join;
    ContainingCounts counts;
    for (const auto& c : subsets) {
        if (!std::binary_search(c.members.begin(), c.members.end(), x) ||
            !std::binary_search(c.members.begin(), c.members.end(), y))
            continue;
        if (!meet) {
            meet = intersect(sx, sy);
            join = sum(sx, sy);
        }
        const Vector& ei = a.frame()[c.i];
        const Vector& ej = a.frame()[c.j];
        auto only_x = [&](const Vector& v) { return sx.contains(v) && !sy.contains(v); };
        auto only_y = [&](const Vector& v) { return sy.contains(v) && !sx.contains(v); };
        if ((only_x(ei) && only_y(ej)) || (only_y(ei) && only_x(ej))) ++counts.type1;
        if ((meet->contains(ei) && !join->contains(ej)) || (meet->contains(ej) && !join->contains(ei))) ++counts.type2;
    }
    return counts;
}

ContainingCounts containing_counts_closed_form(std::size_t n, IndexSet x, IndexSet y) {
    return {popcount(x & ~y) * popcount(y & ~x), popcount(x & y) * (n - popcount(x | y))};
}

std::string index_set_to_string(IndexSet set) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < 32; ++i)
        if (set & (IndexSet{1} << i)) {
            out += (first ? "" : ",") + std::to_string(i);
            first = false;
        }
    return out + "}";
}

}  // namespace qlogic
