#pragma once

// Upper ideals of (Delta^+, <=), their minimal elements in the affine Weyl
// group, and the typing of the edges of the Hasse diagram of AD.

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rootposet/affine_weyl.hpp"
#include "rootposet/delta_poset.hpp"
#include "rootposet/poset.hpp"

namespace rootposet {

/// Subset of the positive roots, one bit per positive-root index.
class RootSet {
public:
    RootSet() = default;
    explicit RootSet(std::size_t universe) : bits_((universe + 63) / 64, 0), universe_(universe) {}

    std::size_t universe() const { return universe_; }
    bool test(std::size_t i) const { return (bits_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) { bits_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { bits_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const;
    bool none() const;
    bool is_subset_of(const RootSet& o) const;
    bool intersects(const RootSet& o) const;
    std::vector<std::size_t> indices() const;

    RootSet& operator|=(const RootSet& o);
    RootSet& operator&=(const RootSet& o);
    friend RootSet operator|(RootSet a, const RootSet& b) { return a |= b; }
    friend RootSet operator&(RootSet a, const RootSet& b) { return a &= b; }
    bool operator==(const RootSet&) const = default;

    std::size_t hash() const noexcept;

private:
    std::vector<std::uint64_t> bits_;
    std::size_t universe_ = 0;
};

struct RootSetHash {
    std::size_t operator()(const RootSet& s) const noexcept { return s.hash(); }
};

/// An upper ideal, identified by its antichain of minimal roots.
struct UpperIdeal {
    std::vector<std::size_t> generators;  // positive-root indices, ascending
    RootSet roots;

    std::size_t size() const { return roots.count(); }
    bool contains(std::size_t root) const { return roots.test(root); }
};

/// Upward closure of a set of positive roots.
UpperIdeal upper_ideal_generated_by(const RootSystem& rs, const std::vector<std::size_t>& roots);

/// Minimal elements of a set of positive roots that is assumed upward closed.
std::vector<std::size_t> minimal_roots(const RootSystem& rs, const RootSet& roots);

bool is_upper_ideal(const RootSystem& rs, const RootSet& roots);

class AdIdealPoset {
public:
    /// Every upper ideal, by depth-first search over antichains, sorted by
    /// (size, generators). Index 0 is the empty ideal.
    static AdIdealPoset enumerate(const RootSystem& rs);

    const RootSystem& root_system() const { return *rs_; }
    const std::vector<UpperIdeal>& ideals() const { return ideals_; }
    std::size_t size() const { return ideals_.size(); }
    const UpperIdeal& operator[](std::size_t k) const { return ideals_[k]; }
    std::optional<std::size_t> find(const RootSet& roots) const;

    /// Index of E \ {gamma} for a generator gamma of E.
    std::size_t remove_generator(std::size_t ideal, std::size_t gamma) const;

    /// Sum over E of the number of generators of E.
    long edge_count() const;

    /// Edges (E, E \ {gamma}) ordered by (E, gamma); E covers the smaller ideal.
    HasseDiagram hasse() const;

    /// N(q) = sum over E of q^{#generators(E)}.
    IntPolynomial narayana_polynomial() const;

private:
    const RootSystem* rs_ = nullptr;
    std::vector<UpperIdeal> ideals_;
    std::unordered_map<RootSet, std::size_t, RootSetHash> lookup_;
};

/// I^1 = I, I^{k+1} = (I^k + I) intersected with Delta^+; stops before the empty set.
std::vector<RootSet> ideal_powers(const RootSystem& rs, const RootSet& ideal);

/// For each positive root, the largest k with the root in I^k (0 when outside I).
std::vector<int> ideal_depths(const RootSystem& rs, const RootSet& ideal);

struct MinimalElement {
    AffineWeylElement element;
    AffineWeylElement inverse;
    /// w = s_{word[0]} s_{word[1]} ... ; reduced.
    ReducedWord word;
    UpperIdeal ideal;
};

/// Builds w_E by peeling {k delta - gamma : gamma in I^k} and, when `verify`
/// is set, checks the defining conditions by direct evaluation. A failure of
/// either step throws ConsistencyError.
MinimalElement minimal_element(const AffineWeylGroup& group, const UpperIdeal& ideal, bool verify = true);

/// The failed condition, or nullopt when w satisfies all of them.
std::optional<std::string> check_minimal_element(const AffineWeylGroup& group, const MinimalElement& me);

/// Type of the edge removing gamma from E: the index of w_E(gamma - delta) in the affine simple roots.
std::size_t edge_type(const AffineWeylGroup& group, const MinimalElement& me, std::size_t gamma);

/// Types of the edges terminating in E, one per generator (same order).
std::vector<std::size_t> terminating_edge_types(const AffineWeylGroup& group, const MinimalElement& me);

struct TypedAdDiagram {
    std::vector<TypedEdge> edges;  // upper/lower are ideal indices
    TypeCounts per_type;
};

TypedAdDiagram ad_typed_edges(const AffineWeylGroup& group, const AdIdealPoset& poset);

/// Point of the coroot lattice solving (alpha_i, z) = k_i, in simple-coroot coordinates.
struct ZPoint {
    std::vector<int> coords;
    auto operator<=>(const ZPoint&) const = default;
};

ZPoint z_point(const AffineWeylGroup& group, const MinimalElement& me);

/// i >= 1: (alpha_i, z) = -1; i = 0: (theta, z) = 2.
std::vector<std::size_t> facets_containing(const RootSystem& rs, const ZPoint& z);

bool in_dmin(const RootSystem& rs, const ZPoint& z);

/// All points of the coroot lattice in D_min, enumerated directly.
std::vector<ZPoint> dmin_lattice_points(const RootSystem& rs);

/// Vertices of w^{-1} * A, in the order of the fundamental alcove's vertices.
std::vector<RationalVector> alcove_of(const AffineWeylGroup& group, const MinimalElement& me);

/// Types of the walls of w^{-1} * A separating it from the origin, sorted.
/// Walls are recovered from the alcove's vertices; a separating wall that is
/// not of the form H_{gamma,1} throws ConsistencyError.
std::vector<std::size_t> alcove_wall_types(const AffineWeylGroup& group, const MinimalElement& me);

/// {i : w^{-1}(alpha_i) < 0}, sorted.
std::vector<std::size_t> descent_types(const AffineWeylGroup& group, const MinimalElement& me);

/// Whether every vertex of w^{-1} * A lies in the closed simplex 2A.
bool alcove_in_2A(const AffineWeylGroup& group, const MinimalElement& me);

}  // namespace rootposet
