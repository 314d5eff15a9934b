#pragma once

// Abelian ideals, commutative roots and their classes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rootposet/ad_ideals.hpp"

namespace rootposet {

/// (I + I) has no root.
bool is_abelian(const RootSystem& rs, const RootSet& ideal);

/// Indices (into the AD poset) of the Abelian ideals, ascending.
std::vector<std::size_t> enumerate_abelian(const AdIdealPoset& poset);

/// The Hasse diagram of a down-closed family of ideals with edge types
/// inherited from AD. Edge endpoints are positions in `ideals`.
struct TypedSubdiagram {
    std::vector<std::size_t> ideals;
    std::vector<TypedEdge> edges;
    TypeCounts per_type;
    /// Minimal elements, parallel to `ideals`.
    std::vector<MinimalElement> minimal;

    HasseDiagram hasse() const;
    IntPolynomial covering_polynomial() const;
};

TypedSubdiagram typed_subdiagram(const AffineWeylGroup& group, const AdIdealPoset& poset,
                                 std::vector<std::size_t> ideals);

TypedSubdiagram abelian_diagram(const AffineWeylGroup& group, const AdIdealPoset& poset);

/// Abelian ideals consisting of long roots only. Throws UnsupportedInput for simply-laced systems.
TypedSubdiagram long_abelian_diagram(const AffineWeylGroup& group, const AdIdealPoset& poset);

struct CommutativeRoot {
    std::size_t root = 0;     // positive-root index
    std::size_t klass = 0;    // affine simple root index
    UpperIdeal principal;     // the upper ideal generated by the root
};

/// gamma is commutative when the upper ideal it generates is Abelian. The
/// class is the type of the edge removing gamma from that ideal.
std::vector<CommutativeRoot> commutative_roots(const AffineWeylGroup& group);

/// n(n+1)/2, plus n1 n2 n3 when the Dynkin diagram has a branch node with tails n1, n2, n3.
long commutative_count_formula(const RootSystem& rs);

/// Maximal elements of the non-commutative positive roots.
std::vector<std::size_t> maximal_noncommutative(const RootSystem& rs, const std::vector<CommutativeRoot>& com);

/// Whether the hyperplane (gamma, x) = 1 meets the open simplex 2A, by
/// evaluating gamma at the vertices of 2A.
bool meets_open_2A(const AffineWeylGroup& group, const Root& gamma);

/// Recomputes the class of every generator of every Abelian ideal and
/// compares it with the class from the principal ideal. Returns the first
/// disagreement.
std::optional<std::string> check_class_independence(const AffineWeylGroup& group, const AdIdealPoset& poset,
                                                    const TypedSubdiagram& ab, const std::vector<CommutativeRoot>& com);

/// Commutative roots adjacent in H(Delta^+) have classes adjacent in the extended Dynkin diagram.
std::optional<std::string> check_adjacent_classes(const RootSystem& rs, const std::vector<CommutativeRoot>& com);

/// Commutative roots that are maximal among the roots orthogonal to theta have class alpha_0.
std::optional<std::string> check_theta_orthogonal_class(const RootSystem& rs, const std::vector<CommutativeRoot>& com);

/// Generators of one Abelian ideal have orthogonal classes.
std::optional<std::string> check_cogenerator_classes(const RootSystem& rs, const AdIdealPoset& poset,
                                                     const TypedSubdiagram& ab,
                                                     const std::vector<CommutativeRoot>& com);

/// Generator (a, b) stands for the root eps_a - eps_b of A_n, 1 <= a < b <= n+1.
using GeneratorPair = std::pair<int, int>;

std::vector<GeneratorPair> type_a_pairs(const RootSystem& rs, const UpperIdeal& ideal);

/// Suter's automorphism of the undirected Hasse graph of Ab(sl_{n+1}).
/// Throws UnsupportedInput outside type A.
UpperIdeal suter_tau(const RootSystem& rs, const UpperIdeal& ideal);

/// Maximum number of pairwise orthogonal simple roots.
int max_orthogonal_simple_roots(const RootSystem& rs);

}  // namespace rootposet
