#pragma once

// The poset (Delta^+, <=), its typed Hasse diagram and the short-root subdiagram.

#include <string>
#include <vector>

#include "rootposet/poset.hpp"
#include "rootposet/root_system.hpp"

namespace rootposet {

/// An edge of a typed Hasse diagram. Types use affine numbering throughout the
/// library: 0 is alpha_0, i >= 1 is alpha_i.
struct TypedEdge {
    std::size_t upper = 0;
    std::size_t lower = 0;
    std::size_t type = 0;
    auto operator<=>(const TypedEdge&) const = default;
};

/// Per-type edge counts, indexed 0..n.
using TypeCounts = std::vector<long>;

TypeCounts count_types(const std::vector<TypedEdge>& edges, std::size_t rank);

/// Pairs (nu + alpha_i, nu) of positive roots, as positive-root indices.
std::vector<TypedEdge> typed_edges_delta_plus(const RootSystem& rs);

/// (Delta^+, <=) as a generic poset on the positive-root indices.
FinitePoset delta_plus_poset(const RootSystem& rs);

TypeCounts edge_type_counts(const RootSystem& rs);

/// h-2 in simply-laced types; h*-2 for long alpha_i, and for short alpha_i
/// h-2 (B, C, F) or h-3 (G). Index 0 is 0.
TypeCounts expected_delta_edge_counts(const RootSystem& rs);

/// Throws VerificationFailure naming the first type whose count is off.
void verify_edge_type_counts(const RootSystem& rs);

/// Coxeter number of one irreducible component of the subsystem of roots of
/// the given length.
int subsystem_coxeter_number(const RootSystem& rs, bool long_roots);

struct ShortRootDiagram {
    std::vector<std::size_t> vertices;  // positive-root indices of the short roots
    std::vector<TypedEdge> edges;       // indices into `vertices`
    TypeCounts per_type;
    int h_short = 0;  // h(Delta_s)
    int h_long = 0;   // h(Delta_l)
};

/// Erase the long roots (and their edges) from H(Delta^+). Throws
/// UnsupportedInput for simply-laced systems.
ShortRootDiagram short_root_edges(const RootSystem& rs);

/// short alpha: h(Delta_s) - 2; long alpha: h*(Delta) - h(Delta_l).
TypeCounts expected_short_root_counts(const RootSystem& rs, const ShortRootDiagram& d);

/// Whether the deletion construction equals the Hasse diagram of the induced subposet.
bool short_diagram_matches_induced_subposet(const RootSystem& rs, const ShortRootDiagram& d);

HasseDiagram delta_plus_hasse(const RootSystem& rs, std::vector<std::string>* edge_types = nullptr);

std::string export_delta_dot(const RootSystem& rs);

}  // namespace rootposet
