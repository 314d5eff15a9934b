#pragma once

// Weight systems of simple highest-weight modules and their weight diagrams.

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "rootposet/delta_poset.hpp"
#include "rootposet/root_system.hpp"

namespace rootposet {

/// Coordinates in the basis of fundamental weights.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight fundamental(std::size_t rank, std::size_t i);  // 0-based i

    std::size_t size() const { return coords.size(); }
    int operator[](std::size_t i) const { return coords[i]; }
    bool is_dominant() const;
    bool is_zero() const;

    auto operator<=>(const Weight&) const = default;
};

std::string to_string(const Weight& w);

/// The weight of a root-lattice vector: labels_j = <x, alpha_j^vee>.
Weight root_to_weight(const RootSystem& rs, const Root& x);

/// mu - alpha_i, 0-based i.
Weight subtract_simple(const RootSystem& rs, const Weight& mu, std::size_t i);

/// The dominant weight in the Weyl orbit of mu.
Weight dominant_representative(const RootSystem& rs, Weight mu);

class WeightSystem {
public:
    /// Freudenthal's recursion over the dominant weights below lambda, then
    /// Weyl orbits. Throws UnsupportedInput when lambda is not dominant.
    static WeightSystem build(const RootSystem& rs, const Weight& lambda);

    const RootSystem& root_system() const { return *rs_; }
    const Weight& highest() const { return highest_; }
    /// Every weight with its multiplicity, in ascending lexicographic order.
    const std::map<Weight, long>& entries() const { return entries_; }
    long multiplicity(const Weight& mu) const;
    long dimension() const;
    bool multiplicity_free() const;

private:
    const RootSystem* rs_ = nullptr;
    Weight highest_;
    std::map<Weight, long> entries_;
};

/// Weyl's dimension formula.
long weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// An edge (nu, mu = nu - alpha_type) of the weight diagram. Endpoints are
/// positions in WeightSystem::entries().
struct WeightEdge {
    std::size_t upper = 0;
    std::size_t lower = 0;
    std::size_t type = 0;  // 1..n
    long multiplicity = 0;  // min(m(nu), m(mu))
};

std::vector<WeightEdge> weight_diagram_edges(const WeightSystem& ws);

/// Multiplicity-weighted edge counts per type, indexed 0..n (index 0 is 0).
TypeCounts weighted_type_counts(const std::vector<WeightEdge>& edges, std::size_t rank);

/// Decomposes every alpha_i-string into irreducible sl_2 strings and counts
/// their edges. i is 1..n.
long sl2_restriction_count(const WeightSystem& ws, std::size_t i);

struct CorpusEntry {
    std::string label;
    Weight lambda;
};

/// The modules checked for length dependence: the adjoint module, the
/// module of theta_s, the spin module of B_n, varpi_1 of E6, and every
/// fundamental weight when the rank is at most 4.
std::vector<CorpusEntry> weight_corpus(const RootSystem& rs);

}  // namespace rootposet
