#pragma once

// Expected values: closed forms for the classical series and the tabulated
// data for the exceptional types (read from data/fixtures.json, embedded at
// build time).

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rootposet/poset.hpp"
#include "rootposet/root_system.hpp"

namespace rootposet {

const nlohmann::json& fixtures();

std::int64_t binomial(std::int64_t n, std::int64_t k);

/// prod_i (h + e_i + 1) / (e_i + 1).
std::int64_t ad_product_formula(const RootSystem& rs);

/// Catalan-type closed forms for A-D, the table for E, F, G.
std::int64_t ad_table_count(const RootSystem& rs);

IntPolynomial delta_covering_table(const RootSystem& rs);
IntPolynomial ab_covering_table(const RootSystem& rs);

/// Tabulated number of commutative roots, where one is given.
std::optional<long> commutative_count_table(const RootSystem& rs);

struct ClassEntry {
    Root root;
    std::size_t klass = 0;
};

/// Class lists for E6, E7, E8 and F4; nullopt otherwise.
std::optional<std::vector<ClassEntry>> tabulated_classes(const RootSystem& rs);

/// Classes of the commutative roots of A_n, B_n, C_n, D_n written in the
/// eps-coordinates of the standard realisation: alpha_i = eps_i - eps_{i+1},
/// and alpha_n = eps_n (B), 2 eps_n (C), eps_{n-1} + eps_n (D).
std::vector<ClassEntry> classical_classes(const RootSystem& rs);

/// sum_{x=c}^{a-b} C(x, c) C(a-x, b) == C(a+1, b+c+1).
bool binomial_convolution_holds(int a, int b, int c);

}  // namespace rootposet
