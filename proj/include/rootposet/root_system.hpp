#pragma once

// Finite irreducible reduced root systems A_n .. G_2.
//
// Simple roots are numbered along the usual chains: A_n, B_n, C_n have
// alpha_n at the end of the chain (alpha_n short in B_n, long in C_n), D_n
// attaches alpha_n to alpha_{n-2}. The exceptional types use the labelling
//
//     E6: 1-2-3-4-5, 6 attached to 3
//     E7: 1-2-3-4-5-6, 7 attached to 4
//     E8: 1-2-3-4-5-6-7, 8 attached to 5
//     F4: 1-2<=3-4 (alpha_1, alpha_2 short)
//     G2: alpha_1 short, alpha_2 long
//
// so that roots print as "[m_1 m_2 ... m_n]" in the familiar tables.
// The bilinear form is normalised by (theta, theta) = 2.

#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rootposet/linalg.hpp"

namespace rootposet {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

class RootSystemError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RootSystemId {
    Family family = Family::A;
    int rank = 1;

    /// "F4", "A3", ...
    std::string name() const;

    /// Parses "F4", "b3", "E8". Accepts only admissible combinations.
    static RootSystemId parse(std::string_view text);

    /// Throws RootSystemError naming the violated constraint.
    void validate() const;

    auto operator<=>(const RootSystemId&) const = default;
};

/// Coordinates of a vector of the root lattice in the basis of simple roots.
struct Root {
    std::vector<int> coeffs;

    Root() = default;
    explicit Root(std::vector<int> c) : coeffs(std::move(c)) {}
    static Root zero(std::size_t rank) { return Root(std::vector<int>(rank, 0)); }
    static Root simple(std::size_t rank, std::size_t i);

    std::size_t size() const { return coeffs.size(); }
    int operator[](std::size_t i) const { return coeffs[i]; }
    int& operator[](std::size_t i) { return coeffs[i]; }

    int height() const;
    bool is_zero() const;
    bool is_positive() const;  // nonzero, all coefficients >= 0
    bool is_negative() const;

    Root operator+(const Root& o) const;
    Root operator-(const Root& o) const;
    Root operator-() const;
    Root operator*(int k) const;

    auto operator<=>(const Root&) const = default;
};

/// "[1321]" when every coefficient is a single non-negative digit, otherwise "[1,-2,0]".
std::string to_string(const Root& r);

/// Parses either notation produced by to_string.
Root parse_root(std::string_view text, std::size_t rank);

struct RootHash {
    std::size_t operator()(const Root& r) const noexcept;
};

class RootSystem {
public:
    static RootSystem build(const RootSystemId& id);

    const RootSystemId& id() const { return id_; }
    std::string name() const { return id_.name(); }
    std::size_t rank() const { return rank_; }

    /// Sorted by height, then lexicographically.
    const std::vector<Root>& positive_roots() const { return positive_; }
    std::size_t num_positive() const { return positive_.size(); }

    // All of Delta is indexed: [0, N) are the positive roots in the order
    // above, N + i is the negative of positive root i.
    std::size_t num_roots() const { return 2 * positive_.size(); }
    const Root& root(std::size_t index) const { return all_[index]; }
    std::optional<std::size_t> index_of(const Root& r) const;
    std::optional<std::size_t> positive_index(const Root& r) const;
    bool is_root(const Root& r) const { return index_of(r).has_value(); }
    std::size_t negate(std::size_t index) const {
        return index < positive_.size() ? index + positive_.size() : index - positive_.size();
    }
    bool is_positive_index(std::size_t index) const { return index < positive_.size(); }
    /// Index of root(a) + root(b), or -1 when the sum is not a root.
    int sum_index(std::size_t a, std::size_t b) const { return sum_table_[a * num_roots() + b]; }
    std::size_t simple_index(std::size_t i) const { return simple_idx_[i]; }
    std::size_t theta_index() const { return positive_.size() - 1; }

    /// C[i][j] = <alpha_i, alpha_j^vee> = 2 (alpha_i, alpha_j) / (alpha_j, alpha_j).
    const IntMatrix& cartan_matrix() const { return cartan_; }
    /// Gram matrix of the simple roots, normalised so that (theta, theta) = 2.
    const RationalMatrix& bilinear_form() const { return form_; }
    Rational inner(const Root& x, const Root& y) const;
    Rational inner(const RationalVector& x, const RationalVector& y) const;
    Rational norm2(const Root& x) const { return inner(x, x); }
    /// <x, alpha_i^vee>, always an integer for x in the root lattice.
    int pair_coroot(const Root& x, std::size_t i) const;
    /// 2 / (alpha_i, alpha_i): the root coordinates of alpha_i^vee are this factor times alpha_i.
    const std::vector<int>& coroot_factors() const { return coroot_factor_; }

    bool simply_laced() const { return simply_laced_; }
    bool is_long(const Root& r) const { return norm2(r) == Rational(2); }
    bool is_long_simple(std::size_t i) const { return form_[i][i] == Rational(2); }

    const Root& theta() const { return positive_.back(); }
    const Root& theta_short() const { return theta_short_; }
    /// theta = sum c_i alpha_i.
    const std::vector<int>& highest_coeffs() const { return theta().coeffs; }
    int coxeter_number() const { return coxeter_; }
    int dual_coxeter_number() const { return dual_coxeter_; }
    const std::vector<int>& exponents() const { return exponents_; }

    /// Affine Cartan matrix on indices 0..n, alpha_0 = delta - theta.
    const IntMatrix& extended_cartan() const { return extended_cartan_; }
    /// (alpha_i, alpha_j) on indices 0..n.
    Rational extended_inner(std::size_t i, std::size_t j) const;
    /// Edge of the extended Dynkin diagram: i != j and (alpha_i, alpha_j) != 0.
    bool extended_adjacent(std::size_t i, std::size_t j) const;
    /// Adjacency of the finite Dynkin diagram.
    bool dynkin_adjacent(std::size_t i, std::size_t j) const;

    /// s_i(x) = x - <x, alpha_i^vee> alpha_i, 0-based i.
    Root reflect(const Root& x, std::size_t i) const;

    /// beta <= gamma iff gamma - beta is a non-negative integral combination.
    bool leq(const Root& beta, const Root& gamma) const;

    /// Coordinate-wise floor of gamma / 2.
    Root half_floor(const Root& gamma) const;

    /// Sum of the positive roots halved, in root coordinates.
    RationalVector rho() const;

private:
    RootSystem() = default;

    RootSystemId id_;
    std::size_t rank_ = 0;
    RationalMatrix form_;
    IntMatrix cartan_;
    IntMatrix extended_cartan_;
    std::vector<int> coroot_factor_;
    std::vector<Root> positive_;
    std::vector<Root> all_;
    std::unordered_map<Root, std::size_t, RootHash> lookup_;
    std::vector<int> sum_table_;
    std::vector<std::size_t> simple_idx_;
    Root theta_short_;
    int coxeter_ = 0;
    int dual_coxeter_ = 0;
    std::vector<int> exponents_;
    bool simply_laced_ = true;
};

/// All admissible systems of rank <= max_rank, in the order A, B, C, D, E, F, G.
std::vector<RootSystemId> systems_up_to(int max_rank);

}  // namespace rootposet
