#pragma once

// The affine Weyl group of an untwisted affine root system, acting on affine
// real roots mu + k delta and, by affine maps, on V.

#include <functional>
#include <stdexcept>
#include <vector>

#include "rootposet/root_system.hpp"

namespace rootposet {

/// mu + level * delta with mu in Delta.
struct AffineRoot {
    Root finite;
    int level = 0;

    bool is_positive() const { return level > 0 || (level == 0 && finite.is_positive()); }
    AffineRoot operator-() const { return {-finite, -level}; }
    auto operator<=>(const AffineRoot&) const = default;
};

/// alpha_i for i >= 1, and alpha_0 = delta - theta.
AffineRoot affine_simple_root(const RootSystem& rs, std::size_t i);

/// Index i with r == alpha_i, or -1.
int affine_simple_index(const RootSystem& rs, const AffineRoot& r);

std::string to_string(const AffineRoot& r);

using ReducedWord = std::vector<int>;

/// w = t_lambda u: u is the finite part, as an integer matrix on root
/// coordinates; lambda lies in the coroot lattice and is stored in the basis
/// of simple coroots. Then w(mu + k delta) = u(mu) + (k - <u(mu), lambda>) delta.
class AffineWeylElement {
public:
    AffineWeylElement() = default;
    AffineWeylElement(IntMatrix finite, std::vector<int> translation)
        : finite_(std::move(finite)), translation_(std::move(translation)) {}

    const IntMatrix& finite_part() const { return finite_; }
    const std::vector<int>& translation() const { return translation_; }

    bool operator==(const AffineWeylElement&) const = default;

private:
    IntMatrix finite_;
    std::vector<int> translation_;
};

class NotAnInversionSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class AffineWeylGroup {
public:
    explicit AffineWeylGroup(const RootSystem& rs);

    const RootSystem& root_system() const { return *rs_; }
    std::size_t rank() const { return rs_->rank(); }

    AffineWeylElement identity() const;
    /// s_i, 0 <= i <= n.
    AffineWeylElement generator(std::size_t i) const;
    AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) const;
    AffineWeylElement inverse(const AffineWeylElement& w) const;
    /// s_i * w, cheaper than compose.
    AffineWeylElement left_multiply(std::size_t i, const AffineWeylElement& w) const;
    /// s_{w_1} s_{w_2} ... s_{w_m}.
    AffineWeylElement from_word(const ReducedWord& word) const;

    AffineRoot act(const AffineWeylElement& w, const AffineRoot& beta) const;
    /// Direct formula for s_i, independent of the element representation.
    AffineRoot simple_reflect(std::size_t i, const AffineRoot& beta) const;

    /// N(w) = {beta > 0 : w(beta) < 0}, sorted.
    std::vector<AffineRoot> inversion_set(const AffineWeylElement& w) const;
    long length(const AffineWeylElement& w) const;

    /// Affine action on V in root coordinates: w * x = u(x) + lambda.
    RationalVector act_on_V(const AffineWeylElement& w, const RationalVector& x) const;
    /// Value at x of the affine function of beta, x -> (mu, x) + k.
    Rational affine_form(const AffineRoot& beta, const RationalVector& x) const;

    /// Peels simple roots off a biconvex set. Returns the word a reduced
    /// expression w = s_{a_m} ... s_{a_1} of the element with N(w) == set.
    /// Throws NotAnInversionSet when peeling stalls.
    ReducedWord word_from_inversion_set(const std::vector<AffineRoot>& set) const;

    /// Same as above for a set given by its size and a membership predicate on
    /// affine roots (finite root index into Delta, level).
    ReducedWord peel(std::size_t size, const std::function<bool(std::size_t, int)>& contains) const;

    /// Vertices of the fundamental alcove in root coordinates: 0 and
    /// varpi_i^vee / c_i, i = 1..n. Vertex j is opposite the wall of type j.
    const std::vector<RationalVector>& fundamental_alcove_vertices() const { return alcove_; }

    /// theta^vee in simple-coroot coordinates.
    const std::vector<int>& theta_coroot() const { return theta_coroot_; }

private:
    std::vector<int> coroot_to_root(const std::vector<int>& lambda) const;
    std::vector<int> root_to_coroot(const std::vector<int>& x) const;
    std::vector<int> apply(const IntMatrix& m, const std::vector<int>& x) const;
    int pair_with_coroot_vector(const std::vector<int>& x, const std::vector<int>& lambda) const;

    const RootSystem* rs_;
    std::vector<int> theta_coroot_;
    std::vector<int> theta_pairing_;  // (alpha_i, theta) as integers (theta long)
    std::vector<RationalVector> alcove_;
};

}  // namespace rootposet
