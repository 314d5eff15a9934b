#pragma once

// Generic finite posets, Hasse diagrams and covering polynomials.

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace rootposet {

/// Integer polynomial in q; coeffs[k] is the coefficient of q^k, trailing zeros trimmed.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    /// Histogram polynomial: sum over values v of q^v.
    static IntPolynomial from_exponents(const std::vector<std::size_t>& exponents);
    /// (a + b q)^n
    static IntPolynomial binomial_power(std::int64_t a, std::int64_t b, unsigned n);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t eval(std::int64_t q) const;
    std::int64_t derivative_at_1() const;
    /// a_j == a_{n-j} for 0 <= j <= n, with coefficients beyond the degree read as 0.
    bool is_palindromic(std::size_t n) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    bool operator==(const IntPolynomial&) const = default;

    /// "4+7q+12q²+q³"; "0" for the zero polynomial.
    std::string to_string() const;
    /// Same as to_string with "q^2" instead of superscripts.
    std::string to_ascii() const;

private:
    void trim();
    std::vector<std::int64_t> coeffs_;
};

/// A finite poset on {0, ..., n-1}, stored extensionally.
class FinitePoset {
public:
    FinitePoset() = default;

    /// Builds from an arbitrary relation; checks reflexivity, antisymmetry and
    /// transitivity and throws std::invalid_argument when one fails.
    static FinitePoset from_relation(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq);

    std::size_t size() const { return down_.size(); }
    bool leq(std::size_t x, std::size_t y) const { return down_[y][x]; }
    bool less(std::size_t x, std::size_t y) const { return x != y && down_[y][x]; }
    /// Elements <= x.
    const boost::dynamic_bitset<>& down_set(std::size_t x) const { return down_[x]; }
    const boost::dynamic_bitset<>& up_set(std::size_t x) const { return up_[x]; }

private:
    std::vector<boost::dynamic_bitset<>> down_;
    std::vector<boost::dynamic_bitset<>> up_;
};

struct HasseDiagram {
    std::size_t vertex_count = 0;
    /// (upper, lower) with upper covering lower; sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

HasseDiagram hasse(const FinitePoset& p);

/// kappa(x) = number of elements covered by x, for each x.
std::vector<std::size_t> covered_counts(const HasseDiagram& h);

IntPolynomial covering_polynomial(const FinitePoset& p);
IntPolynomial covering_polynomial(const HasseDiagram& h);

/// DOT digraph, one node per vertex and every edge "upper -> lower" with
/// attribute type="<edge_types[k]>". Byte-deterministic for fixed input.
std::string export_dot(const HasseDiagram& h, const std::vector<std::string>& labels,
                       const std::vector<std::string>& edge_types, const std::string& graph_name);

/// Label "α_i" used for edge types in DOT output.
std::string type_label(std::size_t i);

}  // namespace rootposet
