#include <doctest.h>

#include "rootposet/poset.hpp"

using namespace rootposet;

namespace {

FinitePoset boolean_lattice(unsigned n) {
    return FinitePoset::from_relation(std::size_t{1} << n, [](std::size_t x, std::size_t y) { return (x & ~y) == 0; });
}

}  // namespace

TEST_CASE("polynomial arithmetic and printing") {
    const IntPolynomial p({1, 2, 1});
    CHECK(p == IntPolynomial::binomial_power(1, 1, 2));
    CHECK(p.eval(1) == 4);
    CHECK(p.derivative_at_1() == 4);
    CHECK(p.degree() == 2);
    CHECK(p.is_palindromic(2));
    CHECK((p * p).coeffs() == std::vector<std::int64_t>{1, 4, 6, 4, 1});
    CHECK(IntPolynomial({4, 7, 12, 1}).to_string() == "4+7q+12q²+q³");
    CHECK(IntPolynomial({1, 0, -1}).to_string() == "1-q²");
    CHECK(IntPolynomial::from_exponents({0, 1, 1}).coeffs() == std::vector<std::int64_t>{1, 2});
    CHECK(IntPolynomial().is_zero());
}

TEST_CASE("Boolean lattice has covering polynomial (1+q)^n") {
    for (unsigned n = 0; n <= 6; ++n) {
        const auto b = boolean_lattice(n);
        CHECK(covering_polynomial(b) == IntPolynomial::binomial_power(1, 1, n));
        CHECK(hasse(b).edges.size() == n * (std::size_t{1} << n) / 2);
    }
}

TEST_CASE("chain and antichain") {
    const auto chain = FinitePoset::from_relation(5, [](std::size_t x, std::size_t y) { return x <= y; });
    const auto h = hasse(chain);
    CHECK(h.edges.size() == 4);
    for (const auto& [u, l] : h.edges) CHECK(u == l + 1);
    CHECK(covering_polynomial(chain).coeffs() == std::vector<std::int64_t>{1, 4});
    const auto anti = FinitePoset::from_relation(3, [](std::size_t x, std::size_t y) { return x == y; });
    CHECK(hasse(anti).edges.empty());
    CHECK(covering_polynomial(anti).coeffs() == std::vector<std::int64_t>{3});
    CHECK(covered_counts(h) == std::vector<std::size_t>{0, 1, 1, 1, 1});
}

TEST_CASE("DOT export is deterministic and typed") {
    HasseDiagram h{3, {{1, 0}, {2, 1}}};
    const auto dot = export_dot(h, {"a", "b", "c"}, {type_label(1), type_label(0)}, "G");
    CHECK(dot == export_dot(h, {"a", "b", "c"}, {type_label(1), type_label(0)}, "G"));
    CHECK(dot.find("digraph \"G\"") == 0);
    CHECK(dot.find("n1 -> n0") != std::string::npos);
    CHECK(dot.find("α_0") != std::string::npos);
}
