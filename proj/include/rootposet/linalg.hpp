#pragma once

// Exact rational vectors and matrices. Everything in this library that
// touches the inner product goes through these types; nothing is computed
// in floating point.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace rootposet {

// Compare against Rational(k), never a bare integer: boost::rational's mixed
// equality operators recurse under the C++20 rewritten-comparison rules.
using Rational = boost::rational<std::int64_t>;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;
using IntMatrix = std::vector<std::vector<int>>;

std::string to_string(const Rational& r);

RationalVector to_rational(const std::vector<int>& v);

/// Exact Gaussian elimination. Returns std::nullopt when `a` is singular.
std::optional<RationalVector> solve_linear(RationalMatrix a, RationalVector b);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

std::size_t matrix_rank(RationalMatrix a);

Rational dot(const RationalVector& x, const RationalVector& y);

/// x^T B y for a symmetric B given in the same basis as x and y.
Rational bilinear(const RationalMatrix& b, const RationalVector& x, const RationalVector& y);

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& x);

/// True when every entry has denominator 1.
bool is_integral(const RationalVector& v);

std::vector<int> to_integers(const RationalVector& v);

}  // namespace rootposet
