#include "rootposet/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace rootposet {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

RationalVector to_rational(const std::vector<int>& v) {
    return RationalVector(v.begin(), v.end());
}

std::optional<RationalVector> solve_linear(RationalMatrix a, RationalVector b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve_linear: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == Rational(0)) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        const Rational p = a[col][col];
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == Rational(0)) continue;
            const Rational f = a[row][col] / p;
            for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    RationalVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
    const std::size_t n = a.size();
    RationalMatrix result(n, RationalVector(n));
    for (std::size_t j = 0; j < n; ++j) {
        RationalVector e(n);
        e[j] = 1;
        auto col = solve_linear(a, e);
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) result[i][j] = (*col)[i];
    }
    return result;
}

std::size_t matrix_rank(RationalMatrix a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size();
    const std::size_t cols = a.front().size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == Rational(0)) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t row = rank + 1; row < rows; ++row) {
            if (a[row][col] == Rational(0)) continue;
            const Rational f = a[row][col] / a[rank][col];
            for (std::size_t k = col; k < cols; ++k) a[row][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rational bilinear(const RationalMatrix& b, const RationalVector& x, const RationalVector& y) {
    Rational s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == Rational(0)) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * b[i][j] * y[j];
    }
    return s;
}

RationalVector mat_vec(const RationalMatrix& m, const RationalVector& x) {
    RationalVector y(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) y[i] = dot(m[i], x);
    return y;
}

bool is_integral(const RationalVector& v) {
    for (const auto& r : v)
        if (r.denominator() != 1) return false;
    return true;
}

std::vector<int> to_integers(const RationalVector& v) {
    std::vector<int> out;
    out.reserve(v.size());
    for (const auto& r : v) {
        if (r.denominator() != 1) throw std::domain_error("to_integers: non-integral entry " + to_string(r));
        out.push_back(static_cast<int>(r.numerator()));
    }
    return out;
}

}  // namespace rootposet
